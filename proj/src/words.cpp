#include "pwords/words.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <limits>
#include <ostream>

namespace pwords {

namespace {

using Span = std::span<const Symbol>;
using Clock = std::chrono::steady_clock;

void check_dimension(int d) {
    if (d < 1 || d > kMaxDimension)
        throw InvalidAlphabetError("dimension must be in [1, " +
                                   std::to_string(kMaxDimension) + "], got " + std::to_string(d));
}

void check_symbols(const Word &w, int d) {
    check_dimension(d);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > d)
            throw InvalidAlphabetError("symbol " + std::to_string(int(w[i])) + " at position " +
                                       std::to_string(i + 1) + " exceeds alphabet bound " +
                                       std::to_string(d));
}

// Segment bounds of a span split on one letter: k separators -> k+1 segments.
struct SegmentList {
    std::array<std::pair<std::uint16_t, std::uint16_t>, kMaxTotal + 1> bounds;
    int count = 0;
};

void split_on(Span w, Symbol sep, SegmentList &out) {
    out.count = 0;
    std::uint16_t start = 0;
    for (std::uint16_t i = 0; i < w.size(); ++i) {
        if (w[i] == sep) {
            out.bounds[out.count++] = {start, i};
            start = i + 1;
        }
    }
    out.bounds[out.count++] = {start, static_cast<std::uint16_t>(w.size())};
}

// Entrywise containment of the partitions encoded by b and c, splitting on
// `level`. Segment counts compare first; slices then compare recursively.
bool contains_at(Span b, Span c, int level, int d) {
    if (level > d)
        return true; // both empty at this depth
    SegmentList sb, sc;
    split_on(b, static_cast<Symbol>(level), sb);
    split_on(c, static_cast<Symbol>(level), sc);
    if (sb.count < sc.count)
        return false;
    for (int i = 0; i < sc.count; ++i) {
        auto [bs, be] = sb.bounds[i];
        auto [cs, ce] = sc.bounds[i];
        if (!contains_at(b.subspan(bs, be - bs), c.subspan(cs, ce - cs), level + 1, d))
            return false;
    }
    return true;
}

bool valid_at(Span w, int level, int d) {
    if (level > d)
        return w.empty();
    SegmentList segs;
    split_on(w, static_cast<Symbol>(level), segs);
    for (int i = 0; i < segs.count; ++i) {
        auto [s, e] = segs.bounds[i];
        if (!valid_at(w.subspan(s, e - s), level + 1, d))
            return false;
    }
    for (int i = 0; i + 1 < segs.count; ++i) {
        auto [as, ae] = segs.bounds[i];
        auto [bs, be] = segs.bounds[i + 1];
        if (!contains_at(w.subspan(as, ae - as), w.subspan(bs, be - bs), level + 1, d))
            return false;
    }
    return true;
}

// d = 1 fast path: run lengths of 1s between 0s must be non-increasing.
bool valid_blocks_1d(Span w) {
    int prev = std::numeric_limits<int>::max();
    int cur = 0;
    for (Symbol s : w) {
        if (s == 1) {
            ++cur;
        } else {
            if (cur > prev)
                return false;
            prev = cur;
            cur = 0;
        }
    }
    return cur <= prev;
}

// Unconditional decode: any word yields positive cells summing to len+1.
// Level l assigns axis d-1-l; the last level yields the part value.
void decode_cells(Span w, int level, int d, std::vector<int> &coord,
                  std::map<std::vector<int>, int> &cells) {
    if (level == d) {
        cells.emplace(coord, static_cast<int>(w.size()) + 1);
        return;
    }
    SegmentList segs;
    split_on(w, static_cast<Symbol>(level), segs);
    for (int t = 0; t < segs.count; ++t) {
        auto [s, e] = segs.bounds[t];
        coord[d - 1 - level] = t + 1;
        decode_cells(w.subspan(s, e - s), level + 1, d, coord, cells);
    }
}

std::map<std::vector<int>, int> decode_word(Span w, int d) {
    std::map<std::vector<int>, int> cells;
    std::vector<int> coord(d, 0);
    decode_cells(w, 0, d, coord, cells);
    return cells;
}

// Allocation-free decode for the structural validator: any word of length L
// yields at most L+1 cells. Coordinates pack into 7 bits per axis, so a
// uint64 key holds all of them and an axis step is just +/- (1 << 7a).
struct RawCell {
    std::uint64_t key;
    int value;
};

int decode_raw(Span w, int level, int d, std::uint64_t key, RawCell *out, int pos) {
    if (level == d) {
        out[pos].key = key;
        out[pos].value = static_cast<int>(w.size()) + 1;
        return pos + 1;
    }
    SegmentList segs;
    split_on(w, static_cast<Symbol>(level), segs);
    const int shift = 7 * (d - 1 - level);
    for (int t = 0; t < segs.count; ++t) {
        auto [s, e] = segs.bounds[t];
        pos = decode_raw(w.subspan(s, e - s), level + 1, d,
                         key + (static_cast<std::uint64_t>(t + 1) << shift), out, pos);
    }
    return pos;
}

bool raw_cells_well_formed(const RawCell *cells, int count, int d) {
    auto value_at = [&](std::uint64_t key) {
        for (int i = 0; i < count; ++i)
            if (cells[i].key == key)
                return cells[i].value;
        return 0; // absent
    };
    for (int i = 0; i < count; ++i) {
        std::uint64_t step = 1;
        for (int a = 0; a < d; ++a, step <<= 7) {
            if (value_at(cells[i].key + step) > cells[i].value)
                return false; // grows along an axis
            if (((cells[i].key >> (7 * a)) & 0x7f) > 1 && value_at(cells[i].key - step) == 0)
                return false; // support not downward closed
        }
    }
    return true;
}

using CellView = std::pair<const std::vector<int> *, int>;

void encode_group(std::span<const CellView> cells, int level, int d, Word &out) {
    if (level == d) {
        // all coordinates fixed: exactly one cell remains
        out.insert(out.end(), static_cast<std::size_t>(cells.front().second - 1),
                   static_cast<Symbol>(d));
        return;
    }
    const int axis = d - 1 - level;
    int max_t = 0;
    for (const auto &c : cells)
        max_t = std::max(max_t, (*c.first)[axis]);
    std::vector<CellView> group;
    for (int t = 1; t <= max_t; ++t) {
        group.clear();
        for (const auto &c : cells)
            if ((*c.first)[axis] == t)
                group.push_back(c);
        if (t > 1)
            out.push_back(static_cast<Symbol>(level));
        encode_group(group, level + 1, d, out);
    }
}

// Incremental validity for enumeration: appending 0 always keeps a word
// valid; appending c >= 1 only changes the final 0-segment, so it suffices
// to recheck that segment and its dominance by the previous one.
bool can_append(const Word &w, Symbol c, int d, Word &scratch) {
    if (c == 0)
        return true;
    std::size_t tail_start = 0;
    std::size_t prev_start = 0;
    bool has_prev = false;
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] == 0) {
            tail_start = i + 1;
            has_prev = true;
            prev_start = 0;
            for (std::size_t j = i; j-- > 0;) {
                if (w[j] == 0) {
                    prev_start = j + 1;
                    break;
                }
            }
            break;
        }
    }
    scratch.assign(w.begin() + static_cast<std::ptrdiff_t>(tail_start), w.end());
    scratch.push_back(c);
    if (!valid_at(scratch, 1, d))
        return false;
    if (!has_prev)
        return true;
    Span prev(w.data() + prev_start, tail_start - 1 - prev_start);
    return contains_at(prev, scratch, 1, d);
}

} // namespace

std::string to_string(const Word &w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol c : w)
        s.push_back(static_cast<char>('0' + c));
    return s;
}

Word parse_word(std::string_view text, int d) {
    check_dimension(d);
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch < '0' || ch > '9')
            throw InvalidAlphabetError("non-digit character at position " + std::to_string(i + 1));
        w.push_back(static_cast<Symbol>(ch - '0'));
    }
    check_symbols(w, d);
    return w;
}

bool validate(const Word &w, int d) {
    check_symbols(w, d);
    if (d == 1)
        return valid_blocks_1d(w);
    return valid_at(w, 0, d);
}

bool validate_by_rules(const Word &w, int d) {
    check_symbols(w, d);
    return valid_at(w, 0, d);
}

bool validate_by_structure(const Word &w, int d) {
    check_symbols(w, d);
    if (static_cast<int>(w.size()) >= kMaxTotal)
        throw ContractError("word length exceeds supported maximum");
    std::array<RawCell, kMaxTotal> cells;
    int count = decode_raw(w, 0, d, 0, cells.data(), 0);
    return raw_cells_well_formed(cells.data(), count, d);
}

bool dominates(const Word &b, const Word &c, int level, int d) {
    check_symbols(b, d);
    check_symbols(c, d);
    if (level < 0 || level >= d)
        throw InvalidAlphabetError("dominance level must be in [0, d)");
    for (Symbol s : b)
        if (s <= level)
            throw InvalidAlphabetError("left word contains letters at or below the join level");
    for (Symbol s : c)
        if (s <= level)
            throw InvalidAlphabetError("right word contains letters at or below the join level");
    return contains_at(b, c, level + 1, d);
}

long long DDimPartition::total() const {
    long long n = 0;
    for (const auto &[coord, v] : parts)
        n += v;
    return n;
}

bool DDimPartition::well_formed() const {
    if (d < 1 || d > kMaxDimension || parts.empty())
        return false;
    for (const auto &[coord, v] : parts) {
        if (static_cast<int>(coord.size()) != d || v < 1)
            return false;
        for (int x : coord)
            if (x < 1)
                return false;
    }
    std::vector<int> probe;
    for (const auto &[coord, v] : parts) {
        for (int a = 0; a < d; ++a) {
            probe = coord;
            probe[a] += 1;
            auto it = parts.find(probe);
            if (it != parts.end() && it->second > v)
                return false; // grows along an axis
            if (coord[a] > 1) {
                probe[a] -= 2;
                if (!parts.contains(probe))
                    return false; // support not downward closed
            }
        }
    }
    return true;
}

std::vector<int> DDimPartition::parts_1d() const {
    std::vector<int> lambda;
    lambda.reserve(parts.size());
    for (const auto &[coord, v] : parts)
        lambda.push_back(v);
    return lambda; // map order = coordinate order = non-increasing values
}

DDimPartition DDimPartition::from_parts(const std::vector<int> &lambda) {
    DDimPartition p;
    p.d = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        p.parts.emplace(std::vector<int>{static_cast<int>(i + 1)}, lambda[i]);
    return p;
}

DDimPartition to_partition(const Word &w, int d) {
    if (!validate(w, d))
        throw InvalidWordError("not a valid partition word: \"" + to_string(w) + "\"");
    DDimPartition p;
    p.d = d;
    p.parts = decode_word(w, d);
    return p;
}

Word from_partition(const DDimPartition &p) {
    if (!p.well_formed())
        throw InvalidPartitionError("part array violates partition invariants");
    if (p.total() > kMaxTotal)
        throw ContractError("partition total exceeds supported maximum");
    std::vector<CellView> cells;
    cells.reserve(p.parts.size());
    for (const auto &[coord, v] : p.parts)
        cells.emplace_back(&coord, v);
    Word out;
    encode_group(cells, 0, p.d, out);
    return out;
}

std::vector<int> parts_from_word_1d(const Word &w) {
    std::vector<int> lambda;
    int run = 0;
    for (Symbol s : w) {
        if (s == 1) {
            ++run;
        } else {
            lambda.push_back(run + 1);
            run = 0;
        }
    }
    lambda.push_back(run + 1);
    return lambda;
}

WordSet enumerate_words(int d, int n, std::chrono::milliseconds budget) {
    check_dimension(d);
    if (n < 1)
        throw ContractError("n must be >= 1");
    if (n > kMaxTotal)
        throw ContractError("n exceeds supported maximum " + std::to_string(kMaxTotal));

    const bool timed = budget > std::chrono::milliseconds::zero();
    const auto deadline = Clock::now() + budget;

    std::vector<Word> cur{Word{}};
    Word scratch;
    for (int len = 1; len <= n - 1; ++len) {
        std::vector<Word> next;
        next.reserve(cur.size() + cur.size() / 2);
        std::size_t since_check = 0;
        for (const Word &w : cur) {
            for (int c = 0; c <= d; ++c) {
                if (can_append(w, static_cast<Symbol>(c), d, scratch)) {
                    Word ext = w;
                    ext.push_back(static_cast<Symbol>(c));
                    next.push_back(std::move(ext));
                }
            }
            if (timed && ++since_check >= 4096) {
                since_check = 0;
                if (Clock::now() > deadline)
                    throw BudgetExceededError("enumeration budget exhausted at length " +
                                                  std::to_string(len),
                                              next.size());
            }
        }
        cur = std::move(next);
        if (timed && Clock::now() > deadline && len < n - 1)
            throw BudgetExceededError("enumeration budget exhausted at length " +
                                          std::to_string(len),
                                      cur.size());
    }
    // Generation order is already canonical; the sort keeps the output
    // independent of any future parallel generation strategy.
    std::sort(cur.begin(), cur.end());
    return WordSet{d, n, std::move(cur)};
}

std::vector<long long> symbol_totals(int d, int n) {
    WordSet ws = enumerate_words(d, n);
    std::vector<long long> totals(static_cast<std::size_t>(d) + 1, 0);
    for (const Word &w : ws.words)
        for (Symbol s : w)
            ++totals[s];
    return totals;
}

Word zero_word(int n) {
    if (n < 1)
        throw ContractError("n must be >= 1");
    return Word(static_cast<std::size_t>(n - 1), 0);
}

bool is_zero_word(const Word &w) {
    return std::all_of(w.begin(), w.end(), [](Symbol s) { return s == 0; });
}

void write_words(std::ostream &os, const WordSet &ws) {
    for (const Word &w : ws.words)
        os << to_string(w) << '\n';
}

std::optional<WordSet> read_words(std::istream &is, int d, int n) {
    check_dimension(d);
    if (n < 1 || n > kMaxTotal)
        return std::nullopt;
    std::vector<Word> words;
    std::string line;
    while (std::getline(is, line)) {
        if (static_cast<int>(line.size()) != n - 1)
            return std::nullopt;
        Word w;
        try {
            w = parse_word(line, d);
        } catch (const InvalidAlphabetError &) {
            return std::nullopt;
        }
        if (!validate(w, d))
            return std::nullopt;
        if (!words.empty() && !(words.back() < w))
            return std::nullopt; // not in canonical order
        words.push_back(std::move(w));
    }
    if (words.empty())
        return std::nullopt;
    return WordSet{d, n, std::move(words)};
}

} // namespace pwords
