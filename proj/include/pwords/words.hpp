#pragma once

#include <chrono>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwords/errors.hpp"

// Partition words: every d-dimensional partition of n (an array of positive
// parts, non-increasing along each axis) is encoded as a word of length n-1
// over the alphabet {0, ..., d}.
//
// Splitting a word on its lowest letter yields segments; each segment, read
// over the remaining letters, recursively encodes a slice of the partition
// one dimension down, and a segment of length L encodes a slice of total
// L+1. A word is valid iff every segment is valid and each segment's decoded
// slice contains the next one entrywise ("dominance"). For d = 1 this
// reduces to: the lengths of the 0-separated runs of 1s are non-increasing,
// and the partition parts are those run lengths plus one.

namespace pwords {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

inline constexpr int kMaxDimension = 9; // words render as digit strings
inline constexpr int kMaxTotal = 120;   // largest supported n

std::string to_string(const Word &w);
Word parse_word(std::string_view text, int d);

/// True iff `w` is a valid partition word over {0..d}. Uses the block
/// characterization for d = 1 and the recursive rules otherwise.
/// Throws InvalidAlphabetError for symbols outside [0, d] (distinct from
/// returning false).
bool validate(const Word &w, int d);

/// Recursive-rule validator, all dimensions. Kept as a cross-check for the
/// d = 1 fast path and cross-tested against validate_by_structure.
bool validate_by_rules(const Word &w, int d);

/// Structural validator: decode the word into a part array unconditionally,
/// then check the array invariants directly.
bool validate_by_structure(const Word &w, int d);

/// True iff B·level·C is a valid word, for valid words B and C over the
/// alphabet strictly above `level`.
bool dominates(const Word &b, const Word &c, int level, int d);

/// A d-dimensional partition: positive parts keyed by 1-based coordinates,
/// non-increasing along every axis, with downward-closed support.
struct DDimPartition {
    int d = 1;
    std::map<std::vector<int>, int> parts;

    /// Sum of all parts (the encoded n).
    long long total() const;

    /// Checks positivity, coordinate shape, axis monotonicity and downward
    /// closure of the support.
    bool well_formed() const;

    /// d = 1 convenience: the parts as a non-increasing list.
    std::vector<int> parts_1d() const;

    static DDimPartition from_parts(const std::vector<int> &lambda); // d = 1

    bool operator==(const DDimPartition &) const = default;
};

/// Decodes a valid word; throws InvalidWordError otherwise.
DDimPartition to_partition(const Word &w, int d);

/// Encodes a well-formed partition; throws InvalidPartitionError otherwise.
Word from_partition(const DDimPartition &p);

/// d = 1 shortcut used by the analysis pipeline: parts of the encoded
/// ordinary partition without building a DDimPartition.
std::vector<int> parts_from_word_1d(const Word &w);

struct WordSet {
    int d = 1;
    int n = 1;
    std::vector<Word> words; // canonical: lexicographic, 0 < 1 < ... < d

    std::size_t count() const { return words.size(); }
};

/// All valid words of length n-1 over {0..d}, canonically ordered.
/// A nonzero budget turns long runs into BudgetExceededError carrying the
/// number of words found at the current length.
WordSet enumerate_words(int d, int n,
                        std::chrono::milliseconds budget = std::chrono::milliseconds::zero());

/// Per-letter symbol counts summed over all words of enumerate_words(d, n);
/// index = letter. The totals over all letters add up to (n-1) * p_d(n).
std::vector<long long> symbol_totals(int d, int n);

Word zero_word(int n); // 0^{n-1}
bool is_zero_word(const Word &w);

/// One word per line, digits only, newline-terminated; n = 1 writes a single
/// empty line.
void write_words(std::ostream &os, const WordSet &ws);

/// Strict reader for the same format: every line must parse, validate and be
/// in canonical order, else nullopt. Used to treat cache files as advisory.
std::optional<WordSet> read_words(std::istream &is, int d, int n);

} // namespace pwords
