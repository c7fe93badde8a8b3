#include "doctest.h"

#include <algorithm>
#include <atomic>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "oracle.hpp"
#include "pwords/words.hpp"

using namespace pwords;

namespace {

Word W(std::string_view s, int d = 3) { return parse_word(s, d); }

std::vector<std::string> strings_of(const WordSet &ws) {
    std::vector<std::string> out;
    out.reserve(ws.count());
    for (const Word &w : ws.words)
        out.push_back(to_string(w));
    return out;
}

std::set<std::string> string_set(const WordSet &ws) {
    auto v = strings_of(ws);
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("validate: accepted and rejected words") {
    CHECK(validate(W("11010", 1), 1));
    CHECK_FALSE(validate(W("011", 1), 1));
    CHECK(validate(W("2102", 2), 2));
    CHECK_FALSE(validate(W("3102"), 3));
    CHECK_FALSE(validate(W("3320312"), 3));
    CHECK(validate(Word{}, 1));
    CHECK(validate(Word{}, 2));
    CHECK(validate(Word{}, 3));
    CHECK(validate(W("33103"), 3));
    CHECK(validate(W("33130"), 3));
}

TEST_CASE("validate: alphabet violations are errors, not false") {
    CHECK_THROWS_AS(validate(Word{3}, 2), InvalidAlphabetError);
    CHECK_THROWS_AS(validate(Word{1}, 0), InvalidAlphabetError);
    CHECK_THROWS_AS(validate(Word{1}, 10), InvalidAlphabetError);
    CHECK_THROWS_AS(parse_word("1a0", 1), InvalidAlphabetError);
    CHECK_THROWS_AS(parse_word("120", 1), InvalidAlphabetError);
}

TEST_CASE("dominates: join validity at level 0") {
    CHECK(dominates(W("21", 2), W("2", 2), 0, 2));
    CHECK_FALSE(dominates(W("11", 2), W("2", 2), 0, 2));
    CHECK(dominates(W("1", 1), W("1", 1), 0, 1));
    CHECK_FALSE(dominates(W("1", 1), W("11", 1), 0, 1));
    CHECK_THROWS_AS(dominates(W("10", 1), W("1", 1), 0, 1), InvalidAlphabetError);
}

TEST_CASE("to_partition: d = 1 decoding") {
    CHECK(to_partition(W("1101", 1), 1).parts_1d() == std::vector<int>{3, 2});
    CHECK(to_partition(W("1100", 1), 1).parts_1d() == std::vector<int>{3, 1, 1});
    auto unit = to_partition(Word{}, 1);
    CHECK(unit.total() == 1);
    CHECK(unit.parts_1d() == std::vector<int>{1});
    CHECK_THROWS_AS(to_partition(W("011", 1), 1), InvalidWordError);
}

TEST_CASE("to_partition: plane case places slices along the last axis") {
    auto p = to_partition(W("2102", 2), 2);
    REQUIRE(p.total() == 5);
    std::map<std::vector<int>, int> expected{
        {{1, 1}, 2}, {{2, 1}, 1}, {{1, 2}, 2}};
    CHECK(p.parts == expected);
}

TEST_CASE("from_partition: d = 1 encoding") {
    CHECK(to_string(from_partition(DDimPartition::from_parts({3, 2, 2, 1}))) == "1101010");
    CHECK(to_string(from_partition(DDimPartition::from_parts({1, 1, 1, 1}))) == "000");
    CHECK(to_string(from_partition(DDimPartition::from_parts({5}))) == "1111");
    CHECK_THROWS_AS(from_partition(DDimPartition::from_parts({1, 2})), InvalidPartitionError);
    CHECK_THROWS_AS(from_partition(DDimPartition{}), InvalidPartitionError);
}

TEST_CASE("enumerate: small tables") {
    auto s14 = string_set(enumerate_words(1, 4));
    CHECK(s14 == std::set<std::string>{"000", "100", "110", "101", "111"});
    auto s23 = string_set(enumerate_words(2, 3));
    CHECK(s23 == std::set<std::string>{"00", "10", "20", "11", "21", "22"});
    CHECK(enumerate_words(3, 6).count() == 140);
    CHECK(enumerate_words(1, 1).words == std::vector<Word>{Word{}});
    CHECK(enumerate_words(7, 1).words == std::vector<Word>{Word{}});
    CHECK_THROWS_AS(enumerate_words(1, 0), ContractError);
}

TEST_CASE("enumerate: the full alphabet at d = 9") {
    auto ws = enumerate_words(9, 2);
    CHECK(ws.count() == 10); // one word per letter
    CHECK(to_string(ws.words.back()) == "9");
    for (const Word &w : enumerate_words(9, 3).words)
        CHECK(validate(w, 9));
    CHECK_THROWS_AS(enumerate_words(10, 2), InvalidAlphabetError);
}

TEST_CASE("enumerate: output is canonically ordered and duplicate-free") {
    for (auto [d, n] : {std::pair{1, 9}, {2, 7}, {3, 6}}) {
        auto ws = enumerate_words(d, n);
        CHECK(std::is_sorted(ws.words.begin(), ws.words.end()));
        CHECK(std::adjacent_find(ws.words.begin(), ws.words.end()) == ws.words.end());
        for (const Word &w : ws.words)
            CHECK(validate(w, d));
    }
}

TEST_CASE("enumerate: frozen word lists") {
    auto d1n5 = string_set(enumerate_words(1, 5));
    CHECK(d1n5 == std::set<std::string>{"0000", "1000", "1100", "1010", "1110", "1101", "1111"});
    auto d1n6 = string_set(enumerate_words(1, 6));
    CHECK(d1n6 == std::set<std::string>{"00000", "10000", "11000", "10100", "11100", "11010",
                                        "11110", "10101", "11101", "11011", "11111"});
    auto d2n4 = string_set(enumerate_words(2, 4));
    CHECK(d2n4 == std::set<std::string>{"000", "100", "200", "110", "210", "220", "101", "111",
                                        "211", "221", "202", "212", "222"});
    auto d2n5 = string_set(enumerate_words(2, 5));
    CHECK(d2n5 == std::set<std::string>{"0000", "1000", "2000", "1100", "2100", "2200", "1010",
                                        "1110", "2110", "2210", "2020", "2120", "2220", "1101",
                                        "2101", "1111", "2111", "2211", "2121", "2221", "2102",
                                        "2202", "2212", "2222"});
    auto d3n3 = string_set(enumerate_words(3, 3));
    CHECK(d3n3 ==
          std::set<std::string>{"00", "10", "20", "30", "11", "21", "31", "22", "32", "33"});
    auto d3n4 = string_set(enumerate_words(3, 4));
    CHECK(d3n4 == std::set<std::string>{"000", "100", "200", "300", "110", "210", "310", "220",
                                        "320", "330", "101", "111", "211", "311", "221", "321",
                                        "331", "202", "212", "222", "322", "332", "303", "313",
                                        "323", "333"});
    auto d3n5 = string_set(enumerate_words(3, 5));
    CHECK(d3n5 ==
          std::set<std::string>{"0000", "1000", "2000", "3000", "1100", "2100", "3100", "2200",
                                "3200", "3300", "1010", "1110", "2110", "3110", "2210", "3210",
                                "3310", "2020", "2120", "2220", "3220", "3320", "3030", "3130",
                                "3230", "3330", "1101", "2101", "3101", "1111", "2111", "3111",
                                "2211", "3211", "3311", "2121", "2221", "3221", "3321", "3131",
                                "3231", "3331", "2102", "2202", "3202", "2212", "3212", "2222",
                                "3222", "3322", "3232", "3332", "3103", "3203", "3303", "3213",
                                "3313", "3323", "3333"});
}

TEST_CASE("enumerate: count tables") {
    const std::vector<std::size_t> p1{1, 2, 3, 5, 7, 11};
    const std::vector<std::size_t> p2{1, 3, 6, 13, 24};
    const std::vector<std::size_t> p3{1, 4, 10, 26, 59, 140};
    for (std::size_t i = 0; i < p1.size(); ++i)
        CHECK(enumerate_words(1, static_cast<int>(i + 1)).count() == p1[i]);
    for (std::size_t i = 0; i < p2.size(); ++i)
        CHECK(enumerate_words(2, static_cast<int>(i + 1)).count() == p2[i]);
    for (std::size_t i = 0; i < p3.size(); ++i)
        CHECK(enumerate_words(3, static_cast<int>(i + 1)).count() == p3[i]);
}

TEST_CASE("symbol_totals") {
    CHECK(symbol_totals(1, 4) == std::vector<long long>{7, 8});
    CHECK(symbol_totals(1, 1) == std::vector<long long>{0, 0});
    CHECK(symbol_totals(1, 2) == std::vector<long long>{1, 1});

    for (auto [d, n] : {std::pair{1, 12}, {2, 9}, {3, 7}}) {
        auto totals = symbol_totals(d, n);
        long long sum = 0;
        for (long long t : totals)
            sum += t;
        auto count = static_cast<long long>(enumerate_words(d, n).count());
        CHECK(sum == (n - 1) * count);
    }
}

TEST_CASE("zeros count = parts count - 1 on every word (d = 1)") {
    for (int n = 1; n <= 12; ++n) {
        for (const Word &w : enumerate_words(1, n).words) {
            auto zeros = static_cast<long long>(std::count(w.begin(), w.end(), Symbol{0}));
            auto parts = to_partition(w, 1).parts_1d();
            CHECK(zeros == static_cast<long long>(parts.size()) - 1);
        }
    }
}

TEST_CASE("closure: appending 0 and dropping the last symbol preserve validity") {
    for (int d = 1; d <= 3; ++d) {
        for (int n = 2; n <= 8; ++n) {
            for (const Word &w : enumerate_words(d, n).words) {
                Word ext = w;
                ext.push_back(0);
                CHECK(validate(ext, d));
                Word cut = w;
                cut.pop_back();
                CHECK(validate(cut, d));
            }
        }
    }
}

TEST_CASE("round trip: from_partition(to_partition(w)) == w") {
    for (auto [d, max_n] : {std::pair{1, 14}, {2, 9}, {3, 8}}) {
        for (int n = 1; n <= max_n; ++n) {
            for (const Word &w : enumerate_words(d, n).words) {
                auto p = to_partition(w, d);
                CHECK(p.well_formed());
                CHECK(p.total() == n);
                CHECK(from_partition(p) == w);
            }
        }
    }
}

TEST_CASE("bijection: decoded partitions are distinct and match the oracle (d = 1)") {
    for (int n = 1; n <= 20; ++n) {
        auto ws = enumerate_words(1, n);
        std::set<std::vector<int>> decoded;
        for (const Word &w : ws.words)
            decoded.insert(to_partition(w, 1).parts_1d());
        CHECK(decoded.size() == ws.count());

        auto naive = oracle::naive_partitions(n);
        std::set<std::vector<int>> expected(naive.begin(), naive.end());
        CHECK(decoded == expected);

        // the other direction: every naive partition encodes to a valid word
        std::set<Word> encoded;
        for (const auto &lambda : naive)
            encoded.insert(from_partition(DDimPartition::from_parts(lambda)));
        std::set<Word> words(ws.words.begin(), ws.words.end());
        CHECK(encoded == words);
    }
}

TEST_CASE("bijection: decoded partitions are distinct and match the oracle (d = 2, 3)") {
    for (auto [d, max_n] : {std::pair{2, 10}, {3, 9}}) {
        for (int n = 1; n <= max_n; ++n) {
            auto ws = enumerate_words(d, n);
            std::set<std::map<std::vector<int>, int>> decoded;
            for (const Word &w : ws.words) {
                auto p = to_partition(w, d);
                CHECK(p.well_formed());
                decoded.insert(p.parts);
            }
            CHECK(decoded.size() == ws.count());

            auto naive = oracle::naive_ddim_partitions(d, n);
            CHECK(naive.size() == ws.count());
            std::set<std::map<std::vector<int>, int>> expected;
            for (const auto &p : naive)
                expected.insert(p.parts);
            CHECK(decoded == expected);
        }
    }
}

TEST_CASE("validator equivalence: rules vs structure, exhaustive") {
    // every symbol sequence, valid or not, over {0..d} up to the length cap
    auto scan = [](int d, int max_len) {
        const auto base = static_cast<std::uint64_t>(d + 1);
        std::atomic<std::uint64_t> mismatches{0};
        std::atomic<std::uint64_t> valid_count{0};
        for (int len = 0; len <= max_len; ++len) {
            std::uint64_t total = 1;
            for (int i = 0; i < len; ++i)
                total *= base;
            const unsigned chunks = std::min<std::uint64_t>(
                total, std::max(1u, std::thread::hardware_concurrency()));
            std::vector<std::future<void>> futures;
            for (unsigned c = 0; c < chunks; ++c) {
                futures.push_back(std::async(std::launch::async, [&, c, len, total]() {
                    Word w(static_cast<std::size_t>(len), 0);
                    const std::uint64_t lo = total * c / chunks;
                    const std::uint64_t hi = total * (c + 1) / chunks;
                    for (std::uint64_t idx = lo; idx < hi; ++idx) {
                        std::uint64_t x = idx;
                        for (int i = 0; i < len; ++i) {
                            w[static_cast<std::size_t>(i)] = static_cast<Symbol>(x % base);
                            x /= base;
                        }
                        const bool a = validate_by_rules(w, d);
                        const bool b = validate_by_structure(w, d);
                        if (a != b)
                            ++mismatches;
                        if (a)
                            ++valid_count;
                    }
                }));
            }
            for (auto &f : futures)
                f.get();
        }
        return std::pair{mismatches.load(), valid_count.load()};
    };

    auto [m1, v1] = scan(1, 12);
    CHECK(m1 == 0);
    auto [m2, v2] = scan(2, 12);
    CHECK(m2 == 0);
    auto [m3, v3] = scan(3, 12);
    CHECK(m3 == 0);
    // sanity: the valid counts are the cumulative enumeration totals
    std::uint64_t e1 = 0, e2 = 0, e3 = 0;
    for (int n = 1; n <= 13; ++n)
        e1 += enumerate_words(1, n).count();
    for (int n = 1; n <= 13; ++n)
        e2 += enumerate_words(2, n).count();
    for (int n = 1; n <= 13; ++n)
        e3 += enumerate_words(3, n).count();
    CHECK(v1 == e1);
    CHECK(v2 == e2);
    CHECK(v3 == e3);
}

TEST_CASE("d = 1 fast path agrees with the recursive rules") {
    for (int n = 1; n <= 12; ++n)
        for (const Word &w : enumerate_words(1, n).words)
            CHECK(validate(w, 1) == validate_by_rules(w, 1));
}

TEST_CASE("validator equivalence on mutated long words") {
    // beyond the exhaustive length cap: perturb valid words a little, where
    // near-valid sequences stress both validators the hardest
    std::mt19937 rng(424242);
    std::uint64_t mismatches = 0;
    for (auto [d, n] : {std::pair{1, 24}, {2, 13}, {3, 10}}) {
        auto ws = enumerate_words(d, n);
        std::uniform_int_distribution<std::size_t> pick(0, ws.count() - 1);
        std::uniform_int_distribution<int> letter(0, d);
        std::uniform_int_distribution<std::size_t> pos(0, static_cast<std::size_t>(n) - 2);
        for (int trial = 0; trial < 20000; ++trial) {
            Word w = ws.words[pick(rng)];
            const int flips = 1 + trial % 3;
            for (int f = 0; f < flips; ++f)
                w[pos(rng)] = static_cast<Symbol>(letter(rng));
            if (validate_by_rules(w, d) != validate_by_structure(w, d))
                ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("enumeration budget produces a partial-result error") {
    CHECK_THROWS_AS(enumerate_words(1, 60, std::chrono::milliseconds(1)), BudgetExceededError);
}

TEST_CASE("word file round trip, including the n = 1 empty word") {
    for (auto [d, n] : {std::pair{1, 1}, {1, 6}, {2, 5}}) {
        auto ws = enumerate_words(d, n);
        std::ostringstream os;
        write_words(os, ws);
        std::istringstream is(os.str());
        auto back = read_words(is, d, n);
        REQUIRE(back.has_value());
        CHECK(back->words == ws.words);
    }
    std::istringstream junk("11\n01\n");
    CHECK_FALSE(read_words(junk, 1, 3).has_value()); // invalid word
    std::istringstream unsorted("11\n10\n");
    CHECK_FALSE(read_words(unsorted, 1, 3).has_value());
    std::istringstream short_line("1\n");
    CHECK_FALSE(read_words(short_line, 1, 3).has_value());
}
