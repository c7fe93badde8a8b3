#include "doctest.h"

#include <set>
#include <sstream>

#include "pwords/graycode.hpp"

using namespace pwords;

TEST_CASE("gray2: verified cycles at small n") {
    auto c4 = gray2(4);
    CHECK(c4.sequence.size() == 4);
    CHECK(verify(c4, build_graph(1, 4, false)));

    auto c8 = gray2(8);
    CHECK(c8.sequence.size() == 21);
    CHECK(verify(c8, build_graph(1, 8, false)));

    CHECK_THROWS_AS(gray2(3), ContractError);
}

TEST_CASE("gray2: deterministic") {
    auto a = gray2(7);
    auto b = gray2(7);
    CHECK(a.sequence == b.sequence);
}

TEST_CASE("gray3: full cover with flip bound 3") {
    auto c25 = gray3(2, 5);
    CHECK(c25.sequence.size() == 24);
    CHECK(verify(c25, build_graph(2, 5)));

    auto c12 = gray3(1, 2);
    CHECK(c12.sequence.size() == 2);
    CHECK(verify(c12, build_graph(1, 2)));

    auto c36 = gray3(3, 6);
    CHECK(c36.sequence.size() == 140);
    CHECK(verify(c36, build_graph(3, 6)));

    CHECK_THROWS_AS(gray3(1, 1), ContractError);
}

TEST_CASE("gray3: deterministic and starts at the canonical first word") {
    auto a = gray3(2, 6);
    auto b = gray3(2, 6);
    CHECK(a.sequence == b.sequence);
    CHECK(a.sequence.front() == zero_word(6));
}

TEST_CASE("verify: rejections") {
    auto code = gray3(1, 5);
    auto g = build_graph(1, 5);
    REQUIRE(verify(code, g));

    auto repeated = code;
    repeated.sequence[1] = repeated.sequence[0];
    CHECK_FALSE(verify(repeated, g));

    // force a consecutive pair at distance beyond k: the all-zeros and
    // all-ones words sit at distance n - 1
    auto broken = gray3(1, 8);
    auto g8 = build_graph(1, 8);
    REQUIRE(verify(broken, g8));
    auto it_zero = std::find(broken.sequence.begin(), broken.sequence.end(), zero_word(8));
    REQUIRE(it_zero != broken.sequence.end());
    std::iter_swap(broken.sequence.begin(), it_zero);
    auto it_ones = std::find(broken.sequence.begin(), broken.sequence.end(), Word(7, 1));
    REQUIRE(it_ones != broken.sequence.end());
    std::iter_swap(broken.sequence.begin() + 1, it_ones);
    CHECK_FALSE(verify(broken, g8));

    CHECK_THROWS_AS(verify(code, build_graph(1, 6)), ContractError);      // wrong n
    CHECK_THROWS_AS(verify(code, build_graph(1, 5, false)), ContractError); // wrong convention

    auto two = gray2(5);
    CHECK_THROWS_AS(verify(two, build_graph(1, 5)), ContractError); // zero word present
}

TEST_CASE("gray codes across the small size sweep") {
    for (int n = 4; n <= 9; ++n)
        CHECK(verify(gray2(n), build_graph(1, n, false)));
    for (auto [d, max_n] : {std::pair{1, 12}, {2, 8}, {3, 6}}) {
        for (int n = 2; n <= max_n; ++n)
            CHECK(verify(gray3(d, n), build_graph(d, n)));
    }
}

TEST_CASE("gray code file format") {
    auto code = gray3(1, 3);
    std::ostringstream os;
    write_graycode(os, code);
    auto s = os.str();
    CHECK(s.substr(0, 8) == "1 3 3 1\n");
    CHECK(std::count(s.begin(), s.end(), '\n') == 4); // header + 3 words
}
