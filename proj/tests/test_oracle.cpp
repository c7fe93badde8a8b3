#include "doctest.h"

#include <set>

#include "oracle.hpp"

using namespace pwords;

TEST_CASE("naive_partitions: counts and order") {
    auto p4 = oracle::naive_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == std::vector<int>{1, 1, 1, 1});
    CHECK(p4.back() == std::vector<int>{4});
    CHECK(std::is_sorted(p4.begin(), p4.end()));

    CHECK(oracle::naive_partitions(1) == std::vector<std::vector<int>>{{1}});
    CHECK(oracle::naive_partitions(6).size() == 11);
    for (const auto &lambda : oracle::naive_partitions(9)) {
        CHECK(std::is_sorted(lambda.rbegin(), lambda.rend()));
        int sum = 0;
        for (int x : lambda)
            sum += x;
        CHECK(sum == 9);
    }
}

TEST_CASE("naive_ddim_partitions: counts, dedup, well-formedness") {
    CHECK(oracle::naive_ddim_partitions(2, 5).size() == 24);
    CHECK(oracle::naive_ddim_partitions(3, 6).size() == 140);
    CHECK(oracle::naive_ddim_partitions(2, 1).size() == 1);

    auto all = oracle::naive_ddim_partitions(3, 5);
    CHECK(all.size() == 59);
    std::set<std::map<std::vector<int>, int>> seen;
    for (const auto &p : all) {
        CHECK(p.well_formed());
        CHECK(p.total() == 5);
        seen.insert(p.parts);
    }
    CHECK(seen.size() == all.size());

    CHECK_THROWS_AS(oracle::naive_ddim_partitions(1, 4), ContractError);
    CHECK_THROWS_AS(oracle::naive_ddim_partitions(2, 11), ContractError);
}

TEST_CASE("naive_edges: hand-checked counts") {
    CHECK(oracle::naive_edges(1, 4).size() == 5);
    CHECK(oracle::naive_edges(1, 2).size() == 1);

    auto e23 = oracle::naive_edges(2, 3);
    CHECK(e23.size() == 8);
    std::set<std::pair<std::string, std::string>> s(e23.begin(), e23.end());
    CHECK(s.contains({"00", "10"}));
    CHECK(s.contains({"21", "22"}));
    CHECK_FALSE(s.contains({"00", "11"}));
}
