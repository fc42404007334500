#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wavefront/partition.hpp"

using namespace wf;

TEST_CASE("partial sums with zero extension")
{
    CHECK(part_sum_k({3, 1}, 1) == 3);
    CHECK(part_sum_k({3, 1}, 5) == 4);
    CHECK(part_sum_k({}, 2) == 0);
    CHECK(psum({6, 4, 2}) == 12);
}

TEST_CASE("dominance order")
{
    CHECK(dominance_leq({2, 2}, {3, 1}));
    CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
    CHECK(dominance_leq({4, 3, 3, 2}, {4, 4, 2, 2}));
    CHECK(dominance_leq({}, {}));
}

TEST_CASE("multiset union")
{
    CHECK(punion({3, 1}, {2, 2}) == Partition{3, 2, 2, 1});
    CHECK(punion({2}, {2}) == Partition{2, 2});
    CHECK(punion({3, 1, 1}, {1, 1, 1, 1}) == Partition{3, 1, 1, 1, 1, 1, 1});
    CHECK(punion({3, 1}, {}) == Partition{3, 1});
}

TEST_CASE("entrywise sequence addition")
{
    CHECK(add_sequence({2, 2}, {1, -1, 1}) == Partition{3, 1, 1});
    CHECK(add_sequence({6, 4, 2}, {0, 0, 0}) == Partition{6, 4, 2});
    CHECK_THROWS_AS(add_sequence({2}, {-2, 1}), error);
}

TEST_CASE("transpose")
{
    CHECK(transpose({3, 1}) == Partition{2, 1, 1});
    CHECK(transpose({3, 1, 1}) == Partition{3, 1, 1});
    CHECK(transpose({}) == Partition{});
    for (const Partition& p : all_partitions(9))
        CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("classification")
{
    Classification c = classify({4, 3, 3, 2});
    CHECK(c.symplectic);
    CHECK_FALSE(c.special_symp);

    c = classify({3, 1, 1});
    CHECK(c.orthogonal);
    CHECK(c.special_orth_odd);

    c = classify({2, 1});
    CHECK_FALSE(c.symplectic);
    CHECK_FALSE(c.orthogonal);
}

TEST_CASE("enumeration by class")
{
    std::vector<Partition> s4 = symp_partitions(4);
    CHECK(s4.size() == 4);
    CHECK(std::find(s4.begin(), s4.end(), Partition{2, 1, 1}) != s4.end());
    CHECK(std::find(s4.begin(), s4.end(), Partition{3, 1}) == s4.end());

    std::vector<Partition> o5 = orth_odd_special_partitions(5);
    auto has = [&](const Partition& p) {
        return std::find(o5.begin(), o5.end(), p) != o5.end();
    };
    CHECK(has({5}));
    CHECK(has({3, 1, 1}));
    CHECK(has({1, 1, 1, 1, 1}));

    CHECK(symp_partitions(0) == std::vector<Partition>{{}});
}

TEST_CASE("special lists are sublists of full lists")
{
    for (int m = 0; m <= 10; m += 2) {
        std::vector<Partition> all = symp_partitions(m);
        for (const Partition& p : symp_special_partitions(m)) {
            CHECK(std::find(all.begin(), all.end(), p) != all.end());
            CHECK(is_special_symp(p));
        }
    }
}

TEST_CASE("sign pattern enumeration")
{
    std::vector<EpsMap> pats = eps_patterns({6, 4, 2});
    CHECK(pats.size() == 8);
    CHECK(pats.front().at(6) == 1);
    CHECK(pats.back().at(6) == -1);
    CHECK(eps_patterns({}).size() == 1);
}
