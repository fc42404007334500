#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wavefront/duality.hpp"

using namespace wf;

TEST_CASE("interval decomposition")
{
    std::vector<Interval> iv = intervals_symp({2, 2});
    REQUIRE(iv.size() == 2);
    CHECK(iv[0] == Interval{2});
    CHECK(iv[1] == Interval{0});

    iv = intervals_orth_even({3, 1});
    REQUIRE(iv.size() == 1);
    CHECK(iv[0] == Interval{3, 1});

    iv = intervals_symp({});
    REQUIRE(iv.size() == 1);
    CHECK(iv[0] == Interval{0});
}

TEST_CASE("index ranges match the parity characterization")
{
    for (const Partition& lam : symp_special_partitions(10)) {
        IntervalSet is = interval_set(lam, PClass::symp);
        for (size_t i = 0; i < is.all.size(); ++i) {
            auto [jmin, jmax] = is.jrange[i];
            CHECK(jmin % 2 == 1);
            CHECK(part_at(lam, jmin) % 2 == 0);
            if (jmin > 1)
                CHECK(part_at(lam, jmin - 1) > part_at(lam, jmin));
            if (jmax != J_INF) {
                CHECK(jmax % 2 == 0);
                CHECK(part_at(lam, jmax) % 2 == 0);
                CHECK(part_at(lam, jmax) > part_at(lam, jmax + 1));
            }
        }
    }
}

TEST_CASE("zeta and s sequences, hand cases")
{
    ZetaData z = zeta_s({2, 2}, PClass::symp);
    CHECK(z.Pp == std::vector<int>{1, 3});
    CHECK(z.Pm == std::vector<int>{2});
    CHECK(z.zeta == IntSeq{1, -1, 1});
    CHECK(z.Qp.empty());
    CHECK(z.Qm.empty());
    CHECK(std::all_of(z.s.begin(), z.s.end(), [](int v) { return v == 0; }));

    z = zeta_s({4, 3, 3, 2}, PClass::symp);
    CHECK(z.Qp == std::vector<int>{2});
    CHECK(z.Qm == std::vector<int>{3});
    CHECK(z.Pp == std::vector<int>{1, 5});
    CHECK(z.Pm == std::vector<int>{4});
    CHECK(add_sequence({4, 3, 3, 2}, z.s) == Partition{4, 4, 2, 2});

    z = zeta_s({3, 1}, PClass::orth_even);
    CHECK(z.Pp == std::vector<int>{1});
    CHECK(z.Pm == std::vector<int>{2});
    CHECK(z.zeta == IntSeq{1, -1});
}

TEST_CASE("interleaving invariants of the index sets")
{
    for (const Partition& lam : symp_partitions(12)) {
        ZetaData z = zeta_s(lam, PClass::symp);
        CHECK(z.Pp.size() == z.Pm.size() + 1);
        CHECK(z.Qp.size() == z.Qm.size());
        for (size_t i = 0; i < z.Pm.size(); ++i) {
            CHECK(z.Pp[i] < z.Pm[i]);
            CHECK(z.Pm[i] < z.Pp[i + 1]);
        }
    }
    for (const Partition& lam : orth_even_special_partitions(12)) {
        ZetaData z = zeta_s(lam, PClass::orth_even);
        CHECK(z.Pp.size() == z.Pm.size());
    }
}

TEST_CASE("special closure")
{
    CHECK(sp_closure({3, 3, 2}) == Partition{3, 3, 2});
    CHECK(sp_closure({4, 3, 3, 2}) == Partition{4, 4, 2, 2});
    CHECK(sp_closure({}) == Partition{});
}

TEST_CASE("special closure is the least special partition above")
{
    for (int m = 0; m <= 12; m += 2)
        for (const Partition& lam : symp_partitions(m)) {
            Partition sp = sp_closure(lam);
            CHECK(is_special_symp(sp));
            CHECK(dominance_leq(lam, sp));
            for (const Partition& mu : symp_special_partitions(m))
                if (dominance_leq(lam, mu))
                    CHECK(dominance_leq(sp, mu));
        }
}

TEST_CASE("duality, pinned values")
{
    CHECK(dual({2, 2}, PClass::symp) == Partition{3, 1, 1});
    CHECK(dual({6, 2}, PClass::symp) == Partition{3, 1, 1, 1, 1, 1, 1});
    CHECK(dual({3, 1}, PClass::orth_even) == Partition{1, 1, 1, 1});
}

TEST_CASE("duality is involutive and order reversing")
{
    for (int m = 0; m <= 12; m += 2) {
        std::vector<Partition> specials = symp_special_partitions(m);
        for (const Partition& lam : specials) {
            Partition d1 = dual(lam, PClass::symp);
            CHECK(is_special_orth_odd(d1));
            CHECK(dual(d1, PClass::orth_odd) == lam);
        }
        for (const Partition& a : specials)
            for (const Partition& b : specials)
                if (dominance_leq(a, b))
                    CHECK(dominance_leq(dual(b, PClass::symp),
                                        dual(a, PClass::symp)));
    }
    for (int m = 0; m <= 12; m += 2)
        for (const Partition& lam : orth_even_special_partitions(m))
            CHECK(dual(dual(lam, PClass::orth_even), PClass::orth_even) ==
                  lam);
}

TEST_CASE("duality factors through the special closure")
{
    for (int m = 0; m <= 12; m += 2)
        for (const Partition& lam : symp_partitions(m))
            CHECK(dual(lam, PClass::symp) ==
                  dual(sp_closure(lam), PClass::symp));
}

TEST_CASE("formula route equals symbol route")
{
    for (int m = 0; m <= 12; m += 2)
        for (const Partition& lam : symp_partitions(m))
            CHECK(dual(lam, PClass::symp) ==
                  dual_symbol_route(lam, PClass::symp));
    for (int m = 1; m <= 13; m += 2)
        for (const Partition& lam : orth_partitions(m))
            CHECK(dual(lam, PClass::orth_odd) ==
                  dual_symbol_route(lam, PClass::orth_odd));
}

TEST_CASE("orthogonal collapse")
{
    CHECK(orth_collapse({5, 4, 3, 1}, 13) == Partition{5, 3, 3, 1, 1});
    CHECK(orth_collapse({9, 2, 1, 1}, 13) == Partition{9, 1, 1, 1, 1});
    CHECK(orth_collapse({13}, 13) == Partition{13});
}

TEST_CASE("orthogonal collapse matches the brute-force oracle")
{
    for (int M = 1; M <= 13; M += 2)
        for (const Partition& nu : all_partitions(M))
            CHECK(orth_collapse(nu, M) == orth_collapse_brute(nu, M));
}
