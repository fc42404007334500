#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "wavefront/endoscopy.hpp"
#include "wavefront/weyl.hpp"

using namespace wf;

namespace {

/* All admissible parity functions on the even parts of multiplicity at
 * least two. */
std::vector<std::map<int, int>> chi_candidates(const Partition& lam)
{
    std::vector<int> keys;
    for (int i : jord(lam))
        if (i % 2 == 0 && mult_of(lam, i) >= 2)
            keys.push_back(i);
    std::vector<std::map<int, int>> out;
    for (int mask = 0; mask < (1 << keys.size()); ++mask) {
        std::map<int, int> chi;
        for (size_t j = 0; j < keys.size(); ++j)
            chi[keys[j]] = (mask >> j) & 1;
        out.push_back(chi);
    }
    return out;
}

} // namespace

TEST_CASE("endoscopic induction, pinned example")
{
    InductionData ind = induce({2, 2}, {3, 1});
    CHECK(ind.lam == Partition{6, 2});
    CHECK(ind.xi == IntSeq{1, -1, 0, 0});
    CHECK(ind.Jp == std::set<int>{1});
    CHECK(ind.Jm == std::set<int>{2});
    CHECK(is_regular(ind));
    REQUIRE(ind.rel.size() == 3);
    CHECK(ind.rel[0].D == Interval{6});
    CHECK(ind.rel[1].D == Interval{2});
    CHECK(ind.rel[2].D == Interval{0});
    for (const auto& [d, v] : ind.chi)
        CHECK(v == 0);
}

TEST_CASE("endoscopic induction, degenerate cases")
{
    InductionData ind = induce({}, {});
    CHECK(ind.lam == Partition{});
    REQUIRE(ind.rel.size() == 1);
    CHECK(ind.rel[0].D == Interval{0});
    CHECK(is_regular(ind));

    ind = induce({2}, {});
    CHECK(ind.lam == Partition{2});
    CHECK(ind.Jp.empty());
    CHECK(ind.Jm.empty());
}

TEST_CASE("the induite is symplectic and relative intervals cover it")
{
    for (int n = 0; n <= 5; ++n)
        for (int n1 = 0; n1 <= n; ++n1)
            for (const Partition& l1 : symp_special_partitions(2 * n1))
                for (const Partition& l2 :
                     orth_even_special_partitions(2 * (n - n1))) {
                    InductionData ind = induce(l1, l2);
                    CHECK(is_symplectic(ind.lam));
                    CHECK(psum(ind.lam) == 2 * n);
                    std::set<int> covered;
                    for (const RelInterval& ri : ind.rel)
                        for (int i : ri.D)
                            CHECK(covered.insert(i).second);
                    std::set<int> expect{0};
                    for (int i : jord(ind.lam))
                        if (i % 2 == 0)
                            expect.insert(i);
                    CHECK(covered == expect);
                    CHECK(ind.chi.at(ind.Dmin) == 0);
                }
}

TEST_CASE("interval sum identity for all small coordinate pairs")
{
    for (int n = 0; n <= 5; ++n)
        for (int n1 = 0; n1 <= n; ++n1)
            for (const Partition& l1 : symp_special_partitions(2 * n1))
                for (const Partition& l2 :
                     orth_even_special_partitions(2 * (n - n1))) {
                    InductionData ind = induce(l1, l2);
                    for (const Symbol& s1 :
                         family_enumerate(l1, PClass::symp))
                        for (const Symbol& s2 :
                             family_enumerate(l2, PClass::orth_even)) {
                            ZetaFunctions fns = zeta_functions(
                                ind, tau_delta(l1, PClass::symp, s1),
                                tau_delta(l2, PClass::orth_even, s2));
                            for (const auto& [d, v] : fns.taup)
                                if (d == ind.Dmin)
                                    CHECK(v == 0);
                            for (const auto& [d, v] : fns.taum)
                                if (d == ind.Dmin)
                                    CHECK(v == 0);
                            for (int zeta : {1, -1})
                                CHECK(c_zeta(ind, fns, zeta) ==
                                      c_zeta_expected(fns.r1, fns.r2,
                                                      zeta));
                        }
                }
}

TEST_CASE("coordinate reconstruction round trips")
{
    for (int n = 0; n <= 4; ++n)
        for (int n1 = 0; n1 <= n; ++n1)
            for (const Partition& l1 : symp_special_partitions(2 * n1))
                for (const Partition& l2 :
                     orth_even_special_partitions(2 * (n - n1))) {
                    InductionData ind = induce(l1, l2);
                    for (const Symbol& s1 :
                         family_enumerate(l1, PClass::symp))
                        for (const Symbol& s2 :
                             family_enumerate(l2, PClass::orth_even)) {
                            FamilyCoord i1 =
                                tau_delta(l1, PClass::symp, s1);
                            FamilyCoord i2 =
                                tau_delta(l2, PClass::orth_even, s2);
                            auto [j1, j2] = reconstruct_iotas(
                                ind, zeta_functions(ind, i1, i2));
                            CHECK(j1 == i1);
                            CHECK(j2 == i2);
                        }
                }
}

TEST_CASE("splits exist for every admissible chi and satisfy the contract")
{
    for (int m = 0; m <= 10; m += 2)
        for (const Partition& lam : symp_partitions(m))
            for (const auto& chi : chi_candidates(lam)) {
                auto [l1, l2] = split_for_chi(lam, chi);
                CHECK(is_special_symp(l1));
                CHECK(is_special_orth_even(l2));
                InductionData ind = induce(l1, l2);
                CHECK(ind.lam == lam);
                CHECK(is_regular(ind));
                CHECK(punion(dual(l1, PClass::symp),
                             dual(l2, PClass::orth_even)) ==
                      dual(lam, PClass::symp));
                for (const RelInterval& ri : ind.rel) {
                    REQUIRE(ri.D.size() == 1);
                    int i = ri.D[0];
                    if (i != 0 && mult_of(lam, i) >= 2) {
                        auto it = chi.find(i);
                        int want = it == chi.end() ? 0 : it->second;
                        CHECK(ind.chi.at(ri.D) == want);
                    }
                }
            }
}

TEST_CASE("split search rejects an inadmissible chi")
{
    /* parts of multiplicity one cannot carry chi = 1 */
    CHECK_THROWS_AS(split_for_chi({4, 2}, {{4, 1}}), error);
}

TEST_CASE("maximal quadruples partition the induite")
{
    for (int n = 1; n <= 3; ++n)
        for (int n1 = 0; n1 <= n; ++n1)
            for (const Partition& l1 : symp_special_partitions(2 * n1))
                for (const Partition& l2 :
                     orth_even_special_partitions(2 * (n - n1))) {
                    InductionData ind = induce(l1, l2);
                    FamilyCoord i1 = tau_delta(
                        l1, PClass::symp, special_symbol(l1, PClass::symp));
                    FamilyCoord i2 = tau_delta(
                        l2, PClass::orth_even,
                        special_symbol(l2, PClass::orth_even));
                    ZetaFunctions fns = zeta_functions(ind, i1, i2);
                    for (int zeta : {1, -1}) {
                        int nu = fns.r2 >= 0 ? 1 : -1;
                        auto [hp, hm] = h_pm(zeta, fns.r1, fns.r2);
                        for (int npl = hp * (hp + 1) / 2; npl <= n; ++npl) {
                            int nmi = n - npl;
                            if (nmi < hm * (hm + 1) / 2)
                                continue;
                            for (const Quad& q : i_zeta_max(ind, fns, zeta,
                                                            nu, npl, nmi))
                                CHECK(punion(q.lp, q.lm) == ind.lam);
                        }
                    }
                }
}
