#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "wavefront/weyl.hpp"

using namespace wf;

namespace {

std::vector<Bipartition> bipartitions_of(int n)
{
    std::vector<Bipartition> out;
    for (int sa = 0; sa <= n; ++sa)
        for (const Partition& a : all_partitions(sa))
            for (const Partition& b : all_partitions(n - sa))
                out.push_back({a, b});
    return out;
}

long long inner(const VirtualRep& v, const Bipartition& b)
{
    auto it = v.find(b);
    return it == v.end() ? 0 : it->second;
}

long long inner(const PairRep& v, const BipPair& b)
{
    auto it = v.find(b);
    return it == v.end() ? 0 : it->second;
}

} // namespace

TEST_CASE("littlewood-richardson coefficients")
{
    CHECK(lr_coeff({2}, {1}, {1}) == 1);
    CHECK(lr_coeff({1, 1}, {1}, {1}) == 1);
    CHECK(lr_coeff({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    CHECK(lr_coeff({2, 2}, {2}, {1}) == 0);
}

TEST_CASE("lr kernel agrees with the alternating-sum oracle")
{
    for (int s = 0; s <= 8; ++s)
        for (const Partition& lam : all_partitions(s))
            for (int p = 0; p <= s; ++p)
                for (const Partition& mu : all_partitions(p))
                    for (const Partition& nu : all_partitions(s - p)) {
                        long long c = lr_coeff(lam, mu, nu);
                        CHECK(c == lr_coeff_oracle(lam, mu, nu));
                        CHECK(c == lr_coeff(lam, nu, mu));
                    }
}

TEST_CASE("horizontal strips")
{
    std::vector<Partition> ps = pieri_h({2, 1}, 2);
    CHECK(std::find(ps.begin(), ps.end(), Partition{4, 1}) != ps.end());
    CHECK(std::find(ps.begin(), ps.end(), Partition{2, 2, 1}) != ps.end());
    CHECK(std::find(ps.begin(), ps.end(), Partition{2, 1, 1, 1}) == ps.end());
}

TEST_CASE("induction, pinned values")
{
    VirtualRep v = ind_bip({{1}, {}}, {{1}, {}});
    CHECK(inner(v, {{2}, {}}) == 1);
    CHECK(inner(v, {{1, 1}, {}}) == 1);
    CHECK(v.size() == 2);

    v = ind_bip({{1}, {}}, {{}, {1}});
    CHECK(inner(v, {{1}, {1}}) == 1);
    CHECK(v.size() == 1);

    v = ind_bip({{}, {}}, {{2, 1}, {1}});
    CHECK(inner(v, {{2, 1}, {1}}) == 1);
    CHECK(v.size() == 1);
}

TEST_CASE("restriction is adjoint to induction")
{
    for (int n = 0; n <= 4; ++n)
        for (int p = 0; p <= n; ++p)
            for (const Bipartition& rho : bipartitions_of(n)) {
                PairRep res = res_bip(rho, p, n - p);
                for (const Bipartition& a : bipartitions_of(p))
                    for (const Bipartition& b : bipartitions_of(n - p))
                        CHECK(inner(res, {a, b}) ==
                              inner(ind_bip(a, b), rho));
            }
}

TEST_CASE("character twists")
{
    CHECK(twist_sgn({{2}, {}}) == Bipartition{{}, {1, 1}});
    CHECK(twist_sgn_cd({{2}, {1}}) == Bipartition{{1}, {2}});
    for (int n = 0; n <= 6; ++n)
        for (const Bipartition& b : bipartitions_of(n)) {
            CHECK(twist_sgn(twist_sgn(b)) == b);
            CHECK(twist_sgn_cd(twist_sgn_cd(b)) == b);
        }
}

TEST_CASE("sgn twist matches symbol complement duality")
{
    for (int m = 0; m <= 8; ++m) {
        for (int r = 0; r * r + r <= m; ++r)
            for (const Bipartition& rho : bipartitions_of(m - r * r - r)) {
                Symbol s = symb(SymKind::imp, r, rho.first, rho.second);
                Bipartition t = twist_sgn(rho);
                CHECK(normalize_symbol(
                          symb(SymKind::imp, r, t.first, t.second)) ==
                      normalize_symbol(dual_symbol(s)));
            }
        for (int r = -2; r * r <= m && r <= 2; ++r)
            for (const Bipartition& rho : bipartitions_of(m - r * r)) {
                Symbol s = symb(SymKind::pair, r, rho.first, rho.second);
                Bipartition t = twist_sgn(rho);
                CHECK(normalize_symbol(
                          symb(SymKind::pair, r, t.first, t.second)) ==
                      normalize_symbol(dual_symbol(s)));
            }
    }
}

TEST_CASE("the two a-tables coincide under the zeta selection rule")
{
    for (int rp = 0; rp <= 5; ++rp)
        for (int rpp = -5; rpp <= 5; ++rpp) {
            int r1 = rp;
            int r2 = (rp % 2 == 0 ? rpp : -rpp);
            int zeta;
            if (r2 == 0)
                zeta = r1 % 2 == 0 ? 1 : -1;
            else
                zeta = ((r1 % 2 == 0 ? r2 : -r2) > 0) ? 1 : -1;
            CHECK(a_table_r(rp, rpp) == a_table_pi(zeta, r1, r2));
        }
}

TEST_CASE("cuspidal support sizes satisfy the triangular identity")
{
    for (int r1 = 0; r1 <= 5; ++r1)
        for (int r2 = -5; r2 <= 5; ++r2)
            for (int zeta : {1, -1}) {
                auto [hp, hm] = h_pm(zeta, r1, r2);
                CHECK(hp >= 0);
                CHECK(hm >= 0);
                CHECK(hp * (hp + 1) / 2 + hm * (hm + 1) / 2 ==
                      r1 * r1 + r1 + r2 * r2);
            }
}

TEST_CASE("rho_iota preserves the grading and commutes with sgn")
{
    for (int n = 1; n <= 4; ++n)
        for (int np = 0; np <= n; ++np)
            for (const Bipartition& a : bipartitions_of(np))
                for (const Bipartition& b : bipartitions_of(n - np)) {
                    RElement x;
                    x[GammaIndex{0, 0, np, n - np}][{a, b}] = Dyadic(1);
                    RElement y = rho_iota(x);
                    for (const auto& [g, block] : y) {
                        CHECK(gamma_n(g) == n);
                        for (const auto& [bp, coef] : block) {
                            CHECK(psum(bp.first.first) +
                                      psum(bp.first.second) ==
                                  g.Np);
                            CHECK(psum(bp.second.first) +
                                      psum(bp.second.second) ==
                                  g.Nm);
                        }
                    }
                    CHECK(rho_iota(sgn_tensor(x)) == sgn_tensor(y));
                }
}

TEST_CASE("fourier automorphism of the graded space is involutive")
{
    for (int n = 1; n <= 4; ++n)
        for (int np = 0; np <= n; ++np)
            for (const Bipartition& a : bipartitions_of(np))
                for (const Bipartition& b : bipartitions_of(n - np)) {
                    RElement x;
                    x[GammaIndex{0, 0, np, n - np}][{a, b}] = Dyadic(1);
                    RElement y = fourier_R(fourier_R(x));
                    for (auto& [g, block] : y)
                        for (auto it = block.begin(); it != block.end();)
                            it = it->second.is_zero() ? block.erase(it)
                                                      : std::next(it);
                    for (auto it = y.begin(); it != y.end();)
                        it = it->second.empty() ? y.erase(it)
                                                : std::next(it);
                    CHECK(y == x);
                }
}
