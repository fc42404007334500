#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "wavefront/symbol.hpp"

using namespace wf;

namespace {

/* All (r, alpha, beta) triples of the given rank, per kind. */
std::vector<std::tuple<int, Partition, Partition>> all_triples(SymKind kind,
                                                               int m)
{
    std::vector<std::tuple<int, Partition, Partition>> out;
    for (int r = -m; r <= m; ++r) {
        if (kind == SymKind::imp && r < 0)
            continue;
        long long used = kind == SymKind::imp ? (long long)r * r + r
                                              : (long long)r * r;
        if (used > m)
            continue;
        int rest = m - (int)used;
        for (int sa = 0; sa <= rest; ++sa)
            for (const Partition& a : all_partitions(sa))
                for (const Partition& b : all_partitions(rest - sa))
                    out.push_back({r, a, b});
    }
    return out;
}

} // namespace

TEST_CASE("rank, defect and r")
{
    SymbolStats st = symbol_stats({{1}, {}, SymKind::imp});
    CHECK(st.rank == 1);
    CHECK(st.defect == 1);
    CHECK(st.r == 0);

    st = symbol_stats({{2, 0}, {1}, SymKind::imp});
    CHECK(st.rank == 2);
    CHECK(st.defect == 1);
    CHECK(st.r == 0);

    st = symbol_stats({{0}, {0}, SymKind::pair});
    CHECK(st.rank == 0);
    CHECK(st.defect == 0);
    CHECK(st.r == 0);
}

TEST_CASE("stats are shift invariant")
{
    Symbol s{{3, 1}, {2}, SymKind::imp};
    SymbolStats st = symbol_stats(s);
    Symbol e = expand_symbol(s, 3);
    SymbolStats ste = symbol_stats(e);
    CHECK(st.rank == ste.rank);
    CHECK(st.defect == ste.defect);
    CHECK(normalize_symbol(e) == normalize_symbol(s));
}

TEST_CASE("symb, pinned values")
{
    Symbol s = symb(SymKind::imp, 0, {1}, {});
    CHECK(normalize_symbol(s) == Symbol{{1}, {}, SymKind::imp});

    s = symb(SymKind::imp, 1, {}, {});
    CHECK(s == Symbol{{2, 1, 0}, {}, SymKind::imp});
    CHECK(symbol_stats(s).rank == 2);
    CHECK(symbol_stats(s).defect == 3);

    s = symb(SymKind::pair, -1, {}, {});
    CHECK(normalize_symbol(s) == Symbol{{}, {1, 0}, SymKind::pair});

    CHECK_THROWS_AS(symb(SymKind::imp, -1, {}, {}), error);
}

TEST_CASE("symb round trips exhaustively")
{
    for (int m = 0; m <= 6; ++m)
        for (SymKind kind : {SymKind::imp, SymKind::pair})
            for (const auto& [r, a, b] : all_triples(kind, m)) {
                Symbol s = symb(kind, r, a, b);
                CHECK(symbol_stats(s).rank == m);
                CHECK(symbol_stats(s).r == r);
                auto [r2, a2, b2] = symb_inv(s);
                CHECK(r2 == r);
                CHECK(a2 == a);
                CHECK(b2 == b);
            }
}

TEST_CASE("special symbols interleave")
{
    for (int m = 0; m <= 12; m += 2) {
        for (const Partition& lam : symp_special_partitions(m)) {
            Symbol s = special_symbol(lam, PClass::symp);
            REQUIRE(s.X.size() == s.Y.size() + 1);
            for (size_t i = 0; i < s.Y.size(); ++i) {
                CHECK(s.X[i] >= s.Y[i]);
                CHECK(s.Y[i] >= s.X[i + 1]);
            }
        }
        for (const Partition& lam : orth_even_special_partitions(m)) {
            Symbol s = special_symbol(lam, PClass::orth_even);
            REQUIRE(s.X.size() == s.Y.size());
            for (size_t i = 0; i < s.Y.size(); ++i) {
                CHECK(s.X[i] >= s.Y[i]);
                if (i + 1 < s.X.size())
                    CHECK(s.Y[i] >= s.X[i + 1]);
            }
        }
    }
}

TEST_CASE("family sizes are powers of four")
{
    CHECK(family_enumerate({2, 2}, PClass::symp).size() == 4);
    CHECK(family_enumerate({}, PClass::symp).size() == 1);
    for (int m = 0; m <= 10; m += 2)
        for (const Partition& lam : symp_special_partitions(m)) {
            size_t e = 0;
            for (const Interval& d : intervals_symp(lam))
                if (std::find(d.begin(), d.end(), 0) == d.end())
                    ++e;
            CHECK(family_enumerate(lam, PClass::symp).size() ==
                  (size_t)1 << (2 * e));
        }
}

TEST_CASE("families partition the symbol set")
{
    for (int m = 0; m <= 6; ++m) {
        size_t total = all_triples(SymKind::imp, m).size();
        size_t found = 0;
        std::set<Symbol> seen;
        for (const Partition& lam : symp_special_partitions(2 * m))
            for (const Symbol& s : family_enumerate(lam, PClass::symp)) {
                Symbol n = normalize_symbol(s);
                CHECK(seen.insert(n).second);
                CHECK(family_of(n) == lam);
                ++found;
            }
        CHECK(found == total);
    }
}

TEST_CASE("coordinates round trip and vanish at the special symbol")
{
    for (int m = 0; m <= 10; m += 2)
        for (PClass c : {PClass::symp, PClass::orth_even}) {
            auto specials = c == PClass::symp
                                ? symp_special_partitions(m)
                                : orth_even_special_partitions(m);
            for (const Partition& lam : specials) {
                FamilyCoord fc =
                    tau_delta(lam, c, special_symbol(lam, c));
                CHECK(fc.r == 0);
                for (const auto& [d, v] : fc.tau)
                    CHECK(v == 0);
                for (const auto& [d, v] : fc.delta)
                    CHECK(v == 0);
                for (const Symbol& s : family_enumerate(lam, c))
                    CHECK(normalize_symbol(coord_inv(
                              lam, c, tau_delta(lam, c, s))) ==
                          normalize_symbol(s));
            }
        }
}

TEST_CASE("swapping a pair symbol shifts tau by one")
{
    for (int m = 0; m <= 10; m += 2)
        for (const Partition& lam : orth_even_special_partitions(m))
            for (const Symbol& s : family_enumerate(lam, PClass::orth_even)) {
                Symbol sw = s;
                std::swap(sw.X, sw.Y);
                FamilyCoord a = tau_delta(lam, PClass::orth_even, s);
                FamilyCoord b = tau_delta(lam, PClass::orth_even, sw);
                CHECK(a.delta == b.delta);
                for (const auto& [d, v] : a.tau)
                    CHECK((v + 1) % 2 == b.tau.at(d));
            }
}

TEST_CASE("pairing basics")
{
    for (int m = 0; m <= 10; m += 2)
        for (PClass c : {PClass::symp, PClass::orth_even}) {
            auto specials = c == PClass::symp
                                ? symp_special_partitions(m)
                                : orth_even_special_partitions(m);
            for (const Partition& lam : specials) {
                Symbol sp = special_symbol(lam, c);
                CHECK(pairing(lam, c, sp, sp) == 0);
            }
        }
}

TEST_CASE("pairing shifts by r under the pair-kind swap")
{
    for (int m = 0; m <= 8; m += 2)
        for (const Partition& lam : orth_even_special_partitions(m)) {
            auto fam = family_enumerate(lam, PClass::orth_even);
            for (const Symbol& a : fam) {
                Symbol sw = a;
                std::swap(sw.X, sw.Y);
                for (const Symbol& b : fam) {
                    int lhs = pairing(lam, PClass::orth_even, sw, b);
                    int rhs = (symbol_stats(b).r +
                               pairing(lam, PClass::orth_even, a, b)) %
                              2;
                    CHECK(lhs == ((rhs % 2) + 2) % 2);
                }
            }
        }
}

TEST_CASE("fourier transform is involutive with dyadic coefficients")
{
    for (int m = 0; m <= 10; m += 2)
        for (PClass c : {PClass::symp, PClass::orth_even}) {
            auto specials = c == PClass::symp
                                ? symp_special_partitions(m)
                                : orth_even_special_partitions(m);
            for (const Partition& lam : specials) {
                auto fam = family_enumerate(lam, c);
                for (const Symbol& s : fam) {
                    auto once = fourier_apply(s);
                    CHECK(once.size() == fam.size());
                    for (const auto& [t, coef] : once)
                        CHECK(coef.num * coef.num == 1);
                    auto twice = fourier_apply(once);
                    REQUIRE(twice.size() == 1);
                    CHECK(normalize_symbol(twice[0].first) ==
                          normalize_symbol(s));
                    CHECK(twice[0].second == Dyadic(1));
                }
            }
        }
}

TEST_CASE("symbol complement duality")
{
    for (int m = 0; m <= 6; ++m)
        for (SymKind kind : {SymKind::imp, SymKind::pair})
            for (const auto& [r, a, b] : all_triples(kind, m)) {
                Symbol s = symb(kind, r, a, b);
                Symbol d = dual_symbol(s);
                CHECK(symbol_stats(d).rank == m);
                CHECK(normalize_symbol(dual_symbol(d)) ==
                      normalize_symbol(s));
            }
}
