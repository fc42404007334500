#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wavefront/springer.hpp"

using namespace wf;

namespace {

SignedPartition make(Partition lam, PClass cls, std::vector<int> signs)
{
    SignedPartition sp;
    sp.lam = std::move(lam);
    sp.cls = cls;
    std::vector<int> jj = jord(sp.lam);
    int bp = cls == PClass::symp ? 0 : 1;
    size_t pos = 0;
    for (int i : jj)
        if (i % 2 == bp)
            sp.eps[i] = signs.at(pos++);
    check_signed(sp);
    return sp;
}

} // namespace

TEST_CASE("cuspidal-support integer, pinned rows")
{
    CHECK(k_of(make({6, 4, 2}, PClass::symp, {1, 1, -1})) == 1);
    CHECK(k_of(make({6, 4, 2}, PClass::symp, {1, -1, 1})) == 2);
    CHECK(k_of(make({6, 4, 2}, PClass::symp, {-1, 1, -1})) == 3);
    CHECK(k_of(make({2, 2}, PClass::symp, {1})) == 0);
}

TEST_CASE("parametrization round trips, symplectic")
{
    for (int m = 0; m <= 12; m += 2)
        for (const SignedPartition& sp : signed_partitions(PClass::symp, m)) {
            SpringerDatum d = springer(sp);
            CHECK(d.k == k_of(sp));
            long long N = m / 2;
            CHECK(psum(d.rho.first) + psum(d.rho.second) ==
                  N - (long long)d.k * (d.k + 1) / 2);
            CHECK(springer_inv(PClass::symp, d, N) == sp);
        }
}

TEST_CASE("parametrization round trips, orthogonal")
{
    for (int m = 1; m <= 13; m += 2)
        for (const SignedPartition& sp :
             signed_partitions(PClass::orth_odd, m)) {
            SpringerDatum d = springer(sp);
            CHECK(d.k % 2 == 1);
            long long N = (m - 1) / 2;
            CHECK(psum(d.rho.first) + psum(d.rho.second) ==
                  N - ((long long)d.k * d.k - 1) / 2);
            CHECK(springer_inv(PClass::orth_odd, d, N) == sp);
        }
    for (int m = 0; m <= 12; m += 2)
        for (const SignedPartition& sp :
             signed_partitions(PClass::orth_even, m)) {
            SpringerDatum d = springer(sp);
            CHECK(d.k % 2 == 0);
            long long N = m / 2;
            CHECK(psum(d.rho.first) + psum(d.rho.second) ==
                  N - (long long)d.k * d.k / 2);
            CHECK(springer_inv(PClass::orth_even, d, N) == sp);
        }
}

TEST_CASE("parametrization is a bijection onto the stated codomain")
{
    for (int m = 0; m <= 10; m += 2) {
        std::set<SpringerDatum> seen;
        long long count = 0;
        for (const SignedPartition& sp :
             signed_partitions(PClass::symp, m)) {
            CHECK(seen.insert(springer(sp)).second);
            ++count;
        }
        long long expect = 0;
        long long N = m / 2;
        for (int k = 0; (long long)k * (k + 1) / 2 <= N; ++k) {
            long long rest = N - (long long)k * (k + 1) / 2;
            for (int sa = 0; sa <= rest; ++sa)
                expect += (long long)all_partitions(sa).size() *
                          all_partitions((int)rest - sa).size();
        }
        CHECK(count == expect);
    }
}

TEST_CASE("all-plus signs recover the ordinary parametrization")
{
    for (int m = 0; m <= 12; m += 2)
        for (const Partition& lam : symp_special_partitions(m)) {
            SignedPartition sp;
            sp.lam = lam;
            sp.cls = PClass::symp;
            for (int i : jord(lam))
                if (i % 2 == 0)
                    sp.eps[i] = 1;
            SpringerDatum d = springer(sp);
            CHECK(d.k == 0);
            CHECK(d.rho == ordinary_springer_special(lam, PClass::symp));
        }
}

TEST_CASE("ordinary bipartition of a special partition")
{
    CHECK(ordinary_springer_special({}, PClass::symp) ==
          Bipartition{{}, {}});
    for (int m = 0; m <= 12; m += 2)
        for (const Partition& lam : orth_even_special_partitions(m)) {
            Bipartition b =
                ordinary_springer_special(lam, PClass::orth_even);
            CHECK(b.first >= b.second);
        }
}

TEST_CASE("signed partition validation")
{
    SignedPartition sp;
    sp.lam = {6, 4, 2};
    sp.cls = PClass::symp;
    sp.eps = {{6, 1}, {4, 1}};
    CHECK_THROWS_AS(check_signed(sp), error);

    sp.eps = {{6, 1}, {4, 1}, {2, 1}, {3, 1}};
    CHECK_THROWS_AS(check_signed(sp), error);

    /* orthogonal quotient representative must start with +1 */
    sp.lam = {3, 3, 1};
    sp.cls = PClass::orth_odd;
    sp.eps = {{3, -1}, {1, 1}};
    CHECK_THROWS_AS(check_signed(sp), error);
}
