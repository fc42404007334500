#include "wavefront/endoscopy.hpp"

#include <algorithm>
#include <optional>

#include "wavefront/duality.hpp"
#include "wavefront/springer.hpp"
#include "wavefront/weyl.hpp"

namespace wf {

namespace {

bool contains(const Interval& D, int x)
{
    return std::find(D.begin(), D.end(), x) != D.end();
}

/* Does some interval of the given side have [j, jp] inside its index
 * range? */
bool covered_by(const IntervalSet& iv, int j, int jp)
{
    for (const auto& [a, b] : iv.jrange)
        if (a <= j && jp <= b)
            return true;
    return false;
}

} // namespace

InductionData induce(const Partition& l1, const Partition& l2)
{
    WF_REQUIRE(is_special(l1, PClass::symp), errc::wrong_class,
               "induce: first argument must be symplectic special");
    WF_REQUIRE(is_special(l2, PClass::orth_even), errc::wrong_class,
               "induce: second argument must be orthogonal-even special");
    InductionData ind;
    ind.l1 = l1;
    ind.l2 = l2;
    int Lmax = (int)std::max(l1.size(), l2.size()) + 2;
    for (int j = 1; j <= Lmax; ++j) {
        int a = part_at(l1, j), b = part_at(l2, j);
        if (!(a % 2 == 0 && b % 2 == 1))
            continue;
        if (j % 2 == 1) {
            if (j == 1 || part_at(l1, j - 1) > a || part_at(l2, j - 1) > b)
                ind.Jp.insert(j);
        } else {
            if (a > part_at(l1, j + 1) || b > part_at(l2, j + 1))
                ind.Jm.insert(j);
        }
    }
    std::vector<int> entries;
    ind.xi.assign(Lmax, 0);
    for (int j = 1; j <= Lmax; ++j) {
        int x = ind.Jp.count(j) ? 1 : ind.Jm.count(j) ? -1 : 0;
        ind.xi[j - 1] = x;
        entries.push_back(part_at(l1, j) + part_at(l2, j) + x);
    }
    ind.lam = canon(entries);
    WF_ASSERT(is_symplectic(ind.lam));
    WF_ASSERT(psum(ind.lam) == psum(l1) + psum(l2));

    ind.iv1 = interval_set(l1, PClass::symp);
    ind.iv2 = interval_set(l2, PClass::orth_even);
    std::set<int> J1min, J1max, J2min, J2max;
    for (const auto& [a, b] : ind.iv1.jrange) {
        J1min.insert(a);
        if (b != J_INF)
            J1max.insert(b);
    }
    for (const auto& [a, b] : ind.iv2.jrange) {
        J2min.insert(a);
        J2max.insert(b);
    }
    std::set<int> calJp, calJm;
    for (int j : J1min)
        if (J2min.count(j))
            calJp.insert(j);
    for (int j : J1max)
        if (J2max.count(j))
            calJm.insert(j);
    std::set<int> calJset;
    calJset.insert(J1min.begin(), J1min.end());
    calJset.insert(J1max.begin(), J1max.end());
    calJset.insert(J2min.begin(), J2min.end());
    calJset.insert(J2max.begin(), J2max.end());
    std::vector<int> calJ(calJset.begin(), calJset.end());
    calJ.push_back(J_INF);

    std::vector<RelInterval> raw;
    std::set<int> points;
    points.insert(calJp.begin(), calJp.end());
    points.insert(calJm.begin(), calJm.end());
    for (int j : points) {
        RelInterval ri;
        ri.a = ri.b = j;
        ri.is_point = true;
        raw.push_back(ri);
    }
    for (size_t t = 0; t + 1 < calJ.size(); ++t) {
        int j = calJ[t], jp = calJ[t + 1];
        bool in1 = covered_by(ind.iv1, j, jp);
        bool in2 = covered_by(ind.iv2, j, jp);
        if (in1 == in2)
            continue;
        RelInterval ri;
        ri.a = j;
        ri.b = jp;
        ri.d = in1 ? 1 : 2;
        raw.push_back(ri);
    }
    for (RelInterval& ri : raw) {
        std::set<int> vals;
        if (ri.b == J_INF) {
            for (int j = ri.a; j <= (int)ind.lam.size(); ++j)
                vals.insert(part_at(ind.lam, j));
            vals.insert(0);
        } else {
            for (int j = ri.a; j <= ri.b; ++j)
                vals.insert(part_at(ind.lam, j));
        }
        ri.D.assign(vals.rbegin(), vals.rend());
    }
    /* the relative intervals partition the even parts of lam plus 0 */
    std::set<int> seen;
    for (const RelInterval& ri : raw)
        for (int v : ri.D) {
            WF_ASSERT(!seen.count(v));
            seen.insert(v);
        }
    std::set<int> target{0};
    for (int i : jord(ind.lam))
        if (i % 2 == 0)
            target.insert(i);
    WF_ASSERT(seen == target);

    std::sort(raw.begin(), raw.end(),
              [](const RelInterval& x, const RelInterval& y) {
                  return x.D[0] > y.D[0];
              });
    ind.rel = std::move(raw);
    ind.Dmin = ind.rel.back().D;
    WF_ASSERT(contains(ind.Dmin, 0));
    for (const RelInterval& ri : ind.rel) {
        ind.jminmax[ri.D] = {ri.a, ri.b};
        if (ri.a == ri.b) {
            ind.chi[ri.D] = 0;
        } else {
            WF_ASSERT(ri.d == 1 || ri.d == 2);
            ind.chi[ri.D] = (ri.d + 1) % 2;
        }
    }
    WF_ASSERT(ind.chi.at(ind.Dmin) == 0);
    return ind;
}

bool is_regular(const InductionData& ind)
{
    for (const RelInterval& ri : ind.rel)
        if (ri.D.size() != 1)
            return false;
    return true;
}

ZetaFunctions zeta_functions(const InductionData& ind, const FamilyCoord& i1,
                             const FamilyCoord& i2)
{
    ZetaFunctions out;
    out.r1 = i1.r;
    out.r2 = i2.r;
    const auto& iv1 = ind.iv1;
    const auto& iv2 = ind.iv2;
    std::vector<Interval> int1; /* 0-free intervals of lam1 */
    for (const Interval& D : iv1.all)
        if (!contains(D, 0))
            int1.push_back(D);
    auto jmax1 = [&](const Interval& D) {
        for (size_t i = 0; i < iv1.all.size(); ++i)
            if (iv1.all[i] == D)
                return iv1.jrange[i].second;
        WF_ASSERT(false);
        return 0;
    };
    auto jmax2 = [&](const Interval& D) {
        for (size_t i = 0; i < iv2.all.size(); ++i)
            if (iv2.all[i] == D)
                return iv2.jrange[i].second;
        WF_ASSERT(false);
        return 0;
    };
    auto delta1_of = [&](const Interval& D) {
        const Interval* best = nullptr;
        for (const Interval& X : iv1.all)
            if (jmax1(X) >= ind.jminmax.at(D).second)
                if (!best || X[0] > (*best)[0])
                    best = &X;
        WF_ASSERT(best);
        return *best;
    };
    auto delta2_of = [&](const Interval& D) {
        const Interval* best = nullptr;
        for (const Interval& X : iv2.all)
            if (jmax2(X) >= ind.jminmax.at(D).second)
                if (!best || X[0] > (*best)[0])
                    best = &X;
        return best ? std::optional<Interval>(*best)
                    : std::optional<Interval>();
    };
    /* smallest interval strictly above D; whole list when D is absent */
    auto plus = [&](const std::vector<Interval>& ivs,
                    const std::optional<Interval>& D) {
        const Interval* best = nullptr;
        for (const Interval& X : ivs) {
            if (D && X[0] <= (*D)[0])
                continue;
            if (!best || X[0] < (*best)[0])
                best = &X;
        }
        return best ? std::optional<Interval>(*best)
                    : std::optional<Interval>();
    };
    auto dl1v = [&](const std::optional<Interval>& D) {
        if (!D)
            return 0;
        auto it = i1.delta.find(*D);
        return it == i1.delta.end() ? 0 : it->second;
    };
    auto dl2v = [&](const std::optional<Interval>& D) {
        if (!D)
            return 0;
        auto it = i2.delta.find(*D);
        return it == i2.delta.end() ? 0 : it->second;
    };
    for (const RelInterval& ri : ind.rel) {
        const Interval& D = ri.D;
        int jmx = ri.b;
        Interval D1 = delta1_of(D);
        std::optional<Interval> D2 = delta2_of(D);
        std::optional<Interval> D1p = plus(int1, D1);
        std::optional<Interval> D2p = plus(iv2.all, D2);
        if (ri.a != ri.b) {
            WF_ASSERT(ri.d == 1 || ri.d == 2);
            if (ri.d == 1) {
                int t = (i1.tau.at(D1) + dl2v(D2p) + i2.r) % 2;
                t = (t % 2 + 2) % 2;
                out.taup[D] = t;
                out.taum[D] = t;
            } else {
                int t = (dl1v(D1p) + i2.tau.at(*D2) + i1.r) % 2;
                t = (t % 2 + 2) % 2;
                out.taup[D] = t;
                out.taum[D] = (t + 1) % 2;
            }
        } else if (ind.Jp.count(ri.a)) {
            int t = ((i1.tau.at(D1) + dl2v(D2p) + i2.r) % 2 + 2) % 2;
            out.taup[D] = t;
            out.taum[D] = t;
        } else {
            WF_ASSERT(ind.Jm.count(ri.a));
            int t = ((i1.tau.at(D1) + dl2v(D2) + i2.r) % 2 + 2) % 2;
            out.taup[D] = t;
            out.taum[D] = t;
        }
        if (contains(D, 0))
            continue;
        if (ind.Jp.count(jmx)) {
            int v = ((i1.tau.at(D1) + i2.tau.at(*D2) + i1.r + i2.r + 1) % 2 +
                     2) %
                    2;
            out.dlp[D] = v;
            out.dlm[D] = (v + 1) % 2;
        } else if (ind.Jm.count(jmx)) {
            int v = (i1.delta.at(D1) + dl2v(D2)) % 2;
            out.dlp[D] = v;
            out.dlm[D] = v;
        } else {
            WF_ASSERT(ri.a != ri.b && (ri.d == 1 || ri.d == 2));
            int v;
            if (ri.d == 1)
                v = (i1.delta.at(D1) + dl2v(D2p)) % 2;
            else
                v = (dl1v(D1p) + i2.delta.at(*D2)) % 2;
            out.dlp[D] = v;
            out.dlm[D] = v;
        }
    }
    WF_ASSERT(out.taup.at(ind.Dmin) == 0 && out.taum.at(ind.Dmin) == 0);
    return out;
}

long long c_zeta(const InductionData& ind, const ZetaFunctions& fns,
                 int zeta)
{
    const auto& tau = zeta == 1 ? fns.taup : fns.taum;
    const auto& dl = zeta == 1 ? fns.dlp : fns.dlm;
    std::vector<Interval> ints;
    for (const RelInterval& ri : ind.rel)
        if (!contains(ri.D, 0))
            ints.push_back(ri.D); /* decreasing order */
    long long total = 0;
    for (size_t idx = 0; idx < ints.size(); ++idx) {
        /* neighbor above D; an absent neighbor contributes delta = 0 */
        int dDp = idx >= 1 ? dl.at(ints[idx - 1]) : 0;
        long long t = 1 - (tau.at(ints[idx]) % 2 ? -1 : 1);
        long long d = (dl.at(ints[idx]) % 2 ? -1 : 1) - (dDp % 2 ? -1 : 1);
        total += t * d;
    }
    return total;
}

long long c_zeta_expected(int r1, int r2, int zeta)
{
    if ((r1 + r2) % 2 == 0)
        return 2LL * (r1 + zeta * r2);
    return -2LL * (r1 + zeta * r2 + 1);
}

std::vector<std::pair<Partition, Partition>>
multiset_splits(const Partition& lam, long long size_plus)
{
    size_t n = lam.size();
    WF_REQUIRE(n <= 24, errc::bound_exceeded, "multiset split bound");
    std::set<std::pair<Partition, Partition>> seen;
    std::vector<std::pair<Partition, Partition>> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Partition plus, minus;
        long long s = 0;
        for (size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                plus.push_back(lam[i]);
                s += lam[i];
            } else {
                minus.push_back(lam[i]);
            }
        }
        if (s != size_plus)
            continue;
        plus = canon(plus);
        minus = canon(minus);
        if (!seen.insert({plus, minus}).second)
            continue;
        if (is_symplectic(plus) && is_symplectic(minus))
            out.emplace_back(plus, minus);
    }
    return out;
}

std::vector<Quad> i_zeta_max(const InductionData& ind,
                             const ZetaFunctions& fns, int zeta, int nu,
                             int nplus, int nminus)
{
    WF_REQUIRE(zeta == 1 || zeta == -1, errc::invalid_input, "bad zeta");
    WF_REQUIRE(nu == 1 || nu == -1, errc::invalid_input, "bad nu");
    int zn = zeta * nu;
    const auto& tau_p = zn == 1 ? fns.taup : fns.taum;
    const auto& tau_m = zn == 1 ? fns.taum : fns.taup;
    const auto& dl_p = zn == 1 ? fns.dlp : fns.dlm;
    const auto& dl_m = zn == 1 ? fns.dlm : fns.dlp;
    std::vector<Quad> out;
    for (const auto& [lp, lm] : multiset_splits(ind.lam, 2LL * nplus)) {
        (void)nminus;
        bool ok = true;
        for (const RelInterval& ri : ind.rel) {
            if (contains(ri.D, 0))
                continue;
            int imin = ri.D.back();
            if (mult_ge(lp, imin) % 2 != dl_p.at(ri.D) ||
                mult_ge(lm, imin) % 2 != dl_m.at(ri.D)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        Quad q;
        q.lp = lp;
        q.lm = lm;
        for (const RelInterval& ri : ind.rel)
            for (int i : ri.D) {
                if (i == 0)
                    continue;
                if (mult_of(lp, i) > 0)
                    q.ep[i] = tau_p.at(ri.D) % 2 ? -1 : 1;
                if (mult_of(lm, i) > 0)
                    q.em[i] = tau_m.at(ri.D) % 2 ? -1 : 1;
            }
        out.push_back(std::move(q));
    }
    return out;
}

std::pair<FamilyCoord, FamilyCoord>
reconstruct_iotas(const InductionData& ind, const ZetaFunctions& fns)
{
    std::vector<std::pair<FamilyCoord, FamilyCoord>> hits;
    for (const Symbol& s1 : family_enumerate(ind.l1, PClass::symp)) {
        FamilyCoord c1 = tau_delta(ind.l1, PClass::symp, s1);
        if (c1.r != fns.r1)
            continue;
        for (const Symbol& s2 : family_enumerate(ind.l2, PClass::orth_even)) {
            FamilyCoord c2 = tau_delta(ind.l2, PClass::orth_even, s2);
            if (c2.r != fns.r2)
                continue;
            ZetaFunctions got = zeta_functions(ind, c1, c2);
            if (got.taup == fns.taup && got.taum == fns.taum &&
                got.dlp == fns.dlp && got.dlm == fns.dlm)
                hits.emplace_back(c1, c2);
        }
    }
    WF_REQUIRE(hits.size() == 1, errc::invalid_input,
               "reconstruct_iotas: hypotheses violated, " +
                   std::to_string(hits.size()) + " matches");
    return hits[0];
}

std::vector<std::pair<Partition, Partition>>
splits_for_chi(const Partition& lam, const std::map<int, int>& chi)
{
    WF_REQUIRE(is_symplectic(lam), errc::wrong_class,
               "splits_for_chi: lambda must be symplectic");
    for (const auto& [i, v] : chi) {
        WF_REQUIRE(v == 0 || v == 1, errc::invalid_input, "chi values in 0/1");
        WF_REQUIRE(i == 0 || (i % 2 == 0 && mult_of(lam, i) > 0),
                   errc::invalid_input, "chi keys must be even parts or 0");
        if (i == 0 || mult_of(lam, i) == 1)
            WF_REQUIRE(v == 0, errc::invalid_input,
                       "chi must vanish on 0 and on multiplicity-1 parts");
    }
    auto chi_at = [&](int i) {
        auto it = chi.find(i);
        return it == chi.end() ? 0 : it->second;
    };
    long long n = psum(lam) / 2;
    Partition dl = dual(lam, PClass::symp);
    std::vector<std::pair<Partition, Partition>> out;
    for (long long n1 = n; n1 >= 0; --n1) {
        long long n2 = n - n1;
        for (const Partition& l1 : symp_special_partitions(2 * (int)n1)) {
            for (const Partition& l2 :
                 orth_even_special_partitions(2 * (int)n2)) {
                InductionData ind;
                try {
                    ind = induce(l1, l2);
                } catch (const error&) {
                    continue;
                }
                if (ind.lam != lam || !is_regular(ind))
                    continue;
                if (punion(dual(l1, PClass::symp),
                           dual(l2, PClass::orth_even)) != dl)
                    continue;
                bool ok = true;
                for (const RelInterval& ri : ind.rel) {
                    int want = ind.chi.at(ri.D);
                    for (int i : ri.D)
                        if (i != 0 && i % 2 == 0 && chi_at(i) != want)
                            ok = false;
                }
                if (ok)
                    out.emplace_back(l1, l2);
            }
        }
    }
    return out;
}

std::pair<Partition, Partition>
split_for_chi(const Partition& lam, const std::map<int, int>& chi)
{
    auto all = splits_for_chi(lam, chi);
    WF_REQUIRE(!all.empty(), errc::invalid_input,
               "split_for_chi: no split realizes this chi");
    return all[0];
}

std::vector<std::pair<Quad, long long>>
i_zeta_bruteforce(const Partition& l1, const FamilyCoord& i1,
                  const Partition& l2, const FamilyCoord& i2, int zeta,
                  int nplus, int nminus)
{
    WF_REQUIRE(psum(l1) + psum(l2) <= 24, errc::bound_exceeded,
               "i_zeta_bruteforce bound");
    PairRep pi = pi_zeta(l1, i1, l2, i2, zeta, nplus, nminus);
    auto [hp, hm] = h_pm(zeta, i1.r, i2.r);
    std::vector<std::pair<Quad, long long>> out;
    for (const auto& [pr, m] : pi) {
        SpringerDatum dp{hp, pr.first};
        SpringerDatum dm{hm, pr.second};
        SignedPartition sp = springer_inv(PClass::symp, dp, nplus);
        SignedPartition sm = springer_inv(PClass::symp, dm, nminus);
        Quad q;
        q.lp = sp.lam;
        q.ep = sp.eps;
        q.lm = sm.lam;
        q.em = sm.eps;
        out.emplace_back(std::move(q), m);
    }
    return out;
}

} // namespace wf
