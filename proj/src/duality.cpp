#include "wavefront/duality.hpp"

#include <algorithm>
#include <set>

#include "wavefront/symbol.hpp"

namespace wf {

static bool contains(const std::vector<int>& v, int x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<Interval> intervals_symp(const Partition& lam)
{
    WF_REQUIRE(is_symplectic(lam), errc::wrong_class,
               "intervals_symp needs a symplectic partition");
    WF_REQUIRE(is_special_symp(lam), errc::not_special,
               "intervals_symp needs a special partition");
    std::vector<int> ii;
    for (int i : jord(lam))
        if (i % 2 == 0 && mult_of(lam, i) % 2 == 1)
            ii.push_back(i);
    if (ii.size() % 2 == 1)
        ii.push_back(0);
    std::vector<Interval> out;
    std::set<int> covered;
    std::vector<int> bp0 = jord(lam);
    bp0.push_back(0);
    for (size_t h = 0; h + 1 < ii.size() + (ii.empty() ? 0 : 1); h += 2) {
        if (h + 1 >= ii.size())
            break;
        int hi = ii[h], lo = ii[h + 1];
        std::set<int> vals;
        for (int i : bp0)
            if (lo <= i && i <= hi)
                vals.insert(i);
        out.emplace_back(vals.rbegin(), vals.rend());
        covered.insert(vals.begin(), vals.end());
    }
    for (int i : bp0)
        if (i % 2 == 0 && !covered.count(i))
            out.push_back({i});
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a[0] > b[0]; });
    WF_ASSERT(!out.empty() && contains(out.back(), 0));
    return out;
}

std::vector<Interval> intervals_orth_even(const Partition& lam)
{
    WF_REQUIRE(is_orthogonal(lam), errc::wrong_class,
               "intervals_orth_even needs an orthogonal partition");
    WF_REQUIRE(is_special_orth_even(lam), errc::not_special,
               "intervals_orth_even needs a special partition");
    std::vector<int> ii;
    for (int i : jord(lam))
        if (i % 2 == 1 && mult_of(lam, i) % 2 == 1)
            ii.push_back(i);
    WF_ASSERT(ii.size() % 2 == 0);
    std::vector<Interval> out;
    std::set<int> covered;
    for (size_t h = 0; h + 1 < ii.size() + (ii.empty() ? 0 : 1); h += 2) {
        if (h + 1 >= ii.size())
            break;
        int hi = ii[h], lo = ii[h + 1];
        std::set<int> vals;
        for (int i : jord(lam))
            if (lo <= i && i <= hi)
                vals.insert(i);
        out.emplace_back(vals.rbegin(), vals.rend());
        covered.insert(vals.begin(), vals.end());
    }
    for (int i : jord(lam))
        if (i % 2 == 1 && !covered.count(i))
            out.push_back({i});
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a[0] > b[0]; });
    return out;
}

IntervalSet interval_set(const Partition& lam, PClass c)
{
    WF_REQUIRE(c != PClass::orth_odd, errc::wrong_class,
               "interval data implemented for symp and orth_even");
    IntervalSet out;
    out.all = c == PClass::symp ? intervals_symp(lam)
                                : intervals_orth_even(lam);
    int nzero = 0;
    for (int x : lam)
        if (x > 0)
            ++nzero;
    int jz = nzero + 1; /* first index holding an implicit zero part */
    for (const Interval& D : out.all) {
        std::vector<int> js;
        for (int j = 1; j <= (int)lam.size(); ++j)
            if (contains(D, part_at(lam, j)))
                js.push_back(j);
        if (contains(D, 0)) {
            int jmin = jz;
            for (int j : js)
                jmin = std::min(jmin, j);
            out.jrange.emplace_back(jmin, J_INF);
        } else {
            WF_ASSERT(!js.empty());
            out.jrange.emplace_back(js.front(), js.back());
        }
        if (!contains(D, 0))
            out.nomin.push_back(D);
    }
    return out;
}

ZetaData zeta_s(const Partition& lam, PClass c)
{
    ZetaData z;
    int L = (int)lam.size() + 2;
    if (c == PClass::symp) {
        WF_REQUIRE(is_symplectic(lam), errc::wrong_class,
                   "zeta_s symp needs a symplectic partition");
        for (int j = 1; j <= L; ++j) {
            int lj = part_at(lam, j);
            if (lj % 2 == 0) {
                if (j % 2 == 1 && (j == 1 || part_at(lam, j - 1) > lj))
                    z.Pp.push_back(j);
                if (j % 2 == 0 && lj > part_at(lam, j + 1))
                    z.Pm.push_back(j);
            } else {
                if (j % 2 == 0 && part_at(lam, j - 1) > lj)
                    z.Qp.push_back(j);
                if (j % 2 == 1 && lj > part_at(lam, j + 1))
                    z.Qm.push_back(j);
            }
        }
    } else if (c == PClass::orth_even) {
        WF_REQUIRE(is_special(lam, PClass::orth_even), errc::not_special,
                   "zeta_s orth_even needs a special partition");
        for (int j = 1; j <= L; ++j) {
            int lj = part_at(lam, j);
            if (lj % 2 == 1) {
                if (j % 2 == 1 && (j == 1 || part_at(lam, j - 1) > lj))
                    z.Pp.push_back(j);
                if (j % 2 == 0 && lj > part_at(lam, j + 1))
                    z.Pm.push_back(j);
            }
        }
    } else {
        fail(errc::wrong_class, "zeta_s defined for symp and orth_even");
    }
    int zl = 0;
    for (int j : z.Pp)
        zl = std::max(zl, j);
    for (int j : z.Pm)
        zl = std::max(zl, j);
    z.zeta.assign(zl, 0);
    for (int j : z.Pp)
        z.zeta[j - 1] = 1;
    for (int j : z.Pm)
        z.zeta[j - 1] = -1;
    int sl = 0;
    for (int j : z.Qp)
        sl = std::max(sl, j);
    for (int j : z.Qm)
        sl = std::max(sl, j);
    z.s.assign(sl, 0);
    for (int j : z.Qp)
        z.s[j - 1] = 1;
    for (int j : z.Qm)
        z.s[j - 1] = -1;
    return z;
}

Partition sp_closure(const Partition& lam)
{
    ZetaData z = zeta_s(lam, PClass::symp);
    Partition out = add_sequence(lam, z.s);
    WF_ASSERT(is_special(out, PClass::symp));
    return out;
}

Partition sp_closure_orth_brute(const Partition& lam)
{
    WF_REQUIRE(is_orthogonal(lam), errc::wrong_class,
               "sp_closure_orth_brute needs an orthogonal partition");
    long long M = psum(lam);
    WF_REQUIRE(M <= 40, errc::bound_exceeded,
               "orthogonal closure bound exceeded");
    PClass c = M % 2 == 1 ? PClass::orth_odd : PClass::orth_even;
    std::vector<Partition> above;
    for (const Partition& p : all_partitions((int)M))
        if (is_special(p, c) && dominance_leq(lam, p))
            above.push_back(p);
    WF_ASSERT(!above.empty());
    Partition best = above[0];
    for (const Partition& p : above)
        if (dominance_leq(p, best))
            best = p;
    for (const Partition& p : above)
        WF_ASSERT(dominance_leq(best, p));
    return best;
}

Partition dual(const Partition& lam, PClass c)
{
    switch (c) {
    case PClass::symp: {
        WF_REQUIRE(is_symplectic(lam), errc::wrong_class,
                   "dual symp needs a symplectic partition");
        ZetaData z = zeta_s(lam, PClass::symp);
        return transpose(add_sequence(lam, z.zeta));
    }
    case PClass::orth_even: {
        ZetaData z = zeta_s(lam, PClass::orth_even);
        return transpose(add_sequence(lam, z.zeta));
    }
    case PClass::orth_odd: {
        WF_REQUIRE(is_class(lam, PClass::orth_odd), errc::wrong_class,
                   "dual orth_odd needs an odd orthogonal partition");
        Partition sp = sp_closure_orth_brute(lam);
        Symbol s = dual_symbol(ordinary_symbol_orth_odd(sp));
        Partition out = ordinary_symbol_symp_inv(s);
        WF_ASSERT(is_special(out, PClass::symp));
        return out;
    }
    }
    fail(errc::wrong_class, "bad class");
}

Partition dual_symbol_route(const Partition& lam, PClass c)
{
    switch (c) {
    case PClass::symp: {
        Partition sp = sp_closure(lam);
        Symbol s = dual_symbol(ordinary_symbol_symp(sp));
        return ordinary_symbol_orth_odd_inv(s);
    }
    case PClass::orth_even: {
        /* complement followed by the side swap; pair symbols pick up a
         * sigma twist under duality of the underlying partitions */
        Symbol s = dual_symbol(ordinary_symbol_orth_even(lam));
        std::swap(s.X, s.Y);
        return ordinary_symbol_orth_even_inv(s);
    }
    case PClass::orth_odd:
        return dual(lam, PClass::orth_odd);
    }
    fail(errc::wrong_class, "bad class");
}

Partition orth_collapse(const Partition& nu, long long M)
{
    WF_REQUIRE(psum(nu) == M, errc::invalid_input,
               "orth_collapse: total mismatch");
    std::vector<int> v(nu);
    for (;;) {
        /* largest even part with odd multiplicity */
        int a = -1;
        for (int p : jord(Partition(v.begin(), v.end())))
            if (p % 2 == 0 && mult_of(v, p) % 2 == 1) {
                a = p;
                break;
            }
        if (a < 0)
            break;
        int q = -1;
        for (int i = 0; i < (int)v.size(); ++i)
            if (v[i] == a)
                q = i;
        v[q] -= 1;
        int r = -1;
        for (int i = q + 1; i < (int)v.size(); ++i)
            if (v[i] <= a - 2) {
                r = i;
                break;
            }
        if (r < 0)
            v.push_back(1);
        else
            v[r] += 1;
        v = canon(v);
    }
    Partition out = canon(v);
    WF_ASSERT(is_orthogonal(out) && dominance_leq(out, nu));
    return out;
}

Partition orth_collapse_brute(const Partition& nu, long long M)
{
    WF_REQUIRE(M <= 40, errc::bound_exceeded, "collapse bound exceeded");
    std::vector<Partition> below;
    for (const Partition& p : all_partitions((int)M))
        if (is_orthogonal(p) && dominance_leq(p, nu))
            below.push_back(p);
    WF_REQUIRE(!below.empty(), errc::invalid_input,
               "no orthogonal partition below nu");
    Partition best = below[0];
    for (const Partition& p : below)
        if (dominance_leq(best, p))
            best = p;
    for (const Partition& p : below)
        WF_ASSERT(dominance_leq(p, best));
    return best;
}

} // namespace wf
