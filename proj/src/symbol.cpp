#include "wavefront/symbol.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace wf {

static std::vector<int> sorted_desc(std::set<int> s)
{
    return std::vector<int>(s.rbegin(), s.rend());
}

static bool contains(const std::vector<int>& v, int x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

Symbol normalize_symbol(Symbol s)
{
    std::set<int> X(s.X.begin(), s.X.end());
    std::set<int> Y(s.Y.begin(), s.Y.end());
    while (X.count(0) && Y.count(0)) {
        std::set<int> X2, Y2;
        for (int x : X)
            if (x != 0)
                X2.insert(x - 1);
        for (int y : Y)
            if (y != 0)
                Y2.insert(y - 1);
        X.swap(X2);
        Y.swap(Y2);
    }
    return Symbol{sorted_desc(std::move(X)), sorted_desc(std::move(Y)),
                  s.kind};
}

Symbol expand_symbol(Symbol s, int times)
{
    std::set<int> X(s.X.begin(), s.X.end());
    std::set<int> Y(s.Y.begin(), s.Y.end());
    for (int t = 0; t < times; ++t) {
        std::set<int> X2{0}, Y2{0};
        for (int x : X)
            X2.insert(x + 1);
        for (int y : Y)
            Y2.insert(y + 1);
        X.swap(X2);
        Y.swap(Y2);
    }
    return Symbol{sorted_desc(std::move(X)), sorted_desc(std::move(Y)),
                  s.kind};
}

SymbolStats symbol_stats(const Symbol& s)
{
    long long n = (long long)s.X.size() + (long long)s.Y.size();
    long long rg = 0;
    for (int x : s.X)
        rg += x;
    for (int y : s.Y)
        rg += y;
    if (n >= 1)
        rg -= (n - 1) * (n - 1) / 4;
    int d = (int)s.X.size() - (int)s.Y.size();
    int defect = d >= 0 ? d : -d;
    int r;
    if (s.kind == SymKind::imp) {
        WF_REQUIRE(d > 0 && d % 2 == 1, errc::invalid_input,
                   "imp symbol must have positive odd defect");
        r = (d - 1) / 2;
    } else {
        WF_REQUIRE(d % 2 == 0, errc::invalid_input,
                   "pair symbol must have even defect");
        r = d / 2;
    }
    return SymbolStats{rg, defect, r};
}

Symbol symb(SymKind kind, int r, const Partition& alpha, const Partition& beta)
{
    std::vector<int> X, Y;
    if (kind == SymKind::imp) {
        WF_REQUIRE(r >= 0, errc::invalid_input, "imp symbol needs r >= 0");
        int a = std::max((int)beta.size(), (int)alpha.size() - 2 * r - 1);
        for (int i = 1; i <= a + 2 * r + 1; ++i)
            X.push_back(part_at(alpha, i) + (a + 2 * r + 1 - i));
        for (int i = 1; i <= a; ++i)
            Y.push_back(part_at(beta, i) + (a - i));
    } else {
        int ar = r >= 0 ? r : -r;
        int a = std::max((int)beta.size(), (int)alpha.size() - 2 * ar);
        if (r >= 0) {
            for (int i = 1; i <= a + 2 * r; ++i)
                X.push_back(part_at(alpha, i) + (a + 2 * r - i));
            for (int i = 1; i <= a; ++i)
                Y.push_back(part_at(beta, i) + (a - i));
        } else {
            for (int i = 1; i <= a; ++i)
                X.push_back(part_at(beta, i) + (a - i));
            for (int i = 1; i <= a + 2 * ar; ++i)
                Y.push_back(part_at(alpha, i) + (a + 2 * ar - i));
        }
    }
    std::set<int> sx(X.begin(), X.end()), sy(Y.begin(), Y.end());
    WF_ASSERT(sx.size() == X.size() && sy.size() == Y.size());
    return normalize_symbol(Symbol{std::move(X), std::move(Y), kind});
}

std::tuple<int, Partition, Partition> symb_inv(const Symbol& s)
{
    int lX = (int)s.X.size(), lY = (int)s.Y.size();
    std::vector<int> al, be;
    int r;
    if (s.kind == SymKind::imp) {
        int d = lX - lY;
        WF_REQUIRE(d > 0 && d % 2 == 1, errc::invalid_input,
                   "imp symbol must have positive odd defect");
        r = (d - 1) / 2;
        int a = lY;
        for (int i = 1; i <= a + 2 * r + 1; ++i)
            al.push_back(s.X[i - 1] - (a + 2 * r + 1 - i));
        for (int i = 1; i <= a; ++i)
            be.push_back(s.Y[i - 1] - (a - i));
    } else {
        int d = lX - lY;
        WF_REQUIRE(d % 2 == 0, errc::invalid_input,
                   "pair symbol must have even defect");
        r = d / 2;
        if (r >= 0) {
            int a = lY;
            for (int i = 1; i <= a + 2 * r; ++i)
                al.push_back(s.X[i - 1] - (a + 2 * r - i));
            for (int i = 1; i <= a; ++i)
                be.push_back(s.Y[i - 1] - (a - i));
        } else {
            int a = lX;
            for (int i = 1; i <= a; ++i)
                be.push_back(s.X[i - 1] - (a - i));
            for (int i = 1; i <= a + 2 * (-r); ++i)
                al.push_back(s.Y[i - 1] - (a + 2 * (-r) - i));
        }
    }
    return {r, canon(al), canon(be)};
}

/* Shared kernel for the ordinary symbols: pad lam to length L, form
 * c_j = lam_inc[j] + j, and split the c values by parity. */
static Symbol ordinary_kernel(const Partition& lam, int L, bool odds_to_X,
                              SymKind kind)
{
    std::vector<int> inc(L - (int)lam.size(), 0);
    for (auto it = lam.rbegin(); it != lam.rend(); ++it)
        inc.push_back(*it);
    std::vector<int> X, Y;
    for (int j = 0; j < L; ++j) {
        int c = inc[j] + j;
        bool odd = c % 2 == 1;
        if (odd == odds_to_X)
            X.push_back(odd ? (c - 1) / 2 : c / 2);
        else
            Y.push_back(odd ? (c - 1) / 2 : c / 2);
    }
    std::sort(X.rbegin(), X.rend());
    std::sort(Y.rbegin(), Y.rend());
    return normalize_symbol(Symbol{std::move(X), std::move(Y), kind});
}

Symbol ordinary_symbol_symp(const Partition& lam)
{
    int l = (int)lam.size();
    int L = l % 2 == 0 ? l + 1 : l + 2;
    return ordinary_kernel(lam, L, false, SymKind::imp);
}

Symbol ordinary_symbol_orth_odd(const Partition& lam)
{
    int l = (int)lam.size();
    int L = l % 2 == 1 ? l : l + 1;
    return ordinary_kernel(lam, L, true, SymKind::imp);
}

Symbol ordinary_symbol_orth_even(const Partition& lam)
{
    int l = (int)lam.size();
    int L = l % 2 == 0 ? l : l + 1;
    return ordinary_kernel(lam, L, false, SymKind::pair);
}

/* Inverse kernel: rebuild the c values and subtract the staircase. */
static Partition ordinary_kernel_inv(const Symbol& s, bool odds_from_X)
{
    std::vector<int> c;
    for (int x : s.X)
        c.push_back(odds_from_X ? 2 * x + 1 : 2 * x);
    for (int y : s.Y)
        c.push_back(odds_from_X ? 2 * y : 2 * y + 1);
    std::sort(c.begin(), c.end());
    for (size_t j = 0; j + 1 < c.size(); ++j)
        WF_REQUIRE(c[j] < c[j + 1], errc::invalid_input,
                   "symbol entries collide");
    std::vector<int> parts;
    for (size_t j = 0; j < c.size(); ++j)
        parts.push_back(c[j] - (int)j);
    return canon(parts);
}

Partition ordinary_symbol_symp_inv(const Symbol& s)
{
    return ordinary_kernel_inv(normalize_symbol(s), false);
}

Partition ordinary_symbol_orth_odd_inv(const Symbol& s)
{
    return ordinary_kernel_inv(normalize_symbol(s), true);
}

Partition ordinary_symbol_orth_even_inv(const Symbol& s)
{
    return ordinary_kernel_inv(normalize_symbol(s), false);
}

static void assert_interleaving(const Symbol& s, const Partition& lam)
{
    std::vector<int> inter;
    size_t a = s.Y.size();
    for (size_t i = 0; i < a; ++i) {
        inter.push_back(s.X[i]);
        inter.push_back(s.Y[i]);
    }
    for (size_t i = a; i < s.X.size(); ++i)
        inter.push_back(s.X[i]);
    for (size_t i = 0; i + 1 < inter.size(); ++i)
        WF_REQUIRE(inter[i] >= inter[i + 1], errc::not_special,
                   "special symbol interleaving fails");
    (void)lam;
}

Symbol special_symbol(const Partition& lam, PClass c)
{
    WF_REQUIRE(c != PClass::orth_odd, errc::wrong_class,
               "special symbols implemented for symp and orth_even");
    WF_REQUIRE(is_special(lam, c), errc::not_special,
               "special_symbol requires a special partition");
    Symbol s = c == PClass::symp ? ordinary_symbol_symp(lam)
                                 : ordinary_symbol_orth_even(lam);
    assert_interleaving(s, lam);
    return s;
}

std::vector<Symbol> family_enumerate(const Partition& lam, PClass c)
{
    Symbol sp = special_symbol(lam, c);
    std::set<int> U(sp.X.begin(), sp.X.end());
    U.insert(sp.Y.begin(), sp.Y.end());
    std::set<int> I;
    for (int x : sp.X)
        if (contains(sp.Y, x))
            I.insert(x);
    std::vector<int> free;
    for (int v : U)
        if (!I.count(v))
            free.push_back(v);
    std::sort(free.rbegin(), free.rend());
    size_t nf = free.size();
    WF_ASSERT(nf < 30);
    std::vector<Symbol> out;
    for (unsigned mask = 0; mask < (1u << nf); ++mask) {
        std::set<int> X(I.begin(), I.end()), Y(I.begin(), I.end());
        for (size_t i = 0; i < nf; ++i) {
            if (mask >> i & 1)
                X.insert(free[i]);
            else
                Y.insert(free[i]);
        }
        int d = (int)X.size() - (int)Y.size();
        if (c == PClass::symp) {
            if (!(d > 0 && d % 2 == 1))
                continue;
        } else {
            if (d % 2 != 0)
                continue;
        }
        out.push_back(Symbol{sorted_desc(std::move(X)),
                             sorted_desc(std::move(Y)), sp.kind});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* Index of all families at a given rank, memoized per (kind, rank). */
static const std::map<Symbol, Partition>& family_index(SymKind k, long long m)
{
    static std::map<std::pair<int, long long>, std::map<Symbol, Partition>>
        cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair((int)k, m);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    std::map<Symbol, Partition> idx;
    PClass c = k == SymKind::imp ? PClass::symp : PClass::orth_even;
    std::vector<Partition> specials =
        k == SymKind::imp ? symp_special_partitions(2 * (int)m)
                          : orth_even_special_partitions(2 * (int)m);
    for (const Partition& lam : specials)
        for (const Symbol& s : family_enumerate(lam, c)) {
            Symbol ns = normalize_symbol(s);
            auto ins = idx.emplace(ns, lam);
            WF_ASSERT(ins.second || ins.first->second == lam);
        }
    return cache.emplace(key, std::move(idx)).first->second;
}

Partition family_of(const Symbol& s)
{
    long long m = symbol_stats(s).rank;
    const auto& idx = family_index(s.kind, m);
    auto it = idx.find(normalize_symbol(s));
    WF_REQUIRE(it != idx.end(), errc::invalid_input,
               "symbol belongs to no family at its rank");
    return it->second;
}

bool in_family(const Partition& lam, PClass c, const Symbol& s)
{
    Symbol ns = normalize_symbol(s);
    for (const Symbol& m : family_enumerate(lam, c))
        if (normalize_symbol(m) == ns)
            return true;
    return false;
}

Symbol family_representative(const Partition& lam, PClass c, const Symbol& s)
{
    Symbol ns = normalize_symbol(s);
    for (const Symbol& m : family_enumerate(lam, c))
        if (normalize_symbol(m) == ns)
            return m;
    fail(errc::invalid_input, "symbol not in the requested family");
}

/* Increasing bijections interval -> free entry of the special symbol.
 * The x map covers the full interval list, the y map the 0-free ones
 * (symplectic) or again the full list (orthogonal-even). */
struct XYMaps {
    std::map<Interval, int> x, y;
};

static XYMaps xy_delta_maps(const Partition& lam, PClass c)
{
    Symbol sp = special_symbol(lam, c);
    std::set<int> I;
    for (int x : sp.X)
        if (contains(sp.Y, x))
            I.insert(x);
    std::vector<int> xfree, yfree;
    for (auto it = sp.X.rbegin(); it != sp.X.rend(); ++it)
        if (!I.count(*it))
            xfree.push_back(*it);
    for (auto it = sp.Y.rbegin(); it != sp.Y.rend(); ++it)
        if (!I.count(*it))
            yfree.push_back(*it);
    std::vector<Interval> ints = c == PClass::symp
                                     ? intervals_symp(lam)
                                     : intervals_orth_even(lam);
    std::vector<Interval> inc(ints.rbegin(), ints.rend());
    XYMaps m;
    WF_ASSERT(xfree.size() == inc.size());
    for (size_t i = 0; i < inc.size(); ++i)
        m.x[inc[i]] = xfree[i];
    if (c == PClass::symp) {
        std::vector<Interval> nomin;
        for (const Interval& d : inc)
            if (!contains(d, 0))
                nomin.push_back(d);
        WF_ASSERT(yfree.size() == nomin.size());
        for (size_t i = 0; i < nomin.size(); ++i)
            m.y[nomin[i]] = yfree[i];
    } else {
        WF_ASSERT(yfree.size() == inc.size());
        for (size_t i = 0; i < inc.size(); ++i)
            m.y[inc[i]] = yfree[i];
    }
    return m;
}

FamilyCoord tau_delta(const Partition& lam, PClass c, const Symbol& s)
{
    Symbol rep = family_representative(lam, c, s);
    std::set<int> Xs(rep.X.begin(), rep.X.end());
    std::set<int> Ys(rep.Y.begin(), rep.Y.end());
    XYMaps m = xy_delta_maps(lam, c);
    std::vector<Interval> ints = c == PClass::symp
                                     ? intervals_symp(lam)
                                     : intervals_orth_even(lam);
    FamilyCoord fc;
    int d = (int)rep.X.size() - (int)rep.Y.size();
    fc.r = c == PClass::symp ? (d - 1) / 2 : d / 2;
    for (const Interval& D : ints) {
        int t = 0;
        for (const Interval& Dp : ints) {
            if (Dp[0] >= D[0] && Ys.count(m.x.at(Dp)))
                ++t;
            if (m.y.count(Dp) && Dp[0] > D[0] && Xs.count(m.y.at(Dp)))
                ++t;
        }
        fc.tau[D] = (t + fc.r) % 2 < 0 ? (t + fc.r) % 2 + 2 : (t + fc.r) % 2;
        bool has_delta = c == PClass::orth_even || !contains(D, 0);
        if (has_delta) {
            int dd = 0;
            for (const Interval& Dp : ints) {
                if (!m.y.count(Dp))
                    continue;
                if (Dp[0] >= D[0] && Ys.count(m.x.at(Dp)))
                    ++dd;
                if (Dp[0] >= D[0] && Xs.count(m.y.at(Dp)))
                    ++dd;
            }
            fc.delta[D] = dd % 2;
        }
    }
    return fc;
}

Symbol coord_inv(const Partition& lam, PClass c, const FamilyCoord& fc)
{
    std::vector<Symbol> hits;
    for (const Symbol& m : family_enumerate(lam, c))
        if (tau_delta(lam, c, m) == fc)
            hits.push_back(m);
    WF_REQUIRE(hits.size() == 1, errc::invalid_input,
               "family coordinates match " + std::to_string(hits.size()) +
                   " symbols");
    return hits[0];
}

int pairing(const Partition& lam, PClass c, const Symbol& a, const Symbol& b)
{
    Symbol ra = family_representative(lam, c, a);
    Symbol rb = family_representative(lam, c, b);
    Symbol sp = special_symbol(lam, c);
    auto rof = [&](const Symbol& s) {
        int d = (int)s.X.size() - (int)s.Y.size();
        return c == PClass::symp ? (d - 1) / 2 : d / 2;
    };
    int v = rof(ra) * rof(rb);
    for (int x : ra.X)
        if (contains(rb.X, x) && contains(sp.Y, x))
            ++v;
    for (int y : ra.Y)
        if (contains(rb.Y, y) && contains(sp.X, y))
            ++v;
    return ((v % 2) + 2) % 2;
}

std::vector<std::pair<Symbol, Dyadic>> fourier_apply(const Symbol& s)
{
    Partition lam = family_of(s);
    PClass c = s.kind == SymKind::imp ? PClass::symp : PClass::orth_even;
    std::vector<Interval> nomin;
    for (const Interval& d : c == PClass::symp ? intervals_symp(lam)
                                               : intervals_orth_even(lam))
        if (c == PClass::orth_even || !contains(d, 0))
            nomin.push_back(d);
    int e = (int)nomin.size();
    std::vector<std::pair<Symbol, Dyadic>> out;
    for (const Symbol& m : family_enumerate(lam, c)) {
        int sign = pairing(lam, c, s, m) ? -1 : 1;
        out.emplace_back(m, Dyadic(sign, e));
    }
    return out;
}

std::vector<std::pair<Symbol, Dyadic>>
fourier_apply(const std::vector<std::pair<Symbol, Dyadic>>& v)
{
    std::map<Symbol, Dyadic> acc;
    for (const auto& [s, coef] : v) {
        if (coef.is_zero())
            continue;
        for (const auto& [m, f] : fourier_apply(s)) {
            Symbol nm = normalize_symbol(m);
            auto it = acc.find(nm);
            if (it == acc.end())
                acc.emplace(nm, coef * f);
            else
                it->second = it->second + coef * f;
        }
    }
    std::vector<std::pair<Symbol, Dyadic>> out;
    for (auto& [s, coef] : acc)
        if (!coef.is_zero())
            out.emplace_back(s, coef);
    return out;
}

Symbol dual_symbol(const Symbol& s)
{
    int d = 0;
    for (int x : s.X)
        d = std::max(d, x);
    for (int y : s.Y)
        d = std::max(d, y);
    std::set<int> full;
    for (int i = 0; i <= d; ++i)
        full.insert(i);
    std::set<int> Xp(full), Yp(full);
    for (int y : s.Y)
        Xp.erase(d - y);
    for (int x : s.X)
        Yp.erase(d - x);
    return normalize_symbol(
        Symbol{sorted_desc(std::move(Xp)), sorted_desc(std::move(Yp)), s.kind});
}

} // namespace wf
