#include "wavefront/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace wf {

namespace {

std::mutex g_lr_mutex;

/* Lattice-word skew tableau counter. Cells are visited in reverse reading
 * order (top to bottom, right to left), so the right neighbor and, for skew
 * cells, the cell above are already filled when a cell is considered. */
struct LrCounter {
    const Partition& lam;
    std::vector<int> mu_ext;
    const Partition& nu;
    std::vector<std::pair<int, int>> cells;
    std::map<std::pair<int, int>, int> grid;
    std::vector<long long> used;
    long long count = 0;

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lam(l), nu(n)
    {
        mu_ext.assign(l.size(), 0);
        for (size_t i = 0; i < m.size(); ++i)
            mu_ext[i] = m[i];
        for (int r = 0; r < (int)l.size(); ++r)
            for (int c = l[r] - 1; c >= mu_ext[r]; --c)
                cells.emplace_back(r, c);
        used.assign(n.size() + 1, 0);
    }

    void rec(size_t idx)
    {
        if (idx == cells.size()) {
            bool ok = true;
            for (size_t v = 0; v < used.size(); ++v)
                if (used[v] != (v < nu.size() ? nu[v] : 0))
                    ok = false;
            if (ok)
                ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 0; v < (int)used.size(); ++v) {
            if (v > 0 && used[v] >= used[v - 1])
                continue;
            if (v >= (int)nu.size() || used[v] >= nu[v])
                continue;
            if (c + 1 < lam[r]) {
                auto it = grid.find({r, c + 1});
                if (it != grid.end() && it->second < v)
                    continue;
            }
            auto above = grid.find({r - 1, c});
            if (above != grid.end() && above->second >= v)
                continue;
            if (r >= 1 && c >= mu_ext[r - 1] && above == grid.end())
                continue;
            grid[{r, c}] = v;
            ++used[v];
            rec(idx + 1);
            --used[v];
            grid.erase({r, c});
        }
    }
};

long long lr_raw(const Partition& lam, const Partition& mu,
                 const Partition& nu)
{
    if (psum(lam) != psum(mu) + psum(nu))
        return 0;
    if (mu.size() > lam.size())
        return 0;
    for (size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lam[i])
            return 0;
    LrCounter ctr(lam, mu, nu);
    ctr.rec(0);
    return ctr.count;
}

} // namespace

long long lr_coeff(const Partition& lam, const Partition& mu,
                   const Partition& nu)
{
    using Key = std::tuple<Partition, Partition, Partition>;
    static std::map<Key, long long> memo;
    Key key{lam, mu, nu};
    {
        std::lock_guard<std::mutex> lk(g_lr_mutex);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    long long v = lr_raw(lam, mu, nu);
    std::lock_guard<std::mutex> lk(g_lr_mutex);
    memo.emplace(std::move(key), v);
    return v;
}

std::vector<Partition> pieri_h(const Partition& mu, int r)
{
    WF_ASSERT(r >= 0);
    std::vector<Partition> out;
    std::vector<int> cur;
    int rows = (int)mu.size() + 1;
    /* row i gets lam_i in [mu_i, mu_{i-1}] (unbounded for i = 0) */
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows) {
            if (left == 0)
                out.push_back(canon(cur));
            return;
        }
        int lo = part_at(mu, i + 1);
        int hi = i == 0 ? lo + left : std::min(part_at(mu, i), lo + left);
        for (int v = lo; v <= hi; ++v) {
            cur.push_back(v);
            rec(i + 1, left - (v - lo));
            cur.pop_back();
        }
    };
    rec(0, r);
    return out;
}

long long lr_coeff_oracle(const Partition& lam, const Partition& mu,
                          const Partition& nu)
{
    if (psum(lam) != psum(mu) + psum(nu))
        return 0;
    int k = (int)nu.size();
    if (k == 0)
        return lam == mu ? 1 : 0;
    std::vector<int> sigma(k);
    for (int i = 0; i < k; ++i)
        sigma[i] = i;
    long long total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (sigma[i] > sigma[j])
                    ++inv;
        std::vector<int> es(k);
        bool dead = false;
        for (int i = 0; i < k; ++i) {
            es[i] = nu[i] - i + sigma[i];
            if (es[i] < 0)
                dead = true;
        }
        if (dead)
            continue;
        std::map<Partition, long long> layer{{mu, 1}};
        for (int e : es) {
            std::map<Partition, long long> next;
            for (const auto& [p, c] : layer)
                for (const Partition& q : pieri_h(p, e))
                    next[q] += c;
            layer = std::move(next);
        }
        auto it = layer.find(lam);
        if (it != layer.end())
            total += (inv % 2 ? -1 : 1) * it->second;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

std::vector<std::tuple<Partition, Partition, long long>>
lr_splits(const Partition& lam, int p)
{
    using Key = std::pair<Partition, int>;
    using Val = std::vector<std::tuple<Partition, Partition, long long>>;
    static std::map<Key, Val> memo;
    static std::mutex mtx;
    Key key{lam, p};
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    Val out;
    long long n = psum(lam);
    if (p >= 0 && p <= n) {
        int W = lam.empty() ? 0 : lam[0];
        for (const Partition& mu : all_partitions(p, p ? W : 0))
            for (const Partition& nu :
                 all_partitions((int)n - p, n - p ? W : 0)) {
                long long c = lr_coeff(lam, mu, nu);
                if (c)
                    out.emplace_back(mu, nu, c);
            }
    }
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(std::move(key), out);
    return out;
}

Bipartition twist_sgn(const Bipartition& b)
{
    return {transpose(b.second), transpose(b.first)};
}

Bipartition twist_sgn_cd(const Bipartition& b)
{
    return {b.second, b.first};
}

PairRep res_bip(const Bipartition& rho, int p, int q)
{
    using Key = std::tuple<Bipartition, int, int>;
    static std::map<Key, PairRep> memo;
    static std::mutex mtx;
    Key key{rho, p, q};
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    WF_ASSERT(p >= 0 && q >= 0 && psum(rho.first) + psum(rho.second) == p + q);
    PairRep out;
    for (int pa = 0; pa <= p; ++pa) {
        if (pa > psum(rho.first))
            break;
        long long pb = p - pa;
        if (pb > psum(rho.second))
            continue;
        for (const auto& [a, c, m1] : lr_splits(rho.first, pa))
            for (const auto& [b, d, m2] : lr_splits(rho.second, (int)pb))
                out[{{a, b}, {c, d}}] += m1 * m2;
    }
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(std::move(key), out);
    return out;
}

VirtualRep ind_bip(const Bipartition& rho1, const Bipartition& rho2)
{
    using Key = std::pair<Bipartition, Bipartition>;
    static std::map<Key, VirtualRep> memo;
    static std::mutex mtx;
    Key key{rho1, rho2};
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    VirtualRep out;
    long long na = psum(rho1.first) + psum(rho2.first);
    long long nb = psum(rho1.second) + psum(rho2.second);
    for (const Partition& A : all_partitions((int)na)) {
        long long m1 = lr_coeff(A, rho1.first, rho2.first);
        if (!m1)
            continue;
        for (const Partition& B : all_partitions((int)nb)) {
            long long m2 = lr_coeff(B, rho1.second, rho2.second);
            if (m2)
                out[{A, B}] += m1 * m2;
        }
    }
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(std::move(key), out);
    return out;
}

VirtualRep induct(const PairRep& v)
{
    VirtualRep out;
    for (const auto& [pr, c] : v)
        for (const auto& [rho, m] : ind_bip(pr.first, pr.second))
            out[rho] += c * m;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

PairRep restrict_rep(const VirtualRep& v, int N1, int N2)
{
    PairRep out;
    for (const auto& [rho, c] : v)
        for (const auto& [pr, m] : res_bip(rho, N1, N2))
            out[pr] += c * m;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

long long gamma_n(const GammaIndex& g)
{
    return (long long)g.rp * g.rp + g.rp + g.Np + (long long)g.rpp * g.rpp +
           g.Nm;
}

std::array<int, 4> a_table_r(int rp, int rpp)
{
    WF_REQUIRE(rp >= 0, errc::invalid_input, "a_table_r: r' must be >= 0");
    if ((0 < rpp && rpp <= rp) || (rpp == 0 && rp % 2 == 0))
        return {0, 0, 0, 1};
    if ((-rp <= rpp && rpp < 0) || (rpp == 0 && rp % 2 == 1))
        return {0, 0, 1, 0};
    if (rp < rpp)
        return {0, 1, 0, 0};
    return {1, 0, 0, 0};
}

std::array<int, 4> a_table_pi(int zeta, int r1, int r2)
{
    WF_REQUIRE(zeta == 1 || zeta == -1, errc::invalid_input, "bad zeta");
    if (zeta == 1 && r1 >= std::abs(r2))
        return {0, 0, 0, 1};
    if (zeta == -1 && r1 >= std::abs(r2))
        return {0, 0, 1, 0};
    if (zeta == 1)
        return {0, 1, 0, 0};
    return {1, 0, 0, 0};
}

RElement sgn_tensor(const RElement& x)
{
    RElement out;
    for (const auto& [g, comp] : x)
        for (const auto& [pr, c] : comp)
            out[g][{twist_sgn(pr.first), twist_sgn(pr.second)}] = c;
    return out;
}

static void prune(RElement& x)
{
    for (auto git = x.begin(); git != x.end();) {
        auto& comp = git->second;
        for (auto it = comp.begin(); it != comp.end();)
            it = it->second.is_zero() ? comp.erase(it) : std::next(it);
        git = comp.empty() ? x.erase(git) : std::next(git);
    }
}

RElement rho_iota(const RElement& x)
{
    RElement out;
    for (const auto& [g, comp] : x) {
        std::array<int, 4> a = a_table_r(g.rp, g.rpp);
        int N = g.Np + g.Nm;
        int rpp_new = g.rp % 2 == 0 ? g.rpp : -g.rpp;
        for (const auto& [pr, coef] : comp) {
            const Bipartition& bplus = pr.first;
            const Bipartition& bminus = pr.second;
            for (int N1 = 0; N1 <= N; ++N1) {
                int N2 = N - N1;
                GammaIndex d{g.rp, rpp_new, N1, N2};
                auto& block = out[d];
                for (int N1p = 0; N1p <= std::min(g.Np, N1); ++N1p) {
                    int N2p = g.Np - N1p;
                    int N1m = N1 - N1p;
                    if (N1m < 0 || N1m > g.Nm)
                        continue;
                    int N2m = g.Nm - N1m;
                    if (N2m != N2 - N2p)
                        continue;
                    for (const auto& [sp, m1] : res_bip(bplus, N1p, N2p)) {
                        Bipartition t1p =
                            a[0] ? twist_sgn_cd(sp.first) : sp.first;
                        Bipartition t2p =
                            a[2] ? twist_sgn_cd(sp.second) : sp.second;
                        for (const auto& [sm, m2] :
                             res_bip(bminus, N1m, N2m)) {
                            Bipartition t1m =
                                a[1] ? twist_sgn_cd(sm.first) : sm.first;
                            Bipartition t2m =
                                a[3] ? twist_sgn_cd(sm.second) : sm.second;
                            for (const auto& [r1, c1] : ind_bip(t1p, t1m))
                                for (const auto& [r2, c2] :
                                     ind_bip(t2p, t2m))
                                    block[{r1, r2}] =
                                        block[{r1, r2}] +
                                        coef * Dyadic(m1 * m2 * c1 * c2);
                        }
                    }
                }
            }
        }
    }
    prune(out);
    return out;
}

RElement fourier_R(const RElement& x)
{
    RElement out;
    for (const auto& [g, comp] : x) {
        for (const auto& [pr, coef] : comp) {
            Symbol sp = symb(SymKind::imp, g.rp, pr.first.first,
                             pr.first.second);
            Symbol sm = symb(SymKind::pair, g.rpp, pr.second.first,
                             pr.second.second);
            long long rank_p = (long long)g.rp * g.rp + g.rp + g.Np;
            long long rank_m = (long long)g.rpp * g.rpp + g.Nm;
            for (const auto& [fp, cp] : fourier_apply(sp)) {
                auto [rp2, ap, bp] = symb_inv(fp);
                long long Np2 = rank_p - (long long)rp2 * rp2 - rp2;
                WF_ASSERT(Np2 >= 0 && Np2 == psum(ap) + psum(bp));
                for (const auto& [fm, cm] : fourier_apply(sm)) {
                    auto [rm2, am, bm] = symb_inv(fm);
                    long long Nm2 = rank_m - (long long)rm2 * rm2;
                    WF_ASSERT(Nm2 >= 0 && Nm2 == psum(am) + psum(bm));
                    GammaIndex d{rp2, rm2, (int)Np2, (int)Nm2};
                    WF_ASSERT(gamma_n(d) == gamma_n(g));
                    auto& slot = out[d][{{ap, bp}, {am, bm}}];
                    slot = slot + coef * cp * cm;
                }
            }
        }
    }
    prune(out);
    return out;
}

std::pair<int, int> h_pm(int zeta, int r1, int r2)
{
    int big = r1 + std::abs(r2);
    int small = std::max(r1 - std::abs(r2), std::abs(r2) - r1 - 1);
    return zeta == 1 ? std::make_pair(big, small)
                     : std::make_pair(small, big);
}

PairRep pi_zeta_decomp(const Bipartition& rho1, const Bipartition& rho2,
                       int N1, int N2, int Np, int Nm,
                       const std::array<int, 4>& avec)
{
    using Key = std::tuple<Bipartition, Bipartition, int, int, int, int,
                           std::array<int, 4>>;
    static std::map<Key, PairRep> memo;
    static std::mutex mtx;
    Key key{rho1, rho2, N1, N2, Np, Nm, avec};
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    PairRep out;
    for (int N1p = 0; N1p <= N1; ++N1p) {
        int N2p = Np - N1p;
        if (N2p < 0 || N2p > N2)
            continue;
        for (const auto& [s1, m1] : res_bip(rho1, N1p, N1 - N1p)) {
            Bipartition t1p = avec[0] ? twist_sgn_cd(s1.first) : s1.first;
            Bipartition t1m = avec[1] ? twist_sgn_cd(s1.second) : s1.second;
            for (const auto& [s2, m2] : res_bip(rho2, N2p, N2 - N2p)) {
                Bipartition t2p =
                    avec[2] ? twist_sgn_cd(s2.first) : s2.first;
                Bipartition t2m =
                    avec[3] ? twist_sgn_cd(s2.second) : s2.second;
                for (const auto& [rp, mp] : ind_bip(t1p, t2p))
                    for (const auto& [rm, mm] : ind_bip(t1m, t2m))
                        out[{rp, rm}] += m1 * m2 * mp * mm;
            }
        }
    }
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(std::move(key), out);
    return out;
}

PairRep pi_zeta(const Partition& l1, const FamilyCoord& i1,
                const Partition& l2, const FamilyCoord& i2, int zeta,
                int nplus, int nminus)
{
    Symbol s1 = coord_inv(l1, PClass::symp, i1);
    Symbol s2 = coord_inv(l2, PClass::orth_even, i2);
    auto [r1, a1, b1] = symb_inv(s1);
    auto [r2, a2, b2] = symb_inv(s2);
    WF_ASSERT(r1 == i1.r && r2 == i2.r);
    long long n1 = psum(l1) / 2, n2 = psum(l2) / 2;
    long long N1 = n1 - (long long)r1 * r1 - r1;
    long long N2 = n2 - (long long)r2 * r2;
    WF_ASSERT(N1 >= 0 && N2 >= 0);
    auto [hp, hm] = h_pm(zeta, r1, r2);
    long long basep = (long long)hp * (hp + 1) / 2;
    long long basem = (long long)hm * (hm + 1) / 2;
    WF_REQUIRE(nplus >= basep && nminus >= basem, errc::invalid_input,
               "pi_zeta: sizes below cuspidal support");
    WF_REQUIRE(nplus + nminus == n1 + n2, errc::invalid_input,
               "pi_zeta: total size mismatch");
    int Np = (int)(nplus - basep);
    int Nm = (int)(nminus - basem);
    WF_ASSERT(Np + Nm == N1 + N2);
    return pi_zeta_decomp({a1, b1}, {a2, b2}, (int)N1, (int)N2, Np, Nm,
                          a_table_pi(zeta, r1, r2));
}

} // namespace wf
