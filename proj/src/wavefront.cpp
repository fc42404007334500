#include "wavefront/wavefront.hpp"

#include <algorithm>

#include "wavefront/duality.hpp"
#include "wavefront/springer.hpp"
#include "wavefront/weyl.hpp"

namespace wf {

namespace {

int floordiv(int a, int b)
{
    int q = a / b, r = a % b;
    return r != 0 && (r < 0) != (b < 0) ? q - 1 : q;
}

int k_even(const Partition& lam, const EpsMap& eps)
{
    return k_of({lam, PClass::symp, eps});
}

} // namespace

void check_even_signed(const Partition& lam, const EpsMap& eps)
{
    WF_REQUIRE(is_symplectic(lam), errc::wrong_class,
               "quadruple sides must be symplectic");
    for (int p : lam)
        WF_REQUIRE(p % 2 == 0, errc::invalid_input,
                   "quadruple sides must have even parts only");
    std::vector<int> jj = jord(lam);
    WF_REQUIRE(eps.size() == jj.size(), errc::invalid_input,
               "eps domain must be the distinct parts");
    for (int i : jj) {
        auto it = eps.find(i);
        WF_REQUIRE(it != eps.end(), errc::invalid_input,
                   "eps missing a part");
        WF_REQUIRE(it->second == 1 || it->second == -1, errc::invalid_input,
                   "eps values must be +1 or -1");
    }
}

std::pair<Partition, EpsMap> lambda_max(const Partition& lam0,
                                        const EpsMap& eps)
{
    Partition lam = canon(lam0);
    if (lam.empty())
        return {{}, {}};
    int ell = (int)lam.size();
    int L = ell % 2 == 0 ? ell + 1 : ell + 2;
    std::vector<int> parts(lam);
    parts.resize(L, 0);

    auto e = [&](int j) {
        int p = parts[j - 1];
        return p ? eps.at(p) : 1;
    };
    std::vector<int> zeta(L + 1, 0);
    for (int j = 1; j <= L; ++j)
        zeta[j] = (j % 2 == 1 ? 1 : -1) * e(j);
    std::vector<int> Sset{1};
    for (int j = 2; j <= L; ++j)
        if (zeta[j] != zeta[j - 1])
            Sset.push_back(j);
    int Ssz = (int)Sset.size();
    int e1 = e(1);
    int Jm = 0;
    for (int j = 1; j <= L; ++j)
        if (zeta[j] == -e1)
            ++Jm;
    long long lam1 = 0;
    for (int s : Sset)
        lam1 += parts[s - 1];
    lam1 += 2 * (Ssz / 2) - 2 * Jm;
    WF_ASSERT(lam1 >= 0 && lam1 % 2 == 0);

    std::vector<int> lamp;
    EpsMap epsp;
    for (int j = 1; j <= L; ++j) {
        if (std::find(Sset.begin(), Sset.end(), j) != Sset.end())
            continue;
        int i = zeta[j] == e1 ? parts[j - 1] : parts[j - 1] + 2;
        if (i == 0)
            continue;
        int hj = 0;
        for (int h = 1; h <= Ssz; ++h)
            if (Sset[h - 1] < j)
                hj = h;
        int ev = (hj % 2 == 1 ? 1 : -1) * e(j);
        auto it = epsp.find(i);
        if (it != epsp.end())
            WF_ASSERT(it->second == ev);
        lamp.push_back(i);
        epsp[i] = ev;
    }
    Partition lampc = canon(lamp);
    WF_ASSERT(psum(lampc) == psum(lam) - lam1);
    WF_ASSERT(psum(lampc) < psum(lam) || psum(lam) == 0);

    auto [sub, esub] = lambda_max(lampc, epsp);
    std::vector<int> full(sub);
    if (lam1)
        full.push_back((int)lam1);
    EpsMap emax = esub;
    if (lam1) {
        auto it = emax.find((int)lam1);
        if (it != emax.end())
            WF_ASSERT(it->second == e1);
        emax[(int)lam1] = e1;
    }
    return {canon(full), emax};
}

Partition t_lambda_min(const Partition& lam0, const EpsMap& eps)
{
    Partition lam = canon(lam0);
    if (lam.empty())
        return {};
    auto [lmax, emax] = lambda_max(lam, eps);
    int k = k_even(lam, eps);
    WF_ASSERT(k == k_even(lmax, emax));
    int ell = (int)lmax.size();
    int L = ell % 2 == 0 ? ell + 1 : ell + 2;
    int R = (L - 1) / 2;
    std::vector<int> parts(lmax);
    parts.resize(L, 0);

    auto e = [&](int j) {
        int p = parts[j - 1];
        return p ? emax.at(p) : 1;
    };
    std::vector<int> jp, jm;
    for (int j = 1; j <= L; ++j) {
        int want = k % 2 == 0 ? 1 : -1;
        if (e(j) * (j % 2 == 1 ? 1 : -1) == want)
            jp.push_back(j);
        if (e(j) * (j % 2 == 0 ? 1 : -1) == want)
            jm.push_back(j);
    }
    int N = (int)jp.size(), M = (int)jm.size();
    WF_ASSERT(N == R + k / 2 + 1);
    WF_ASSERT(M == R - k / 2);

    std::vector<int> allv;
    for (int u = 1; u <= N; ++u)
        allv.push_back(2 * R + 3 * u - k - 1 + parts[jp[u - 1] - 1] -
                       2 * jp[u - 1]);
    for (int v = 1; v <= M; ++v)
        allv.push_back(2 * R + 3 * v + k + parts[jm[v - 1] - 1] -
                       2 * jm[v - 1]);
    for (int t = R + floordiv(k - 1, 2); t >= 0; --t)
        allv.push_back(t);
    for (int t = R - floordiv(k + 3, 2); t >= 0; --t)
        allv.push_back(t);
    std::sort(allv.rbegin(), allv.rend());
    WF_ASSERT((int)allv.size() == 4 * R + 1);
    std::vector<int> nu;
    for (int j = 1; j <= 4 * R + 1; ++j)
        nu.push_back(allv[j - 1] - 2 * R + j / 2);
    long long tot = 0;
    for (size_t i = 0; i < nu.size(); ++i) {
        WF_ASSERT(nu[i] >= 0);
        if (i + 1 < nu.size())
            WF_ASSERT(nu[i] >= nu[i + 1]);
        tot += nu[i];
    }
    WF_ASSERT(tot == psum(lam));
    return canon(nu);
}

Partition wavefront(const Partition& lp, const EpsMap& ep,
                    const Partition& lm, const EpsMap& em)
{
    check_even_signed(lp, ep);
    check_even_signed(lm, em);
    Partition tp = t_lambda_min(lp, ep);
    Partition tm = t_lambda_min(lm, em);
    long long n2 = psum(lp) + psum(lm);
    size_t width = std::max<size_t>(std::max(tp.size(), tm.size()), 1);
    tp.resize(width, 0);
    tm.resize(width, 0);
    std::vector<int> s(width);
    for (size_t i = 0; i < width; ++i)
        s[i] = tp[i] + tm[i];
    s[0] += 1;
    return orth_collapse(canon(s), n2 + 1);
}

Partition wavefront(const Quad& q)
{
    return wavefront(q.lp, q.ep, q.lm, q.em);
}

std::pair<int, int> r_params(int kp, int km)
{
    if ((kp - km) % 2 == 0)
        return {(kp + km) / 2, (kp - km) / 2};
    if (kp > km)
        return {(kp - km - 1) / 2, (kp + km + 1) / 2};
    return {(km - kp - 1) / 2, -(kp + km + 1) / 2};
}

int sgn_sharp(const Quad& q)
{
    int s = 1;
    for (int i : jord(q.lp))
        if (i % 2 == 0 && q.ep.at(i) == -1 && mult_of(q.lp, i) % 2 == 1)
            s = -s;
    for (int i : jord(q.lm))
        if (i % 2 == 0 && q.em.at(i) == -1 && mult_of(q.lm, i) % 2 == 1)
            s = -s;
    return s;
}

int sgn_sharp_full(const Quad& q)
{
    int s = 1;
    for (int i : jord(q.lp))
        if (i % 2 == 0 && q.ep.at(i) == -1 && mult_of(q.lp, i) % 2 == 1)
            s = -s;
    for (int i : jord(q.lm))
        if (i % 2 == 0 && q.em.at(i) == -1 && mult_of(q.lm, i) % 2 == 1)
            s = -s;
    return s;
}

std::optional<MpiResult> m_pi_min(const Quad& q, const Partition& l1,
                                  const Partition& l2)
{
    check_even_signed(q.lp, q.ep);
    check_even_signed(q.lm, q.em);
    Partition lpmin = transpose(t_lambda_min(q.lp, q.ep));
    Partition lmmin = transpose(t_lambda_min(q.lm, q.em));
    Partition lam = punion(lpmin, lmmin);
    int kp = k_even(q.lp, q.ep);
    int km = k_even(q.lm, q.em);
    auto [rp, rpp] = r_params(kp, km);
    int r1 = rp;
    int r2 = (rp % 2 == 0 ? 1 : -1) * rpp;
    long long n1 = psum(l1) / 2, n2 = psum(l2) / 2;
    if ((long long)r1 * r1 + r1 > n1 || (long long)r2 * r2 > n2)
        return std::nullopt;
    int zeta;
    if (r2 == 0)
        zeta = r1 % 2 == 0 ? 1 : -1;
    else
        zeta = (r1 % 2 == 0 ? r2 : -r2) > 0 ? 1 : -1;
    int nu = r2 >= 0 ? 1 : -1;
    int zn = zeta * nu;
    WF_ASSERT(zn == (r1 % 2 == 0 ? 1 : -1));
    InductionData ind = induce(l1, l2);
    WF_ASSERT(ind.lam == lam && is_regular(ind));

    std::vector<Symbol> fam1 = family_enumerate(l1, PClass::symp);
    std::vector<Symbol> fam2 = family_enumerate(l2, PClass::orth_even);
    auto mult_ge_par = [](const Partition& p, int i) {
        return mult_ge(p, i) % 2;
    };
    std::vector<std::tuple<Symbol, Symbol, FamilyCoord, FamilyCoord>> compat;
    for (const Symbol& s1 : fam1) {
        FamilyCoord i1 = tau_delta(l1, PClass::symp, s1);
        if (i1.r != r1)
            continue;
        for (const Symbol& s2 : fam2) {
            FamilyCoord i2 = tau_delta(l2, PClass::orth_even, s2);
            if (i2.r != r2)
                continue;
            ZetaFunctions fns = zeta_functions(ind, i1, i2);
            const auto& dl_p = zn == 1 ? fns.dlp : fns.dlm;
            const auto& dl_m = zn == 1 ? fns.dlm : fns.dlp;
            bool ok = true;
            for (const RelInterval& ri : ind.rel) {
                if (std::find(ri.D.begin(), ri.D.end(), 0) != ri.D.end())
                    continue;
                int imin = ri.D.back();
                if (mult_ge_par(lpmin, imin) != dl_p.at(ri.D) ||
                    mult_ge_par(lmmin, imin) != dl_m.at(ri.D)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                compat.push_back({s1, s2, i1, i2});
        }
    }
    WF_ASSERT(!compat.empty());
    const auto& [s1, s2, i1c, i2c] = compat.front();

    Partition mu1 = dual(l1, PClass::symp);
    auto [r01, al1, be1] = symb_inv(ordinary_symbol_orth_odd(mu1));
    WF_ASSERT(r01 == 0);
    Bipartition t1 = twist_sgn({al1, be1});
    Symbol L1 = symb(SymKind::imp, 0, t1.first, t1.second);
    WF_ASSERT(in_family(l1, PClass::symp, L1));

    Partition mu2 = dual(l2, PClass::orth_even);
    auto [r02, al2, be2] = symb_inv(ordinary_symbol_orth_even(mu2));
    WF_ASSERT(r02 == 0);
    if (al2 < be2)
        std::swap(al2, be2);
    Bipartition t2 = twist_sgn({al2, be2});
    Symbol L2 = symb(SymKind::pair, 0, t2.first, t2.second);
    WF_ASSERT(in_family(l2, PClass::orth_even, L2));

    int sgn = (pairing(l1, PClass::symp, L1, s1) +
               pairing(l2, PClass::orth_even, L2, s2)) %
                          2 ==
                      0
                  ? 1
                  : -1;
    int ssharp = sgn_sharp(q);
    WF_ASSERT(ssharp == sgn_sharp_full(q));
    WF_ASSERT(ssharp == (r2 % 2 == 0 ? 1 : -1));
    int i1n = (int)intervals_symp(l1).size() - 1;
    int i2n = (int)intervals_orth_even(l2).size();
    long long val = sgn * (1 + ssharp * (r2 % 2 == 0 ? 1 : -1));
    WF_ASSERT(val == 2 || val == -2);
    MpiResult res;
    res.value = Dyadic(val, i1n + i2n);
    res.int1 = i1n;
    res.int2 = i2n;
    res.compat = (int)compat.size();
    res.l1 = l1;
    res.l2 = l2;
    return res;
}

MpiResult m_pi_min_auto(const Quad& q)
{
    check_even_signed(q.lp, q.ep);
    check_even_signed(q.lm, q.em);
    Partition lpmin = transpose(t_lambda_min(q.lp, q.ep));
    Partition lmmin = transpose(t_lambda_min(q.lm, q.em));
    Partition lam = punion(lpmin, lmmin);
    std::vector<int> shared;
    std::map<int, int> fixed;
    for (int i : jord(lam)) {
        if (i % 2 != 0 || mult_of(lam, i) < 2)
            continue;
        if (mult_of(lpmin, i) > 0 && mult_of(lmmin, i) > 0)
            shared.push_back(i);
        else
            fixed[i] = 1;
    }
    size_t ns = shared.size();
    WF_ASSERT(ns < 30);
    for (unsigned mask = 0; mask < (1u << ns); ++mask) {
        std::map<int, int> chi = fixed;
        for (size_t i = 0; i < ns; ++i)
            chi[shared[i]] = (mask >> (ns - 1 - i)) & 1;
        for (const auto& [l1, l2] : splits_for_chi(lam, chi)) {
            auto got = m_pi_min(q, l1, l2);
            if (got)
                return *got;
        }
    }
    fail(errc::internal, "no usable split for the quadruple");
}

} // namespace wf
