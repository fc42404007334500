#include "wavefront/springer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "wavefront/endoscopy.hpp"
#include "wavefront/weyl.hpp"

namespace wf {

namespace {

std::vector<int> bp_parts(const Partition& lam, PClass c)
{
    std::vector<int> out;
    for (int i : jord(lam))
        if (c == PClass::symp ? i % 2 == 0 : i % 2 == 1)
            out.push_back(i);
    return out;
}

} // namespace

void check_signed(const SignedPartition& sp)
{
    WF_REQUIRE(is_class(sp.lam, sp.cls), errc::wrong_class,
               "signed partition: wrong class");
    std::vector<int> bp = bp_parts(sp.lam, sp.cls);
    WF_REQUIRE(sp.eps.size() == bp.size(), errc::invalid_input,
               "eps domain must be the bp parts");
    for (int i : bp) {
        auto it = sp.eps.find(i);
        WF_REQUIRE(it != sp.eps.end(), errc::invalid_input,
                   "eps missing a bp part");
        WF_REQUIRE(it->second == 1 || it->second == -1, errc::invalid_input,
                   "eps values must be +1 or -1");
    }
    if (sp.cls != PClass::symp && !bp.empty())
        WF_REQUIRE(sp.eps.begin()->second == 1, errc::invalid_input,
                   "orthogonal eps must be in normal form (first sign +1)");
}

std::vector<SignedPartition> signed_partitions(PClass c, int total)
{
    std::vector<SignedPartition> out;
    for (const Partition& lam : enumerate_partitions(total, c, false)) {
        std::vector<int> bp = bp_parts(lam, c);
        for (const EpsMap& e : eps_patterns(bp)) {
            if (c != PClass::symp && !bp.empty() && e.begin()->second != 1)
                continue;
            out.push_back({lam, c, e});
        }
    }
    return out;
}

int k_of(const SignedPartition& sp)
{
    check_signed(sp);
    std::vector<int> ii;
    for (int i : bp_parts(sp.lam, sp.cls))
        if (mult_of(sp.lam, i) % 2 == 1)
            ii.push_back(i);
    int M = 0;
    for (size_t h = 1; h <= ii.size(); ++h)
        if (sp.eps.at(ii[h - 1]) == -1)
            M += h % 2 == 0 ? 1 : -1;
    switch (sp.cls) {
    case PClass::symp:
        return M >= 0 ? 2 * M : -2 * M - 1;
    case PClass::orth_odd:
        return M >= 0 ? 2 * M + 1 : -2 * M - 1;
    case PClass::orth_even:
        return 2 * std::abs(M);
    }
    fail(errc::wrong_class, "bad class");
}

/* ------------------------------------------------------------------ */
/* Symplectic parametrization, derived by constraint propagation over  */
/* all endoscopic setups: candidate (k, rho) values for the two sides  */
/* of every maximal quadruple are pruned using the multiplicity-one    */
/* property of those quadruples plus per-rank bijectivity.             */
/* ------------------------------------------------------------------ */

namespace {

using QKey = std::pair<Partition, EpsMap>;
using Cand = std::pair<int, Bipartition>;

std::vector<Bipartition> bipartitions_of(int N)
{
    std::vector<Bipartition> out;
    for (int na = 0; na <= N; ++na)
        for (const Partition& a : all_partitions(na))
            for (const Partition& b : all_partitions(N - na))
                out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

struct Constraint {
    QKey qp, qm;
    Bipartition rho1, rho2;
    int N1, N2, Np, Nm;
    std::array<int, 4> avec;
    int hp, hm;
};

struct SympTable {
    int rank = -1;
    std::map<QKey, Cand> solved;
    std::map<std::tuple<long long, int, Bipartition>, QKey> inverse;
};

std::mutex g_symp_mutex;

SympTable& symp_table()
{
    static SympTable t;
    return t;
}

std::vector<Constraint> collect_constraints(int nmax)
{
    std::vector<Constraint> out;
    for (int n = 0; n <= nmax; ++n) {
        for (int n2 = 0; n2 <= n; ++n2) {
            int n1 = n - n2;
            for (const Partition& l2 : orth_even_special_partitions(2 * n2)) {
                std::vector<std::pair<FamilyCoord, Bipartition>> fam2;
                for (const Symbol& s2 :
                     family_enumerate(l2, PClass::orth_even)) {
                    FamilyCoord c2 = tau_delta(l2, PClass::orth_even, s2);
                    auto [r2, a2, b2] = symb_inv(s2);
                    WF_ASSERT(r2 == c2.r);
                    fam2.push_back({c2, {a2, b2}});
                }
                for (const Partition& l1 : symp_special_partitions(2 * n1)) {
                    InductionData ind = induce(l1, l2);
                    for (const Symbol& s1 :
                         family_enumerate(l1, PClass::symp)) {
                        FamilyCoord c1 = tau_delta(l1, PClass::symp, s1);
                        auto [r1, a1, b1] = symb_inv(s1);
                        WF_ASSERT(r1 == c1.r);
                        int N1 = n1 - r1 * r1 - r1;
                        for (const auto& [c2, rho2] : fam2) {
                            int r2 = c2.r;
                            int N2 = n2 - r2 * r2;
                            ZetaFunctions fns = zeta_functions(ind, c1, c2);
                            int nu = r2 >= 0 ? 1 : -1;
                            for (int zeta : {1, -1}) {
                                auto [hp, hm] = h_pm(zeta, r1, r2);
                                int basep = hp * (hp + 1) / 2;
                                int basem = hm * (hm + 1) / 2;
                                for (int nminus = basem;
                                     nminus <= n - basep; ++nminus) {
                                    int nplus = n - nminus;
                                    for (const Quad& q : i_zeta_max(
                                             ind, fns, zeta, nu, nplus,
                                             nminus)) {
                                        Constraint c;
                                        c.qp = {q.lp, q.ep};
                                        c.qm = {q.lm, q.em};
                                        c.rho1 = {a1, b1};
                                        c.rho2 = rho2;
                                        c.N1 = N1;
                                        c.N2 = N2;
                                        c.Np = nplus - basep;
                                        c.Nm = nminus - basem;
                                        c.avec =
                                            a_table_pi(zeta, r1, r2);
                                        c.hp = hp;
                                        c.hm = hm;
                                        out.push_back(std::move(c));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

void solve_to(int nmax)
{
    SympTable& tbl = symp_table();
    if (nmax <= tbl.rank)
        return;
    std::vector<Constraint> constraints = collect_constraints(nmax);

    std::map<QKey, std::set<Cand>> cand;
    auto candidates = [&](const QKey& key) -> std::set<Cand>& {
        auto it = cand.find(key);
        if (it != cand.end())
            return it->second;
        SignedPartition sp{key.first, PClass::symp, key.second};
        int k = k_of(sp);
        long long N = psum(key.first) / 2 - (long long)k * (k + 1) / 2;
        WF_ASSERT(N >= 0);
        std::set<Cand> cs;
        for (const Bipartition& rho : bipartitions_of((int)N))
            cs.insert({k, rho});
        return cand.emplace(key, std::move(cs)).first->second;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Constraint& c : constraints) {
            std::set<Cand>& cp = candidates(c.qp);
            std::set<Cand>& cm = candidates(c.qm);
            if (cp.size() == 1 && cm.size() == 1)
                continue;
            PairRep pi = pi_zeta_decomp(c.rho1, c.rho2, c.N1, c.N2, c.Np,
                                        c.Nm, c.avec);
            auto mult1 = [&](const Bipartition& rp, const Bipartition& rm) {
                auto it = pi.find({rp, rm});
                return it != pi.end() && it->second == 1;
            };
            std::set<Cand> ncp, ncm;
            for (const Cand& v : cp) {
                if (v.first != c.hp)
                    continue;
                for (const Cand& w : cm)
                    if (w.first == c.hm && mult1(v.second, w.second)) {
                        ncp.insert(v);
                        break;
                    }
            }
            for (const Cand& w : cm) {
                if (w.first != c.hm)
                    continue;
                for (const Cand& v : ncp)
                    if (mult1(v.second, w.second)) {
                        ncm.insert(w);
                        break;
                    }
            }
            WF_ASSERT(!ncp.empty() && !ncm.empty());
            if (ncp != cp) {
                cand[c.qp] = std::move(ncp);
                changed = true;
            }
            if (ncm != cm) {
                cand[c.qm] = std::move(ncm);
                changed = true;
            }
        }
        /* bijectivity pruning: a value owned by a solved pair cannot be
         * the value of any other pair of the same rank */
        std::map<std::pair<long long, Cand>, int> owned;
        for (const auto& [key, cs] : cand)
            if (cs.size() == 1)
                ++owned[{psum(key.first) / 2, *cs.begin()}];
        for (const auto& [kv, cnt] : owned)
            WF_ASSERT(cnt == 1);
        for (auto& [key, cs] : cand) {
            if (cs.size() <= 1)
                continue;
            long long N = psum(key.first) / 2;
            std::set<Cand> keep;
            for (const Cand& v : cs)
                if (!owned.count({N, v}))
                    keep.insert(v);
            WF_ASSERT(!keep.empty());
            if (keep.size() != cs.size()) {
                cs = std::move(keep);
                changed = true;
            }
        }
    }

    SympTable fresh;
    fresh.rank = nmax;
    for (int n = 0; n <= nmax; ++n) {
        for (const SignedPartition& sp :
             signed_partitions(PClass::symp, 2 * n)) {
            QKey key{sp.lam, sp.eps};
            auto it = cand.find(key);
            WF_ASSERT(it != cand.end() && it->second.size() == 1);
            Cand v = *it->second.begin();
            bool all_plus = true;
            for (const auto& [i, e] : sp.eps)
                if (e != 1)
                    all_plus = false;
            if (all_plus) {
                WF_ASSERT(v.first == 0);
                Symbol got = symb(SymKind::imp, 0, v.second.first,
                                  v.second.second);
                WF_ASSERT(normalize_symbol(got) ==
                          normalize_symbol(ordinary_symbol_symp(sp.lam)));
            }
            fresh.solved.emplace(key, v);
            auto ins = fresh.inverse.emplace(
                std::make_tuple((long long)n, v.first, v.second), key);
            WF_ASSERT(ins.second);
        }
    }
    tbl = std::move(fresh);
}

/* ------------------------------------------------------------------ */
/* Orthogonal parametrizations: k by formula, the trivial-sign anchor  */
/* mapped to the ordinary Springer bipartition, remaining fibers       */
/* filled by matched deterministic (lexicographic) orderings.          */
/* ------------------------------------------------------------------ */

struct OrthTable {
    std::map<QKey, SpringerDatum> fwd;
    std::map<std::pair<int, Bipartition>, QKey> inv;
};

Bipartition class_rep(const Bipartition& b)
{
    Bipartition sw{b.second, b.first};
    return b < sw ? sw : b;
}

Bipartition ordinary_bip(const Partition& lam, PClass c)
{
    Symbol s = c == PClass::orth_odd ? ordinary_symbol_orth_odd(lam)
                                     : ordinary_symbol_orth_even(lam);
    auto [r, a, b] = symb_inv(s);
    WF_ASSERT(r == 0);
    return {a, b};
}

const OrthTable& orth_table(PClass c, int total)
{
    static std::map<std::pair<PClass, int>, OrthTable> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(c, total);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;

    long long N = c == PClass::orth_odd ? (total - 1) / 2 : total / 2;
    std::map<int, std::vector<QKey>> domain;
    for (const SignedPartition& sp : signed_partitions(c, total))
        domain[k_of(sp)].push_back({sp.lam, sp.eps});

    std::map<int, std::vector<Bipartition>> codomain;
    for (const auto& [k, dom] : domain) {
        long long sz = c == PClass::orth_odd
                           ? N - ((long long)k * k - 1) / 2
                           : N - (long long)k * k / 2;
        WF_ASSERT(sz >= 0);
        std::vector<Bipartition> cod;
        if (c == PClass::orth_even && k == 0) {
            for (const Bipartition& b : bipartitions_of((int)sz))
                if (class_rep(b) == b)
                    cod.push_back(b);
        } else {
            cod = bipartitions_of((int)sz);
        }
        WF_ASSERT(cod.size() == dom.size());
        codomain[k] = std::move(cod);
    }

    OrthTable tbl;
    int k_anchor = c == PClass::orth_odd ? 1 : 0;
    for (auto& [k, dom] : domain) {
        std::vector<Bipartition>& cod = codomain[k];
        if (k == k_anchor) {
            for (auto dit = dom.begin(); dit != dom.end();) {
                bool all_plus = true;
                for (const auto& [i, e] : dit->second)
                    if (e != 1)
                        all_plus = false;
                if (!all_plus) {
                    ++dit;
                    continue;
                }
                Bipartition rho = ordinary_bip(dit->first, c);
                if (c == PClass::orth_even)
                    rho = class_rep(rho);
                auto cit = std::find(cod.begin(), cod.end(), rho);
                WF_ASSERT(cit != cod.end());
                cod.erase(cit);
                tbl.fwd.emplace(*dit, SpringerDatum{k, rho});
                dit = dom.erase(dit);
            }
        }
        std::sort(dom.begin(), dom.end());
        WF_ASSERT(dom.size() == cod.size());
        for (size_t i = 0; i < dom.size(); ++i)
            tbl.fwd.emplace(dom[i], SpringerDatum{k, cod[i]});
    }
    for (const auto& [q, d] : tbl.fwd) {
        auto ins = tbl.inv.emplace(std::make_pair(d.k, d.rho), q);
        WF_ASSERT(ins.second);
    }
    return memo.emplace(key, std::move(tbl)).first->second;
}

} // namespace

SpringerDatum springer(const SignedPartition& sp)
{
    check_signed(sp);
    if (sp.cls == PClass::symp) {
        long long n = psum(sp.lam) / 2;
        WF_REQUIRE(n <= 8, errc::bound_exceeded,
                   "symplectic springer bound exceeded");
        std::lock_guard<std::mutex> lk(g_symp_mutex);
        solve_to((int)n);
        auto it = symp_table().solved.find({sp.lam, sp.eps});
        WF_ASSERT(it != symp_table().solved.end());
        return {it->second.first, it->second.second};
    }
    long long total = psum(sp.lam);
    WF_REQUIRE(total <= 16, errc::bound_exceeded,
               "orthogonal springer bound exceeded");
    const OrthTable& tbl = orth_table(sp.cls, (int)total);
    auto it = tbl.fwd.find({sp.lam, sp.eps});
    WF_ASSERT(it != tbl.fwd.end());
    return it->second;
}

SignedPartition springer_inv(PClass cls, const SpringerDatum& d, long long N)
{
    long long sz = psum(d.rho.first) + psum(d.rho.second);
    if (cls == PClass::symp) {
        WF_REQUIRE(d.k >= 0 && (long long)d.k * (d.k + 1) <= 2 * N,
                   errc::invalid_input, "invalid symplectic datum");
        WF_REQUIRE(sz == N - (long long)d.k * (d.k + 1) / 2,
                   errc::invalid_input, "rho has the wrong size");
        WF_REQUIRE(N <= 8, errc::bound_exceeded,
                   "symplectic springer bound exceeded");
        std::lock_guard<std::mutex> lk(g_symp_mutex);
        solve_to((int)N);
        auto it = symp_table().inverse.find(
            std::make_tuple(N, d.k, d.rho));
        WF_REQUIRE(it != symp_table().inverse.end(), errc::invalid_input,
                   "datum outside the parameter set");
        return {it->second.first, PClass::symp, it->second.second};
    }
    int total = cls == PClass::orth_odd ? (int)(2 * N + 1) : (int)(2 * N);
    WF_REQUIRE(total <= 16, errc::bound_exceeded,
               "orthogonal springer bound exceeded");
    Bipartition rho = d.rho;
    if (cls == PClass::orth_even && d.k == 0)
        rho = class_rep(rho);
    const OrthTable& tbl = orth_table(cls, total);
    auto it = tbl.inv.find(std::make_pair(d.k, rho));
    WF_REQUIRE(it != tbl.inv.end(), errc::invalid_input,
               "datum outside the parameter set");
    return {it->second.first, cls, it->second.second};
}

Bipartition ordinary_springer_special(const Partition& lam, PClass c)
{
    WF_REQUIRE(is_special(lam, c), errc::not_special,
               "ordinary_springer_special needs a special partition");
    Symbol s;
    switch (c) {
    case PClass::symp:
        s = ordinary_symbol_symp(lam);
        break;
    case PClass::orth_odd:
        s = ordinary_symbol_orth_odd(lam);
        break;
    case PClass::orth_even:
        s = ordinary_symbol_orth_even(lam);
        break;
    }
    auto [r, a, b] = symb_inv(s);
    WF_ASSERT(r == 0);
    Bipartition rho{a, b};
    if (c == PClass::orth_even && Bipartition{b, a} > rho)
        rho = {b, a};
    return rho;
}

} // namespace wf
