#ifndef WAVEFRONT_ENDOSCOPY_HPP
#define WAVEFRONT_ENDOSCOPY_HPP

#include <map>
#include <set>
#include <vector>

#include "wavefront/symbol.hpp"

namespace wf {

/* One relative interval of an endoscopic induction: the set of part
 * values D, the index range [a, b] (b may be J_INF), and for two-point
 * ranges the side (1 or 2) owning the covering interval. */
struct RelInterval {
    Interval D;
    int a = 0;
    int b = 0;
    bool is_point = false;
    int d = 0; /* 0 for points, else 1 or 2 */
};

struct InductionData {
    Partition l1, l2, lam;
    IntSeq xi;              /* aligned with 1..len, +1 / -1 / 0 */
    std::set<int> Jp, Jm;
    IntervalSet iv1, iv2;
    std::vector<RelInterval> rel; /* decreasing, D_min last */
    Interval Dmin;
    std::map<Interval, int> chi;
    std::map<Interval, std::pair<int, int>> jminmax;
};

/* Endoscopic induction of a symplectic special and an orthogonal-even
 * special partition. */
InductionData induce(const Partition& l1, const Partition& l2);

bool is_regular(const InductionData& ind);

struct ZetaFunctions {
    std::map<Interval, int> taup, taum; /* on all relative intervals */
    std::map<Interval, int> dlp, dlm;   /* on 0-free relative intervals */
    int r1 = 0, r2 = 0;
};

ZetaFunctions zeta_functions(const InductionData& ind, const FamilyCoord& i1,
                             const FamilyCoord& i2);

/* The alternating interval sum attached to (tau^zeta, delta^zeta). */
long long c_zeta(const InductionData& ind, const ZetaFunctions& fns,
                 int zeta);

/* The value the interval sum must take. */
long long c_zeta_expected(int r1, int r2, int zeta);

/* A symplectic quadruple (lambda+, eps+, lambda-, eps-). */
struct Quad {
    Partition lp;
    EpsMap ep;
    Partition lm;
    EpsMap em;

    auto tie() const { return std::tie(lp, ep, lm, em); }
    friend bool operator<(const Quad& a, const Quad& b)
    {
        return a.tie() < b.tie();
    }
    friend bool operator==(const Quad& a, const Quad& b)
    {
        return a.tie() == b.tie();
    }
};

/* All multiset splits of lam into two symplectic partitions with the
 * prescribed plus-side total. */
std::vector<std::pair<Partition, Partition>>
multiset_splits(const Partition& lam, long long size_plus);

/* Maximal quadruples: the congruence and sign conditions on top of
 * lambda+ u lambda- = lambda. */
std::vector<Quad> i_zeta_max(const InductionData& ind,
                             const ZetaFunctions& fns, int zeta, int nu,
                             int nplus, int nminus);

/* Inverse of zeta_functions: the unique family pair producing fns. */
std::pair<FamilyCoord, FamilyCoord>
reconstruct_iotas(const InductionData& ind, const ZetaFunctions& fns);

/* All (lambda1, lambda2) splits that regularly induce lam with the given
 * chi, searched deterministically (n1 descending, then lexicographic). */
std::vector<std::pair<Partition, Partition>>
splits_for_chi(const Partition& lam, const std::map<int, int>& chi);

/* First split per the deterministic order; fails when none exists. */
std::pair<Partition, Partition>
split_for_chi(const Partition& lam, const std::map<int, int>& chi);

/* Brute-force comparison set: decompose Pi^zeta, pull constituents back
 * through the Springer parametrization, filter by k = h^{+-}. Returns
 * quadruples with multiplicities. */
std::vector<std::pair<Quad, long long>>
i_zeta_bruteforce(const Partition& l1, const FamilyCoord& i1,
                  const Partition& l2, const FamilyCoord& i2, int zeta,
                  int nplus, int nminus);

} // namespace wf

#endif
