#ifndef WAVEFRONT_DUALITY_HPP
#define WAVEFRONT_DUALITY_HPP

#include <limits>
#include <vector>

#include "wavefront/partition.hpp"

namespace wf {

/* An interval is a set of part values (possibly containing 0), stored
 * descending. Lists of intervals are ordered by decreasing largest value
 * with the 0-interval last where present. */
using Interval = std::vector<int>;

/* Sentinel for an unbounded upper index. */
constexpr int J_INF = std::numeric_limits<int>::max();

struct IntervalSet {
    std::vector<Interval> all;   /* full list (tilde-Int in the symplectic
                                    case, with the 0-interval last) */
    std::vector<Interval> nomin; /* intervals without 0 */
    /* index ranges (j_min, j_max), j_max = J_INF for the 0-interval */
    std::vector<std::pair<int, int>> jrange; /* aligned with `all` */
};

/* Interval decomposition of a special partition. Symplectic inputs get
 * the 0-interval; orthogonal-even inputs get finite intervals only. */
std::vector<Interval> intervals_symp(const Partition& lam);
std::vector<Interval> intervals_orth_even(const Partition& lam);
IntervalSet interval_set(const Partition& lam, PClass c);

struct ZetaData {
    std::vector<int> Pp, Pm, Qp, Qm;
    IntSeq zeta;
    IntSeq s;
};

/* Index sets P/Q and the associated sequences. Symplectic inputs need
 * not be special; orthogonal-even inputs must be special. */
ZetaData zeta_s(const Partition& lam, PClass c);

/* Smallest special symplectic partition dominating lam. */
Partition sp_closure(const Partition& lam);

/* Smallest special orthogonal partition dominating lam (brute force,
 * used for the odd-orthogonal duality direction). */
Partition sp_closure_orth_brute(const Partition& lam);

/* Duality map: symplectic 2m -> special orthogonal 2m+1, odd orthogonal
 * 2m+1 -> special symplectic 2m, even orthogonal special -> itself's
 * class. */
Partition dual(const Partition& lam, PClass c);

/* Same maps computed through symbols (complement route). */
Partition dual_symbol_route(const Partition& lam, PClass c);

/* Largest orthogonal partition of total M dominated by nu. */
Partition orth_collapse(const Partition& nu, long long M);

/* Brute-force oracle for orth_collapse; fails if no greatest element. */
Partition orth_collapse_brute(const Partition& nu, long long M);

} // namespace wf

#endif
