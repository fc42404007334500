#ifndef WAVEFRONT_WAVEFRONT_HPP
#define WAVEFRONT_WAVEFRONT_HPP

#include <optional>
#include <utility>

#include "wavefront/endoscopy.hpp"

namespace wf {

/* Validates an all-even symplectic partition with signs on every part. */
void check_even_signed(const Partition& lam, const EpsMap& eps);

/* The largest member of the packet's support, with its signs. */
std::pair<Partition, EpsMap> lambda_max(const Partition& lam,
                                        const EpsMap& eps);

/* Transpose of the smallest member. */
Partition t_lambda_min(const Partition& lam, const EpsMap& eps);

/* The wave front partition of a quadruple: an orthogonal partition of
 * 2n + 1 where 2n = |lambda+| + |lambda-|. */
Partition wavefront(const Partition& lp, const EpsMap& ep,
                    const Partition& lm, const EpsMap& em);
Partition wavefront(const Quad& q);

/* The (r', r'') parameters attached to a pair of cuspidal supports. */
std::pair<int, int> r_params(int kp, int km);

/* Product of the signs on odd-multiplicity bp parts, and the full
 * product eps(i)^mult(i); the two agree. */
int sgn_sharp(const Quad& q);
int sgn_sharp_full(const Quad& q);

struct MpiResult {
    Dyadic value;
    int int1 = 0;    /* 0-free interval count of lambda_1 */
    int int2 = 0;    /* interval count of lambda_2 */
    int compat = 0;  /* shape-compatible family pairs found */
    Partition l1, l2;
};

/* Minimal-member multiplicity through the split (l1, l2); empty when
 * the split cannot carry the required family coordinates. */
std::optional<MpiResult> m_pi_min(const Quad& q, const Partition& l1,
                                  const Partition& l2);

/* Scans chi assignments and splits deterministically and returns the
 * first success; fails when no split works. */
MpiResult m_pi_min_auto(const Quad& q);

} // namespace wf

#endif
