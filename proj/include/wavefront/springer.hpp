#ifndef WAVEFRONT_SPRINGER_HPP
#define WAVEFRONT_SPRINGER_HPP

#include <tuple>
#include <vector>

#include "wavefront/symbol.hpp"

namespace wf {

/* A partition with signs on its bp parts (even parts for symplectic,
 * odd parts for orthogonal). Orthogonal signs are stored as the quotient
 * representative with first sign +1. */
struct SignedPartition {
    Partition lam;
    PClass cls = PClass::symp;
    EpsMap eps;

    auto tie() const { return std::tie(lam, cls, eps); }
    friend bool operator<(const SignedPartition& a, const SignedPartition& b)
    {
        return a.tie() < b.tie();
    }
    friend bool operator==(const SignedPartition& a, const SignedPartition& b)
    {
        return a.tie() == b.tie();
    }
};

/* Validates the eps domain (and the orthogonal normal form). */
void check_signed(const SignedPartition& sp);

/* All signed partitions of the class with the given total; orthogonal
 * classes enumerate quotient representatives. */
std::vector<SignedPartition> signed_partitions(PClass c, int total);

struct SpringerDatum {
    int k = 0;
    Bipartition rho;

    auto tie() const { return std::tie(k, rho); }
    friend bool operator<(const SpringerDatum& a, const SpringerDatum& b)
    {
        return a.tie() < b.tie();
    }
    friend bool operator==(const SpringerDatum& a, const SpringerDatum& b)
    {
        return a.tie() == b.tie();
    }
};

/* The cuspidal-support integer k of a signed partition. */
int k_of(const SignedPartition& sp);

/* Generalized Springer parametrization (lambda, eps) <-> (k, rho). For
 * even-orthogonal k = 0 the datum is the unordered {rho, swap(rho)}
 * class, returned with the lexicographically larger side first. N is the
 * Weyl-group rank: total = 2N (symplectic, even-orthogonal) or 2N+1. */
SpringerDatum springer(const SignedPartition& sp);
SignedPartition springer_inv(PClass cls, const SpringerDatum& d,
                             long long N);

/* The ordinary Springer bipartition of a special partition. */
Bipartition ordinary_springer_special(const Partition& lam, PClass c);

} // namespace wf

#endif
