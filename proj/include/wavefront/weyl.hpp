#ifndef WAVEFRONT_WEYL_HPP
#define WAVEFRONT_WEYL_HPP

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "wavefront/symbol.hpp"

namespace wf {

/* Littlewood-Richardson coefficient c^lam_{mu,nu} (lattice-word tableau
 * counter, memoized). */
long long lr_coeff(const Partition& lam, const Partition& mu,
                   const Partition& nu);

/* Independent oracle: Jacobi-Trudi alternating sum over Pieri chains. */
long long lr_coeff_oracle(const Partition& lam, const Partition& mu,
                          const Partition& nu);

/* All (mu, nu, c) with S(mu) = p and c = c^lam_{mu,nu} > 0. */
std::vector<std::tuple<Partition, Partition, long long>>
lr_splits(const Partition& lam, int p);

/* All partitions obtained from mu by adding a horizontal strip of size r. */
std::vector<Partition> pieri_h(const Partition& mu, int r);

using BipPair = std::pair<Bipartition, Bipartition>;
using VirtualRep = std::map<Bipartition, long long>;
using PairRep = std::map<BipPair, long long>;

/* Character twists on bipartitions: sgn transposes and swaps the sides,
 * sgn_CD swaps them. Both are involutive. */
Bipartition twist_sgn(const Bipartition& b);
Bipartition twist_sgn_cd(const Bipartition& b);

/* Restriction of the W_{p+q}-irreducible rho to W_p x W_q. */
PairRep res_bip(const Bipartition& rho, int p, int q);

/* Induction of rho1 (x) rho2 from W_p x W_q to W_{p+q}. */
VirtualRep ind_bip(const Bipartition& rho1, const Bipartition& rho2);

/* Multilinear extensions. */
VirtualRep induct(const PairRep& v);
PairRep restrict_rep(const VirtualRep& v, int N1, int N2);

struct GammaIndex {
    int rp = 0;  /* r' >= 0 */
    int rpp = 0; /* r'' in Z */
    int Np = 0;
    int Nm = 0;

    auto tie() const { return std::tie(rp, rpp, Np, Nm); }
    friend bool operator<(const GammaIndex& a, const GammaIndex& b)
    {
        return a.tie() < b.tie();
    }
    friend bool operator==(const GammaIndex& a, const GammaIndex& b)
    {
        return a.tie() == b.tie();
    }
};

/* The graded value n of a gamma index. */
long long gamma_n(const GammaIndex& g);

using RElement = std::map<GammaIndex, std::map<BipPair, Dyadic>>;

/* The two independently implemented a-tables: one keyed on (r', r''),
 * one keyed on (zeta, r1 vs |r2|). Order: (a1+, a1-, a2+, a2-). */
std::array<int, 4> a_table_r(int rp, int rpp);
std::array<int, 4> a_table_pi(int zeta, int r1, int r2);

/* sgn tensor endomorphism of an RElement (factorwise sgn twist). */
RElement sgn_tensor(const RElement& x);

/* The res / sgn_CD-twist / ind endomorphism over all target (N1, N2). */
RElement rho_iota(const RElement& x);

/* Fourier automorphism, blockwise over families on both factors. */
RElement fourier_R(const RElement& x);

/* Cuspidal support sizes (h+, h-) for a zeta-side choice. */
std::pair<int, int> h_pm(int zeta, int r1, int r2);

/* Raw decomposition kernel shared by rho_iota-style sums; cached. */
PairRep pi_zeta_decomp(const Bipartition& rho1, const Bipartition& rho2,
                       int N1, int N2, int Np, int Nm,
                       const std::array<int, 4>& avec);

/* The representation Pi^zeta(iota1, iota2) of W_{N+} x W_{N-}. */
PairRep pi_zeta(const Partition& l1, const FamilyCoord& i1,
                const Partition& l2, const FamilyCoord& i2, int zeta,
                int nplus, int nminus);

} // namespace wf

#endif
