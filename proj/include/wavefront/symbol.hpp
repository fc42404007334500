#ifndef WAVEFRONT_SYMBOL_HPP
#define WAVEFRONT_SYMBOL_HPP

#include <map>
#include <tuple>
#include <vector>

#include "wavefront/duality.hpp"
#include "wavefront/partition.hpp"

namespace wf {

enum class SymKind { imp, pair };

/* A symbol is an ordered pair (X, Y) of finite sets of nonnegative ints,
 * stored descending. (X,Y) and (Y,X) are distinct symbols. */
struct Symbol {
    std::vector<int> X, Y;
    SymKind kind = SymKind::imp;

    auto tie() const { return std::tie(X, Y, kind); }
    friend bool operator==(const Symbol& a, const Symbol& b)
    {
        return a.tie() == b.tie();
    }
    friend bool operator<(const Symbol& a, const Symbol& b)
    {
        return a.tie() < b.tie();
    }
};

struct SymbolStats {
    long long rank;
    int defect;
    int r;
};

using Bipartition = std::pair<Partition, Partition>;

/* Coordinates of a symbol inside its family: tau on the full interval
 * list, delta on the 0-free intervals, and the defect parameter r. */
struct FamilyCoord {
    std::map<Interval, int> tau;
    std::map<Interval, int> delta;
    int r = 0;

    friend bool operator==(const FamilyCoord& a, const FamilyCoord& b)
    {
        return a.tau == b.tau && a.delta == b.delta && a.r == b.r;
    }
};

Symbol normalize_symbol(Symbol s);
Symbol expand_symbol(Symbol s, int times);
SymbolStats symbol_stats(const Symbol& s);

Symbol symb(SymKind kind, int r, const Partition& alpha,
            const Partition& beta);
/* Inverse of symb: recovers (r, alpha, beta). */
std::tuple<int, Partition, Partition> symb_inv(const Symbol& s);

/* Ordinary Springer symbols of (lam, eps = +1), one per class. */
Symbol ordinary_symbol_symp(const Partition& lam);
Symbol ordinary_symbol_orth_odd(const Partition& lam);
Symbol ordinary_symbol_orth_even(const Partition& lam);

/* Inverse maps of the ordinary symbols (partition from a symbol of the
 * right kind/defect). */
Partition ordinary_symbol_symp_inv(const Symbol& s);
Partition ordinary_symbol_orth_odd_inv(const Symbol& s);
Partition ordinary_symbol_orth_even_inv(const Symbol& s);

/* The special symbol of a special partition (classes symp, orth_even). */
Symbol special_symbol(const Partition& lam, PClass c);

/* All symbols of the family of special lam, at the special symbol's
 * shift level. */
std::vector<Symbol> family_enumerate(const Partition& lam, PClass c);

/* The unique special partition whose family contains s. */
Partition family_of(const Symbol& s);

/* Representative of s inside family_enumerate(lam, c); fails when s is
 * not in the family. */
Symbol family_representative(const Partition& lam, PClass c, const Symbol& s);
bool in_family(const Partition& lam, PClass c, const Symbol& s);

FamilyCoord tau_delta(const Partition& lam, PClass c, const Symbol& s);
Symbol coord_inv(const Partition& lam, PClass c, const FamilyCoord& fc);

/* Pairing of two symbols of the same family. */
int pairing(const Partition& lam, PClass c, const Symbol& a, const Symbol& b);

/* Fourier involution on the span of one family. */
std::vector<std::pair<Symbol, Dyadic>> fourier_apply(const Symbol& s);
std::vector<std::pair<Symbol, Dyadic>>
fourier_apply(const std::vector<std::pair<Symbol, Dyadic>>& v);

/* Complement duality on symbols. */
Symbol dual_symbol(const Symbol& s);

} // namespace wf

#endif
