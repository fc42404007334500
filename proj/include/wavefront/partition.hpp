#ifndef WAVEFRONT_PARTITION_HPP
#define WAVEFRONT_PARTITION_HPP

#include <map>
#include <vector>

#include "wavefront/common.hpp"

namespace wf {

/* A partition is a weakly decreasing vector of positive ints (canonical
 * form strips zeros). Indexed reads beyond the stored length return 0. */
using Partition = std::vector<int>;

/* An integer sequence, 1-indexed through seq_at, zero-extended. */
using IntSeq = std::vector<int>;

enum class PClass { symp, orth_odd, orth_even };

/* Sign assignment on distinct part values, keyed descending. */
using EpsMap = std::map<int, int, std::greater<int>>;

Partition canon(std::vector<int> parts);
int part_at(const Partition& p, int j); /* 1-based, zero-extended */
long long psum(const Partition& p);
long long part_sum_k(const Partition& p, int k);
int mult_of(const Partition& p, int i);
int mult_ge(const Partition& p, int i);
std::vector<int> jord(const Partition& p); /* distinct parts, descending */
Partition transpose(const Partition& p);
bool dominance_leq(const Partition& a, const Partition& b);
Partition punion(const Partition& a, const Partition& b);
Partition add_sequence(const Partition& p, const IntSeq& s);

bool is_symplectic(const Partition& p);
bool is_orthogonal(const Partition& p);
bool is_special_symp(const Partition& p);
bool is_special_orth_odd(const Partition& p);
bool is_special_orth_even(const Partition& p);
bool is_class(const Partition& p, PClass c);
bool is_special(const Partition& p, PClass c);

struct Classification {
    bool symplectic = false;
    bool orthogonal = false;
    bool special_symp = false;
    bool special_orth_odd = false;
    bool special_orth_even = false;
};
Classification classify(const Partition& p);

/* All partitions of n, lexicographically descending (a linear extension
 * of descending dominance order). */
std::vector<Partition> all_partitions(int n, int maxpart = -1);

/* Enumeration with class filter; bound guards against runaway input. */
std::vector<Partition> enumerate_partitions(int n, PClass c, bool special_only,
                                            int bound = 30);
std::vector<Partition> symp_partitions(int two_n);
std::vector<Partition> orth_partitions(int m);
std::vector<Partition> symp_special_partitions(int two_n);
std::vector<Partition> orth_even_special_partitions(int two_n);
std::vector<Partition> orth_odd_special_partitions(int m);

/* All global sign patterns on the listed parts, in a fixed scan order
 * (+1 before -1, most significant part first). */
std::vector<EpsMap> eps_patterns(const std::vector<int>& parts);

} // namespace wf

#endif
