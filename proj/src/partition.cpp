#include "wavefront/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wf {

Partition canon(std::vector<int> parts)
{
    std::vector<int> out;
    out.reserve(parts.size());
    for (int x : parts) {
        WF_REQUIRE(x >= 0, errc::not_a_partition, "negative part");
        if (x > 0)
            out.push_back(x);
    }
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

int part_at(const Partition& p, int j)
{
    if (j < 1 || j > (int)p.size())
        return 0;
    return p[j - 1];
}

long long psum(const Partition& p)
{
    return std::accumulate(p.begin(), p.end(), 0LL);
}

long long part_sum_k(const Partition& p, int k)
{
    long long s = 0;
    for (int j = 1; j <= k; ++j)
        s += part_at(p, j);
    return s;
}

int mult_of(const Partition& p, int i)
{
    return (int)std::count(p.begin(), p.end(), i);
}

int mult_ge(const Partition& p, int i)
{
    return (int)std::count_if(p.begin(), p.end(),
                              [i](int x) { return x >= i; });
}

std::vector<int> jord(const Partition& p)
{
    std::vector<int> out;
    for (int x : p)
        if (out.empty() || out.back() != x)
            out.push_back(x);
    return out;
}

Partition transpose(const Partition& p)
{
    if (p.empty())
        return {};
    Partition out;
    out.reserve(p[0]);
    for (int j = 1; j <= p[0]; ++j)
        out.push_back(mult_ge(p, j));
    return out;
}

bool dominance_leq(const Partition& a, const Partition& b)
{
    int k = (int)std::max(a.size(), b.size());
    long long sa = 0, sb = 0;
    for (int j = 1; j <= k; ++j) {
        sa += part_at(a, j);
        sb += part_at(b, j);
        if (sa > sb)
            return false;
    }
    return true;
}

Partition punion(const Partition& a, const Partition& b)
{
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    return canon(all);
}

Partition add_sequence(const Partition& p, const IntSeq& s)
{
    size_t L = std::max(p.size(), s.size());
    std::vector<int> out;
    out.reserve(L);
    for (size_t j = 1; j <= L; ++j) {
        int v = part_at(p, (int)j) + (j <= s.size() ? s[j - 1] : 0);
        WF_REQUIRE(v >= 0, errc::not_a_partition,
                   "add_sequence: negative entry");
        out.push_back(v);
    }
    for (size_t i = 0; i + 1 < out.size(); ++i)
        WF_REQUIRE(out[i] >= out[i + 1], errc::not_a_partition,
                   "add_sequence: result not weakly decreasing");
    return canon(out);
}

bool is_symplectic(const Partition& p)
{
    for (int i : jord(p))
        if (i % 2 == 1 && mult_of(p, i) % 2 == 1)
            return false;
    return true;
}

bool is_orthogonal(const Partition& p)
{
    for (int i : jord(p))
        if (i % 2 == 0 && mult_of(p, i) % 2 == 1)
            return false;
    return true;
}

bool is_special_symp(const Partition& p)
{
    int m = ((int)p.size() + 1) / 2;
    for (int j = 1; j <= m; ++j)
        if (part_at(p, 2 * j - 1) % 2 != part_at(p, 2 * j) % 2)
            return false;
    return true;
}

bool is_special_orth_odd(const Partition& p)
{
    int m = (int)p.size() / 2 + 1;
    for (int j = 1; j <= m; ++j)
        if (part_at(p, 2 * j) % 2 != part_at(p, 2 * j + 1) % 2)
            return false;
    return true;
}

bool is_special_orth_even(const Partition& p)
{
    int m = ((int)p.size() + 1) / 2;
    for (int j = 1; j <= m; ++j)
        if (part_at(p, 2 * j - 1) % 2 != part_at(p, 2 * j) % 2)
            return false;
    return true;
}

bool is_class(const Partition& p, PClass c)
{
    switch (c) {
    case PClass::symp:
        return is_symplectic(p) && psum(p) % 2 == 0;
    case PClass::orth_odd:
        return is_orthogonal(p) && psum(p) % 2 == 1;
    case PClass::orth_even:
        return is_orthogonal(p) && psum(p) % 2 == 0;
    }
    return false;
}

bool is_special(const Partition& p, PClass c)
{
    if (!is_class(p, c))
        return false;
    switch (c) {
    case PClass::symp:
        return is_special_symp(p);
    case PClass::orth_odd:
        return is_special_orth_odd(p);
    case PClass::orth_even:
        return is_special_orth_even(p);
    }
    return false;
}

Classification classify(const Partition& p)
{
    Classification c;
    c.symplectic = is_symplectic(p);
    c.orthogonal = is_orthogonal(p);
    c.special_symp = c.symplectic && is_special_symp(p);
    bool odd_total = psum(p) % 2 == 1;
    c.special_orth_odd = c.orthogonal && odd_total && is_special_orth_odd(p);
    c.special_orth_even =
        c.orthogonal && !odd_total && is_special_orth_even(p);
    return c;
}

static void gen_partitions(int n, int maxpart, Partition& cur,
                           std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int first = std::min(n, maxpart); first >= 1; --first) {
        cur.push_back(first);
        gen_partitions(n - first, first, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_partitions(int n, int maxpart)
{
    WF_REQUIRE(n >= 0, errc::invalid_input, "negative partition total");
    if (maxpart < 0)
        maxpart = n;
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, maxpart, cur, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int n, PClass c, bool special_only,
                                            int bound)
{
    WF_REQUIRE(n <= bound, errc::bound_exceeded,
               "enumeration bound exceeded");
    std::vector<Partition> out;
    for (const Partition& p : all_partitions(n))
        if (is_class(p, c) && (!special_only || is_special(p, c)))
            out.push_back(p);
    return out;
}

std::vector<Partition> symp_partitions(int two_n)
{
    std::vector<Partition> out;
    for (const Partition& p : all_partitions(two_n))
        if (is_symplectic(p))
            out.push_back(p);
    return out;
}

std::vector<Partition> orth_partitions(int m)
{
    std::vector<Partition> out;
    for (const Partition& p : all_partitions(m))
        if (is_orthogonal(p))
            out.push_back(p);
    return out;
}

std::vector<Partition> symp_special_partitions(int two_n)
{
    std::vector<Partition> out;
    for (const Partition& p : symp_partitions(two_n))
        if (is_special_symp(p))
            out.push_back(p);
    return out;
}

std::vector<Partition> orth_even_special_partitions(int two_n)
{
    std::vector<Partition> out;
    for (const Partition& p : orth_partitions(two_n))
        if (is_special_orth_even(p))
            out.push_back(p);
    return out;
}

std::vector<Partition> orth_odd_special_partitions(int m)
{
    std::vector<Partition> out;
    for (const Partition& p : orth_partitions(m))
        if (is_special_orth_odd(p))
            out.push_back(p);
    return out;
}

std::vector<EpsMap> eps_patterns(const std::vector<int>& parts)
{
    std::vector<EpsMap> out;
    size_t t = parts.size();
    WF_ASSERT(t < 30);
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        EpsMap e;
        for (size_t h = 0; h < t; ++h)
            e[parts[h]] = (mask >> h & 1) ? -1 : 1;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace wf
