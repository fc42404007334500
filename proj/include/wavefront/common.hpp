#ifndef WAVEFRONT_COMMON_HPP
#define WAVEFRONT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wf {

/* Error categories surfaced through the C API as integer codes. */
enum class errc : int {
    ok = 0,
    parse_error = 1,
    wrong_class = 2,
    not_special = 3,
    not_a_partition = 4,
    bound_exceeded = 5,
    invalid_input = 6,
    internal = 7,
};

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg)
{
    throw error(c, msg);
}

/* Always-on assertion. Internal invariants are part of the contract, so
 * violations must surface in release builds too. */
#define WF_ASSERT(cond)                                                      \
    do {                                                                     \
        if (!(cond))                                                         \
            ::wf::fail(::wf::errc::internal,                                 \
                       std::string("assertion failed: ") + #cond + " at " +  \
                           __FILE__ + ":" + std::to_string(__LINE__));       \
    } while (0)

#define WF_REQUIRE(cond, code, msg)                                          \
    do {                                                                     \
        if (!(cond))                                                         \
            ::wf::fail(code, msg);                                           \
    } while (0)

/* Exact dyadic rational num / 2^e with e >= 0, kept in lowest terms. */
struct Dyadic {
    long long num = 0;
    int e = 0;

    Dyadic() = default;
    Dyadic(long long n) : num(n), e(0) {}
    Dyadic(long long n, int exp) : num(n), e(exp) { reduce(); }

    void reduce()
    {
        if (num == 0) {
            e = 0;
            return;
        }
        while (e > 0 && num % 2 == 0) {
            num /= 2;
            --e;
        }
    }

    friend Dyadic operator+(Dyadic a, Dyadic b)
    {
        int e = a.e > b.e ? a.e : b.e;
        long long n = (a.num << (e - a.e)) + (b.num << (e - b.e));
        return Dyadic(n, e);
    }
    friend Dyadic operator-(Dyadic a, Dyadic b)
    {
        return a + Dyadic(-b.num, b.e);
    }
    friend Dyadic operator*(Dyadic a, Dyadic b)
    {
        return Dyadic(a.num * b.num, a.e + b.e);
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b)
    {
        return a.num == b.num && a.e == b.e;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b)
    {
        return !(a == b);
    }
    bool is_zero() const { return num == 0; }

    std::string str() const
    {
        if (e == 0)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(1LL << e);
    }
};

} // namespace wf

#endif
