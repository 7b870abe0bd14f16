#ifndef BSDLAB_NUMUTIL_HPP
#define BSDLAB_NUMUTIL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bsdlab/errors.hpp"

namespace bsdlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
// extended-precision real (50 decimal digits), used by the extended mode
using Ext = boost::multiprecision::cpp_bin_float_50;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// natural log of a positive big integer, exact to double precision
inline double ln_big(const Int& n) {
    if (n <= 0) throw DegenerateInput("ln_big: nonpositive argument");
    return static_cast<double>(log(Ext(n)));
}

inline double to_double(const Rat& q) {
    return static_cast<double>(Ext(q));
}

// p-adic valuation; v(0) treated as +infinity via a large sentinel
constexpr int VAL_INFTY = 1 << 28;

inline int valuation(Int n, const Int& p) {
    if (n == 0) return VAL_INFTY;
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline int valuation(const Rat& q, const Int& p) {
    if (q == 0) return VAL_INFTY;
    return valuation(rat_num(q), p) - valuation(rat_den(q), p);
}

// trial-division factorization; throws FactorizationIncomplete when a
// cofactor above limit^2 remains composite-or-unknown
inline std::map<Int, int> factorize(Int n, std::uint64_t limit = 2'000'000) {
    if (n == 0) throw DegenerateInput("factorize(0)");
    if (n < 0) n = -n;
    std::map<Int, int> f;
    for (std::uint64_t d = 2; d <= limit && Int(d) * d <= n; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) { ++f[Int(d)]; n /= d; }
    }
    if (n > 1) {
        if (n > Int(limit) * limit)
            throw FactorizationIncomplete("factorize: cofactor too large: " + n.str());
        ++f[n];  // below limit^2 and free of divisors <= limit, hence prime
    }
    return f;
}

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            ps.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) comp[j] = true;
        }
    }
    return ps;
}

// exact integer square root test
inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = sqrt(n);
    if (root * root == n) return true;
    // sqrt on cpp_int is exact floor, so one check suffices
    return false;
}

inline Int pow_int(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// a^e mod m for machine-word moduli
inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, b = a % m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a % p, p - 2, p);  // p prime
}

inline std::uint64_t mod_u64(const Int& n, std::uint64_t m) {
    Int r = n % Int(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

}  // namespace bsdlab

#endif
