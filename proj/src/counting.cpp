#include "bsdlab/counting.hpp"

#include <cmath>
#include <vector>

namespace bsdlab {

std::uint64_t count_points(const CurveQ& e, std::uint32_t p) {
    if (mod_u64(e.disc(), p) == 0)
        throw BadReduction("count_points: p | disc at p = " + std::to_string(p));
    if (p == 2) {
        const std::uint64_t a1 = mod_u64(e.a1(), 2), a2 = mod_u64(e.a2(), 2),
                            a3 = mod_u64(e.a3(), 2), a4 = mod_u64(e.a4(), 2),
                            a6 = mod_u64(e.a6(), 2);
        std::uint64_t cnt = 1;
        for (std::uint64_t x = 0; x < 2; ++x)
            for (std::uint64_t y = 0; y < 2; ++y)
                if ((y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x +
                     a4 * x + a6) % 2 == 0)
                    ++cnt;
        return cnt;
    }
    // odd p: complete the square; count 1 + chi(g(x)) over x with
    // g = 4x^3 + b2 x^2 + 2 b4 x + b6
    const std::uint64_t b2 = mod_u64(e.b2(), p), b4 = mod_u64(e.b4(), p),
                        b6 = mod_u64(e.b6(), p);
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t t = 1, sq = 1; t <= (p - 1) / 2; ++t) {
        sq = (t * t) % p;
        chi[sq] = 1;
    }
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t g = (((4 * x + b2) % p * x + 2 * b4) % p * x + b6) % p;
        sum += chi[g];
    }
    return std::uint64_t(std::int64_t(p) + 1 + sum);
}

long ap(const CurveQ& e, std::uint32_t p) {
    const long a = long(std::int64_t(p) + 1 - std::int64_t(count_points(e, p)));
    // Hasse
    if (double(a) * a > 4.0 * p)
        throw Error("ap: Hasse bound violated, point count is buggy");
    return a;
}

}  // namespace bsdlab
