#include "bsdlab/mwsearch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bsdlab/lseries.hpp"
#include "bsdlab/minimal.hpp"

namespace bsdlab {

namespace {

using i128 = __int128;

i128 to_i128(const Int& n) {
    const bool neg = n < 0;
    Int b = abs(n);
    i128 r = 0;
    int shift = 0;
    while (b > 0) {
        r |= i128(static_cast<std::uint64_t>(b & 0xffffffffffffffffULL)) << shift;
        b >>= 64;
        shift += 64;
    }
    return neg ? -r : r;
}

Int i128_to_int(i128 v) {
    const bool neg = v < 0;
    if (neg) v = -v;
    Int r = 0;
    std::vector<std::uint64_t> limbs;
    while (v > 0) {
        limbs.push_back(std::uint64_t(v & 0xffffffffffffffffULL));
        v >>= 64;
    }
    for (auto it = limbs.rbegin(); it != limbs.rend(); ++it) r = (r << 64) | *it;
    return neg ? -r : r;
}

bool i128_is_square(i128 n, i128& root) {
    if (n < 0) return false;
    long double g = sqrtl((long double)n);
    i128 r = (i128)g;
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    root = r;
    return r * r == n;
}

// quadratic-residue sieve for N(m, e) = 4m^3 + b2 m^2 e^2 + 2 b4 m e^4 + b6 e^6
struct ModSieve {
    struct Table {
        std::uint32_t mod;
        std::vector<std::uint8_t> is_sq;           // squares mod `mod`
        std::vector<std::int64_t> c;               // reduced coefficients
    };
    std::vector<Table> tables;

    ModSieve(const CurveQ& e) {
        for (std::uint32_t mod : {64u, 63u, 65u, 11u, 17u, 19u}) {
            Table t;
            t.mod = mod;
            t.is_sq.assign(mod, 0);
            for (std::uint32_t i = 0; i < mod; ++i) t.is_sq[(i * i) % mod] = 1;
            t.c = {std::int64_t(mod_u64(e.b2(), mod)), std::int64_t(mod_u64(e.b4(), mod)),
                   std::int64_t(mod_u64(e.b6(), mod))};
            tables.push_back(std::move(t));
        }
    }

    bool pass(std::int64_t m, std::int64_t e) const {
        for (const auto& t : tables) {
            const std::int64_t mod = t.mod;
            const std::int64_t mm = ((m % mod) + mod) % mod;
            const std::int64_t ee = ((e % mod) + mod) % mod;
            const std::int64_t e2 = ee * ee % mod, e4 = e2 * e2 % mod,
                               e6 = e4 * e2 % mod;
            std::int64_t n = (4 * mm % mod) * mm % mod * mm % mod;
            n = (n + t.c[0] * mm % mod * mm % mod * e2) % mod;
            n = (n + 2 * t.c[1] * mm % mod * e4) % mod;
            n = (n + t.c[2] * e6) % mod;
            if (!t.is_sq[size_t(n)]) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<RationalPoint> search_points(const CurveQ& e, double cutoff,
                                         std::uint64_t budget, SearchStats* stats) {
    if (cutoff < 0) throw DegenerateInput("search_points: cutoff >= 0 required");
    const double X = std::exp(std::min(cutoff, 42.0));  // i128 headroom guard
    if (cutoff > 42.0)
        throw CutoffInfeasible("search_points: cutoff " + std::to_string(cutoff) +
                               " beyond integer range");
    const std::int64_t Mmax = std::int64_t(X);
    const std::int64_t Emax = std::int64_t(std::sqrt(X));

    const i128 b2 = to_i128(e.b2()), b4 = to_i128(e.b4()), b6 = to_i128(e.b6());
    // magnitude guard: |N| <= 4|m|^3 + ... must stay inside i128
    {
        const long double worst =
            4.0L * powl((long double)Mmax, 3) +
            fabsl((long double)(double)Ext(e.b2())) * powl((long double)Mmax, 2) *
                powl((long double)Emax, 2) +
            2 * fabsl((long double)(double)Ext(e.b4())) * Mmax * powl((long double)Emax, 4) +
            fabsl((long double)(double)Ext(e.b6())) * powl((long double)Emax, 6);
        if (worst > 1.0e37L)
            throw CutoffInfeasible("search_points: coefficients too large for the "
                                   "fast enumerator at this cutoff");
    }

    const ModSieve sieve(e);
    std::vector<RationalPoint> out;
    SearchStats st;
    for (std::int64_t den = 1; den <= Emax; ++den) {
        const i128 e2 = i128(den) * den, e4 = e2 * e2, e6 = e4 * e2;
        for (std::int64_t m = -Mmax; m <= Mmax; ++m) {
            if (std::gcd(std::uint64_t(m < 0 ? -m : m), std::uint64_t(den)) != 1) continue;
            ++st.scanned;
            if (!sieve.pass(m, den)) continue;
            if (++st.tested > budget)
                throw CutoffInfeasible("search_points: enumeration budget exceeded (" +
                                       std::to_string(budget) + " square tests)");
            const i128 mm = m;
            const i128 N = 4 * mm * mm * mm + b2 * mm * mm * e2 + 2 * b4 * mm * e4 +
                           b6 * e6;
            i128 root;
            if (!i128_is_square(N, root)) continue;
            // 2y + a1 x + a3 = root / e^3 with root >= 0: canonical {P, -P} rep
            const Rat x(Int(m), Int(den) * den);
            const Rat ypsi(i128_to_int(root), Int(den) * den * den);
            const Rat y = (ypsi - Rat(e.a1()) * x - Rat(e.a3())) / 2;
            const RationalPoint p = RationalPoint::affine(x, y);
            if (!e.contains(p)) throw Error("search_points: square test inconsistency");
            out.push_back(p);
        }
    }
    if (stats) *stats = st;
    return out;
}

MWBasis extract_basis(const CurveQ& e, const std::vector<RationalPoint>& pts,
                      int r_expected) {
    // dedup and drop torsion
    std::vector<std::pair<double, RationalPoint>> cand;
    for (const auto& p : pts) {
        if (p.infinity) continue;
        bool dup = false;
        for (auto& [h, q] : cand)
            if (q == p || q == e.negate(p)) { dup = true; break; }
        if (dup) continue;
        const double h = canonical_height(e, p);
        if (h < 1e-10) continue;
        cand.push_back({h, p});
    }
    std::sort(cand.begin(), cand.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    MWBasis basis;
    for (auto& [h, p] : cand) {
        if (int(basis.points.size()) >= r_expected) break;
        std::vector<RationalPoint> trial = basis.points;
        trial.push_back(p);
        const double d = regulator(e, trial);
        if (d > 1e-12) basis.points = std::move(trial);
    }
    if (int(basis.points.size()) < r_expected)
        throw InsufficientPoints("extract_basis: found " +
                                 std::to_string(basis.points.size()) + " of " +
                                 std::to_string(r_expected) +
                                 " independent points; widen the cutoff");

    // LLL on the Gram matrix, exact unimodular moves on the points
    const int r = int(basis.points.size());
    if (r >= 2) {
        auto G = gram_matrix(e, basis.points);
        auto mu_reduce = [&](int i, int j) {
            const double mu = G[i][j] / G[j][j];
            const long k = std::lround(mu);
            if (k == 0) return;
            // P_i -= k P_j
            basis.points[size_t(i)] =
                e.add(basis.points[size_t(i)], e.mul(-k, basis.points[size_t(j)]));
            G = gram_matrix(e, basis.points);
        };
        bool changed = true;
        for (int pass = 0; pass < 64 && changed; ++pass) {
            changed = false;
            for (int i = 1; i < r; ++i)
                for (int j = i - 1; j >= 0; --j) mu_reduce(i, j);
            for (int i = 0; i + 1 < r; ++i) {
                if (G[i + 1][i + 1] < 0.75 * G[i][i]) {
                    std::swap(basis.points[size_t(i)], basis.points[size_t(i + 1)]);
                    G = gram_matrix(e, basis.points);
                    changed = true;
                }
            }
        }
    }

    // sort by height and finalize
    std::sort(basis.points.begin(), basis.points.end(),
              [&](const RationalPoint& a, const RationalPoint& b) {
                  return canonical_height(e, a) < canonical_height(e, b);
              });
    basis.gram = gram_matrix(e, basis.points);
    for (int i = 0; i < r; ++i) basis.heights_sorted.push_back(basis.gram[size_t(i)][size_t(i)]);
    basis.regulator = basis.points.empty() ? 1.0 : det(basis.gram);
    return basis;
}

std::pair<MWBasis, SearchCertificate> manin_procedure(const CurveQ& e0,
                                                      const ManinOptions& opt,
                                                      const ConstantsConfig& cfg) {
    const CurveQ e = minimal_model(e0);
    SearchCertificate cert;

    int r;
    if (opt.rank_override) {
        r = *opt.rank_override;
    } else {
        r = leading_coefficient(e).analytic_order;  // OrderTooHigh propagates
    }

    VarietyInvariants vi;
    vi.g = 1;
    vi.d = 1;
    vi.disc = 1;
    vi.cond = conductor(e);
    // clamped height in the cutoff bound: e^{d max(h,1)} >= e^{d h}, so the
    // bound stays valid and the cutoff matches the documented unit-height value
    vi.faltings = std::max(faltings_height(e), 1.0);
    vi.rank = r;
    const ValidatedInvariants inv = validate(vi);

    if (r >= 1) {
        cert.cutoff_bound = generator_height_bound(inv, cfg);
        cert.cutoff_canonical = cert.cutoff_bound.ln_bound.ln;
    } else {
        cert.cutoff_bound = BoundReport{"rank_zero_nominal", {opt.rank_zero_cutoff},
                                        inv.get(), cfg, {}};
        cert.cutoff_canonical = opt.rank_zero_cutoff;
    }
    if (opt.cutoff_override) cert.cutoff_canonical = *opt.cutoff_override;
    cert.cutoff_naive = cert.cutoff_canonical + height_difference_bound(e);

    SearchStats st;
    const auto pts = search_points(e, cert.cutoff_naive, opt.budget, &st);
    cert.points_scanned = st.scanned;
    cert.square_tests = st.tested;

    const MWBasis basis = extract_basis(e, pts, r);

    cert.minkowski_lhs = 1.0;
    for (double h : basis.heights_sorted) cert.minkowski_lhs *= h;
    cert.minkowski_rhs = std::exp(4.0 * ln_factorial(int(basis.points.size()))) *
                         basis.regulator;
    if (basis.points.empty()) cert.minkowski_lhs = cert.minkowski_rhs = 1.0;
    cert.minkowski_ok = cert.minkowski_lhs <= cert.minkowski_rhs * (1 + 1e-9);
    if (!cert.minkowski_ok)
        throw Error("manin_procedure: Minkowski certificate failed");
    return {basis, cert};
}

}  // namespace bsdlab
