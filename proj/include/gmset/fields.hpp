#ifndef GMSET_FIELDS_HPP
#define GMSET_FIELDS_HPP

/**
 * @file fields.hpp
 * @brief Scalar fields of the similarity operators over an (x, y) lattice.
 *
 * For scalar operands the Jaccard index is A1 / A2 with
 *
 *   A1 = s_xy min(|x|,|y|)   A2 = max(|x|,|y|)   A3 = x y
 *   A4 = max(|x|,|y|)^2      A5 = min(|x|,|y|)
 *
 * and A3 / A4 = A1 / A2 away from the origin. In the sector x > y >= 0 the
 * Jaccard value along any circle about the origin is y / x = tan(alpha), so
 * the surface is a cone rotating linearly in tan(alpha) from the crest x = y
 * (value 1) to the anti-crest x = -y (value -1).
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "msetops.hpp"
#include "signs.hpp"

namespace gmset {

enum class FieldExpr { a1, a2, a3, a4, a5, jr, jr_pow, kron };

constexpr std::string_view to_string(FieldExpr e) noexcept
{
    switch (e) {
    case FieldExpr::a1: return "a1";
    case FieldExpr::a2: return "a2";
    case FieldExpr::a3: return "a3";
    case FieldExpr::a4: return "a4";
    case FieldExpr::a5: return "a5";
    case FieldExpr::jr: return "jr";
    case FieldExpr::jr_pow: return "jrpow";
    case FieldExpr::kron: return "kron";
    }
    return "?";
}

constexpr std::optional<FieldExpr> parse_field_expr(std::string_view name) noexcept
{
    for (FieldExpr e : {FieldExpr::a1, FieldExpr::a2, FieldExpr::a3, FieldExpr::a4, FieldExpr::a5, FieldExpr::jr,
                        FieldExpr::jr_pow, FieldExpr::kron}) {
        if (to_string(e) == name) {
            return e;
        }
    }
    return std::nullopt;
}

/// Fields whose values are confined to [-1, 1].
constexpr bool is_bounded(FieldExpr e) noexcept
{
    return e == FieldExpr::jr || e == FieldExpr::jr_pow || e == FieldExpr::kron;
}

/**
 * Endpoint-inclusive rectangular lattice, nx columns by ny rows. The default
 * 401 x 401 over [-2, 2]^2 places both crests and both axes on lattice points.
 */
struct GridSpec {
    double x_min = -2.0;
    double x_max = 2.0;
    double y_min = -2.0;
    double y_max = 2.0;
    std::size_t nx = 401;
    std::size_t ny = 401;

    void validate() const
    {
        if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) || !std::isfinite(y_max)) {
            throw std::invalid_argument("grid: non-finite bounds");
        }
        if (!(x_min < x_max) || !(y_min < y_max)) {
            throw std::invalid_argument("grid: need x_min < x_max and y_min < y_max");
        }
        if (nx < 2 || ny < 2) {
            throw std::invalid_argument("grid: need nx, ny >= 2");
        }
    }

    // (lo (n-1-i) + hi i) / (n-1): the same point as lo + i (hi-lo)/(n-1), but
    // mirror-exact, so symmetric ranges give x(n-1-i) == -x(i) bit for bit.
    static double lattice(double lo, double hi, std::size_t n, std::size_t i)
    {
        const auto last = static_cast<double>(n - 1);
        const auto k = static_cast<double>(i);
        return (lo * (last - k) + hi * k) / last;
    }

    double x_at(std::size_t i) const { return lattice(x_min, x_max, nx, i); }
    double y_at(std::size_t j) const { return lattice(y_min, y_max, ny, j); }
    std::size_t size() const noexcept { return nx * ny; }
};

/// Row-major values; row j holds y_at(j), rows ordered from y_min upward.
struct ScalarField {
    GridSpec spec;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[j * spec.nx + i]; }
};

/// Scalar Jaccard A1 / A2, 0 at the origin.
template <std::floating_point T>
T scalar_jaccard(T x, T y)
{
    const T den = kernel(MsetOp::acup, x, y);
    return den == T(0) ? T(0) : kernel(MsetOp::scap, x, y) / den;
}

/// Value of `expr` at the point (x, y); `power` is only read for jr_pow.
template <std::floating_point T>
T evaluate(FieldExpr expr, T x, T y, int power = 1)
{
    switch (expr) {
    case FieldExpr::a1: return kernel(MsetOp::scap, x, y);
    case FieldExpr::a2: return kernel(MsetOp::acup, x, y);
    case FieldExpr::a3: return x * y;
    case FieldExpr::a4: {
        const T m = kernel(MsetOp::acup, x, y);
        return m * m;
    }
    case FieldExpr::a5: return kernel(MsetOp::acap, x, y);
    case FieldExpr::jr: return scalar_jaccard(x, y);
    case FieldExpr::jr_pow: return std::pow(scalar_jaccard(x, y), T(power));
    case FieldExpr::kron: return T(gen_kronecker(x, y));
    }
    throw std::invalid_argument("evaluate: unknown field expression");
}

/**
 * Evaluates `expr` on every lattice point. Rows are split across up to
 * `threads` workers; each cell is computed independently, so the result is
 * bitwise identical for every thread count.
 */
inline ScalarField field(FieldExpr expr, const GridSpec& spec, int power = 1, unsigned threads = 1)
{
    spec.validate();
    if (expr == FieldExpr::jr_pow && power < 1) {
        throw std::invalid_argument("field: D must be >= 1");
    }
    ScalarField out{spec, std::vector<double>(spec.size())};

    auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t j = row_begin; j < row_end; ++j) {
            const double y = spec.y_at(j);
            for (std::size_t i = 0; i < spec.nx; ++i) {
                out.values[j * spec.nx + i] = evaluate(expr, spec.x_at(i), y, power);
            }
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, spec.ny);
    if (workers == 1) {
        fill_rows(0, spec.ny);
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (spec.ny + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(spec.ny, begin + chunk);
        if (begin < end) {
            pool.emplace_back(fill_rows, begin, end);
        }
    }
    pool.clear();
    return out;
}

/// Polar probe in the sector x > y >= 0: 0 <= alpha < pi/4, rho > 0.
struct PolarProbe {
    double alpha;
    double rho;

    void validate() const
    {
        if (!(alpha >= 0.0 && alpha < std::numbers::pi / 4.0)) {
            throw std::invalid_argument("probe: alpha must lie in [0, pi/4)");
        }
        if (!(rho > 0.0) || !std::isfinite(rho)) {
            throw std::invalid_argument("probe: rho must be finite and > 0");
        }
    }
};

/// Jaccard (raised to `power`) at (rho cos alpha, rho sin alpha); equals tan(alpha)^power.
inline double probe(const PolarProbe& p, int power = 1)
{
    p.validate();
    if (power < 1) {
        throw std::invalid_argument("probe: D must be >= 1");
    }
    return evaluate(FieldExpr::jr_pow, p.rho * std::cos(p.alpha), p.rho * std::sin(p.alpha), power);
}

} // namespace gmset

#endif // GMSET_FIELDS_HPP
