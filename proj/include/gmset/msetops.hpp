#ifndef GMSET_MSETOPS_HPP
#define GMSET_MSETOPS_HPP

/**
 * @file msetops.hpp
 * @brief Binary operations between generalized multisets (real, possibly
 *        negative multiplicities).
 *
 * Each operation is a pointwise kernel k(x, y) aggregated over the combined
 * support as dx * sum_i k(f_i, g_i). Kernels, with a = |x|, b = |y|:
 *
 *   cap         min(x, y)             cup         max(x, y)
 *   scap        s_xy min(a, b)        scup        s_xy max(a, b)
 *   scap_minus  s_hm min(a, b)        scup_minus  s_hm max(a, b)
 *   scap_plus   s_hp min(a, b)        scup_plus   s_hp max(a, b)
 *   acap        min(a, b)             acup        max(a, b)
 *
 * The signed forms annihilate against the null multiset (x scap 0 = 0),
 * the plain cap/cup do not.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>

#include "signal.hpp"
#include "signs.hpp"

namespace gmset {

enum class MsetOp {
    cap,
    cup,
    scap,
    scup,
    scap_minus,
    scap_plus,
    scup_minus,
    scup_plus,
    acap,
    acup,
};

inline constexpr std::array<MsetOp, 10> all_mset_ops{
    MsetOp::cap,       MsetOp::cup,       MsetOp::scap,       MsetOp::scup, MsetOp::scap_minus,
    MsetOp::scap_plus, MsetOp::scup_minus, MsetOp::scup_plus, MsetOp::acap, MsetOp::acup,
};

constexpr std::string_view to_string(MsetOp op) noexcept
{
    switch (op) {
    case MsetOp::cap: return "cap";
    case MsetOp::cup: return "cup";
    case MsetOp::scap: return "scap";
    case MsetOp::scup: return "scup";
    case MsetOp::scap_minus: return "scap_minus";
    case MsetOp::scap_plus: return "scap_plus";
    case MsetOp::scup_minus: return "scup_minus";
    case MsetOp::scup_plus: return "scup_plus";
    case MsetOp::acap: return "acap";
    case MsetOp::acup: return "acup";
    }
    return "?";
}

constexpr std::optional<MsetOp> parse_mset_op(std::string_view name) noexcept
{
    for (MsetOp op : all_mset_ops) {
        if (to_string(op) == name) {
            return op;
        }
    }
    return std::nullopt;
}

/// Pointwise integrand of `op` at the sample pair (x, y).
template <std::floating_point T>
T kernel(MsetOp op, T x, T y)
{
    const BasicSignTuple<T> s = conjoint_signs(x, y);
    const T a = std::abs(x);
    const T b = std::abs(y);
    switch (op) {
    case MsetOp::cap: return std::min(x, y);
    case MsetOp::cup: return std::max(x, y);
    case MsetOp::scap: return s.s_xy * std::min(a, b);
    case MsetOp::scup: return s.s_xy * std::max(a, b);
    case MsetOp::scap_minus: return s.s_hm * std::min(a, b);
    case MsetOp::scap_plus: return s.s_hp * std::min(a, b);
    case MsetOp::scup_minus: return s.s_hm * std::max(a, b);
    case MsetOp::scup_plus: return s.s_hp * std::max(a, b);
    case MsetOp::acap: return std::min(a, b);
    case MsetOp::acup: return std::max(a, b);
    }
    throw std::invalid_argument("kernel: unknown operation");
}

template <class F, class G>
concept signal_pair = signal_like<F> && signal_like<G> && std::same_as<sample_t<F>, sample_t<G>>;

/// dx * sum of the pointwise kernel, summed left to right in index order.
template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> aggregate(MsetOp op, const F& f, const G& g)
{
    using T = sample_t<F>;
    const auto fv = as_view(f);
    const auto gv = as_view(g);
    require_compatible(fv, gv);
    T sum = T(0);
    for (std::size_t i = 0; i < fv.size(); ++i) {
        sum += kernel(op, fv[i], gv[i]);
    }
    return fv.dx() * sum;
}

/// Absolute mass dx * sum |f_i|.
template <signal_like F>
sample_t<F> abs_mass(const F& f)
{
    using T = sample_t<F>;
    const auto fv = as_view(f);
    T sum = T(0);
    for (T v : fv.values()) {
        sum += std::abs(v);
    }
    return fv.dx() * sum;
}

} // namespace gmset

#endif // GMSET_MSETOPS_HPP
