#ifndef GMSET_STATS_HPP
#define GMSET_STATS_HPP

/**
 * @file stats.hpp
 * @brief Sample statistics, Pearson correlation and the sign-split
 *        ("double") inner product and Pearson coefficient.
 *
 * Variance and covariance use the unbiased 1/(N-1) normalization. The split
 * inner product separates <f, g> into a same-sign part (gated by s_hp, >= 0)
 * and an opposite-sign part (gated by s_hm, <= 0); their sum is <f, g>.
 * The alpha-mix 2 alpha <f,g>_+ + 2 (1 - alpha) <f,g>_- reproduces <f, g>
 * at alpha = 1/2.
 */

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "signal.hpp"
#include "signs.hpp"

namespace gmset {

namespace detail {

template <std::floating_point T>
void require_alpha(T alpha, const char* what)
{
    if (!(alpha >= T(0) && alpha <= T(1))) {
        throw std::invalid_argument(std::string(what) + ": alpha must lie in [0, 1]");
    }
}

template <std::floating_point T>
T mean_of(std::span<const T> v)
{
    T sum = T(0);
    for (T x : v) {
        sum += x;
    }
    return sum / static_cast<T>(v.size());
}

} // namespace detail

template <std::floating_point T>
struct BasicSampleStats {
    T mean;
    T variance;
    T std;
    std::size_t n;
};

using SampleStats = BasicSampleStats<double>;

/// Requires at least two samples.
template <signal_like S>
BasicSampleStats<sample_t<S>> sample_stats(const S& v)
{
    using T = sample_t<S>;
    const auto values = as_view(v).values();
    if (values.size() < 2) {
        throw std::invalid_argument("sample_stats: need at least 2 samples");
    }
    const T mu = detail::mean_of(values);
    T ss = T(0);
    for (T x : values) {
        const T d = x - mu;
        ss += d * d;
    }
    const T var = ss / static_cast<T>(values.size() - 1);
    return {mu, var, std::sqrt(var), values.size()};
}

template <signal_like S>
sample_t<S> mean(const S& v)
{
    return detail::mean_of(as_view(v).values());
}

/// (v_i - mean) / std, keeping the input spacing. Throws std::domain_error on zero variance.
template <signal_like S>
BasicSignal<sample_t<S>> standardize(const S& v)
{
    using T = sample_t<S>;
    const auto st = sample_stats(v);
    if (!(st.std > T(0))) {
        throw std::domain_error("standardize: zero variance");
    }
    const auto view = as_view(v);
    std::vector<T> out;
    out.reserve(view.size());
    for (T x : view.values()) {
        out.push_back((x - st.mean) / st.std);
    }
    return BasicSignal<T>(std::move(out), view.dx());
}

template <signal_like F, signal_like G>
    requires std::same_as<sample_t<F>, sample_t<G>>
sample_t<F> covariance(const F& x, const G& y)
{
    using T = sample_t<F>;
    const auto xv = as_view(x).values();
    const auto yv = as_view(y).values();
    if (xv.size() != yv.size()) {
        throw std::invalid_argument("covariance: length mismatch");
    }
    if (xv.size() < 2) {
        throw std::invalid_argument("covariance: need at least 2 samples");
    }
    const T mx = detail::mean_of(xv);
    const T my = detail::mean_of(yv);
    T sum = T(0);
    for (std::size_t i = 0; i < xv.size(); ++i) {
        sum += (xv[i] - mx) * (yv[i] - my);
    }
    return sum / static_cast<T>(xv.size() - 1);
}

/// Clamped to [-1, 1] only to absorb rounding; throws std::domain_error on a constant operand.
template <signal_like F, signal_like G>
    requires std::same_as<sample_t<F>, sample_t<G>>
sample_t<F> pearson(const F& x, const G& y)
{
    using T = sample_t<F>;
    const T cov = covariance(x, y);
    const T sx = sample_stats(x).std;
    const T sy = sample_stats(y).std;
    if (!(sx > T(0)) || !(sy > T(0))) {
        throw std::domain_error("pearson: zero-variance operand");
    }
    return std::clamp(cov / (sx * sy), T(-1), T(1));
}

template <std::floating_point T>
struct BasicSplitProduct {
    T same_sign;     ///< <f,g>_+ >= 0
    T opposite_sign; ///< <f,g>_- <= 0

    T total() const noexcept { return same_sign + opposite_sign; }

    /// 2 alpha same_sign + 2 (1 - alpha) opposite_sign.
    T combined(T alpha) const
    {
        detail::require_alpha(alpha, "combined");
        return T(2) * alpha * same_sign + T(2) * (T(1) - alpha) * opposite_sign;
    }
};

using SplitProduct = BasicSplitProduct<double>;

template <signal_like F, signal_like G>
    requires std::same_as<sample_t<F>, sample_t<G>>
BasicSplitProduct<sample_t<F>> split_inner(const F& f, const G& g)
{
    using T = sample_t<F>;
    const auto fv = as_view(f);
    const auto gv = as_view(g);
    require_compatible(fv, gv);
    T plus = T(0);
    T minus = T(0);
    for (std::size_t i = 0; i < fv.size(); ++i) {
        const auto s = conjoint_signs(fv[i], gv[i]);
        const T p = fv[i] * gv[i];
        plus += s.s_hp * p;
        minus += s.s_hm * p;
    }
    return {fv.dx() * plus, fv.dx() * minus};
}

template <std::floating_point T>
struct BasicDoublePearson {
    T p_plus;  ///< same-sign contribution, >= 0
    T p_minus; ///< opposite-sign contribution, <= 0
    T p_alpha; ///< 2 alpha p_plus + 2 (1 - alpha) p_minus
};

using DoublePearson = BasicDoublePearson<double>;

/**
 * Split Pearson coefficient: both operands are standardized, the split inner
 * product is taken with unit spacing and each part divided by N - 1.
 * p_plus + p_minus equals the ordinary Pearson coefficient.
 */
template <signal_like F, signal_like G>
    requires std::same_as<sample_t<F>, sample_t<G>>
BasicDoublePearson<sample_t<F>> double_pearson(const F& x, const G& y, sample_t<F> alpha)
{
    using T = sample_t<F>;
    detail::require_alpha(alpha, "double_pearson");
    const auto xv = as_view(x).values();
    const auto yv = as_view(y).values();
    if (xv.size() != yv.size()) {
        throw std::invalid_argument("double_pearson: length mismatch");
    }
    const BasicSignal<T> zx = standardize(BasicSignalView<T>(xv, T(1)));
    const BasicSignal<T> zy = standardize(BasicSignalView<T>(yv, T(1)));
    const auto split = split_inner(zx, zy);
    const T scale = static_cast<T>(xv.size() - 1);
    BasicDoublePearson<T> r{};
    r.p_plus = split.same_sign / scale;
    r.p_minus = split.opposite_sign / scale;
    r.p_alpha = T(2) * alpha * r.p_plus + T(2) * (T(1) - alpha) * r.p_minus;
    return r;
}

} // namespace gmset

#endif // GMSET_STATS_HPP
