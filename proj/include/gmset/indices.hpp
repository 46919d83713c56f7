#ifndef GMSET_INDICES_HPP
#define GMSET_INDICES_HPP

/**
 * @file indices.hpp
 * @brief Inner-product similarities and the real-valued Jaccard family.
 *
 *   jaccard      = (f scap g) / (f acup g)
 *   jaccard_alt  = <f, g> / (f acup g)^2
 *   interiority  = (f acap g) / min(S_f, S_g),  S_f = dx * sum |f_i|
 *   coincidence  = jaccard * interiority
 *
 * jaccard and jaccard_alt agree pointwise (x y = s_xy min(|x|,|y|) max(|x|,|y|))
 * and hence for single-sample operands, but not for longer signals:
 * f = (2, 1), g = (1, 2) gives 0.5 and 0.25.
 *
 * Zero-denominator conventions keep every index total: jaccard of two zero
 * signals is 0, interiority with a zero-mass operand is 1.
 */

#include <cmath>
#include <optional>
#include <stdexcept>

#include "msetops.hpp"
#include "signal.hpp"

namespace gmset {

template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> inner(const F& f, const G& g)
{
    using T = sample_t<F>;
    const auto fv = as_view(f);
    const auto gv = as_view(g);
    require_compatible(fv, gv);
    T sum = T(0);
    for (std::size_t i = 0; i < fv.size(); ++i) {
        sum += fv[i] * gv[i];
    }
    return fv.dx() * sum;
}

template <signal_like F>
sample_t<F> norm(const F& f)
{
    return std::sqrt(inner(f, f));
}

/// sqrt(<f - g, f - g>).
template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> euclidean(const F& f, const G& g)
{
    using T = sample_t<F>;
    const auto fv = as_view(f);
    const auto gv = as_view(g);
    require_compatible(fv, gv);
    T sum = T(0);
    for (std::size_t i = 0; i < fv.size(); ++i) {
        const T d = fv[i] - gv[i];
        sum += d * d;
    }
    return std::sqrt(fv.dx() * sum);
}

/// Throws std::domain_error if either operand has zero norm.
template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> cosine(const F& f, const G& g)
{
    using T = sample_t<F>;
    const T ip = inner(f, g);
    const T nf = norm(f);
    const T ng = norm(g);
    if (nf == T(0) || ng == T(0)) {
        throw std::domain_error("cosine: zero-norm operand");
    }
    return ip / (nf * ng);
}

template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> jaccard(const F& f, const G& g)
{
    using T = sample_t<F>;
    const T num = aggregate(MsetOp::scap, f, g);
    const T den = aggregate(MsetOp::acup, f, g);
    return den == T(0) ? T(0) : num / den;
}

template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> jaccard_alt(const F& f, const G& g)
{
    using T = sample_t<F>;
    const T num = inner(f, g);
    const T den = aggregate(MsetOp::acup, f, g);
    return den == T(0) ? T(0) : num / (den * den);
}

template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> interiority(const F& f, const G& g)
{
    using T = sample_t<F>;
    const T num = aggregate(MsetOp::acap, f, g);
    const T den = std::min(abs_mass(f), abs_mass(g));
    return den == T(0) ? T(1) : num / den;
}

template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> coincidence(const F& f, const G& g)
{
    return jaccard(f, g) * interiority(f, g);
}

/**
 * Jaccard ratio raised to the power D (D >= 1). Odd D keeps the sign and
 * sharpens the surface towards the generalized Kronecker delta as D grows;
 * even D folds it onto |delta|. The power is applied to the ratio: the
 * numerator-only form (f scap g)^D / (f acup g) is unbounded.
 */
template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> jaccard_power(const F& f, const G& g, int power)
{
    using T = sample_t<F>;
    if (power < 1) {
        throw std::invalid_argument("jaccard_power: D must be >= 1");
    }
    return std::pow(jaccard(f, g), T(power));
}

/// 2 alpha (f scap_plus g) - 2 (1 - alpha) (f scap_minus g); alpha = 1/2 recovers f scap g.
template <signal_like F, signal_like G>
    requires signal_pair<F, G>
sample_t<F> split_intersection(const F& f, const G& g, sample_t<F> alpha)
{
    using T = sample_t<F>;
    if (!(alpha >= T(0) && alpha <= T(1))) {
        throw std::invalid_argument("split_intersection: alpha must lie in [0, 1]");
    }
    const auto fv = as_view(f);
    const auto gv = as_view(g);
    require_compatible(fv, gv);
    const T w_plus = T(2) * alpha;
    const T w_minus = T(2) * (T(1) - alpha);
    // Combined per sample so that alpha = 1/2 reproduces the scap sum bit for bit.
    T sum = T(0);
    for (std::size_t i = 0; i < fv.size(); ++i) {
        sum += w_plus * kernel(MsetOp::scap_plus, fv[i], gv[i]) - w_minus * kernel(MsetOp::scap_minus, fv[i], gv[i]);
    }
    return fv.dx() * sum;
}

template <std::floating_point T>
struct BasicSimilarityReport {
    T jaccard;
    T interiority;
    T coincidence;
    std::optional<T> cosine; ///< empty when either norm is zero
    T inner;
    T norm_f;
    T norm_g;
    T euclidean;
};

using SimilarityReport = BasicSimilarityReport<double>;

template <signal_like F, signal_like G>
    requires signal_pair<F, G>
BasicSimilarityReport<sample_t<F>> similarity_report(const F& f, const G& g)
{
    using T = sample_t<F>;
    BasicSimilarityReport<T> r{};
    r.jaccard = jaccard(f, g);
    r.interiority = interiority(f, g);
    r.coincidence = r.jaccard * r.interiority;
    r.inner = inner(f, g);
    r.norm_f = norm(f);
    r.norm_g = norm(g);
    if (r.norm_f > T(0) && r.norm_g > T(0)) {
        r.cosine = r.inner / (r.norm_f * r.norm_g);
    }
    r.euclidean = euclidean(f, g);
    return r;
}

} // namespace gmset

#endif // GMSET_INDICES_HPP
