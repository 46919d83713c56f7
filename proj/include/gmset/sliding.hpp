#ifndef GMSET_SLIDING_HPP
#define GMSET_SLIDING_HPP

/**
 * @file sliding.hpp
 * @brief Valid-mode sliding application of a similarity index (1-D template
 *        matching). With the inner product this is the classic cross-correlation.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "indices.hpp"
#include "signal.hpp"
#include "stats.hpp"

namespace gmset {

enum class SlideIndex { inner, jaccard, coincidence, pearson, cosine };

constexpr std::string_view to_string(SlideIndex index) noexcept
{
    switch (index) {
    case SlideIndex::inner: return "inner";
    case SlideIndex::jaccard: return "jaccard";
    case SlideIndex::coincidence: return "coincidence";
    case SlideIndex::pearson: return "pearson";
    case SlideIndex::cosine: return "cosine";
    }
    return "?";
}

constexpr std::optional<SlideIndex> parse_slide_index(std::string_view name) noexcept
{
    for (SlideIndex i : {SlideIndex::inner, SlideIndex::jaccard, SlideIndex::coincidence, SlideIndex::pearson,
                         SlideIndex::cosine}) {
        if (to_string(i) == name) {
            return i;
        }
    }
    return std::nullopt;
}

template <std::floating_point T>
struct BasicMatchProfile {
    std::vector<std::ptrdiff_t> lags;
    std::vector<T> scores;
    /// One flag per lag: the window was degenerate for the index and scored 0.
    std::vector<bool> degenerate;
    std::ptrdiff_t best_lag = 0;
    T best_score = T(0);
};

using MatchProfile = BasicMatchProfile<double>;

namespace detail {

template <std::floating_point T>
bool has_variance(BasicSignalView<T> v)
{
    for (T x : v.values()) {
        if (x != v[0]) {
            return true;
        }
    }
    return false;
}

template <std::floating_point T>
bool has_norm(BasicSignalView<T> v)
{
    for (T x : v.values()) {
        if (x != T(0)) {
            return true;
        }
    }
    return false;
}

} // namespace detail

/**
 * Scores index(template, signal[k : k + len(template)]) for every lag k in
 * 0 .. len(signal) - len(template). Pearson on a constant window and cosine on
 * a zero window score 0 and are flagged. best_lag is the smallest lag with
 * the maximal score.
 */
template <signal_like F, signal_like G>
    requires signal_pair<F, G>
BasicMatchProfile<sample_t<F>> slide(const F& templ, const G& signal, SlideIndex index)
{
    using T = sample_t<F>;
    const auto tv = as_view(templ);
    const auto sv = as_view(signal);
    if (tv.size() == 0 || tv.size() > sv.size()) {
        throw std::invalid_argument("slide: template must be nonempty and no longer than the signal");
    }
    if (tv.dx() != sv.dx()) {
        throw std::invalid_argument("slide: spacing mismatch");
    }
    if (index == SlideIndex::pearson && (tv.size() < 2 || !detail::has_variance(tv))) {
        throw std::domain_error("slide: pearson needs a non-constant template");
    }
    if (index == SlideIndex::cosine && !detail::has_norm(tv)) {
        throw std::domain_error("slide: cosine needs a nonzero template");
    }

    const std::size_t count = sv.size() - tv.size() + 1;
    BasicMatchProfile<T> profile;
    profile.lags.resize(count);
    profile.scores.resize(count);
    profile.degenerate.assign(count, false);

    for (std::size_t k = 0; k < count; ++k) {
        const auto window = sv.subview(k, tv.size());
        T score = T(0);
        switch (index) {
        case SlideIndex::inner: score = inner(tv, window); break;
        case SlideIndex::jaccard: score = jaccard(tv, window); break;
        case SlideIndex::coincidence: score = coincidence(tv, window); break;
        case SlideIndex::pearson:
            if (detail::has_variance(window)) {
                score = pearson(tv, window);
            } else {
                profile.degenerate[k] = true;
            }
            break;
        case SlideIndex::cosine:
            if (detail::has_norm(window)) {
                score = cosine(tv, window);
            } else {
                profile.degenerate[k] = true;
            }
            break;
        }
        profile.lags[k] = static_cast<std::ptrdiff_t>(k);
        profile.scores[k] = score;
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k < count; ++k) {
        if (profile.scores[k] > profile.scores[best]) {
            best = k;
        }
    }
    profile.best_lag = profile.lags[best];
    profile.best_score = profile.scores[best];
    return profile;
}

} // namespace gmset

#endif // GMSET_SLIDING_HPP
