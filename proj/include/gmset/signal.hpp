#ifndef GMSET_SIGNAL_HPP
#define GMSET_SIGNAL_HPP

/**
 * @file signal.hpp
 * @brief Uniformly sampled real sequences, the operand type of every reduction.
 *
 * A signal is a nonempty run of finite samples together with the sample
 * spacing `dx`. Plain vectors use `dx = 1`; discretized functions use the
 * grid step so that sums approximate integrals over the combined support.
 */

#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gmset {

namespace detail {

template <std::floating_point T>
void require_finite(T v, const char* what)
{
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

} // namespace detail

/// Non-owning view of a signal. Cheap to copy; used for windows and reductions.
template <std::floating_point T>
class BasicSignalView {
public:
    BasicSignalView(std::span<const T> values, T dx) : values_(values), dx_(dx) {}

    std::span<const T> values() const noexcept { return values_; }
    T dx() const noexcept { return dx_; }
    std::size_t size() const noexcept { return values_.size(); }
    T operator[](std::size_t i) const { return values_[i]; }

    /// Contiguous sub-range sharing this view's spacing.
    BasicSignalView subview(std::size_t offset, std::size_t count) const
    {
        return BasicSignalView(values_.subspan(offset, count), dx_);
    }

private:
    std::span<const T> values_;
    T dx_;
};

/**
 * Owning signal. The constructor enforces the invariants: at least one
 * sample, every sample finite, and a strictly positive finite spacing.
 */
template <std::floating_point T>
class BasicSignal {
public:
    explicit BasicSignal(std::vector<T> values, T dx = T(1)) : values_(std::move(values)), dx_(dx)
    {
        if (values_.empty()) {
            throw std::invalid_argument("signal: empty");
        }
        if (!std::isfinite(dx_) || !(dx_ > T(0))) {
            throw std::invalid_argument("signal: dx must be finite and > 0");
        }
        for (T v : values_) {
            detail::require_finite(v, "signal");
        }
    }

    BasicSignal(std::initializer_list<T> values, T dx = T(1)) : BasicSignal(std::vector<T>(values), dx) {}

    std::span<const T> values() const noexcept { return values_; }
    T dx() const noexcept { return dx_; }
    std::size_t size() const noexcept { return values_.size(); }
    T operator[](std::size_t i) const { return values_[i]; }

    BasicSignalView<T> view() const noexcept { return BasicSignalView<T>(values_, dx_); }
    operator BasicSignalView<T>() const noexcept { return view(); }

private:
    std::vector<T> values_;
    T dx_;
};

using Signal = BasicSignal<double>;
using SignalView = BasicSignalView<double>;

/// Anything exposing `values()` as a span of reals and a `dx()` spacing.
template <class S>
concept signal_like = requires(const S& s) {
    { s.values() } -> std::convertible_to<std::span<const std::remove_cvref_t<decltype(s.dx())>>>;
    requires std::floating_point<std::remove_cvref_t<decltype(s.dx())>>;
};

template <signal_like S>
using sample_t = std::remove_cvref_t<decltype(std::declval<const S&>().dx())>;

template <signal_like S>
BasicSignalView<sample_t<S>> as_view(const S& s) noexcept
{
    return BasicSignalView<sample_t<S>>(s.values(), s.dx());
}

/// Throws unless both operands share length and spacing (the combined support).
template <std::floating_point T>
void require_compatible(BasicSignalView<T> f, BasicSignalView<T> g)
{
    if (f.size() == 0 || g.size() == 0) {
        throw std::invalid_argument("empty signal");
    }
    if (f.size() != g.size()) {
        throw std::invalid_argument("signal length mismatch: " + std::to_string(f.size()) + " vs " +
                                    std::to_string(g.size()));
    }
    if (f.dx() != g.dx()) {
        throw std::invalid_argument("signal spacing mismatch");
    }
}

} // namespace gmset

#endif // GMSET_SIGNAL_HPP
