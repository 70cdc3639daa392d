#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

/// Element of the completed max-plus semiring over the integers:
/// ε = -inf (the zero), a finite 64-bit integer, or ⊤ = +inf.
///
/// ⊤ only shows up as the output of residuation and inside min-plus
/// evaluation. Ordinary matrices refuse it (see Matrix).
///
/// Finite values are confined to [-kLimit, kLimit]; leaving that range
/// raises OverflowError instead of wrapping.
class Scalar {
public:
    static constexpr std::int64_t kLimit = std::int64_t{1} << 62;

    constexpr Scalar() noexcept : raw_(kNegRaw) {}

    static constexpr Scalar eps() noexcept { return Scalar(kNegRaw, Tag{}); }
    static constexpr Scalar top() noexcept { return Scalar(kPosRaw, Tag{}); }
    static constexpr Scalar unit() noexcept { return Scalar(0, Tag{}); }

    static Scalar finite(std::int64_t v) {
        if (v > kLimit || v < -kLimit) {
            throw OverflowError("max-plus scalar out of range: " + std::to_string(v));
        }
        return Scalar(v, Tag{});
    }

    constexpr bool is_eps() const noexcept { return raw_ == kNegRaw; }
    constexpr bool is_top() const noexcept { return raw_ == kPosRaw; }
    constexpr bool is_finite() const noexcept { return !is_eps() && !is_top(); }

    /// Finite value. Precondition: is_finite().
    constexpr std::int64_t value() const noexcept { return raw_; }

    // ε < finite < ⊤, finite values in the usual order.
    constexpr auto operator<=>(const Scalar&) const noexcept = default;

    std::string to_string() const;

private:
    struct Tag {};
    static constexpr std::int64_t kNegRaw = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kPosRaw = std::numeric_limits<std::int64_t>::max();

    constexpr Scalar(std::int64_t raw, Tag) noexcept : raw_(raw) {}

    std::int64_t raw_;
};

/// a ⊕ b = max(a, b).
constexpr Scalar oplus(Scalar a, Scalar b) noexcept { return a < b ? b : a; }

/// a ⊗ b = a + b. ε absorbs everything, ⊤ included.
inline Scalar otimes(Scalar a, Scalar b) {
    if (a.is_eps() || b.is_eps()) return Scalar::eps();
    if (a.is_top() || b.is_top()) return Scalar::top();
    return Scalar::finite(a.value() + b.value());
}

/// Addition inside the min-plus semiring: (+inf) + a = +inf for every a,
/// then -inf absorbs finite values.
inline Scalar min_plus_times(Scalar a, Scalar b) {
    if (a.is_top() || b.is_top()) return Scalar::top();
    if (a.is_eps() || b.is_eps()) return Scalar::eps();
    return Scalar::finite(a.value() + b.value());
}

constexpr Scalar min_plus_plus(Scalar a, Scalar b) noexcept { return a < b ? a : b; }

/// Greatest x with a ⊗ x ≤ b (one-coordinate residual b - a).
/// a = ε gives ⊤; a finite and b = ε gives ε.
Scalar residual(Scalar a, Scalar b);

/// Negation that swaps ε and ⊤.
Scalar negate(Scalar a);

}  // namespace maxplus
