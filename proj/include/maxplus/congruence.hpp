#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>

#include "maxplus/matrix.hpp"
#include "maxplus/semimodule.hpp"

namespace maxplus {

/// Congruence on R_max^n: an equivalence relation that is also a
/// subsemimodule of (R_max^n)^2.
///
/// Two representations are supported. The kernel form ker E = {(x, y) :
/// E x = E y} is primary; a 0×n kernel is the full relation. The pair form
/// is a semimodule of R_max^{2n} whose generators are the stacked columns
/// (x; y). Whichever form is missing is computed on first use and cached;
/// the cache is shared between copies and filled at most once.
class Congruence {
public:
    static Congruence from_kernel(Matrix kernel);
    /// Pair form. The diagonal pairs (e_i; e_i) and the swapped pairs
    /// (y; x) are adjoined so the span is reflexive and symmetric.
    static Congruence from_pairs(const Semimodule& pairs);

    std::size_t dim() const noexcept { return dim_; }
    bool has_kernel() const noexcept;
    bool has_pairs() const noexcept;

    const Matrix& kernel() const;
    const Semimodule& pairs() const;

private:
    struct Cache;

    Congruence(std::size_t dim, std::shared_ptr<Cache> cache);

    std::size_t dim_ = 0;
    std::shared_ptr<Cache> cache_;
};

Congruence kernel_of(const Matrix& e);

/// x ~ y. Uses the kernel when one is known, otherwise pair membership.
bool related(const Congruence& w, std::span<const Scalar> x, std::span<const Scalar> y);

/// Pair generators of ker E, from [E | ε](x; y) = [ε | E](x; y).
Semimodule congruence_generators(const Congruence& w);

/// W^⊤ = {z : x^t z = y^t z for every pair (x; y)} for a pair-generated set.
Semimodule pair_orthogonal(const Semimodule& pairs);

/// Kernel matrix G^t with ker G^t equal to the span of `pairs`, where
/// Im G = W^⊤.
Matrix generators_to_kernel(const Semimodule& pairs);

/// X^⊥ = ker(X.gens^t).
Congruence orthogonal_semimodule(const Semimodule& x);
/// W^⊤ = Im E^t for W = ker E.
Semimodule orthogonal_congruence(const Congruence& w);

/// ker [E1; E2].
Congruence intersect_congruences(const Congruence& w1, const Congruence& w2);

/// Pairs (A x; A y) for the generators of a pair semimodule. This is the
/// semimodule A W, which need not be a congruence.
Semimodule apply_to_pairs(const Matrix& a, const Semimodule& pairs);

/// Stack two n-vectors into one 2n-vector (x; y).
Vector stack_pair(std::span<const Scalar> x, std::span<const Scalar> y);

}  // namespace maxplus
