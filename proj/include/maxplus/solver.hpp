#pragma once

#include <cstddef>

#include "maxplus/matrix.hpp"
#include "maxplus/semimodule.hpp"

namespace maxplus {

/// Homogeneous system F ⊗ z = G ⊗ z with F, G of the same shape.
class TwoSidedSystem {
public:
    TwoSidedSystem(Matrix lhs, Matrix rhs);

    const Matrix& lhs() const noexcept { return lhs_; }
    const Matrix& rhs() const noexcept { return rhs_; }
    std::size_t equations() const noexcept { return lhs_.rows(); }
    std::size_t unknowns() const noexcept { return lhs_.cols(); }

private:
    Matrix lhs_;
    Matrix rhs_;
};

struct SolverOptions {
    /// Abort with ResourceExceeded once an intermediate generating set
    /// (before pruning) grows past this size.
    std::size_t max_generators = 10000;
};

/// Generating set of {z : F ⊗ z = G ⊗ z}.
///
/// Each equation is split into the two inequalities f z ≤ g z and
/// g z ≤ f z, and each inequality is intersected with the current cone by a
/// tropical double-description step: generators v with a v ≤ b v survive,
/// and every pair (v, w) with a v ≤ b v and a w > b w contributes
/// (a w) v ⊕ (b v) w. The set is pruned after every step.
Semimodule solve_two_sided(const TwoSidedSystem& sys, const SolverOptions& opts = {});

/// Solutions of the single inequality a ⊗ z ≤ b ⊗ z inside span(gens).
std::vector<Vector> intersect_halfspace(const std::vector<Vector>& gens,
                                        std::span<const Scalar> a, std::span<const Scalar> b,
                                        const SolverOptions& opts = {});

}  // namespace maxplus
