#pragma once

#include <span>
#include <vector>

#include "maxplus/congruence.hpp"
#include "maxplus/matrix.hpp"

namespace maxplus {

/// Dynamic observer z(k+1) = U z(k) ⊕ V y(k) for the functional z = F x,
/// valid when F A = U F ⊕ V C.
struct ObserverMatrices {
    Matrix f;
    Matrix u;
    Matrix v;
};

/// States and outputs indexed by k, with y(k) = C x(k).
struct Trajectory {
    std::vector<Vector> states;
    std::vector<Vector> outputs;
    /// Realized interval parameters per step, in row-major order of the
    /// uncertain entries. Empty for deterministic runs.
    std::vector<std::vector<std::int64_t>> realized_params;
};

/// Greatest (U, V) with F A = U F ⊕ V C, row by row through the right
/// residual against [F; C]. Coefficients left at +inf (all-ε rows of
/// [F; C]) are clamped to ε. Throws NotSolvable if some row of F A is not
/// reached.
ObserverMatrices synthesize_observer(const Matrix& f, const Matrix& a, const Matrix& c);

/// F A == U F ⊕ V C.
bool satisfies_observer_equation(const Matrix& f, const Matrix& u, const Matrix& v,
                                 const Matrix& a, const Matrix& c);

/// z(0) = F x0 followed by one step per output; returns outputs.size() + 1
/// vectors.
std::vector<Vector> run_observer(const ObserverMatrices& obs, std::span<const Scalar> x0,
                                 const std::vector<Vector>& outputs);

/// ker F ⊆ ker G, i.e. every row of G lies in the span of the rows of F.
bool check_reconstructible(const Matrix& g, const Matrix& f);

/// w = G (-F^t) z, with the inner product taken in min-plus. Equals G x for
/// every x with F x = z.
Vector reconstruct_functional(const Matrix& g, const Matrix& f, std::span<const Scalar> z);

/// Checks that two trajectories that start in the same class of W and
/// produce identical outputs stay in the same class at every step. Throws
/// DomainError when the premises (same initial class, equal outputs,
/// outputs consistent with C) do not hold.
bool verify_class_determinism(const Congruence& w, const Matrix& c, const Matrix& a,
                              const Trajectory& first, const Trajectory& second);

}  // namespace maxplus
