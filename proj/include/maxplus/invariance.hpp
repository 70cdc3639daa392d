#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxplus/congruence.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/matrix.hpp"
#include "maxplus/semimodule.hpp"

namespace maxplus {

inline constexpr std::size_t kDefaultMaxIter = 64;

/// Outcome of iterating X_1 = K, X_{k+1} = K ∩ A⁻¹(X_k ⊕ Im B).
struct FixpointReport {
    /// Last computed element. When converged it spans the fixpoint.
    Semimodule result;
    /// Number of chain elements computed; convergence is detected at the
    /// first k with X_k = X_{k-1}.
    std::size_t iterations = 0;
    bool converged = false;
    /// X_1, ..., X_iterations, when requested.
    std::vector<Semimodule> chain;
    /// Set when the chain did not converge but its tail drifts linearly and
    /// the limit of the drift is a verified fixpoint of the iteration inside
    /// every computed X_k.
    std::optional<Semimodule> limit;
};

/// Raised when a fixpoint is required but the iteration cap was reached.
class NotConverged : public Error {
public:
    NotConverged(std::size_t max_iter, FixpointReport report);

    std::size_t max_iter() const noexcept { return max_iter_; }
    const FixpointReport& report() const noexcept { return report_; }

private:
    std::size_t max_iter_;
    FixpointReport report_;
};

struct FixpointOptions {
    std::size_t max_iter = kDefaultMaxIter;
    /// Raise max_iter to vol(K) + 2 when K has finite volume, so the bound
    /// r ≤ vol(K) + 1 on the fixpoint index can always be reached.
    bool raise_with_volume = true;
    bool keep_chain = true;
    /// Look for a linear drift in the chain tail when not converged.
    bool extrapolate = true;
};

/// One application of K ∩ A⁻¹(X ⊕ Im B).
Semimodule controlled_step(const Matrix& a, const Matrix& b, const Semimodule& k,
                           const Semimodule& x);

/// Maximal (A, B)-controlled invariant semimodule contained in K, when the
/// decreasing chain stabilizes within the iteration cap.
FixpointReport max_controlled_invariant(const Matrix& a, const Matrix& b, const Semimodule& k,
                                        const FixpointOptions& opts = {});

/// Minimal closed (C, A)-conditioned invariant congruence containing V,
/// obtained by duality: iterate with A^t, C^t from K = V^⊤ and return the
/// orthogonal of the result. Uses the verified limit when the chain does not
/// stabilize; throws NotConverged when there is neither.
Congruence min_conditioned_invariant_closed(const Matrix& c, const Matrix& a,
                                            const Congruence& v,
                                            const FixpointOptions& opts = {});

/// Same as above, also returning the dual fixpoint report.
Congruence min_conditioned_invariant_closed(const Matrix& c, const Matrix& a,
                                            const Congruence& v, const FixpointOptions& opts,
                                            FixpointReport& dual_report);

/// A X ⊆ X ⊕ Im B, checked on the generators of X.
bool is_controlled_invariant(const Semimodule& x, const Matrix& a, const Matrix& b);

/// A (W ∩ ker C) ⊆ W, checked on the pair generators of W ∩ ker C.
bool is_conditioned_invariant(const Congruence& w, const Matrix& c, const Matrix& a);

}  // namespace maxplus
