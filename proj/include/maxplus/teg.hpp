#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/observer.hpp"

namespace maxplus {

/// Entry of an interval matrix: ε, a fixed time, or an integer interval.
struct IntervalEntry {
    enum class Kind { Eps, Fixed, Interval };

    Kind kind = Kind::Eps;
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    static IntervalEntry eps() { return {}; }
    static IntervalEntry fixed(std::int64_t v) { return {Kind::Fixed, v, v}; }
    static IntervalEntry interval(std::int64_t a, std::int64_t b);

    bool operator==(const IntervalEntry&) const = default;
};

class IntervalMatrix {
public:
    explicit IntervalMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    const IntervalEntry& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, IntervalEntry e) { entries_[i * n_ + j] = e; }

    std::size_t interval_count() const;
    /// Matrix with every interval replaced by the given values, taken in
    /// row-major order of the interval entries.
    Matrix realize(const std::vector<std::int64_t>& params) const;

    bool operator==(const IntervalMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<IntervalEntry> entries_;
};

/// Timed Event Graph with one initial token per place. An arc (from, to)
/// is a place whose holding time delays `to` after `from`.
struct TegSpec {
    struct Arc {
        std::string from;
        std::string to;
        IntervalEntry time;
    };

    std::vector<std::string> transitions;
    std::vector<Arc> arcs;
    std::vector<std::string> observed;
};

struct CompiledTeg {
    IntervalMatrix abar;
    /// One 0/ε selection row per observed transition.
    Matrix c;
};

/// Ā(to, from) = holding time of the arc; C selects the observed transitions.
/// Throws SpecError on unknown names or duplicate arcs.
CompiledTeg compile_teg(const TegSpec& spec);

/// Auxiliary coordinates of one uncertain entry (0-based indices).
struct UncertainEntry {
    std::size_t row;
    std::size_t col;
    std::int64_t lo;
    std::int64_t hi;
    std::size_t aux_lo;  // coefficient lo in row `row`
    std::size_t aux_hi;  // coefficient hi in row `row`

    bool operator==(const UncertainEntry&) const = default;
};

struct ExtensionMap {
    std::size_t n = 0;
    std::vector<UncertainEntry> entries;

    std::size_t extended_size() const noexcept { return n + 2 * entries.size(); }
};

/// Implicit system E x(k+1) = E A x(k) equivalent to x(k+1) = Ā(k) x(k).
struct ExtendedSystem {
    Matrix e;
    Matrix a;
    ExtensionMap map;
};

/// Two auxiliary coordinates per interval entry (i, j, [a, b]), in row-major
/// order: row i reads a ⊗ x_u ⊕ b ⊗ x_v instead of x_j, and rows u and v
/// copy the extended row j. E keeps the original coordinates and the max
/// of each auxiliary pair.
ExtendedSystem extend_interval_system(const IntervalMatrix& abar);

/// C padded with ε columns for the auxiliary coordinates.
Matrix extend_output_matrix(const Matrix& c, const ExtensionMap& map);

/// x(k+1) = Ā(k) x(k) from x(0) = 0, with every interval drawn uniformly
/// among its integer points at each step. `horizon` + 1 parameter sets are
/// recorded; the last one is not used by the dynamics but lets the final
/// state be embedded.
Trajectory sample_trajectory(const IntervalMatrix& abar, const Matrix& c, std::size_t horizon,
                             std::uint64_t seed);

/// Deterministic run with given parameter sets (params.size() - 1 steps).
Trajectory simulate_with_params(const IntervalMatrix& abar, const Matrix& c,
                                std::span<const Scalar> x0,
                                const std::vector<std::vector<std::int64_t>>& params);

enum class AuxInit {
    /// x_u(0) = x_j(0), x_v(0) = x_j(0) - b + θ(0).
    Embedding,
    /// x_u(0) = x_v(0) = x_j(0). Matches a first step drawn at the upper bound.
    SourceValue,
};

/// Extended states: originals copied, x_u(k) = x_j(k) and
/// x_v(k) = x_j(k) - b + θ(k). Throws ConstraintViolation unless
/// E x(k+1) = E A x(k) holds at every step.
std::vector<Vector> embed_trajectory(const Trajectory& traj, const ExtensionMap& map,
                                     const Matrix& e, const Matrix& a,
                                     AuxInit init = AuxInit::Embedding);

/// Embedded trajectory of the extended system with outputs C̃ x̃(k), where
/// C̃ = extend_output_matrix(c). Realized parameters are carried over.
Trajectory extended_trajectory(const Trajectory& traj, const ExtendedSystem& ext, const Matrix& c,
                               AuxInit init = AuxInit::Embedding);

}  // namespace maxplus
