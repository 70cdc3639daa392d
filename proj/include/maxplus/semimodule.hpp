#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Finitely generated subsemimodule of R_max^n, kept in canonical form:
/// every generator is scaled so that its largest coordinate is 0, no
/// generator is all-ε or lies in the span of the others, and generators
/// are sorted in decreasing lexicographic order (so the unit vectors come
/// out as e_1, ..., e_n). Since the extreme rays of a finitely
/// generated cone are unique up to scaling, two canonical semimodules with
/// the same span have the same generator list.
///
/// The semimodule {ε} has no generators.
class Semimodule {
public:
    explicit Semimodule(std::size_t dim = 0) : dim_(dim) {}

    /// Span of the columns of `gens`.
    explicit Semimodule(const Matrix& gens);

    static Semimodule from_vectors(std::size_t dim, std::vector<Vector> gens);
    /// Span of the unit vectors, i.e. the whole of R_max^n.
    static Semimodule full(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool empty() const noexcept { return gens_.empty(); }

    const std::vector<Vector>& generators() const noexcept { return gens_; }
    /// Generators as the columns of a dim × size matrix.
    Matrix matrix() const;

    bool operator==(const Semimodule&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Vector> gens_;
};

/// x ∈ span(X), tested by residuation: Y ⊗ (Y \ x) = x.
bool membership(std::span<const Scalar> x, const Semimodule& space);
/// Y ⊆ X.
bool includes(const Semimodule& outer, const Semimodule& inner);
bool equals(const Semimodule& x, const Semimodule& y);

/// {x ⊕ y : x ∈ X, y ∈ Y}.
Semimodule sum(const Semimodule& x, const Semimodule& y);
/// X ∩ Y, through a two-sided system on the combination coefficients.
Semimodule intersect(const Semimodule& x, const Semimodule& y);
/// A⁻¹X = {x : A ⊗ x ∈ X}.
Semimodule preimage(const Matrix& a, const Semimodule& x);
/// Image semimodule A X = span{A g}.
Semimodule image(const Matrix& a, const Semimodule& x);

/// Drop generators that lie in the span of the remaining ones.
/// Semimodules are always stored pruned, so this returns a copy; it is kept
/// for callers holding raw generator lists (see prune_generators).
Semimodule prune(const Semimodule& x);

/// Normalizes, deduplicates, prunes and sorts a raw generator list.
std::vector<Vector> prune_generators(std::vector<Vector> gens);

struct VolumeResult {
    enum class Kind { Finite, Infinite, Unknown };

    Kind kind = Kind::Unknown;
    /// Exact count for Finite, members found inside the box for Unknown,
    /// and 0 for Infinite.
    std::uint64_t count = 0;
    std::int64_t box_bound = 0;

    bool operator==(const VolumeResult&) const = default;
};

/// Default enumeration box: (max finite entry - min finite entry) × dim.
std::int64_t default_box_bound(const Semimodule& x);

/// Number of members whose largest coordinate is exactly 0.
///
/// The volume is infinite exactly when two generators have different
/// supports. Otherwise every normalized member has its finite coordinates in
/// [-spread, 0], where spread is the widest generator, and the count is
/// obtained by enumeration. A box narrower than that spread gives Unknown
/// with the number of members found inside the box.
///
/// Throws ResourceExceeded when the enumeration would exceed `max_points`.
VolumeResult volume(const Semimodule& x, std::optional<std::int64_t> box_bound = std::nullopt,
                    std::uint64_t max_points = 50'000'000);

}  // namespace maxplus
