#include "maxplus/semimodule.hpp"

#include <algorithm>
#include <functional>

#include "maxplus/solver.hpp"

namespace maxplus {

namespace {

bool all_eps(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s.is_eps(); });
}

// Scale so that the largest coordinate becomes 0. Precondition: some
// coordinate is finite.
void normalize(Vector& v) {
    const Scalar top = *std::max_element(v.begin(), v.end());
    for (auto& s : v)
        if (s.is_finite()) s = Scalar::finite(s.value() - top.value());
}

// x ∈ span(gens \ {gens[skip]}).
bool in_span(std::span<const Scalar> x, const std::vector<Vector>& gens, std::size_t skip) {
    const std::size_t n = x.size();
    Vector acc(n, Scalar::eps());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j == skip) continue;
        const Vector& g = gens[j];
        Scalar lambda = Scalar::top();
        for (std::size_t i = 0; i < n && !lambda.is_eps(); ++i) {
            if (g[i].is_eps()) continue;
            lambda = min_plus_plus(lambda, residual(g[i], x[i]));
        }
        if (lambda.is_eps()) continue;
        // lambda is finite here: x has a finite entry wherever g does.
        for (std::size_t i = 0; i < n; ++i) acc[i] = oplus(acc[i], otimes(lambda, g[i]));
    }
    return std::equal(acc.begin(), acc.end(), x.begin());
}

void check_dim(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw DimensionError(std::string(op) + ": ambient dimensions " + std::to_string(a) +
                             " and " + std::to_string(b) + " differ");
    }
}

}  // namespace

std::vector<Vector> prune_generators(std::vector<Vector> gens) {
    std::erase_if(gens, [](const Vector& v) { return all_eps(v); });
    for (auto& g : gens) {
        if (std::any_of(g.begin(), g.end(), [](Scalar s) { return s.is_top(); })) {
            throw DomainError("semimodule generators may not contain +inf");
        }
        normalize(g);
    }
    std::sort(gens.begin(), gens.end(), std::greater<>());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t j = gens.size(); j-- > 0;) {
        if (in_span(gens[j], gens, j)) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return gens;
}

Semimodule::Semimodule(const Matrix& gens) : dim_(gens.rows()) {
    std::vector<Vector> cols;
    cols.reserve(gens.cols());
    for (std::size_t j = 0; j < gens.cols(); ++j) cols.push_back(gens.column_vector(j));
    gens_ = prune_generators(std::move(cols));
}

Semimodule Semimodule::from_vectors(std::size_t dim, std::vector<Vector> gens) {
    for (const auto& g : gens) check_dim(g.size(), dim, "semimodule");
    Semimodule s(dim);
    s.gens_ = prune_generators(std::move(gens));
    return s;
}

Semimodule Semimodule::full(std::size_t dim) { return Semimodule(Matrix::identity(dim)); }

Matrix Semimodule::matrix() const { return Matrix::from_columns(dim_, gens_); }

bool membership(std::span<const Scalar> x, const Semimodule& space) {
    check_dim(x.size(), space.dim(), "membership");
    return in_span(x, space.generators(), space.size());
}

bool includes(const Semimodule& outer, const Semimodule& inner) {
    check_dim(outer.dim(), inner.dim(), "includes");
    return std::all_of(inner.generators().begin(), inner.generators().end(),
                       [&](const Vector& g) { return membership(g, outer); });
}

bool equals(const Semimodule& x, const Semimodule& y) { return includes(x, y) && includes(y, x); }

Semimodule sum(const Semimodule& x, const Semimodule& y) {
    check_dim(x.dim(), y.dim(), "sum");
    std::vector<Vector> gens = x.generators();
    gens.insert(gens.end(), y.generators().begin(), y.generators().end());
    return Semimodule::from_vectors(x.dim(), std::move(gens));
}

Semimodule intersect(const Semimodule& x, const Semimodule& y) {
    check_dim(x.dim(), y.dim(), "intersect");
    if (x.empty() || y.empty()) return Semimodule(x.dim());
    const Matrix gx = x.matrix();
    const Matrix gy = y.matrix();
    const Matrix lhs = gx.concat(Matrix(x.dim(), y.size()));
    const Matrix rhs = Matrix(x.dim(), x.size()).concat(gy);
    const Semimodule sol = solve_two_sided(TwoSidedSystem(lhs, rhs));

    std::vector<Vector> out;
    out.reserve(sol.size());
    for (const auto& s : sol.generators()) {
        out.push_back(mat_vec(gx, std::span<const Scalar>(s).first(x.size())));
    }
    return Semimodule::from_vectors(x.dim(), std::move(out));
}

Semimodule preimage(const Matrix& a, const Semimodule& x) {
    check_dim(a.rows(), x.dim(), "preimage");
    const std::size_t n = a.cols();
    const Matrix lhs = a.concat(Matrix(a.rows(), x.size()));
    const Matrix rhs = Matrix(a.rows(), n).concat(x.matrix());
    const Semimodule sol = solve_two_sided(TwoSidedSystem(lhs, rhs));

    std::vector<Vector> out;
    out.reserve(sol.size());
    for (const auto& s : sol.generators()) out.emplace_back(s.begin(), s.begin() + n);
    return Semimodule::from_vectors(n, std::move(out));
}

Semimodule image(const Matrix& a, const Semimodule& x) {
    check_dim(a.cols(), x.dim(), "image");
    std::vector<Vector> out;
    out.reserve(x.size());
    for (const auto& g : x.generators()) out.push_back(mat_vec(a, g));
    return Semimodule::from_vectors(a.rows(), std::move(out));
}

Semimodule prune(const Semimodule& x) {
    return Semimodule::from_vectors(x.dim(), x.generators());
}

std::int64_t default_box_bound(const Semimodule& x) {
    bool any = false;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (const auto& g : x.generators())
        for (Scalar s : g) {
            if (!s.is_finite()) continue;
            lo = any ? std::min(lo, s.value()) : s.value();
            hi = any ? std::max(hi, s.value()) : s.value();
            any = true;
        }
    return any ? (hi - lo) * static_cast<std::int64_t>(x.dim()) : 0;
}

VolumeResult volume(const Semimodule& x, std::optional<std::int64_t> box_bound,
                    std::uint64_t max_points) {
    VolumeResult res;
    res.box_bound = box_bound.value_or(default_box_bound(x));
    if (res.box_bound < 0) throw DomainError("volume box bound must be non-negative");
    if (x.empty()) {
        res.kind = VolumeResult::Kind::Finite;
        return res;
    }

    const auto& gens = x.generators();
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (gens.front()[i].is_finite()) support.push_back(i);

    const bool same_support = std::all_of(gens.begin(), gens.end(), [&](const Vector& g) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const bool in = k < support.size() && support[k] == i;
            if (in != g[i].is_finite()) return false;
            if (in) ++k;
        }
        return true;
    });

    if (!same_support) {
        res.kind = VolumeResult::Kind::Infinite;
        return res;
    }

    // Every normalized member has finite coordinates exactly on the common
    // support, all of them in [-spread, 0].
    std::int64_t spread = 0;
    for (const auto& g : gens)
        for (Scalar s : g)
            if (s.is_finite()) spread = std::max(spread, -s.value());
    const std::int64_t depth = std::min(res.box_bound, spread);

    const std::size_t s = support.size();
    const auto per_coord = static_cast<std::uint64_t>(depth) + 1;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < s; ++k) {
        if (total > max_points / per_coord) {
            throw ResourceExceeded("volume enumeration exceeds " + std::to_string(max_points) +
                                   " candidate points");
        }
        total *= per_coord;
    }

    // Odometer over digits in [0, per_coord); digit d is coordinate value -d.
    std::vector<std::uint64_t> digit(s, 0);
    Vector z(x.dim(), Scalar::eps());
    std::uint64_t count = 0;
    for (std::uint64_t step = 0; step < total; ++step) {
        bool has_zero = false;
        for (std::size_t k = 0; k < s; ++k) {
            z[support[k]] = Scalar::finite(-static_cast<std::int64_t>(digit[k]));
            has_zero = has_zero || digit[k] == 0;
        }
        if (has_zero && membership(z, x)) ++count;
        for (std::size_t k = 0; k < s; ++k) {
            if (++digit[k] < per_coord) break;
            digit[k] = 0;
        }
    }

    res.count = count;
    res.kind = res.box_bound >= spread ? VolumeResult::Kind::Finite : VolumeResult::Kind::Unknown;
    return res;
}

}  // namespace maxplus
