#include "maxplus/congruence.hpp"

#include <mutex>

#include "maxplus/solver.hpp"

namespace maxplus {

struct Congruence::Cache {
    bool kernel_given = false;
    bool pairs_given = false;
    std::optional<Matrix> kernel;
    std::optional<Semimodule> pairs;
    std::once_flag kernel_once;
    std::once_flag pairs_once;
};

Congruence::Congruence(std::size_t dim, std::shared_ptr<Cache> cache)
    : dim_(dim), cache_(std::move(cache)) {}

Congruence Congruence::from_kernel(Matrix kernel) {
    if (kernel.has_top()) throw DomainError("kernel matrix may not contain +inf");
    auto cache = std::make_shared<Cache>();
    const std::size_t n = kernel.cols();
    cache->kernel = std::move(kernel);
    cache->kernel_given = true;
    return Congruence(n, std::move(cache));
}

Congruence Congruence::from_pairs(const Semimodule& pairs) {
    if (pairs.dim() % 2 != 0) {
        throw DimensionError("pair semimodule must have even dimension, got " +
                             std::to_string(pairs.dim()));
    }
    const std::size_t n = pairs.dim() / 2;
    std::vector<Vector> gens = pairs.generators();
    for (const auto& g : pairs.generators()) {
        std::span<const Scalar> s(g);
        gens.push_back(stack_pair(s.subspan(n), s.first(n)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vector d(2 * n, Scalar::eps());
        d[i] = d[n + i] = Scalar::unit();
        gens.push_back(std::move(d));
    }
    auto cache = std::make_shared<Cache>();
    cache->pairs = Semimodule::from_vectors(2 * n, std::move(gens));
    cache->pairs_given = true;
    return Congruence(n, std::move(cache));
}

bool Congruence::has_kernel() const noexcept { return cache_ && cache_->kernel_given; }

bool Congruence::has_pairs() const noexcept { return cache_ && cache_->pairs_given; }

const Matrix& Congruence::kernel() const {
    std::call_once(cache_->kernel_once, [this] {
        if (!cache_->kernel) cache_->kernel = generators_to_kernel(*cache_->pairs);
    });
    return *cache_->kernel;
}

const Semimodule& Congruence::pairs() const {
    std::call_once(cache_->pairs_once, [this] {
        if (cache_->pairs) return;
        const Matrix& e = *cache_->kernel;
        const Matrix lhs = e.concat(Matrix(e.rows(), dim_));
        const Matrix rhs = Matrix(e.rows(), dim_).concat(e);
        cache_->pairs = solve_two_sided(TwoSidedSystem(lhs, rhs));
    });
    return *cache_->pairs;
}

Congruence kernel_of(const Matrix& e) { return Congruence::from_kernel(e); }

bool related(const Congruence& w, std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != w.dim() || y.size() != w.dim()) {
        throw DimensionError("related: vector length differs from congruence dimension");
    }
    if (w.has_kernel() || !w.has_pairs()) {
        const Matrix& e = w.kernel();
        return mat_vec(e, x) == mat_vec(e, y);
    }
    return membership(stack_pair(x, y), w.pairs());
}

Semimodule congruence_generators(const Congruence& w) { return w.pairs(); }

Semimodule pair_orthogonal(const Semimodule& pairs) {
    if (pairs.dim() % 2 != 0) throw DimensionError("pair semimodule must have even dimension");
    const std::size_t n = pairs.dim() / 2;
    const std::size_t m = pairs.size();
    std::vector<Scalar> lhs;
    std::vector<Scalar> rhs;
    lhs.reserve(m * n);
    rhs.reserve(m * n);
    for (const auto& g : pairs.generators()) {
        lhs.insert(lhs.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
        rhs.insert(rhs.end(), g.begin() + static_cast<std::ptrdiff_t>(n), g.end());
    }
    return solve_two_sided(TwoSidedSystem(Matrix(m, n, std::move(lhs)), Matrix(m, n, std::move(rhs))));
}

Matrix generators_to_kernel(const Semimodule& pairs) {
    return pair_orthogonal(pairs).matrix().transpose();
}

Congruence orthogonal_semimodule(const Semimodule& x) {
    return Congruence::from_kernel(x.matrix().transpose());
}

Semimodule orthogonal_congruence(const Congruence& w) {
    return Semimodule(w.kernel().transpose());
}

Congruence intersect_congruences(const Congruence& w1, const Congruence& w2) {
    if (w1.dim() != w2.dim()) throw DimensionError("intersect_congruences: dimensions differ");
    return Congruence::from_kernel(w1.kernel().stack(w2.kernel()));
}

Semimodule apply_to_pairs(const Matrix& a, const Semimodule& pairs) {
    const std::size_t n = pairs.dim() / 2;
    if (a.cols() != n) throw DimensionError("apply_to_pairs: matrix width differs from n");
    std::vector<Vector> out;
    out.reserve(pairs.size());
    for (const auto& g : pairs.generators()) {
        std::span<const Scalar> s(g);
        out.push_back(stack_pair(mat_vec(a, s.first(n)), mat_vec(a, s.subspan(n))));
    }
    return Semimodule::from_vectors(2 * a.rows(), std::move(out));
}

Vector stack_pair(std::span<const Scalar> x, std::span<const Scalar> y) {
    Vector out(x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

}  // namespace maxplus
