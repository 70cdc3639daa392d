#include "maxplus/solver.hpp"

#include <algorithm>

namespace maxplus {

TwoSidedSystem::TwoSidedSystem(Matrix lhs, Matrix rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    if (lhs_.rows() != rhs_.rows() || lhs_.cols() != rhs_.cols()) {
        throw DimensionError("two-sided system: sides have shapes " + std::to_string(lhs_.rows()) +
                             "x" + std::to_string(lhs_.cols()) + " and " +
                             std::to_string(rhs_.rows()) + "x" + std::to_string(rhs_.cols()));
    }
    if (lhs_.has_top() || rhs_.has_top()) {
        throw DomainError("two-sided system coefficients may not contain +inf");
    }
}

namespace {

Scalar dot(std::span<const Scalar> a, const Vector& v) {
    Scalar acc = Scalar::eps();
    for (std::size_t i = 0; i < a.size(); ++i) acc = oplus(acc, otimes(a[i], v[i]));
    return acc;
}

}  // namespace

std::vector<Vector> intersect_halfspace(const std::vector<Vector>& gens,
                                        std::span<const Scalar> a, std::span<const Scalar> b,
                                        const SolverOptions& opts) {
    struct Scored {
        const Vector* v;
        Scalar av;
        Scalar bv;
    };
    std::vector<Scored> kept;
    std::vector<Scored> violating;
    for (const auto& g : gens) {
        Scored s{&g, dot(a, g), dot(b, g)};
        (s.av <= s.bv ? kept : violating).push_back(s);
    }
    if (violating.empty()) return gens;

    std::vector<Vector> out;
    out.reserve(kept.size());
    for (const auto& s : kept) out.push_back(*s.v);

    // b v = ε means a v = ε too; the combination would just rescale v.
    for (const auto& v : kept) {
        if (v.bv.is_eps()) continue;
        for (const auto& w : violating) {
            if (out.size() >= opts.max_generators) {
                throw ResourceExceeded("two-sided solver exceeded " +
                                       std::to_string(opts.max_generators) + " generators");
            }
            const std::size_t n = v.v->size();
            Vector u(n);
            for (std::size_t i = 0; i < n; ++i) {
                u[i] = oplus(otimes(w.av, (*v.v)[i]), otimes(v.bv, (*w.v)[i]));
            }
            out.push_back(std::move(u));
        }
    }
    return prune_generators(std::move(out));
}

Semimodule solve_two_sided(const TwoSidedSystem& sys, const SolverOptions& opts) {
    const std::size_t n = sys.unknowns();
    std::vector<Vector> gens;
    gens.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector e(n, Scalar::eps());
        e[j] = Scalar::unit();
        gens.push_back(std::move(e));
    }

    for (std::size_t r = 0; r < sys.equations(); ++r) {
        const auto f = sys.lhs().row_span(r);
        const auto g = sys.rhs().row_span(r);
        if (std::equal(f.begin(), f.end(), g.begin())) continue;
        gens = intersect_halfspace(gens, f, g, opts);
        gens = intersect_halfspace(gens, g, f, opts);
        if (gens.empty()) break;
    }
    return Semimodule::from_vectors(n, std::move(gens));
}

}  // namespace maxplus
