#include "maxplus/observer.hpp"

#include "maxplus/semimodule.hpp"

namespace maxplus {

ObserverMatrices synthesize_observer(const Matrix& f, const Matrix& a, const Matrix& c) {
    if (f.cols() != a.rows() || a.rows() != a.cols() || c.cols() != a.cols()) {
        throw DimensionError("synthesize_observer: F, A and C do not share the state size");
    }
    const Matrix fa = mat_mul(f, a);
    const Matrix stacked = f.stack(c);
    const Matrix h = right_residual(fa, stacked);
    const Matrix reached = mat_mul(h, stacked);
    for (std::size_t i = 0; i < fa.rows(); ++i) {
        if (reached.row_vector(i) != fa.row_vector(i)) {
            throw NotSolvable("row " + std::to_string(i + 1) +
                              " of F A is not a combination of the rows of F and C");
        }
    }

    const std::size_t p = f.rows();
    const std::size_t q = c.rows();
    ObserverMatrices obs{f, Matrix(p, p), Matrix(p, q)};
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t k = 0; k < p; ++k) {
            const Scalar s = h(i, k);
            obs.u.set(i, k, s.is_top() ? Scalar::eps() : s);
        }
        for (std::size_t k = 0; k < q; ++k) {
            const Scalar s = h(i, p + k);
            obs.v.set(i, k, s.is_top() ? Scalar::eps() : s);
        }
    }
    if (!satisfies_observer_equation(f, obs.u, obs.v, a, c)) {
        throw NotSolvable("clamping +inf coefficients broke F A = U F + V C");
    }
    return obs;
}

bool satisfies_observer_equation(const Matrix& f, const Matrix& u, const Matrix& v,
                                 const Matrix& a, const Matrix& c) {
    return mat_mul(f, a) == mat_add(mat_mul(u, f), mat_mul(v, c));
}

std::vector<Vector> run_observer(const ObserverMatrices& obs, std::span<const Scalar> x0,
                                 const std::vector<Vector>& outputs) {
    std::vector<Vector> z;
    z.reserve(outputs.size() + 1);
    z.push_back(mat_vec(obs.f, x0));
    for (const auto& y : outputs) {
        z.push_back(vec_add(mat_vec(obs.u, z.back()), mat_vec(obs.v, y)));
    }
    return z;
}

bool check_reconstructible(const Matrix& g, const Matrix& f) {
    if (g.cols() != f.cols()) throw DimensionError("check_reconstructible: column counts differ");
    const Semimodule rows_of_f(f.transpose());
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (!membership(g.row_span(i), rows_of_f)) return false;
    return true;
}

Vector reconstruct_functional(const Matrix& g, const Matrix& f, std::span<const Scalar> z) {
    if (!check_reconstructible(g, f)) {
        throw NotReconstructible("ker F is not contained in ker G");
    }
    if (z.size() != f.rows()) throw DimensionError("z length differs from the rows of F");
    if (!membership(z, Semimodule(f))) throw DomainError("z is not in the image of F");
    const Matrix inner = min_plus_mul(negate_transpose(f), Matrix::column(Vector(z.begin(), z.end())));
    return mat_vec(g, inner.column_vector(0));
}

bool verify_class_determinism(const Congruence& w, const Matrix& c, const Matrix& a,
                              const Trajectory& first, const Trajectory& second) {
    const std::size_t n = w.dim();
    if (a.rows() != n || a.cols() != n || c.cols() != n) {
        throw DimensionError("verify_class_determinism: inconsistent dimensions");
    }
    if (first.states.size() != second.states.size() || first.states.empty()) {
        throw DomainError("trajectories must be non-empty and of equal length");
    }
    for (const Trajectory* t : {&first, &second}) {
        if (t->outputs.size() != t->states.size()) {
            throw DomainError("trajectory needs one output per state");
        }
        for (std::size_t k = 0; k < t->states.size(); ++k)
            if (mat_vec(c, t->states[k]) != t->outputs[k]) {
                throw DomainError("trajectory output at k=" + std::to_string(k) +
                                  " is not C x(k)");
            }
    }
    if (first.outputs != second.outputs) throw DomainError("output sequences differ");
    if (!related(w, first.states.front(), second.states.front())) {
        throw DomainError("initial states are in different classes");
    }
    for (std::size_t k = 1; k < first.states.size(); ++k)
        if (!related(w, first.states[k], second.states[k])) return false;
    return true;
}

}  // namespace maxplus
