#include "maxplus/invariance.hpp"

#include <deque>

namespace maxplus {

NotConverged::NotConverged(std::size_t max_iter, FixpointReport report)
    : Error("NotConverged",
            "fixpoint iteration did not converge within " + std::to_string(max_iter) +
                " iterations"),
      max_iter_(max_iter),
      report_(std::move(report)) {}

namespace {

void check_system(const Matrix& a, const Matrix& b, std::size_t n) {
    if (a.rows() != n || a.cols() != n) {
        throw DimensionError("state matrix must be " + std::to_string(n) + "x" +
                             std::to_string(n));
    }
    if (b.rows() != n) throw DimensionError("input matrix must have " + std::to_string(n) + " rows");
}

// Limit of a chain whose generators move by a constant step per iteration.
// Coordinates that keep decreasing go to ε; everything else is fixed.
std::optional<Semimodule> drift_limit(const std::deque<Semimodule>& tail) {
    if (tail.size() < 3) return std::nullopt;
    const auto& p = tail[0].generators();
    const auto& q = tail[1].generators();
    const auto& r = tail[2].generators();
    if (p.size() != q.size() || q.size() != r.size() || r.empty()) return std::nullopt;

    bool moving = false;
    std::vector<Vector> limit;
    limit.reserve(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        Vector g = r[j];
        for (std::size_t i = 0; i < g.size(); ++i) {
            const bool fp = p[j][i].is_finite();
            if (fp != q[j][i].is_finite() || fp != r[j][i].is_finite()) return std::nullopt;
            if (!fp) continue;
            const std::int64_t d1 = q[j][i].value() - p[j][i].value();
            const std::int64_t d2 = r[j][i].value() - q[j][i].value();
            if (d1 != d2 || d1 > 0) return std::nullopt;
            if (d1 < 0) {
                g[i] = Scalar::eps();
                moving = true;
            }
        }
        limit.push_back(std::move(g));
    }
    if (!moving) return std::nullopt;
    return Semimodule::from_vectors(tail[2].dim(), std::move(limit));
}

}  // namespace

Semimodule controlled_step(const Matrix& a, const Matrix& b, const Semimodule& k,
                           const Semimodule& x) {
    return intersect(k, preimage(a, sum(x, Semimodule(b))));
}

FixpointReport max_controlled_invariant(const Matrix& a, const Matrix& b, const Semimodule& k,
                                        const FixpointOptions& opts) {
    check_system(a, b, k.dim());

    std::size_t max_iter = opts.max_iter;
    if (opts.raise_with_volume) {
        try {
            const VolumeResult vol = volume(k);
            if (vol.kind == VolumeResult::Kind::Finite) {
                max_iter = std::max<std::size_t>(max_iter, vol.count + 2);
            }
        } catch (const ResourceExceeded&) {
            // Volume too expensive to enumerate; keep the caller's cap.
        }
    }

    FixpointReport rep;
    std::deque<Semimodule> tail{k};
    if (opts.keep_chain) rep.chain.push_back(k);
    rep.result = k;
    rep.iterations = 1;

    while (rep.iterations < max_iter) {
        Semimodule next = controlled_step(a, b, k, rep.result);
        if (!includes(rep.result, next)) {
            throw ConstraintViolation("controlled invariance chain is not decreasing at step " +
                                      std::to_string(rep.iterations + 1));
        }
        ++rep.iterations;
        const bool done = equals(next, rep.result);
        if (opts.keep_chain) rep.chain.push_back(next);
        tail.push_back(next);
        if (tail.size() > 3) tail.pop_front();
        rep.result = std::move(next);
        if (done) {
            rep.converged = true;
            return rep;
        }
    }

    if (opts.extrapolate) {
        if (auto lim = drift_limit(tail)) {
            if (includes(rep.result, *lim) && equals(controlled_step(a, b, k, *lim), *lim)) {
                rep.limit = std::move(lim);
            }
        }
    }
    return rep;
}

Congruence min_conditioned_invariant_closed(const Matrix& c, const Matrix& a,
                                            const Congruence& v, const FixpointOptions& opts,
                                            FixpointReport& dual_report) {
    if (c.cols() != v.dim()) throw DimensionError("output matrix width differs from state size");
    const Semimodule k = orthogonal_congruence(v);
    dual_report = max_controlled_invariant(a.transpose(), c.transpose(), k, opts);
    if (dual_report.converged) return orthogonal_semimodule(dual_report.result);
    if (dual_report.limit) return orthogonal_semimodule(*dual_report.limit);
    throw NotConverged(std::max(opts.max_iter, dual_report.iterations), dual_report);
}

Congruence min_conditioned_invariant_closed(const Matrix& c, const Matrix& a,
                                            const Congruence& v, const FixpointOptions& opts) {
    FixpointReport ignored;
    return min_conditioned_invariant_closed(c, a, v, opts, ignored);
}

bool is_controlled_invariant(const Semimodule& x, const Matrix& a, const Matrix& b) {
    check_system(a, b, x.dim());
    const Semimodule target = sum(x, Semimodule(b));
    for (const auto& g : x.generators())
        if (!membership(mat_vec(a, g), target)) return false;
    return true;
}

bool is_conditioned_invariant(const Congruence& w, const Matrix& c, const Matrix& a) {
    const std::size_t n = w.dim();
    if (a.rows() != n || a.cols() != n || c.cols() != n) {
        throw DimensionError("is_conditioned_invariant: inconsistent dimensions");
    }
    const Semimodule pairs = congruence_generators(intersect_congruences(w, kernel_of(c)));
    for (const auto& g : pairs.generators()) {
        std::span<const Scalar> s(g);
        if (!related(w, mat_vec(a, s.first(n)), mat_vec(a, s.subspan(n)))) return false;
    }
    return true;
}

}  // namespace maxplus
