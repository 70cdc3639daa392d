#include "maxplus/teg.hpp"

#include <map>
#include <set>

#include "maxplus/random.hpp"

namespace maxplus {

IntervalEntry IntervalEntry::interval(std::int64_t a, std::int64_t b) {
    if (a > b) {
        throw SpecError("interval [" + std::to_string(a) + ", " + std::to_string(b) +
                        "] is empty");
    }
    if (a == b) return fixed(a);
    return {Kind::Interval, a, b};
}

std::size_t IntervalMatrix::interval_count() const {
    std::size_t count = 0;
    for (const auto& e : entries_) count += e.kind == IntervalEntry::Kind::Interval;
    return count;
}

Matrix IntervalMatrix::realize(const std::vector<std::int64_t>& params) const {
    if (params.size() != interval_count()) {
        throw DimensionError("expected " + std::to_string(interval_count()) +
                             " interval parameters, got " + std::to_string(params.size()));
    }
    Matrix m(n_, n_);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const IntervalEntry& e = at(i, j);
            switch (e.kind) {
                case IntervalEntry::Kind::Eps:
                    break;
                case IntervalEntry::Kind::Fixed:
                    m.set(i, j, Scalar::finite(e.lo));
                    break;
                case IntervalEntry::Kind::Interval: {
                    const std::int64_t theta = params[next++];
                    if (theta < e.lo || theta > e.hi) {
                        throw DomainError("parameter " + std::to_string(theta) +
                                          " outside [" + std::to_string(e.lo) + ", " +
                                          std::to_string(e.hi) + "]");
                    }
                    m.set(i, j, Scalar::finite(theta));
                    break;
                }
            }
        }
    }
    return m;
}

CompiledTeg compile_teg(const TegSpec& spec) {
    const std::size_t n = spec.transitions.size();
    if (n == 0) throw SpecError("a TEG needs at least one transition");

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(spec.transitions[i], i).second) {
            throw SpecError("duplicate transition '" + spec.transitions[i] + "'");
        }
    }
    auto lookup = [&](const std::string& name) {
        const auto it = index.find(name);
        if (it == index.end()) throw SpecError("unknown transition '" + name + "'");
        return it->second;
    };

    CompiledTeg out{IntervalMatrix(n), Matrix(spec.observed.size(), n)};
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& arc : spec.arcs) {
        const std::size_t from = lookup(arc.from);
        const std::size_t to = lookup(arc.to);
        if (!seen.emplace(to, from).second) {
            throw SpecError("duplicate arc " + arc.from + " -> " + arc.to);
        }
        if (arc.time.kind == IntervalEntry::Kind::Eps) {
            throw SpecError("arc " + arc.from + " -> " + arc.to + " has no holding time");
        }
        out.abar.set(to, from, arc.time);
    }
    for (std::size_t r = 0; r < spec.observed.size(); ++r) {
        out.c.set(r, lookup(spec.observed[r]), Scalar::unit());
    }
    return out;
}

ExtendedSystem extend_interval_system(const IntervalMatrix& abar) {
    const std::size_t n = abar.size();
    ExtensionMap map{n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const IntervalEntry& e = abar.at(i, j);
            if (e.kind != IntervalEntry::Kind::Interval) continue;
            const std::size_t u = n + 2 * map.entries.size();
            map.entries.push_back({i, j, e.lo, e.hi, u, u + 1});
        }
    }

    const std::size_t big = map.extended_size();
    Matrix a(big, big);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const IntervalEntry& e = abar.at(i, j);
            if (e.kind == IntervalEntry::Kind::Fixed) a.set(i, j, Scalar::finite(e.lo));
        }
    }
    for (const auto& u : map.entries) {
        a.set(u.row, u.aux_lo, Scalar::finite(u.lo));
        a.set(u.row, u.aux_hi, Scalar::finite(u.hi));
    }
    // Auxiliary rows copy the finished row of their source coordinate.
    for (const auto& u : map.entries) {
        for (std::size_t c = 0; c < big; ++c) {
            a.set(u.aux_lo, c, a(u.col, c));
            a.set(u.aux_hi, c, a(u.col, c));
        }
    }

    Matrix e(n + map.entries.size(), big);
    for (std::size_t i = 0; i < n; ++i) e.set(i, i, Scalar::unit());
    for (std::size_t k = 0; k < map.entries.size(); ++k) {
        e.set(n + k, map.entries[k].aux_lo, Scalar::unit());
        e.set(n + k, map.entries[k].aux_hi, Scalar::unit());
    }
    return {std::move(e), std::move(a), std::move(map)};
}

Matrix extend_output_matrix(const Matrix& c, const ExtensionMap& map) {
    if (c.cols() != map.n) throw DimensionError("output matrix width differs from state size");
    return c.concat(Matrix(c.rows(), map.extended_size() - map.n));
}

Trajectory simulate_with_params(const IntervalMatrix& abar, const Matrix& c,
                                std::span<const Scalar> x0,
                                const std::vector<std::vector<std::int64_t>>& params) {
    if (x0.size() != abar.size() || c.cols() != abar.size()) {
        throw DimensionError("simulate: x0, Ā and C do not share the state size");
    }
    if (params.empty()) throw DomainError("simulate: need at least one parameter set");
    Trajectory t;
    t.realized_params = params;
    t.states.emplace_back(x0.begin(), x0.end());
    for (std::size_t k = 0; k + 1 < params.size(); ++k) {
        t.states.push_back(mat_vec(abar.realize(params[k]), t.states.back()));
    }
    abar.realize(params.back());  // validates the trailing set
    t.outputs.reserve(t.states.size());
    for (const auto& x : t.states) t.outputs.push_back(mat_vec(c, x));
    return t;
}

Trajectory sample_trajectory(const IntervalMatrix& abar, const Matrix& c, std::size_t horizon,
                             std::uint64_t seed) {
    const CounterRng rng(seed);
    std::vector<std::vector<std::int64_t>> params(horizon + 1);
    for (std::size_t k = 0; k <= horizon; ++k) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < abar.size(); ++i) {
            for (std::size_t j = 0; j < abar.size(); ++j) {
                const IntervalEntry& e = abar.at(i, j);
                if (e.kind != IntervalEntry::Kind::Interval) continue;
                params[k].push_back(rng.uniform(k, idx++, e.lo, e.hi));
            }
        }
    }
    return simulate_with_params(abar, c, Vector(abar.size(), Scalar::unit()), params);
}

std::vector<Vector> embed_trajectory(const Trajectory& traj, const ExtensionMap& map,
                                     const Matrix& e, const Matrix& a, AuxInit init) {
    const std::size_t big = map.extended_size();
    if (a.rows() != big || a.cols() != big || e.cols() != big) {
        throw DimensionError("embed: extended matrices do not match the extension map");
    }
    if (traj.realized_params.size() != traj.states.size()) {
        throw DomainError("embed: need one parameter set per state");
    }

    std::vector<Vector> out;
    out.reserve(traj.states.size());
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        const Vector& x = traj.states[k];
        const auto& theta = traj.realized_params[k];
        if (x.size() != map.n || theta.size() != map.entries.size()) {
            throw DimensionError("embed: state or parameter set has the wrong size");
        }
        Vector ext(big, Scalar::eps());
        std::copy(x.begin(), x.end(), ext.begin());
        for (std::size_t q = 0; q < map.entries.size(); ++q) {
            const UncertainEntry& u = map.entries[q];
            ext[u.aux_lo] = x[u.col];
            const bool at_source = k == 0 && init == AuxInit::SourceValue;
            ext[u.aux_hi] = at_source ? x[u.col] : otimes(x[u.col], Scalar::finite(theta[q] - u.hi));
        }
        out.push_back(std::move(ext));
    }

    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        if (mat_vec(e, out[k + 1]) != mat_vec(e, mat_vec(a, out[k]))) {
            throw ConstraintViolation("embedded trajectory violates E x(k+1) = E A x(k) at k=" +
                                      std::to_string(k));
        }
    }
    return out;
}

Trajectory extended_trajectory(const Trajectory& traj, const ExtendedSystem& ext, const Matrix& c,
                               AuxInit init) {
    const Matrix c_ext = extend_output_matrix(c, ext.map);
    Trajectory out;
    out.states = embed_trajectory(traj, ext.map, ext.e, ext.a, init);
    out.realized_params = traj.realized_params;
    out.outputs.reserve(out.states.size());
    for (const auto& x : out.states) out.outputs.push_back(mat_vec(c_ext, x));
    return out;
}

}  // namespace maxplus
