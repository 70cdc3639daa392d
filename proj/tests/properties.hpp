#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// gate. Each check draws one case from `rng` and returns an empty string on
// success, otherwise a description of the counterexample.

#include <random>
#include <string>

#include "maxplus/congruence.hpp"
#include "maxplus/invariance.hpp"
#include "maxplus/semimodule.hpp"
#include "random_cases.hpp"

namespace props {

using namespace maxplus;

inline bool same_relation(const Congruence& w1, const Congruence& w2) {
    const std::size_t n = w1.dim();
    for (const Congruence* a : {&w1, &w2}) {
        const Congruence& b = a == &w1 ? w2 : w1;
        const Semimodule pairs = congruence_generators(*a);
        for (const auto& g : pairs.generators()) {
            std::span<const Scalar> s(g);
            if (!related(b, s.first(n), s.subspan(n))) return false;
        }
    }
    return true;
}

inline Congruence random_kernel(std::mt19937_64& rng, std::size_t n) {
    return kernel_of(cases::random_matrix(rng, cases::pick(rng, 1, 3), n, -2, 2, 0.3));
}

inline Semimodule random_semimodule(std::mt19937_64& rng, std::size_t n) {
    return Semimodule(cases::random_matrix(rng, n, cases::pick(rng, 1, 3), -2, 2, 0.3));
}

inline std::string galois(std::mt19937_64& rng) {
    const std::size_t m = cases::pick(rng, 1, 3), n = cases::pick(rng, 1, 3);
    const Matrix a = cases::random_matrix(rng, m, n, -3, 3, 0.3);
    const Matrix b = cases::random_matrix(rng, m, 1, -3, 3, 0.2);
    const Matrix x = cases::random_matrix(rng, n, 1, -6, 6, 0.2);
    if (leq(mat_mul(a, x), b) != leq(x, left_residual(a, b))) {
        return "A x <= b vs x <= A\\b, A=" + a.to_string() + " b=" + b.to_string() +
               " x=" + x.to_string();
    }
    const Matrix h = x.transpose();
    const Matrix at = a.transpose();
    const Matrix bt = b.transpose();
    if (leq(mat_mul(h, at), bt) != leq(h, right_residual(bt, at))) {
        return "h A <= b vs h <= b/A, A=" + at.to_string() + " b=" + bt.to_string();
    }
    return {};
}

/// X = (X^⊥)^⊤, with the outer orthogonal taken through pair generators.
inline std::string double_orthogonal_semimodule(std::mt19937_64& rng) {
    const Semimodule x = random_semimodule(rng, cases::pick(rng, 1, 3));
    const Semimodule back = pair_orthogonal(congruence_generators(orthogonal_semimodule(x)));
    if (!equals(back, x)) return "X=" + x.matrix().to_string() + " gave " + back.matrix().to_string();
    return {};
}

/// W = (W^⊤)^⊥, with the inner orthogonal taken through pair generators.
inline std::string double_orthogonal_congruence(std::mt19937_64& rng) {
    const Congruence w = random_kernel(rng, cases::pick(rng, 1, 3));
    const Semimodule top = pair_orthogonal(congruence_generators(w));
    if (!same_relation(orthogonal_semimodule(top), w)) return "W=ker " + w.kernel().to_string();
    return {};
}

/// (W1 ⊕ W2)^⊤ = W1^⊤ ∩ W2^⊤ and (X1 ⊕ X2)^⊥ = X1^⊥ ∩ X2^⊥.
inline std::string orthogonal_of_sum(std::mt19937_64& rng) {
    const std::size_t n = cases::pick(rng, 1, 3);
    const Semimodule p1 = congruence_generators(random_kernel(rng, n));
    const Semimodule p2 = congruence_generators(random_kernel(rng, n));
    if (!equals(pair_orthogonal(sum(p1, p2)), intersect(pair_orthogonal(p1), pair_orthogonal(p2)))) {
        return "congruence sum";
    }
    const Semimodule x1 = random_semimodule(rng, n), x2 = random_semimodule(rng, n);
    if (!same_relation(orthogonal_semimodule(sum(x1, x2)),
                       intersect_congruences(orthogonal_semimodule(x1), orthogonal_semimodule(x2)))) {
        return "semimodule sum";
    }
    return {};
}

/// (A W)^⊤ = (A^t)^{-1} W^⊤ and (A X)^⊥ = (A^t)^{-1} X^⊥.
inline std::string orthogonal_of_image(std::mt19937_64& rng) {
    const std::size_t n = cases::pick(rng, 1, 3);
    const Matrix a = cases::random_matrix(rng, n, n, -2, 2, 0.4);
    const Semimodule pairs = congruence_generators(random_kernel(rng, n));
    if (!equals(pair_orthogonal(apply_to_pairs(a, pairs)),
                preimage(a.transpose(), pair_orthogonal(pairs)))) {
        return "congruence image, A=" + a.to_string();
    }
    const Semimodule x = random_semimodule(rng, n);
    // (A^t)^{-1} ker E = ker (E A^t).
    const Congruence pulled = kernel_of(mat_mul(orthogonal_semimodule(x).kernel(), a.transpose()));
    if (!same_relation(orthogonal_semimodule(image(a, x)), pulled)) {
        return "semimodule image, A=" + a.to_string();
    }
    return {};
}

/// (W1 ∩ W2)^⊤ = W1^⊤ ⊕ W2^⊤ and (X1 ∩ X2)^⊥ = X1^⊥ ⊕ X2^⊥ for finitely
/// generated arguments. On the congruence side ⊕ is the closed congruence
/// generated by the sum: the plain pair sum of two congruences need not be
/// transitive (X1 = span{(-2,0)}, X2 = span{(0,ε)} misses (ε; (0,ε))), so
/// it is only checked to be included.
inline std::string orthogonal_of_intersection(std::mt19937_64& rng) {
    const std::size_t n = cases::pick(rng, 1, 3);
    const Congruence w1 = random_kernel(rng, n), w2 = random_kernel(rng, n);
    const Semimodule lhs = pair_orthogonal(congruence_generators(intersect_congruences(w1, w2)));
    const Semimodule rhs = sum(pair_orthogonal(congruence_generators(w1)),
                               pair_orthogonal(congruence_generators(w2)));
    if (!equals(lhs, rhs)) return "congruence intersection";
    const Semimodule x1 = random_semimodule(rng, n), x2 = random_semimodule(rng, n);
    const Congruence meet = orthogonal_semimodule(intersect(x1, x2));
    const Semimodule summed = sum(congruence_generators(orthogonal_semimodule(x1)),
                                  congruence_generators(orthogonal_semimodule(x2)));
    if (!includes(congruence_generators(meet), summed)) return "pair sum not included";
    if (!same_relation(meet, orthogonal_semimodule(pair_orthogonal(summed)))) {
        return "semimodule intersection, X1=" + x1.matrix().to_string() +
               " X2=" + x2.matrix().to_string();
    }
    return {};
}

inline bool volume_eq(const VolumeResult& a, const VolumeResult& b) {
    return a.kind == b.kind && (a.kind != VolumeResult::Kind::Finite || a.count == b.count);
}

inline std::string volume_transpose(std::mt19937_64& rng) {
    const Matrix e =
        cases::random_matrix(rng, cases::pick(rng, 1, 3), cases::pick(rng, 1, 3), -3, 3, 0.3);
    const VolumeResult a = volume(Semimodule(e));
    const VolumeResult b = volume(Semimodule(e.transpose()));
    if (a.kind == VolumeResult::Kind::Unknown || !volume_eq(a, b)) return "E=" + e.to_string();
    return {};
}

/// Y ⊆ Z implies vol Y <= vol Z, strictly when Y ≠ Z and vol Y is finite.
inline std::string volume_monotone(std::mt19937_64& rng) {
    const std::size_t n = cases::pick(rng, 1, 3);
    const Semimodule z(cases::random_matrix(rng, n, cases::pick(rng, 1, 4), -3, 0, 0.25));
    const Matrix mix = cases::random_matrix(rng, z.size(), cases::pick(rng, 1, 2), -2, 0, 0.4);
    const Semimodule y(z.size() == 0 ? Matrix(n, 0) : mat_mul(z.matrix(), mix));
    const VolumeResult vy = volume(y), vz = volume(z);
    using K = VolumeResult::Kind;
    if (vy.kind == K::Unknown || vz.kind == K::Unknown) return "unknown volume";
    if (vz.kind == K::Finite && vy.kind != K::Finite) return "finite Z with infinite subset";
    if (vz.kind == K::Finite && vy.count > vz.count) return "monotonicity";
    if (vy.kind == K::Finite && vz.kind == K::Finite && !equals(y, z) && vy.count >= vz.count) {
        return "strictness, Z=" + z.matrix().to_string() + " Y=" + y.matrix().to_string();
    }
    if (equals(y, z) && !volume_eq(vy, vz)) return "equal semimodules, different volumes";
    return {};
}

/// The sum of controlled invariants is controlled invariant and the
/// intersection of conditioned invariants is conditioned invariant.
inline std::string invariant_closure(std::mt19937_64& rng) {
    const std::size_t n = cases::pick(rng, 2, 3);
    const Matrix a = cases::random_matrix(rng, n, n, -2, 2, 0.4);
    const Matrix b = cases::random_matrix(rng, n, 1, -2, 2, 0.5);
    const auto x1 = max_controlled_invariant(a, b, cases::finite_volume_semimodule(rng, n, 2, 2));
    const auto x2 = max_controlled_invariant(a, b, cases::finite_volume_semimodule(rng, n, 2, 2));
    if (!x1.converged || !x2.converged) return "finite-volume chain did not converge";
    if (!is_controlled_invariant(sum(x1.result, x2.result), a, b)) return "controlled sum";

    const Matrix c = cases::random_matrix(rng, 1, n, -2, 2, 0.4);
    const Matrix e1 = cases::random_matrix(rng, 2, n, -2, 0, 0.0);
    const Matrix e2 = cases::random_matrix(rng, 2, n, -2, 0, 0.0);
    const Congruence w1 = min_conditioned_invariant_closed(c, a, kernel_of(e1));
    const Congruence w2 = min_conditioned_invariant_closed(c, a, kernel_of(e2));
    if (!is_conditioned_invariant(w1, c, a) || !is_conditioned_invariant(w2, c, a)) {
        return "computed congruence is not conditioned invariant";
    }
    if (!is_conditioned_invariant(intersect_congruences(w1, w2), c, a)) {
        return "conditioned intersection, A=" + a.to_string() + " C=" + c.to_string();
    }
    return {};
}

/// With vol K finite the chain reaches its fixpoint X_r with r <= vol K + 1.
inline std::string termination_within_volume(std::mt19937_64& rng) {
    const std::size_t n = cases::pick(rng, 1, 3);
    const Matrix a = cases::random_matrix(rng, n, n, -2, 2, 0.4);
    const Matrix b = cases::random_matrix(rng, n, cases::pick(rng, 1, 2), -2, 2, 0.5);
    const Semimodule k = cases::finite_volume_semimodule(rng, n, cases::pick(rng, 1, 3), 3);
    const VolumeResult vol = volume(k);
    if (vol.kind != VolumeResult::Kind::Finite) return "generated K without finite volume";
    const FixpointReport rep = max_controlled_invariant(a, b, k);
    if (!rep.converged) return "did not converge";
    // iterations counts X_1..X_{r+1}; the fixpoint is X_r.
    if (rep.iterations - 1 > vol.count + 1) {
        return "fixpoint at " + std::to_string(rep.iterations - 1) + " > vol+1 = " +
               std::to_string(vol.count + 1);
    }
    if (!includes(k, rep.result) || !is_controlled_invariant(rep.result, a, b)) {
        return "result is not a controlled invariant inside K";
    }
    return {};
}

}  // namespace props
