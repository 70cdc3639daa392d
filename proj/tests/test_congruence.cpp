#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maxplus/congruence.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "random_cases.hpp"

using namespace maxplus;

TEST_CASE("kernel relation") {
    const Congruence w = kernel_of(Matrix::parse("0 e; 0 0"));
    const Vector x{Scalar::finite(1), Scalar::finite(0)};
    const Vector y{Scalar::finite(1), Scalar::finite(-5)};
    const Vector z{Scalar::finite(1), Scalar::finite(2)};
    CHECK(related(w, x, y));
    CHECK_FALSE(related(w, x, z));
    CHECK(w.has_kernel());
    CHECK_FALSE(w.has_pairs());
    CHECK_THROWS_AS(related(w, x, Vector(3)), DimensionError);
}

TEST_CASE("zero-row kernel is the full relation") {
    const Congruence w = kernel_of(Matrix(0, 2));
    CHECK(related(w, Vector{Scalar::finite(3), Scalar::eps()}, Vector{Scalar::eps(), Scalar::finite(1)}));
}

TEST_CASE("pair generators of a kernel against the grid") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = cases::pick(rng, 1, 2);
        const Matrix e = cases::random_matrix(rng, cases::pick(rng, 1, 2), n, -2, 2, 0.3);
        std::vector<oracle::Vec> gens;
        const Semimodule pairs = congruence_generators(kernel_of(e));
        for (const auto& g : pairs.generators()) gens.push_back(oracle::from(g));
        const auto oe = oracle::from(e);
        oracle::for_each_grid(2 * n, -3, 3, [&](const oracle::Vec& xy) {
            const oracle::Vec x(xy.begin(), xy.begin() + n), y(xy.begin() + n, xy.end());
            CHECK(oracle::in_span(xy, gens) == oracle::same(oracle::matvec(oe, x), oracle::matvec(oe, y)));
        });
    }
}

TEST_CASE("pair form computes its kernel lazily") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = cases::pick(rng, 1, 3);
        const Congruence base = props::random_kernel(rng, n);
        const Congruence w = Congruence::from_pairs(congruence_generators(base));
        CHECK(w.has_pairs());
        CHECK_FALSE(w.has_kernel());
        CHECK(props::same_relation(kernel_of(w.kernel()), base));
        CHECK_FALSE(w.has_kernel());  // computed on demand but not supplied
    }
}

TEST_CASE("from_pairs adjoins the diagonal and symmetry") {
    // A single pair (x, y) generates, with the diagonal, a reflexive and
    // symmetric semimodule.
    const Vector x{Scalar::finite(0), Scalar::eps()};
    const Vector y{Scalar::eps(), Scalar::finite(0)};
    const Congruence w = Congruence::from_pairs(Semimodule::from_vectors(4, {stack_pair(x, y)}));
    CHECK(related(w, x, y));
    CHECK(related(w, y, x));
    CHECK(related(w, x, x));
    CHECK_THROWS_AS(Congruence::from_pairs(Semimodule::full(3)), DimensionError);
}

TEST_CASE("pair orthogonal against its definition") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = cases::pick(rng, 1, 3);
        const Semimodule pairs = congruence_generators(props::random_kernel(rng, n));
        std::vector<oracle::Vec> orth;
        const Semimodule orthogonal = pair_orthogonal(pairs);
        for (const auto& g : orthogonal.generators()) orth.push_back(oracle::from(g));
        oracle::for_each_grid(n, -4, 4, [&](const oracle::Vec& z) {
            bool agrees = true;
            for (const auto& g : pairs.generators()) {
                const auto og = oracle::from(g);
                const oracle::Vec x(og.begin(), og.begin() + n), y(og.begin() + n, og.end());
                agrees = agrees && oracle::dot(x, z) == oracle::dot(y, z);
            }
            CHECK(oracle::in_span(z, orth) == agrees);
        });
    }
}

TEST_CASE("orthogonals of explicit examples") {
    // (Im E)^⊥ = ker E^t and (ker E)^⊤ = Im E^t.
    const Matrix e = Matrix::parse("0 e; 0 0");
    CHECK(equals(orthogonal_congruence(kernel_of(e)), Semimodule(e.transpose())));
    CHECK(props::same_relation(orthogonal_semimodule(Semimodule(e)), kernel_of(e.transpose())));
    CHECK(generators_to_kernel(congruence_generators(kernel_of(e))).cols() == 2);
}

TEST_CASE("orthogonal calculus") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 30; ++t) {
        CHECK(props::double_orthogonal_semimodule(rng) == "");
        CHECK(props::double_orthogonal_congruence(rng) == "");
        CHECK(props::orthogonal_of_sum(rng) == "");
        CHECK(props::orthogonal_of_image(rng) == "");
        CHECK(props::orthogonal_of_intersection(rng) == "");
    }
}

TEST_CASE("copies share the lazy cache") {
    const Congruence w = Congruence::from_pairs(congruence_generators(kernel_of(Matrix::parse("0 0"))));
    const Congruence copy = w;
    const Matrix& k1 = w.kernel();
    const Matrix& k2 = copy.kernel();
    CHECK(&k1 == &k2);
}
