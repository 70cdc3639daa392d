#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maxplus/solver.hpp"
#include "oracle.hpp"
#include "random_cases.hpp"

using namespace maxplus;

namespace {

// Every generator solves the system and every grid solution is spanned.
void check_against_grid(const Matrix& f, const Matrix& g, long long radius) {
    const Semimodule sol = solve_two_sided(TwoSidedSystem(f, g));
    const auto of = oracle::from(f), og = oracle::from(g);
    std::vector<oracle::Vec> gens;
    for (const auto& v : sol.generators()) {
        const auto ov = oracle::from(v);
        CHECK(oracle::same(oracle::matvec(of, ov), oracle::matvec(og, ov)));
        gens.push_back(ov);
    }
    oracle::for_each_grid(f.cols(), -radius, radius, [&](const oracle::Vec& z) {
        if (oracle::same(oracle::matvec(of, z), oracle::matvec(og, z))) {
            CHECK_MESSAGE(oracle::in_span(z, gens), "unspanned solution for F=", f.to_string(),
                          " G=", g.to_string());
        }
    });
}

}  // namespace

TEST_CASE("single equation with a shared unknown") {
    // z1 ⊕ z2 = z2 ⊕ z3 has (0, 0, ε) among its solutions.
    const Matrix f = Matrix::parse("0 0 e");
    const Matrix g = Matrix::parse("e 0 0");
    const Semimodule sol = solve_two_sided(TwoSidedSystem(f, g));
    CHECK(membership(Vector{Scalar::unit(), Scalar::unit(), Scalar::eps()}, sol));
    CHECK_FALSE(membership(Vector{Scalar::unit(), Scalar::eps(), Scalar::eps()}, sol));
    check_against_grid(f, g, 4);
}

TEST_CASE("trivial systems") {
    SUBCASE("identical sides give the whole space") {
        const Matrix f = Matrix::parse("0 1; 2 e");
        CHECK(solve_two_sided(TwoSidedSystem(f, f)) == Semimodule::full(2));
    }
    SUBCASE("no equations give the whole space") {
        CHECK(solve_two_sided(TwoSidedSystem(Matrix(0, 3), Matrix(0, 3))) == Semimodule::full(3));
    }
    SUBCASE("z1 = ε forces the first coordinate to ε") {
        const Semimodule sol =
            solve_two_sided(TwoSidedSystem(Matrix::parse("0 e"), Matrix::parse("e e")));
        CHECK(sol == Semimodule(Matrix::parse("e; 0")));
    }
    SUBCASE("z1 = z1 + 1 has only the ε solution") {
        const Semimodule sol = solve_two_sided(TwoSidedSystem(Matrix::parse("0"), Matrix::parse("1")));
        CHECK(sol.empty());
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(TwoSidedSystem(Matrix(1, 2), Matrix(1, 3)), DimensionError);
    CHECK_THROWS_AS(TwoSidedSystem(Matrix::with_top(1, 1, {Scalar::top()}), Matrix(1, 1)),
                    DomainError);
}

TEST_CASE("generator ceiling") {
    std::mt19937_64 rng(11);
    const Matrix f = cases::random_matrix(rng, 4, 6, -3, 3, 0.0);
    const Matrix g = cases::random_matrix(rng, 4, 6, -3, 3, 0.0);
    CHECK_THROWS_AS(solve_two_sided(TwoSidedSystem(f, g), SolverOptions{2}), ResourceExceeded);
}

TEST_CASE("random systems match the grid oracle") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        const std::size_t m = cases::pick(rng, 1, 3), n = cases::pick(rng, 1, 3);
        check_against_grid(cases::random_matrix(rng, m, n, -3, 3, 0.3),
                           cases::random_matrix(rng, m, n, -3, 3, 0.3), 6);
    }
}

TEST_CASE("halfspace step keeps exactly the satisfying part") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const Vector a = cases::random_vector(rng, 3, -3, 3, 0.3);
        const Vector b = cases::random_vector(rng, 3, -3, 3, 0.3);
        const Semimodule cut =
            Semimodule::from_vectors(3, intersect_halfspace(Semimodule::full(3).generators(), a, b));
        std::vector<oracle::Vec> gens;
        for (const auto& v : cut.generators()) gens.push_back(oracle::from(v));
        oracle::for_each_grid(3, -5, 5, [&](const oracle::Vec& z) {
            const bool sat = oracle::dot(oracle::from(a), z) <= oracle::dot(oracle::from(b), z);
            CHECK(oracle::in_span(z, gens) == sat);
        });
    }
}
