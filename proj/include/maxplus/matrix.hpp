#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

using Vector = std::vector<Scalar>;

/// Dense row-major max-plus matrix.
///
/// Zero rows or zero columns are allowed: a 0×n matrix is the kernel of the
/// full relation and an n×0 matrix spans only the ε vector.
///
/// The public constructors reject ⊤. Residuation and min-plus products build
/// their results through `with_top`, and `has_top()` reports whether such a
/// matrix leaked ⊤ entries.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);  // all ε
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix with_top(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    static Matrix identity(std::size_t n);
    static Matrix column(const Vector& v);
    static Matrix row(const Vector& v);
    static Matrix from_columns(std::size_t dim, const std::vector<Vector>& cols);

    /// Parses the compact text form used in tests and docs: rows separated
    /// by ';', entries by whitespace, `e` for ε and `T` for ⊤, e.g.
    /// "0 e; e 1". ⊤ is accepted only when `allow_top` is set.
    static Matrix parse(std::string_view text, bool allow_top = false);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar s);

    std::span<const Scalar> row_span(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    Vector row_vector(std::size_t i) const;
    Vector column_vector(std::size_t j) const;
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    bool has_top() const noexcept;

    Matrix transpose() const;
    /// Rows of `this` followed by rows of `below`.
    Matrix stack(const Matrix& below) const;
    /// Columns of `this` followed by columns of `right`.
    Matrix concat(const Matrix& right) const;

    bool operator==(const Matrix&) const = default;

    std::string to_string() const;

private:
    struct Unchecked {};
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Unchecked);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

Matrix mat_add(const Matrix& e, const Matrix& f);
Matrix mat_mul(const Matrix& e, const Matrix& f);
Vector mat_vec(const Matrix& a, std::span<const Scalar> x);
Vector vec_add(std::span<const Scalar> x, std::span<const Scalar> y);
Vector scale(Scalar lambda, std::span<const Scalar> x);

/// Min-plus product, with (+inf) + a = +inf taking precedence.
Matrix min_plus_mul(const Matrix& p, const Matrix& q);

/// (-F^t): transpose and negate, mapping ε to ⊤ (and ⊤ back to ε).
Matrix negate_transpose(const Matrix& f);

/// Greatest X with A ⊗ X ≤ B, column by column.
Matrix left_residual(const Matrix& a, const Matrix& b);
/// Greatest H with H ⊗ A ≤ B, row by row.
Matrix right_residual(const Matrix& b, const Matrix& a);

/// Entrywise comparison in the natural order (ε lowest, ⊤ highest).
bool leq(const Matrix& x, const Matrix& y);
bool leq(std::span<const Scalar> x, std::span<const Scalar> y);

/// Replace ⊤ entries with ε.
Matrix clamp_top(const Matrix& m);

std::string to_string(std::span<const Scalar> v);

}  // namespace maxplus
