#include "maxplus/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace maxplus {

namespace {

void require(bool ok, const char* op, std::size_t r1, std::size_t c1, std::size_t r2,
             std::size_t c2) {
    if (ok) return;
    std::ostringstream os;
    os << op << ": incompatible dimensions " << r1 << "x" << c1 << " and " << r2 << "x" << c2;
    throw DimensionError(os.str());
}

void reject_top(const std::vector<Scalar>& entries) {
    if (std::any_of(entries.begin(), entries.end(), [](Scalar s) { return s.is_top(); })) {
        throw DomainError("+inf is only allowed in residual and min-plus matrices");
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar::eps()) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("matrix entry count does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
    reject_top(entries_);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Unchecked)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    reject_top(entries_);
}

Matrix Matrix::with_top(std::size_t rows, std::size_t cols, std::vector<Scalar> entries) {
    if (entries.size() != rows * cols) {
        throw DimensionError("matrix entry count does not match shape");
    }
    return Matrix(rows, cols, std::move(entries), Unchecked{});
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::unit();
    return m;
}

Matrix Matrix::column(const Vector& v) { return with_top(v.size(), 1, v); }

Matrix Matrix::row(const Vector& v) { return with_top(1, v.size(), v); }

Matrix Matrix::from_columns(std::size_t dim, const std::vector<Vector>& cols) {
    Matrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim) throw DimensionError("column length differs from dimension");
        for (std::size_t i = 0; i < dim; ++i) m.entries_[i * cols.size() + j] = cols[j][i];
    }
    reject_top(m.entries_);
    return m;
}

Matrix Matrix::parse(std::string_view text, bool allow_top) {
    std::vector<Scalar> entries;
    std::size_t rows = 0;
    std::size_t cols = 0;
    while (!text.empty()) {
        const auto cut = text.find(';');
        std::istringstream line(std::string(text.substr(0, cut)));
        text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
        std::size_t count = 0;
        std::string tok;
        while (line >> tok) {
            if (tok == "e" || tok == "eps" || tok == "-inf") {
                entries.push_back(Scalar::eps());
            } else if (tok == "T" || tok == "+inf") {
                entries.push_back(Scalar::top());
            } else {
                std::int64_t v = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                    throw DomainError("bad matrix token '" + tok + "'");
                }
                entries.push_back(Scalar::finite(v));
            }
            ++count;
        }
        if (count == 0) continue;
        if (rows > 0 && count != cols) throw DimensionError("ragged matrix text");
        cols = count;
        ++rows;
    }
    if (allow_top) return with_top(rows, cols, std::move(entries));
    return Matrix(rows, cols, std::move(entries));
}

void Matrix::set(std::size_t i, std::size_t j, Scalar s) { entries_[i * cols_ + j] = s; }

Vector Matrix::row_vector(std::size_t i) const {
    auto r = row_span(i);
    return Vector(r.begin(), r.end());
}

Vector Matrix::column_vector(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool Matrix::has_top() const noexcept {
    return std::any_of(entries_.begin(), entries_.end(), [](Scalar s) { return s.is_top(); });
}

Matrix Matrix::transpose() const {
    std::vector<Scalar> t(entries_.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = entries_[i * cols_ + j];
    return Matrix(cols_, rows_, std::move(t), Unchecked{});
}

Matrix Matrix::stack(const Matrix& below) const {
    require(cols_ == below.cols_, "stack", rows_, cols_, below.rows_, below.cols_);
    std::vector<Scalar> e = entries_;
    e.insert(e.end(), below.entries_.begin(), below.entries_.end());
    return Matrix(rows_ + below.rows_, cols_, std::move(e), Unchecked{});
}

Matrix Matrix::concat(const Matrix& right) const {
    require(rows_ == right.rows_, "concat", rows_, cols_, right.rows_, right.cols_);
    const std::size_t c = cols_ + right.cols_;
    std::vector<Scalar> e;
    e.reserve(rows_ * c);
    for (std::size_t i = 0; i < rows_; ++i) {
        auto a = row_span(i);
        auto b = right.row_span(i);
        e.insert(e.end(), a.begin(), a.end());
        e.insert(e.end(), b.begin(), b.end());
    }
    return Matrix(rows_, c, std::move(e), Unchecked{});
}

std::string Matrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ' ';
            out += (*this)(i, j).to_string();
        }
    }
    return out;
}

Matrix mat_add(const Matrix& e, const Matrix& f) {
    require(e.rows() == f.rows() && e.cols() == f.cols(), "mat_add", e.rows(), e.cols(), f.rows(),
            f.cols());
    std::vector<Scalar> out(e.entries().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = oplus(e.entries()[k], f.entries()[k]);
    return Matrix::with_top(e.rows(), e.cols(), std::move(out));
}

Matrix mat_mul(const Matrix& e, const Matrix& f) {
    require(e.cols() == f.rows(), "mat_mul", e.rows(), e.cols(), f.rows(), f.cols());
    std::vector<Scalar> out(e.rows() * f.cols(), Scalar::eps());
    for (std::size_t i = 0; i < e.rows(); ++i) {
        for (std::size_t k = 0; k < e.cols(); ++k) {
            const Scalar a = e(i, k);
            if (a.is_eps()) continue;
            for (std::size_t j = 0; j < f.cols(); ++j) {
                Scalar& acc = out[i * f.cols() + j];
                acc = oplus(acc, otimes(a, f(k, j)));
            }
        }
    }
    return Matrix::with_top(e.rows(), f.cols(), std::move(out));
}

Vector mat_vec(const Matrix& a, std::span<const Scalar> x) {
    require(a.cols() == x.size(), "mat_vec", a.rows(), a.cols(), x.size(), 1);
    Vector out(a.rows(), Scalar::eps());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto r = a.row_span(i);
        Scalar acc = Scalar::eps();
        for (std::size_t k = 0; k < r.size(); ++k) acc = oplus(acc, otimes(r[k], x[k]));
        out[i] = acc;
    }
    return out;
}

Vector vec_add(std::span<const Scalar> x, std::span<const Scalar> y) {
    require(x.size() == y.size(), "vec_add", x.size(), 1, y.size(), 1);
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = oplus(x[i], y[i]);
    return out;
}

Vector scale(Scalar lambda, std::span<const Scalar> x) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = otimes(lambda, x[i]);
    return out;
}

Matrix min_plus_mul(const Matrix& p, const Matrix& q) {
    require(p.cols() == q.rows(), "min_plus_mul", p.rows(), p.cols(), q.rows(), q.cols());
    std::vector<Scalar> out(p.rows() * q.cols(), Scalar::top());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t k = 0; k < p.cols(); ++k)
            for (std::size_t j = 0; j < q.cols(); ++j) {
                Scalar& acc = out[i * q.cols() + j];
                acc = min_plus_plus(acc, min_plus_times(p(i, k), q(k, j)));
            }
    return Matrix::with_top(p.rows(), q.cols(), std::move(out));
}

Matrix negate_transpose(const Matrix& f) {
    std::vector<Scalar> out(f.rows() * f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) out[j * f.rows() + i] = negate(f(i, j));
    return Matrix::with_top(f.cols(), f.rows(), std::move(out));
}

Matrix left_residual(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "left_residual", a.rows(), a.cols(), b.rows(), b.cols());
    std::vector<Scalar> out(a.cols() * b.cols(), Scalar::top());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar aij = a(i, j);
            if (aij.is_eps()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                Scalar& acc = out[j * b.cols() + c];
                acc = min_plus_plus(acc, residual(aij, b(i, c)));
            }
        }
    return Matrix::with_top(a.cols(), b.cols(), std::move(out));
}

Matrix right_residual(const Matrix& b, const Matrix& a) {
    require(b.cols() == a.cols(), "right_residual", b.rows(), b.cols(), a.rows(), a.cols());
    std::vector<Scalar> out(b.rows() * a.rows(), Scalar::top());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t k = 0; k < a.rows(); ++k) {
            Scalar acc = Scalar::top();
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const Scalar akj = a(k, j);
                if (akj.is_eps()) continue;
                acc = min_plus_plus(acc, residual(akj, b(i, j)));
            }
            out[i * a.rows() + k] = acc;
        }
    return Matrix::with_top(b.rows(), a.rows(), std::move(out));
}

bool leq(std::span<const Scalar> x, std::span<const Scalar> y) {
    require(x.size() == y.size(), "leq", x.size(), 1, y.size(), 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (y[i] < x[i]) return false;
    return true;
}

bool leq(const Matrix& x, const Matrix& y) {
    require(x.rows() == y.rows() && x.cols() == y.cols(), "leq", x.rows(), x.cols(), y.rows(),
            y.cols());
    return leq(std::span<const Scalar>(x.entries()), std::span<const Scalar>(y.entries()));
}

Matrix clamp_top(const Matrix& m) {
    std::vector<Scalar> e = m.entries();
    for (auto& s : e)
        if (s.is_top()) s = Scalar::eps();
    return Matrix(m.rows(), m.cols(), std::move(e));
}

std::string to_string(std::span<const Scalar> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

}  // namespace maxplus
