#pragma once

#include "plab/poly.hpp"
#include "plab/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace plab {

/// Dense row-major matrix over an exact field (Rational) or ring (Poly, RatFunc).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void append_row(const std::vector<T>& r)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = r.size();
        if (r.size() != cols_)
            throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (!v.is_zero())
                return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
using Vector = std::vector<T>;

struct Echelon {
    Matrix<Rational> reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form over the rationals.
Echelon rref(Matrix<Rational> m);
std::size_t rank(const Matrix<Rational>& m);
/// Basis of the right kernel; free variables set to one in turn.
std::vector<Vector<Rational>> kernel_basis(const Matrix<Rational>& m);
/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vector<Rational>> solve(const Matrix<Rational>& m, const Vector<Rational>& b);
std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m);

struct PolyEchelon {
    /// Fraction-free reduced form: every pivot entry equals `scale`.
    Matrix<Poly> reduced;
    std::vector<std::size_t> pivot_columns;
    Poly scale;
};

/// Fraction-free Gauss-Jordan elimination over Q[vars]; pivots are chosen by
/// lowest total degree. Throws InvariantViolation if a division is inexact.
PolyEchelon fraction_free_reduce(Matrix<Poly> m);

/// Multiplies each row by the product of its distinct denominators.
Matrix<Poly> clear_row_denominators(const Matrix<RatFunc>& m);
/// Scales a vector of rational functions to primitive polynomials.
Vector<Poly> clear_denominators(const Vector<RatFunc>& v);
/// Divides a polynomial vector by its common rational and monomial content.
Vector<Poly> make_primitive(Vector<Poly> v);

bool all_constant(const Matrix<RatFunc>& m);
Matrix<Rational> to_rational(const Matrix<RatFunc>& m);
Matrix<RatFunc> to_ratfunc(const Matrix<Rational>& m);
/// Throws SingularPoint when an entry's denominator vanishes.
Matrix<Rational> evaluate(const Matrix<RatFunc>& m, std::span<const Rational> point);

/// Rank over the rational-function field Q(vars).
std::size_t generic_rank(const Matrix<RatFunc>& m);
/// Right kernel over Q(vars); basis vectors are returned with polynomial entries.
std::vector<Vector<Poly>> kernel_basis(const Matrix<RatFunc>& m);

} // namespace plab
