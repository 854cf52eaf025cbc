#include "plab/matrix.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <tuple>

namespace plab {

Echelon rref(Matrix<Rational> m)
{
    Echelon out;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t r = pr;
        while (r < m.rows() && m(r, c).is_zero())
            ++r;
        if (r == m.rows())
            continue;
        m.swap_rows(r, pr);
        const Rational inv = m(pr, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            m(pr, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m(i, c).is_zero())
                continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(pr, j).is_zero())
                    m(i, j) -= f * m(pr, j);
        }
        out.pivot_columns.push_back(c);
        ++pr;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix<Rational>& m) { return rref(m).pivot_columns.size(); }

std::vector<Vector<Rational>> kernel_basis(const Matrix<Rational>& m)
{
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns)
        is_pivot[c] = true;
    std::vector<Vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t t = 0; t < e.pivot_columns.size(); ++t)
            v[e.pivot_columns[t]] = -e.reduced(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector<Rational>> solve(const Matrix<Rational>& m, const Vector<Rational>& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("right-hand side length mismatch");
    Matrix<Rational> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const Echelon e = rref(aug);
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols())
        return std::nullopt;
    Vector<Rational> x(m.cols());
    for (std::size_t t = 0; t < e.pivot_columns.size(); ++t)
        x[e.pivot_columns[t]] = e.reduced(t, m.cols());
    return x;
}

std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    Matrix<Rational> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = rref(aug);
    if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] != n - 1)
        return std::nullopt;
    Matrix<Rational> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

PolyEchelon fraction_free_reduce(Matrix<Poly> m)
{
    PolyEchelon out;
    Poly prev(1);
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::optional<std::size_t> best;
        std::tuple<unsigned, std::size_t> best_key{};
        for (std::size_t r = pr; r < m.rows(); ++r) {
            if (m(r, c).is_zero())
                continue;
            auto key = std::make_tuple(m(r, c).total_degree(), m(r, c).terms().size());
            if (!best || key < best_key) {
                best = r;
                best_key = key;
            }
        }
        if (!best)
            continue;
        m.swap_rows(*best, pr);
        const Poly p = m(pr, c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr)
                continue;
            const Poly a = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Poly v = p * m(i, j);
                if (!a.is_zero() && !m(pr, j).is_zero())
                    v -= a * m(pr, j);
                if (prev.is_constant()) {
                    v = v.scaled(prev.constant_value().inverse());
                } else {
                    auto q = v.exact_divide(prev);
                    if (!q)
                        throw InvariantViolation("fraction-free elimination produced an inexact division");
                    v = std::move(*q);
                }
                m(i, j) = std::move(v);
            }
        }
        prev = p;
        out.pivot_columns.push_back(c);
        ++pr;
    }
    out.scale = prev;
    out.reduced = std::move(m);
    return out;
}

Matrix<Poly> clear_row_denominators(const Matrix<RatFunc>& m)
{
    Matrix<Poly> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Poly> dens;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Poly& d = m(i, j).den();
            if (d.is_constant())
                continue;
            if (std::find(dens.begin(), dens.end(), d) == dens.end())
                dens.push_back(d);
        }
        Poly l(1);
        for (const auto& d : dens)
            l *= d;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const RatFunc& e = m(i, j);
            if (e.is_zero())
                continue;
            if (e.den().is_constant()) {
                out(i, j) = e.num().scaled(e.den().constant_value().inverse()) * l;
            } else {
                auto q = l.exact_divide(e.den());
                if (!q)
                    throw InvariantViolation("denominator does not divide row multiplier");
                out(i, j) = e.num() * *q;
            }
        }
    }
    return out;
}

Vector<Poly> make_primitive(Vector<Poly> v)
{
    mpz_class g = 0;
    mpz_class l = 1;
    std::optional<Exponent> mono;
    bool mono_possible = true;
    for (const auto& p : v) {
        if (p.is_zero())
            continue;
        const Rational c = p.content();
        mpz_class num = c.numerator();
        mpz_class den = c.denominator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        if (!mono_possible)
            continue;
        if (!p.chart() || p.is_constant()) {
            mono_possible = false;
            continue;
        }
        Exponent e = p.monomial_content();
        if (!mono)
            mono = e;
        else
            for (std::size_t i = 0; i < e.size(); ++i)
                (*mono)[i] = std::min((*mono)[i], e[i]);
    }
    if (g == 0)
        return v;
    // Sign: first nonzero entry's leading coefficient becomes positive.
    Rational scale = Rational(l, g);
    for (const auto& p : v)
        if (!p.is_zero()) {
            if (p.leading_term().second.sign() < 0)
                scale = -scale;
            break;
        }
    const bool has_mono = mono_possible && mono && std::any_of(mono->begin(), mono->end(), [](unsigned e) { return e > 0; });
    for (auto& p : v) {
        if (p.is_zero())
            continue;
        p = p.scaled(scale);
        if (has_mono)
            p = p.divide_monomial(*mono);
    }
    return v;
}

Vector<Poly> clear_denominators(const Vector<RatFunc>& v)
{
    Matrix<RatFunc> m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        m(0, j) = v[j];
    const Matrix<Poly> c = clear_row_denominators(m);
    return make_primitive(c.row(0));
}

bool all_constant(const Matrix<RatFunc>& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_constant())
                return false;
    return true;
}

Matrix<Rational> to_rational(const Matrix<RatFunc>& m)
{
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).constant_value();
    return r;
}

Matrix<RatFunc> to_ratfunc(const Matrix<Rational>& m)
{
    Matrix<RatFunc> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = RatFunc(m(i, j));
    return r;
}

Matrix<Rational> evaluate(const Matrix<RatFunc>& m, std::span<const Rational> point)
{
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                r(i, j) = m(i, j).eval(point);
    return r;
}

std::size_t generic_rank(const Matrix<RatFunc>& m)
{
    if (all_constant(m))
        return rank(to_rational(m));
    return fraction_free_reduce(clear_row_denominators(m)).pivot_columns.size();
}

std::vector<Vector<Poly>> kernel_basis(const Matrix<RatFunc>& m)
{
    std::vector<Vector<Poly>> basis;
    if (all_constant(m)) {
        for (auto& v : kernel_basis(to_rational(m))) {
            Vector<Poly> p;
            p.reserve(v.size());
            for (auto& x : v)
                p.emplace_back(x);
            basis.push_back(make_primitive(std::move(p)));
        }
        return basis;
    }
    const PolyEchelon e = fraction_free_reduce(clear_row_denominators(m));
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns)
        is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector<Poly> v(m.cols());
        v[f] = e.scale;
        for (std::size_t t = 0; t < e.pivot_columns.size(); ++t)
            v[e.pivot_columns[t]] = -e.reduced(t, f);
        basis.push_back(make_primitive(std::move(v)));
    }
    return basis;
}

} // namespace plab
