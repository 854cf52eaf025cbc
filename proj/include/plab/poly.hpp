#pragma once

#include "plab/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace plab {

/// Ordered list of uniquely named coordinates.
class Chart {
public:
    explicit Chart(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Like index_of but throws ChartMismatch for unknown names.
    std::size_t require(std::string_view name) const;

    friend bool operator==(const Chart& a, const Chart& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> names);
bool same_chart(const ChartPtr& a, const ChartPtr& b);

using Exponent = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then the earlier chart
/// variable dominates.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// A polynomial without a chart is a constant; it adopts the chart of any
/// operand it is combined with.
class Poly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexLess>;

    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(ChartPtr chart) : chart_(std::move(chart)) {}

    static Poly constant(ChartPtr chart, const Rational& c);
    static Poly variable(ChartPtr chart, std::size_t index);
    static Poly variable(ChartPtr chart, std::string_view name);
    static Poly monomial(ChartPtr chart, Exponent exponent, const Rational& c);

    const ChartPtr& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    /// Throws std::logic_error when the polynomial is not constant.
    Rational constant_value() const;
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const;
    /// Leading term in graded lexicographic order; requires a nonzero polynomial.
    const std::pair<const Exponent, Rational>& leading_term() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned e) const;

    /// Exact partial derivative with respect to a chart variable.
    Poly partial(std::size_t var) const;
    Poly partial(std::string_view var) const;

    Rational eval(std::span<const Rational> point) const;
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    /// Replaces variable i by images[i]; images must cover the whole chart.
    Poly substitute(const std::vector<Poly>& images) const;
    /// Re-expresses the polynomial on another chart, matching variables by name.
    Poly rechart(const ChartPtr& target) const;

    /// Quotient when d divides this polynomial exactly, nullopt otherwise.
    std::optional<Poly> exact_divide(const Poly& d) const;
    /// Positive rational c such that this/c has coprime integer coefficients.
    Rational content() const;
    /// Exponent of the largest monomial dividing every term.
    Exponent monomial_content() const;
    Poly divide_monomial(const Exponent& e) const;

    std::string str() const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    void adopt(const ChartPtr& chart);
    void add_term(const Exponent& e, const Rational& c);
    static ChartPtr unify(const ChartPtr& a, const ChartPtr& b);

    ChartPtr chart_;
    TermMap terms_;
};

/// Quotient of polynomials; the denominator is kept monic in graded lex order.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    /// Throws std::domain_error on a zero denominator.
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    ChartPtr chart() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    /// Throws std::logic_error when the denominator is not constant.
    Poly to_poly() const;
    unsigned total_degree() const { return num_.total_degree() + den_.total_degree(); }
    std::size_t term_count() const { return num_.terms().size() + den_.terms().size(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc partial(std::size_t var) const;
    /// Throws SingularPoint when the denominator vanishes at the point.
    Rational eval(std::span<const Rational> point) const;
    RatFunc substitute(const std::vector<Poly>& images) const;
    RatFunc rechart(const ChartPtr& target) const;

    std::string str() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
    void normalize();

    Poly num_;
    Poly den_;
};

/// Identity images for Poly::substitute on the given chart.
std::vector<Poly> chart_variables(const ChartPtr& chart);

} // namespace plab
