#pragma once

#include "plab/poly.hpp"
#include "plab/rational.hpp"

#include <compare>
#include <map>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plab {

/// Exponent vector of a repeated partial derivative.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}
    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
    static MultiIndex unit(std::size_t n, std::size_t i);

    std::size_t size() const { return e_.size(); }
    unsigned order() const;
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    MultiIndex raised(std::size_t i) const;
    std::optional<MultiIndex> lowered(std::size_t i) const;
    /// Index of the first nonzero entry; requires order() > 0.
    std::size_t first_nonzero() const;
    MultiIndex operator+(const MultiIndex& o) const;
    /// alpha! = prod alpha_i!
    mpz_class factorial() const;

    /// Comma-separated exponents, e.g. "2,0".
    std::string str() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> e_;
};

/// Multi-indices of exact order q, lexicographically descending
/// ((1,0) before (0,1)).
std::vector<MultiIndex> multi_indices_of_order(std::size_t n, unsigned q);
/// All multi-indices with |alpha| <= k in graded order; count C(n+k, k).
std::vector<MultiIndex> enumerate_multi_indices(std::size_t n, unsigned k);

/// Coordinates x^1..x^n, u^a_alpha (|alpha| <= k) on J_k of R^n x R^m -> R^n.
///
/// Jet coordinates are grouped by alpha (graded order) and then by fiber
/// component, so the order-k chart is a prefix of the order-(k+1) chart.
/// Charts of equal shape share one Chart instance.
class JetChart {
public:
    struct Coordinate {
        bool is_base = false;
        std::size_t component = 0; ///< base direction or fiber index
        MultiIndex alpha;          ///< empty for base coordinates
    };

    JetChart(std::vector<std::string> base, std::vector<std::string> fiber, unsigned order);

    std::size_t n() const { return data_->base.size(); }
    std::size_t m() const { return data_->fiber.size(); }
    unsigned order() const { return data_->order; }
    const std::vector<std::string>& base_names() const { return data_->base; }
    const std::vector<std::string>& fiber_names() const { return data_->fiber; }

    const ChartPtr& chart() const { return data_->chart; }
    const ChartPtr& base_chart() const { return data_->base_chart; }
    std::size_t dimension() const { return data_->chart->size(); }

    std::size_t jet_index(std::size_t a, const MultiIndex& alpha) const;
    const Coordinate& coordinate(std::size_t idx) const { return data_->coords.at(idx); }
    /// Indices of u^a_alpha with |alpha| = q, in chart order.
    std::vector<std::size_t> coordinates_of_order(unsigned q) const;
    std::string jet_name(std::size_t a, const MultiIndex& alpha) const;

    Poly base_var(std::size_t i) const { return Poly::variable(chart(), i); }
    Poly jet_var(std::size_t a, const MultiIndex& alpha) const { return Poly::variable(chart(), jet_index(a, alpha)); }

    JetChart raised(unsigned by = 1) const;
    JetChart with_order(unsigned order) const;
    /// Same base and fiber names (any order).
    bool same_bundle(const JetChart& o) const;

    friend bool operator==(const JetChart& a, const JetChart& b) { return a.data_ == b.data_; }

private:
    struct Data {
        std::vector<std::string> base;
        std::vector<std::string> fiber;
        unsigned order = 0;
        ChartPtr chart;
        ChartPtr base_chart;
        std::vector<Coordinate> coords;
        std::map<std::vector<unsigned>, std::size_t> alpha_position;
    };
    std::shared_ptr<const Data> data_;
};

/// n + m * C(n+k, k)
std::size_t jet_dimension(const JetChart& chart);

/// Highest |alpha| among jet coordinates a polynomial depends on (0 if none).
unsigned jet_order_of(const JetChart& chart, const Poly& p);

/// D_i F = dF/dx^i + sum u^a_{alpha+1_i} dF/du^a_alpha, on the order-(k+1) chart.
Poly total_derivative(const JetChart& chart, const Poly& f, std::size_t i);

/// Local section x -> (x, sigma(x)) with polynomial components.
struct PolySection {
    ChartPtr base_chart;
    std::vector<Poly> components;
};

/// Every jet coordinate of j_k sigma as a polynomial in the base variables.
std::vector<Poly> holonomic_jet_symbolic(const JetChart& chart, const PolySection& sigma);
/// Coordinates of j_k sigma(x0).
std::vector<Rational> holonomic_jet(const JetChart& chart, const PolySection& sigma, std::span<const Rational> x0);

} // namespace plab
