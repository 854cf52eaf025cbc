#pragma once

#include "plab/matrix.hpp"
#include "plab/poly.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace plab {

/// Strictly increasing list of chart indices naming dz^{i1} ^ ... ^ dz^{ip}.
using IndexSet = std::vector<std::size_t>;

/// Differential p-form with rational-function coefficients on a chart.
/// Zero coefficients are never stored.
class DiffForm {
public:
    using TermMap = std::map<IndexSet, RatFunc>;

    DiffForm(ChartPtr chart, unsigned degree);
    static DiffForm function(ChartPtr chart, const RatFunc& f);
    static DiffForm differential(ChartPtr chart, std::size_t i);
    static DiffForm differential(ChartPtr chart, std::string_view name);

    const ChartPtr& chart() const { return chart_; }
    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFunc coefficient(const IndexSet& indices) const;

    /// Adds c * dz^{indices[0]} ^ ...; indices in any order, repeated ones give zero.
    void add_term(IndexSet indices, const RatFunc& c);

    DiffForm operator-() const;
    DiffForm& operator+=(const DiffForm& o);
    DiffForm& operator-=(const DiffForm& o);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    DiffForm scaled(const RatFunc& f) const;

    /// Same form on a chart containing every variable it mentions.
    DiffForm rechart(const ChartPtr& target) const;
    /// Pullback along the map target -> chart whose i-th component is images[i].
    DiffForm pullback(const ChartPtr& target, const std::vector<Poly>& images) const;

    /// Coefficient values at a point, as a map keyed like terms().
    std::map<IndexSet, Rational> at(std::span<const Rational> point) const;
    /// omega_point(v_1, ..., v_p).
    Rational evaluate(std::span<const Rational> point, const std::vector<std::vector<Rational>>& vectors) const;

    /// e.g. "dy - z*dx", "dx^dz"; wedge is written '^'.
    std::string str() const;

    friend bool operator==(const DiffForm& a, const DiffForm& b);

private:
    ChartPtr chart_;
    unsigned degree_;
    TermMap terms_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_derivative(const DiffForm& w);

/// System of 1-forms on a chart.
struct PfaffSystem {
    ChartPtr chart;
    std::vector<DiffForm> generators;

    std::size_t dimension() const { return chart->size(); }
    /// generators x chart-differentials
    Matrix<RatFunc> coefficient_matrix() const;
    std::string str() const;
};

/// Greedy maximal subset of 1-forms independent over Q(coords), in input order.
std::vector<DiffForm> independent_forms(const ChartPtr& chart, const std::vector<DiffForm>& forms);

} // namespace plab
