#pragma once

#include "plab/jet.hpp"
#include "plab/matrix.hpp"
#include "plab/random.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plab {

/// Leading jet coordinate index -> expression in the remaining coordinates.
using SolvedForm = std::map<std::size_t, Poly>;

/// Polynomial locus {F = 0} in a jet chart.
///
/// An explicit (solved) form is inferred when every equation can be solved
/// for a jet coordinate appearing linearly with a constant coefficient.
class PdeSystem {
public:
    /// Zero equations are dropped; equations are re-expressed on the chart.
    PdeSystem(JetChart chart, std::vector<Poly> equations, std::string name = {});
    /// Equations lead - expr; throws UsageError if a leader occurs in an expression.
    static PdeSystem from_solved(JetChart chart, const SolvedForm& solved, std::string name = {});

    const JetChart& chart() const { return chart_; }
    const std::vector<Poly>& equations() const { return equations_; }
    const std::string& name() const { return name_; }
    unsigned order() const { return chart_.order(); }
    const std::optional<SolvedForm>& explicit_form() const { return solved_; }
    /// True when elimination reached a nonzero constant.
    bool inconsistent() const { return inconsistent_; }

    /// Chart indices not solved for; requires an explicit form.
    std::vector<std::size_t> parametric_coordinates() const;
    /// Chart on the parametric coordinates, in chart order.
    ChartPtr parametric_chart() const;
    /// Substitutes the solved form; requires an explicit form.
    Poly reduce(const Poly& f) const;
    /// Full coordinates from parametric values; requires an explicit form.
    std::vector<Rational> complete_point(std::span<const Rational> parametric) const;

    bool contains(std::span<const Rational> point) const;
    Matrix<RatFunc> jacobian() const;
    std::string str() const;

private:
    void triangularize();

    JetChart chart_;
    std::vector<Poly> equations_;
    std::string name_;
    std::optional<SolvedForm> solved_;
    bool inconsistent_ = false;
};

PdeSystem prolong(const PdeSystem& s, unsigned levels);

/// Jet dimension minus the generic rank of the Jacobian.
/// Throws EmptyLocus if a nonzero constant lies in the rational span of the equations.
std::size_t generic_dimension(const PdeSystem& s);

struct RegularityVerdict {
    bool regular = true;
    std::size_t generic_rank = 0;
    std::size_t point_rank = 0;
    std::vector<Rational> singular_point; ///< empty when regular
};

/// Throws NotOnLocus for a point that does not satisfy the equations.
RegularityVerdict regularity_check(const PdeSystem& s, const std::vector<std::vector<Rational>>& points);

bool is_solution(const PdeSystem& s, const PolySection& sigma);

/// Order-(k+1) locus tangent to first order to an explicit system, built from
/// the chain rule on its parametrization.
PdeSystem tangency_oracle(const PdeSystem& s);

/// A rational point on the locus: parametric values drawn at random when an
/// explicit form exists, otherwise a linear solve in a pivot set chosen at a
/// random point. nullopt when no point could be constructed.
std::optional<std::vector<Rational>> sample_locus_point(const PdeSystem& s, Rng& rng);

} // namespace plab
