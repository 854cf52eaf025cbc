#pragma once

#include "plab/errors.hpp"
#include "plab/jet.hpp"
#include "plab/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace plab {

class SourceTargetMismatch : public Error {
public:
    using Error::Error;
};

/// Element of Pi_k(R^n): an invertible k-jet of a local map, stored as the
/// Taylor coefficients c^i_beta (1 <= |beta| <= k) at the source, so that
/// y^i = target^i + sum_beta c^i_beta (x - source)^beta.
class JetOfMap {
public:
    /// `coefficients[i]` lists component i's coefficients in the order of
    /// enumerate_multi_indices(n, k) with the zero index dropped.
    /// Throws SingularPoint if the linear part is not invertible.
    JetOfMap(unsigned order, std::vector<Rational> source, std::vector<Rational> target,
             std::vector<std::vector<Rational>> coefficients);

    static JetOfMap identity(std::vector<Rational> point, unsigned order);

    std::size_t n() const { return source_.size(); }
    unsigned order() const { return order_; }
    const std::vector<Rational>& source() const { return source_; }
    const std::vector<Rational>& target() const { return target_; }
    const std::vector<std::vector<Rational>>& coefficients() const { return coefficients_; }
    const Rational& coefficient(std::size_t i, const MultiIndex& beta) const;
    Matrix<Rational> linear_part() const;

    std::string str() const;

    friend bool operator==(const JetOfMap&, const JetOfMap&) = default;

private:
    unsigned order_;
    std::vector<Rational> source_;
    std::vector<Rational> target_;
    std::vector<std::vector<Rational>> coefficients_;
};

/// B o A, truncated to the common order.
JetOfMap jet_compose(const JetOfMap& b, const JetOfMap& a);
JetOfMap jet_invert(const JetOfMap& a);

/// k-jet at `point` of a polynomial self-map of R^n (components on an n-variable chart).
JetOfMap jet_of_polynomial_map(const std::vector<Poly>& map, std::span<const Rational> point, unsigned order);

/// Composition f o g of polynomial maps (g's components substituted into f).
std::vector<Poly> compose_maps(const std::vector<Poly>& f, const std::vector<Poly>& g);

/// j_k(X) o A o j_k(X^{-1}), based at X(source(A)). The polynomial inverse is
/// checked against X to order k at source(A) and target(A) first; a failed
/// check throws InverseCheckFailed.
JetOfMap conjugate_jet(const std::vector<Poly>& x, const std::vector<Poly>& x_inverse, const JetOfMap& a);

/// Jet coordinates (x, u^a, u^a_alpha = alpha! c^a_alpha) on a chart with m == n.
std::vector<Rational> jet_coordinates(const JetChart& chart, const JetOfMap& jet);
/// Inverse of jet_coordinates; throws SingularPoint when the linear part is singular.
JetOfMap jet_from_coordinates(const JetChart& chart, std::span<const Rational> coords);

} // namespace plab
