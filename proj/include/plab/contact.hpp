#pragma once

#include "plab/diff_form.hpp"
#include "plab/jet.hpp"
#include "plab/pde_system.hpp"

#include <vector>

namespace plab {

struct ContactGenerator {
    std::size_t component;
    MultiIndex alpha;
    DiffForm form;
};

/// theta^a_alpha = du^a_alpha - sum_i u^a_{alpha+1_i} dx^i, |alpha| <= k-1,
/// ordered like the chart's jet coordinates.
struct ContactSystem {
    JetChart chart;
    std::vector<ContactGenerator> generators;

    PfaffSystem as_pfaff() const;
};

/// theta^a_alpha on a chart of order at least |alpha| + 1.
DiffForm contact_form(const JetChart& chart, std::size_t a, const MultiIndex& alpha);
/// Empty for order 0.
ContactSystem contact_generators(const JetChart& chart);

/// Derivation with L_i(f dg) = (D_i f) dg + f d(D_i g); result on the raised chart.
DiffForm total_lie_derivative(const JetChart& chart, const DiffForm& w, std::size_t i);

/// Contact generators with the solved coordinates substituted, on the chart of
/// parametric coordinates, reduced to an independent set.
/// Throws UnsupportedForm for systems without an explicit form.
PfaffSystem restrict_contact(const PdeSystem& s);

/// `tau` gives every chart coordinate (base ones included) as a polynomial
/// in the base variables; true iff every contact generator pulls back to zero.
bool is_holonomic_integral(const JetChart& chart, const std::vector<Poly>& tau);

} // namespace plab
