#pragma once

#include "plab/jet.hpp"
#include "plab/pde_system.hpp"
#include "plab/pfaffian.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plab {

/// Point transformation (x, u) -> (phi(x), phi_f(x, u)) of R^n x R^m with a
/// declared polynomial inverse. Construction checks both compositions are the
/// identity exactly and throws InverseCheckFailed otherwise.
class FiberedMap {
public:
    FiberedMap(std::vector<std::string> base_names, std::vector<std::string> fiber_names, std::vector<Poly> base,
               std::vector<Poly> fiber, std::vector<Poly> base_inverse, std::vector<Poly> fiber_inverse,
               std::string name = {});

    static FiberedMap identity(std::vector<std::string> base_names, std::vector<std::string> fiber_names);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& base_names() const { return base_names_; }
    const std::vector<std::string>& fiber_names() const { return fiber_names_; }
    const ChartPtr& base_chart() const { return base_chart_; }
    const ChartPtr& total_chart() const { return total_chart_; }
    std::size_t n() const { return base_names_.size(); }
    std::size_t m() const { return fiber_names_.size(); }

    /// Components on base_chart() (base) and total_chart() (fiber).
    const std::vector<Poly>& base() const { return base_; }
    const std::vector<Poly>& fiber() const { return fiber_; }
    const std::vector<Poly>& base_inverse() const { return base_inverse_; }
    const std::vector<Poly>& fiber_inverse() const { return fiber_inverse_; }

    FiberedMap inverse() const;

private:
    std::string name_;
    std::vector<std::string> base_names_;
    std::vector<std::string> fiber_names_;
    ChartPtr base_chart_;
    ChartPtr total_chart_;
    std::vector<Poly> base_;
    std::vector<Poly> fiber_;
    std::vector<Poly> base_inverse_;
    std::vector<Poly> fiber_inverse_;
};

/// Target jet coordinates (positional on `target`) as polynomials on the
/// source chart: X = phi(x), U_0 = phi_f, U_gamma = sum_j M_ij D_j U_{gamma - 1_i}
/// with M_ij = d(phi^{-1})^j / dX^i composed with phi.
std::vector<Poly> prolonged_action(const FiberedMap& phi, const JetChart& source, const JetChart& target);

/// x -> phi_f(psi(x), sigma(psi(x))) with psi the base inverse.
PolySection transport_section(const FiberedMap& phi, const PolySection& sigma);

enum class VerdictKind {
    AbsoluteEquivalent,
    MerihedricEquivalent,
    NotEquivalent,
    NecessaryPass,
    RuleEquivalent,
    Undetermined,
};

std::string to_string(VerdictKind kind);

struct EquivalenceVerdict {
    VerdictKind kind = VerdictKind::Undetermined;
    std::string operation;
    std::string rule;        ///< rule name for RuleEquivalent
    unsigned level = 0;      ///< prolongation level for MerihedricEquivalent
    bool sampled = false;    ///< true when only sampled points were checked
    std::size_t samples = 0;
    std::string detail;
    /// Witness point and the names of its coordinates (NotEquivalent).
    std::vector<std::string> witness_names;
    std::vector<Rational> witness_point;
    /// Dimension witness, e.g. unknown counts or ranks.
    std::optional<std::pair<std::size_t, std::size_t>> witness_dimensions;
    /// pfaff_rules only: rank and corank agree.
    std::optional<bool> first_order_equivalent;
};

/// p_k(phi) maps S onto S' exactly: each equation of S' pulled back by the
/// prolonged action vanishes modulo the solved form of S, and symmetrically
/// with the inverse. A direction whose source system has no solved form is
/// checked at 50 sampled locus points only.
EquivalenceVerdict verify_absolute(const PdeSystem& s, const PdeSystem& s_prime, const FiberedMap& phi,
                                   std::uint64_t seed = 0);

/// verify_absolute on the level-th prolongations.
EquivalenceVerdict verify_merihedric(const PdeSystem& s, const PdeSystem& s_prime, const FiberedMap& phi,
                                     unsigned level, std::uint64_t seed = 0);

/// Explicit first-order ODE systems (n = 1, every u^a_1 solved) are locally
/// equivalent at points where (1, f) does not vanish. Points hold (x, u).
EquivalenceVerdict ode_nonsingular_rule(const PdeSystem& v, const PdeSystem& w,
                                        const std::vector<Rational>& p = {}, const std::vector<Rational>& q = {});

EquivalenceVerdict pfaff_rules(const PfaffSystem& s, const PfaffSystem& s_prime);

enum class GateCondition { Differentiability, Dimension, Transitivity, Symbols, DeltaCohomology };
enum class GateStatus { Pass, Fail, Undetermined };
enum class GateOverall { PassNecessary, Fail, Undetermined };

std::string to_string(GateCondition c);
std::string to_string(GateStatus s);
std::string to_string(GateOverall o);

struct GateEntry {
    unsigned order;
    GateCondition condition;
    GateStatus status;
    std::string witness;
};

struct GateReport {
    unsigned q_max = 0;
    std::vector<GateEntry> entries;
    GateOverall overall = GateOverall::Undetermined;
    std::optional<GateEntry> failure;
    std::optional<unsigned> common_acyclic_order;
    std::vector<std::size_t> dimensions_a, dimensions_b; ///< generic dimension per order
    std::vector<std::size_t> symbols_a, symbols_b;       ///< dim g_{k+l} per order
    std::string summary;
    std::vector<std::string> warnings;
};

extern const char* const kNecessaryCaveat;

/// Five necessary conditions at orders 0..q_max. Supplied points (full
/// order-k coordinates) are used at order 0; otherwise points are sampled.
GateReport gate(const PdeSystem& a, const PdeSystem& b, unsigned q_max,
                const std::vector<std::vector<Rational>>& points_a = {},
                const std::vector<std::vector<Rational>>& points_b = {}, std::uint64_t seed = 0);

struct MembershipReport {
    GateStatus status = GateStatus::Undetermined;
    std::size_t samples = 0;
    std::size_t passed = 0;
    std::vector<Rational> counterexample; ///< coordinates of the sampled element of gamma
    std::string detail;
};

/// Samples elements A of gamma (groupoid charts with n = m) and checks that
/// j(X) o A o j(X^{-1}) satisfies gamma_prime.
MembershipReport conjugation_membership(const std::vector<Poly>& x, const std::vector<Poly>& x_inverse,
                                        const PdeSystem& gamma, const PdeSystem& gamma_prime,
                                        std::size_t samples = 10, std::uint64_t seed = 0);

} // namespace plab
