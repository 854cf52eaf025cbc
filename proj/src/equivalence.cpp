#include "plab/equivalence.hpp"

#include "plab/errors.hpp"
#include "plab/jet_groupoid.hpp"
#include "plab/spencer.hpp"

#include <map>
#include <sstream>

namespace plab {

const char* const kNecessaryCaveat =
    "necessary conditions hold; under analyticity and the transitivity hypotheses, Cartan's theorem applies; "
    "this is not a sufficiency claim in the C^infinity category";

namespace {

Poly on_chart(const Poly& p, const ChartPtr& c)
{
    return p.chart() ? p.rechart(c) : Poly::constant(c, p.constant_term());
}

std::vector<Poly> on_chart(const std::vector<Poly>& ps, const ChartPtr& c)
{
    std::vector<Poly> out;
    for (const auto& p : ps)
        out.push_back(on_chart(p, c));
    return out;
}

bool is_identity(const std::vector<Poly>& composed, const ChartPtr& c)
{
    for (std::size_t i = 0; i < composed.size(); ++i)
        if (!(on_chart(composed[i], c) == Poly::variable(c, i)))
            return false;
    return true;
}

std::vector<Poly> substitute_all(const std::vector<Poly>& f, const std::vector<Poly>& images)
{
    std::vector<Poly> out;
    for (const auto& p : f)
        out.push_back(p.substitute(images));
    return out;
}

std::string format_point(const std::vector<std::string>& names, const std::vector<Rational>& p)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? ", " : "") << names[i] << "=" << p[i];
    return os.str();
}

std::string shape(const JetChart& c)
{
    return "(n=" + std::to_string(c.n()) + ", m=" + std::to_string(c.m()) + ", k=" + std::to_string(c.order()) + ")";
}

struct DirectionResult {
    enum class Status { Exact, Sampled, Violated, Undetermined } status = Status::Undetermined;
    std::size_t samples = 0;
    std::vector<Rational> witness;
};

// Does the prolonged action of phi carry the locus of `from` into the locus of `to`?
DirectionResult check_direction(const PdeSystem& from, const PdeSystem& to, const FiberedMap& phi, Rng& rng)
{
    DirectionResult r;
    const auto images = prolonged_action(phi, from.chart(), to.chart());
    const auto pulled = substitute_all(to.equations(), images);
    auto violates = [&](const std::vector<Rational>& p) {
        for (const auto& f : pulled)
            if (!f.eval(p).is_zero())
                return true;
        return false;
    };

    if (from.explicit_form()) {
        bool exact = true;
        for (const auto& f : pulled)
            exact = exact && from.reduce(f).is_zero();
        if (exact) {
            r.status = DirectionResult::Status::Exact;
            return r;
        }
        const std::size_t np = from.parametric_coordinates().size();
        for (int attempt = 0; attempt < 50; ++attempt) {
            std::vector<Rational> params(np);
            if (attempt > 0)
                for (auto& v : params)
                    v = rng.small_rational();
            auto p = from.complete_point(params);
            if (violates(p)) {
                r.status = DirectionResult::Status::Violated;
                r.witness = std::move(p);
                return r;
            }
        }
        return r;
    }

    for (int attempt = 0; attempt < 50; ++attempt) {
        auto p = sample_locus_point(from, rng);
        if (!p)
            continue;
        ++r.samples;
        if (violates(*p)) {
            r.status = DirectionResult::Status::Violated;
            r.witness = std::move(*p);
            return r;
        }
    }
    if (r.samples > 0)
        r.status = DirectionResult::Status::Sampled;
    return r;
}

} // namespace

FiberedMap::FiberedMap(std::vector<std::string> base_names, std::vector<std::string> fiber_names,
                       std::vector<Poly> base, std::vector<Poly> fiber, std::vector<Poly> base_inverse,
                       std::vector<Poly> fiber_inverse, std::string name)
    : name_(std::move(name)), base_names_(std::move(base_names)), fiber_names_(std::move(fiber_names))
{
    if (base_names_.empty() || fiber_names_.empty())
        throw UsageError("fibered maps need base and fiber coordinates");
    if (base.size() != n() || base_inverse.size() != n() || fiber.size() != m() || fiber_inverse.size() != m())
        throw ChartMismatch("map components do not match the coordinate counts");
    base_chart_ = make_chart(base_names_);
    std::vector<std::string> all = base_names_;
    all.insert(all.end(), fiber_names_.begin(), fiber_names_.end());
    total_chart_ = make_chart(all);
    base_ = on_chart(base, base_chart_);
    base_inverse_ = on_chart(base_inverse, base_chart_);
    fiber_ = on_chart(fiber, total_chart_);
    fiber_inverse_ = on_chart(fiber_inverse, total_chart_);

    if (!is_identity(substitute_all(base_inverse_, base_), base_chart_) ||
        !is_identity(substitute_all(base_, base_inverse_), base_chart_))
        throw InverseCheckFailed("declared base inverse does not invert the base map");
    auto total = [&](const std::vector<Poly>& b, const std::vector<Poly>& f) {
        auto v = on_chart(b, total_chart_);
        v.insert(v.end(), f.begin(), f.end());
        return v;
    };
    const auto forward = total(base_, fiber_);
    const auto backward = total(base_inverse_, fiber_inverse_);
    if (!is_identity(substitute_all(backward, forward), total_chart_) ||
        !is_identity(substitute_all(forward, backward), total_chart_))
        throw InverseCheckFailed("declared inverse does not invert the map");
}

FiberedMap FiberedMap::identity(std::vector<std::string> base_names, std::vector<std::string> fiber_names)
{
    auto b = make_chart(base_names);
    std::vector<std::string> all = base_names;
    all.insert(all.end(), fiber_names.begin(), fiber_names.end());
    auto t = make_chart(all);
    auto bv = chart_variables(b);
    std::vector<Poly> fv;
    for (std::size_t a = 0; a < fiber_names.size(); ++a)
        fv.push_back(Poly::variable(t, base_names.size() + a));
    return FiberedMap(std::move(base_names), std::move(fiber_names), bv, fv, bv, fv, "identity");
}

FiberedMap FiberedMap::inverse() const
{
    return FiberedMap(base_names_, fiber_names_, base_inverse_, fiber_inverse_, base_, fiber_,
                      name_.empty() ? std::string() : name_ + "^-1");
}

std::vector<Poly> prolonged_action(const FiberedMap& phi, const JetChart& source, const JetChart& target)
{
    if (source.n() != phi.n() || source.m() != phi.m() || target.n() != source.n() || target.m() != source.m() ||
        target.order() != source.order())
        throw ChartMismatch("prolonged action needs charts of the map's shape and equal order");
    const std::size_t n = source.n();
    const ChartPtr& sc = source.chart();
    std::vector<Poly> images(target.dimension());
    for (std::size_t i = 0; i < n; ++i)
        images[i] = on_chart(phi.base()[i], sc);

    // M_ij = (d psi^j / dX^i)(phi(x)), on the base chart.
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = phi.base_inverse()[j].partial(i).substitute(phi.base());

    std::map<std::vector<unsigned>, Poly> u;
    for (std::size_t a = 0; a < source.m(); ++a) {
        for (const auto& gamma : enumerate_multi_indices(n, source.order())) {
            const JetChart here = source.with_order(gamma.order());
            Poly value;
            if (gamma.order() == 0) {
                value = on_chart(phi.fiber()[a], here.chart());
            } else {
                const std::size_t i = gamma.first_nonzero();
                const JetChart below = source.with_order(gamma.order() - 1);
                const Poly& parent = u.at(gamma.lowered(i)->exponents());
                value = Poly(here.chart());
                for (std::size_t j = 0; j < n; ++j) {
                    if (m[i][j].is_zero())
                        continue;
                    value += on_chart(m[i][j], here.chart()) * total_derivative(below, parent, j);
                }
            }
            images[target.jet_index(a, gamma)] = on_chart(value, sc);
            u[gamma.exponents()] = std::move(value);
        }
        u.clear();
    }
    return images;
}

PolySection transport_section(const FiberedMap& phi, const PolySection& sigma)
{
    if (sigma.components.size() != phi.m())
        throw ChartMismatch("section has the wrong number of components");
    const ChartPtr& b = phi.base_chart();
    const auto& psi = phi.base_inverse();
    std::vector<Poly> total = psi;
    for (const auto& c : sigma.components)
        total.push_back(on_chart(c, b).substitute(psi));
    PolySection out{b, {}};
    for (const auto& f : phi.fiber())
        out.components.push_back(on_chart(f.substitute(total), b));
    return out;
}

std::string to_string(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::AbsoluteEquivalent:
        return "ABSOLUTE_EQUIVALENT";
    case VerdictKind::MerihedricEquivalent:
        return "MERIHEDRIC_EQUIVALENT";
    case VerdictKind::NotEquivalent:
        return "NOT_EQUIVALENT";
    case VerdictKind::NecessaryPass:
        return "NECESSARY_PASS";
    case VerdictKind::RuleEquivalent:
        return "RULE_EQUIVALENT";
    case VerdictKind::Undetermined:
        return "UNDETERMINED";
    }
    return "UNKNOWN";
}

EquivalenceVerdict verify_absolute(const PdeSystem& s, const PdeSystem& s_prime, const FiberedMap& phi,
                                   std::uint64_t seed)
{
    EquivalenceVerdict v;
    v.operation = "verify_absolute";
    const JetChart& c = s.chart();
    const JetChart& cp = s_prime.chart();
    if (c.n() != cp.n() || c.m() != cp.m() || c.order() != cp.order())
        throw ChartMismatch("systems have different shapes " + shape(c) + " and " + shape(cp));

    Rng rng(seed);
    const auto forward = check_direction(s, s_prime, phi, rng);
    using St = DirectionResult::Status;
    if (forward.status == St::Violated) {
        v.kind = VerdictKind::NotEquivalent;
        v.witness_names = c.chart()->names();
        v.witness_point = forward.witness;
        v.detail = "point of " + (s.name().empty() ? std::string("S") : s.name()) +
                   " whose image violates the target system";
        return v;
    }
    const auto backward = check_direction(s_prime, s, phi.inverse(), rng);
    if (backward.status == St::Violated) {
        v.kind = VerdictKind::NotEquivalent;
        v.witness_names = cp.chart()->names();
        v.witness_point = backward.witness;
        v.detail = "point of " + (s_prime.name().empty() ? std::string("S'") : s_prime.name()) +
                   " whose image under the inverse violates the source system";
        return v;
    }
    if (forward.status == St::Exact && backward.status == St::Exact) {
        v.kind = VerdictKind::AbsoluteEquivalent;
        v.detail = "prolonged map carries each locus onto the other exactly";
        return v;
    }
    v.samples = forward.samples + backward.samples;
    if (forward.status == St::Undetermined || backward.status == St::Undetermined) {
        v.kind = VerdictKind::Undetermined;
        v.detail = "no exact check available and no locus points could be sampled";
        return v;
    }
    v.kind = VerdictKind::NecessaryPass;
    v.sampled = true;
    v.detail = "falsify-only check passed at " + std::to_string(v.samples) + " sampled locus points";
    return v;
}

EquivalenceVerdict verify_merihedric(const PdeSystem& s, const PdeSystem& s_prime, const FiberedMap& phi,
                                     unsigned level, std::uint64_t seed)
{
    if (level == 0)
        return verify_absolute(s, s_prime, phi, seed);
    EquivalenceVerdict v = verify_absolute(prolong(s, level), prolong(s_prime, level), phi, seed);
    v.operation = "verify_merihedric";
    v.level = level;
    if (v.kind == VerdictKind::AbsoluteEquivalent) {
        v.kind = VerdictKind::MerihedricEquivalent;
        v.detail = "prolongations of level " + std::to_string(level) + " are absolutely equivalent";
    }
    return v;
}

EquivalenceVerdict ode_nonsingular_rule(const PdeSystem& v, const PdeSystem& w, const std::vector<Rational>& p,
                                        const std::vector<Rational>& q)
{
    EquivalenceVerdict out;
    out.operation = "ode_nonsingular_rule";
    for (const auto* s : {&v, &w}) {
        const JetChart& c = s->chart();
        if (c.n() != 1 || c.order() != 1 || !s->explicit_form() || s->explicit_form()->size() != c.m())
            throw UnsupportedForm("rule applies to explicit first-order ODE systems u' = f(x, u)");
        for (const auto& [lead, expr] : *s->explicit_form())
            if (c.coordinate(lead).alpha.order() != 1)
                throw UnsupportedForm("every first derivative must be solved for");
    }
    if (v.chart().m() != w.chart().m()) {
        out.kind = VerdictKind::NotEquivalent;
        out.witness_dimensions = std::make_pair(v.chart().m(), w.chart().m());
        out.detail = "numbers of unknowns differ";
        return out;
    }
    for (const auto* pt : {&p, &q})
        if (!pt->empty() && pt->size() != 1 + v.chart().m())
            throw IncompletePoint("ODE points give x and every unknown");
    // The field (1, f) never vanishes in graph form, so every point is non-singular.
    out.kind = VerdictKind::RuleEquivalent;
    out.rule = "ode-nonsingular";
    out.detail = "both direction fields (1, f) are non-vanishing; existence of a local equivalence only";
    return out;
}

EquivalenceVerdict pfaff_rules(const PfaffSystem& s, const PfaffSystem& s_prime)
{
    EquivalenceVerdict v;
    v.operation = "pfaff_rules";
    const RankCorank a = rank_corank(s);
    const RankCorank b = rank_corank(s_prime);
    const bool same = a == b;
    v.first_order_equivalent = same;
    const bool int_a = frobenius_test(s);
    const bool int_b = frobenius_test(s_prime);
    if (!same) {
        v.kind = VerdictKind::NotEquivalent;
        const bool rank_differs = a.rank != b.rank;
        v.witness_dimensions = rank_differs ? std::make_pair(a.rank, b.rank) : std::make_pair(a.corank, b.corank);
        v.detail = rank_differs ? "ranks differ" : "coranks differ";
        return v;
    }
    if (int_a && int_b) {
        v.kind = VerdictKind::RuleEquivalent;
        v.rule = "integrable";
        v.detail = "both systems integrable with equal rank and corank";
        return v;
    }
    const auto fa = derived_flag(s);
    const auto fb = derived_flag(s_prime);
    if (fa.ranks != fb.ranks) {
        v.kind = VerdictKind::NotEquivalent;
        std::size_t i = 0;
        while (i < fa.ranks.size() && i < fb.ranks.size() && fa.ranks[i] == fb.ranks[i])
            ++i;
        const std::size_t ra = i < fa.ranks.size() ? fa.ranks[i] : fa.ranks.back();
        const std::size_t rb = i < fb.ranks.size() ? fb.ranks[i] : fb.ranks.back();
        v.witness_dimensions = std::make_pair(ra, rb);
        v.detail = "derived systems of step " + std::to_string(i) + " have different ranks";
        return v;
    }
    v.kind = VerdictKind::NecessaryPass;
    v.detail = "equal rank, corank and derived-flag ranks; no rule decides";
    return v;
}

std::string to_string(GateCondition c)
{
    switch (c) {
    case GateCondition::Differentiability:
        return "DIFFERENTIABILITY";
    case GateCondition::Dimension:
        return "DIMENSION";
    case GateCondition::Transitivity:
        return "TRANSITIVITY";
    case GateCondition::Symbols:
        return "SYMBOLS";
    case GateCondition::DeltaCohomology:
        return "DELTA_COHOMOLOGY";
    }
    return "UNKNOWN";
}

std::string to_string(GateStatus s)
{
    switch (s) {
    case GateStatus::Pass:
        return "PASS";
    case GateStatus::Fail:
        return "FAIL";
    case GateStatus::Undetermined:
        return "UNDETERMINED";
    }
    return "UNKNOWN";
}

std::string to_string(GateOverall o)
{
    switch (o) {
    case GateOverall::PassNecessary:
        return "PASS_NECESSARY";
    case GateOverall::Fail:
        return "FAIL";
    case GateOverall::Undetermined:
        return "UNDETERMINED";
    }
    return "UNKNOWN";
}

namespace {

std::vector<std::vector<Rational>> gather_points(const PdeSystem& s, const std::vector<std::vector<Rational>>& given,
                                                 Rng& rng)
{
    if (!given.empty())
        return given;
    std::vector<std::vector<Rational>> out;
    for (int attempt = 0; attempt < 6 && out.size() < 3; ++attempt)
        if (auto p = sample_locus_point(s, rng))
            out.push_back(std::move(*p));
    return out;
}

// Rank of the projection to (x, u) restricted to the tangent space at p.
std::size_t projection_rank(const PdeSystem& s, const std::vector<Rational>& p)
{
    const JetChart& c = s.chart();
    const std::size_t base = c.n() + c.m();
    std::vector<Vector<Rational>> tangent;
    if (s.equations().empty()) {
        return base;
    }
    tangent = kernel_basis(evaluate(s.jacobian(), p));
    if (tangent.empty())
        return 0;
    Matrix<Rational> proj(tangent.size(), base);
    for (std::size_t r = 0; r < tangent.size(); ++r)
        for (std::size_t j = 0; j < base; ++j)
            proj(r, j) = tangent[r][j];
    return rank(proj);
}

} // namespace

GateReport gate(const PdeSystem& a, const PdeSystem& b, unsigned q_max,
                const std::vector<std::vector<Rational>>& points_a,
                const std::vector<std::vector<Rational>>& points_b, std::uint64_t seed)
{
    GateReport report;
    report.q_max = q_max;
    const JetChart& ca = a.chart();
    const JetChart& cb = b.chart();

    auto fail = [&](unsigned order, GateCondition cond, std::string witness) {
        GateEntry e{order, cond, GateStatus::Fail, std::move(witness)};
        report.entries.push_back(e);
        report.failure = e;
        report.overall = GateOverall::Fail;
        report.summary = "FAIL(" + to_string(cond) + ", order " + std::to_string(order) + "): " + e.witness;
        return report;
    };

    if (ca.n() != cb.n() || ca.m() != cb.m() || ca.order() != cb.order())
        return fail(0, GateCondition::Dimension, "shapes " + shape(ca) + " vs " + shape(cb));

    const unsigned k = ca.order();
    Rng rng(seed);
    bool undetermined = false;

    for (unsigned l = 0; l <= q_max; ++l) {
        const PdeSystem pa = prolong(a, l);
        const PdeSystem pb = prolong(b, l);

        // 1. Prolongations are regular loci.
        std::size_t da = 0, db = 0;
        try {
            da = generic_dimension(pa);
        } catch (const EmptyLocus& e) {
            return fail(l, GateCondition::Differentiability, std::string("first system: ") + e.what());
        }
        try {
            db = generic_dimension(pb);
        } catch (const EmptyLocus& e) {
            return fail(l, GateCondition::Differentiability, std::string("second system: ") + e.what());
        }
        const auto sa = gather_points(pa, l == 0 ? points_a : std::vector<std::vector<Rational>>{}, rng);
        const auto sb = gather_points(pb, l == 0 ? points_b : std::vector<std::vector<Rational>>{}, rng);
        {
            const auto ra = regularity_check(pa, sa);
            if (!ra.regular)
                return fail(l, GateCondition::Differentiability,
                            "first system singular at " + format_point(pa.chart().chart()->names(), ra.singular_point) +
                                " (rank " + std::to_string(ra.point_rank) + " vs generic " +
                                std::to_string(ra.generic_rank) + ")");
            const auto rb = regularity_check(pb, sb);
            if (!rb.regular)
                return fail(l, GateCondition::Differentiability,
                            "second system singular at " +
                                format_point(pb.chart().chart()->names(), rb.singular_point) + " (rank " +
                                std::to_string(rb.point_rank) + " vs generic " + std::to_string(rb.generic_rank) + ")");
            if (sa.empty() || sb.empty()) {
                undetermined = true;
                report.entries.push_back({l, GateCondition::Differentiability, GateStatus::Undetermined,
                                          "no locus points could be sampled"});
            } else {
                report.entries.push_back({l, GateCondition::Differentiability, GateStatus::Pass,
                                          "regular at " + std::to_string(sa.size()) + "+" +
                                              std::to_string(sb.size()) + " points"});
            }
        }

        // 2. Equal dimensions.
        report.dimensions_a.push_back(da);
        report.dimensions_b.push_back(db);
        const std::string dims = std::to_string(da) + " vs " + std::to_string(db);
        if (da != db)
            return fail(l, GateCondition::Dimension, "dims " + dims);
        report.entries.push_back({l, GateCondition::Dimension, GateStatus::Pass, "dims " + dims});

        // 3. Surrogate for transitivity: the locus projects onto (x, u).
        {
            const std::size_t target = ca.n() + ca.m();
            bool all_full = !sa.empty() && !sb.empty();
            std::size_t worst = target;
            for (const auto* pts : {&sa, &sb})
                for (std::size_t i = 0; i < pts->size(); ++i) {
                    const std::size_t r = projection_rank(pts == &sa ? pa : pb, (*pts)[i]);
                    worst = std::min(worst, r);
                    all_full = all_full && r == target;
                }
            const std::string w = "projection rank " + std::to_string(worst) + " of " + std::to_string(target);
            if (all_full) {
                report.entries.push_back({l, GateCondition::Transitivity, GateStatus::Pass, w});
            } else {
                undetermined = true;
                report.entries.push_back({l, GateCondition::Transitivity, GateStatus::Undetermined, w});
            }
        }

        // 4. Symbols of equal dimension.
        const std::size_t ga = symbol(a, k + l).dimension();
        const std::size_t gb = symbol(b, k + l).dimension();
        report.symbols_a.push_back(ga);
        report.symbols_b.push_back(gb);
        const std::string gs = "dim g_" + std::to_string(k + l) + " " + std::to_string(ga) + " vs " + std::to_string(gb);
        if (ga != gb)
            return fail(l, GateCondition::Symbols, gs);
        report.entries.push_back({l, GateCondition::Symbols, GateStatus::Pass, gs});

        // 5. Equidimensional delta-cohomology at this order.
        const auto ha = spencer_cohomology(a, k + l, k + l);
        const auto hb = spencer_cohomology(b, k + l, k + l);
        std::ostringstream hw;
        hw << "H^{" << k + l << ",p}";
        bool equal = true;
        for (unsigned p = 0; p <= ca.n(); ++p) {
            hw << (p ? "," : " ") << ha.h(k + l, p) << "/" << hb.h(k + l, p);
            equal = equal && ha.h(k + l, p) == hb.h(k + l, p);
        }
        if (!equal)
            return fail(l, GateCondition::DeltaCohomology, hw.str());
        report.entries.push_back({l, GateCondition::DeltaCohomology, GateStatus::Pass, hw.str()});
    }

    // Common 2-acyclicity order over the whole range.
    const auto ra = spencer_cohomology(a, k, k + q_max);
    const auto rb = spencer_cohomology(b, k, k + q_max);
    if (ra.first_acyclic && rb.first_acyclic) {
        report.common_acyclic_order = std::max(*ra.first_acyclic, *rb.first_acyclic);
    } else {
        undetermined = true;
        report.warnings.push_back("no common 2-acyclicity order up to " + std::to_string(k + q_max));
    }

    if (undetermined) {
        report.overall = GateOverall::Undetermined;
        report.summary = "UNDETERMINED: some conditions could not be decided";
    } else {
        report.overall = GateOverall::PassNecessary;
        report.summary = std::string("PASS_NECESSARY: ") + kNecessaryCaveat;
    }
    return report;
}

MembershipReport conjugation_membership(const std::vector<Poly>& x, const std::vector<Poly>& x_inverse,
                                        const PdeSystem& gamma, const PdeSystem& gamma_prime, std::size_t samples,
                                        std::uint64_t seed)
{
    MembershipReport r;
    const JetChart& c = gamma.chart();
    if (c.n() != c.m() || !(c == gamma_prime.chart()))
        throw ChartMismatch("groupoid systems need one chart with as many target as source coordinates");
    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < samples * 10 && r.samples < samples; ++attempt) {
        auto p = sample_locus_point(gamma, rng);
        if (!p)
            continue;
        std::optional<JetOfMap> a;
        try {
            a = jet_from_coordinates(c, *p);
        } catch (const SingularPoint&) {
            continue;
        }
        ++r.samples;
        const JetOfMap conj = conjugate_jet(x, x_inverse, *a);
        if (gamma_prime.contains(jet_coordinates(c, conj))) {
            ++r.passed;
        } else if (r.counterexample.empty()) {
            r.counterexample = *p;
        }
    }
    if (r.samples == 0) {
        r.status = GateStatus::Undetermined;
        r.detail = "no invertible elements of the first groupoid could be sampled";
    } else if (r.passed == r.samples) {
        r.status = GateStatus::Pass;
        r.detail = "all " + std::to_string(r.samples) + " sampled conjugates lie in the second groupoid";
    } else {
        r.status = GateStatus::Fail;
        r.detail = std::to_string(r.samples - r.passed) + " of " + std::to_string(r.samples) +
                   " sampled conjugates leave the second groupoid";
    }
    return r;
}

} // namespace plab
