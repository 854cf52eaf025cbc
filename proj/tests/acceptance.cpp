// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "golden_cases.hpp"

#include "plab/contact.hpp"
#include "plab/equivalence.hpp"
#include "plab/errors.hpp"
#include "plab/jet_groupoid.hpp"
#include "plab/pfaffian.hpp"
#include "plab/random.hpp"
#include "plab/spencer.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

using namespace plab;

namespace {

const std::filesystem::path kTests = PLAB_TESTS_DIR;

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool condition, const std::string& what)
    {
        if (!condition && ok) {
            ok = false;
            note = what;
        }
    }
};

std::vector<std::string> names(const char* prefix, std::size_t count, const std::vector<std::string>& fixed)
{
    std::vector<std::string> out(fixed.begin(), fixed.begin() + std::min(count, fixed.size()));
    for (std::size_t i = out.size(); i < count; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

Poly random_poly(const ChartPtr& chart, std::size_t n, unsigned degree, Rng& rng)
{
    Poly p(chart);
    for (const auto& e : enumerate_multi_indices(n, degree))
        if (rng.uniform(0, 2) == 0)
            p += Poly::monomial(chart, e.exponents(), rng.small_rational());
    return p;
}

// d^alpha f by repeated partial differentiation.
Poly differentiate(Poly f, const MultiIndex& alpha)
{
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (unsigned r = 0; r < alpha[i]; ++r)
            f = f.partial(i);
    return f;
}

// Chart coordinate images of j_k sigma, built by brute-force differentiation.
std::vector<Poly> brute_jet(const JetChart& c, const std::vector<Poly>& sigma)
{
    std::vector<Poly> out;
    for (std::size_t idx = 0; idx < c.dimension(); ++idx) {
        const auto& co = c.coordinate(idx);
        out.push_back(co.is_base ? Poly::variable(c.base_chart(), co.component)
                                 : differentiate(sigma[co.component], co.alpha));
    }
    return out;
}

Outcome holonomy()
{
    Outcome o;
    Rng rng(101);
    int holonomic = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + rng.uniform(0, 1), m = 1 + rng.uniform(0, 1);
        const unsigned k = 1 + static_cast<unsigned>(rng.uniform(0, 2));
        JetChart c(names("x", n, {"x", "y"}), names("u", m, {"u", "v"}), k);
        const ChartPtr& bc = c.base_chart();
        std::vector<Poly> tau(c.dimension());
        for (std::size_t idx = 0; idx < c.dimension(); ++idx) {
            const auto& co = c.coordinate(idx);
            tau[idx] = co.is_base ? Poly::variable(bc, co.component) : random_poly(bc, n, 3, rng);
        }
        // Half the assignments are made holonomic, the rest perturbed at one coordinate.
        std::vector<Poly> sigma;
        for (std::size_t a = 0; a < m; ++a)
            sigma.push_back(tau[c.jet_index(a, MultiIndex::zero(n))]);
        if (trial % 2 == 0) {
            tau = brute_jet(c, sigma);
            if (trial % 4 == 0) {
                const std::size_t idx = c.n() + rng.uniform(0, c.dimension() - c.n() - 1);
                tau[idx] += random_poly(bc, n, 2, rng);
            }
        }
        for (std::size_t a = 0; a < m; ++a)
            sigma[a] = tau[c.jet_index(a, MultiIndex::zero(n))];
        const bool expected = tau == brute_jet(c, sigma);
        holonomic += expected;
        o.require(is_holonomic_integral(c, tau) == expected, "disagreement at trial " + std::to_string(trial));
    }
    o.require(holonomic >= 30 && holonomic <= 90, "unbalanced sample: " + std::to_string(holonomic) + " holonomic");
    o.note = o.ok ? "120 assignments, " + std::to_string(holonomic) + " holonomic" : o.note;
    return o;
}

Outcome lie_recursion()
{
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 2; ++n)
        for (std::size_t m = 1; m <= 2; ++m)
            for (unsigned k = 1; k <= 3; ++k) {
                JetChart c(names("x", n, {"x", "y"}), names("u", m, {"u", "v"}), k);
                JetChart up = c.raised();
                const auto low = contact_generators(c);
                const auto high = contact_generators(up);
                std::set<std::string> all_high, fresh, images;
                for (const auto& g : high.generators) {
                    all_high.insert(g.form.str());
                    if (g.alpha.order() == k)
                        fresh.insert(g.form.str());
                }
                for (const auto& g : low.generators)
                    for (std::size_t i = 0; i < n; ++i) {
                        const DiffForm l = total_lie_derivative(c, g.form, i);
                        o.require(all_high.count(l.str()) == 1, "L_i leaves the contact generators");
                        if (g.alpha.order() + 1 == k)
                            images.insert(l.str());
                        ++checked;
                    }
                o.require(images == fresh, "new generators differ at n=" + std::to_string(n) +
                                               " m=" + std::to_string(m) + " k=" + std::to_string(k));
            }
    if (o.ok)
        o.note = std::to_string(checked) + " Lie derivatives over 12 bundles";
    return o;
}

Outcome solution_persistence()
{
    Outcome o;
    Rng rng(303);
    for (int pair = 0; pair < 50; ++pair) {
        const std::size_t n = 1 + rng.uniform(0, 1);
        const unsigned k = 1 + static_cast<unsigned>(rng.uniform(0, 1));
        JetChart c(names("x", n, {"x", "y"}), {"u"}, k);
        const ChartPtr& bc = c.base_chart();
        const std::vector<Poly> sigma{random_poly(bc, n, 4, rng) + Poly::variable(bc, 0)};
        const auto jet = brute_jet(c, sigma);
        // Equations sum c_j (u_alpha - d^alpha sigma) * monomial, so sigma solves them.
        std::vector<Poly> eqs;
        for (int e = 0; e < 2; ++e) {
            Poly eq(c.chart());
            for (int t = 0; t < 2; ++t) {
                const std::size_t idx = c.n() + rng.uniform(0, c.dimension() - c.n() - 1);
                const Poly factor = Poly::variable(c.chart(), idx) - jet[idx].rechart(c.chart());
                const std::size_t w = rng.uniform(0, c.dimension() - 1);
                eq += (factor * (Poly::variable(c.chart(), w) + rng.small_rational())).scaled(rng.small_nonzero_rational());
            }
            if (!eq.is_zero())
                eqs.push_back(eq);
        }
        const PdeSystem s(c, eqs);
        const PolySection section{bc, sigma};
        for (unsigned l = 0; l <= 3; ++l) {
            const PdeSystem p = prolong(s, l);
            const auto images = brute_jet(p.chart(), sigma);
            bool oracle = true;
            for (const auto& eq : p.equations())
                oracle = oracle && eq.substitute(images).is_zero();
            o.require(oracle, "oracle rejects pair " + std::to_string(pair) + " at level " + std::to_string(l));
            o.require(is_solution(p, section), "is_solution rejects pair " + std::to_string(pair) + " at level " +
                                                   std::to_string(l));
        }
    }
    if (o.ok)
        o.note = "50 pairs through level 3";
    return o;
}

PdeSystem laplace()
{
    JetChart c({"x", "y"}, {"u"}, 2);
    return PdeSystem(c, {c.jet_var(0, MultiIndex({2, 0})) + c.jet_var(0, MultiIndex({0, 2}))});
}

PdeSystem free_system(std::size_t n)
{
    return PdeSystem(JetChart(names("x", n, {"x", "y", "z"}), {"u"}, 1), {});
}

Outcome spencer_suite()
{
    Outcome o;
    std::size_t complexes = 0;
    auto delta_squared = [&](const PdeSystem& s, unsigned q_max) {
        const std::size_t n = s.chart().n();
        for (unsigned q = std::max(1u, s.order()); q <= q_max; ++q) {
            const SymbolSpace g = symbol(s, q);
            for (unsigned p = 0; p + 1 <= n; ++p, ++complexes) {
                const auto next = to_ratfunc(ambient_delta(n, s.chart().m(), q - 1, p + 1));
                o.require((next * delta_map(g, p)).is_zero(), "delta^2 != 0 at q=" + std::to_string(q));
            }
        }
    };
    for (std::size_t n = 1; n <= 3; ++n) {
        const PdeSystem f = free_system(n);
        delta_squared(f, 4);
        const SpencerReport r = spencer_cohomology(f, 1, 4);
        for (unsigned q = 1; q <= 4; ++q)
            for (unsigned p = 1; p <= n; ++p)
                o.require(r.h(q, p) == 0, "free symbol cohomology at n=" + std::to_string(n) + " q=" +
                                              std::to_string(q) + " p=" + std::to_string(p));
    }
    const PdeSystem l = laplace();
    delta_squared(l, 5);
    for (unsigned q = 2; q <= 4; ++q)
        o.require(symbol(l, q).dimension() == 2, "dim g_" + std::to_string(q) + " of Laplace");
    const CartanResult c = cartan_characters(l);
    o.require(c.characters == std::vector<std::size_t>{2, 0}, "Laplace characters");
    o.require(c.involutive, "Laplace verdict");
    if (o.ok)
        o.note = std::to_string(complexes) + " delta compositions; Laplace g=2,2,2, characters (2,0), INVOLUTIVE";
    return o;
}

std::vector<Rational> image(const std::vector<Poly>& map, const std::vector<Rational>& p)
{
    std::vector<Rational> out;
    for (const auto& f : map)
        out.push_back(f.eval(p));
    return out;
}

// Random polynomial self-map of R^n whose linear part at p is invertible.
std::vector<Poly> random_map(std::size_t n, unsigned degree, Rng& rng, const std::vector<Rational>& p)
{
    const auto chart = make_chart(names("y", n, {}));
    for (;;) {
        std::vector<Poly> map;
        for (std::size_t i = 0; i < n; ++i)
            map.push_back(random_poly(chart, n, degree, rng));
        try {
            (void)jet_of_polynomial_map(map, p, 1);
            return map;
        } catch (const SingularPoint&) {
        }
    }
}

// Taylor coefficients of f at p up to order k, from partial derivatives.
bool jet_matches(const JetOfMap& j, const std::vector<Poly>& f, const std::vector<Rational>& p)
{
    if (j.source() != p || j.target() != image(f, p))
        return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (const auto& beta : enumerate_multi_indices(p.size(), j.order())) {
            if (beta.order() == 0)
                continue;
            const Rational c = differentiate(f[i], beta).eval(p) / Rational(mpz_class(beta.factorial()), 1);
            if (c != j.coefficient(i, beta))
                return false;
        }
    return true;
}

Outcome groupoid_laws()
{
    Outcome o;
    Rng rng(505);
    int cases = 0;
    for (std::size_t n = 1; n <= 2; ++n)
        for (unsigned k = 1; k <= 4; ++k)
            for (int trial = 0; trial < 25; ++trial, ++cases) {
                std::vector<Rational> p;
                for (std::size_t i = 0; i < n; ++i)
                    p.push_back(rng.small_rational());
                const auto f = random_map(n, k, rng, p);
                const auto fp = image(f, p);
                const auto g = random_map(n, k, rng, fp);
                const auto gfp = image(g, fp);
                const auto h = random_map(n, k, rng, gfp);
                const auto a = jet_of_polynomial_map(f, p, k);
                const auto b = jet_of_polynomial_map(g, fp, k);
                const auto c = jet_of_polynomial_map(h, gfp, k);
                const std::string at = " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
                o.require(jet_matches(a, f, p), "jet of a polynomial map" + at);
                o.require(jet_compose(c, jet_compose(b, a)) == jet_compose(jet_compose(c, b), a), "associativity" + at);
                o.require(jet_compose(JetOfMap::identity(a.target(), k), a) == a, "left unit" + at);
                o.require(jet_compose(a, JetOfMap::identity(a.source(), k)) == a, "right unit" + at);
                const auto ai = jet_invert(a);
                o.require(jet_compose(a, ai) == JetOfMap::identity(a.target(), k), "right inverse" + at);
                o.require(jet_compose(ai, a) == JetOfMap::identity(a.source(), k), "left inverse" + at);
                o.require(jet_matches(jet_compose(b, a), compose_maps(g, f), p), "composition oracle" + at);
            }
    if (o.ok)
        o.note = std::to_string(cases) + " seeded triples";
    return o;
}

PfaffSystem darboux()
{
    const auto c = make_chart({"x", "y", "z"});
    return PfaffSystem{c, {DiffForm::differential(c, "y") -
                           DiffForm::differential(c, "x").scaled(RatFunc(Poly::variable(c, "z")))}};
}

Outcome pfaffian_flags()
{
    Outcome o;
    for (std::size_t l = 1; l <= 5; ++l) {
        const FlagVerdict v = flag_classify(goursat_model(l));
        std::vector<std::size_t> expected;
        for (std::size_t r = l + 1; r-- > 0;)
            expected.push_back(r);
        o.require(v.is_flag && v.length == l, "goursat_model(" + std::to_string(l) + ") is not FLAG(l)");
        o.require(derived_flag(goursat_model(l)).ranks == expected, "derived ranks of goursat_model(" +
                                                                        std::to_string(l) + ")");
    }
    const PfaffSystem d = darboux();
    o.require(rank_corank(d).corank == 2, "Darboux corank");
    o.require(derived_system(d).generators.empty(), "Darboux derived system");
    Rng rng(606);
    for (int i = 0; i < 5; ++i) {
        const std::vector<Rational> p{rng.small_rational(), rng.small_rational(), rng.small_rational()};
        o.require(characteristic_space(d, p).dimension == 0, "Darboux characteristic at a sample");
    }
    if (o.ok)
        o.note = "FLAG(1..5); Darboux derived system 0, characteristics 0 at 5 points";
    return o;
}

Outcome pfaff_rule_checks()
{
    Outcome o;
    const auto c4 = make_chart({"x1", "x2", "u", "v"});
    const PfaffSystem uv{c4, {DiffForm::differential(c4, "u"), DiffForm::differential(c4, "v")}};
    const PfaffSystem xx{c4, {DiffForm::differential(c4, "x1"), DiffForm::differential(c4, "x2")}};
    const auto r = pfaff_rules(uv, xx);
    o.require(r.kind == VerdictKind::RuleEquivalent && r.rule == "integrable", "{du,dv} vs {dx1,dx2}");
    const auto c3 = make_chart({"x", "y", "u"});
    const PfaffSystem du{c3, {DiffForm::differential(c3, "u")}};
    const auto d = pfaff_rules(darboux(), du);
    o.require(d.first_order_equivalent == true, "Darboux vs {du} first-order equivalence");
    o.require(!(d.kind == VerdictKind::RuleEquivalent && d.rule == "integrable"), "Darboux vs {du} integrable rule");
    if (o.ok)
        o.note = "integrable rule holds; Darboux vs {du}: first-order equivalent, " + to_string(d.kind);
    return o;
}

PdeSystem first_order(std::vector<std::size_t> which)
{
    JetChart c({"x", "y"}, {"u"}, 1);
    std::vector<Poly> eqs;
    for (auto i : which)
        eqs.push_back(c.jet_var(0, MultiIndex::unit(2, i)));
    return PdeSystem(c, eqs);
}

Outcome gate_checks()
{
    Outcome o;
    const GateReport refl = gate(laplace(), laplace(), 2);
    o.require(refl.overall == GateOverall::PassNecessary, "Laplace reflexivity");
    o.require(refl.common_acyclic_order == 2u, "Laplace q0");
    const GateReport dim = gate(first_order({0, 1}), first_order({0}), 2);
    o.require(dim.overall == GateOverall::Fail && dim.failure && dim.failure->condition == GateCondition::Dimension &&
                  dim.failure->order == 0,
              "dimension failure at order 0");
    o.require(!dim.dimensions_a.empty() && dim.dimensions_a[0] == 3 && dim.dimensions_b[0] == 4, "dims 3 vs 4");
    cli::Invocation inv{"equiv-gate", {(kTests / "corpus" / "laplace.pde").string(),
                                       (kTests / "corpus" / "wave.pde").string()}, {}};
    inv.options.orders = 2;
    inv.options.seed = 7;
    const Report lw = cli::run(inv);
    const std::string text = lw.text();
    o.require(lw.exit_status == 0 && text.find("verdict gate/") != std::string::npos &&
                  text.find("PASS_NECESSARY") != std::string::npos,
              "Laplace vs wave verdict");
    o.require(text.find(kNecessaryCaveat) != std::string::npos, "caveat missing from report");
    if (o.ok)
        o.note = "reflexive q0=2; DIMENSION at order 0 (3 vs 4); Laplace/wave PASS_NECESSARY with caveat";
    return o;
}

PdeSystem riccati(const Rational& c)
{
    JetChart j({"x"}, {"u"}, 1);
    const Poly u = j.jet_var(0, MultiIndex({0}));
    return PdeSystem(j, {j.jet_var(0, MultiIndex({1})) - (u * u).scaled(c)});
}

Outcome definition_verifier()
{
    Outcome o;
    const auto b = make_chart({"x"});
    const auto t = make_chart({"x", "u"});
    const Poly uu = Poly::variable(t, 1);
    const FiberedMap phi({"x"}, {"u"}, {Poly::variable(b, 0)}, {uu.scaled(2)}, {Poly::variable(b, 0)},
                         {uu.scaled(Rational(1, 2))});
    const PdeSystem s = riccati(1), sp = riccati(Rational(1, 2));
    o.require(verify_absolute(s, sp, phi).kind == VerdictKind::AbsoluteEquivalent, "phi certificate");
    o.require(verify_absolute(sp, s, phi.inverse()).kind == VerdictKind::AbsoluteEquivalent, "inverse certificate");
    const auto id = verify_absolute(s, sp, FiberedMap::identity({"x"}, {"u"}));
    o.require(id.kind == VerdictKind::NotEquivalent, "identity non-example");
    o.require(!id.witness_point.empty() && s.contains(id.witness_point) && !sp.contains(id.witness_point),
              "identity witness is not on the source locus only");
    if (o.ok)
        o.note = "ABSOLUTE_EQUIVALENT both ways; identity NOT_EQUIVALENT with on-locus witness";
    return o;
}

Outcome cli_determinism()
{
    Outcome o;
    const auto cases = testing::load_golden_cases(kTests / "golden" / "cases.txt", kTests / "corpus");
    std::set<std::string> files;
    for (const auto& c : cases) {
        for (const auto& f : c.invocation.files)
            files.insert(f);
        const std::string first = testing::render(c), second = testing::render(c);
        o.require(first == second, "report of " + c.name + " differs between runs");
    }
    o.require(files.size() >= 12, "corpus has fewer than 12 files");
    if (o.ok)
        o.note = std::to_string(cases.size()) + " cases over " + std::to_string(files.size()) + " files, run twice";
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> check;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "contact/holonomy characterization", 5, holonomy},
        {2, "total Lie derivative recursion", 1, lie_recursion},
        {3, "solution persistence under prolongation", 5, solution_persistence},
        {4, "Spencer suite", 10, spencer_suite},
        {5, "jet groupoid laws", 5, groupoid_laws},
        {6, "Pfaffian flags", 2, pfaffian_flags},
        {7, "first-order Pfaffian rules", 1, pfaff_rule_checks},
        {8, "equivalence gate", 10, gate_checks},
        {9, "absolute equivalence verifier", 1, definition_verifier},
        {10, "CLI determinism over the golden corpus", 30, cli_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && seconds > c.budget_seconds) {
            o.ok = false;
            o.note += "; over the time budget";
        }
        failures += !o.ok;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", seconds, c.budget_seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << " [" << timing << "] " << o.note
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
