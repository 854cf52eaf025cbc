#include "plab/contact.hpp"
#include "plab/errors.hpp"
#include "plab/random.hpp"

#include <doctest.h>

#include <algorithm>

using namespace plab;

namespace {

JetChart ode(unsigned k) { return JetChart({"x"}, {"u"}, k); }
Poly u(const JetChart& c, unsigned j) { return c.jet_var(0, MultiIndex({j})); }

DiffForm d(const JetChart& c, std::size_t i) { return DiffForm::differential(c.chart(), i); }

DiffForm theta(const JetChart& c, unsigned j)
{
    return d(c, c.jet_index(0, MultiIndex({j}))) - d(c, 0).scaled(RatFunc(u(c, j + 1)));
}

} // namespace

TEST_CASE("contact generator examples")
{
    auto c1 = ode(1);
    auto s1 = contact_generators(c1);
    REQUIRE(s1.generators.size() == 1);
    CHECK(s1.generators[0].form == theta(c1, 0));
    CHECK(s1.generators[0].form.str() == "-u[1]*dx + du");

    auto c2 = ode(2);
    auto s2 = contact_generators(c2);
    REQUIRE(s2.generators.size() == 2);
    CHECK(s2.generators[1].form == theta(c2, 1));

    JetChart p({"x", "y"}, {"u"}, 1);
    auto sp = contact_generators(p);
    REQUIRE(sp.generators.size() == 1);
    DiffForm expected = d(p, 2) - d(p, 0).scaled(RatFunc(p.jet_var(0, MultiIndex({1, 0})))) -
                        d(p, 1).scaled(RatFunc(p.jet_var(0, MultiIndex({0, 1}))));
    CHECK(sp.generators[0].form == expected);

    CHECK(contact_generators(ode(0)).generators.empty());
    for (std::size_t n = 1; n <= 2; ++n)
        for (std::size_t m = 1; m <= 2; ++m)
            for (unsigned k = 1; k <= 3; ++k) {
                std::vector<std::string> base{"x", "y"}, fib{"u", "v"};
                base.resize(n);
                fib.resize(m);
                JetChart c(base, fib, k);
                auto s = contact_generators(c);
                CHECK(s.generators.size() == m * binomial(n + k - 1, k - 1));
                CHECK(generic_rank(s.as_pfaff().coefficient_matrix()) == s.generators.size());
            }
}

TEST_CASE("total Lie derivative examples")
{
    auto c1 = ode(1);
    auto c2 = ode(2);
    auto c3 = ode(3);
    CHECK(total_lie_derivative(c1, theta(c1, 0), 0) == theta(c2, 1));
    CHECK(total_lie_derivative(c1, d(c1, 0), 0).is_zero());
    CHECK(total_lie_derivative(c2, theta(c2, 1), 0) == theta(c3, 2));
    // Product rule on a coefficient.
    DiffForm w = d(c1, 1).scaled(RatFunc(u(c1, 0)));
    CHECK(total_lie_derivative(c1, w, 0) == d(c2, 1).scaled(RatFunc(u(c2, 1))) + d(c2, 2).scaled(RatFunc(u(c2, 0))));
}

TEST_CASE("contact systems nest and Lie derivatives produce the new generators")
{
    for (std::size_t n = 1; n <= 2; ++n)
        for (unsigned k = 1; k <= 3; ++k) {
            std::vector<std::string> base{"x", "y"};
            base.resize(n);
            JetChart c(base, {"u", "v"}, k);
            JetChart up = c.raised();
            auto low = contact_generators(c);
            auto high = contact_generators(up);
            std::vector<DiffForm> high_forms;
            for (const auto& g : high.generators)
                high_forms.push_back(g.form);
            auto contains = [&](const DiffForm& f) {
                return std::find(high_forms.begin(), high_forms.end(), f) != high_forms.end();
            };
            for (const auto& g : low.generators)
                CHECK(contains(g.form.rechart(up.chart())));

            std::vector<DiffForm> images;
            for (const auto& g : low.generators)
                for (std::size_t i = 0; i < n; ++i) {
                    auto l = total_lie_derivative(c, g.form, i);
                    CHECK(contains(l));
                    if (g.alpha.order() + 1 == k)
                        images.push_back(l);
                }
            for (const auto& g : high.generators) {
                const bool fresh = g.alpha.order() == k;
                CHECK(fresh == (std::find(images.begin(), images.end(), g.form) != images.end()));
            }
        }
}

TEST_CASE("contact restriction examples")
{
    auto c1 = ode(1);
    auto r = restrict_contact(PdeSystem(c1, {u(c1, 1) - u(c1, 0)}));
    REQUIRE(r.generators.size() == 1);
    CHECK(r.chart->names() == std::vector<std::string>{"x", "u"});
    CHECK(r.generators[0].str() == "-u*dx + du");

    auto c2 = ode(2);
    auto r2 = restrict_contact(PdeSystem(c2, {u(c2, 2)}));
    REQUIRE(r2.generators.size() == 2);
    CHECK(r2.generators[0].str() == "-u[1]*dx + du");
    CHECK(r2.generators[1].str() == "du[1]");

    auto full = restrict_contact(PdeSystem(c2, {}));
    CHECK(full.generators == contact_generators(c2).as_pfaff().generators);

    CHECK_THROWS_AS(restrict_contact(PdeSystem(c1, {u(c1, 1) * u(c1, 1) - u(c1, 0) * u(c1, 0)})), UnsupportedForm);
}

TEST_CASE("holonomic integral examples")
{
    auto bx = make_chart({"x"});
    Poly x = Poly::variable(bx, 0);
    auto c2 = ode(2);
    CHECK(is_holonomic_integral(c2, holonomic_jet_symbolic(c2, PolySection{bx, {x * x * x}})));
    auto c1 = ode(1);
    CHECK_FALSE(is_holonomic_integral(c1, {x, x, Poly(0)}));
    CHECK(is_holonomic_integral(c2, {x, x * x, x.scaled(2), Poly(2)}));
}

TEST_CASE("holonomy characterization on random assignments")
{
    Rng rng(17);
    int holonomic = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.uniform(0, 1);
        const std::size_t m = 1 + rng.uniform(0, 1);
        const unsigned k = 1 + static_cast<unsigned>(rng.uniform(0, 2));
        std::vector<std::string> base{"x", "y"}, fib{"u", "v"};
        base.resize(n);
        fib.resize(m);
        JetChart c(base, fib, k);
        const ChartPtr& bc = c.base_chart();
        auto random_poly = [&] {
            Poly p(bc);
            for (const auto& e : enumerate_multi_indices(n, 3))
                if (rng.uniform(0, 2) == 0)
                    p += Poly::monomial(bc, e.exponents(), rng.small_rational());
            return p;
        };
        PolySection sigma{bc, {}};
        for (std::size_t a = 0; a < m; ++a)
            sigma.components.push_back(random_poly());
        auto tau = holonomic_jet_symbolic(c, sigma);
        const bool perturb = trial % 2 == 1;
        if (perturb) {
            const std::size_t idx = c.n() + rng.uniform(0, c.dimension() - c.n() - 1);
            tau[idx] += Poly::variable(bc, 0) + 1;
        }
        // Constructed comparison: tau is holonomic iff it equals the jet of its order-0 part.
        PolySection recovered{bc, {}};
        for (std::size_t a = 0; a < m; ++a)
            recovered.components.push_back(tau[c.jet_index(a, MultiIndex::zero(n))]);
        const bool expected = tau == holonomic_jet_symbolic(c, recovered);
        CHECK(is_holonomic_integral(c, tau) == expected);
        CHECK(expected == !perturb);
        holonomic += expected;
    }
    CHECK(holonomic == 50);
}

TEST_CASE("solution sections annihilate the restricted contact system")
{
    auto bx = make_chart({"x"});
    Poly x = Poly::variable(bx, 0);
    auto c2 = ode(2);
    PdeSystem s(c2, {u(c2, 2)});
    auto r = restrict_contact(s);
    for (const auto& sigma : {x.scaled(3) + 1, Poly::constant(bx, 4), x.scaled(-1)}) {
        auto jet = holonomic_jet_symbolic(c2, PolySection{bx, {sigma}});
        std::vector<Poly> images;
        for (const auto& name : r.chart->names())
            images.push_back(jet[c2.chart()->require(name)]);
        for (const auto& g : r.generators)
            CHECK(g.pullback(bx, images).is_zero());
    }
}
