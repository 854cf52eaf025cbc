#include "plab/errors.hpp"
#include "plab/spencer.hpp"

#include <doctest.h>

using namespace plab;

namespace {

PdeSystem laplace()
{
    JetChart c({"x", "y"}, {"u"}, 2);
    return PdeSystem(c, {c.jet_var(0, MultiIndex({2, 0})) + c.jet_var(0, MultiIndex({0, 2}))});
}

PdeSystem wave()
{
    JetChart c({"x", "y"}, {"u"}, 2);
    return PdeSystem(c, {c.jet_var(0, MultiIndex({2, 0})) - c.jet_var(0, MultiIndex({0, 2}))});
}

PdeSystem free_system(std::size_t n, std::size_t m, unsigned k)
{
    std::vector<std::string> base{"x", "y", "z"}, fiber{"u", "v"};
    base.resize(n);
    fiber.resize(m);
    return PdeSystem(JetChart(base, fiber, k), {});
}

PdeSystem finite_type()
{
    JetChart c({"x", "y"}, {"u"}, 1);
    return PdeSystem(c, {c.jet_var(0, MultiIndex({1, 0})), c.jet_var(0, MultiIndex({0, 1}))});
}

bool delta_squared_vanishes(const SymbolSpace& g, unsigned p)
{
    if (g.q == 0)
        return true;
    auto next = to_ratfunc(ambient_delta(g.n, g.m, g.q - 1, p + 1));
    return (next * delta_map(g, p)).is_zero();
}

} // namespace

TEST_CASE("symbol examples")
{
    CHECK(symbol(laplace(), 2).dimension() == 2);
    CHECK(symbol(laplace(), 3).dimension() == 2);
    CHECK(symbol(laplace(), 4).dimension() == 2);
    for (unsigned q = 1; q <= 4; ++q)
        CHECK(symbol(free_system(2, 2, 1), q).dimension() == 2 * binomial(2 + q - 1, q));
    CHECK(symbol(finite_type(), 1).dimension() == 0);
    CHECK(symbol(finite_type(), 2).dimension() == 0);
    CHECK_THROWS_AS(symbol(laplace(), 1), OrderMismatch);
}

TEST_CASE("symbol at a point")
{
    JetChart c({"x"}, {"u"}, 1);
    PdeSystem s(c, {c.jet_var(0, MultiIndex({1})) * c.jet_var(0, MultiIndex({1}))});
    std::vector<Rational> origin(3);
    CHECK(symbol(s, 1, std::span<const Rational>(origin)).dimension() == 1);
    CHECK(symbol(s, 1).dimension() == 0);
    std::vector<Rational> off{0, 0, 1};
    CHECK_THROWS_AS(symbol(s, 1, std::span<const Rational>(off)), NotOnLocus);
}

TEST_CASE("delta map examples")
{
    // n = 1 free symbol: delta on degree 0 is a nonzero scalar.
    for (unsigned q = 1; q <= 4; ++q) {
        auto g = symbol(free_system(1, 1, 1), q);
        auto d = delta_map(g, 0);
        REQUIRE(d.rows() == 1);
        REQUIRE(d.cols() == 1);
        CHECK_FALSE(d(0, 0).is_zero());
    }
    auto zero = symbol(finite_type(), 1);
    CHECK(delta_map(zero, 0).cols() == 0);
    CHECK(delta_map(zero, 1).cols() == 0);
}

TEST_CASE("delta squared vanishes")
{
    std::vector<PdeSystem> systems{laplace(), wave(), finite_type(), free_system(3, 1, 1), free_system(2, 2, 2)};
    for (const auto& s : systems)
        for (unsigned q = s.order(); q <= s.order() + 2; ++q) {
            auto g = symbol(s, q);
            for (unsigned p = 0; p + 1 < g.n; ++p)
                CHECK(delta_squared_vanishes(g, p));
        }
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned q = 2; q <= 4; ++q)
            for (unsigned p = 0; p + 1 <= n; ++p) {
                auto d1 = ambient_delta(n, 1, q, p);
                auto d2 = ambient_delta(n, 1, q - 1, p + 1);
                CHECK((d2 * d1).is_zero());
            }
}

TEST_CASE("free symbols are acyclic")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto r = spencer_cohomology(free_system(n, 1, 1), 1, 4);
        for (unsigned q = 1; q <= 4; ++q)
            for (unsigned p = 1; p <= n; ++p)
                CHECK(r.h(q, p) == 0);
        CHECK(r.two_acyclic);
        CHECK(r.first_acyclic == 1u);
    }
}

TEST_CASE("Laplace cohomology and characters")
{
    auto r = spencer_cohomology(laplace(), 2, 4);
    CHECK(r.symbol_dimensions == std::vector<std::size_t>{2, 2, 2, 2});
    for (unsigned q = 2; q <= 4; ++q) {
        CHECK(r.h(q, 1) == 0);
        CHECK(r.h(q, 2) == 0);
    }
    CHECK(r.first_acyclic == 2u);

    auto c = cartan_characters(laplace());
    CHECK(c.characters == std::vector<std::size_t>{2, 0});
    CHECK(c.dim_g == 2);
    CHECK(c.dim_next == 2);
    CHECK(c.involutive);
}

TEST_CASE("character examples")
{
    auto ode = cartan_characters(free_system(1, 1, 1));
    CHECK(ode.characters == std::vector<std::size_t>{1});
    CHECK(ode.involutive);
    auto ft = cartan_characters(finite_type());
    CHECK(ft.characters == std::vector<std::size_t>{0, 0});
    CHECK(ft.involutive);
    // u_xx = u_xy = 0 leaves only u_yy free at orders 2 and 3.
    JetChart c({"x", "y"}, {"u"}, 2);
    PdeSystem s(c, {c.jet_var(0, MultiIndex({2, 0})), c.jet_var(0, MultiIndex({1, 1}))});
    auto r = cartan_characters(s);
    CHECK(r.dim_g == 1);
    CHECK(r.dim_next == 1);
    CHECK(r.characters == std::vector<std::size_t>{1, 0});
    CHECK(r.involutive);
    PdeSystem t(c, {c.jet_var(0, MultiIndex({0, 2})), c.jet_var(0, MultiIndex({1, 1}))});
    auto rt = cartan_characters(t);
    CHECK(rt.involutive);
}

TEST_CASE("involutive symbols are two-acyclic")
{
    std::vector<PdeSystem> systems{laplace(), wave(), finite_type(), free_system(2, 1, 1), free_system(3, 1, 2)};
    for (const auto& s : systems) {
        auto c = cartan_characters(s);
        if (!c.involutive)
            continue;
        auto r = spencer_cohomology(s, c.q, c.q + 1);
        CHECK(r.h(c.q, 1) == 0);
        CHECK(r.h(c.q, 2) == 0);
    }
}

TEST_CASE("non-involutive symbol has cohomology")
{
    // u_xx = u_yy = 0: g_2 = <u_xy> but g_3 = 0.
    JetChart c({"x", "y"}, {"u"}, 2);
    PdeSystem s(c, {c.jet_var(0, MultiIndex({2, 0})), c.jet_var(0, MultiIndex({0, 2}))});
    auto ch = cartan_characters(s);
    CHECK(ch.dim_g == 1);
    CHECK(ch.dim_next == 0);
    CHECK_FALSE(ch.involutive);
    auto r = spencer_cohomology(s, 2, 2);
    CHECK(r.h(2, 1) + r.h(2, 2) > 0);
}

TEST_CASE("Euler characteristic along diagonal complexes")
{
    std::vector<PdeSystem> systems{laplace(), wave(), finite_type(), free_system(2, 2, 1), free_system(3, 1, 1)};
    for (const auto& s : systems) {
        const std::size_t n = s.chart().n();
        const unsigned k = s.order();
        auto r = spencer_cohomology(s, k, k + 3);
        for (unsigned t = k + n; t <= k + 3; ++t) {
            long chi_chains = 0, chi_h = 0;
            for (unsigned p = 0; p <= n; ++p) {
                const unsigned q = t - p;
                const long sign = p % 2 == 0 ? 1 : -1;
                chi_chains += sign * static_cast<long>(r.symbol_dimensions[q - k] * binomial(n, p));
                chi_h += sign * static_cast<long>(r.h(q, p));
            }
            CHECK(chi_chains == chi_h);
        }
    }
}
