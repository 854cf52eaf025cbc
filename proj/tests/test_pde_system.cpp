#include "plab/errors.hpp"
#include "plab/pde_system.hpp"

#include <doctest.h>

using namespace plab;

namespace {

std::vector<Rational> qs(std::initializer_list<long> v)
{
    return std::vector<Rational>(v.begin(), v.end());
}

JetChart ode(unsigned k) { return JetChart({"x"}, {"u"}, k); }
Poly u(const JetChart& c, unsigned j) { return c.jet_var(0, MultiIndex({j})); }
Poly uxy(const JetChart& c, unsigned a, unsigned b) { return c.jet_var(0, MultiIndex({a, b})); }

// Every equation of `a` vanishes modulo the solved form of `b`.
bool vanishes_mod(const PdeSystem& a, const PdeSystem& b)
{
    for (const auto& e : a.equations())
        if (!b.reduce(e).is_zero())
            return false;
    return true;
}

PdeSystem laplace()
{
    JetChart c({"x", "y"}, {"u"}, 2);
    return PdeSystem(c, {uxy(c, 2, 0) + uxy(c, 0, 2)}, "laplace");
}

} // namespace

TEST_CASE("solved form inference")
{
    auto c = ode(1);
    PdeSystem s(c, {u(c, 1) - u(c, 0)});
    REQUIRE(s.explicit_form());
    CHECK(s.explicit_form()->at(2) == u(c, 0));
    CHECK(s.parametric_chart()->names() == std::vector<std::string>{"x", "u"});
    CHECK(s.complete_point(qs({0, 3})) == qs({0, 3, 3}));

    PdeSystem sq(c, {u(c, 1) * u(c, 1)});
    CHECK_FALSE(sq.explicit_form());

    PdeSystem bad(c, {u(c, 1) - 1, u(c, 1) - 2});
    CHECK(bad.inconsistent());
    CHECK_THROWS_AS(generic_dimension(bad), EmptyLocus);

    CHECK_THROWS_AS(PdeSystem::from_solved(c, {{2, u(c, 1)}}), UsageError);
}

TEST_CASE("prolongation examples")
{
    auto c = ode(1);
    PdeSystem s(c, {u(c, 1) - u(c, 0)});
    auto p = prolong(s, 1);
    auto c2 = ode(2);
    REQUIRE(p.equations().size() == 2);
    CHECK(p.equations()[0] == u(c2, 1) - u(c2, 0));
    CHECK(p.equations()[1] == u(c2, 2) - u(c2, 1));
    CHECK(prolong(s, 0).equations() == s.equations());

    auto l1 = prolong(laplace(), 1);
    JetChart c3({"x", "y"}, {"u"}, 3);
    REQUIRE(l1.equations().size() == 3);
    CHECK(l1.equations()[1] == uxy(c3, 3, 0) + uxy(c3, 1, 2));
    CHECK(l1.equations()[2] == uxy(c3, 2, 1) + uxy(c3, 0, 3));
}

TEST_CASE("prolongation composes")
{
    auto l = laplace();
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; b <= 2; ++b) {
            auto direct = prolong(l, a + b);
            auto twice = prolong(prolong(l, a), b);
            CHECK(direct.chart() == twice.chart());
            CHECK(generic_dimension(direct) == generic_dimension(twice));
            REQUIRE(direct.explicit_form());
            REQUIRE(twice.explicit_form());
            CHECK(vanishes_mod(direct, twice));
            CHECK(vanishes_mod(twice, direct));
            CHECK(direct.equations().size() <= binomial(2 + a + b, a + b));
        }
}

TEST_CASE("generic dimension examples")
{
    auto c = ode(1);
    CHECK(generic_dimension(PdeSystem(c, {u(c, 1) - u(c, 0)})) == 2);
    JetChart c2({"x", "y"}, {"u"}, 1);
    CHECK(generic_dimension(PdeSystem(c2, {})) == 5);
    CHECK(generic_dimension(PdeSystem(c2, {uxy(c2, 1, 0), uxy(c2, 0, 1)})) == 3);
    // A hidden 1 = 0 in the rational span.
    CHECK_THROWS_AS(generic_dimension(PdeSystem(c, {u(c, 1) * u(c, 0), u(c, 1) * u(c, 0) + 1})), EmptyLocus);
    // Laplace: each level adds one equation per new derivative order minus one.
    CHECK(generic_dimension(laplace()) == 7);
    CHECK(generic_dimension(prolong(laplace(), 1)) == 9);
}

TEST_CASE("regularity examples")
{
    auto c = ode(1);
    CHECK(regularity_check(PdeSystem(c, {u(c, 1) - u(c, 0)}), {qs({0, 1, 1})}).regular);
    auto v = regularity_check(PdeSystem(c, {u(c, 1) * u(c, 1)}), {qs({0, 0, 0})});
    CHECK_FALSE(v.regular);
    CHECK(v.generic_rank == 1);
    CHECK(v.point_rank == 0);
    CHECK(regularity_check(PdeSystem(c, {}), {qs({1, 2, 3})}).regular);
    CHECK_THROWS_AS(regularity_check(PdeSystem(c, {u(c, 1) - u(c, 0)}), {qs({0, 1, 2})}), NotOnLocus);
}

TEST_CASE("solution checks")
{
    auto bx = make_chart({"x"});
    Poly x = Poly::variable(bx, 0);
    auto c2 = ode(2);
    CHECK(is_solution(PdeSystem(c2, {u(c2, 2)}), PolySection{bx, {x.scaled(3) + 1}}));
    auto c1 = ode(1);
    CHECK_FALSE(is_solution(PdeSystem(c1, {u(c1, 1) - u(c1, 0)}), PolySection{bx, {x}}));
    auto bxy = make_chart({"x", "y"});
    Poly px = Poly::variable(bxy, 0), py = Poly::variable(bxy, 1);
    CHECK(is_solution(laplace(), PolySection{bxy, {px * px - py * py}}));
}

TEST_CASE("solutions persist under prolongation")
{
    auto bxy = make_chart({"x", "y"});
    Poly px = Poly::variable(bxy, 0), py = Poly::variable(bxy, 1);
    std::vector<Poly> harmonic{px * py, px * px * px - (px * py * py).scaled(3), px - py.scaled(7) + 2};
    for (const auto& h : harmonic)
        for (unsigned l = 0; l <= 3; ++l)
            CHECK(is_solution(prolong(laplace(), l), PolySection{bxy, {h}}));
    auto bx = make_chart({"x"});
    Poly x = Poly::variable(bx, 0);
    auto c = ode(2);
    for (unsigned l = 0; l <= 3; ++l)
        CHECK(is_solution(prolong(PdeSystem(c, {u(c, 2)}), l), PolySection{bx, {x.scaled(-2) + 5}}));
}

TEST_CASE("tangency oracle examples")
{
    auto c = ode(1);
    auto c2 = ode(2);
    auto t = tangency_oracle(PdeSystem(c, {u(c, 1) - u(c, 0)}));
    REQUIRE(t.explicit_form());
    CHECK(t.reduce(u(c2, 2)) == u(c2, 0));
    auto tx = tangency_oracle(PdeSystem(c, {u(c, 1) - c.base_var(0)}));
    CHECK(tx.reduce(u(c2, 2)) == Poly::constant(c2.chart(), 1));
    auto t0 = tangency_oracle(PdeSystem(c, {u(c, 1)}));
    CHECK(t0.reduce(u(c2, 2)).is_zero());
    CHECK(t0.reduce(u(c2, 1)).is_zero());
    CHECK_THROWS_AS(tangency_oracle(PdeSystem(c, {u(c, 1) * u(c, 1) - u(c, 0) * u(c, 0)})), UnsupportedForm);
}

TEST_CASE("tangency oracle agrees with prolongation")
{
    Rng rng(99);
    auto c = ode(1);
    for (int trial = 0; trial < 20; ++trial) {
        Poly rhs(c.chart());
        for (unsigned a = 0; a <= 2; ++a)
            for (unsigned b = 0; a + b <= 2; ++b)
                if (rng.uniform(0, 1))
                    rhs += Poly::monomial(c.chart(), {a, b, 0}, rng.small_rational());
        PdeSystem s(c, {u(c, 1) - rhs});
        auto oracle = tangency_oracle(s);
        auto prolonged = prolong(s, 1);
        REQUIRE(oracle.explicit_form());
        REQUIRE(prolonged.explicit_form());
        CHECK(vanishes_mod(oracle, prolonged));
        CHECK(vanishes_mod(prolonged, oracle));
    }
}

TEST_CASE("locus sampling")
{
    Rng rng(3);
    auto c = ode(1);
    PdeSystem explicit_sys(c, {u(c, 1) - u(c, 0) * u(c, 0)});
    for (int i = 0; i < 5; ++i) {
        auto p = sample_locus_point(explicit_sys, rng);
        REQUIRE(p);
        CHECK(explicit_sys.contains(*p));
    }
    // Linear in the highest-order coordinate only after fixing the others.
    PdeSystem implicit(c, {c.base_var(0) * u(c, 1) - u(c, 0) * u(c, 0)});
    CHECK_FALSE(implicit.explicit_form());
    auto p = sample_locus_point(implicit, rng);
    REQUIRE(p);
    CHECK(implicit.contains(*p));
    PdeSystem quadratic(c, {u(c, 1) * u(c, 1) - u(c, 0) * u(c, 0)});
    CHECK_FALSE(sample_locus_point(quadratic, rng));
}
