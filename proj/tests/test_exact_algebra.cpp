#include "plab/matrix.hpp"
#include "plab/poly.hpp"
#include "plab/random.hpp"
#include "plab/errors.hpp"

#include <doctest.h>

using namespace plab;

namespace {

ChartPtr xu() { return make_chart({"x", "u", "u1"}); }

Poly random_poly(const ChartPtr& chart, Rng& rng, unsigned max_deg, int terms)
{
    Poly p(chart);
    for (int t = 0; t < terms; ++t) {
        Exponent e(chart->size(), 0);
        unsigned budget = static_cast<unsigned>(rng.uniform(0, max_deg));
        for (unsigned b = 0; b < budget; ++b)
            e[rng.uniform(0, chart->size() - 1)] += 1;
        p += Poly::monomial(chart, e, rng.small_rational());
    }
    return p;
}

Matrix<Rational> qmat(std::initializer_list<std::initializer_list<long>> rows)
{
    Matrix<Rational> m;
    for (auto r : rows) {
        std::vector<Rational> v;
        for (auto x : r)
            v.emplace_back(x);
        m.append_row(v);
    }
    return m;
}

} // namespace

TEST_CASE("rational arithmetic stays in lowest terms")
{
    Rational a = Rational::parse("6/4");
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    CHECK(Rational::parse("-2/-4") == Rational(1) / Rational(2));
    CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("poly_partial examples")
{
    auto c = xu();
    Poly x = Poly::variable(c, "x");
    Poly u = Poly::variable(c, "u");
    Poly u1 = Poly::variable(c, "u1");
    CHECK((x * x * u).partial("x") == (x * u).scaled(2));
    CHECK(u1.partial("x").is_zero());
    CHECK((x.pow(3).scaled(Rational(3) / Rational(2))).partial("x") == x.pow(2).scaled(Rational(9) / Rational(2)));
    CHECK_THROWS_AS(x.partial("y"), ChartMismatch);
}

TEST_CASE("poly_eval examples")
{
    auto c = make_chart({"x", "u"});
    Poly x = Poly::variable(c, "x");
    Poly u = Poly::variable(c, "u");
    std::map<std::string, Rational> pt{{"x", 2}, {"u", 1}};
    CHECK((x * x + u).eval(pt) == 5);
    CHECK(Poly(c).eval(pt) == 0);
    std::map<std::string, Rational> pt2{{"x", Rational(1) / Rational(2)}, {"u", Rational(2) / Rational(3)}};
    CHECK((x * u - Poly(Rational(1) / Rational(3))).eval(pt2) == 0);
    CHECK_THROWS_AS((x + u).eval(std::map<std::string, Rational>{{"x", 1}}), IncompletePoint);
}

TEST_CASE("graded lexicographic printing")
{
    auto c = make_chart({"x", "u"});
    Poly x = Poly::variable(c, "x");
    Poly u = Poly::variable(c, "u");
    Poly p = u + x * x - Poly(Rational(1) / Rational(3)) + x * u.scaled(-2);
    CHECK(p.str() == "x^2 - 2*x*u + u - 1/3");
    CHECK(Poly(c).str() == "0");
}

TEST_CASE("exact division and rechart")
{
    auto c = make_chart({"x", "y"});
    Poly x = Poly::variable(c, "x");
    Poly y = Poly::variable(c, "y");
    Poly f = (x + y) * (x - y.scaled(2));
    auto q = f.exact_divide(x + y);
    REQUIRE(q);
    CHECK(*q == x - y.scaled(2));
    CHECK_FALSE((x * x + Poly(1)).exact_divide(x + y));

    auto bigger = make_chart({"y", "z", "x"});
    Poly g = f.rechart(bigger);
    CHECK(g.eval(std::map<std::string, Rational>{{"x", 3}, {"y", 1}, {"z", 7}}) == f.eval(std::map<std::string, Rational>{{"x", 3}, {"y", 1}}));
    CHECK_THROWS_AS(f.rechart(make_chart({"x"})), ChartMismatch);
}

TEST_CASE("rational functions normalize and compare")
{
    auto c = make_chart({"x", "y"});
    Poly x = Poly::variable(c, "x");
    Poly y = Poly::variable(c, "y");
    RatFunc r(x * x - y * y, x + y);
    CHECK(r.is_polynomial());
    CHECK(r.to_poly() == x - y);
    RatFunc s(x, x * y);
    CHECK(s == RatFunc(Poly(1), y));
    RatFunc t = RatFunc(Poly(1), x) + RatFunc(Poly(1), y);
    CHECK(t == RatFunc(x + y, x * y));
    CHECK(t.partial(0) == RatFunc(Poly(-1), x * x));
    CHECK_THROWS_AS(RatFunc(Poly(1), x).eval(std::vector<Rational>{0, 1}), SingularPoint);
}

TEST_CASE("Leibniz rule holds on random polynomials")
{
    auto c = xu();
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(c, rng, 3, 4);
        Poly q = random_poly(c, rng, 3, 4);
        for (std::size_t v = 0; v < c->size(); ++v)
            CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));
    }
}

TEST_CASE("kernel_basis examples")
{
    CHECK(kernel_basis(Matrix<Rational>::identity(3)).empty());
    CHECK(kernel_basis(Matrix<Rational>(2, 3)).size() == 3);
    auto k = kernel_basis(qmat({{1, 1, 0}, {0, 0, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Rational>{-1, 1, 0});
}

TEST_CASE("generic_rank examples")
{
    auto c = make_chart({"x"});
    Poly x = Poly::variable(c, "x");
    Matrix<RatFunc> a(2, 2);
    a(0, 0) = x;
    a(1, 1) = x;
    CHECK(generic_rank(a) == 2);
    Matrix<RatFunc> b(2, 2);
    b(0, 0) = x;
    b(0, 1) = x;
    b(1, 0) = 1;
    b(1, 1) = 1;
    CHECK(generic_rank(b) == 1);
    CHECK(generic_rank(Matrix<RatFunc>(3, 2)) == 0);
}

TEST_CASE("rank plus nullity equals column count")
{
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
        Matrix<Rational> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rng.uniform(0, 2) == 0 ? Rational(0) : rng.small_rational();
        const auto kb = kernel_basis(m);
        CHECK(rank(m) + kb.size() == cols);
        for (const auto& v : kb)
            for (std::size_t i = 0; i < rows; ++i) {
                Rational s;
                for (std::size_t j = 0; j < cols; ++j)
                    s += m(i, j) * v[j];
                CHECK(s.is_zero());
            }
    }
}

TEST_CASE("generic rank dominates pointwise rank and is attained at random points")
{
    auto c = make_chart({"x", "y"});
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<RatFunc> m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m(i, j) = random_poly(c, rng, 2, 2);
        // Force a dependency half of the time.
        if (trial % 2 == 0)
            for (std::size_t j = 0; j < 3; ++j)
                m(2, j) = m(0, j) * RatFunc(Poly::variable(c, "x")) + m(1, j);
        const auto g = generic_rank(m);
        bool attained = false;
        for (int s = 0; s < 20; ++s) {
            std::vector<Rational> pt{rng.small_rational(9, 4), rng.small_rational(9, 4)};
            const auto r = rank(evaluate(m, pt));
            CHECK(r <= g);
            attained = attained || r == g;
        }
        CHECK(attained);
        // Kernel over Q(x, y) really annihilates the matrix.
        for (const auto& v : kernel_basis(m)) {
            for (std::size_t i = 0; i < 3; ++i) {
                Poly s(c);
                for (std::size_t j = 0; j < 3; ++j)
                    s += m(i, j).to_poly() * v[j];
                CHECK(s.is_zero());
            }
        }
        CHECK(kernel_basis(m).size() + g == 3);
    }
}
