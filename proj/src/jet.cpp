#include "plab/jet.hpp"

#include "plab/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace plab {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i)
{
    std::vector<unsigned> e(n, 0);
    e.at(i) = 1;
    return MultiIndex(std::move(e));
}

unsigned MultiIndex::order() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

MultiIndex MultiIndex::raised(std::size_t i) const
{
    auto e = e_;
    e.at(i) += 1;
    return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::lowered(std::size_t i) const
{
    if (e_.at(i) == 0)
        return std::nullopt;
    auto e = e_;
    e[i] -= 1;
    return MultiIndex(std::move(e));
}

std::size_t MultiIndex::first_nonzero() const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0)
            return i;
    throw std::logic_error("first_nonzero of zero multi-index");
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const
{
    auto e = e_;
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += o.e_.at(i);
    return MultiIndex(std::move(e));
}

mpz_class MultiIndex::factorial() const
{
    mpz_class f = 1;
    for (auto x : e_)
        f *= plab::factorial(x);
    return f;
}

std::string MultiIndex::str() const
{
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(e_[i]);
    }
    return s;
}

namespace {

void fill_order(std::size_t n, unsigned q, std::size_t pos, std::vector<unsigned>& cur,
                std::vector<MultiIndex>& out)
{
    if (pos + 1 == n) {
        cur[pos] = q;
        out.emplace_back(cur);
        return;
    }
    for (unsigned v = q + 1; v-- > 0;) {
        cur[pos] = v;
        fill_order(n, q - v, pos + 1, cur, out);
    }
}

} // namespace

std::vector<MultiIndex> multi_indices_of_order(std::size_t n, unsigned q)
{
    std::vector<MultiIndex> out;
    if (n == 0) {
        if (q == 0)
            out.emplace_back();
        return out;
    }
    std::vector<unsigned> cur(n, 0);
    fill_order(n, q, 0, cur, out);
    return out;
}

std::vector<MultiIndex> enumerate_multi_indices(std::size_t n, unsigned k)
{
    std::vector<MultiIndex> out;
    for (unsigned q = 0; q <= k; ++q) {
        auto level = multi_indices_of_order(n, q);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// JetChart

namespace {

std::string make_jet_name(const std::string& fiber, const MultiIndex& alpha)
{
    if (alpha.order() == 0)
        return fiber;
    return fiber + "[" + alpha.str() + "]";
}

} // namespace

JetChart::JetChart(std::vector<std::string> base, std::vector<std::string> fiber, unsigned order)
{
    using Key = std::tuple<std::vector<std::string>, std::vector<std::string>, unsigned>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const Data>> registry;

    if (base.empty())
        throw UsageError("a jet chart needs at least one base variable");
    if (fiber.empty())
        throw UsageError("a jet chart needs at least one fiber variable");

    Key key{base, fiber, order};
    std::lock_guard lock(mutex);
    if (auto it = registry.find(key); it != registry.end()) {
        data_ = it->second;
        return;
    }
    auto d = std::make_shared<Data>();
    d->base = std::move(base);
    d->fiber = std::move(fiber);
    d->order = order;
    std::vector<std::string> names = d->base;
    for (std::size_t i = 0; i < d->base.size(); ++i)
        d->coords.push_back(Coordinate{true, i, MultiIndex()});
    for (const auto& alpha : enumerate_multi_indices(d->base.size(), order)) {
        d->alpha_position.emplace(alpha.exponents(), d->alpha_position.size());
        for (std::size_t a = 0; a < d->fiber.size(); ++a) {
            names.push_back(make_jet_name(d->fiber[a], alpha));
            d->coords.push_back(Coordinate{false, a, alpha});
        }
    }
    d->chart = make_chart(std::move(names));
    d->base_chart = make_chart(d->base);
    registry.emplace(std::move(key), d);
    data_ = std::move(d);
}

std::size_t JetChart::jet_index(std::size_t a, const MultiIndex& alpha) const
{
    if (a >= m() || alpha.size() != n())
        throw ChartMismatch("jet coordinate shape does not match chart");
    if (alpha.order() > order())
        throw ChartMismatch("jet coordinate " + make_jet_name(data_->fiber[a], alpha) + " exceeds chart order " +
                            std::to_string(order()));
    return n() + data_->alpha_position.at(alpha.exponents()) * m() + a;
}

std::vector<std::size_t> JetChart::coordinates_of_order(unsigned q) const
{
    std::vector<std::size_t> out;
    for (const auto& alpha : multi_indices_of_order(n(), q))
        for (std::size_t a = 0; a < m(); ++a)
            out.push_back(jet_index(a, alpha));
    return out;
}

std::string JetChart::jet_name(std::size_t a, const MultiIndex& alpha) const
{
    return make_jet_name(data_->fiber.at(a), alpha);
}

JetChart JetChart::raised(unsigned by) const { return with_order(order() + by); }

JetChart JetChart::with_order(unsigned k) const { return JetChart(base_names(), fiber_names(), k); }

bool JetChart::same_bundle(const JetChart& o) const
{
    return base_names() == o.base_names() && fiber_names() == o.fiber_names();
}

std::size_t jet_dimension(const JetChart& chart)
{
    return chart.n() + chart.m() * binomial(chart.n() + chart.order(), chart.order());
}

unsigned jet_order_of(const JetChart& chart, const Poly& p)
{
    unsigned q = 0;
    if (!p.chart())
        return 0;
    const Poly on = p.rechart(chart.chart());
    for (std::size_t i = chart.n(); i < chart.dimension(); ++i)
        if (on.depends_on(i))
            q = std::max(q, chart.coordinate(i).alpha.order());
    return q;
}

Poly total_derivative(const JetChart& chart, const Poly& f, std::size_t i)
{
    if (i >= chart.n())
        throw ChartMismatch("total derivative direction out of range");
    const JetChart up = chart.raised();
    const Poly g = f.chart() ? f.rechart(up.chart()) : Poly::constant(up.chart(), f.constant_term());
    Poly result = g.partial(i);
    for (std::size_t idx = chart.n(); idx < chart.dimension(); ++idx) {
        if (!g.depends_on(idx))
            continue;
        const auto& c = chart.coordinate(idx);
        result += up.jet_var(c.component, c.alpha.raised(i)) * g.partial(idx);
    }
    return result;
}

std::vector<Poly> holonomic_jet_symbolic(const JetChart& chart, const PolySection& sigma)
{
    if (sigma.components.size() != chart.m())
        throw ChartMismatch("section has " + std::to_string(sigma.components.size()) + " components, expected " +
                            std::to_string(chart.m()));
    const ChartPtr& base = chart.base_chart();
    std::vector<Poly> comps;
    for (const auto& c : sigma.components)
        comps.push_back(c.chart() ? c.rechart(base) : Poly::constant(base, c.constant_term()));

    std::vector<Poly> out(chart.dimension());
    for (std::size_t i = 0; i < chart.n(); ++i)
        out[i] = Poly::variable(base, i);
    for (std::size_t idx = chart.n(); idx < chart.dimension(); ++idx) {
        const auto& c = chart.coordinate(idx);
        if (c.alpha.order() == 0) {
            out[idx] = comps[c.component];
            continue;
        }
        const std::size_t j = c.alpha.first_nonzero();
        out[idx] = out[chart.jet_index(c.component, *c.alpha.lowered(j))].partial(j);
    }
    return out;
}

std::vector<Rational> holonomic_jet(const JetChart& chart, const PolySection& sigma, std::span<const Rational> x0)
{
    if (x0.size() != chart.n())
        throw IncompletePoint("base point has wrong dimension");
    std::vector<Rational> out;
    for (const auto& p : holonomic_jet_symbolic(chart, sigma))
        out.push_back(p.eval(x0));
    return out;
}

} // namespace plab
