#include "plab/jet_groupoid.hpp"

#include <map>
#include <sstream>

namespace plab {

namespace {

/// Truncated power series in n variables up to total order k, indexed by
/// enumerate_multi_indices(n, k).
class SeriesSpace {
public:
    using Series = std::vector<Rational>;

    SeriesSpace(std::size_t n, unsigned k) : n_(n), k_(k), indices_(enumerate_multi_indices(n, k))
    {
        for (std::size_t t = 0; t < indices_.size(); ++t)
            position_.emplace(indices_[t].exponents(), t);
        sum_.assign(indices_.size(), std::vector<std::ptrdiff_t>(indices_.size(), -1));
        for (std::size_t a = 0; a < indices_.size(); ++a)
            for (std::size_t b = 0; b < indices_.size(); ++b)
                if (indices_[a].order() + indices_[b].order() <= k_)
                    sum_[a][b] = static_cast<std::ptrdiff_t>(position_.at((indices_[a] + indices_[b]).exponents()));
    }

    std::size_t size() const { return indices_.size(); }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    std::size_t position(const MultiIndex& m) const { return position_.at(m.exponents()); }

    Series zero() const { return Series(size()); }
    Series one() const
    {
        Series s = zero();
        s[0] = 1;
        return s;
    }

    Series mul(const Series& a, const Series& b) const
    {
        Series c = zero();
        for (std::size_t i = 0; i < size(); ++i) {
            if (a[i].is_zero())
                continue;
            for (std::size_t j = 0; j < size(); ++j) {
                if (b[j].is_zero() || sum_[i][j] < 0)
                    continue;
                c[static_cast<std::size_t>(sum_[i][j])] += a[i] * b[j];
            }
        }
        return c;
    }

    /// outer_i(inner(h)) for series without constant term in `inner`.
    std::vector<Series> compose(const std::vector<Series>& outer, const std::vector<Series>& inner) const
    {
        std::vector<Series> powers(size());
        powers[0] = one();
        for (std::size_t t = 1; t < size(); ++t) {
            const MultiIndex& g = indices_[t];
            const std::size_t j = g.first_nonzero();
            powers[t] = mul(powers[position(*g.lowered(j))], inner[j]);
        }
        std::vector<Series> out;
        for (const auto& o : outer) {
            Series r = zero();
            for (std::size_t t = 0; t < size(); ++t) {
                if (o[t].is_zero())
                    continue;
                for (std::size_t s = 0; s < size(); ++s)
                    if (!powers[t][s].is_zero())
                        r[s] += o[t] * powers[t][s];
            }
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    std::size_t n_;
    unsigned k_;
    std::vector<MultiIndex> indices_;
    std::map<std::vector<unsigned>, std::size_t> position_;
    std::vector<std::vector<std::ptrdiff_t>> sum_;
};

std::vector<SeriesSpace::Series> to_series(const JetOfMap& j)
{
    std::vector<SeriesSpace::Series> out;
    for (const auto& c : j.coefficients()) {
        SeriesSpace::Series s;
        s.reserve(c.size() + 1);
        s.emplace_back(0);
        s.insert(s.end(), c.begin(), c.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Rational>> from_series(const std::vector<SeriesSpace::Series>& s)
{
    std::vector<std::vector<Rational>> out;
    for (const auto& c : s)
        out.emplace_back(c.begin() + 1, c.end());
    return out;
}

} // namespace

JetOfMap::JetOfMap(unsigned order, std::vector<Rational> source, std::vector<Rational> target,
                   std::vector<std::vector<Rational>> coefficients)
    : order_(order), source_(std::move(source)), target_(std::move(target)), coefficients_(std::move(coefficients))
{
    const std::size_t n = source_.size();
    if (n == 0 || target_.size() != n || coefficients_.size() != n)
        throw ChartMismatch("jet source, target and coefficient table must share dimension");
    if (order_ == 0)
        throw OrderMismatch("jets in the groupoid need order at least 1");
    const std::size_t expected = binomial(n + order_, order_) - 1;
    for (const auto& c : coefficients_)
        if (c.size() != expected)
            throw ChartMismatch("coefficient table has wrong length");
    if (!inverse(linear_part()))
        throw SingularPoint("jet has a singular linear part");
}

JetOfMap JetOfMap::identity(std::vector<Rational> point, unsigned order)
{
    const std::size_t n = point.size();
    const std::size_t len = binomial(n + order, order) - 1;
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(len));
    for (std::size_t i = 0; i < n; ++i)
        c[i][i] = 1; // order-1 indices come first, as unit vectors e_1..e_n
    auto target = point;
    return JetOfMap(order, std::move(point), std::move(target), std::move(c));
}

const Rational& JetOfMap::coefficient(std::size_t i, const MultiIndex& beta) const
{
    const auto all = enumerate_multi_indices(n(), order_);
    for (std::size_t t = 1; t < all.size(); ++t)
        if (all[t] == beta)
            return coefficients_.at(i).at(t - 1);
    throw ChartMismatch("multi-index outside the jet's range");
}

Matrix<Rational> JetOfMap::linear_part() const
{
    const std::size_t n = source_.size();
    Matrix<Rational> l(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            l(i, j) = coefficients_[i][j];
    return l;
}

std::string JetOfMap::str() const
{
    std::ostringstream os;
    auto vec = [&](const std::vector<Rational>& v) {
        os << "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? ", " : "") << v[i];
        os << ")";
    };
    os << "order " << order_ << " source ";
    vec(source_);
    os << " target ";
    vec(target_);
    const auto idx = enumerate_multi_indices(n(), order_);
    for (std::size_t i = 0; i < n(); ++i) {
        os << " | c" << i + 1 << ":";
        for (std::size_t t = 1; t < idx.size(); ++t)
            os << " [" << idx[t].str() << "]=" << coefficients_[i][t - 1];
    }
    return os.str();
}

JetOfMap jet_compose(const JetOfMap& b, const JetOfMap& a)
{
    if (a.order() != b.order())
        throw OrderMismatch("jet orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
    if (a.n() != b.n())
        throw ChartMismatch("jets act on spaces of different dimension");
    if (a.target() != b.source())
        throw SourceTargetMismatch("target of the first jet is not the source of the second");
    SeriesSpace space(a.n(), a.order());
    auto composed = space.compose(to_series(b), to_series(a));
    return JetOfMap(a.order(), a.source(), b.target(), from_series(composed));
}

JetOfMap jet_invert(const JetOfMap& a)
{
    const std::size_t n = a.n();
    const unsigned k = a.order();
    SeriesSpace space(n, k);
    const auto linv = *inverse(a.linear_part());

    // Nonlinear remainder N = A - linear part.
    auto nonlinear = to_series(a);
    for (auto& s : nonlinear)
        for (std::size_t j = 0; j < n; ++j)
            s[1 + j] = 0;

    // Fixed point G = L^{-1}(y - N(G)); each pass fixes one more order.
    std::vector<SeriesSpace::Series> g(n, space.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i][1 + j] = linv(i, j);
    for (unsigned pass = 1; pass < k; ++pass) {
        auto ng = space.compose(nonlinear, g);
        std::vector<SeriesSpace::Series> next(n, space.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (linv(i, j).is_zero())
                    continue;
                next[i][1 + j] += linv(i, j);
                for (std::size_t s = 0; s < space.size(); ++s)
                    if (!ng[j][s].is_zero())
                        next[i][s] -= linv(i, j) * ng[j][s];
            }
        g = std::move(next);
    }
    return JetOfMap(k, a.target(), a.source(), from_series(g));
}

JetOfMap jet_of_polynomial_map(const std::vector<Poly>& map, std::span<const Rational> point, unsigned order)
{
    const std::size_t n = point.size();
    if (map.size() != n)
        throw ChartMismatch("polynomial map must be a self-map of R^n");
    const auto idx = enumerate_multi_indices(n, order);
    std::vector<Rational> target;
    std::vector<std::vector<Rational>> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (map[i].chart() && map[i].chart()->size() != n)
            throw ChartMismatch("polynomial map chart must have n variables");
        std::map<std::vector<unsigned>, Poly> derivs;
        derivs.emplace(idx[0].exponents(), map[i]);
        target.push_back(map[i].eval(point));
        for (std::size_t t = 1; t < idx.size(); ++t) {
            const std::size_t j = idx[t].first_nonzero();
            Poly d = derivs.at(idx[t].lowered(j)->exponents()).partial(j);
            coeffs[i].push_back(d.eval(point) / Rational(idx[t].factorial(), 1));
            derivs.emplace(idx[t].exponents(), std::move(d));
        }
    }
    return JetOfMap(order, std::vector<Rational>(point.begin(), point.end()), std::move(target), std::move(coeffs));
}

std::vector<Poly> compose_maps(const std::vector<Poly>& f, const std::vector<Poly>& g)
{
    std::vector<Poly> out;
    for (const auto& p : f)
        out.push_back(p.chart() ? p.substitute(g) : p);
    return out;
}

JetOfMap conjugate_jet(const std::vector<Poly>& x, const std::vector<Poly>& x_inverse, const JetOfMap& a)
{
    const unsigned k = a.order();
    const auto round_trip = compose_maps(x_inverse, x);
    for (const auto* p : {&a.source(), &a.target()}) {
        if (jet_of_polynomial_map(round_trip, *p, k) != JetOfMap::identity(*p, k))
            throw InverseCheckFailed("declared inverse does not invert the map to order " + std::to_string(k));
    }
    const JetOfMap jx_target = jet_of_polynomial_map(x, a.target(), k);
    std::vector<Rational> image_source;
    for (const auto& p : x)
        image_source.push_back(p.eval(a.source()));
    const JetOfMap jxinv = jet_of_polynomial_map(x_inverse, image_source, k);
    return jet_compose(jet_compose(jx_target, a), jxinv);
}

std::vector<Rational> jet_coordinates(const JetChart& chart, const JetOfMap& jet)
{
    if (chart.n() != jet.n() || chart.m() != jet.n() || chart.order() != jet.order())
        throw ChartMismatch("groupoid chart must have n = m = jet dimension and matching order");
    std::vector<Rational> out(chart.dimension());
    for (std::size_t i = 0; i < chart.n(); ++i)
        out[i] = jet.source()[i];
    const auto idx = enumerate_multi_indices(jet.n(), jet.order());
    for (std::size_t a = 0; a < chart.m(); ++a) {
        out[chart.jet_index(a, idx[0])] = jet.target()[a];
        for (std::size_t t = 1; t < idx.size(); ++t)
            out[chart.jet_index(a, idx[t])] = jet.coefficients()[a][t - 1] * Rational(idx[t].factorial(), 1);
    }
    return out;
}

JetOfMap jet_from_coordinates(const JetChart& chart, std::span<const Rational> coords)
{
    if (chart.n() != chart.m())
        throw ChartMismatch("groupoid chart must have as many fiber as base variables");
    if (coords.size() != chart.dimension())
        throw IncompletePoint("coordinate vector has wrong length");
    const std::size_t n = chart.n();
    std::vector<Rational> source(coords.begin(), coords.begin() + n);
    std::vector<Rational> target;
    std::vector<std::vector<Rational>> coeffs(n);
    const auto idx = enumerate_multi_indices(n, chart.order());
    for (std::size_t a = 0; a < n; ++a) {
        target.push_back(coords[chart.jet_index(a, idx[0])]);
        for (std::size_t t = 1; t < idx.size(); ++t)
            coeffs[a].push_back(coords[chart.jet_index(a, idx[t])] / Rational(idx[t].factorial(), 1));
    }
    return JetOfMap(chart.order(), std::move(source), std::move(target), std::move(coeffs));
}

} // namespace plab
