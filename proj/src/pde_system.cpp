#include "plab/pde_system.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace plab {

namespace {

Poly substitute_solved(const ChartPtr& chart, const SolvedForm& solved, const Poly& f)
{
    bool touches = false;
    for (const auto& [v, e] : solved)
        if (f.depends_on(v)) {
            touches = true;
            break;
        }
    if (!touches)
        return f;
    auto images = chart_variables(chart);
    for (const auto& [v, e] : solved)
        images[v] = e;
    return f.substitute(images);
}

std::optional<std::size_t> pick_leader(const JetChart& chart, const Poly& f)
{
    std::optional<std::size_t> best;
    unsigned best_order = 0;
    for (std::size_t v = chart.n(); v < chart.dimension(); ++v) {
        if (f.degree_in(v) != 1 || !f.partial(v).is_constant())
            continue;
        const unsigned ord = chart.coordinate(v).alpha.order();
        if (!best || ord > best_order) {
            best = v;
            best_order = ord;
        }
    }
    return best;
}

} // namespace

PdeSystem::PdeSystem(JetChart chart, std::vector<Poly> equations, std::string name)
    : chart_(std::move(chart)), name_(std::move(name))
{
    for (auto& e : equations) {
        if (e.is_zero())
            continue;
        equations_.push_back(e.chart() ? e.rechart(chart_.chart()) : Poly::constant(chart_.chart(), e.constant_term()));
    }
    triangularize();
}

PdeSystem PdeSystem::from_solved(JetChart chart, const SolvedForm& solved, std::string name)
{
    std::vector<Poly> eqs;
    SolvedForm normalized;
    for (const auto& [v, e] : solved) {
        if (v < chart.n() || v >= chart.dimension())
            throw UsageError("solved coordinate must be a jet coordinate of the chart");
        Poly expr = e.chart() ? e.rechart(chart.chart()) : Poly::constant(chart.chart(), e.constant_term());
        for (const auto& [w, unused] : solved)
            if (expr.depends_on(w))
                throw UsageError("solved coordinate " + chart.chart()->name(w) + " occurs on a right-hand side");
        eqs.push_back(Poly::variable(chart.chart(), v) - expr);
        normalized.emplace(v, std::move(expr));
    }
    PdeSystem s(std::move(chart), std::move(eqs), std::move(name));
    s.solved_ = std::move(normalized);
    s.inconsistent_ = false;
    return s;
}

void PdeSystem::triangularize()
{
    SolvedForm solved;
    const ChartPtr& c = chart_.chart();
    for (const auto& eq : equations_) {
        Poly f = substitute_solved(c, solved, eq);
        if (f.is_zero())
            continue;
        if (f.is_constant()) {
            inconsistent_ = true;
            solved_.reset();
            return;
        }
        auto leader = pick_leader(chart_, f);
        if (!leader) {
            solved_.reset();
            return;
        }
        const std::size_t v = *leader;
        const Rational coeff = f.partial(v).constant_value();
        Poly expr = (f - Poly::variable(c, v).scaled(coeff)).scaled(-coeff.inverse());
        auto images = chart_variables(c);
        images[v] = expr;
        for (auto& [w, e] : solved)
            if (e.depends_on(v))
                e = e.substitute(images);
        solved.emplace(v, std::move(expr));
    }
    solved_ = std::move(solved);
}

std::vector<std::size_t> PdeSystem::parametric_coordinates() const
{
    if (!solved_)
        throw UnsupportedForm("system has no explicit solved form");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < chart_.dimension(); ++i)
        if (!solved_->count(i))
            out.push_back(i);
    return out;
}

ChartPtr PdeSystem::parametric_chart() const
{
    std::vector<std::string> names;
    for (auto i : parametric_coordinates())
        names.push_back(chart_.chart()->name(i));
    return make_chart(std::move(names));
}

Poly PdeSystem::reduce(const Poly& f) const
{
    if (!solved_)
        throw UnsupportedForm("system has no explicit solved form");
    Poly g = f.chart() ? f.rechart(chart_.chart()) : f;
    return substitute_solved(chart_.chart(), *solved_, g);
}

std::vector<Rational> PdeSystem::complete_point(std::span<const Rational> parametric) const
{
    const auto params = parametric_coordinates();
    if (parametric.size() != params.size())
        throw IncompletePoint("expected " + std::to_string(params.size()) + " parametric values");
    std::vector<Rational> point(chart_.dimension());
    for (std::size_t i = 0; i < params.size(); ++i)
        point[params[i]] = parametric[i];
    for (const auto& [v, e] : *solved_)
        point[v] = e.eval(point);
    return point;
}

bool PdeSystem::contains(std::span<const Rational> point) const
{
    if (point.size() != chart_.dimension())
        throw IncompletePoint("point has " + std::to_string(point.size()) + " coordinates, chart has " +
                              std::to_string(chart_.dimension()));
    for (const auto& e : equations_)
        if (!e.eval(point).is_zero())
            return false;
    return true;
}

Matrix<RatFunc> PdeSystem::jacobian() const
{
    Matrix<RatFunc> j(equations_.size(), chart_.dimension());
    for (std::size_t r = 0; r < equations_.size(); ++r)
        for (std::size_t c = 0; c < chart_.dimension(); ++c)
            j(r, c) = RatFunc(equations_[r].partial(c));
    return j;
}

std::string PdeSystem::str() const
{
    if (equations_.empty())
        return "(no equations)";
    std::ostringstream os;
    for (std::size_t i = 0; i < equations_.size(); ++i)
        os << (i ? "; " : "") << equations_[i].str() << " = 0";
    return os.str();
}

PdeSystem prolong(const PdeSystem& s, unsigned levels)
{
    if (levels == 0)
        return s;
    const JetChart& base = s.chart();
    const JetChart target = base.with_order(base.order() + levels);
    const std::size_t n = base.n();
    std::map<std::vector<unsigned>, std::vector<Poly>> derived;
    std::vector<Poly> all;
    for (const auto& beta : enumerate_multi_indices(n, levels)) {
        std::vector<Poly> level;
        if (beta.order() == 0) {
            level = s.equations();
        } else {
            const std::size_t j = beta.first_nonzero();
            const JetChart from = base.with_order(base.order() + beta.order() - 1);
            for (const auto& f : derived.at(beta.lowered(j)->exponents()))
                level.push_back(total_derivative(from, f, j));
        }
        for (const auto& f : level)
            all.push_back(f.rechart(target.chart()));
        derived.emplace(beta.exponents(), std::move(level));
    }
    return PdeSystem(target, std::move(all), s.name());
}

std::size_t generic_dimension(const PdeSystem& s)
{
    if (s.inconsistent())
        throw EmptyLocus("equations reduce to a nonzero constant");
    const auto& eqs = s.equations();
    bool any_constant = false;
    for (const auto& e : eqs)
        any_constant = any_constant || !e.constant_term().is_zero();
    if (any_constant) {
        std::map<Exponent, std::size_t, GrlexLess> columns;
        for (const auto& e : eqs)
            for (const auto& [ex, c] : e.terms())
                columns.emplace(ex, 0);
        std::size_t next = 0;
        for (auto& [ex, col] : columns)
            col = next++;
        Matrix<Rational> m(eqs.size(), columns.size());
        for (std::size_t r = 0; r < eqs.size(); ++r)
            for (const auto& [ex, c] : eqs[r].terms())
                m(r, columns.at(ex)) = c;
        const std::size_t base_rank = rank(m);
        std::vector<Rational> unit(columns.size());
        unit[columns.at(Exponent(s.chart().dimension(), 0))] = 1;
        m.append_row(unit);
        if (rank(m) == base_rank)
            throw EmptyLocus("a nonzero constant lies in the span of the equations");
    }
    if (eqs.empty())
        return s.chart().dimension();
    return s.chart().dimension() - generic_rank(s.jacobian());
}

RegularityVerdict regularity_check(const PdeSystem& s, const std::vector<std::vector<Rational>>& points)
{
    RegularityVerdict v;
    if (s.equations().empty())
        return v;
    const auto j = s.jacobian();
    v.generic_rank = generic_rank(j);
    v.point_rank = v.generic_rank;
    for (const auto& p : points) {
        if (!s.contains(p))
            throw NotOnLocus("point does not satisfy the equations");
        const std::size_t r = rank(evaluate(j, p));
        if (r != v.generic_rank) {
            v.regular = false;
            v.point_rank = r;
            v.singular_point = p;
            return v;
        }
    }
    return v;
}

bool is_solution(const PdeSystem& s, const PolySection& sigma)
{
    const auto jet = holonomic_jet_symbolic(s.chart(), sigma);
    for (const auto& e : s.equations())
        if (!e.substitute(jet).is_zero())
            return false;
    return true;
}

PdeSystem tangency_oracle(const PdeSystem& s)
{
    if (!s.explicit_form())
        throw UnsupportedForm("tangency oracle needs an explicit system");
    const JetChart& chart = s.chart();
    const JetChart up = chart.raised();
    const ChartPtr& uc = up.chart();
    std::vector<Poly> eqs;
    for (const auto& [lead, expr] : *s.explicit_form())
        eqs.push_back(Poly::variable(uc, lead) - expr.rechart(uc));
    for (const auto& [lead, expr] : *s.explicit_form()) {
        const auto& lc = chart.coordinate(lead);
        for (std::size_t i = 0; i < chart.n(); ++i) {
            // d/dx^i of expr along the parametrized section.
            Poly rhs = expr.partial(i).rechart(uc);
            for (std::size_t p = chart.n(); p < chart.dimension(); ++p) {
                Poly dp = expr.partial(p);
                if (dp.is_zero())
                    continue;
                const auto& pc = chart.coordinate(p);
                rhs += dp.rechart(uc) * up.jet_var(pc.component, pc.alpha.raised(i));
            }
            eqs.push_back(up.jet_var(lc.component, lc.alpha.raised(i)) - rhs);
        }
    }
    return PdeSystem(up, std::move(eqs), s.name());
}

std::optional<std::vector<Rational>> sample_locus_point(const PdeSystem& s, Rng& rng)
{
    const std::size_t dim = s.chart().dimension();
    auto random_point = [&] {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < dim; ++i)
            p.push_back(rng.small_rational());
        return p;
    };
    if (s.explicit_form()) {
        std::vector<Rational> params;
        for (std::size_t i = 0, np = s.parametric_coordinates().size(); i < np; ++i)
            params.push_back(rng.small_rational());
        return s.complete_point(params);
    }
    if (s.inconsistent())
        return std::nullopt;
    if (s.equations().empty())
        return random_point();

    // Preference for pivots: higher jet order first, then chart order.
    std::vector<std::size_t> preference(dim);
    std::iota(preference.begin(), preference.end(), 0);
    auto order_of = [&](std::size_t i) {
        const auto& c = s.chart().coordinate(i);
        return c.is_base ? -1 : static_cast<int>(c.alpha.order());
    };
    std::stable_sort(preference.begin(), preference.end(),
                     [&](std::size_t a, std::size_t b) { return order_of(a) > order_of(b); });

    const auto jac = s.jacobian();
    const auto& eqs = s.equations();
    for (int attempt = 0; attempt < 10; ++attempt) {
        auto p = random_point();
        const auto jp = evaluate(jac, p);
        std::vector<std::size_t> pivots;
        Matrix<Rational> cols_t;
        std::size_t current = 0;
        for (auto c : preference) {
            std::vector<Rational> col;
            for (std::size_t r = 0; r < jp.rows(); ++r)
                col.push_back(jp(r, c));
            Matrix<Rational> trial = cols_t;
            trial.append_row(col);
            const std::size_t rk = rank(trial);
            if (rk > current) {
                cols_t = std::move(trial);
                current = rk;
                pivots.push_back(c);
            }
        }
        if (pivots.empty())
            continue;
        std::map<std::size_t, std::size_t> pivot_slot;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            pivot_slot.emplace(pivots[i], i);

        Matrix<Rational> a(eqs.size(), pivots.size());
        std::vector<Rational> b(eqs.size());
        for (std::size_t r = 0; r < eqs.size(); ++r)
            for (const auto& [ex, c] : eqs[r].terms()) {
                Rational value = c;
                std::optional<std::size_t> slot;
                for (std::size_t v = 0; v < dim; ++v) {
                    if (ex[v] == 0)
                        continue;
                    auto it = pivot_slot.find(v);
                    if (it == pivot_slot.end()) {
                        value *= p[v].pow(ex[v]);
                        continue;
                    }
                    if (ex[v] > 1 || slot)
                        return std::nullopt; // nonlinear in the pivots
                    slot = it->second;
                }
                if (slot)
                    a(r, *slot) += value;
                else
                    b[r] -= value;
            }
        auto y = solve(a, b);
        if (!y)
            continue;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            p[pivots[i]] = (*y)[i];
        if (s.contains(p))
            return p;
    }
    return std::nullopt;
}

} // namespace plab
