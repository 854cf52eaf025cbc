#include "plab/contact.hpp"

#include "plab/errors.hpp"

namespace plab {

namespace {

RatFunc total_derivative_rf(const JetChart& chart, const RatFunc& f, std::size_t i)
{
    const ChartPtr& up = chart.raised().chart();
    auto lift = [&](const Poly& p) {
        return p.chart() ? total_derivative(chart, p.rechart(chart.chart()), i) : Poly::constant(up, 0);
    };
    const Poly num = f.num().chart() ? f.num().rechart(up) : f.num();
    const Poly den = f.den().chart() ? f.den().rechart(up) : f.den();
    if (f.is_polynomial())
        return RatFunc(lift(f.num()), den);
    return RatFunc(lift(f.num()) * den - num * lift(f.den()), den * den);
}

} // namespace

PfaffSystem ContactSystem::as_pfaff() const
{
    PfaffSystem s{chart.chart(), {}};
    for (const auto& g : generators)
        s.generators.push_back(g.form);
    return s;
}

DiffForm contact_form(const JetChart& chart, std::size_t a, const MultiIndex& alpha)
{
    if (alpha.order() + 1 > chart.order())
        throw OrderMismatch("contact form needs a chart of order above |alpha|");
    const ChartPtr& c = chart.chart();
    DiffForm w = DiffForm::differential(c, chart.jet_index(a, alpha));
    for (std::size_t i = 0; i < chart.n(); ++i)
        w.add_term({i}, RatFunc(-chart.jet_var(a, alpha.raised(i))));
    return w;
}

ContactSystem contact_generators(const JetChart& chart)
{
    ContactSystem s{chart, {}};
    if (chart.order() == 0)
        return s;
    for (std::size_t idx = chart.n(); idx < chart.dimension(); ++idx) {
        const auto& coord = chart.coordinate(idx);
        if (coord.alpha.order() + 1 > chart.order())
            break;
        s.generators.push_back({coord.component, coord.alpha, contact_form(chart, coord.component, coord.alpha)});
    }
    return s;
}

DiffForm total_lie_derivative(const JetChart& chart, const DiffForm& w, std::size_t i)
{
    if (i >= chart.n())
        throw ChartMismatch("base direction out of range");
    const JetChart up = chart.raised();
    const ChartPtr& uc = up.chart();
    const DiffForm on_chart = same_chart(w.chart(), chart.chart()) ? w : w.rechart(chart.chart());

    // d(D_i z) for each chart coordinate z: zero for base coordinates.
    std::vector<std::optional<std::size_t>> raised_index(chart.dimension());
    for (std::size_t z = chart.n(); z < chart.dimension(); ++z) {
        const auto& c = chart.coordinate(z);
        raised_index[z] = up.jet_index(c.component, c.alpha.raised(i));
    }

    DiffForm out(uc, w.degree());
    for (const auto& [k, coeff] : on_chart.terms()) {
        IndexSet lifted(k);
        out.add_term(lifted, total_derivative_rf(chart, coeff, i));
        const RatFunc c_up = coeff.chart() ? coeff.rechart(uc) : coeff;
        for (std::size_t r = 0; r < k.size(); ++r) {
            if (!raised_index[k[r]])
                continue;
            IndexSet replaced(k);
            replaced[r] = *raised_index[k[r]];
            out.add_term(std::move(replaced), c_up);
        }
    }
    return out;
}

PfaffSystem restrict_contact(const PdeSystem& s)
{
    if (!s.explicit_form())
        throw UnsupportedForm("contact restriction needs an explicit system");
    const JetChart& chart = s.chart();
    const ChartPtr target = s.parametric_chart();
    std::vector<Poly> images;
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
        auto it = s.explicit_form()->find(i);
        images.push_back(it == s.explicit_form()->end() ? Poly::variable(target, chart.chart()->name(i))
                                                        : it->second.rechart(target));
    }
    std::vector<DiffForm> forms;
    for (const auto& g : contact_generators(chart).generators)
        forms.push_back(g.form.pullback(target, images));
    return PfaffSystem{target, independent_forms(target, forms)};
}

bool is_holonomic_integral(const JetChart& chart, const std::vector<Poly>& tau)
{
    if (tau.size() != chart.dimension())
        throw ChartMismatch("assignment must give every chart coordinate");
    const ChartPtr& base = chart.base_chart();
    for (const auto& g : contact_generators(chart).generators)
        if (!g.form.pullback(base, tau).is_zero())
            return false;
    return true;
}

} // namespace plab
