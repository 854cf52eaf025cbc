#include "plab/diff_form.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace plab {

namespace {

Rational determinant(Matrix<Rational> m)
{
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero())
                continue;
            const Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

std::string coefficient_prefix(const RatFunc& c, bool first)
{
    if (c.is_constant()) {
        const Rational v = c.constant_value();
        std::string sign = v.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        const Rational a = v.abs();
        return sign + (a.is_one() ? "" : a.str() + "*");
    }
    const bool monomial = c.is_polynomial() && c.num().terms().size() == 1 && c.den().constant_value().is_one();
    if (monomial) {
        const Rational lead = c.num().terms().begin()->second;
        if (lead.sign() < 0)
            return (first ? "-" : " - ") + (-c).str() + "*";
        return (first ? "" : " + ") + c.str() + "*";
    }
    return (first ? "(" : " + (") + c.str() + ")*";
}

} // namespace

DiffForm::DiffForm(ChartPtr chart, unsigned degree) : chart_(std::move(chart)), degree_(degree)
{
    if (!chart_)
        throw ChartMismatch("differential forms need a chart");
}

DiffForm DiffForm::function(ChartPtr chart, const RatFunc& f)
{
    DiffForm w(std::move(chart), 0);
    w.add_term({}, f);
    return w;
}

DiffForm DiffForm::differential(ChartPtr chart, std::size_t i)
{
    if (i >= chart->size())
        throw ChartMismatch("differential index out of range");
    DiffForm w(std::move(chart), 1);
    w.add_term({i}, RatFunc(1));
    return w;
}

DiffForm DiffForm::differential(ChartPtr chart, std::string_view name)
{
    const std::size_t i = chart->require(name);
    return differential(std::move(chart), i);
}

RatFunc DiffForm::coefficient(const IndexSet& indices) const
{
    auto it = terms_.find(indices);
    return it == terms_.end() ? RatFunc(0) : it->second;
}

void DiffForm::add_term(IndexSet indices, const RatFunc& c)
{
    if (indices.size() != degree_)
        throw std::invalid_argument("form term has wrong degree");
    if (c.is_zero())
        return;
    // Bubble sort to track the permutation sign.
    bool negative = false;
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j + 1 < indices.size() - i; ++j) {
            if (indices[j] == indices[j + 1])
                return;
            if (indices[j] > indices[j + 1]) {
                std::swap(indices[j], indices[j + 1]);
                negative = !negative;
            }
        }
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
        if (indices[i] == indices[i + 1])
            return;
    for (auto i : indices)
        if (i >= chart_->size())
            throw ChartMismatch("differential index out of range");
    RatFunc term = negative ? -c : c;
    if (term.chart() && !same_chart(term.chart(), chart_))
        term = term.rechart(chart_);
    auto [it, inserted] = terms_.emplace(std::move(indices), term);
    if (!inserted) {
        it->second += term;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

DiffForm DiffForm::operator-() const
{
    DiffForm r(chart_, degree_);
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

DiffForm& DiffForm::operator+=(const DiffForm& o)
{
    if (o.degree_ != degree_)
        throw std::invalid_argument("adding forms of different degree");
    if (!same_chart(chart_, o.chart_))
        throw ChartMismatch("adding forms on different charts");
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o)
{
    return *this += -o;
}

DiffForm DiffForm::scaled(const RatFunc& f) const
{
    DiffForm r(chart_, degree_);
    for (const auto& [k, c] : terms_)
        r.add_term(k, c * f);
    return r;
}

DiffForm DiffForm::rechart(const ChartPtr& target) const
{
    DiffForm r(target, degree_);
    for (const auto& [k, c] : terms_) {
        IndexSet mapped;
        for (auto i : k)
            mapped.push_back(target->require(chart_->name(i)));
        r.add_term(std::move(mapped), c.rechart(target));
    }
    return r;
}

DiffForm DiffForm::pullback(const ChartPtr& target, const std::vector<Poly>& images) const
{
    if (images.size() != chart_->size())
        throw ChartMismatch("pullback needs one image per chart variable");
    std::vector<Poly> lifted;
    std::vector<DiffForm> d_images;
    for (const auto& p : images) {
        Poly q = p.chart() ? p.rechart(target) : Poly::constant(target, p.constant_term());
        DiffForm dq(target, 1);
        for (std::size_t j = 0; j < target->size(); ++j)
            dq.add_term({j}, RatFunc(q.partial(j)));
        d_images.push_back(std::move(dq));
        lifted.push_back(std::move(q));
    }
    DiffForm r(target, degree_);
    for (const auto& [k, c] : terms_) {
        DiffForm piece = DiffForm::function(target, c.chart() ? c.substitute(lifted) : c);
        for (auto i : k)
            piece = wedge(piece, d_images[i]);
        r += piece;
    }
    return r;
}

std::map<IndexSet, Rational> DiffForm::at(std::span<const Rational> point) const
{
    std::map<IndexSet, Rational> out;
    for (const auto& [k, c] : terms_) {
        Rational v = c.eval(point);
        if (!v.is_zero())
            out.emplace(k, v);
    }
    return out;
}

Rational DiffForm::evaluate(std::span<const Rational> point, const std::vector<std::vector<Rational>>& vectors) const
{
    if (vectors.size() != degree_)
        throw std::invalid_argument("form evaluated on wrong number of vectors");
    Rational total = 0;
    for (const auto& [k, v] : at(point)) {
        Matrix<Rational> m(degree_, degree_);
        for (std::size_t r = 0; r < degree_; ++r)
            for (std::size_t s = 0; s < degree_; ++s)
                m(r, s) = vectors[r].at(k[s]);
        total += v * determinant(m);
    }
    return total;
}

std::string DiffForm::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (k.empty()) {
            std::string s = c.str();
            out += first ? s : (s[0] == '-' ? " - " + s.substr(1) : " + " + s);
            first = false;
            continue;
        }
        out += coefficient_prefix(c, first);
        for (std::size_t i = 0; i < k.size(); ++i)
            out += (i ? "^d" : "d") + chart_->name(k[i]);
        first = false;
    }
    return out;
}

bool operator==(const DiffForm& a, const DiffForm& b)
{
    if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size())
        return false;
    if (a.terms_.empty())
        return true;
    if (!same_chart(a.chart_, b.chart_))
        return false;
    return a.terms_ == b.terms_;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b)
{
    if (!same_chart(a.chart(), b.chart()))
        throw ChartMismatch("wedge of forms on different charts");
    DiffForm r(a.chart(), a.degree() + b.degree());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            IndexSet k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add_term(std::move(k), ca * cb);
        }
    return r;
}

DiffForm exterior_derivative(const DiffForm& w)
{
    DiffForm r(w.chart(), w.degree() + 1);
    for (const auto& [k, c] : w.terms())
        for (std::size_t j = 0; j < w.chart()->size(); ++j) {
            RatFunc dc = c.partial(j);
            if (dc.is_zero())
                continue;
            IndexSet idx{j};
            idx.insert(idx.end(), k.begin(), k.end());
            r.add_term(std::move(idx), dc);
        }
    return r;
}

Matrix<RatFunc> PfaffSystem::coefficient_matrix() const
{
    Matrix<RatFunc> m(generators.size(), chart->size());
    for (std::size_t r = 0; r < generators.size(); ++r) {
        const auto& g = generators[r];
        if (g.degree() != 1)
            throw UnsupportedForm("Pfaffian systems consist of 1-forms");
        for (const auto& [k, c] : g.terms())
            m(r, k[0]) = c;
    }
    return m;
}

std::string PfaffSystem::str() const
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < generators.size(); ++i)
        os << (i ? ", " : "") << generators[i].str();
    os << "}";
    return os.str();
}

std::vector<DiffForm> independent_forms(const ChartPtr& chart, const std::vector<DiffForm>& forms)
{
    std::vector<DiffForm> kept;
    for (const auto& f : forms) {
        if (f.is_zero())
            continue;
        PfaffSystem trial{chart, kept};
        trial.generators.push_back(f);
        if (generic_rank(trial.coefficient_matrix()) == trial.generators.size())
            kept.push_back(f);
    }
    return kept;
}

} // namespace plab
