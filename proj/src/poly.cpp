#include "plab/poly.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plab {

Chart::Chart(std::vector<std::string> names) : names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw ChartMismatch("duplicate coordinate name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Chart::require(std::string_view name) const
{
    if (auto i = index_of(name))
        return *i;
    throw ChartMismatch("unknown variable '" + std::string(name) + "'");
}

ChartPtr make_chart(std::vector<std::string> names)
{
    return std::make_shared<const Chart>(std::move(names));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

unsigned total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const
{
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db)
        return da < db;
    // Same degree: a < b when at the first difference a has the smaller exponent.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c)
{
    if (!c.is_zero())
        terms_.emplace(Exponent{}, c);
}

Poly Poly::constant(ChartPtr chart, const Rational& c)
{
    Poly p(std::move(chart));
    if (!c.is_zero())
        p.terms_.emplace(Exponent(p.chart_->size(), 0), c);
    return p;
}

Poly Poly::variable(ChartPtr chart, std::size_t index)
{
    if (!chart || index >= chart->size())
        throw ChartMismatch("variable index out of range");
    Exponent e(chart->size(), 0);
    e[index] = 1;
    Poly p(std::move(chart));
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::variable(ChartPtr chart, std::string_view name)
{
    const std::size_t i = chart->require(name);
    return variable(std::move(chart), i);
}

Poly Poly::monomial(ChartPtr chart, Exponent exponent, const Rational& c)
{
    if (exponent.size() != chart->size())
        throw ChartMismatch("exponent length does not match chart");
    Poly p(std::move(chart));
    if (!c.is_zero())
        p.terms_.emplace(std::move(exponent), c);
    return p;
}

bool Poly::is_constant() const
{
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && plab::total_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_term() const
{
    if (terms_.empty())
        return Rational(0);
    const auto& [e, c] = *terms_.begin();
    return plab::total_degree(e) == 0 ? c : Rational(0);
}

Rational Poly::constant_value() const
{
    if (!is_constant())
        throw std::logic_error("polynomial is not constant: " + str());
    return constant_term();
}

unsigned Poly::total_degree() const
{
    if (terms_.empty())
        return 0;
    return plab::total_degree(terms_.rbegin()->first);
}

unsigned Poly::degree_in(std::size_t var) const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        if (var < e.size())
            d = std::max(d, e[var]);
    return d;
}

bool Poly::depends_on(std::size_t var) const { return degree_in(var) > 0; }

const std::pair<const Exponent, Rational>& Poly::leading_term() const
{
    if (terms_.empty())
        throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

ChartPtr Poly::unify(const ChartPtr& a, const ChartPtr& b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    if (a == b || *a == *b)
        return a;
    throw ChartMismatch("polynomials live on different charts");
}

void Poly::adopt(const ChartPtr& chart)
{
    if (chart_ || !chart)
        return;
    chart_ = chart;
    if (!terms_.empty()) {
        Rational c = terms_.begin()->second;
        terms_.clear();
        terms_.emplace(Exponent(chart_->size(), 0), c);
    }
}

void Poly::add_term(const Exponent& e, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    ChartPtr chart = unify(chart_, o.chart_);
    adopt(chart);
    if (o.chart_ || !chart) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
    } else {
        Poly tmp = o;
        tmp.adopt(chart);
        for (const auto& [e, c] : tmp.terms_)
            add_term(e, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b)
{
    ChartPtr chart = Poly::unify(a.chart_, b.chart_);
    Poly x = a;
    Poly y = b;
    x.adopt(chart);
    y.adopt(chart);
    Poly r(chart);
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(const Rational& c) const
{
    if (c.is_zero())
        return Poly(chart_);
    Poly r = *this;
    for (auto& [e, v] : r.terms_)
        v *= c;
    return r;
}

Poly Poly::pow(unsigned e) const
{
    Poly result = chart_ ? constant(chart_, 1) : Poly(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e > 0)
            base *= base;
    }
    return result;
}

Poly Poly::partial(std::size_t var) const
{
    if (!chart_) {
        return Poly();
    }
    if (var >= chart_->size())
        throw ChartMismatch("variable index out of range");
    Poly r(chart_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponent d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return r;
}

Poly Poly::partial(std::string_view var) const
{
    if (!chart_)
        throw ChartMismatch("unknown variable '" + std::string(var) + "'");
    return partial(chart_->require(var));
}

Rational Poly::eval(std::span<const Rational> point) const
{
    const std::size_t n = chart_ ? chart_->size() : 0;
    if (point.size() < n)
        throw IncompletePoint("point assigns " + std::to_string(point.size()) + " of " +
                              std::to_string(n) + " coordinates");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t *= point[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

Rational Poly::eval(const std::map<std::string, Rational>& assignment) const
{
    std::vector<Rational> pt;
    if (chart_) {
        pt.reserve(chart_->size());
        for (const auto& name : chart_->names()) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw IncompletePoint("missing assignment for '" + name + "'");
            pt.push_back(it->second);
        }
    }
    return eval(pt);
}

Poly Poly::substitute(const std::vector<Poly>& images) const
{
    if (!chart_)
        return *this;
    const std::size_t n = chart_->size();
    if (images.size() != n)
        throw ChartMismatch("substitution must provide one image per chart variable");
    ChartPtr target;
    for (const auto& img : images)
        target = unify(target, img.chart_);
    // Cache powers per variable.
    std::vector<std::vector<Poly>> powers(n);
    Poly result = target ? Poly(target) : Poly();
    for (const auto& [e, c] : terms_) {
        Poly t = target ? constant(target, c) : Poly(c);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0)
                continue;
            auto& pw = powers[i];
            if (pw.empty())
                pw.push_back(images[i]);
            while (pw.size() < e[i])
                pw.push_back(pw.back() * images[i]);
            t *= pw[e[i] - 1];
        }
        result += t;
    }
    return result;
}

Poly Poly::rechart(const ChartPtr& target) const
{
    if (!target)
        throw ChartMismatch("rechart to null chart");
    if (!chart_) {
        Poly r = *this;
        r.adopt(target);
        return r;
    }
    if (same_chart(chart_, target)) {
        Poly r = *this;
        r.chart_ = target;
        return r;
    }
    std::vector<std::size_t> map(chart_->size(), 0);
    std::vector<bool> used(chart_->size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                used[i] = true;
    for (std::size_t i = 0; i < chart_->size(); ++i) {
        if (!used[i])
            continue;
        auto j = target->index_of(chart_->name(i));
        if (!j)
            throw ChartMismatch("variable '" + chart_->name(i) + "' is absent from the target chart");
        map[i] = *j;
    }
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Exponent f(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                f[map[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::optional<Poly> Poly::exact_divide(const Poly& d) const
{
    if (d.is_zero())
        throw std::domain_error("polynomial division by zero");
    ChartPtr chart = unify(chart_, d.chart_);
    Poly r = *this;
    Poly dd = d;
    r.adopt(chart);
    dd.adopt(chart);
    Poly q = chart ? Poly(chart) : Poly();
    const auto& [ld, lc] = dd.leading_term();
    while (!r.is_zero()) {
        const auto [lr, rc] = *r.terms_.rbegin();
        Exponent e = lr;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < ld[i])
                return std::nullopt;
            e[i] -= ld[i];
        }
        Poly t = chart ? monomial(chart, e, rc / lc) : Poly(rc / lc);
        q += t;
        r -= t * dd;
    }
    return q;
}

Rational Poly::content() const
{
    if (terms_.empty())
        return Rational(1);
    mpz_class g = 0;
    mpz_class l = 1;
    for (const auto& [e, c] : terms_) {
        mpz_class num = c.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_class den = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    return Rational(g, l);
}

Exponent Poly::monomial_content() const
{
    if (terms_.empty() || !chart_)
        return Exponent(chart_ ? chart_->size() : 0, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

Poly Poly::divide_monomial(const Exponent& m) const
{
    Poly r(chart_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size() && i < m.size(); ++i) {
            if (f[i] < m[i])
                throw std::logic_error("monomial does not divide polynomial");
            f[i] -= m[i];
        }
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

std::string Poly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c.sign() < 0;
        const Rational a = c.abs();
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += chart_->name(i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << a.str();
        else if (a.is_one())
            os << mono;
        else
            os << a.str() << "*" << mono;
    }
    return os.str();
}

bool operator==(const Poly& a, const Poly& b)
{
    if (a.chart_ && b.chart_ && !same_chart(a.chart_, b.chart_))
        return false;
    if (a.chart_ && b.chart_)
        return a.terms_ == b.terms_;
    if (!a.is_constant() || !b.is_constant())
        return false;
    return a.constant_term() == b.constant_term();
}

std::vector<Poly> chart_variables(const ChartPtr& chart)
{
    std::vector<Poly> v;
    v.reserve(chart->size());
    for (std::size_t i = 0; i < chart->size(); ++i)
        v.push_back(Poly::variable(chart, i));
    return v;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den)
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    normalize();
}

ChartPtr RatFunc::chart() const { return num_.chart() ? num_.chart() : den_.chart(); }

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        num_ = Poly(chart());
        den_ = chart() ? Poly::constant(chart(), 1) : Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        // Cancel common monomial factors.
        if (num_.chart() && den_.chart()) {
            Exponent mn = num_.monomial_content();
            Exponent md = den_.monomial_content();
            Exponent m(mn.size());
            bool any = false;
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = std::min(mn[i], md[i]);
                any = any || m[i] > 0;
            }
            if (any) {
                num_ = num_.divide_monomial(m);
                den_ = den_.divide_monomial(m);
            }
        }
        if (!den_.is_constant()) {
            if (auto q = num_.exact_divide(den_)) {
                num_ = *q;
                den_ = Poly::constant(num_.chart() ? num_.chart() : den_.chart(), 1);
            } else if (auto q2 = den_.exact_divide(num_)) {
                den_ = *q2;
                num_ = Poly::constant(den_.chart() ? den_.chart() : num_.chart(), 1);
            }
        }
    }
    const Rational lc = den_.leading_term().second;
    if (!lc.is_one()) {
        num_ = num_.scaled(lc.inverse());
        den_ = den_.scaled(lc.inverse());
    }
}

Rational RatFunc::constant_value() const { return num_.constant_value() / den_.constant_value(); }

Poly RatFunc::to_poly() const
{
    if (!den_.is_constant())
        throw std::logic_error("rational function is not a polynomial: " + str());
    return num_.scaled(den_.constant_value().inverse());
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero())
        return *this;
    if (den_ == o.den_)
        num_ += o.num_;
    else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero())
        return *this;
    if (o.is_zero()) {
        *this = o;
        return *this;
    }
    // Cross-cancel before multiplying to limit growth.
    Poly a = num_;
    Poly b = den_;
    Poly c = o.num_;
    Poly d = o.den_;
    if (!d.is_constant())
        if (auto q = a.exact_divide(d)) {
            a = *q;
            d = Poly(1);
        }
    if (!b.is_constant())
        if (auto q = c.exact_divide(b)) {
            c = *q;
            b = Poly(1);
        }
    num_ = a * c;
    den_ = b * d;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero())
        throw std::domain_error("rational function division by zero");
    return *this *= RatFunc(o.den_, o.num_);
}

RatFunc RatFunc::partial(std::size_t var) const
{
    if (den_.is_constant())
        return RatFunc(num_.partial(var), den_);
    return RatFunc(num_.partial(var) * den_ - num_ * den_.partial(var), den_ * den_);
}

Rational RatFunc::eval(std::span<const Rational> point) const
{
    const Rational d = den_.eval(point);
    if (d.is_zero())
        throw SingularPoint("denominator " + den_.str() + " vanishes at the point");
    return num_.eval(point) / d;
}

RatFunc RatFunc::substitute(const std::vector<Poly>& images) const
{
    return RatFunc(num_.substitute(images), den_.substitute(images));
}

RatFunc RatFunc::rechart(const ChartPtr& target) const
{
    return RatFunc(num_.rechart(target), den_.rechart(target));
}

std::string RatFunc::str() const
{
    if (den_.is_constant())
        return to_poly().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool operator==(const RatFunc& a, const RatFunc& b)
{
    if (a.den_ == b.den_)
        return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

} // namespace plab
