#include "plab/dsl.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace plab::dsl {

namespace {

struct Token {
    enum class Kind { Ident, Int, Symbol, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        const std::size_t l = line, col = column;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, std::string(text.substr(i, j - i)), l, col});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back({Token::Kind::Int, std::string(text.substr(i, j - i)), l, col});
            advance(j - i);
        } else if (std::string_view("{}[]();:,=+-*/^").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, c), l, col});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", l, col);
        }
    }
    out.push_back({Token::Kind::End, "", line, column});
    return out;
}

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Ref, Diff, Neg, Add, Sub, Mul, Div, Pow, Wedge };
    Kind kind;
    std::size_t line = 0, column = 0;
    Rational number;
    std::string name;
    std::optional<std::vector<unsigned>> alpha;
    unsigned exponent = 0;
    ExprPtr lhs, rhs;
};

[[noreturn]] void fail_at(const Expr& e, const std::string& message)
{
    throw ParseError(message, e.line, e.column);
}

std::string ref_name(const std::string& name, const std::optional<std::vector<unsigned>>& alpha)
{
    if (!alpha || std::all_of(alpha->begin(), alpha->end(), [](unsigned a) { return a == 0; }))
        return name;
    std::string s = name + "[";
    for (std::size_t i = 0; i < alpha->size(); ++i)
        s += (i ? "," : "") + std::to_string((*alpha)[i]);
    return s + "]";
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    [[noreturn]] void fail(const std::string& message, const Token& t) const
    {
        throw ParseError(message, t.line, t.column);
    }

    static std::string describe(const Token& t)
    {
        return t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    }

    bool is_symbol(char c, std::size_t ahead = 0) const
    {
        const Token& t = peek(ahead);
        return t.kind == Token::Kind::Symbol && t.text[0] == c;
    }
    bool is_word(std::string_view w) const
    {
        return peek().kind == Token::Kind::Ident && peek().text == w;
    }
    bool accept(char c)
    {
        if (!is_symbol(c))
            return false;
        next();
        return true;
    }
    const Token& expect(char c)
    {
        if (!is_symbol(c))
            fail(std::string("expected '") + c + "' but found " + describe(peek()), peek());
        return next();
    }
    const Token& expect_ident()
    {
        if (peek().kind != Token::Kind::Ident)
            fail("expected an identifier but found " + describe(peek()), peek());
        return next();
    }
    unsigned expect_uint()
    {
        if (peek().kind != Token::Kind::Int)
            fail("expected an integer but found " + describe(peek()), peek());
        const Token& t = next();
        if (t.text.size() > 6)
            fail("integer " + t.text + " is too large here", t);
        return static_cast<unsigned>(std::stoul(t.text));
    }

    std::vector<std::string> identifiers()
    {
        std::vector<std::string> ids{expect_ident().text};
        while (accept(','))
            ids.push_back(expect_ident().text);
        return ids;
    }

    std::optional<std::vector<unsigned>> optional_index()
    {
        if (!accept('['))
            return std::nullopt;
        std::vector<unsigned> alpha{expect_uint()};
        while (accept(','))
            alpha.push_back(expect_uint());
        expect(']');
        return alpha;
    }

    ExprPtr expression()
    {
        ExprPtr e = term();
        while (is_symbol('+') || is_symbol('-')) {
            const Token& op = next();
            e = binary(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op, e, term());
        }
        return e;
    }

private:
    static ExprPtr binary(Expr::Kind kind, const Token& at, ExprPtr a, ExprPtr b)
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->column = at.column;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }

    ExprPtr term()
    {
        ExprPtr e = unary();
        while (is_symbol('*') || is_symbol('/')) {
            const Token& op = next();
            e = binary(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op, e, unary());
        }
        return e;
    }

    ExprPtr unary()
    {
        if (is_symbol('+')) {
            next();
            return unary();
        }
        if (is_symbol('-')) {
            const Token& op = next();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Neg;
            e->line = op.line;
            e->column = op.column;
            e->lhs = unary();
            return e;
        }
        return power();
    }

    ExprPtr power()
    {
        ExprPtr e = atom();
        while (is_symbol('^')) {
            const Token& op = next();
            if (peek().kind == Token::Kind::Int) {
                auto p = std::make_shared<Expr>();
                p->kind = Expr::Kind::Pow;
                p->line = op.line;
                p->column = op.column;
                p->lhs = e;
                p->exponent = expect_uint();
                e = p;
            } else {
                e = binary(Expr::Kind::Wedge, op, e, atom());
            }
        }
        return e;
    }

    ExprPtr atom()
    {
        const Token& t = peek();
        auto e = std::make_shared<Expr>();
        e->line = t.line;
        e->column = t.column;
        if (t.kind == Token::Kind::Int) {
            e->kind = Expr::Kind::Number;
            e->number = Rational(mpz_class(next().text), mpz_class(1));
            return e;
        }
        if (t.kind == Token::Kind::Ident) {
            if (t.text == "d" && is_symbol('(', 1)) {
                next();
                next();
                e->kind = Expr::Kind::Diff;
                e->name = expect_ident().text;
                expect(')');
                return e;
            }
            e->kind = Expr::Kind::Ref;
            e->name = next().text;
            e->alpha = optional_index();
            return e;
        }
        if (accept('(')) {
            ExprPtr inner = expression();
            expect(')');
            return inner;
        }
        fail("expected an expression but found " + describe(t), t);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

using Resolver = std::function<Poly(const Expr&)>;

Poly to_poly(const Expr& e, const ChartPtr& chart, const Resolver& resolve)
{
    switch (e.kind) {
    case Expr::Kind::Number:
        return chart ? Poly::constant(chart, e.number) : Poly(e.number);
    case Expr::Kind::Ref:
        return resolve(e);
    case Expr::Kind::Diff:
        fail_at(e, "differential d(" + e.name + ") outside a form");
    case Expr::Kind::Wedge:
        fail_at(e, "wedge product outside a form");
    case Expr::Kind::Neg:
        return -to_poly(*e.lhs, chart, resolve);
    case Expr::Kind::Add:
        return to_poly(*e.lhs, chart, resolve) + to_poly(*e.rhs, chart, resolve);
    case Expr::Kind::Sub:
        return to_poly(*e.lhs, chart, resolve) - to_poly(*e.rhs, chart, resolve);
    case Expr::Kind::Mul:
        return to_poly(*e.lhs, chart, resolve) * to_poly(*e.rhs, chart, resolve);
    case Expr::Kind::Pow:
        return to_poly(*e.lhs, chart, resolve).pow(e.exponent);
    case Expr::Kind::Div: {
        const Poly d = to_poly(*e.rhs, chart, resolve);
        if (!d.is_constant())
            fail_at(e, "division by a non-constant polynomial");
        if (d.is_zero())
            fail_at(e, "division by zero");
        return to_poly(*e.lhs, chart, resolve).scaled(Rational(1) / d.constant_value());
    }
    }
    fail_at(e, "malformed expression");
}

Rational to_constant(const Expr& e)
{
    const Poly p = to_poly(e, nullptr, [](const Expr& r) -> Poly { fail_at(r, "value must be a rational constant"); });
    return p.constant_term();
}

RatFunc zero_form_value(const DiffForm& f) { return f.coefficient(IndexSet{}); }

DiffForm to_form(const Expr& e, const ChartPtr& chart)
{
    auto fn = [&](const RatFunc& f) { return DiffForm::function(chart, f); };
    switch (e.kind) {
    case Expr::Kind::Number:
        return fn(RatFunc(e.number));
    case Expr::Kind::Ref: {
        if (e.alpha)
            fail_at(e, "coordinate " + e.name + " takes no index");
        const auto idx = chart->index_of(e.name);
        if (!idx)
            fail_at(e, "unknown identifier '" + e.name + "'");
        return fn(RatFunc(Poly::variable(chart, *idx)));
    }
    case Expr::Kind::Diff: {
        const auto idx = chart->index_of(e.name);
        if (!idx)
            fail_at(e, "unknown identifier '" + e.name + "'");
        return DiffForm::differential(chart, *idx);
    }
    case Expr::Kind::Neg:
        return -to_form(*e.lhs, chart);
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
        DiffForm a = to_form(*e.lhs, chart);
        DiffForm b = to_form(*e.rhs, chart);
        if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
            fail_at(e, "sum of forms of different degrees");
        if (a.is_zero() && a.degree() != b.degree())
            return e.kind == Expr::Kind::Add ? b : -b;
        if (b.is_zero() && a.degree() != b.degree())
            return a;
        return e.kind == Expr::Kind::Add ? a + b : a - b;
    }
    case Expr::Kind::Mul: {
        DiffForm a = to_form(*e.lhs, chart);
        DiffForm b = to_form(*e.rhs, chart);
        if (a.degree() == 0)
            return b.degree() == 0 ? fn(zero_form_value(a) * zero_form_value(b)) : b.scaled(zero_form_value(a));
        if (b.degree() == 0)
            return a.scaled(zero_form_value(b));
        fail_at(e, "product of two forms of positive degree; write the wedge with '^'");
    }
    case Expr::Kind::Div: {
        DiffForm a = to_form(*e.lhs, chart);
        DiffForm b = to_form(*e.rhs, chart);
        if (b.degree() != 0)
            fail_at(e, "division by a form of positive degree");
        if (b.is_zero())
            fail_at(e, "division by zero");
        const RatFunc inv = RatFunc(1) / zero_form_value(b);
        return a.degree() == 0 ? fn(zero_form_value(a) * inv) : a.scaled(inv);
    }
    case Expr::Kind::Pow: {
        DiffForm a = to_form(*e.lhs, chart);
        if (a.degree() != 0)
            fail_at(e, "power of a form of positive degree");
        RatFunc r(1);
        const RatFunc base = zero_form_value(a);
        for (unsigned i = 0; i < e.exponent; ++i)
            r *= base;
        return fn(r);
    }
    case Expr::Kind::Wedge: {
        DiffForm a = to_form(*e.lhs, chart);
        DiffForm b = to_form(*e.rhs, chart);
        if (a.degree() == 0 && b.degree() == 0)
            return fn(zero_form_value(a) * zero_form_value(b));
        return wedge(a, b);
    }
    }
    fail_at(e, "malformed expression");
}

void check_unique_names(const std::vector<std::string>& names, const Token& at, const Parser& p)
{
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n == "d")
            p.fail("'d' is reserved for differentials", at);
        if (!seen.insert(n).second)
            p.fail("coordinate '" + n + "' declared twice", at);
    }
}

SystemDecl parse_system(Parser& p, const Token& keyword)
{
    SystemDecl decl;
    decl.name = p.expect_ident().text;
    p.expect('{');
    std::optional<std::vector<std::string>> base, fiber;
    std::optional<unsigned> order;
    std::vector<ExprPtr> equations;
    std::vector<std::pair<ExprPtr, ExprPtr>> solves;
    std::optional<Token> base_at;
    while (!p.is_symbol('}')) {
        const Token& t = p.peek();
        if (p.is_word("base")) {
            p.next();
            if (base)
                p.fail("duplicate base declaration", t);
            base_at = t;
            base = p.identifiers();
        } else if (p.is_word("fiber")) {
            p.next();
            if (fiber)
                p.fail("duplicate fiber declaration", t);
            fiber = p.identifiers();
        } else if (p.is_word("order")) {
            p.next();
            if (order)
                p.fail("duplicate order declaration", t);
            order = p.expect_uint();
        } else if (p.is_word("eq")) {
            p.next();
            p.expect(':');
            equations.push_back(p.expression());
        } else if (p.is_word("solve")) {
            p.next();
            auto lead = std::make_shared<Expr>();
            const Token& name = p.expect_ident();
            lead->kind = Expr::Kind::Ref;
            lead->name = name.text;
            lead->line = name.line;
            lead->column = name.column;
            lead->alpha = p.optional_index();
            p.expect('=');
            solves.emplace_back(lead, p.expression());
        } else {
            p.fail("expected base, fiber, order, eq or solve but found " + Parser::describe(t), t);
        }
        p.expect(';');
    }
    const Token close = p.next();
    if (!base)
        p.fail("missing base declaration", keyword);
    if (!fiber)
        p.fail("missing fiber declaration", keyword);
    if (!order)
        p.fail("missing order declaration", keyword);
    std::vector<std::string> all = *base;
    all.insert(all.end(), fiber->begin(), fiber->end());
    check_unique_names(all, *base_at, p);
    decl.base = *base;
    decl.fiber = *fiber;
    decl.order = *order;

    const JetChart jc = decl.jet_chart();
    const ChartPtr& chart = jc.chart();
    auto resolve_index = [&](const Expr& r) -> std::size_t {
        const auto bit = std::find(decl.base.begin(), decl.base.end(), r.name);
        if (bit != decl.base.end()) {
            if (r.alpha)
                fail_at(r, "base coordinate " + r.name + " takes no index");
            return static_cast<std::size_t>(bit - decl.base.begin());
        }
        const auto fit = std::find(decl.fiber.begin(), decl.fiber.end(), r.name);
        if (fit == decl.fiber.end())
            fail_at(r, "unknown identifier '" + r.name + "'");
        const std::size_t a = static_cast<std::size_t>(fit - decl.fiber.begin());
        std::vector<unsigned> alpha = r.alpha.value_or(std::vector<unsigned>(jc.n(), 0));
        if (alpha.size() != jc.n())
            fail_at(r, "index of " + r.name + " needs " + std::to_string(jc.n()) + " entries");
        const MultiIndex mi(alpha);
        if (mi.order() > decl.order)
            fail_at(r, ref_name(r.name, r.alpha) + " exceeds the declared order " + std::to_string(decl.order));
        return jc.jet_index(a, mi);
    };
    const Resolver resolve = [&](const Expr& r) { return Poly::variable(chart, resolve_index(r)); };
    for (const auto& e : equations) {
        Poly eq = to_poly(*e, chart, resolve);
        if (eq.is_zero())
            fail_at(*e, "equation is identically zero");
        decl.equations.push_back(eq.rechart(chart));
    }
    std::set<std::size_t> leads;
    for (const auto& [lead, rhs] : solves) {
        const std::size_t v = resolve_index(*lead);
        if (v < jc.n())
            fail_at(*lead, "cannot solve for base coordinate " + lead->name);
        if (!leads.insert(v).second)
            fail_at(*lead, chart->name(v) + " solved twice");
        Poly r = to_poly(*rhs, chart, resolve);
        decl.solved.emplace_back(v, r.chart() ? r.rechart(chart) : Poly::constant(chart, r.constant_term()));
    }
    for (const auto& [v, rhs] : decl.solved)
        for (const auto& [w, unused] : decl.solved)
            if (rhs.depends_on(w))
                p.fail("solved coordinate " + chart->name(w) + " occurs on a right-hand side", close);
    return decl;
}

PfaffDecl parse_pfaffian(Parser& p, const Token& keyword)
{
    PfaffDecl decl;
    decl.name = p.expect_ident().text;
    p.expect('{');
    std::optional<Token> coords_at;
    std::vector<ExprPtr> forms;
    while (!p.is_symbol('}')) {
        const Token& t = p.peek();
        if (p.is_word("coords")) {
            p.next();
            if (coords_at)
                p.fail("duplicate coords declaration", t);
            coords_at = t;
            decl.coords = p.identifiers();
        } else if (p.is_word("form")) {
            p.next();
            p.expect(':');
            forms.push_back(p.expression());
        } else {
            p.fail("expected coords or form but found " + Parser::describe(t), t);
        }
        p.expect(';');
    }
    p.next();
    if (!coords_at)
        p.fail("missing coords declaration", keyword);
    if (forms.empty())
        p.fail("pfaffian system needs at least one form", keyword);
    check_unique_names(decl.coords, *coords_at, p);
    const ChartPtr chart = make_chart(decl.coords);
    for (const auto& e : forms) {
        DiffForm f = to_form(*e, chart);
        if (f.degree() != 1 || f.is_zero())
            fail_at(*e, "form must be a nonzero 1-form");
        decl.forms.push_back(std::move(f));
    }
    return decl;
}

using Rules = std::vector<std::pair<Token, ExprPtr>>;

Rules parse_rules(Parser& p)
{
    Rules rules;
    do {
        const Token name = p.expect_ident();
        p.expect('=');
        rules.emplace_back(name, p.expression());
    } while (p.accept(','));
    return rules;
}

MapDecl parse_map(Parser& p, const Token& keyword)
{
    MapDecl decl;
    decl.name = p.expect_ident().text;
    p.expect('{');
    std::optional<Rules> base, fiber, inverse;
    while (!p.is_symbol('}')) {
        const Token& t = p.peek();
        std::optional<Rules>* slot = nullptr;
        if (p.is_word("base"))
            slot = &base;
        else if (p.is_word("fiber"))
            slot = &fiber;
        else if (p.is_word("inverse"))
            slot = &inverse;
        else
            p.fail("expected base, fiber or inverse but found " + Parser::describe(t), t);
        p.next();
        if (*slot)
            p.fail("duplicate " + t.text + " section", t);
        p.expect(':');
        *slot = parse_rules(p);
        p.expect(';');
    }
    p.next();
    if (!base)
        p.fail("missing base section", keyword);
    if (!fiber)
        p.fail("missing fiber section", keyword);
    if (!inverse)
        p.fail("missing inverse section", keyword);
    for (const auto& [t, e] : *base)
        decl.base.push_back(t.text);
    for (const auto& [t, e] : *fiber)
        decl.fiber.push_back(t.text);
    std::vector<std::string> all = decl.base;
    all.insert(all.end(), decl.fiber.begin(), decl.fiber.end());
    check_unique_names(all, keyword, p);

    const ChartPtr base_chart = make_chart(decl.base);
    const ChartPtr total_chart = make_chart(all);
    auto resolver = [](const ChartPtr& chart, const std::string& what) -> Resolver {
        return [chart, what](const Expr& r) {
            if (r.alpha)
                fail_at(r, "coordinate " + r.name + " takes no index");
            const auto idx = chart->index_of(r.name);
            if (!idx)
                fail_at(r, "unknown identifier '" + r.name + "' in " + what);
            return Poly::variable(chart, *idx);
        };
    };
    auto on = [](const Poly& q, const ChartPtr& chart) {
        return q.chart() ? q.rechart(chart) : Poly::constant(chart, q.constant_term());
    };
    for (const auto& [t, e] : *base)
        decl.base_images.push_back(on(to_poly(*e, base_chart, resolver(base_chart, "a base image")), base_chart));
    for (const auto& [t, e] : *fiber)
        decl.fiber_images.push_back(on(to_poly(*e, total_chart, resolver(total_chart, "a fiber image")), total_chart));

    std::map<std::string, ExprPtr> inv;
    for (const auto& [t, e] : *inverse) {
        if (std::find(all.begin(), all.end(), t.text) == all.end())
            p.fail("inverse rule for unknown coordinate '" + t.text + "'", t);
        if (!inv.emplace(t.text, e).second)
            p.fail("inverse rule for '" + t.text + "' given twice", t);
    }
    for (const auto& n : all)
        if (!inv.count(n))
            p.fail("inverse rule for '" + n + "' is missing", keyword);
    for (const auto& n : decl.base)
        decl.base_inverse.push_back(on(to_poly(*inv[n], base_chart, resolver(base_chart, "a base inverse")), base_chart));
    for (const auto& n : decl.fiber)
        decl.fiber_inverse.push_back(
            on(to_poly(*inv[n], total_chart, resolver(total_chart, "a fiber inverse")), total_chart));
    try {
        (void)decl.map();
    } catch (const Error& ex) {
        p.fail(std::string("map ") + decl.name + ": " + ex.what(), keyword);
    }
    return decl;
}

std::vector<std::pair<std::string, Rational>> parse_assignment_list(Parser& p)
{
    std::vector<std::pair<std::string, Rational>> values;
    std::set<std::string> seen;
    do {
        const Token name = p.expect_ident();
        const std::string key = ref_name(name.text, p.optional_index());
        if (!seen.insert(key).second)
            p.fail("coordinate '" + key + "' assigned twice", name);
        p.expect('=');
        values.emplace_back(key, to_constant(*p.expression()));
    } while (p.accept(','));
    return values;
}

PointDecl parse_point(Parser& p)
{
    PointDecl decl;
    decl.name = p.expect_ident().text;
    p.expect('{');
    if (!p.is_symbol('}')) {
        decl.values = parse_assignment_list(p);
        p.expect(';');
    }
    p.expect('}');
    return decl;
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i];
    return s;
}

std::string form_text(const DiffForm& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : f.terms()) {
        std::string diffs;
        for (std::size_t k = 0; k < idx.size(); ++k)
            diffs += (k ? "^d(" : "d(") + f.chart()->name(idx[k]) + ")";
        if (c.is_constant()) {
            const Rational v = c.constant_value();
            out += first ? (v.sign() < 0 ? "-" : "") : (v.sign() < 0 ? " - " : " + ");
            if (!v.abs().is_one())
                out += v.abs().str() + "*";
        } else {
            out += first ? "" : " + ";
            out += "(" + c.str() + ")*";
        }
        out += diffs;
        first = false;
    }
    return out;
}

} // namespace

PdeSystem SystemDecl::system() const
{
    const JetChart jc = jet_chart();
    if (equations.empty() && !solved.empty()) {
        SolvedForm sf;
        for (const auto& [v, rhs] : solved)
            sf.emplace(v, rhs);
        return PdeSystem::from_solved(jc, sf, name);
    }
    std::vector<Poly> eqs = equations;
    for (const auto& [v, rhs] : solved)
        eqs.push_back(Poly::variable(jc.chart(), v) - rhs);
    return PdeSystem(jc, std::move(eqs), name);
}

PfaffSystem PfaffDecl::system() const
{
    return PfaffSystem{forms.empty() ? make_chart(coords) : forms.front().chart(), forms};
}

FiberedMap MapDecl::map() const
{
    return FiberedMap(base, fiber, base_images, fiber_images, base_inverse, fiber_inverse, name);
}

const std::string& declaration_name(const Declaration& d)
{
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

SourceFile parse(std::string_view text, std::string path)
{
    SourceFile file{std::move(path), std::string(text), {}};
    Parser p(text);
    std::set<std::string> names;
    while (!p.at_end()) {
        const Token keyword = p.peek();
        const Token name = p.peek(1);
        if (p.is_word("system")) {
            p.next();
            file.declarations.emplace_back(parse_system(p, keyword));
        } else if (p.is_word("pfaffian")) {
            p.next();
            file.declarations.emplace_back(parse_pfaffian(p, keyword));
        } else if (p.is_word("map")) {
            p.next();
            file.declarations.emplace_back(parse_map(p, keyword));
        } else if (p.is_word("point")) {
            p.next();
            file.declarations.emplace_back(parse_point(p));
        } else {
            p.fail("expected system, pfaffian, map or point but found " + Parser::describe(keyword), keyword);
        }
        if (!names.insert(declaration_name(file.declarations.back())).second)
            p.fail("duplicate declaration name '" + name.text + "'", name);
    }
    return file;
}

SourceFile read_source(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

std::vector<std::pair<std::string, Rational>> parse_assignments(std::string_view text)
{
    Parser p(text);
    if (p.at_end())
        return {};
    auto values = parse_assignment_list(p);
    p.accept(';');
    if (!p.at_end())
        p.fail("unexpected " + Parser::describe(p.peek()) + " after assignments", p.peek());
    return values;
}

std::vector<Rational> resolve_point(const std::vector<std::pair<std::string, Rational>>& values,
                                    const ChartPtr& chart)
{
    std::vector<std::optional<Rational>> slots(chart->size());
    for (const auto& [name, v] : values) {
        const auto idx = chart->index_of(name);
        if (!idx)
            throw ChartMismatch("point assigns '" + name + "', which is not a coordinate here");
        slots[*idx] = v;
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i])
            throw IncompletePoint("point does not assign '" + chart->name(i) + "'");
        out.push_back(*slots[i]);
    }
    return out;
}

std::string print(const Declaration& d)
{
    std::ostringstream os;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SystemDecl>) {
                os << "system " << x.name << " {\n";
                os << "  base " << join(x.base) << ";\n";
                os << "  fiber " << join(x.fiber) << ";\n";
                os << "  order " << x.order << ";\n";
                for (const auto& e : x.equations)
                    os << "  eq: " << e.str() << ";\n";
                for (const auto& [v, rhs] : x.solved)
                    os << "  solve " << x.jet_chart().chart()->name(v) << " = " << rhs.str() << ";\n";
            } else if constexpr (std::is_same_v<T, PfaffDecl>) {
                os << "pfaffian " << x.name << " {\n";
                os << "  coords " << join(x.coords) << ";\n";
                for (const auto& f : x.forms)
                    os << "  form: " << form_text(f) << ";\n";
            } else if constexpr (std::is_same_v<T, MapDecl>) {
                auto rules = [](const std::vector<std::string>& names, const std::vector<Poly>& images) {
                    std::string s;
                    for (std::size_t i = 0; i < names.size(); ++i)
                        s += (i ? ", " : "") + names[i] + " = " + images[i].str();
                    return s;
                };
                std::vector<std::string> all = x.base;
                all.insert(all.end(), x.fiber.begin(), x.fiber.end());
                std::vector<Poly> inv = x.base_inverse;
                inv.insert(inv.end(), x.fiber_inverse.begin(), x.fiber_inverse.end());
                os << "map " << x.name << " {\n";
                os << "  base: " << rules(x.base, x.base_images) << ";\n";
                os << "  fiber: " << rules(x.fiber, x.fiber_images) << ";\n";
                os << "  inverse: " << rules(all, inv) << ";\n";
            } else {
                os << "point " << x.name << " {";
                for (std::size_t i = 0; i < x.values.size(); ++i)
                    os << (i ? ", " : " ") << x.values[i].first << " = " << x.values[i].second.str();
                os << (x.values.empty() ? "" : ";") << " }\n";
                return;
            }
            os << "}\n";
        },
        d);
    return os.str();
}

std::string print(const SourceFile& f)
{
    std::string out;
    for (std::size_t i = 0; i < f.declarations.size(); ++i)
        out += (i ? "\n" : "") + print(f.declarations[i]);
    return out;
}

} // namespace plab::dsl
