#include "plab/cli.hpp"

#include "plab/dsl.hpp"
#include "plab/equivalence.hpp"
#include "plab/errors.hpp"
#include "plab/jet_groupoid.hpp"
#include "plab/pfaffian.hpp"
#include "plab/random.hpp"
#include "plab/spencer.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace plab::cli {

namespace {

struct Input {
    std::string path;
    std::string text;
};

struct Context {
    const Invocation& inv;
    std::vector<Input> inputs;
    Report& report;

    const Options& opt() const { return inv.options; }

    dsl::SourceFile source(std::size_t i) const
    {
        try {
            return dsl::parse(inputs.at(i).text, inputs.at(i).path);
        } catch (const ParseError& e) {
            throw UsageError("parse error: " + std::filesystem::path(inputs.at(i).path).filename().string() + ":" +
                             e.what());
        }
    }
};

std::string basename(const std::string& path) { return std::filesystem::path(path).filename().string(); }

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

template <class T>
std::string join_numbers(const std::vector<T>& v)
{
    std::vector<std::string> s;
    for (const auto& x : v)
        s.push_back(std::to_string(x));
    return join(s);
}

std::string point_text(const ChartPtr& chart, const std::vector<Rational>& p)
{
    std::vector<std::string> s;
    for (std::size_t i = 0; i < p.size(); ++i)
        s.push_back(chart->name(i) + "=" + p[i].str());
    return join(s);
}

template <class T>
const T& require_decl(const dsl::SourceFile& f, const char* what)
{
    if (const T* d = f.first<T>())
        return *d;
    throw UsageError(basename(f.path) + " contains no " + what + " declaration");
}

PdeSystem system_of(const dsl::SourceFile& f) { return require_decl<dsl::SystemDecl>(f, "system").system(); }

void describe_system(Report& r, const PdeSystem& s, const std::string& prefix = "")
{
    const JetChart& c = s.chart();
    r.field(prefix + "system", s.name());
    r.field(prefix + "base", join(c.base_names()));
    r.field(prefix + "fiber", join(c.fiber_names()));
    r.field(prefix + "order", std::to_string(s.order()));
}

void describe_pfaffian(Report& r, const std::string& name, const PfaffSystem& s, const std::string& prefix = "")
{
    r.field(prefix + "pfaffian", name);
    r.field(prefix + "coords", join(s.chart->names()));
    r.field(prefix + "forms", s.str());
}

/// Full coordinates on `chart` from every point declaration in the file.
std::vector<std::vector<Rational>> file_points(const dsl::SourceFile& f, const ChartPtr& chart)
{
    std::vector<std::vector<Rational>> out;
    for (const auto* p : f.all<dsl::PointDecl>())
        out.push_back(dsl::resolve_point(p->values, chart));
    return out;
}

std::vector<std::vector<Rational>> sample_points(const PdeSystem& s, std::uint64_t seed, std::size_t count)
{
    Rng rng(seed);
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < count; ++i)
        if (auto p = sample_locus_point(s, rng))
            out.push_back(*p);
    return out;
}

void cmd_prolong(Context& ctx)
{
    Report& r = ctx.report;
    const PdeSystem s = system_of(ctx.source(0));
    const unsigned levels = ctx.opt().levels.value_or(1);
    describe_system(r, s);
    r.field("levels", std::to_string(levels));
    Table& t = r.table("prolongations", {"level", "order", "equations", "jet_dimension", "dimension"});
    PdeSystem top = s;
    bool empty = false;
    for (unsigned l = 0; l <= levels; ++l) {
        top = prolong(s, l);
        std::string dim;
        try {
            dim = std::to_string(generic_dimension(top));
        } catch (const EmptyLocus&) {
            dim = "empty";
            empty = true;
        }
        t.rows.push_back({std::to_string(l), std::to_string(top.order()), std::to_string(top.equations().size()),
                          std::to_string(jet_dimension(top.chart())), dim});
    }
    Table& eqs = r.table("equations at level " + std::to_string(levels), {"index", "equation"});
    for (std::size_t i = 0; i < top.equations().size(); ++i)
        eqs.rows.push_back({std::to_string(i), top.equations()[i].str() + " = 0"});
    if (empty) {
        r.verdict("prolong", "consistency", "EMPTY_LOCUS");
        return;
    }
    r.verdict("prolong", "consistency", "NONEMPTY");
    const auto points = sample_points(top, ctx.opt().seed, 3);
    if (points.empty()) {
        r.verdict("prolong", "regularity", "UNDETERMINED");
        r.warn("no locus point could be sampled for the regularity check");
        return;
    }
    const RegularityVerdict reg = regularity_check(top, points);
    r.field("generic_rank", std::to_string(reg.generic_rank));
    r.verdict("prolong", "regularity", reg.regular ? "REGULAR" : "SINGULAR");
    if (!reg.regular)
        r.field("singular_point", point_text(top.chart().chart(), reg.singular_point));
    r.warn("regularity checked at " + std::to_string(points.size()) + " sampled locus points only");
}

void cmd_dimension(Context& ctx)
{
    Report& r = ctx.report;
    const PdeSystem s = system_of(ctx.source(0));
    const unsigned levels = ctx.opt().levels.value_or(0);
    describe_system(r, s);
    Table& t = r.table("dimensions", {"level", "order", "jet_dimension", "dimension"});
    for (unsigned l = 0; l <= levels; ++l) {
        const PdeSystem p = prolong(s, l);
        const std::string q = std::to_string(p.order());
        std::string dim;
        try {
            dim = std::to_string(generic_dimension(p));
        } catch (const EmptyLocus&) {
            dim = "empty";
        }
        t.rows.push_back({std::to_string(l), q, std::to_string(jet_dimension(p.chart())), dim});
        r.verdict("dimension", "generic-rank at order " + q, dim == "empty" ? "EMPTY_LOCUS" : dim);
    }
}

void cmd_symbol(Context& ctx)
{
    Report& r = ctx.report;
    const PdeSystem s = system_of(ctx.source(0));
    const unsigned q = ctx.opt().order.value_or(s.order());
    describe_system(r, s);
    r.field("symbol_order", std::to_string(q));
    std::optional<std::vector<Rational>> point;
    if (ctx.opt().point) {
        if (q < s.order())
            throw OrderMismatch("symbol order " + std::to_string(q) + " is below the system order");
        const PdeSystem p = prolong(s, q - s.order());
        point = dsl::resolve_point(dsl::parse_assignments(*ctx.opt().point), p.chart().chart());
        r.field("point", point_text(p.chart().chart(), *point));
    } else {
        r.field("point", "generic");
    }
    const SymbolSpace g = point ? symbol(s, q, std::span<const Rational>(*point)) : symbol(s, q);
    const JetChart chart = s.chart().with_order(q);
    std::vector<std::string> columns{"vector"};
    for (const auto& [a, alpha] : g.ambient)
        columns.push_back(chart.jet_name(a, alpha));
    r.field("ambient_dimension", std::to_string(g.ambient_dimension()));
    r.field("dimension", std::to_string(g.dimension()));
    Table& t = r.table("symbol basis", columns);
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
        std::vector<std::string> row{std::to_string(i)};
        for (const auto& c : g.basis[i])
            row.push_back(c.str());
        t.rows.push_back(std::move(row));
    }
    r.verdict("symbol", point ? "dimension at point" : "generic dimension", std::to_string(g.dimension()));
}

void check_delta_squared(const PdeSystem& s, unsigned q_min, unsigned q_max)
{
    const std::size_t n = s.chart().n();
    for (unsigned q = std::max(q_min, 1u); q <= q_max + 1; ++q) {
        const SymbolSpace g = symbol(s, q);
        for (unsigned p = 0; p + 1 <= n; ++p) {
            const auto next = to_ratfunc(ambient_delta(n, s.chart().m(), q - 1, p + 1));
            if (!(next * delta_map(g, p)).is_zero())
                throw InvariantViolation("delta o delta != 0 at q=" + std::to_string(q) + ", p=" + std::to_string(p));
        }
    }
}

void cmd_spencer(Context& ctx)
{
    Report& r = ctx.report;
    const PdeSystem s = system_of(ctx.source(0));
    const unsigned q_min = s.order();
    const unsigned q_max = q_min + ctx.opt().orders.value_or(2);
    describe_system(r, s);
    r.field("range", std::to_string(q_min) + ".." + std::to_string(q_max));
    const SpencerReport sr = spencer_cohomology(s, q_min, q_max);
    check_delta_squared(s, q_min, q_max);
    Table& g = r.table("symbol dimensions", {"q", "dim_g"});
    for (std::size_t i = 0; i < sr.symbol_dimensions.size(); ++i)
        g.rows.push_back({std::to_string(q_min + i), std::to_string(sr.symbol_dimensions[i])});
    Table& t = r.table("cohomology", {"q", "p", "dim_H"});
    for (const auto& c : sr.cells)
        t.rows.push_back({std::to_string(c.q), std::to_string(c.p), std::to_string(c.dimension)});
    r.verdict("spencer", "delta-squared", "ZERO");
    r.verdict("spencer", "2-acyclicity on range", sr.two_acyclic ? "ACYCLIC" : "NOT_ACYCLIC");
    r.verdict("spencer", "first 2-acyclic order",
              sr.first_acyclic ? std::to_string(*sr.first_acyclic) : std::string("NONE"));
}

void cmd_cartan(Context& ctx)
{
    Report& r = ctx.report;
    const PdeSystem s = system_of(ctx.source(0));
    describe_system(r, s);
    const CartanResult c = cartan_characters(s, ctx.opt().order, ctx.opt().seed);
    r.field("symbol_order", std::to_string(c.q));
    r.field("dim_g", std::to_string(c.dim_g));
    r.field("dim_g_next", std::to_string(c.dim_next));
    std::size_t weighted = 0;
    Table& t = r.table("characters", {"j", "alpha_j"});
    for (std::size_t j = 0; j < c.characters.size(); ++j) {
        t.rows.push_back({std::to_string(j + 1), std::to_string(c.characters[j])});
        weighted += (j + 1) * c.characters[j];
    }
    r.field("weighted_sum", std::to_string(weighted));
    r.verdict("cartan", "dim g_{q+1} = sum j*alpha_j", c.involutive ? "INVOLUTIVE" : "NOT_INVOLUTIVE");
    r.warn("characters taken as the maximum over seeded generic flags");
}

void cmd_derived_flag(Context& ctx)
{
    Report& r = ctx.report;
    const auto file = ctx.source(0);
    const auto& decl = require_decl<dsl::PfaffDecl>(file, "pfaffian");
    const PfaffSystem s = decl.system();
    describe_pfaffian(r, decl.name, s);
    const DerivedFlag f = derived_flag(s);
    Table& t = r.table("derived flag", {"level", "rank", "generators"});
    for (std::size_t i = 0; i < f.systems.size(); ++i)
        t.rows.push_back({std::to_string(i), std::to_string(f.ranks[i]), f.systems[i].str()});
    r.field("ranks", join_numbers(f.ranks));
    r.field("length", std::to_string(f.length));
    r.verdict("derived-flag", "stabilization", "length " + std::to_string(f.length) + ", final rank " +
                                                   std::to_string(f.ranks.back()));
}

void cmd_classify_pfaff(Context& ctx)
{
    Report& r = ctx.report;
    const auto file = ctx.source(0);
    const auto& decl = require_decl<dsl::PfaffDecl>(file, "pfaffian");
    const PfaffSystem s = decl.system();
    describe_pfaffian(r, decl.name, s);
    const FlagVerdict v = flag_classify(s, ctx.opt().seed);
    r.field("rank", std::to_string(v.rank.rank));
    r.field("corank", std::to_string(v.rank.corank));
    if (!v.ranks.empty())
        r.field("ranks", join_numbers(v.ranks));
    if (v.is_flag)
        r.verdict("classify-pfaff", "corank 2, derived ranks, characteristics", "FLAG(" + std::to_string(v.length) + ")");
    else
        r.verdict("classify-pfaff", v.reason, "NOT_FLAG");
    if (v.sampled_points > 0)
        r.warn("characteristic spaces checked at " + std::to_string(v.sampled_points) + " sampled points only");
}

void cmd_frobenius(Context& ctx)
{
    Report& r = ctx.report;
    const auto file = ctx.source(0);
    const auto& decl = require_decl<dsl::PfaffDecl>(file, "pfaffian");
    const PfaffSystem s = decl.system();
    describe_pfaffian(r, decl.name, s);
    const RankCorank rc = rank_corank(s);
    r.field("rank", std::to_string(rc.rank));
    r.field("corank", std::to_string(rc.corank));
    r.verdict("frobenius", "d(omega) in ideal", frobenius_test(s) ? "INTEGRABLE" : "NOT_INTEGRABLE");
}

void describe_verdict(Report& r, const EquivalenceVerdict& v, const std::string& condition)
{
    r.verdict(v.operation, condition, to_string(v.kind));
    if (!v.rule.empty())
        r.field("rule", v.rule);
    if (v.kind == VerdictKind::MerihedricEquivalent)
        r.field("level", std::to_string(v.level));
    if (!v.detail.empty())
        r.field("detail", v.detail);
    if (v.first_order_equivalent)
        r.field("first_order_equivalent", *v.first_order_equivalent ? "true" : "false");
    if (v.witness_dimensions)
        r.field("witness_dimensions",
                std::to_string(v.witness_dimensions->first) + " vs " + std::to_string(v.witness_dimensions->second));
    if (!v.witness_point.empty()) {
        std::vector<std::string> s;
        for (std::size_t i = 0; i < v.witness_point.size(); ++i)
            s.push_back((i < v.witness_names.size() ? v.witness_names[i] : "?") + "=" + v.witness_point[i].str());
        r.field("witness_point", join(s));
    }
    if (v.sampled)
        r.warn("verdict rests on " + std::to_string(v.samples) + " sampled points; it can falsify but not certify");
}

void cmd_pfaff_equiv(Context& ctx)
{
    Report& r = ctx.report;
    const auto fa = ctx.source(0), fb = ctx.source(1);
    const auto& da = require_decl<dsl::PfaffDecl>(fa, "pfaffian");
    const auto& db = require_decl<dsl::PfaffDecl>(fb, "pfaffian");
    const PfaffSystem a = da.system(), b = db.system();
    describe_pfaffian(r, da.name, a, "a.");
    describe_pfaffian(r, db.name, b, "b.");
    const RankCorank ra = rank_corank(a), rb = rank_corank(b);
    Table& t = r.table("rank and corank", {"system", "rank", "corank"});
    t.rows.push_back({da.name, std::to_string(ra.rank), std::to_string(ra.corank)});
    t.rows.push_back({db.name, std::to_string(rb.rank), std::to_string(rb.corank)});
    const EquivalenceVerdict v = pfaff_rules(a, b);
    describe_verdict(r, v, v.rule.empty() ? "rank, corank, derived flag" : v.rule);
}

void cmd_ode_equiv(Context& ctx)
{
    Report& r = ctx.report;
    const auto fa = ctx.source(0), fb = ctx.source(1);
    const PdeSystem a = system_of(fa), b = system_of(fb);
    describe_system(r, a, "a.");
    describe_system(r, b, "b.");
    auto first_point = [](const dsl::SourceFile& f, const PdeSystem& s) {
        const auto pts = file_points(f, s.chart().with_order(0).chart());
        return pts.empty() ? std::vector<Rational>{} : pts.front();
    };
    const auto p = first_point(fa, a), q = first_point(fb, b);
    if (!p.empty())
        r.field("a.point", point_text(a.chart().with_order(0).chart(), p));
    if (!q.empty())
        r.field("b.point", point_text(b.chart().with_order(0).chart(), q));
    describe_verdict(r, ode_nonsingular_rule(a, b, p, q), "explicit first order, (1, f) nonvanishing");
}

void cmd_equiv_gate(Context& ctx)
{
    Report& r = ctx.report;
    const auto fa = ctx.source(0), fb = ctx.source(1);
    const PdeSystem a = system_of(fa), b = system_of(fb);
    const unsigned q_max = ctx.opt().orders.value_or(2);
    describe_system(r, a, "a.");
    describe_system(r, b, "b.");
    r.field("q_max", std::to_string(q_max));
    const GateReport g = gate(a, b, q_max, file_points(fa, a.chart().chart()), file_points(fb, b.chart().chart()),
                              ctx.opt().seed);
    Table& dims = r.table("dimensions", {"level", "dim_a", "dim_b", "symbol_a", "symbol_b"});
    const std::size_t rows = std::max(g.dimensions_a.size(), g.symbols_a.size());
    auto cell = [](const std::vector<std::size_t>& v, std::size_t i) {
        return i < v.size() ? std::to_string(v[i]) : std::string("-");
    };
    for (std::size_t i = 0; i < rows; ++i)
        dims.rows.push_back({std::to_string(i), cell(g.dimensions_a, i), cell(g.dimensions_b, i),
                             cell(g.symbols_a, i), cell(g.symbols_b, i)});
    Table& t = r.table("conditions", {"level", "condition", "status", "witness"});
    for (const auto& e : g.entries)
        t.rows.push_back({std::to_string(e.order), to_string(e.condition), to_string(e.status), e.witness});
    if (g.common_acyclic_order)
        r.field("common_acyclic_order", std::to_string(*g.common_acyclic_order));
    r.field("summary", g.summary);
    if (g.failure)
        r.verdict("gate", to_string(g.failure->condition) + " at level " + std::to_string(g.failure->order),
                  to_string(g.overall));
    else
        r.verdict("gate", "all conditions through level " + std::to_string(q_max), to_string(g.overall));
    for (const auto& w : g.warnings)
        r.warn(w);
}

void cmd_equiv_verify(Context& ctx)
{
    Report& r = ctx.report;
    const auto fa = ctx.source(0), fb = ctx.source(1), fm = ctx.source(2);
    const PdeSystem a = system_of(fa), b = system_of(fb);
    const auto& md = require_decl<dsl::MapDecl>(fm, "map");
    const FiberedMap phi = md.map();
    const unsigned level = ctx.opt().levels.value_or(0);
    describe_system(r, a, "a.");
    describe_system(r, b, "b.");
    r.field("map", md.name);
    r.field("level", std::to_string(level));
    const EquivalenceVerdict v = level == 0 ? verify_absolute(a, b, phi, ctx.opt().seed)
                                            : verify_merihedric(a, b, phi, level, ctx.opt().seed);
    describe_verdict(r, v, level == 0 ? "map carries locus onto locus, both directions"
                                      : "prolonged map carries locus onto locus at level " + std::to_string(level));
}

void cmd_jet_compose(Context& ctx)
{
    Report& r = ctx.report;
    const auto fa = ctx.source(0), fb = ctx.source(1);
    const auto& ma = require_decl<dsl::MapDecl>(fa, "map");
    const auto& mb = require_decl<dsl::MapDecl>(fb, "map");
    if (ma.base.size() != mb.base.size())
        throw UsageError("maps act on bases of different dimensions");
    if (!ctx.opt().point)
        throw UsageError("jet-compose needs --point with base coordinates");
    const unsigned k = ctx.opt().order.value_or(2);
    const FiberedMap a = ma.map(), b = mb.map();
    const auto point = dsl::resolve_point(dsl::parse_assignments(*ctx.opt().point), a.base_chart());
    std::vector<Poly> b_base;
    for (const auto& p : b.base())
        b_base.push_back(p.rechart(a.base_chart()));
    r.field("first", ma.name);
    r.field("second", mb.name);
    r.field("jet_order", std::to_string(k));
    const JetOfMap ja = jet_of_polynomial_map(a.base(), point, k);
    const JetOfMap jb = jet_of_polynomial_map(b_base, ja.target(), k);
    const JetOfMap c = jet_compose(jb, ja);
    if (!(c == jet_of_polynomial_map(compose_maps(b_base, a.base()), point, k)))
        throw InvariantViolation("jet of the composite differs from the composite of the jets");
    r.field("source", point_text(a.base_chart(), c.source()));
    r.field("target", point_text(a.base_chart(), c.target()));
    Table& t = r.table("composite jet coefficients", {"component", "index", "coefficient"});
    const auto indices = enumerate_multi_indices(c.n(), k);
    for (std::size_t i = 0; i < c.n(); ++i)
        for (const auto& beta : indices)
            if (beta.order() > 0)
                t.rows.push_back({a.base_chart()->name(i), "[" + beta.str() + "]", c.coefficient(i, beta).str()});
    try {
        const JetOfMap inv = jet_invert(c);
        if (!(jet_compose(inv, c) == JetOfMap::identity(c.source(), k)))
            throw InvariantViolation("inverse jet does not compose to the identity");
        r.verdict("jet-compose", "invertible linear part", "INVERTIBLE");
    } catch (const SingularPoint&) {
        r.verdict("jet-compose", "invertible linear part", "SINGULAR");
    }
    r.verdict("jet-compose", "agreement with composed polynomial maps", "EXACT");
}

struct CommandSpec {
    std::string name;
    std::size_t files;
    std::vector<std::string> options;
    std::function<void(Context&)> body;
};

const std::vector<CommandSpec>& specs()
{
    static const std::vector<CommandSpec> s{
        {"prolong", 1, {"levels", "seed"}, cmd_prolong},
        {"dimension", 1, {"levels"}, cmd_dimension},
        {"symbol", 1, {"order", "point"}, cmd_symbol},
        {"spencer", 1, {"orders"}, cmd_spencer},
        {"cartan", 1, {"order", "seed"}, cmd_cartan},
        {"derived-flag", 1, {}, cmd_derived_flag},
        {"classify-pfaff", 1, {"seed"}, cmd_classify_pfaff},
        {"frobenius", 1, {}, cmd_frobenius},
        {"pfaff-equiv", 2, {}, cmd_pfaff_equiv},
        {"ode-equiv", 2, {}, cmd_ode_equiv},
        {"equiv-gate", 2, {"orders", "seed"}, cmd_equiv_gate},
        {"equiv-verify", 3, {"levels", "seed"}, cmd_equiv_verify},
        {"jet-compose", 2, {"order", "point"}, cmd_jet_compose},
    };
    return s;
}

std::string echo(const Invocation& inv)
{
    std::string s = "plab " + inv.command;
    for (const auto& f : inv.files)
        s += " " + basename(f);
    const Options& o = inv.options;
    if (o.order)
        s += " --order " + std::to_string(*o.order);
    if (o.orders)
        s += " --orders " + std::to_string(*o.orders);
    if (o.point)
        s += " --point \"" + *o.point + "\"";
    if (o.levels)
        s += " --levels " + std::to_string(*o.levels);
    s += " --seed " + std::to_string(o.seed);
    return s;
}

std::vector<std::string> given_options(const Options& o)
{
    std::vector<std::string> out;
    if (o.order)
        out.push_back("order");
    if (o.orders)
        out.push_back("orders");
    if (o.point)
        out.push_back("point");
    if (o.levels)
        out.push_back("levels");
    return out;
}

} // namespace

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : specs())
            v.push_back(s.name);
        return v;
    }();
    return names;
}

Report run(const Invocation& inv)
{
    Report report;
    report.command = echo(inv);
    std::string digest_input;
    try {
        std::vector<Input> inputs;
        for (const auto& path : inv.files) {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw UsageError("cannot read " + path);
            std::ostringstream buf;
            buf << in.rdbuf();
            inputs.push_back({path, buf.str()});
            digest_input += basename(path) + '\0' + inputs.back().text + '\0';
        }
        report.inputs_digest = sha256_hex(digest_input);

        const CommandSpec* spec = nullptr;
        for (const auto& s : specs())
            if (s.name == inv.command)
                spec = &s;
        if (!spec)
            throw UsageError("unknown command '" + inv.command + "'; expected one of " + join(commands()));
        if (inv.files.size() != spec->files)
            throw UsageError(inv.command + " takes " + std::to_string(spec->files) + " file(s), got " +
                             std::to_string(inv.files.size()));
        for (const auto& o : given_options(inv.options))
            if (std::find(spec->options.begin(), spec->options.end(), o) == spec->options.end())
                report.warn("option --" + o + " is ignored by " + inv.command);
        Context ctx{inv, std::move(inputs), report};
        spec->body(ctx);
        report.exit_status = 0;
    } catch (const InvariantViolation& e) {
        report.error = std::string("invariant violation: ") + e.what();
        report.exit_status = 2;
    } catch (const ParseError& e) {
        report.error = std::string("parse error: ") + e.what();
        report.exit_status = 1;
    } catch (const Error& e) {
        report.error = e.what();
        report.exit_status = 1;
    } catch (const std::exception& e) {
        report.error = std::string("internal error: ") + e.what();
        report.exit_status = 2;
    }
    if (report.inputs_digest.empty())
        report.inputs_digest = sha256_hex(digest_input);
    return report;
}

} // namespace plab::cli
