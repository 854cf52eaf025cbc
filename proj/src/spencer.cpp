#include "plab/spencer.hpp"

#include "plab/errors.hpp"
#include "plab/random.hpp"

#include <algorithm>
#include <map>

namespace plab {

namespace {

using Subset = std::vector<std::size_t>;

std::vector<Subset> subsets(std::size_t n, std::size_t p)
{
    std::vector<Subset> out;
    if (p > n)
        return out;
    Subset cur(p);
    for (std::size_t i = 0; i < p; ++i)
        cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = p;
        while (i > 0 && cur[i - 1] == n - p + i - 1)
            --i;
        if (i == 0)
            return out;
        ++cur[i - 1];
        for (std::size_t j = i; j < p; ++j)
            cur[j] = cur[j - 1] + 1;
    }
}

std::map<Subset, std::size_t> positions(const std::vector<Subset>& s)
{
    std::map<Subset, std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out.emplace(s[i], i);
    return out;
}

std::map<std::vector<unsigned>, std::size_t> alpha_positions(std::size_t n, unsigned q)
{
    std::map<std::vector<unsigned>, std::size_t> out;
    const auto idx = multi_indices_of_order(n, q);
    for (std::size_t i = 0; i < idx.size(); ++i)
        out.emplace(idx[i].exponents(), i);
    return out;
}

std::size_t rank_of(const Matrix<RatFunc>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return generic_rank(m);
}

} // namespace

SymbolSpace symbol(const PdeSystem& s, unsigned q, std::optional<std::span<const Rational>> at)
{
    const unsigned k = s.order();
    if (q < k)
        throw OrderMismatch("symbol order " + std::to_string(q) + " is below the system order " + std::to_string(k));
    const PdeSystem p = prolong(s, q - k);
    const JetChart& chart = p.chart();

    SymbolSpace g;
    g.n = chart.n();
    g.m = chart.m();
    g.q = q;
    const auto cols = chart.coordinates_of_order(q);
    for (auto c : cols) {
        const auto& coord = chart.coordinate(c);
        g.ambient.emplace_back(coord.component, coord.alpha);
    }
    const auto& eqs = p.equations();

    if (at) {
        if (at->size() != chart.dimension())
            throw IncompletePoint("symbol point needs " + std::to_string(chart.dimension()) + " coordinates");
        if (!p.contains(*at))
            throw NotOnLocus("point is not on the prolonged locus");
        g.point = std::vector<Rational>(at->begin(), at->end());
        Matrix<Rational> m(eqs.size(), cols.size());
        for (std::size_t r = 0; r < eqs.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                m(r, c) = eqs[r].partial(cols[c]).eval(*at);
        for (const auto& v : kernel_basis(m))
            g.basis.emplace_back(v.begin(), v.end());
        return g;
    }

    if (eqs.empty()) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Vector<RatFunc> e(cols.size(), RatFunc(0));
            e[c] = RatFunc(1);
            g.basis.push_back(std::move(e));
        }
        return g;
    }
    Matrix<RatFunc> m(eqs.size(), cols.size());
    const bool reduce = p.explicit_form().has_value();
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Poly d = eqs[r].partial(cols[c]);
            m(r, c) = RatFunc(reduce ? p.reduce(d) : d);
        }
    for (const auto& v : kernel_basis(m)) {
        Vector<RatFunc> w;
        for (const auto& e : v)
            w.emplace_back(e);
        g.basis.push_back(std::move(w));
    }
    return g;
}

Matrix<Rational> ambient_delta(std::size_t n, std::size_t m, unsigned q, unsigned p)
{
    const auto src_forms = subsets(n, p);
    const auto dst_forms = subsets(n, p + 1);
    const auto dst_form_pos = positions(dst_forms);
    const auto src_alpha = multi_indices_of_order(n, q);
    const std::size_t dst_alpha_count = q == 0 ? 0 : binomial(n + q - 2, q - 1);
    Matrix<Rational> d(dst_alpha_count * m * dst_forms.size(), src_alpha.size() * m * src_forms.size());
    if (q == 0 || dst_forms.empty())
        return d;
    const auto dst_alpha_pos = alpha_positions(n, q - 1);
    for (std::size_t ai = 0; ai < src_alpha.size(); ++ai) {
        const MultiIndex& alpha = src_alpha[ai];
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t xi = 0; xi < src_forms.size(); ++xi) {
                const std::size_t col = (ai * m + a) * src_forms.size() + xi;
                const Subset& form = src_forms[xi];
                for (std::size_t i = 0; i < n; ++i) {
                    if (alpha[i] == 0 || std::find(form.begin(), form.end(), i) != form.end())
                        continue;
                    Subset eta = form;
                    const auto before = std::count_if(form.begin(), form.end(), [&](std::size_t j) { return j < i; });
                    eta.insert(eta.begin() + before, i);
                    const std::size_t beta = dst_alpha_pos.at(alpha.lowered(i)->exponents());
                    const std::size_t row = (beta * m + a) * dst_forms.size() + dst_form_pos.at(eta);
                    const Rational value(static_cast<long>(alpha[i]));
                    d(row, col) += before % 2 == 0 ? value : -value;
                }
            }
    }
    return d;
}

Matrix<RatFunc> symbol_embedding(const SymbolSpace& g, unsigned p)
{
    const std::size_t forms = binomial(g.n, p);
    Matrix<RatFunc> e(g.ambient_dimension() * forms, g.dimension() * forms);
    for (std::size_t j = 0; j < g.dimension(); ++j)
        for (std::size_t t = 0; t < g.ambient_dimension(); ++t) {
            if (g.basis[j][t].is_zero())
                continue;
            const RatFunc c = g.basis[j][t] * RatFunc(Rational(1, g.ambient[t].second.factorial()));
            for (std::size_t xi = 0; xi < forms; ++xi)
                e(t * forms + xi, j * forms + xi) = c;
        }
    return e;
}

Matrix<RatFunc> delta_map(const SymbolSpace& g, unsigned p)
{
    return to_ratfunc(ambient_delta(g.n, g.m, g.q, p)) * symbol_embedding(g, p);
}

std::size_t SpencerReport::h(unsigned q, unsigned p) const
{
    for (const auto& c : cells)
        if (c.q == q && c.p == p)
            return c.dimension;
    return 0;
}

SpencerReport spencer_cohomology(const PdeSystem& s, unsigned q_min, unsigned q_max)
{
    if (q_max < q_min)
        throw UsageError("empty cohomology range");
    SpencerReport report;
    report.q_min = q_min;
    report.q_max = q_max;
    const std::size_t n = s.chart().n();
    std::vector<SymbolSpace> g;
    for (unsigned q = q_min; q <= q_max + 1; ++q) {
        g.push_back(symbol(s, q));
        report.symbol_dimensions.push_back(g.back().dimension());
    }
    std::map<std::pair<unsigned, unsigned>, std::size_t> ranks;
    auto delta_rank = [&](unsigned q, unsigned p) {
        auto key = std::make_pair(q, p);
        auto it = ranks.find(key);
        if (it != ranks.end())
            return it->second;
        const std::size_t r = p >= n ? 0 : rank_of(delta_map(g[q - q_min], p));
        ranks.emplace(key, r);
        return r;
    };
    for (unsigned q = q_min; q <= q_max; ++q)
        for (unsigned p = 0; p <= n; ++p) {
            const std::size_t total = g[q - q_min].dimension() * binomial(n, p);
            const std::size_t out = delta_rank(q, p);
            const std::size_t in = p == 0 ? 0 : delta_rank(q + 1, p - 1);
            if (out + in > total)
                throw InvariantViolation("delta ranks exceed the cochain dimension");
            report.cells.push_back({q, p, total - out - in});
        }
    auto acyclic_at = [&](unsigned q) { return report.h(q, 1) == 0 && report.h(q, 2) == 0; };
    report.two_acyclic = true;
    for (unsigned q = q_min; q <= q_max; ++q)
        report.two_acyclic = report.two_acyclic && acyclic_at(q);
    for (unsigned q = q_max + 1; q-- > q_min;) {
        if (!acyclic_at(q))
            break;
        report.first_acyclic = q;
    }
    return report;
}

CartanResult cartan_characters(const PdeSystem& s, std::optional<unsigned> q_opt, std::uint64_t seed)
{
    CartanResult result;
    result.q = q_opt.value_or(s.order());
    const SymbolSpace g = symbol(s, result.q);
    result.dim_g = g.dimension();
    result.dim_next = symbol(s, result.q + 1).dimension();
    const std::size_t n = g.n;
    const std::size_t m = g.m;

    std::map<std::pair<std::size_t, std::vector<unsigned>>, std::size_t> ambient_pos;
    for (std::size_t t = 0; t < g.ambient.size(); ++t)
        ambient_pos.emplace(std::make_pair(g.ambient[t].first, g.ambient[t].second.exponents()), t);
    const auto lower = result.q == 0 ? std::vector<MultiIndex>{} : multi_indices_of_order(n, result.q - 1);

    Rng rng(seed);
    std::vector<std::size_t> best;
    for (int trial = 0; trial < 5; ++trial) {
        Matrix<Rational> flag(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    flag(i, j) = rng.small_rational();
        } while (rank(flag) < n);

        std::vector<std::size_t> chars;
        Matrix<RatFunc> stacked(0, g.dimension());
        std::size_t previous = 0;
        for (std::size_t step = 0; step < n; ++step) {
            for (const auto& beta : lower)
                for (std::size_t a = 0; a < m; ++a) {
                    std::vector<RatFunc> row(g.dimension(), RatFunc(0));
                    for (std::size_t j = 0; j < g.dimension(); ++j)
                        for (std::size_t i = 0; i < n; ++i) {
                            if (flag(step, i).is_zero())
                                continue;
                            const std::size_t t = ambient_pos.at({a, beta.raised(i).exponents()});
                            row[j] += g.basis[j][t] * RatFunc(flag(step, i));
                        }
                    stacked.append_row(row);
                }
            const std::size_t r = g.dimension() == 0 ? 0 : rank_of(stacked);
            chars.push_back(r - previous);
            previous = r;
        }
        if (best.empty() || chars > best)
            best = chars;
    }
    result.characters = best;
    std::size_t weighted = 0;
    for (std::size_t j = 0; j < best.size(); ++j)
        weighted += (j + 1) * best[j];
    result.involutive = weighted == result.dim_next;
    return result;
}

} // namespace plab
