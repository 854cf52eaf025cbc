#include "plab/pfaffian.hpp"

#include "plab/errors.hpp"
#include "plab/random.hpp"

#include <map>
#include <sstream>

namespace plab {

namespace {

DiffForm wedge_all(const PfaffSystem& s)
{
    DiffForm omega = DiffForm::function(s.chart, RatFunc(1));
    for (const auto& g : s.generators)
        omega = wedge(omega, g);
    return omega;
}

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

} // namespace

PfaffSystem derived_system(const PfaffSystem& s)
{
    if (s.generators.empty())
        return s;
    const DiffForm omega = wedge_all(s);
    std::vector<DiffForm> products;
    std::map<IndexSet, std::size_t> rows;
    for (const auto& g : s.generators) {
        products.push_back(wedge(exterior_derivative(g), omega));
        for (const auto& [k, c] : products.back().terms())
            rows.emplace(k, 0);
    }
    if (rows.empty())
        return s;
    std::size_t next = 0;
    for (auto& [k, r] : rows)
        r = next++;
    Matrix<RatFunc> m(rows.size(), s.generators.size());
    for (std::size_t i = 0; i < products.size(); ++i)
        for (const auto& [k, c] : products[i].terms())
            m(rows.at(k), i) = c;
    PfaffSystem out{s.chart, {}};
    for (const auto& v : kernel_basis(m)) {
        DiffForm w(s.chart, 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero())
                w += s.generators[i].scaled(RatFunc(v[i]));
        out.generators.push_back(std::move(w));
    }
    return out;
}

DerivedFlag derived_flag(const PfaffSystem& s)
{
    DerivedFlag flag;
    flag.systems.push_back(s);
    flag.ranks.push_back(rank_corank(s).rank);
    while (flag.ranks.back() > 0) {
        PfaffSystem next = derived_system(flag.systems.back());
        const std::size_t r = rank_corank(next).rank;
        if (r == flag.ranks.back())
            break;
        flag.systems.push_back(std::move(next));
        flag.ranks.push_back(r);
        ++flag.length;
    }
    if (flag.ranks.back() > 0)
        flag.ranks.push_back(flag.ranks.back());
    return flag;
}

RankCorank rank_corank(const PfaffSystem& s)
{
    const std::size_t r = s.generators.empty() ? 0 : generic_rank(s.coefficient_matrix());
    return {r, s.dimension() - r};
}

bool frobenius_test(const PfaffSystem& s)
{
    const DiffForm omega = wedge_all(s);
    for (const auto& g : s.generators)
        if (!wedge(exterior_derivative(g), omega).is_zero())
            return false;
    return true;
}

CharacteristicSpace characteristic_space(const PfaffSystem& s, std::span<const Rational> at)
{
    const std::size_t dim = s.dimension();
    if (at.size() != dim)
        throw IncompletePoint("point needs " + std::to_string(dim) + " coordinates");
    const Matrix<Rational> a = evaluate(s.coefficient_matrix(), at);
    if (!s.generators.empty() && rank(a) < s.generators.size())
        throw SingularPoint("generators are dependent at the point");

    std::vector<Vector<Rational>> annihilator;
    if (s.generators.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            Vector<Rational> e(dim);
            e[i] = 1;
            annihilator.push_back(std::move(e));
        }
    } else {
        annihilator = kernel_basis(a);
    }
    const std::size_t t = annihilator.size();

    Matrix<Rational> conditions(0, t);
    for (const auto& g : s.generators) {
        const DiffForm dg = exterior_derivative(g);
        for (std::size_t col = 0; col < t; ++col) {
            std::vector<Rational> row(t);
            for (std::size_t r = 0; r < t; ++r)
                row[r] = dg.evaluate(at, {annihilator[r], annihilator[col]});
            conditions.append_row(row);
        }
    }
    CharacteristicSpace out;
    std::vector<Vector<Rational>> coeffs;
    if (conditions.rows() == 0) {
        for (std::size_t r = 0; r < t; ++r) {
            Vector<Rational> e(t);
            e[r] = 1;
            coeffs.push_back(std::move(e));
        }
    } else {
        coeffs = kernel_basis(conditions);
    }
    for (const auto& c : coeffs) {
        std::vector<Rational> x(dim);
        for (std::size_t r = 0; r < t; ++r)
            for (std::size_t i = 0; i < dim; ++i)
                x[i] += c[r] * annihilator[r][i];
        out.basis.push_back(std::move(x));
    }
    out.dimension = out.basis.size();
    return out;
}

FlagVerdict flag_classify(const PfaffSystem& s, std::uint64_t seed)
{
    FlagVerdict v;
    v.rank = rank_corank(s);
    if (v.rank.corank != 2) {
        v.reason = "corank " + std::to_string(v.rank.corank) + ", flag systems have corank 2";
        return v;
    }
    const DerivedFlag flag = derived_flag(s);
    v.ranks = flag.ranks;
    bool chained = flag.ranks.size() == v.rank.rank + 1;
    for (std::size_t i = 0; chained && i < flag.ranks.size(); ++i)
        chained = flag.ranks[i] + i == v.rank.rank;
    if (!chained) {
        if (flag.length == 0 && v.rank.rank > 0)
            v.reason = "integrable, derived flag stabilizes at rank " + std::to_string(v.rank.rank);
        else
            v.reason = "derived ranks " + join(flag.ranks) + " do not drop by one to zero";
        return v;
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 100 && v.sampled_points < 5; ++attempt) {
        std::vector<Rational> point;
        for (std::size_t i = 0; i < s.dimension(); ++i)
            point.push_back(rng.small_rational());
        CharacteristicSpace c;
        try {
            c = characteristic_space(s, point);
        } catch (const SingularPoint&) {
            continue;
        }
        ++v.sampled_points;
        if (c.dimension > 0) {
            v.reason = "characteristics of dimension " + std::to_string(c.dimension) + " at a sampled point";
            return v;
        }
    }
    if (v.sampled_points == 0) {
        v.reason = "no regular sample point found";
        return v;
    }
    v.is_flag = true;
    v.length = flag.length;
    return v;
}

PfaffSystem goursat_model(std::size_t length)
{
    if (length == 0)
        throw UsageError("Goursat models need length at least 1");
    std::vector<std::string> names{"x"};
    for (std::size_t i = 0; i <= length; ++i)
        names.push_back("y" + std::to_string(i));
    PfaffSystem s{make_chart(names), {}};
    for (std::size_t i = 0; i < length; ++i) {
        DiffForm w = DiffForm::differential(s.chart, i + 1);
        w.add_term({0}, RatFunc(-Poly::variable(s.chart, i + 2)));
        s.generators.push_back(std::move(w));
    }
    return s;
}

} // namespace plab
