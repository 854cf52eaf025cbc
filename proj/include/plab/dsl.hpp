#pragma once

#include "plab/diff_form.hpp"
#include "plab/equivalence.hpp"
#include "plab/jet.hpp"
#include "plab/pde_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace plab::dsl {

struct SystemDecl {
    std::string name;
    std::vector<std::string> base;
    std::vector<std::string> fiber;
    unsigned order = 0;
    std::vector<Poly> equations;                      ///< on jet_chart()
    std::vector<std::pair<std::size_t, Poly>> solved; ///< (leading coordinate, right-hand side)

    JetChart jet_chart() const { return JetChart(base, fiber, order); }
    /// A system given only by `solve` lines keeps its solved form verbatim.
    PdeSystem system() const;

    friend bool operator==(const SystemDecl&, const SystemDecl&) = default;
};

struct PfaffDecl {
    std::string name;
    std::vector<std::string> coords;
    std::vector<DiffForm> forms;

    PfaffSystem system() const;

    friend bool operator==(const PfaffDecl&, const PfaffDecl&) = default;
};

struct MapDecl {
    std::string name;
    std::vector<std::string> base;
    std::vector<std::string> fiber;
    std::vector<Poly> base_images;  ///< on the base chart
    std::vector<Poly> fiber_images; ///< on the total chart
    std::vector<Poly> base_inverse;
    std::vector<Poly> fiber_inverse;

    FiberedMap map() const;

    friend bool operator==(const MapDecl&, const MapDecl&) = default;
};

/// Coordinate assignment; jet coordinates use chart names such as "u[2,0]".
struct PointDecl {
    std::string name;
    std::vector<std::pair<std::string, Rational>> values;

    friend bool operator==(const PointDecl&, const PointDecl&) = default;
};

using Declaration = std::variant<SystemDecl, PfaffDecl, MapDecl, PointDecl>;

const std::string& declaration_name(const Declaration& d);

struct SourceFile {
    std::string path;
    std::string text;
    std::vector<Declaration> declarations;

    /// First declaration of type T, if any.
    template <class T>
    const T* first() const
    {
        for (const auto& d : declarations)
            if (const auto* p = std::get_if<T>(&d))
                return p;
        return nullptr;
    }

    template <class T>
    std::vector<const T*> all() const
    {
        std::vector<const T*> out;
        for (const auto& d : declarations)
            if (const auto* p = std::get_if<T>(&d))
                out.push_back(p);
        return out;
    }
};

/// Throws ParseError with a line and column on any syntax, name or shape error.
SourceFile parse(std::string_view text, std::string path = {});
/// Reads and parses a file; an unreadable file is a UsageError.
SourceFile read_source(const std::string& path);

/// "x=0, u=1, u[1]=1/2" as used by --point.
std::vector<std::pair<std::string, Rational>> parse_assignments(std::string_view text);

/// Values for every coordinate of `chart`, in chart order. Throws
/// IncompletePoint for missing names and ChartMismatch for unknown ones.
std::vector<Rational> resolve_point(const std::vector<std::pair<std::string, Rational>>& values,
                                    const ChartPtr& chart);

/// Re-parseable source text.
std::string print(const Declaration& d);
std::string print(const SourceFile& f);

} // namespace plab::dsl
