#pragma once

#include "plab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plab::testing {

struct GoldenCase {
    std::string name;
    cli::Invocation invocation;
    bool json = false;
};

/// Reads "name: command args..." lines; file arguments are resolved against `corpus`.
inline std::vector<GoldenCase> load_golden_cases(const std::filesystem::path& list, const std::filesystem::path& corpus)
{
    std::ifstream in(list);
    if (!in)
        throw std::runtime_error("cannot read " + list.string());
    std::vector<GoldenCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto colon = line.find(':');
        GoldenCase c;
        c.name = line.substr(0, colon);
        std::istringstream words(line.substr(colon + 1));
        std::vector<std::string> args;
        for (std::string w; words >> w;)
            args.push_back(w);
        c.invocation.command = args.at(0);
        for (std::size_t i = 1; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto value = [&] { return args.at(++i); };
            if (a == "--order")
                c.invocation.options.order = std::stoul(value());
            else if (a == "--orders")
                c.invocation.options.orders = std::stoul(value());
            else if (a == "--levels")
                c.invocation.options.levels = std::stoul(value());
            else if (a == "--point")
                c.invocation.options.point = value();
            else if (a == "--seed")
                c.invocation.options.seed = std::stoull(value());
            else if (a == "--json")
                c.json = true;
            else
                c.invocation.files.push_back((corpus / a).string());
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

inline std::string render(const GoldenCase& c)
{
    const Report r = cli::run(c.invocation);
    return c.json ? r.json() : r.text();
}

} // namespace plab::testing
