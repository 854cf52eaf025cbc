#pragma once

#include "plab/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plab::cli {

struct Options {
    std::optional<unsigned> order;
    std::optional<unsigned> orders;
    std::optional<std::string> point;
    std::optional<unsigned> levels;
    std::uint64_t seed = 0;
};

struct Invocation {
    std::string command;
    std::vector<std::string> files;
    Options options;
};

/// Names accepted by run(), in help order.
const std::vector<std::string>& commands();

/// Runs one command. Never throws; report.exit_status is 0 when the command
/// computed a result (whatever the verdict), 1 on usage or input errors and 2
/// when an internal identity check failed.
Report run(const Invocation& inv);

} // namespace plab::cli
