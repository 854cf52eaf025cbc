#pragma once

#include <string>
#include <utility>
#include <vector>

namespace plab {

/// A verdict together with the operation and condition that produced it.
struct Verdict {
    std::string operation;
    std::string condition;
    std::string value;
};

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Command output; both serializations depend only on the stored fields.
struct Report {
    std::string command;
    std::string inputs_digest;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<Table> tables;
    std::vector<Verdict> verdicts;
    std::vector<std::string> warnings;
    std::string error;
    int exit_status = 0;

    void field(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
    Table& table(std::string title, std::vector<std::string> columns);
    void verdict(std::string operation, std::string condition, std::string value);
    void warn(std::string message) { warnings.push_back(std::move(message)); }

    std::string text() const;
    std::string json() const;
};

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

} // namespace plab
