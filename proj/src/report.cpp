#include "plab/report.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace plab {

Table& Report::table(std::string title, std::vector<std::string> columns)
{
    tables.push_back(Table{std::move(title), std::move(columns), {}});
    return tables.back();
}

void Report::verdict(std::string operation, std::string condition, std::string value)
{
    verdicts.push_back(Verdict{std::move(operation), std::move(condition), std::move(value)});
}

std::string Report::text() const
{
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "inputs: sha256:" << inputs_digest << "\n";
    for (const auto& [k, v] : fields)
        os << k << ": " << v << "\n";
    for (const auto& t : tables) {
        os << "\n[" << t.title << "]\n";
        std::vector<std::size_t> width(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            width[c] = t.columns[c].size();
            for (const auto& row : t.rows)
                width[c] = std::max(width[c], row.at(c).size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                s += cells[c];
                if (c + 1 < cells.size())
                    s += std::string(width[c] - cells[c].size() + 2, ' ');
            }
            os << s << "\n";
        };
        line(t.columns);
        for (const auto& row : t.rows)
            line(row);
    }
    if (!verdicts.empty() || !warnings.empty() || !error.empty())
        os << "\n";
    for (const auto& v : verdicts)
        os << "verdict " << v.operation << "/" << v.condition << ": " << v.value << "\n";
    for (const auto& w : warnings)
        os << "warning: " << w << "\n";
    if (!error.empty())
        os << "error: " << error << "\n";
    os << "exit: " << exit_status << "\n";
    return os.str();
}

std::string Report::json() const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = "sha256:" + inputs_digest;
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields)
        f[k] = v;
    j["fields"] = f;
    nlohmann::ordered_json ts = nlohmann::ordered_json::array();
    for (const auto& t : tables)
        ts.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
    j["tables"] = ts;
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : verdicts)
        vs.push_back({{"operation", v.operation}, {"condition", v.condition}, {"value", v.value}});
    j["verdicts"] = vs;
    j["warnings"] = warnings;
    if (!error.empty())
        j["error"] = error;
    j["exit"] = exit_status;
    return j.dump(2) + "\n";
}

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < length; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

} // namespace plab
