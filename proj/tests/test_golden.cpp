#include "golden_cases.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace plab;

namespace {

const std::filesystem::path kTests = PLAB_TESTS_DIR;

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("golden reports")
{
    const bool update = std::getenv("PLAB_UPDATE_GOLDEN") != nullptr;
    const auto cases = testing::load_golden_cases(kTests / "golden" / "cases.txt", kTests / "corpus");
    REQUIRE(cases.size() >= 12);
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const std::string got = testing::render(c);
        const auto path = kTests / "golden" / (c.name + (c.json ? ".json" : ".txt"));
        if (update) {
            std::ofstream(path, std::ios::binary) << got;
            continue;
        }
        REQUIRE_MESSAGE(std::filesystem::exists(path), "missing golden file " << path.string());
        CHECK(got == slurp(path));
    }
}

TEST_CASE("golden corpus covers every corpus file")
{
    const auto list = slurp(kTests / "golden" / "cases.txt");
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kTests / "corpus")) {
        ++files;
        CAPTURE(entry.path().filename().string());
        CHECK(list.find(entry.path().filename().string()) != std::string::npos);
    }
    CHECK(files >= 12);
}
