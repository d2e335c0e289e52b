#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "process.hpp"

using testing::run_command;
using testing::strip_wall_time;

namespace
{

const std::string bbverify = BBVERIFY_PATH;
const std::string golden_path = std::string(GOLDEN_DIR) + "/small_campaign.json";

testing::CommandResult cli(const std::string &args, bool keep_stderr = false)
{
    return run_command(bbverify + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null"));
}

} // namespace

TEST_CASE("small campaign matches the golden report")
{
    const auto r = cli("--max-degree 3 --egf-order 6");
    REQUIRE(r.exit_code == 0);
    const std::string actual = strip_wall_time(r.out);
    if (std::getenv("BBF_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(golden_path, std::ios::binary) << actual;
    }
    std::ifstream in(golden_path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream expected;
    expected << in.rdbuf();
    CHECK(actual == expected.str());
}

TEST_CASE("default campaign is byte-stable")
{
    const auto a = cli("--seed 42");
    const auto b = cli("--seed 42 --threads 1");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(strip_wall_time(a.out) == strip_wall_time(b.out));
    CHECK(a.out.find("\"wall_time_seconds\"") != std::string::npos);
}

TEST_CASE("mutation exits 1 with a witness")
{
    const auto r = cli("--max-degree 4 --egf-order 8 --identities verify_derivative --mutate verify_derivative");
    CHECK(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["totals"]["fail"].get<int>() > 0);
    CHECK(j["config"]["mutate"] == "verify_derivative");
    bool saw_witness = false;
    for (const auto &res : j["results"]) {
        if (res["verdict"] == "fail") {
            saw_witness = true;
            CHECK(res.contains("witness"));
        }
    }
    CHECK(saw_witness);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(cli("--max-degree 10 --egf-order 5").exit_code == 2);
    CHECK(cli("--identities verify_nothing").exit_code == 2);
    CHECK(cli("--mutate verify_nothing").exit_code == 2);
    CHECK(cli("--format yaml").exit_code == 2);
    CHECK(cli("--series-eps -1").exit_code == 2);
    CHECK(cli("--no-such-flag").exit_code == 2);
    const auto r = cli("--max-degree 10 --egf-order 5", true);
    CHECK(r.out.find("egf_order") != std::string::npos);
}

TEST_CASE("identity selection in text format")
{
    const auto r = cli("--identities verify_sum --max-degree 3 --format text");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    int checks = 0;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        checks += line.rfind("PASS verify_sum", 0) == 0 ? 1 : 0;
    }
    CHECK(checks == 4);
    CHECK(lines == 4 + 3);
    CHECK(r.out.find("total=4 pass=4 fail=0") != std::string::npos);
}

TEST_CASE("catalog and version")
{
    const auto list = cli("--list-identities");
    CHECK(list.exit_code == 0);
    CHECK(list.out.find("FE-XY") != std::string::npos);
    CHECK(list.out.find("series.TG4") != std::string::npos);
    const auto version = cli("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.out.find("1.0.0") != std::string::npos);
}
