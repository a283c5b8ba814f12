#include "binsum/sweeps.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BINSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string expected_csv(int which) {
    const auto& ref = binsum::sweeps::reference_table(which);
    std::string out = "m,i1,i2,i3,i4,i5,i6\n";
    for (std::size_t row = 0; row < ref.size(); ++row) {
        out += std::to_string(row + 2);
        for (std::size_t i = 0; i < 6; ++i)
            out += "," + (i < ref[row].size() ? std::to_string(ref[row][i]) : std::string());
        out += "\n";
    }
    return out;
}

} // namespace

TEST_CASE("sum command", "[cli]") {
    RunResult r = run_cli("sum 4 0 2");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "sum");
    CHECK(doc["values"]["result"] == "8");
    CHECK(doc["counterexamples"].empty());
    CHECK(!doc.contains("pass"));

    CHECK(nlohmann::json::parse(run_cli("sum 5 0 3 --variant alt").out)["values"]["result"] == "-9");
    CHECK(nlohmann::json::parse(run_cli("sum 5 0 3 --variant star").out)["values"]["result"] == "11");
    CHECK(nlohmann::json::parse(run_cli("sum 5 0 3 --variant bracket").out)["values"]["result"] == "-9");
}

TEST_CASE("table command CSV matches the reference tables", "[cli]") {
    RunResult t1 = run_cli("table --which 1 --from 2 --to 12 --format csv");
    REQUIRE(t1.exit_code == 0);
    CHECK(t1.out == expected_csv(1));

    RunResult t2 = run_cli("table --which 2 --from 2 --to 12 --format csv");
    REQUIRE(t2.exit_code == 0);
    CHECK(t2.out == expected_csv(2));
}

TEST_CASE("table command JSON rows", "[cli]") {
    RunResult r = run_cli("table --which 1 --from 2 --to 4");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    auto rows = doc["values"]["rows"];
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["m"] == "2");
    CHECK(rows[0]["values"] == nlohmann::json::array({"4"}));
    CHECK(rows[2]["values"] == nlohmann::json::array({"6", "8"}));
}

TEST_CASE("coeffs, poly and sequence commands", "[cli]") {
    auto coeffs = nlohmann::json::parse(run_cli("coeffs 6 --kind a").out);
    CHECK(coeffs["values"]["values"] == nlohmann::json::array({"8", "19", "12"}));
    CHECK(nlohmann::json::parse(run_cli("coeffs 5 --kind c").out)["values"]["values"] ==
          nlohmann::json::array({"7", "13", "4"}));
    CHECK(nlohmann::json::parse(run_cli("coeffs 5 --kind d").out)["values"]["values"] ==
          nlohmann::json::array({"5", "5"}));

    auto poly = nlohmann::json::parse(run_cli("poly --kind f 6").out);
    CHECK(poly["values"]["coefficients"] == nlohmann::json::array({"-12", "19", "-8", "1"}));
    CHECK(poly["values"]["pretty"] == "x^3 - 8*x^2 + 19*x - 12");
    CHECK(nlohmann::json::parse(run_cli("poly --kind T 2").out)["values"]["coefficients"] ==
          nlohmann::json::array({"-1", "0", "2"}));
    CHECK(nlohmann::json::parse(run_cli("poly --kind U 1").out)["values"]["pretty"] == "2*x");
    CHECK(nlohmann::json::parse(run_cli("poly --kind A 6").out)["values"]["pretty"] == "x - 3");

    auto useq = nlohmann::json::parse(run_cli("useq 5 2 1 --lmax 2").out);
    CHECK(useq["values"]["values"] == nlohmann::json::array({"3/5", "1", "2"}));

    auto vseq = nlohmann::json::parse(run_cli("vseq 4 1 3 --lmax 3").out);
    CHECK(vseq["values"]["values"] == nlohmann::json::array({"1/2", "1", "3", "10"}));
}

TEST_CASE("check command pass path and exit codes", "[cli]") {
    RunResult ok = run_cli("check gould --m-max 25");
    REQUIRE(ok.exit_code == 0);
    auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["values"]["failures_total"] == "0");

    RunResult fleck = run_cli("check fleck --p 3 --n-max 40");
    CHECK(fleck.exit_code == 0);
    CHECK(nlohmann::json::parse(fleck.out)["pass"] == true);

    // precondition violations surface as exit 2 with no JSON on stdout
    CHECK(run_cli("sum 4 0 0").exit_code == 2);
    CHECK(run_cli("poly --kind C 0").exit_code == 2);
    CHECK(run_cli("check nosuch").exit_code == 2);
    CHECK(run_cli("useq 6 2 3").exit_code == 2);
}

TEST_CASE("byte-identical reruns", "[cli]") {
    const char* cmds[] = {
        "table --which 1 --from 2 --to 12 --format csv",
        "table --which 2 --from 2 --to 12",
        "check fleck --p 3 --n-max 30",
        "useq 7 3 2 --lmax 12",
        "sum 40 3 7",
    };
    for (const char* cmd : cmds) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        REQUIRE(a.exit_code == b.exit_code);
        REQUIRE(a.out == b.out);
        REQUIRE(!a.out.empty());
    }
}
