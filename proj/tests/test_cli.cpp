#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ptosc/cli.hpp"

using namespace ptosc;
using namespace ptosc::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"ptosc"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ptosc_test_cli_" + name);
}

}  // namespace

TEST_CASE("parse_values") {
    CHECK(parse_values("0.25") == std::vector<double>{0.25});
    CHECK(parse_values("0.1,0.5,0.9") == std::vector<double>{0.1, 0.5, 0.9});
    const auto grid = parse_values("0:1:5");
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == 0.0);
    CHECK(grid[2] == 0.5);
    CHECK(grid.back() == 1.0);
    CHECK_THROWS_AS(parse_values(""), ConfigError);
    CHECK_THROWS_AS(parse_values("x"), ConfigError);
    CHECK_THROWS_AS(parse_values("0:1:1"), ConfigError);
    CHECK_THROWS_AS(parse_values("1:0:5"), ConfigError);
    CHECK_THROWS_AS(parse_values("0:1"), ConfigError);
}

TEST_CASE("parse_methods, raw params and config text") {
    CHECK(parse_methods("trace,closed_form") == std::vector<Method>{Method::trace, Method::closed_form});
    CHECK(parse_methods("naive") == std::vector<Method>{Method::naive_continuation});
    CHECK_THROWS_AS(parse_methods("bogus"), ConfigError);

    const RawParams raw = parse_raw_params("2,1,0.3,0.5");
    CHECK(raw.m1_sq == 2.0);
    CHECK(raw.m2_sq == 1.0);
    CHECK(raw.mu_sq == 0.3);
    CHECK(raw.p == 0.5);
    CHECK_THROWS_AS(parse_raw_params("2,1"), ConfigError);

    const auto cfg = parse_config_text("# header\neta = 0.5\n\n  format=json # trailing\n");
    CHECK(cfg.size() == 2);
    CHECK(cfg.at("eta") == "0.5");
    CHECK(cfg.at("format") == "json");
    CHECK_THROWS_AS(parse_config_text("no separator here\n"), ConfigError);
}

TEST_CASE("format_double round-trips") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.10000000000000001");
    for (int k = 0; k < 200; ++k) {
        const double x = test::uniform(-1e3, 1e3);
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("probabilities CSV header and values") {
    const Run r = invoke({"probabilities", "--eta", "0.6", "--phase", "1.5707963267948966", "--methods",
                          "naive,hermitian,trace,closed_form"});
    REQUIRE(r.code == kExitSuccess);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] ==
          "eta,phase,pt_survival,pt_transition,trace_survival,trace_transition,herm_survival,herm_transition,"
          "naive_transition");
    const auto cells = split(rows[1]);
    REQUIRE(cells.size() == 9);
    CHECK(std::stod(cells[3]) == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(std::abs(std::stod(cells[5]) - 0.36) <= 1e-10);
    CHECK(std::stod(cells[7]) == doctest::Approx(0.36 / 1.36).epsilon(1e-12));
    CHECK(std::stod(cells[8]) == doctest::Approx(-0.5625).epsilon(1e-12));
}

TEST_CASE("default probabilities sweep") {
    const Run r = invoke({"probabilities"});
    REQUIRE(r.code == kExitSuccess);
    const auto rows = lines(r.out);
    CHECK(rows.size() == 1 + 20 * 64);
    CHECK(rows[0] == "eta,phase,pt_survival,pt_transition,herm_survival,herm_transition");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto cells = split(rows[k]);
        const double tr = std::stod(cells[3]);
        CHECK(tr >= 0.0);
        CHECK(tr <= 1.0);
    }
}

TEST_CASE("JSON output parses and mirrors CSV") {
    const Run csv = invoke({"cardioid", "--eta", "0.9", "--phase", "0,3.141592653589793"});
    const Run json = invoke({"cardioid", "--eta", "0.9", "--phase", "0,3.141592653589793", "--format", "json"});
    REQUIRE(csv.code == kExitSuccess);
    REQUIRE(json.code == kExitSuccess);
    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["r_ratio"].get<double>() == doctest::Approx(0.19 / 1.81).epsilon(1e-12));
    CHECK(doc[1]["r"].get<double>() == doctest::Approx(1.81 / 0.19).epsilon(1e-12));
    CHECK(lines(csv.out)[0] == "eta,phase,r,r_ratio");
    CHECK(std::stod(split(lines(csv.out)[1])[3]) == doc[0]["r_ratio"].get<double>());
}

TEST_CASE("masses table") {
    const Run r = invoke({"masses", "--eta", "0,1,1.7320508075688772,2", "--format", "json"});
    REQUIRE(r.code == kExitSuccess);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.size() == 4);
    // ratio 0.5 puts m1^2 and m2^2 at 3/4 and 1/4 of the sum.
    CHECK(doc[0]["pt_m_plus_sq"].get<double>() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(doc[0]["herm_m_minus_sq"].get<double>() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(doc[1]["pt_m_plus_sq"].get<double>() == 0.5);
    CHECK(doc[1]["pt_m_minus_sq"].get<double>() == 0.5);
    CHECK(std::abs(doc[2]["herm_m_minus_sq"].get<double>()) <= 1e-9);
    CHECK(doc[2]["pt_m_plus_sq"].is_null());
    CHECK(doc[3]["pt_m_minus_sq"].is_null());
    CHECK(doc[3]["herm_m_minus_sq"].get<double>() < 0.0);

    const Run third = invoke({"masses", "--eta", "0", "--ratio", "0.33333333333333333"});
    const auto cells = split(lines(third.out)[1]);
    CHECK(std::stod(cells[1]) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(std::stod(cells[2]) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(std::stod(cells[3]) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(std::stod(cells[4]) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    const auto empty = split(lines(invoke({"masses", "--eta", "2"}).out)[1]);
    REQUIRE(empty.size() == 5);
    CHECK(empty[1].empty());
    CHECK(empty[2].empty());
}

TEST_CASE("exit codes") {
    CHECK(invoke({"validate"}).code == kExitSuccess);
    CHECK(invoke({"validate", "--tolerance", "1e-30"}).code == kExitValidationFailure);
    CHECK(invoke({"probabilities", "--eta", "abc"}).code == kExitBadConfig);
    CHECK(invoke({"probabilities", "--format", "xml"}).code == kExitBadConfig);
    CHECK(invoke({"probabilities", "--no-such-flag"}).code == kExitBadConfig);
    CHECK(invoke({}).code == kExitBadConfig);
    CHECK(invoke({"probabilities", "--raw-params", "1,1,0.3,0"}).code == kExitBadConfig);
    CHECK(invoke({"probabilities", "--config", "/nonexistent/ptosc.cfg"}).code == kExitBadConfig);
    CHECK(invoke({"probabilities", "--eta", "1.2"}).code == kExitDomainError);
    CHECK(invoke({"probabilities", "--eta", "1", "--methods", "trace"}).code == kExitDomainError);
    const Run broken = invoke({"probabilities", "--eta", "1.2"});
    CHECK(broken.out.empty());
    CHECK(broken.err.find("BrokenPTPhase") != std::string::npos);
}

TEST_CASE("validate output routing") {
    const Run text = invoke({"validate"});
    CHECK(text.out.find("63/63 checks passed") != std::string::npos);
    const Run json = invoke({"validate", "--json"});
    REQUIRE(json.code == kExitSuccess);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc.size() == 63);
    for (const auto& row : doc) CHECK(row["passed"].get<bool>());
    CHECK(json.err.find("checks passed") != std::string::npos);
}

TEST_CASE("runs are byte-identical") {
    const Run a = invoke({"probabilities", "--methods", "closed_form,trace,hermitian,naive", "--t0", "1.7"});
    const Run b = invoke({"probabilities", "--methods", "closed_form,trace,hermitian,naive", "--t0", "1.7"});
    CHECK(a.code == kExitSuccess);
    CHECK(a.out == b.out);
    CHECK(invoke({"validate", "--json"}).out == invoke({"validate", "--json"}).out);
}

TEST_CASE("config file with command-line precedence") {
    const auto path = scratch("cfg.txt");
    {
        std::ofstream f(path);
        f << "# sweep\neta = 0.5\nphase = 1\nformat = json\n";
    }
    const Run from_file = invoke({"probabilities", "--config", path.c_str()});
    REQUIRE(from_file.code == kExitSuccess);
    const auto doc = nlohmann::json::parse(from_file.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["eta"].get<double>() == 0.5);

    const Run overridden = invoke({"probabilities", "--config", path.c_str(), "--eta", "0.2", "--format", "csv"});
    REQUIRE(overridden.code == kExitSuccess);
    const auto rows = lines(overridden.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(split(rows[1])[0]) == 0.2);
    std::filesystem::remove(path);
}

TEST_CASE("output file") {
    const auto path = scratch("out.csv");
    const Run r = invoke({"cardioid", "--eta", "0.5", "--phase", "0", "--output", path.c_str()});
    REQUIRE(r.code == kExitSuccess);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == invoke({"cardioid", "--eta", "0.5", "--phase", "0"}).out);
    std::filesystem::remove(path);
}
