#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// FRACLIMIT_CLI_PATH and FRACLIMIT_FIXTURE_DIR come from the build system.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string temp_path(const char* tag) {
    static int counter = 0;
    std::ostringstream os;
    os << "cli_test_" << tag << "_" << ++counter << ".tmp";
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    RunResult r;
    const std::string err_path = temp_path("stderr");
    std::string cmd;
    if (!env_prefix.empty())
        cmd += env_prefix + " ";
    cmd += std::string(FRACLIMIT_CLI_PATH) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

double field_value(const std::string& report, const std::string& key) {
    for (const auto& line : lines_of(report)) {
        const std::string prefix = key + " = ";
        if (line.rfind(prefix, 0) == 0)
            return std::strtod(line.c_str() + prefix.size(), nullptr);
    }
    FAIL("missing report field: ", key);
    return 0.0;
}

} // namespace

TEST_CASE("eval: flagship half-derivative run") {
    const auto r = run_cli("eval --function power:1 --order 1/2 --x 1 --q 1 --n 10000");
    REQUIRE(r.exit_code == 0);
    CHECK(field_value(r.out, "abs_error") < 5e-3);
    CHECK(std::fabs(field_value(r.out, "gl_value") - 1.1283791670955126) < 5e-3);
    CHECK(std::fabs(field_value(r.out, "h") - 1e-4) < 1e-18);
    CHECK(r.out.find("handedness = Forward\n") != std::string::npos);
}

TEST_CASE("eval: branch refusal maps to exit 3 with the error kind visible") {
    const auto r = run_cli("eval --function power:1 --order 1/2 --x 1 --q -1 --n 100");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("BranchError") != std::string::npos);
}

TEST_CASE("eval: degenerate point maps to exit 3") {
    const auto r = run_cli("eval --function power:1 --order 1/2 --x 0 --q 1 --n 100");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("DegenerateError") != std::string::npos);
}

TEST_CASE("eval: explicit polynomial coefficients reproduce the monomial bitwise") {
    const auto a = run_cli("eval --function power:1 --order 1/2 --x 1 --q 1 --n 10000");
    const auto b = run_cli("eval --function poly:0,1 --order 1/2 --x 1 --q 1 --n 10000");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    const auto a_lines = lines_of(a.out);
    const auto b_lines = lines_of(b.out);
    REQUIRE(!a_lines.empty());
    CHECK(a_lines[0].rfind("gl_value = ", 0) == 0);
    CHECK(a_lines[0] == b_lines[0]);
}

TEST_CASE("eval: usage failures exit 2") {
    CHECK(run_cli("eval --function power:1 --x 1 --q 1 --n 100").exit_code == 2);
    CHECK(run_cli("eval --function power:zz --order 1/2 --x 1").exit_code == 2);
    CHECK(run_cli("eval --function power:1 --order 1/2 --x 1 --n 100:1000:10").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("eval --function wavelet:3 --order 1/2").exit_code == 2);
}

TEST_CASE("roots: odd-denominator order reports both roots as CSV") {
    const auto r = run_cli("roots --order 1/3 --m 1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "q,residual,handedness,branch_note");
    const auto row0 = fields_of(lines[1]);
    REQUIRE(row0.size() == 4);
    CHECK(std::fabs(std::strtod(row0[0].c_str(), nullptr) + 8.0) < 1e-6);
    CHECK(row0[2] == "Reverse");
    CHECK(row0[3] == "real branch (odd denominator)");
    const auto row1 = fields_of(lines[2]);
    REQUIRE(row1.size() == 4);
    CHECK(row1[0] == "1");
    CHECK(row1[1] == "0");
    CHECK(row1[2] == "Forward");
    CHECK(row1[3] == "positive axis");
}

TEST_CASE("roots: even denominator warns and skips the negative axis") {
    const auto r = run_cli("roots --order 1/2 --m 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.find("negative-axis search disabled") != std::string::npos);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(fields_of(lines[1])[0] == "1");

    // An explicitly positive window produces the same table, without the
    // warning (nothing was skipped).
    const auto s = run_cli("roots --order 1/2 --m 1 --search 0:50");
    REQUIRE(s.exit_code == 0);
    CHECK(s.out == r.out);
    CHECK(s.err.find("negative-axis") == std::string::npos);
}

TEST_CASE("roots: decimal order input behaves as its exact rational") {
    const auto a = run_cli("roots --order 0.5 --m 1");
    const auto b = run_cli("roots --order 1/2 --m 1");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("converge: CSV schema and monotone error column") {
    const auto r = run_cli("converge --function power:1 --order 1/2 --x 1 --q 1 "
                           "--n 100:100000:10");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "N,h,gl_value,rl_value,abs_error,observed_order");
    const auto first = fields_of(lines[1]);
    REQUIRE(first.size() == 6);
    CHECK(first[0] == "100");
    CHECK(first[5].empty());
    double prev_err = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto row = fields_of(lines[i]);
        REQUIRE(row.size() == 6);
        const double err = std::strtod(row[4].c_str(), nullptr);
        if (i > 1) {
            CHECK(err < prev_err);
            CHECK(!row[5].empty());
        }
        prev_err = err;
    }
}

TEST_CASE("converge: taylor function reaches the closed form") {
    const auto r = run_cli("converge --function taylor-exp:12 --order 1/2 --x 0.5 --q 1 "
                           "--n 100:10000:10");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    const auto last = fields_of(lines.back());
    CHECK(std::strtod(last[4].c_str(), nullptr) < 1e-2);
}

TEST_CASE("converge: non-root coupling stalls above a floor") {
    const auto r = run_cli("converge --function power:1 --order 1/2 --x 1 --q 2 "
                           "--n 100:100000:10");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    const auto last = fields_of(lines.back());
    CHECK(std::strtod(last[4].c_str(), nullptr) > 0.03);
}

TEST_CASE("converge: output file receives exactly the stdout bytes") {
    const std::string path = temp_path("csv");
    const auto to_file = run_cli("converge --function power:1 --order 1/2 --x 1 --q 1 "
                                 "--n 100:10000:10 --output " + path);
    REQUIRE(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    const auto direct = run_cli("converge --function power:1 --order 1/2 --x 1 --q 1 "
                                "--n 100:10000:10");
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("converge: thread cap never changes a byte") {
    const std::string args = "converge --function power:1 --order 1/2 --x 1 --q 1 "
                             "--n 100:100000:10";
    const auto one = run_cli(args, "FRACLIMIT_THREADS=1");
    const auto four = run_cli(args, "FRACLIMIT_THREADS=4");
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("converge: malformed thread cap exits 2") {
    const auto r = run_cli("converge --function power:1 --order 1/2 --x 1 --q 1 --n 10:100:10",
                           "FRACLIMIT_THREADS=abc");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify: full battery passes and respects filters") {
    const auto all = run_cli("verify");
    REQUIRE(all.exit_code == 0);
    const auto lines = lines_of(all.out);
    REQUIRE(lines.size() == 8);
    for (const auto& line : lines) {
        CHECK(line.rfind("PASS ", 0) == 0);
        CHECK(line.find("max_deviation=") != std::string::npos);
        CHECK(line.find("tolerance=") != std::string::npos);
    }

    const auto only = run_cli("verify --only result4");
    REQUIRE(only.exit_code == 0);
    CHECK(lines_of(only.out).size() == 1);

    const auto reduced = run_cli("verify --only lemma7 --max-n 1000");
    REQUIRE(reduced.exit_code == 0);
    CHECK(lines_of(reduced.out)[0].rfind("PASS lemma7", 0) == 0);

    const auto unknown = run_cli("verify --only result99");
    CHECK(unknown.exit_code == 3);
    CHECK(unknown.err.find("ParameterError") != std::string::npos);
}

TEST_CASE("diverge-demo: uncoupled sums grow without bound") {
    const auto r = run_cli("diverge-demo --order 1/2 --x 1 --h 0.01 --n 100:100000:10");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "N,partial_value");
    std::vector<double> values;
    for (std::size_t i = 1; i < lines.size(); ++i)
        values.push_back(std::strtod(fields_of(lines[i])[1].c_str(), nullptr));
    for (std::size_t i = 1; i < values.size(); ++i)
        CHECK(std::fabs(values[i]) > std::fabs(values[i - 1]));
    CHECK(std::fabs(values.back()) > 10.0 * std::fabs(values.front()));
}

TEST_CASE("diverge-demo: integer order settles at the classical derivative") {
    const auto r = run_cli("diverge-demo --order 1 --x 1 --h 0.01 --n 100:100000:10");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    const auto last = fields_of(lines.back());
    CHECK(std::fabs(std::strtod(last[1].c_str(), nullptr) - 1.0) < 1e-9);
}

TEST_CASE("diverge-demo: smaller step keeps the exponent, shifts the prefactor") {
    const auto coarse = run_cli("diverge-demo --order 1/2 --x 1 --h 0.01 --n 1000:100000:10");
    const auto fine = run_cli("diverge-demo --order 1/2 --x 1 --h 0.001 --n 1000:100000:10");
    REQUIRE(coarse.exit_code == 0);
    REQUIRE(fine.exit_code == 0);
    auto decade_ratio = [](const RunResult& r) {
        const auto lines = lines_of(r.out);
        const double last = std::strtod(fields_of(lines[lines.size() - 1])[1].c_str(), nullptr);
        const double prev = std::strtod(fields_of(lines[lines.size() - 2])[1].c_str(), nullptr);
        return std::fabs(last) / std::fabs(prev);
    };
    const double sqrt10 = 3.1622776601683795;
    CHECK(std::fabs(decade_ratio(coarse) - sqrt10) < 0.2 * sqrt10);
    CHECK(std::fabs(decade_ratio(fine) - sqrt10) < 0.2 * sqrt10);
    const double coarse_final =
        std::strtod(fields_of(lines_of(coarse.out).back())[1].c_str(), nullptr);
    const double fine_final =
        std::strtod(fields_of(lines_of(fine.out).back())[1].c_str(), nullptr);
    CHECK(std::fabs(coarse_final) > 2.0 * std::fabs(fine_final));
}

TEST_CASE("fixtures: committed tables match live runs field by field") {
    const struct {
        const char* file;
        const char* args;
    } pins[] = {
        {"converge_power1_half_q1.csv",
         "converge --function power:1 --order 1/2 --x 1 --q 1 --n 100:100000:10"},
        {"converge_power1_half_q2.csv",
         "converge --function power:1 --order 1/2 --x 1 --q 2 --n 100:100000:10"},
        {"diverge_half_h001.csv", "diverge-demo --order 1/2 --x 1 --h 0.01 --n 100:100000:10"},
        {"roots_third_m1.csv", "roots --order 1/3 --m 1"},
    };
    for (const auto& pin : pins) {
        CAPTURE(pin.file);
        const std::string fixture = slurp(std::string(FRACLIMIT_FIXTURE_DIR) + "/" + pin.file);
        REQUIRE(!fixture.empty());
        const auto live = run_cli(pin.args);
        REQUIRE(live.exit_code == 0);
        const auto want_lines = lines_of(fixture);
        const auto got_lines = lines_of(live.out);
        REQUIRE(want_lines.size() == got_lines.size());
        CHECK(want_lines[0] == got_lines[0]);
        for (std::size_t i = 1; i < want_lines.size(); ++i) {
            const auto want = fields_of(want_lines[i]);
            const auto got = fields_of(got_lines[i]);
            REQUIRE(want.size() == got.size());
            for (std::size_t j = 0; j < want.size(); ++j) {
                if (want[j].empty() || std::isalpha(static_cast<unsigned char>(want[j][0]))) {
                    CHECK(want[j] == got[j]); // enums, notes, empty slots
                    continue;
                }
                const double w = std::strtod(want[j].c_str(), nullptr);
                const double g = std::strtod(got[j].c_str(), nullptr);
                // Values are pinned to 17 digits; allow only libm-level drift.
                CHECK(std::fabs(g - w) <= 1e-13 * std::max(1.0, std::fabs(w)));
            }
        }
    }
}
