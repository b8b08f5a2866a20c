#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dortho/cli.hpp"
#include "golden_cases.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dortho::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

// DORTHO_REGEN_GOLDEN=1 rewrites the expected files instead of comparing.
TEST_CASE("golden files") {
    const bool regen = std::getenv("DORTHO_REGEN_GOLDEN") != nullptr;
    for (const auto& c : golden::cases()) {
        CAPTURE(c.args.front());
        CAPTURE(c.expected);
        const auto r = run(golden::resolve(c.args, DORTHO_GOLDEN_DIR));
        CHECK(r.code == c.exit_code);
        if (c.exit_code != 0) CHECK_FALSE(r.err.empty());
        if (c.expected.empty()) continue;
        const std::string path = std::string(DORTHO_GOLDEN_DIR) + "/" + c.expected;
        if (regen) {
            std::ofstream(path, std::ios::binary) << r.out;
            continue;
        }
        CHECK(r.out == slurp(path));
    }
}

TEST_CASE("output is byte-stable across runs") {
    const std::vector<std::string> args{"duals", "--family", "corollary42", "-N", "8", "-M", "2"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string path = "dortho_cli_out_test.json";
    const std::vector<std::string> base{"eigen", "--operator", std::string(DORTHO_GOLDEN_DIR) + "/op_corollary.json",
                                        "-n", "4"};
    auto with_out = base;
    with_out.insert(with_out.end(), {"--out", path});
    const auto a = run(base);
    const auto b = run(with_out);
    CHECK(b.code == 0);
    CHECK(b.out.empty());
    CHECK(slurp(path) == a.out);
    std::remove(path.c_str());
}

TEST_CASE("params as an object and the probe bound") {
    const auto a = run({"verify", "--family", "case1", "--params", R"({"a0[0]":1,"a0[1]":0,"a1[1]":1,"a0[2]":-2,"a0[3]":-6})",
                        "-N", "4", "-M", "1"});
    const auto b = run({"verify", "--family", "case1", "--params", "[1,0,1,-2,-6]", "-N", "4", "-M", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto c = run({"verify", "--family", "case1", "--params", "[1,0,1,-2,-6]", "-N", "9", "-M", "1",
                        "--probe-bound", "4"});
    CHECK(c.out == b.out);
    CHECK(run({"verify", "--family", "case1", "--params", "[1,0,1,-2]"}).code == 2);
    CHECK(run({"verify", "--family", "case1", "--params", "[1,0,0,-2,-6]"}).code == 2);
    CHECK(run({"classify", "--operator", std::string(DORTHO_GOLDEN_DIR) + "/op_corollary.json", "--probe-bound",
               "0"}).code == 2);
}

TEST_CASE("non-regular closed form is a verification failure") {
    // a_3 = (x+1)^2 with a_1 = x makes gamma_3 vanish
    const auto r = run({"verify", "--family", "case2", "--params", "[1,0,1,1,2,1]", "-N", "6", "-M", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("closed-form-gamma at n=3") != std::string::npos);
}
