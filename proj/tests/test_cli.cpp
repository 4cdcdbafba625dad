#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gridroots/cli.hpp"
#include "nlohmann/json.hpp"

using namespace gridroots;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "gridroots_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch() / name;
    std::ofstream out(p);
    out << text;
    return p.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Redirects fd 2 into a file for the lifetime of the object so error JSON
// can be inspected without shelling out.
class CaptureStderr {
  public:
    CaptureStderr() : path_((scratch() / "stderr.txt").string()) {
        std::fflush(stderr);
        saved_ = dup(2);
        int fd = open(path_.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
        dup2(fd, 2);
        close(fd);
    }
    ~CaptureStderr() {
        if (saved_ >= 0) release();
    }
    std::string release() {
        std::fflush(stderr);
        std::cerr.flush();
        dup2(saved_, 2);
        close(saved_);
        saved_ = -1;
        return read_file(path_);
    }

  private:
    std::string path_;
    int saved_;
};

struct RunResult {
    int code;
    Json out;
    Json err;
};

// Runs the CLI with --output to a scratch file and parses both streams.
RunResult run(std::vector<std::string> args) {
    std::string out_path = (scratch() / "out.json").string();
    args.push_back("--output");
    args.push_back(out_path);
    std::remove(out_path.c_str());
    CaptureStderr cap;
    int code = run_cli(args);
    std::string err_text = cap.release();
    RunResult r{code, Json(), Json()};
    if (fs::exists(out_path)) r.out = Json::parse(read_file(out_path));
    if (!err_text.empty()) {
        try {
            r.err = Json::parse(err_text);
        } catch (...) {
        }
    }
    return r;
}

std::string problem(const std::string& kind, const Json& payload, const Json& extra = Json()) {
    Json root{{"version", 1}, {"kind", kind}, {"payload", payload}};
    if (extra.is_object())
        for (auto it = extra.begin(); it != extra.end(); ++it) root[it.key()] = it.value();
    return write_file(kind + "_in.json", root.dump());
}

const Json kWorkedMonomials = Json::array({"X1^3*X2", "X1^2*X2^2", "X1*X2^3"});

}  // namespace

TEST_CASE("mu subcommand emits the envelope and the worked table") {
    std::string in = problem("mu", Json{{"monomials", kWorkedMonomials}});
    RunResult r = run({"mu", "--input", in, "--seed", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.out["tool"] == "gridroots");
    CHECK(r.out["version"] == "1.0.0");
    CHECK(r.out["command"] == "mu");
    CHECK(r.out["seed"] == 7);
    const Json& mu = r.out["mu"]["mu"];
    CHECK(mu["M1"] == 8);
    CHECK(mu["M2"] == 9);
    CHECK(mu["M3"] == 8);
    CHECK(mu["M1,M2"] == 11);
    CHECK(mu["M1,M3"] == 12);
    CHECK(mu["M2,M3"] == 11);
    CHECK(mu["all"] == 13);
    CHECK(r.out["mu"]["monomials"] == kWorkedMonomials);
}

TEST_CASE("sigma subcommand computes the corrected worked table") {
    std::string in = problem("sigma", Json{{"monomials", kWorkedMonomials},
                                           {"box", Json::array({8, 8})}});
    RunResult r = run({"sigma", "--input", in});
    REQUIRE(r.code == 0);
    const Json& s = r.out["sigma"]["sigma"];
    CHECK(s["M1"] == 35);
    CHECK(s["M2"] == 36);
    CHECK(s["M3"] == 35);
    CHECK(s["M1,M2"] == 41);
    CHECK(s["M2,M3"] == 41);
    CHECK(s["M1,M3"] == 45);
    CHECK(s["all"] == 46);
    CHECK(r.out["sigma"]["box"] == Json::array({8, 8}));
}

TEST_CASE("field precedence: flag beats payload key beats environment") {
    // Without an explicit box, sigma sizes the box from the resolved field,
    // so the reported box reveals which source won.
    Json payload{{"monomials", Json::array({"X1*X2"})}};

    std::string in = problem("sigma", payload, Json{{"field", "gf(2)"}});
    unsetenv("GRIDROOTS_FIELD");
    RunResult from_payload = run({"sigma", "--input", in});
    REQUIRE(from_payload.code == 0);
    CHECK(from_payload.out["sigma"]["box"] == Json::array({2, 2}));

    RunResult from_flag = run({"sigma", "--input", in, "--field", "gf(3)"});
    REQUIRE(from_flag.code == 0);
    CHECK(from_flag.out["sigma"]["box"] == Json::array({3, 3}));

    std::string bare = problem("sigma", payload);
    setenv("GRIDROOTS_FIELD", "gf(5)", 1);
    RunResult from_env = run({"sigma", "--input", bare});
    CHECK(from_env.code == 0);
    CHECK(from_env.out["sigma"]["box"] == Json::array({5, 5}));

    unsetenv("GRIDROOTS_FIELD");
    RunResult none = run({"sigma", "--input", bare});
    CHECK(none.code == 1);
    CHECK(none.err["error"]["code"] == "SchemaError");
}

TEST_CASE("shape errors exit 1 with a JSON error report") {
    SUBCASE("missing input file") {
        RunResult r = run({"mu", "--input", (scratch() / "no_such.json").string()});
        CHECK(r.code == 1);
        CHECK(r.err["error"]["code"] == "IoError");
    }
    SUBCASE("invalid JSON") {
        std::string in = write_file("bad.json", "{not json");
        RunResult r = run({"mu", "--input", in});
        CHECK(r.code == 1);
        CHECK(r.err["error"]["code"] == "ParseError");
    }
    SUBCASE("kind does not match the subcommand") {
        std::string in = problem("sigma", Json{{"monomials", kWorkedMonomials}});
        RunResult r = run({"mu", "--input", in});
        CHECK(r.code == 1);
        CHECK(r.err["error"]["code"] == "SchemaError");
        std::string msg = r.err["error"]["message"].get<std::string>();
        CHECK(msg.find("kind") != std::string::npos);
    }
    SUBCASE("unknown payload key") {
        std::string in = problem("mu", Json{{"monomials", kWorkedMonomials}, {"bogus", 1}});
        RunResult r = run({"mu", "--input", in});
        CHECK(r.code == 1);
        CHECK(r.err["error"]["code"] == "SchemaError");
    }
    SUBCASE("unsupported version") {
        std::string in = write_file(
            "v9.json", Json{{"version", 9}, {"kind", "mu"},
                            {"payload", Json{{"monomials", kWorkedMonomials}}}}.dump());
        RunResult r = run({"mu", "--input", in});
        CHECK(r.code == 1);
        CHECK(r.err["error"]["code"] == "SchemaError");
    }
    SUBCASE("missing subcommand is a usage error") {
        CaptureStderr cap;
        CHECK(run_cli(std::vector<std::string>{}) == 1);
        cap.release();
    }
}

TEST_CASE("computation errors exit 2 and a shortfall reports what it achieved") {
    // Four points kill every polynomial on the GF(2) plane except those with
    // no roots left to give: k = 1 is unattainable and achieved is 0.
    Json payload{{"chain", Json::array({"X1"})},
                 {"points", Json::array({Json::array({0, 0}), Json::array({0, 1}),
                                         Json::array({1, 0}), Json::array({1, 1})})},
                 {"k", 1}};
    std::string in = problem("interpolate", payload,
                             Json{{"field", "gf(2)"}, {"order", "deglex:X1<X2"}});
    RunResult r = run({"interpolate", "--input", in});
    CHECK(r.code == 2);
    CHECK(r.err["error"]["code"] == "GuaranteeUnmetAndConstructionFailed");
    CHECK(r.err["error"]["achieved"] == 0);
}

TEST_CASE("interpolate returns verified polynomials with the requested leads") {
    Json payload{{"chain", Json::array({"X1", "X2"})},
                 {"points", Json::array({Json::array({0, 0})})},
                 {"k", 2}};
    std::string in = problem("interpolate", payload,
                             Json{{"field", "gf(3)"}, {"order", "deglex:X1<X2"}});
    RunResult r = run({"interpolate", "--input", in});
    REQUIRE(r.code == 0);
    const Json& res = r.out["interpolate"];
    CHECK(res["verified"] == true);
    CHECK(res["leading_monomials"] == Json::array({"X1", "X2"}));
    CHECK(res["polynomials"].size() == 2);
    CHECK(res["guarantee_satisfied"] == true);
}

TEST_CASE("compare runs from --expr alone and matches the frozen comparison") {
    RunResult r = run({"compare", "--expr", "X1^3 - X2^2 - X2", "--field", "gf(4)"});
    REQUIRE(r.code == 0);
    const Json& res = r.out["compare"];
    CHECK(res["rows"].size() == 6);
    CHECK(res["exhaustive_roots"] == 8);
    CHECK(res["best_footprint"] == 8);
    CHECK(res["alon_furedi_bound"] == 12);
    bool saw_lex = false;
    for (const Json& row : res["rows"]) {
        CHECK(row["bound"].get<long long>() >= 8);
        if (row["order"] == "lex:X1<X2") {
            CHECK(row["lm"] == "X2^2");
            saw_lex = true;
        }
    }
    CHECK(saw_lex);
}

TEST_CASE("footprint-bound accepts leading monomials or whole polynomials") {
    Json grid{{"sizes", Json::array({8, 8})}};
    SUBCASE("monomial mode reproduces the worked bounds") {
        std::string in = problem(
            "footprint-bound",
            Json{{"grid", grid}, {"lms", kWorkedMonomials}},
            Json{{"field", "gf(8)"}});
        RunResult r = run({"footprint-bound", "--input", in});
        REQUIRE(r.code == 0);
        CHECK(r.out["footprint_bound"]["bound"] == 18);
        CHECK(r.out["footprint_bound"]["verdict"] == "bound_holds");
    }
    SUBCASE("polynomial mode counts the actual roots") {
        Json grid2{{"sizes", Json::array({2, 2})}};
        std::string in = problem(
            "footprint-bound",
            Json{{"grid", grid2},
                 {"polynomials", Json::array({"X1 + X2"})}},
            Json{{"field", "gf(2)"}, {"order", "deglex:X1<X2"}});
        RunResult r = run({"footprint-bound", "--input", in});
        REQUIRE(r.code == 0);
        const Json& res = r.out["footprint_bound"];
        CHECK(res["bound"] == 2);
        CHECK(res["exhaustive"] == 2);
        CHECK(res["verdict"] == "bound_tight");
    }
    SUBCASE("giving both inputs is rejected") {
        std::string in = problem(
            "footprint-bound",
            Json{{"grid", grid}, {"lms", kWorkedMonomials},
                 {"polynomials", Json::array({"X1"})}},
            Json{{"field", "gf(8)"}, {"order", "deglex:X1<X2"}});
        RunResult r = run({"footprint-bound", "--input", in});
        CHECK(r.code == 1);
        CHECK(r.err["error"]["code"] == "SchemaError");
    }
}

TEST_CASE("rghw cartesian mode reports the corrected worked weights") {
    for (auto [k, want] : {std::pair{1, 35}, {2, 41}, {3, 46}}) {
        std::string in = problem(
            "rghw",
            Json{{"grid", Json{{"sizes", Json::array({8, 8})}}},
                 {"chain", kWorkedMonomials},
                 {"k", k}},
            Json{{"field", "gf(8)"}});
        RunResult r = run({"rghw", "--input", in});
        REQUIRE(r.code == 0);
        CHECK(r.out["rghw"]["value"] == want);
    }
}

TEST_CASE("dual subcommand handles codes and divisor closed monomial sets") {
    SUBCASE("code mode produces an annihilating code") {
        std::string in = problem(
            "dual", Json{{"code", Json{{"n", 3}, {"rows", Json::array({Json::array({1, 1, 0})})}}}},
            Json{{"field", "gf(2)"}});
        RunResult r = run({"dual", "--input", in});
        REQUIRE(r.code == 0);
        const Json& rows = r.out["dual"]["code"]["rows"];
        CHECK(rows.size() == 2);
        const int gen[3] = {1, 1, 0};
        for (const Json& row : rows) {
            int dot = 0;
            for (int i = 0; i < 3; ++i)
                dot ^= std::stoi(row[i].get<std::string>()) & gen[i];
            CHECK(dot == 0);
        }
    }
    SUBCASE("monomial mode reflects the complement") {
        std::string in = problem("dual", Json{{"box", Json::array({2, 2})},
                                              {"monomials", Json::array({"1", "X1"})}});
        RunResult r = run({"dual", "--input", in});
        REQUIRE(r.code == 0);
        CHECK(r.out["dual"]["count"] == 2);
    }
}

TEST_CASE("verify reports the recomputation with no failures") {
    RunResult r = run({"verify"});
    REQUIRE(r.code == 0);
    const Json& res = r.out["verify"];
    CHECK(res["ok"] == true);
    CHECK(res["summary"]["FAIL"] == 0);
    CHECK(res["summary"]["DISCREPANCY"].get<int>() > 0);
    bool flagged = false;
    for (const Json& row : res["rows"]) {
        if (row["status"] == "DISCREPANCY") {
            flagged = true;
            CHECK(row["printed"] != row["computed"]);
            CHECK(row["computed"] == row["oracle"]);
        }
    }
    CHECK(flagged);
}

TEST_CASE("same invocation and seed give byte identical output") {
    std::string in = problem("mu", Json{{"monomials", kWorkedMonomials}});
    std::string out1 = (scratch() / "det1.json").string();
    std::string out2 = (scratch() / "det2.json").string();
    CHECK(run_cli({"mu", "--input", in, "--seed", "11", "--output", out1}) == 0);
    CHECK(run_cli({"mu", "--input", in, "--seed", "11", "--output", out2}) == 0);
    std::string a = read_file(out1);
    CHECK(a == read_file(out2));
    CHECK(!a.empty());
    CHECK(a.back() == '\n');

    std::string out3 = (scratch() / "det3.json").string();
    CHECK(run_cli({"mu", "--input", in, "--seed", "11", "--output", out3, "--pretty"}) == 0);
    std::string pretty = read_file(out3);
    CHECK(pretty != a);
    CHECK(Json::parse(pretty) == Json::parse(a));
    CHECK(pretty.find("\n  ") != std::string::npos);
}

TEST_CASE("input can arrive on stdin") {
    Json root{{"version", 1}, {"kind", "mu"},
              {"payload", Json{{"monomials", Json::array({"X1"})}}}};
    std::istringstream feed(root.dump());
    std::streambuf* saved = std::cin.rdbuf(feed.rdbuf());
    RunResult r = run({"mu", "--input", "-"});
    std::cin.rdbuf(saved);
    REQUIRE(r.code == 0);
    CHECK(r.out["mu"]["mu"]["all"] == 2);
}
