#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pathsens/cli.hpp"
#include "pathsens/csv.hpp"

using namespace pathsens;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents)
        : path("cli_test_" + name) {
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("17 significant digit rendering") {
    CHECK(format_double(0.0625) == "0.0625");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("converge flags parse into a RunConfig") {
    const RunConfig config = parse_config(
        {"converge", "--model", "trig", "--p", "2", "--levels", "4..9", "--paths", "100000",
         "--seed", "42"});
    CHECK(config.subcommand == Subcommand::Converge);
    CHECK(config.model_id == "trig");
    CHECK(config.moment_orders == std::vector<int>{2});
    CHECK(config.level_lo == 4);
    CHECK(config.level_hi == 9);
    CHECK(config.n_paths == 100000);
    CHECK(config.base_seed == 42);
    // documented defaults elsewhere
    CHECK(config.theta == 0.1);
    CHECK(config.s0 == 1.0);
    CHECK(config.horizon == 1.0);
    CHECK(config.base_n == 16);
    CHECK(config.quantities == std::vector<Quantity>{Quantity::Tangent1});
    CHECK(config.output == "-");
}

TEST_CASE("lists and ranges") {
    const RunConfig config =
        parse_config({"moments", "--p", "2,4,8", "--quantity", "tangent1,tangent2", "--levels", "3"});
    CHECK(config.moment_orders == std::vector<int>{2, 4, 8});
    CHECK(config.quantities ==
          std::vector<Quantity>{Quantity::Tangent1, Quantity::Tangent2});
    CHECK(config.level_lo == 3);
    CHECK(config.level_hi == 3);
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(parse_config({"converge", "--levels", "9..4"}), UsageError);
    CHECK_THROWS_AS(parse_config({"converge", "--levels", "4..x"}), UsageError);
    CHECK_THROWS_AS(parse_config({"converge", "--theta", "abc"}), UsageError);
    CHECK_THROWS_AS(parse_config({"converge", "--quantity", "vega"}), UsageError);
    CHECK_THROWS_AS(parse_config({"mlmc", "--payoff", "digital"}), UsageError);
    CHECK_THROWS_AS(parse_config({"converge", "--no-such-flag", "1"}), UsageError);
    CHECK_THROWS_AS(parse_config({"simulate", "--T", "0"}), UsageError);
    CHECK_THROWS_AS(parse_config({}), UsageError);
}

TEST_CASE("config file entries are overridden by flags") {
    const TempFile file("precedence.cfg",
                        "# experiment defaults\n"
                        "theta = 0.05\n"
                        "paths = 777   # inline comment\n"
                        "\n"
                        "model = gbm\n");
    const RunConfig from_file = parse_config({"converge", "--config", file.path});
    CHECK(from_file.theta == 0.05);
    CHECK(from_file.n_paths == 777);
    CHECK(from_file.model_id == "gbm");

    const RunConfig overridden =
        parse_config({"converge", "--config", file.path, "--theta", "0.1"});
    CHECK(overridden.theta == 0.1);     // flag wins
    CHECK(overridden.n_paths == 777);   // file still applies
    CHECK(overridden.model_id == "gbm");
}

TEST_CASE("unknown or malformed config keys are rejected") {
    const TempFile unknown("unknown.cfg", "vol = 0.3\n");
    CHECK_THROWS_AS(parse_config({"converge", "--config", unknown.path}), UsageError);

    const TempFile malformed("malformed.cfg", "theta 0.3\n");
    CHECK_THROWS_AS(parse_config({"converge", "--config", malformed.path}), UsageError);

    CHECK_THROWS_AS(parse_config({"converge", "--config", "does_not_exist.cfg"}), UsageError);
}

TEST_CASE("simulate emits the documented schema") {
    RunConfig config = parse_config(
        {"simulate", "--model", "additive", "--theta", "0.3", "--N", "4", "--T", "1", "--seed",
         "7"});
    std::ostringstream out;
    std::ostringstream err;
    CHECK(dispatch(config, out, err) == 0);
    const auto lines = split_lines(out.str());
    REQUIRE(lines.size() == 6);  // header + 5 rows including t = 0
    CHECK(lines[0] == "t,S,dS,ddS");
    // additive tangent equals the time grid
    for (std::size_t n = 0; n < 5; ++n) {
        std::stringstream row(lines[n + 1]);
        std::string t, s, ds, dds;
        std::getline(row, t, ',');
        std::getline(row, s, ',');
        std::getline(row, ds, ',');
        std::getline(row, dds, ',');
        CHECK(t == ds);
        CHECK(dds == "0");
    }
}

TEST_CASE("dispatch output is identical for any worker count") {
    std::ostringstream out1, out2, err1, err2;
    RunConfig one = parse_config({"converge", "--model", "trig", "--levels", "2..4", "--paths",
                                  "500", "--seed", "5", "--workers", "1"});
    RunConfig two = parse_config({"converge", "--model", "trig", "--levels", "2..4", "--paths",
                                  "500", "--seed", "5", "--workers", "2"});
    CHECK(dispatch(one, out1, err1) == 0);
    CHECK(dispatch(two, out2, err2) == 0);
    CHECK(out1.str() == out2.str());
    CHECK(err1.str() == err2.str());
    CHECK(out1.str().find("level,h,p,quantity,estimate,std_error,n_paths") == 0);
    CHECK(err1.str().find("# converge quantity=tangent1 p=2 slope=") != std::string::npos);
}

TEST_CASE("converge on the additive sentinel reports the skipped fit") {
    RunConfig config = parse_config({"converge", "--model", "additive", "--theta", "0.25",
                                     "--levels", "2..4", "--paths", "64", "--seed", "9"});
    std::ostringstream out;
    std::ostringstream err;
    CHECK(dispatch(config, out, err) == 0);
    CHECK(err.str().find("fit skipped") != std::string::npos);
    const auto lines = split_lines(out.str());
    REQUIRE(lines.size() == 4);
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(lines[i].find(",0,0,") != std::string::npos);  // estimate and std_error are zero
}

TEST_CASE("moments and mlmc schemas") {
    RunConfig moments = parse_config({"moments", "--model", "trig", "--levels", "0..1", "--p",
                                      "2,4", "--paths", "200", "--seed", "3"});
    std::ostringstream mout, merr;
    CHECK(dispatch(moments, mout, merr) == 0);
    auto mlines = split_lines(mout.str());
    CHECK(mlines[0] == "h,p,quantity,estimate,std_error");
    CHECK(mlines.size() == 1 + 2 * 2);

    RunConfig mlmc = parse_config({"mlmc", "--model", "trig", "--levels", "1..3", "--payoff",
                                   "tangent", "--paths", "200", "--seed", "3"});
    std::ostringstream lout, lerr;
    CHECK(dispatch(mlmc, lout, lerr) == 0);
    auto llines = split_lines(lout.str());
    CHECK(llines[0] == "level,h,mean_dP,var_dP,n_paths");
    CHECK(llines.size() == 1 + 3);
}

TEST_CASE("lemma subcommand emits all-holding rows") {
    RunConfig config =
        parse_config({"lemma", "--k", "2", "--p", "2", "--trials", "50", "--seed", "3"});
    std::ostringstream out, err;
    CHECK(dispatch(config, out, err) == 0);
    const auto lines = split_lines(out.str());
    CHECK(lines[0] == "trial,k,p,lhs,rhs,holds");
    REQUIRE(lines.size() == 51);
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(lines[i].substr(lines[i].size() - 4) == "true");
}

TEST_CASE("validate passes on the built-in models") {
    for (const char* model : {"trig", "additive"}) {
        RunConfig config =
            parse_config({"validate", "--model", model, "--paths", "50", "--seed", "1"});
        std::ostringstream out, err;
        CHECK(dispatch(config, out, err) == 0);
        CHECK(split_lines(out.str())[0] == "check,observed,lo,hi,engaged,passed");
        CHECK(err.str().find("[FAIL]") == std::string::npos);
    }
}

TEST_CASE("exit codes: usage, divergence, unknown model") {
    std::ostringstream out, err;
    const char* usage[] = {"pathsens", "converge", "--levels", "9..4"};
    CHECK(run_cli(4, usage, out, err) == 2);

    const char* divergence[] = {"pathsens", "simulate", "--model", "gbm", "--theta", "1e308"};
    CHECK(run_cli(6, divergence, out, err) == 3);

    const char* unknown[] = {"pathsens", "simulate", "--model", "heston"};
    CHECK(run_cli(4, unknown, out, err) == 2);

    const char* help[] = {"pathsens", "--help"};
    CHECK(run_cli(2, help, out, err) == 0);

    const char* models[] = {"pathsens", "models"};
    std::ostringstream mout;
    CHECK(run_cli(2, models, mout, err) == 0);
    CHECK(mout.str().find("gbm") != std::string::npos);
    CHECK(mout.str().find("trig") != std::string::npos);
    CHECK(mout.str().find("additive") != std::string::npos);
}
