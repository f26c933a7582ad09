#include "snfpart/commands.hpp"
#include "snfpart/errors.hpp"
#include "snfpart/json_io.hpp"
#include "snfpart/snf.hpp"
#include "snfpart/weights.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

using namespace snfpart;
using snfpart::testing::poly;
using snfpart::testing::random_poly;

namespace {

int run_cli(const std::string& args, std::string* captured = nullptr)
{
    const auto out = std::filesystem::temp_directory_path() / "snfpart_cli_test.out";
    const std::string cmd = std::string(SNFPART_CLI) + " " + args + " >" + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (captured) {
        std::ifstream in(out);
        captured->assign(std::istreambuf_iterator<char>(in), {});
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("polynomial json round trip")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = random_poly(rng, 6, 3);
        CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
        CHECK(polynomial_from_json(json::parse(polynomial_to_json(p).dump())) == p);
    }
    const Polynomial big = pow(poly("x11+x12"), 70);
    CHECK(polynomial_from_json(json::parse(polynomial_to_json(big).dump())) == big);
    CHECK(polynomial_to_json(Polynomial::zero()) == json::array());
    CHECK(polynomial_to_json(poly("-3x12^2")) == json::parse(R"([{"coeff":"-3","monomial":[[1,2,2]]}])"));
}

TEST_CASE("malformed polynomial json")
{
    CHECK_THROWS_AS(polynomial_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([{"coeff":"x","monomial":[]}])")), ParseError);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([{"coeff":"1","monomial":[[1,2]]}])")), ParseError);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([{"monomial":[]}])")), ParseError);
}

TEST_CASE("matrix json round trip")
{
    for (const Partition& lambda : {Partition{3, 2}, Partition{5, 4, 1}, Partition{}}) {
        const PolyMatrix m = square_matrix(lambda, {1, 1});
        const PolyMatrix back = matrix_from_json(json::parse(matrix_to_json(m).dump()));
        CHECK(back == m);
        CHECK(back.origin() == m.origin());
    }
    const PolyMatrix r = rect_weight_matrix(Partition{3, 2}, 2, 3);
    CHECK(matrix_from_json(matrix_to_json(r)) == r);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":1,"origin":[1,1],"entries":[[[]]]})")),
                    ParseError);
}

TEST_CASE("snf json")
{
    const SnfResult r = snf_recurrence(Partition{3, 2});
    const json j = snf_to_json(r, true);
    CHECK(j.at("algorithm") == "recurrence");
    CHECK(j.at("verified") == true);
    REQUIRE(j.at("diagonal").size() == 3);
    CHECK(polynomial_from_json(j.at("diagonal")[1]) == poly("x22"));
    CHECK(matrix_from_json(j.at("P")) == r.P);
    CHECK(matrix_from_json(j.at("Q")) == r.Q);
}

TEST_CASE("cmd_weights")
{
    const CommandOutput out = cmd_weights(Partition{3, 2}, Naming::letters);
    CHECK(out.exit_code == kExitOk);
    CHECK(out.text.find("(2,1) de+e+1\n") != std::string::npos);
    CHECK(out.text.find("(1,1) abcde+bcde+bce+cde+ce+de+c+e+1\n") != std::string::npos);
    CHECK(out.envelope.at("result").at("cells").size() == 11);
    CHECK(out.envelope.at("result").at("extended_rows") == json::parse("[4,4,3]"));

    const CommandOutput empty = cmd_weights(Partition{}, Naming::letters);
    REQUIRE(empty.envelope.at("result").at("cells").size() == 1);
    CHECK(empty.envelope.at("result").at("cells")[0].at("text") == "1");

    CHECK_THROWS_AS(cmd_weights(Partition{10, 10, 7}, Naming::letters), NameCollision);
    CHECK_NOTHROW(cmd_weights(Partition{10, 10, 7}, Naming::coords));
}

TEST_CASE("cmd_snf")
{
    const CommandOutput both = cmd_snf(Partition{3, 2}, AlgorithmChoice::both, std::nullopt, Naming::letters);
    CHECK(both.exit_code == kExitOk);
    CHECK(both.envelope.at("result").at("agree") == true);
    CHECK(both.envelope.at("verified") == true);
    CHECK(both.text.find("recurrence: diagonal (abcde, e, 1)  verified") != std::string::npos);
    CHECK(both.text.find("inductive: diagonal (abcde, e, 1)  verified") != std::string::npos);

    const CommandOutput rect =
        cmd_snf(Partition{3, 2}, AlgorithmChoice::inductive, std::pair{2, 3}, Naming::letters);
    CHECK(rect.text.find("diagonal (bce, 1)") != std::string::npos);

    const CommandOutput empty = cmd_snf(Partition{}, AlgorithmChoice::both, std::nullopt, Naming::letters);
    CHECK(empty.text.find("diagonal (1)") != std::string::npos);

    CHECK_THROWS_AS(cmd_snf(Partition{3, 2}, AlgorithmChoice::recurrence, std::pair{2, 3}, Naming::letters),
                    UsageError);
    CHECK_THROWS_AS(cmd_snf(Partition{3, 2}, AlgorithmChoice::inductive, std::pair{2, 2}, Naming::letters),
                    InvalidRectangle);
}

TEST_CASE("cmd_recurrence")
{
    const CommandOutput one = cmd_recurrence(Partition{3, 2}, 1, Naming::letters);
    CHECK(one.text.find("j=1: residual abcde, expected abcde, ok") != std::string::npos);
    const CommandOutput three = cmd_recurrence(Partition{3, 2}, 3, Naming::letters);
    CHECK(three.text.find("j=3: residual 0, expected 0, ok") != std::string::npos);
    const CommandOutput all = cmd_recurrence(Partition{5, 4, 1}, std::nullopt, Naming::letters);
    CHECK(all.exit_code == kExitOk);
    CHECK(all.envelope.at("result").at("residuals").size() == 3);
    CHECK(all.text.find("j=1: residual abcdefghij") != std::string::npos);
    CHECK_THROWS_AS(cmd_recurrence(Partition{3, 2}, 4, Naming::letters), IndexOutOfRange);
}

TEST_CASE("cmd_qcatalan and cmd_selftest")
{
    const CommandOutput q = cmd_qcatalan(3);
    CHECK(q.text.find("3, 1+2q+q^2+q^3, (3,0), ok") != std::string::npos);
    CHECK(cmd_qcatalan(0).text == "0, 1\n");
    CHECK(cmd_qcatalan(6).exit_code == kExitOk);
    CHECK_THROWS_AS(cmd_qcatalan(-1), UsageError);

    CHECK(cmd_selftest(1).exit_code == kExitOk);
    const CommandOutput st = cmd_selftest(8);
    CHECK(st.exit_code == kExitOk);
    CHECK(st.envelope.at("verified") == true);
    CHECK_THROWS_AS(cmd_selftest(0), UsageError);
}

TEST_CASE("command line")
{
    std::string out;
    CHECK(run_cli("--naming letters weights 3,2", &out) == 0);
    CHECK(out.find("(1,3) c+1") != std::string::npos);

    CHECK(run_cli("--format json snf 3,2 --algorithm both", &out) == 0);
    const json j = json::parse(out);
    CHECK(j.at("command") == "snf");
    CHECK(j.at("result").at("agree") == true);

    CHECK(run_cli("weights 2,3") == kExitUsage);
    CHECK(run_cli("weights 3,x") == kExitUsage);
    CHECK(run_cli("snf 3,2 --algorithm recurrence --rect 2 3") == kExitUsage);
    CHECK(run_cli("snf 3,2 --algorithm inductive --rect 2 2") == kExitUsage);
    CHECK(run_cli("--naming letters weights 10,10,7") == kExitUsage);
    CHECK(run_cli("--naming coords weights 10,10,7") == 0);
    CHECK(run_cli("nosuchcommand") == kExitUsage);
    CHECK(run_cli("qcatalan 4", &out) == 0);
    CHECK(out.find("4, ") != std::string::npos);

    const auto file = std::filesystem::temp_directory_path() / "snfpart_cli_out.json";
    std::filesystem::remove(file);
    CHECK(run_cli("--format json --out " + file.string() + " recurrence 3,2") == 0);
    std::ifstream in(file);
    const json rec = json::parse(in);
    CHECK(rec.at("verified") == true);
}
