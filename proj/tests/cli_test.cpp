#include "skewmm/cli.hpp"
#include "skewmm/matmul.hpp"
#include "skewmm/matrix_io.hpp"
#include "skewmm/skewstructure.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace skewmm {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("skewmm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, GenIsDeterministic)
{
    ASSERT_EQ(run({"gen", "--p", "7", "--layers", "0,2", "--seed", "5", "-o", path("a.mat")}).code, 0);
    ASSERT_EQ(run({"gen", "--p", "7", "--layers", "0,2", "--seed", "5", "-o", path("b.mat")}).code, 0);
    EXPECT_EQ(slurp(path("a.mat")), slurp(path("b.mat")));
    const Outcome r = run({"gen", "--p", "7", "--layers", "0,2", "--seed", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(path("a.mat")));
}

TEST_F(CliTest, GenAndAnalyze)
{
    ASSERT_EQ(run({"gen", "--p", "7", "--layers", "0", "--seed", "1", "-o", path("l0.mat")}).code, 0);
    Outcome r = run({"analyze", path("l0.mat")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("skew-sparsity=1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("support={0}\n"), std::string::npos) << r.out;

    ASSERT_EQ(run({"gen", "--p", "7", "--layers", "dense", "--seed", "1", "-o", path("d.mat")}).code, 0);
    r = run({"analyze", path("d.mat")});
    EXPECT_NE(r.out.find("skew-sparsity=6\n"), std::string::npos) << r.out;

    ASSERT_EQ(run({"gen", "--p", "11", "--layers", "1..3,7", "--seed", "2", "-o", path("r.mat")}).code, 0);
    r = run({"analyze", "--json", path("r.mat")});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["skew_sparsity"], 4);
    EXPECT_EQ(j["support"], nlohmann::json({1, 2, 3, 7}));
}

TEST_F(CliTest, AnalyzeSpecialMatrices)
{
    const auto ctx = cyc_context(7);
    write_matrix_file(path("id.mat"), 7, RatMatrix::identity(6));
    write_matrix_file(path("zero.mat"), 7, RatMatrix::zero(6));
    const RatMatrix x = build_X(*ctx);
    write_matrix_file(path("x3.mat"), 7, x * x * x);
    Outcome r = run({"analyze", path("id.mat")});
    EXPECT_NE(r.out.find("skew-sparsity=1\nsupport={0}\n"), std::string::npos) << r.out;
    r = run({"analyze", path("zero.mat")});
    EXPECT_NE(r.out.find("skew-sparsity=0\nsupport={}\n"), std::string::npos) << r.out;
    r = run({"analyze", path("x3.mat")});
    EXPECT_NE(r.out.find("skew-sparsity=1\nsupport={3}\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("norm[x^3]=6\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, MulAlgorithmsAgree)
{
    ASSERT_EQ(run({"gen", "--p", "11", "--layers", "0,4", "--seed", "3", "-o", path("a.mat")}).code, 0);
    ASSERT_EQ(run({"gen", "--p", "11", "--layers", "1", "--seed", "4", "-o", path("b.mat")}).code, 0);
    ASSERT_EQ(run({"mul", "--algo", "naive", path("a.mat"), path("b.mat"), "-o", path("n.mat")}).code, 0);
    const Outcome det = run({"mul", "--algo", "det", "--check", path("a.mat"), path("b.mat"), "-o", path("d.mat"),
                         "--report", path("d.json")});
    ASSERT_EQ(det.code, 0) << det.err;
    ASSERT_EQ(run({"mul", "--algo", "mc", "--nu", "0.01", "--seed", "7", path("a.mat"), path("b.mat"), "-o",
                   path("m.mat")})
                  .code,
              0);
    EXPECT_EQ(slurp(path("n.mat")), slurp(path("d.mat")));
    EXPECT_EQ(slurp(path("n.mat")), slurp(path("m.mat")));
    const auto rep = nlohmann::json::parse(slurp(path("d.json")));
    EXPECT_EQ(rep["algorithm"], "det");
    EXPECT_EQ(rep["t_used"], 2);
    EXPECT_EQ(rep["correct"], true);
    EXPECT_EQ(nlohmann::json::parse(det.err.substr(0, det.err.find('\n'))), rep);
}

TEST_F(CliTest, MulIdentity)
{
    write_matrix_file(path("id.mat"), 13, RatMatrix::identity(12));
    const Outcome r = run({"mul", "--algo", "det", path("id.mat"), path("id.mat")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, serialize_matrix(13, RatMatrix::identity(12)));
    EXPECT_NE(r.err.find("\"t_used\":1"), std::string::npos) << r.err;
}

TEST_F(CliTest, VerifyExitCodes)
{
    ASSERT_EQ(run({"gen", "--p", "7", "--layers", "dense", "--seed", "1", "-o", path("a.mat")}).code, 0);
    ASSERT_EQ(run({"gen", "--p", "7", "--layers", "dense", "--seed", "2", "-o", path("b.mat")}).code, 0);
    ASSERT_EQ(run({"mul", "--algo", "naive", path("a.mat"), path("b.mat"), "-o", path("ab.mat")}).code, 0);
    Outcome r = run({"verify", path("ab.mat"), path("a.mat"), path("b.mat"), "--mu", "0.01"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("rounds=7\n"), std::string::npos);
    EXPECT_NE(r.out.find("verdict=equal\n"), std::string::npos);

    MatrixFile ab = read_matrix_file(path("ab.mat"));
    ab.matrix(0, 0) += 1;
    write_matrix_file(path("wrong.mat"), 7, ab.matrix);
    r = run({"verify", path("wrong.mat"), path("a.mat"), path("b.mat"), "--mu", "0.000001", "--seed", "3"});
    EXPECT_EQ(r.code, cli::kNotEqual);
    EXPECT_NE(r.out.find("verdict=not-equal\n"), std::string::npos);
}

TEST_F(CliTest, UsageErrors)
{
    write_matrix_file(path("a.mat"), 7, RatMatrix::identity(6));
    write_matrix_file(path("c.mat"), 5, RatMatrix::identity(4));
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--p", "9", "--layers", "0"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--p", "7", "--layers", "6"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--p", "7", "--layers", "x"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--p", "7", "--layers", ""}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--p", "7"}).code, cli::kUsage);
    EXPECT_EQ(run({"mul", "--algo", "mc", path("a.mat"), path("a.mat")}).code, cli::kUsage);
    EXPECT_EQ(run({"mul", "--algo", "mc", "--nu", "1.5", path("a.mat"), path("a.mat")}).code, cli::kUsage);
    EXPECT_EQ(run({"mul", "--algo", "fast", path("a.mat"), path("a.mat")}).code, cli::kUsage);
    EXPECT_EQ(run({"mul", "--algo", "det", path("a.mat"), path("c.mat")}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", path("a.mat"), path("a.mat"), path("a.mat"), "--mu", "0"}).code, cli::kUsage);
    EXPECT_EQ(run({"bench", "--p-list", "7", "--t-list", "7"}).code, cli::kUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, IoAndFormatErrors)
{
    EXPECT_EQ(run({"analyze", path("missing.mat")}).code, cli::kIoError);
    std::ofstream(path("bad.mat")) << "skewmm-matrix v1 p=3\n1 0\n0 2/4\n";
    EXPECT_EQ(run({"analyze", path("bad.mat")}).code, cli::kFormatError);
    EXPECT_EQ(run({"gen", "--p", "5", "--layers", "0", "-o", path("no/such/dir.mat")}).code, cli::kIoError);
}

TEST_F(CliTest, BenchRecords)
{
    const Outcome r = run({"bench", "--p-list", "13", "--t-list", "1,2,4", "--algos", "det,naive", "--seeds", "1..2",
                       "--check"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::vector<nlohmann::json> recs;
    while (std::getline(lines, line))
        recs.push_back(nlohmann::json::parse(line));
    ASSERT_EQ(recs.size(), 12u);
    for (const auto& rec : recs) {
        EXPECT_EQ(rec["correct"], true);
        EXPECT_EQ(rec["rng"], "mt19937_64/v1");
        if (rec["algorithm"] == "det")
            EXPECT_EQ(rec["t_used"], rec["t"]);
    }
    // Seeds differ only in wall time; counted operations are equal.
    EXPECT_EQ(recs[0]["rational_mul_count"], recs[1]["rational_mul_count"]);
    EXPECT_EQ(recs[0]["eval_rational_mul_count"], 2 * 1 * 144);
}

TEST_F(CliTest, SelftestPasses)
{
    const Outcome r = run({"selftest"});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_NE(r.out.find("VW = pI verified for p ∈ {3,5,7,11,13}"), std::string::npos);
    EXPECT_NE(r.out.find("Reversed"), std::string::npos);
    EXPECT_NE(r.out.find("A^-1 (P - Q) A"), std::string::npos);
}

}  // namespace
}  // namespace skewmm
