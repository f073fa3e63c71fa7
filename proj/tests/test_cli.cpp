#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orbicy/cli/app.hpp"

using namespace orbicy;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

class CliFiles : public ::testing::Test {
   protected:
    void SetUp() override {
        unsetenv("CY_DATA_DIR");
        dir = fs::temp_directory_path() / ("orbicy_cli_" + std::to_string(::getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override {
        unsetenv("CY_DATA_DIR");
        fs::remove_all(dir);
    }
    std::string write(const std::string& name, const json& j) {
        auto p = dir / name;
        std::ofstream(p) << j.dump(2);
        return p.string();
    }
    fs::path dir;
};

}  // namespace

TEST(Cli, HodgeTripleElliptic) {
    auto r = run({"hodge", "--d", "2", "--factors", "preset:e2*3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "Euler characteristic: 96"));
    auto j = run({"hodge", "--d", "2", "--factors", "preset:e2*3", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    auto doc = json::parse(j.out);
    EXPECT_EQ(doc.at("h")[1][1], 51);
    EXPECT_EQ(doc.at("h")[2][1], 3);
    EXPECT_EQ(doc.at("euler"), 96);
}

TEST(Cli, HodgeNeedsTwoFactors) {
    auto r = run({"hodge", "--d", "6", "--factors", "preset:e6"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"hodge", "--d", "5", "--factors", "preset:e2*2"}).code, 2);
    EXPECT_EQ(run({"hodge", "--d", "2", "--factors", "e2*2"}).code, 2);
    EXPECT_EQ(run({"hodge", "--d", "2", "--factors", "preset:e2*0"}).code, 2);
    EXPECT_EQ(run({"hodge", "--d", "2", "--factors", "preset:e2*2", "--format", "html"}).code, 2);
    EXPECT_EQ(run({"hodge", "--d", "2", "--factors", "preset:e3*2"}).code, 2);
    EXPECT_EQ(run({"euler", "--d", "6", "--nmax", "9"}).code, 2);
    EXPECT_EQ(run({"zeta", "--d", "6", "--factors", "preset:zeta-e6*2", "--style", "fancy"}).code, 2);
    EXPECT_EQ(run({"hodge", "--d", "2", "--factors", "file:/nonexistent/x.json,preset:e2"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, UnknownPresetIsUsageError) {
    EXPECT_EQ(run({"hodge", "--d", "2", "--factors", "preset:e7*2"}).code, 2);
    EXPECT_EQ(run({"zeta", "--d", "2", "--factors", "preset:zeta-nothing*2"}).code, 2);
}

TEST_F(CliFiles, SymbolicLatexDiamond) {
    auto k3 = write("k3sym.json", preset_json("k3-generic-2"));
    auto r = run({"hodge", "--d", "2", "--factors", "file:" + k3 + ",preset:e2", "--format", "latex"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "\\documentclass"));
    EXPECT_TRUE(contains(r.out, "\\begin{array}"));
    ParamPoly h11 = 1 + sym("r") + 4 * sym("N");
    EXPECT_TRUE(contains(r.out, h11.to_latex())) << r.out;
}

TEST(Cli, EulerSurface18BothMethods) {
    auto r = run({"euler", "--d", "6", "--k3", "preset:s6-18", "--nmax", "4", "--method", "both"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (auto v : {"24", "204", "2088", "20832"})
        EXPECT_TRUE(contains(r.out, std::string("diamond: ") + v + "  stringy: " + v + "\n")) << v;
    EXPECT_TRUE(contains(r.out, "methods agree: yes"));
    EXPECT_TRUE(contains(r.out, "recurrence: needs nmax >= 5"));

    auto j = json::parse(run({"euler", "--d", "6", "--k3", "preset:s6-18", "--nmax", "6", "--format", "json"}).out);
    EXPECT_EQ(j.at("recurrence"), "holds");
    EXPECT_EQ(j.at("values")[5].at("stringy"), 2083344);
    EXPECT_TRUE(j.at("methods_agree").get<bool>());
}

TEST(Cli, EulerPureElliptic) {
    auto r = run({"euler", "--d", "4", "--nmax", "5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j.at("recurrence"), "holds");
    std::vector<long long> a;
    for (auto& v : j.at("values")) a.push_back(v.at("diamond").get<long long>());
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(a[3], 9 * a[2] + a[1] - 9 * a[0]);

    auto three = run({"euler", "--d", "3", "--nmax", "2"});
    EXPECT_EQ(three.code, 0);
    EXPECT_TRUE(contains(three.out, "e(X_{3,2})  diamond: 24  stringy: 24\n")) << three.out;
    EXPECT_TRUE(contains(run({"euler", "--d", "2", "--nmax", "3"}).out, "recurrence: not available"));
}

TEST(Cli, ZetaExamples) {
    auto r = run({"zeta", "--d", "6", "--factors", "preset:zeta-s6-18,preset:zeta-e6"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "Z_q(T) = (1 - α_q β_q T)(1 - ᾱ_q β̄_q T)(1 - δ_q q T)(1 - δ̄_q q T) / "
              "(1 - T)(1 - qT)^103(1 - q^2T)^103(1 - q^3T)\n");
    auto row1 = run({"zeta", "--d", "2", "--factors", "preset:zeta-sixlines,preset:zeta-e2:all-rational"});
    ASSERT_EQ(row1.code, 0) << row1.err;
    EXPECT_TRUE(contains(row1.out, "(1 - qT)^56")) << row1.out;
    EXPECT_TRUE(contains(row1.out, "(1 - q^2T)^56")) << row1.out;
    EXPECT_EQ(run({"zeta", "--d", "6", "--factors", "preset:zeta-e6"}).code, 2);

    auto latex = run({"zeta", "--d", "6", "--factors", "preset:zeta-s6-18,preset:zeta-e6*2", "--format", "latex"});
    ASSERT_EQ(latex.code, 0);
    EXPECT_EQ(latex.out.rfind("% declared self-conjugate: c_q\n", 0), 0u);
    EXPECT_TRUE(contains(latex.out, "\\end{document}"));

    auto j = json::parse(run({"zeta", "--d", "6", "--factors", "preset:zeta-s6-18,preset:zeta-e6", "--format", "json"}).out);
    EXPECT_EQ(j.at("euler"), 204);
    EXPECT_EQ(j.at("zeta").at("denom"), 1);
}

TEST(Cli, Relations) {
    auto r = run({"relations", "--k3", "preset:s6-18"});
    ASSERT_EQ(r.code, 0) << r.err;
    int lines = 0, fails = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line); ++lines) fails += contains(line, " fails");
    EXPECT_EQ(lines, 13);
    EXPECT_EQ(fails, 2);

    auto j = json::parse(run({"relations", "--k3", "preset:k3-generic-2", "--format", "json"}).out);
    for (auto& e : j.at("relations")) EXPECT_EQ(e.at("verdict"), "symbolic") << e.dump();
    EXPECT_EQ(run({"relations", "--k3", "preset:e6"}).code, 2);
}

TEST_F(CliFiles, ValidationAndRegistryExitCodes) {
    json bad = preset_json("s6-18");
    bad["invariants"]["N"] = -1;
    EXPECT_EQ(run({"relations", "--k3", "file:" + write("bad.json", bad)}).code, 3);

    json wrong_schema = preset_json("e2");
    wrong_schema["schema"] = "cy/0";
    EXPECT_EQ(run({"hodge", "--d", "2", "--factors", "file:" + write("old.json", wrong_schema) + "*2"}).code, 3);

    json z = preset_json("zeta-e6");
    z["registry"][0]["weight"] = 2;
    auto conflict = run({"zeta", "--d", "6", "--factors", "preset:zeta-s6-18,file:" + write("z.json", z)});
    EXPECT_EQ(conflict.code, 4) << conflict.err;
    EXPECT_TRUE(conflict.out.empty());
}

TEST_F(CliFiles, PresetsListAndExport) {
    auto r = run({"presets"});
    ASSERT_EQ(r.code, 0);
    for (auto name : {"s6-18", "k3-sixlines", "e2", "e3", "e4", "e6", "zeta-sixlines"})
        EXPECT_TRUE(contains(r.out, std::string(name) + " ")) << name;
    auto ex = run({"presets", "--export", dir.string()});
    ASSERT_EQ(ex.code, 0);
    EXPECT_TRUE(fs::exists(dir / "s6-18.json"));
    EXPECT_EQ(read_json_file((dir / "zeta-e6.json").string()), preset_json("zeta-e6"));
}

TEST_F(CliFiles, DataDirOverride) {
    export_presets(dir);
    json e6 = preset_json("zeta-e6");
    e6["registry"][0]["weight"] = 2;
    std::ofstream(dir / "zeta-e6.json") << e6.dump();
    std::vector<std::string> args = {"zeta", "--d", "6", "--factors", "preset:zeta-s6-18,preset:zeta-e6"};
    EXPECT_EQ(run(args).code, 0);
    setenv("CY_DATA_DIR", dir.c_str(), 1);
    EXPECT_EQ(run(args).code, 4);
}

TEST(Cli, Deterministic) {
    std::vector<std::vector<std::string>> cases = {
        {"hodge", "--d", "6", "--factors", "preset:s6-18,preset:e6*2", "--format", "json"},
        {"euler", "--d", "6", "--k3", "preset:s6-18", "--nmax", "5"},
        {"zeta", "--d", "6", "--factors", "preset:zeta-s6-18,preset:zeta-e6*3", "--format", "latex"},
        {"relations", "--k3", "preset:s6-18", "--format", "json"},
        {"presets"}};
    for (auto& c : cases) {
        auto a = run(c), b = run(c);
        EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
        EXPECT_EQ(a.out, b.out) << c[0];
    }
}

TEST(Cli, JsonEmissionsCarrySchema) {
    std::vector<std::vector<std::string>> cases = {
        {"hodge", "--d", "3", "--factors", "preset:e3*2", "--format", "json"},
        {"euler", "--d", "3", "--nmax", "4", "--format", "json"},
        {"zeta", "--d", "6", "--factors", "preset:zeta-s6-18,preset:zeta-e6", "--format", "json"},
        {"relations", "--k3", "preset:s6-18", "--format", "json"}};
    std::vector<std::string> kinds = {"hodge", "euler", "zeta", "relations"};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        auto j = json::parse(run(cases[i]).out);
        EXPECT_EQ(j.at("schema"), "cy/1");
        EXPECT_EQ(j.at("kind"), kinds[i]);
    }
    auto hd = json::parse(run(cases[0]).out);
    EXPECT_EQ(hd.at("dim"), 2);
    EXPECT_EQ(hd.at("h").size(), 3u);
    for (auto& row : hd.at("h")) EXPECT_EQ(row.size(), 3u);
    auto z = json::parse(run(cases[2]).out).at("zeta");
    for (auto& f : z.at("factors")) {
        EXPECT_TRUE(f.at("q_exp").is_string());
        EXPECT_TRUE(f.at("syms").is_object());
        EXPECT_TRUE(f.at("mult").is_number_integer());
    }
}

TEST(Cli, Subprocess) {
    std::string out = (fs::temp_directory_path() / ("orbicy_sub_" + std::to_string(::getpid()))).string();
    std::string cmd = std::string(ORBICY_CLI_PATH) + " hodge --d 2 --factors preset:e2*3 > " + out + " 2>&1";
    int status = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), 0);
    std::stringstream text;
    text << std::ifstream(out).rdbuf();
    EXPECT_EQ(text.str(), run({"hodge", "--d", "2", "--factors", "preset:e2*3"}).out);

    cmd = std::string(ORBICY_CLI_PATH) + " hodge --d 6 --factors preset:e6 > " + out + " 2>&1";
    status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
    fs::remove(out);
}
