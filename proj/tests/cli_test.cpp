#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vfindex/cli.hpp"

using namespace vfindex;

namespace {

#ifndef VFINDEX_DATA_DIR
#define VFINDEX_DATA_DIR "data"
#endif

std::string data(const std::string& name) { return std::string(VFINDEX_DATA_DIR) + "/" + name; }

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST(Cli, MilnorBrieskorn) {
    const RunResult r = run({"milnor", data("brieskorn_2_7_14.germ")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "mu = 78\n");
}

TEST(Cli, MilnorJson) {
    const RunResult r = run({"milnor", data("cusp_euler.germ"), "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"mu\":2}\n");
}

TEST(Cli, MilnorRequiresHypersurface) {
    EXPECT_EQ(run({"milnor", data("smooth_radial.germ")}).code, 1);
    EXPECT_EQ(run({"milnor", data("icis_curve.germ")}).code, 1);
}

TEST(Cli, PhIndexSmooth) {
    const RunResult r = run({"ph-index", data("smooth_radial.germ")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "ind_ph = 1\n");
}

TEST(Cli, TangentNegativePath) {
    const RunResult r = run({"tangent", data("sphere_badfield.germ")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "v(f) not in (f)\n");
}

TEST(Cli, TangentPositivePath) {
    const RunResult r = run({"tangent", data("sphere_euler.germ")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "tangent\n");
}

TEST(Cli, ReportCuspJson) {
    const RunResult r = run({"report", data("cusp_euler.germ"), "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"ind_hom\":-1"), std::string::npos);
    EXPECT_NE(r.out.find("\"ind_sch\":1"), std::string::npos);
    EXPECT_NE(r.out.find("\"mu\":2"), std::string::npos);
}

TEST(Cli, ReportIcisFlagsEquality) {
    const RunResult r = run({"report", data("icis_curve.germ"), "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"gsv_equality_asserted\":false"), std::string::npos);
}

TEST(Cli, GsvRefusesIcis) {
    const RunResult r = run({"gsv", data("icis_curve.germ")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("complete intersections"), std::string::npos);
}

TEST(Cli, VirtualOnIcisReportsHomological) {
    const RunResult r = run({"virtual", data("icis_curve.germ"), "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"gsv_equality_asserted\":false"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
    const RunResult a = run({"report", data("cusp_euler.germ"), "--json"});
    const RunResult b = run({"report", data("cusp_euler.germ"), "--json"});
    EXPECT_EQ(a.out, b.out);
    const RunResult c = run({"report", data("sphere_euler.germ")});
    const RunResult d = run({"report", data("sphere_euler.germ")});
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, SmoothReportAllOnes) {
    const RunResult r = run({"report", data("smooth_radial.germ"), "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"ind_ph\":1"), std::string::npos);
    EXPECT_NE(r.out.find("\"ind_hom\":1"), std::string::npos);
    EXPECT_NE(r.out.find("\"ind_gsv\":1"), std::string::npos);
    EXPECT_NE(r.out.find("\"ind_sch\":1"), std::string::npos);
}

TEST(Cli, ConserveSphere) {
    const RunResult r = run({"conserve", data("sphere_euler.germ")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("base ind_hom = 2"), std::string::npos);
    EXPECT_NE(r.out.find("eps = 1/5: conserved (ind_hom = 2)"), std::string::npos);
    // All five file-declared epsilons certified and conserved.
    std::size_t count = 0, pos = 0;
    while ((pos = r.out.find("conserved", pos)) != std::string::npos) {
        ++count;
        pos += 9;
    }
    EXPECT_EQ(count, 5u);
}

TEST(Cli, ConserveEpsOverride) {
    const RunResult r = run({"conserve", data("sphere_euler.germ"), "--eps", "1/7,-2/9"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("eps = 1/7"), std::string::npos);
    EXPECT_NE(r.out.find("eps = -2/9"), std::string::npos);
}

TEST(Cli, ConserveNeedsW) {
    const RunResult r = run({"conserve", data("cusp_euler.germ")});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, ParseErrorExitCode) {
    const std::string path = write_temp("vfindex_bad.germ", "vars x y;\nf: x ++ y;\nv: x, y;\n");
    const RunResult r = run({"milnor", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("parse error"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, UndeclaredVariableIsParseError) {
    const std::string path = write_temp("vfindex_undeclared.germ", "vars x;\nf: x^2 + q;\nv: x;\n");
    EXPECT_EQ(run({"hom-index", path}).code, 2);
    std::remove(path.c_str());
}

TEST(Cli, MissingFileIsParseError) {
    EXPECT_EQ(run({"milnor", "/nonexistent/nope.germ"}).code, 2);
}

TEST(Cli, BudgetExceededExitCode) {
    const RunResult r = run({"hom-index", data("cusp_euler.germ"), "--max-spairs", "0"});
    EXPECT_EQ(r.code, 3);
}

TEST(Cli, TraceStreamsStatistics) {
    const RunResult r = run({"milnor", data("cusp_euler.germ"), "--trace"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("[spairs]"), std::string::npos);
}

TEST(Cli, BadArgumentsExitCode) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"report"}).code, 2);
    EXPECT_EQ(run({"frobnicate", data("cusp_euler.germ")}).code, 2);
    EXPECT_EQ(run({"report", data("cusp_euler.germ"), "--frumious"}).code, 2);
}

TEST(Cli, ReportAllOverDirectory) {
    const std::string dir = "/tmp/vfindex_batch";
    std::filesystem::create_directories(dir);
    std::ofstream(dir + "/a_cusp.germ") << "vars x y;\nf: x^2 + y^3;\nv: 3*x, 2*y;\n";
    std::ofstream(dir + "/b_bad.germ") << "vars x y z;\nf: x^2+y^2+z^2;\nv: y, x, z;\n";
    std::ofstream(dir + "/c_smooth.germ") << "vars x y;\nv: x, y;\n";
    const RunResult r = run({"report", dir, "--all", "--json"});
    // b_bad is not tangent -> worst exit code 1, but the others still report.
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("a_cusp.germ"), std::string::npos);
    EXPECT_NE(r.out.find("\"ind_hom\":-1"), std::string::npos);
    EXPECT_NE(r.out.find("c_smooth.germ"), std::string::npos);
    std::filesystem::remove_all(dir);
}
