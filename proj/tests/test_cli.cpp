#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stdout only; stderr is discarded
Run run(const std::string& args) {
    const std::string cmd = std::string("'") + KUMMER_CLI + "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string sample(const char* name) { return std::string("'") + KUMMER_SAMPLES + "/" + name + "'"; }

bool has_line(const std::string& out, const std::string& line) {
    return out.find(line + "\n") != std::string::npos;
}

}  // namespace

TEST(Cli, VerifyPassesOnTheFixtures) {
    for (const char* f : {"fixture_qq.curve", "fixture_gf101.curve"}) {
        const auto r = run("verify --curve " + sample(f) + " --samples 4");
        EXPECT_EQ(r.code, 0) << r.out;
        EXPECT_TRUE(has_line(r.out, "result: PASS")) << r.out;
        EXPECT_EQ(r.out.find("\nFAIL "), std::string::npos) << r.out;
    }
}

TEST(Cli, SameSeedSameOutput) {
    const auto a = run("verify --suite kappa --curve " + sample("fixture_gf101.curve") + " --samples 5 --seed 11");
    const auto b = run("verify --suite kappa --curve " + sample("fixture_gf101.curve") + " --samples 5 --seed 11");
    const auto c = run("verify --suite kappa --curve " + sample("fixture_gf101.curve") + " --samples 5 --seed 12");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
}

TEST(Cli, JsonReport) {
    const auto r = run("verify --suite lines --curve " + sample("symmetric_qq.curve") + " --json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("result"), "PASS");
    EXPECT_EQ(j.at("field"), "QQ");
    EXPECT_FALSE(j.at("checks").empty());
    for (const auto& c : j.at("checks")) EXPECT_NE(c.at("status"), "FAIL") << c.dump();
}

TEST(Cli, OtherCommands) {
    auto k = run("kummer --curve " + sample("fixture_gf101.curve"));
    EXPECT_EQ(k.code, 0);
    EXPECT_NE(k.out.find("K2: "), std::string::npos);
    EXPECT_NE(k.out.find("node 0: (0 : 0 : 0 : 1)"), std::string::npos);

    auto t = run("twist --curve " + sample("twist_gf31.curve") + " --beta 1,1");
    EXPECT_EQ(t.code, 0) << t.out;
    EXPECT_TRUE(has_line(t.out, "result: PASS"));

    auto a = run("autos --curve " + sample("generic_qq.curve"));
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_TRUE(has_line(a.out, "GL: 32")) << a.out;

    auto s = run("autos --curve " + sample("symmetric_qq.curve") + " --json");
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(nlohmann::json::parse(s.out).at("result"), "PASS");
}

TEST(Cli, MapOnAndOffTheBaseLocus) {
    // over GF(101), x = 0 and x = 7 both carry points with y = 35, 66; one choice of signs
    // lies on the common zero set of the explicit forms
    const auto on = run("map --which kappa --curve " + sample("fixture_gf101.curve") + " --divisor 0,35,7,35");
    EXPECT_EQ(on.code, 0) << on.out;
    EXPECT_NE(on.out.find("note: explicit forms vanish"), std::string::npos) << on.out;
    EXPECT_TRUE(has_line(on.out, "result: PASS"));
    const auto off = run("map --which kappa --curve " + sample("fixture_gf101.curve") + " --divisor 0,35,7,66");
    EXPECT_EQ(off.code, 0) << off.out;
    EXPECT_TRUE(has_line(off.out, "PASS kappa explicit = kappa constructive"));
    // a node: no image
    EXPECT_EQ(run("map --which kappa --curve " + sample("fixture_gf101.curve") + " --point 0,0,0,1").code, 1);
    EXPECT_EQ(run("map --which kappa --curve " + sample("fixture_gf101.curve") + " --divisor 0,35,7,1").code, 2);
}

TEST(Cli, NonSplitAndNonMonicCurvesSkipRatherThanFail) {
    for (const char* f : {"nonsplit_qq.curve", "scaled_qq.curve"}) {
        const auto r = run("verify --curve " + sample(f) + " --samples 3");
        EXPECT_EQ(r.code, 0) << f << "\n" << r.out;
        EXPECT_NE(r.out.find("SKIP "), std::string::npos) << f;
    }
}

TEST(Cli, ExitCodes) {
    // malformed input and usage errors
    EXPECT_EQ(run("verify --curve " + sample("broken.curve")).code, 2);
    EXPECT_EQ(run("verify --curve /nonexistent/x.curve").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("verify --curve " + sample("fixture_qq.curve") + " --samples 0").code, 2);
    EXPECT_EQ(run("verify --curve " + sample("fixture_qq.curve") + " --field 'GF(100)'").code, 2);
    EXPECT_EQ(run("map --which nope --curve " + sample("fixture_qq.curve")).code, 2);
    // well formed but mathematically invalid
    EXPECT_EQ(run("map --which kappa --curve " + sample("fixture_qq.curve") + " --point 1,1,1,1").code, 1);

    const auto j = run("verify --curve " + sample("broken.curve") + " --json");
    EXPECT_EQ(j.code, 2);
    const auto e = nlohmann::json::parse(j.out);
    EXPECT_EQ(e.at("error"), "ParseError");
    EXPECT_NE(e.at("message").get<std::string>().find("broken.curve:2:20"), std::string::npos);
}
