#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(WREATHGROWTH_EXE) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains(const std::string& s, const std::string& needle)
{
    return s.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, CoeffsSymTenEndsAtTableValue)
{
    const auto r = run("coeffs sym --m 10 --order 10");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "1605340")) << r.out;
}

TEST(Cli, CoeffsAltBaseCsv)
{
    const auto r = run("coeffs alt-base --order 2 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n,gamma\n0,1\n1,1\n2,3\n");
}

TEST(Cli, CoeffsRejectsZeroM)
{
    EXPECT_EQ(run("coeffs sym --m 0 --order 5").status, 2);
}

TEST(Cli, HooksPrintsRows)
{
    const auto r = run("hooks 6 4 3 1 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "10 7 6 4 2 1\n7 4 3 1\n5 2 1\n2\n1\n");
}

TEST(Cli, HooksRejectsIncreasingParts)
{
    EXPECT_EQ(run("hooks 1 2").status, 2);
}

TEST(Cli, Fhat)
{
    const auto r = run("fhat 2");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "1/2 x1^2")) << r.out;
    EXPECT_EQ(run("fhat 1").status, 2);
    EXPECT_EQ(run("fhat 31").status, 2);
}

TEST(Cli, RatioTableDefault)
{
    const auto r = run("ratio-table");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "176963")) << r.out;
    EXPECT_TRUE(contains(r.out, "31.99935959")) << r.out;
}

TEST(Cli, AsymptWithExact)
{
    const auto r = run("asympt --generic 1 --n 100 --with-exact");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "190569292")) << r.out;
}

TEST(Cli, AsymptNeedsOneIndex)
{
    EXPECT_EQ(run("asympt sym --m 2").status, 2);
    EXPECT_EQ(run("asympt --generic 0,1 --series-index 3").status, 2);
}

TEST(Cli, JsonShape)
{
    const auto r = run("coeffs sym-base --order 3 --format json");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "\"command\"")) << r.out;
    EXPECT_TRUE(contains(r.out, "\"rows\"")) << r.out;
}

TEST(Cli, Deterministic)
{
    EXPECT_EQ(run("coeffs alt --m 3 --order 60 --format json").out,
              run("coeffs alt --m 3 --order 60 --format json").out);
}

TEST(Cli, UnknownSubcommandIsUsageError)
{
    EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, VerifyQuickPassesAndCorruptionFails)
{
    EXPECT_EQ(run("verify quick").status, 0);
    const auto bad = run("verify quick --corrupt hook_length_sum");
    EXPECT_EQ(bad.status, 1);
    EXPECT_TRUE(contains(bad.out, "FAIL hook_length_sum")) << bad.out;
    EXPECT_EQ(run("verify quick --corrupt no_such_check").status, 2);
}
