#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct run_result {
  int code = -1;
  std::string out;
};

// Runs tdpoly with the given argument string; stderr is discarded.
run_result tdpoly(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + std::string(TDPOLY_PATH) + " " + args + " 2>/dev/null";
  run_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Compute, DyckWorkedExample) {
  const auto r = tdpoly("compute --sort rooted --format dyck '((()()))'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2 + 2*y\n");
}

TEST(Compute, UnrootedNewickThreeStar) {
  const auto r = tdpoly("compute --sort unrooted --format newick '(,,);'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^6 + 3*x^4*y + 3*x^2*y^2 + y^3\n");
}

TEST(Compute, PrimeZero) {
  const auto r = tdpoly("compute --variant p-prime:0 --sort rooted --format dyck '(()())'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2\n");
}

TEST(Compute, NegativeSubstitution) {
  EXPECT_EQ(tdpoly("compute --variant p-prime:-1 --sort rooted '(((())))'").out, "x - 3\n");
}

TEST(Compute, JsonOutput) {
  const auto r = tdpoly("compute --sort rooted --out json '((()()))'");
  EXPECT_EQ(r.out, R"({"vars":["x","y"],"terms":[{"exp":[2,0],"coef":"1"},{"exp":[0,1],"coef":"2"}]})"
                   "\n");
}

TEST(Compute, Labeled) {
  const auto r = tdpoly("compute --sort rooted --format newick --variant p-labeled '((a,b),c);'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x_1*x_2*x_3 + x_3*y + y\n");
}

TEST(Compute, Errors) {
  EXPECT_EQ(tdpoly("compute --sort rooted '(()'").code, 2);
  EXPECT_EQ(tdpoly("compute '(())'").code, 2);
  EXPECT_EQ(tdpoly("compute --sort unrooted '()'").code, 2);
  EXPECT_EQ(tdpoly("compute --sort rooted --variant p-prime:x '()'").code, 2);
  EXPECT_EQ(tdpoly("compute --sort rooted --variant p-labeled '(()())'").code, 2);
  EXPECT_EQ(tdpoly("compute --sort rooted --format newick '(((),());'").code, 2);
}

TEST(Compare, ShuffledDrawingsAreIsomorphic) {
  const auto r = tdpoly("compare --sort rooted '((())()(()()))' '((()())()(()))'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 3u);
  EXPECT_NE(r.out.find("isomorphic"), std::string::npos);
}

TEST(Compare, PathVersusStar) {
  const auto r = tdpoly("compare --sort rooted '((()))' '(()())'");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "x + 2*y\nx^2 + y\ndistinct\n");
}

TEST(Compare, MismatchedSortsAreUsageErrors) {
  EXPECT_EQ(tdpoly("compare --sort-a rooted --sort-b unrooted '(()())' '(()()())'").code, 2);
  EXPECT_EQ(tdpoly("compare '(()())' '(()())'").code, 2);
  EXPECT_EQ(tdpoly("compare --sort rooted '(()' '()'").code, 2);
}

TEST(Verify, Suites) {
  auto r = tdpoly("verify lemma2 --max-size 9");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "checked 486 trees: OK\n");
  r = tdpoly("verify injectivity --max-size 12");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(": OK"), std::string::npos);
  EXPECT_EQ(tdpoly("verify roundtrip --max-size 9").code, 0);
  EXPECT_EQ(tdpoly("verify eisenstein --max-size 9").code, 0);
  EXPECT_EQ(tdpoly("verify contraction --max-size 10").code, 0);
}

TEST(Verify, Errors) {
  EXPECT_EQ(tdpoly("verify nosuch --max-size 3").code, 2);
  EXPECT_EQ(tdpoly("verify lemma2 --max-size 40").code, 2);
  EXPECT_EQ(tdpoly("verify lemma2").code, 2);
}

TEST(Collide, BinaryPrimeOneCollides) {
  const auto r = tdpoly("collide --class binary --variant p-prime:1 --max-size 14 --expect-collision");
  EXPECT_EQ(r.code, 0);
  EXPECT_GE(lines(r.out), 1u);
  EXPECT_EQ(r.out.rfind("{\"invariant\":", 0), 0u);
}

TEST(Collide, RootedPIsInjective) {
  const auto r = tdpoly("collide --class rooted --variant p --max-size 12 --expect-injective");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
}

TEST(Collide, ZeroSubstitutionExactReport) {
  const auto r = tdpoly("collide --class binary --variant p-prime:0 --max-size 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"invariant\":\"x^4\",\"trees\":[\"(((()())())())\",\"((()())(()()))\"]}\n");
}

TEST(Collide, UnmetExpectationFails) {
  EXPECT_EQ(tdpoly("collide --class rooted --max-size 8 --expect-collision").code, 1);
  EXPECT_EQ(tdpoly("collide --class binary --variant p-prime:0 --max-size 4 --expect-injective").code, 1);
  EXPECT_EQ(tdpoly("collide --class nosuch --max-size 4").code, 2);
  EXPECT_EQ(tdpoly("collide --max-size 4 --expect-collision --expect-injective").code, 2);
}

TEST(Collide, DeterministicAcrossWorkerCounts) {
  const std::string cmd = "collide --class binary --variant p-prime:-1 --max-size 11";
  const auto one = tdpoly(cmd, "TDP_WORKERS=1 ");
  EXPECT_FALSE(one.out.empty());
  EXPECT_EQ(tdpoly(cmd, "TDP_WORKERS=3 ").out, one.out);
}

TEST(Reconstruct, Examples) {
  auto r = tdpoly("reconstruct 'x^2 + 2*y'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "rooted ((()()))\n");
  r = tdpoly("reconstruct 'x^6+3*x^4*y+3*x^2*y^2+y^3'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "unrooted (()()())\n");
  r = tdpoly(R"(reconstruct '{"vars":["x","y"],"terms":[{"exp":[2,0],"coef":"1"},{"exp":[0,1],"coef":"1"}]}')");
  EXPECT_EQ(r.out, "rooted (()())\n");
  EXPECT_EQ(tdpoly("reconstruct 'x'").out, "rooted ()\n");
  EXPECT_EQ(tdpoly("reconstruct 'x^2'").out, "unrooted (())\n");
}

TEST(Reconstruct, Errors) {
  EXPECT_EQ(tdpoly("reconstruct 'x^2 + x*y'").code, 1);
  EXPECT_EQ(tdpoly("reconstruct 'x^2 + z'").code, 1);
  EXPECT_EQ(tdpoly("reconstruct 'x^2 +'").code, 2);
  EXPECT_EQ(tdpoly("reconstruct '{\"vars\":'").code, 2);
}

TEST(Enumerate, Catalogs) {
  auto r = tdpoly("enumerate --class rooted --size 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 4u);
  EXPECT_EQ(lines(tdpoly("enumerate --class unrooted --size 5").out), 3u);
  EXPECT_EQ(lines(tdpoly("enumerate --class binary --size 4").out), 2u);
  EXPECT_EQ(tdpoly("enumerate --class unrooted --size 1").code, 2);
  EXPECT_EQ(tdpoly("enumerate --class rooted --size 0").code, 2);
}

TEST(Output, ByteIdenticalAcrossRuns) {
  const std::string cmd = "enumerate --class unrooted --size 9";
  EXPECT_EQ(tdpoly(cmd).out, tdpoly(cmd).out);
}
