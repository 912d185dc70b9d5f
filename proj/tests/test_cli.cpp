#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lkcds_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    write("star.txt", "0 1\n0 2\n0 3\n0 4\n0 5\n");
    write("p9.txt", "p 9 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n");
    write("c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  // exit status of `lkcds <args>`; stdout goes to out.txt
  int run(const std::string& args) const {
    const std::string cmd = "cd '" + dir_.string() + "' && '" LKCDS_BINARY "' " + args + " > out.txt 2> err.txt";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, KernelizeExitCodes) {
  EXPECT_EQ(run("kernelize -i star.txt --k 1 --r 1 --alpha 7 -o star.k"), 0);
  EXPECT_EQ(read("star.k").rfind("lkcds/1\n", 0), 0u);
  EXPECT_NE(read("err.txt").find("# lkcds kernelize csv v1"), std::string::npos);
  EXPECT_EQ(run("kernelize -i p9.txt --k 1 --r 1"), 10);
  write("bad.txt", "0 1\n1 x\n");
  EXPECT_EQ(run("kernelize -i bad.txt --k 1"), 2);
  EXPECT_EQ(run("kernelize -i missing.txt --k 1"), 2);
  EXPECT_EQ(run("kernelize -i star.txt --alpha 1"), 2);
  EXPECT_EQ(run("kernelize -i star.txt --core-mode fast"), 2);
  EXPECT_EQ(run("nonsense"), 2);
}

TEST_F(Cli, KernelizeIsDeterministic) {
  ASSERT_EQ(run("kernelize -i c6.txt --k 4 --r 1 -o a.k --stats a.csv"), 0);
  ASSERT_EQ(run("kernelize -i c6.txt --k 4 --r 1 -o b.k --stats b.csv"), 0);
  EXPECT_EQ(read("a.k"), read("b.k"));
  EXPECT_EQ(read("a.csv"), read("b.csv"));
}

TEST_F(Cli, Solve) {
  EXPECT_EQ(run("solve -i c6.txt --r 1 --connected"), 0);
  EXPECT_NE(read("out.txt").find("value 4"), std::string::npos);
  EXPECT_EQ(run("solve -i c6.txt --r 1"), 0);
  EXPECT_NE(read("out.txt").find("value 2"), std::string::npos);
  write("sc.txt", "u 3 3 2\n0\n1\n2\n");
  EXPECT_EQ(run("solve -i sc.txt --problem setcover"), 0);
  EXPECT_NE(read("out.txt").find("status none-within-budget"), std::string::npos);
}

TEST_F(Cli, LiftAndVerify) {
  ASSERT_EQ(run("kernelize -i star.txt --k 1 --r 1 --alpha 7 -o star.k"), 0);
  ASSERT_EQ(run("solve -i star.k --problem kernel"), 0);
  EXPECT_NE(read("out.txt").find("solution 0\n"), std::string::npos);
  EXPECT_EQ(run("lift -i star.txt --kernel star.k --solution 0"), 0);
  EXPECT_EQ(read("out.txt"), "0\n");
  EXPECT_EQ(run("lift -i star.txt --kernel star.k --solution 1,2"), 1);

  EXPECT_EQ(run("verify -i star.txt --kernel star.k"), 0);
  EXPECT_EQ(read("out.txt").find("fail"), std::string::npos);

  auto text = read("star.k");
  text.replace(text.find("[Z]\n0 1 2\n"), 10, "[Z]\n1\n");
  write("broken.k", text);
  EXPECT_EQ(run("verify -i star.txt --kernel broken.k"), 1);
  EXPECT_NE(read("out.txt").find("core fail"), std::string::npos);

  EXPECT_EQ(run("verify -i star.txt --kernel star.k --budget-nodes 1"), 3);
  EXPECT_NE(read("out.txt").find("undetermined"), std::string::npos);
}

TEST_F(Cli, BudgetFromEnvironment) {
  EXPECT_EQ(run("solve -i c6.txt --r 1 --connected"), 0);
  const std::string cmd = "cd '" + dir_.string() + "' && LKCDS_BUDGET_NODES=1 '" LKCDS_BINARY
                          "' solve -i c6.txt --r 1 --connected > out.txt";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 3);
}

TEST_F(Cli, Gen) {
  write("sc.txt", "u 2 2 1\n0\n0 1\n");
  EXPECT_EQ(run("gen -i sc.txt --r 1 -o inst"), 0);
  EXPECT_NE(read("inst.meta").find("k_out 2"), std::string::npos);
  EXPECT_NE(read("inst.roles").find("0 set"), std::string::npos);
  EXPECT_EQ(run("solve -i inst.graph --r 1 --cap 2"), 0);
  EXPECT_NE(read("out.txt").find("status found"), std::string::npos);
  write("uncoverable.txt", "u 3 1 1\n0 1\n");
  EXPECT_EQ(run("gen -i uncoverable.txt --r 1 -o x"), 2);
}

TEST_F(Cli, Reports) {
  EXPECT_EQ(run("core -i star.txt --k 1 --r 1"), 0);
  EXPECT_EQ(read("out.txt"), "Z 1 2\ncertification exhaustive\n");
  EXPECT_EQ(run("core -i p9.txt --k 1 --r 1"), 10);
  EXPECT_EQ(run("profile-stats -i star.txt --r 1 --x 0"), 0);
  EXPECT_EQ(read("out.txt"), "# lkcds profile-stats csv v1\nclass,size,finite_entries\n0,5,1\n");
  EXPECT_EQ(run("wcol-report -i c6.txt --s 2"), 0);
  EXPECT_NE(read("out.txt").find("random,2,"), std::string::npos);
  EXPECT_EQ(run("closure-stats -i c6.txt --k 4 --r 1"), 0);
  EXPECT_NE(read("out.txt").find("6,0,0,0,6,6"), std::string::npos);
  ASSERT_EQ(run("sweep --sizes 3x3,4x4 --r 1 --seed 5 --jobs 2 -o a.csv"), 0);
  ASSERT_EQ(run("sweep --sizes 3x3,4x4 --r 1 --seed 5 --jobs 1 -o b.csv"), 0);
  EXPECT_EQ(read("a.csv"), read("b.csv"));
  EXPECT_EQ(run("sweep --sizes 3by3"), 2);
}

TEST_F(Cli, Dimacs) {
  write("c6.gr", "c hexagon\np edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
  EXPECT_EQ(run("solve -i c6.gr --format dimacs --r 1 --connected"), 0);
  EXPECT_NE(read("out.txt").find("value 4"), std::string::npos);
}
