#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / ("contentmax_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

Run run(const std::string& args) {
    const fs::path capture = scratch_dir() / "stdout.txt";
    const std::string command = std::string(CONTENTMAX_BINARY) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(command.c_str());
    std::ifstream in(capture);
    std::stringstream text;
    text << in.rdbuf();
    return Run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::string data(const char* name) { return std::string(CONTENTMAX_EXAMPLES_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
}

bool has_line(const std::string& out, const std::string& key, const std::string& value) {
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind(key + ":", 0) != 0) continue;
        const auto rest = line.substr(key.size() + 1);
        if (rest.substr(rest.find_first_not_of(' ')) == value) return true;
    }
    return false;
}

}  // namespace

TEST(Cli, CtReportsCopiesAndContent) {
    auto r = run("ct --graph " + data("path_2_3.txt") + " --pattern path:2");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has_line(r.out, "copies", "1")) << r.out;
    EXPECT_TRUE(has_line(r.out, "ct", "6")) << r.out;
    EXPECT_TRUE(has_line(r.out, "weight", "5")) << r.out;
    EXPECT_TRUE(has_line(r.out, "dag", "yes")) << r.out;

    r = run("ct --graph " + data("empty.txt") + " --pattern star:3");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "copies", "0"));
    EXPECT_TRUE(has_line(r.out, "ct", "0"));
    EXPECT_TRUE(has_line(r.out, "weight", "0"));

    r = run("ct --graph " + data("star_3_unit.txt") + " --pattern star:2");
    EXPECT_TRUE(has_line(r.out, "copies", "3"));
    EXPECT_TRUE(has_line(r.out, "ct", "3"));
}

TEST(Cli, OptimizeWritesTheMergedGraph) {
    const fs::path out = scratch_dir() / "merged.txt";
    auto r = run("optimize --graph " + data("two_edges.txt") + " --pattern path:1 --out " + out.string());
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has_line(r.out, "steps", "1")) << r.out;
    EXPECT_EQ(slurp(out), "a b 2\nvertex c\nvertex d\n");

    r = run("optimize --graph " + data("two_paths.txt") + " --pattern path:2 --trace");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "weight", "6"));
    EXPECT_TRUE(has_line(r.out, "ct before", "5"));
    EXPECT_TRUE(has_line(r.out, "ct after", "8"));
    EXPECT_NE(r.out.find("merge a b (1) -> d e | 2 1 | 5 -> 6"), std::string::npos) << r.out;

    // Already optimal: no steps and an identical file.
    const fs::path same = scratch_dir() / "same.txt";
    r = run("optimize --graph " + data("path_2_3.txt") + " --pattern path:2 --out " + same.string());
    EXPECT_TRUE(has_line(r.out, "steps", "0"));
    EXPECT_EQ(slurp(same), slurp(data("path_2_3.txt")));
}

TEST(Cli, BoundKinds) {
    auto r = run("bound --kind path-int --N 7 --k 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "value", "12")) << r.out;
    EXPECT_TRUE(has_line(r.out, "tuple", "3,2,2")) << r.out;

    r = run("bound --kind path-real --N 6 --k 3");
    EXPECT_TRUE(has_line(r.out, "value", "8")) << r.out;

    r = run("bound --kind star-real --N 1 --a 2 --t 2");
    EXPECT_TRUE(has_line(r.out, "supremum", "1/2"));
    EXPECT_TRUE(has_line(r.out, "at t=2", "1/4"));
    EXPECT_TRUE(has_line(r.out, "attained", "no"));

    r = run("bound --kind star-int --N 4 --a 2 --format json");
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("value"), "6");
    EXPECT_EQ(j.at("witness_ct"), "6");

    EXPECT_EQ(run("bound --kind path-int --N 7/2 --k 3").code, 2);
    EXPECT_EQ(run("bound --kind star-real --N 1 --a 3 --t 2").code, 2);
    EXPECT_EQ(run("bound --kind cube --N 1 --k 1").code, 2);
}

TEST(Cli, SearchExamples) {
    auto r = run("search --edges 7 --pattern path:3");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "best", "12")) << r.out;
    r = run("search --edges 4 --pattern star:2");
    EXPECT_TRUE(has_line(r.out, "best", "6")) << r.out;
    r = run("search --edges 1 --pattern path:2");
    EXPECT_TRUE(has_line(r.out, "best", "0")) << r.out;
    EXPECT_EQ(run("search --edges 3 --pattern path:3 --max-vertices 3").code, 2);
}

TEST(Cli, MatpowComparesAgainstTheBound) {
    auto r = run("matpow --matrix " + data("upper_3.txt") + " --k 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "|A^2|", "6")) << r.out;
    EXPECT_TRUE(has_line(r.out, "nilpotent", "yes"));
    EXPECT_NE(r.out.find("6 <= 25/4: holds"), std::string::npos);

    r = run("matpow --matrix " + data("cycle_2.txt") + " --k 2");
    EXPECT_TRUE(has_line(r.out, "nilpotent", "no"));
    EXPECT_NE(r.out.find("bound comparison skipped"), std::string::npos);

    r = run("matpow --matrix " + data("upper_3.txt") + " --k 1");
    EXPECT_TRUE(has_line(r.out, "|A^1|", "5")) << r.out;
    EXPECT_TRUE(has_line(r.out, "|A|", "5"));
}

TEST(Cli, VerifySuitesPassAtSmallRanges) {
    auto r = run("verify --suite matrix --seed 42 --trials 50");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    r = run("verify --suite paths --max-n 4 --max-k 2");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(run("verify --suite nonsense").code, 2);
}

TEST(Cli, ParseErrorsNameTheLineAndExitTwo) {
    auto r = run("ct --graph " + data("bad_line.txt") + " --pattern path:2");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
    r = run("matpow --matrix " + data("short_matrix.txt") + " --k 2");
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(run("ct --graph " + data("path_2_3.txt") + " --pattern wheel:3").code, 2);
    EXPECT_EQ(run("ct --graph /nonexistent --pattern path:2").code, 2);
    EXPECT_EQ(run("").code, 2);
}
