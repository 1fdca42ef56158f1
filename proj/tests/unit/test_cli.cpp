#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "awgraph/colorings.hpp"
#include "cli.hpp"

using awgraph::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("awgraph_cli_" + name);
    std::filesystem::remove(p);
    return p;
}

std::string write_file(const std::string& name, const std::string& text) {
    const auto p = temp_path(name);
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("version") {
    const auto r = call({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out.find("awgraph") != std::string::npos);
    CHECK(r.out.find("schema") != std::string::npos);
}

TEST_CASE("aw on an inline graph") {
    const auto r = call({"aw", "--graph6", "Bg", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("aw(G, 3) = 3") != std::string::npos);
    CHECK(r.out.find("certificate") != std::string::npos);
}

TEST_CASE("aw on a product from files writes JSON") {
    const auto left = write_file("p3.g6", "Bg\n");
    const auto right = write_file("c6.txt", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
    const auto out = temp_path("aw.jsonl");
    const auto r = call({"aw", "--left", left, "--right", right, "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("aw(G, 3) = 4") != std::string::npos);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["aw"] == 4);
    CHECK(j["k"] == 3);
    CHECK(j["certificate"].size() == 18);
    CHECK(j.contains("stats"));
}

TEST_CASE("odd-diametral colouring check") {
    const auto left = write_file("p2.g6", "A_\n");
    const auto right = write_file("p3b.g6", "Bg\n");
    const auto r = call({"color", "--scheme", "odd-diametral", "--left", left, "--right", right, "--pair", "auto", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rainbow-free, exact 3") != std::string::npos);
}

TEST_CASE("--pair all prints one line per diametral choice") {
    const auto r = call({"color", "--scheme", "even-generalized", "--left", "S3", "--right", "P4", "--pair", "all"});
    CHECK(r.code == 0);
    const auto p = awgraph::cartesian_product(awgraph::star_graph(3), awgraph::path_graph(4));
    const auto n = awgraph::enumerate_diametral_choices(p).size();
    std::size_t lines = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) lines += line.rfind("pair ", 0) == 0;
    CHECK(lines == n);
}

TEST_CASE("--check exits 1 when a rainbow progression exists") {
    const auto r = call({"color", "--scheme", "even-generalized", "--left", "S3", "--right", "P4", "--pair", "all", "--check"});
    CHECK(r.code == 1);
    const auto bad = call({"color", "--scheme", "odd-diametral", "--left", "S3", "--right", "S3", "--check"});
    CHECK(bad.code == 1);
}

TEST_CASE("example colouring") {
    const auto r = call({"color", "--scheme", "example-p3c6", "--check", "--grid"});
    CHECK(r.code == 0);
    CHECK(r.out == "rainbow-free, exact 3\nR G G G G G\nG G G G G G\nG G G B G G\n");
}

TEST_CASE("explicit pair choice") {
    const auto ok = call({"color", "--scheme", "odd-diametral", "--left", "P2", "--right", "P3", "--pair", "2,3;1,1", "--check"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("pair 2,3;1,1: rainbow-free", 0) == 0);
    CHECK(call({"color", "--scheme", "odd-diametral", "--left", "P2", "--right", "P3", "--pair", "1,1;1,2"}).code == 2);
}

TEST_CASE("verify") {
    const auto r = call({"verify", "--claim", "THM_PMPN", "--max-m", "5", "--max-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("THM_PMPN") != std::string::npos);
    CHECK(r.out.find("all 1 claims passed") != std::string::npos);
    CHECK(call({"verify", "--claim", "THM_PMPN", "--max-m", "4", "--max-n", "4", "--mutate-drop-edge"}).code == 1);
    CHECK(call({"verify", "--list"}).out.find("CONJ_KPER (exploratory)") != std::string::npos);
}

TEST_CASE("verify --out resumes") {
    const auto out = temp_path("verify.jsonl");
    const std::vector<std::string> args{"verify", "--claim", "THM_PMPN", "--claim", "FIG2_REPRO", "--out", out.string()};
    REQUIRE(call(args).code == 0);
    const auto first = slurp(out);
    CHECK(std::count(first.begin(), first.end(), '\n') == 16 + 2);
    REQUIRE(call(args).code == 0);
    CHECK(slurp(out) == first);
}

TEST_CASE("identical invocations are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"aw", "--left", "P3", "--right", "C6", "--grid"},
             {"verify", "--claim", "THM_ODD_4", "--product-tree-n", "5"},
             {"trees", "--max-n", "7", "--filter", "3-peripheral"},
             {"analyze", "--graph6", "Esa?"}}) {
        const auto a = call(args);
        const auto b = call(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    const auto o1 = temp_path("det1.jsonl");
    const auto o2 = temp_path("det2.jsonl");
    call({"color", "--scheme", "even-generalized", "--left", "S3", "--right", "P4", "--pair", "all", "--out", o1.string()});
    call({"color", "--scheme", "even-generalized", "--left", "S3", "--right", "P4", "--pair", "all", "--out", o2.string()});
    CHECK(slurp(o1) == slurp(o2));
    CHECK_FALSE(slurp(o1).empty());
}

TEST_CASE("catalog listing") {
    CHECK(call({"trees", "--n", "4"}).out == "Cs\nCq\n");
    CHECK(call({"graphs", "--n", "5", "--count"}).out == "21\n");
    CHECK(call({"trees", "--n", "13"}).code == 2);
    CHECK(call({"trees", "--n", "4", "--filter", "bogus"}).code == 2);
}

TEST_CASE("product and analyze") {
    const auto p = call({"product", "--left", "P2", "--right", "P2"});
    CHECK(p.code == 0);
    CHECK(p.out == "Cr\n");  // C4 labelled 1-2, 1-3, 2-4, 3-4
    const auto a = call({"analyze", "--graph6", "Cs"});
    CHECK(a.code == 0);
    CHECK(a.out.find("3-peripheral: yes (2 3 4)") != std::string::npos);
    const auto prod = call({"analyze", "--left", "P2", "--right", "S3"});
    CHECK(prod.code == 0);
    CHECK(prod.out.find("n=8, m=10, diameter 3") != std::string::npos);
    CHECK(prod.out.find("3-peripheral: no") != std::string::npos);
    CHECK(call({"analyze", "--left", "P2", "--graph6", "Bg"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"aw", "--graph6", "Bg", "--input", "x"}).code == 2);
    CHECK(call({"aw", "--graph6", "Bg", "--left", "P2", "--right", "P2"}).code == 2);
    CHECK(call({"aw", "--left", "P2"}).code == 2);
    CHECK(call({"aw"}).code == 2);
    CHECK(call({"aw", "--graph6", "B!"}).code == 2);
    CHECK(call({"aw", "--graph6", "A?"}).code == 2);  // disconnected
    CHECK(call({"aw", "--input", "/nonexistent/file"}).code == 2);
    CHECK(call({"verify", "--claim", "NOPE"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"verify", "--all", "--claim", "THM_PMPN"}).code == 2);
    CHECK(call({"verify", "--claim", "THM_PMPN", "--max-m", "20"}).code == 2);
    CHECK(call({"color", "--left", "P2", "--right", "P3"}).code == 2);
    const auto r = call({"verify", "--claim", "NOPE"});
    CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("AWGRAPH_THREADS is validated") {
    setenv("AWGRAPH_THREADS", "zero", 1);
    CHECK(call({"verify", "--claim", "FIG2_REPRO"}).code == 2);
    setenv("AWGRAPH_THREADS", "2", 1);
    CHECK(call({"verify", "--claim", "FIG2_REPRO"}).code == 0);
    CHECK(call({"verify", "--claim", "FIG2_REPRO", "--threads", "1"}).code == 0);
    unsetenv("AWGRAPH_THREADS");
}

TEST_CASE("conjecture exploration reports data") {
    const auto r = call({"conjecture", "--k", "4", "--tree-n", "5", "--graph-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("not asserted") != std::string::npos);
}
