#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catwords/catalan.hpp"
#include "catwords/cli.hpp"
#include "catwords/json_io.hpp"

using namespace catwords;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s, std::string_view prefix)
{
    std::istringstream is(s);
    std::size_t n = 0;
    for (std::string line; std::getline(is, line);) {
        if (line.starts_with(prefix)) ++n;
    }
    return n;
}

} // namespace

TEST_CASE("expand")
{
    auto r = run({"expand", "--letter", "5", "--order", "5"});
    CHECK(r.status == kExitOk);
    CHECK(r.out == "1 + z + 2 z^2 + 5 z^3 + 14 z^4 + (41+V) z^5\n");

    // 11 has two 1s, 12 has one.
    r = run({"expand", "--letter", "1", "--order", "2"});
    CHECK(r.out == "1 + V z + (V+V^2) z^2\n");

    r = run({"expand", "--letter", "3", "--order", "0"});
    CHECK(r.out == "1\n");

    r = run({"expand", "--letter", "2", "--order", "2", "--format", "csv"});
    CHECK(r.out == "n,coefficient\n0,1\n1,1\n2,1+V\n");
}

TEST_CASE("rational")
{
    CHECK(run({"rational", "--letter", "2"}).out == "numerator: 1-zVC\ndenominator: 1-zVC-z\n");
    CHECK(run({"rational", "--letter", "1"}).out == "numerator: 1\ndenominator: 1-zVC\n");
    CHECK(run({"rational", "--letter", "4"}).out ==
          "numerator: 1-zVC-2z+z^2VC\ndenominator: 1-zVC-3z+2z^2VC+z^2\n");

    const auto r = run({"--format", "json", "rational", "--letter", "3"});
    const LetterGF gf = letter_gf_from_json(Json::parse(r.out));
    CHECK(gf.letter == 3);
    CHECK(to_json(gf).dump(2) + "\n" == r.out);
}

TEST_CASE("cfrac")
{
    const auto r = run({"cfrac", "--depth", "3", "--tail", "catalan", "--order", "3", "--generic"});
    CHECK(r.status == kExitOk);
    CHECK(r.out == "h_3 = 1-zv3C-zv2\n"
                   "k_3 = 1-zv3C-zv2-zv1+z^2v1v3C\n"
                   "series = 1 + v1 z + (v1v2+v1^2) z^2 + (v1v2v3+v1v2^2+2v1^2v2+v1^3) z^3\n");

    const auto counted = run({"cfrac", "--depth", "2", "--tail", "one", "--order", "3"});
    CHECK(counted.out == "h_2 = 1-z\nk_2 = 1-2z\nseries = 1 + z + 2 z^2 + 4 z^3\n");

    CHECK(run({"cfrac", "--depth", "2", "--tail", "sqrt"}).status == kExitUsage);
}

TEST_CASE("enumerate")
{
    CHECK(run({"enumerate", "--length", "3"}).out == "111\n112\n121\n122\n123\n");
    CHECK(run({"enumerate", "--length", "3", "--max-letter", "2"}).out == "111\n112\n121\n122\n");
    CHECK(run({"enumerate", "--length", "5", "--histogram-letter", "5", "--format", "csv"}).out ==
          "k,count\n0,41\n1,1\n");
    CHECK(run({"enumerate", "--length", "5", "--histogram-letter", "5"}).out == "{0:41,1:1}\n");
    CHECK(run({"enumerate", "--length", "0"}).out == "\n");
    CHECK(run({"enumerate", "--length", "2", "--format", "json"}).out == "[[1,1],[1,2]]\n");
    CHECK(count_lines(run({"enumerate", "--length", "10"}).out, "1") == 16796);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--max-length", "8", "--letters", "5"});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("pass n=8,i=5 histogram {0:1094,1:247,2:75,3:13,4:1}\n") != std::string::npos);
    CHECK(count_lines(r.out, "FAIL") == 0);

    r = run({"verify", "--max-length", "1"});
    CHECK(r.status == kExitOk);
    CHECK(count_lines(r.out, "pass ") >= 3);

    r = run({"--format", "json", "verify", "--max-length", "4", "--letters", "1,2"});
    const Json report = Json::parse(r.out);
    CHECK(report["summary"]["failed"] == 0);
    CHECK(report["summary"]["words_enumerated"] == 1 + 2 + 5 + 14);
    CHECK(report.dump(2) + "\n" == r.out);
}

TEST_CASE("verify reports the number of words it enumerated")
{
    const auto r = run({"--format", "json", "verify", "--max-length", "10"});
    CHECK(r.status == kExitOk);
    const Series catalan = catalan_series(10);
    Integer expected = 0;
    for (std::size_t n = 1; n <= 10; ++n) expected += catalan[n].constant_term();
    CHECK(expected == 23713);
    CHECK(Json::parse(r.out)["summary"]["words_enumerated"].get<std::uint64_t>() == expected);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).status == kExitUsage);
    CHECK(run({"expand"}).status == kExitUsage);
    CHECK(run({"expand", "--letter", "0"}).status == kExitUsage);
    CHECK(run({"expand", "--letter", "x"}).status == kExitUsage);
    CHECK(run({"rational", "--letter", "2", "--format", "xml"}).status == kExitUsage);
    CHECK(run({"verify", "--max-length", "0"}).status == kExitUsage);
    CHECK(run({"frobnicate"}).status == kExitUsage);
    CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("output file and determinism")
{
    const auto path = std::filesystem::temp_directory_path() / "catwords_cli_test.txt";
    std::filesystem::remove(path);
    const auto r = run({"--output", path.string(), "expand", "--letter", "5", "--order", "10"});
    CHECK(r.status == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream contents;
    contents << in.rdbuf();
    CHECK(contents.str() == run({"expand", "--letter", "5", "--order", "10"}).out);
    std::filesystem::remove(path);

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--format", "json", "expand", "--letter", "4", "--order", "7"},
             {"verify", "--max-length", "5"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
