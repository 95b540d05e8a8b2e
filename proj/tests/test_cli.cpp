#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sphkl/cli.hpp"
#include "support.hpp"

using namespace sphkl;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("documented outputs")
    {
        auto hl = run({"hl", "--datum", "gl2", "--lambda", "2,0"});
        CHECK(hl.status == 0);
        CHECK(hl.out == "P[2,0] = s[2,0] - v^2 s[1,1]\n");

        auto tensor = run({"tensor", "--datum", "gl2", "--lambda", "1,0", "--mu", "1,0"});
        CHECK(tensor.status == 0);
        CHECK(tensor.out == "[2,0]:1  [1,1]:1\n");

        auto kl = run({"kl", "--datum", "sp2", "--lambda", "0"});
        CHECK(kl.status == 0);
        CHECK(kl.out.find("self-dual:       PASS") != std::string::npos);
        CHECK(kl.out.find("positivity:      PASS") != std::string::npos);

        CHECK(run({"wtmult", "-d", "gl2", "-l", "2,0", "-m", "1,1"}).out == "1\n");
        CHECK(run({"wtmult", "-d", "sp2", "-l", "2", "-m", "0"}).out == "1\n");
        CHECK(run({"length", "-d", "sp2", "t[1]"}).out == "2\n");
        CHECK(run({"leq", "-d", "gl2", "t[1,0]*s1", "t[0,1]"}).out == "true\n");
    }

    TEST_CASE("coweight parsing")
    {
        CHECK(parse_coweight("0,0", 2) == Coweight{0, 0});
        CHECK(parse_coweight("2,0", 2) == Coweight{2, 0});
        CHECK(parse_coweight("-1", 1) == Coweight{-1});
        CHECK(parse_coweight(" 3 , -2 ", 2) == Coweight{3, -2});
        CHECK_THROWS_AS(parse_coweight("1,0,0", 2), std::invalid_argument);
        CHECK_THROWS_AS(parse_coweight("1,x", 2), std::invalid_argument);
        CHECK_THROWS_AS(parse_coweight("", 1), std::invalid_argument);
    }

    TEST_CASE("datum file errors carry line numbers")
    {
        std::istringstream in("rank 2\n# comment\nroot 1: 1 -1\ncoroot 1: 1 x\n");
        try {
            parse_datum(in, "bad.datum");
            FAIL("expected an error");
        } catch (const DatumError& e) {
            CHECK(std::string(e.what()).find("bad.datum:4:") != std::string::npos);
        }
        std::istringstream unknown("rank 1\nfoo 1: 2\n");
        CHECK_THROWS_AS(parse_datum(unknown), DatumError);
    }

    TEST_CASE("exit statuses")
    {
        CHECK(run({"hl", "-d", "gl2", "-l", "2"}).status == kInputError);
        CHECK(run({"hl", "-d", "gl2", "-l", "0,1"}).status == kInputError);
        CHECK(run({"hl", "-d", "no-such-datum", "-l", "0"}).status == kInputError);
        CHECK(run({"frobnicate"}).status == kInputError);
        CHECK(run({"kl", "-d", "sp2", "-l", "1", "--specialize", "v=1,v0=2"}).status == kCheckFailed);
        CHECK(run({"kl", "-d", "sp2", "-l", "1", "--specialize", "v=2,v0=-1"}).status == kOk);
        CHECK(run({"verify", "-d", "gl2", "-n", "6"}).status == kOk);
        CHECK(run({"--help"}).status == kOk);
    }

    TEST_CASE("output is stable")
    {
        std::vector<std::string> args{"kl", "-d", "sp4", "-l", "0,0", "--format", "machine"};
        CHECK(run(args).out == run(args).out);
    }

    TEST_CASE("golden files")
    {
        namespace fs = std::filesystem;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(SPHKL_GOLDEN_DIR))
            if (entry.path().extension() == ".txt")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        REQUIRE(!files.empty());
        for (const auto& path : files) {
            std::ifstream in(path);
            std::string header;
            std::getline(in, header);
            REQUIRE(header.starts_with("# args: "));
            std::stringstream expected;
            expected << in.rdbuf();
            auto r = run(split(header.substr(8)));
            INFO(path.filename().string());
            CHECK(r.out == expected.str());
        }
    }
}
