#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polygem/cli.hpp"

using namespace polygem;

#ifndef POLYGEM_TEST_DATA
#define POLYGEM_TEST_DATA "tests/data"
#endif

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name)
{
    return std::string(POLYGEM_TEST_DATA) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle)
{
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("reduce")
{
    auto r = cli({"reduce", "Sq(1,1)"});
    CHECK(r.code == ExitOk);
    CHECK(r.out == "input\tSq(1,1)\nkind\tsteenrod\nreduced\t0\n");

    r = cli({"reduce", "Sq(2,1)*i(2)"});
    CHECK(r.code == ExitOk);
    CHECK(contains(r.out, "reduced\tSq(2,1)*i(2)\n"));

    r = cli({"reduce", "Sq(0,3)"});
    CHECK(r.code == ExitInputError);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "positive entries required"));

    r = cli({"reduce", "Sq(3)*i(2)"});  // excess 3 > 2
    CHECK(r.code == ExitInputError);
    CHECK(contains(r.err, "excess"));
}

TEST_CASE("series and basis")
{
    auto r = cli({"series", "--space", "E(4)", "--degree-max", "8"});
    CHECK(r.code == ExitOk);
    CHECK(r.out == "degree\tdimension\n0\t1\n1\t0\n2\t0\n3\t0\n4\t1\n5\t1\n6\t1\n7\t2\n8\t2\n");
    // Global flags are accepted on either side of the verb.
    CHECK(cli({"--degree-max", "8", "series", "--space", "E(4)"}).out == r.out);

    r = cli({"basis", "--module", "Free(2)", "--degree-max", "5"});
    CHECK(r.out == "degree\telement\n2\ti(2)\n3\tSq(1)*i(2)\n4\tSq(2)*i(2)\n5\tSq(2,1)*i(2)\n");
    r = cli({"basis", "--module", "Prime(3)", "--degree", "4"});
    CHECK(r.out == "degree\telement\n");
    CHECK(cli({"basis", "--module", "Cofree(2)"}).code == ExitInputError);
    CHECK(cli({"series", "--space", "KZ2h(3,1)"}).code == ExitInputError);
    // Commas inside a factor do not split the list.
    r = cli({"series", "--space", "E(4), KZ2h(3,2)", "--degree-max", "4"});
    CHECK(r.code == ExitOk);
    CHECK(r.out == "degree\tdimension\n0\t1\n1\t0\n2\t0\n3\t1\n4\t2\n");
}

TEST_CASE("milgram")
{
    const auto r = cli({"milgram", "--n", "4", "--degree-max", "14"});
    CHECK(r.code == ExitOk);
    CHECK(contains(r.out, "# catalogue\n4\tibar4\tprim\n8\ttau1\tnon-prim\n10\tlambda2\tprim\n14\tlambda3\tprim\n"));
    CHECK(contains(r.out, "14\tlambda3\tyes\tprim\tSq(7)*isub(7)\n"));
    CHECK(cli({"milgram", "--n", "1"}).code == ExitInputError);
}

TEST_CASE("emfiber")
{
    auto r = cli({"emfiber", "--square", "3", "--compare", "E(3)", "--degree-max", "16"});
    CHECK(r.code == ExitOk);
    CHECK(contains(r.out, "compare\tE(3)\tmatch\n"));

    r = cli({"emfiber", "--square", "3", "--compare", "KF2(2)", "--degree-max", "16"});
    CHECK(r.code == ExitVerificationFailed);
    CHECK(contains(r.out, "mismatch\tdegree 2"));

    CHECK(cli({"emfiber", "--degree-max", "8"}).code == ExitInputError);
    CHECK(cli({"emfiber", "--input", data("missing.txt")}).code == ExitInputError);
}

TEST_CASE("construct")
{
    auto r = cli({"construct", "--l", "2", "--steps", "9", "--degree-max", "24"});
    CHECK(r.code == ExitOk);
    CHECK(contains(r.out, "verified\tyes\n"));
    CHECK(contains(r.out, "nontrivial\tyes"));
    CHECK(cli({"construct", "--l", "1"}).code == ExitInputError);
}

TEST_CASE("check2pg")
{
    auto r = cli({"check2pg", "--input", data("trivial.txt")});
    CHECK(r.code == ExitOk);
    CHECK(r.out.rfind("case\ttrivial\n", 0) == 0);

    r = cli({"check2pg", "--input", data("case1b.txt"), "--r", "5"});
    CHECK(r.code == ExitOk);
    CHECK(contains(r.out, "for r <= 5"));

    CHECK(cli({"check2pg"}).code == ExitInputError);
    CHECK(cli({"frobnicate"}).code == ExitInputError);
    CHECK(cli({}).code == ExitInputError);
    CHECK(cli({"--help"}).code == ExitOk);
}

TEST_CASE("reports are deterministic and --output writes the same bytes")
{
    const std::vector<std::string> args = {"construct", "--steps", "9", "--degree-max", "24", "--witness"};
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.out == b.out);

    const std::string path = "test_cli_output.tsv";
    auto with_file = args;
    with_file.insert(with_file.end(), {"--output", path});
    const auto c = cli(with_file);
    CHECK(c.code == ExitOk);
    CHECK(c.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == a.out);
    std::remove(path.c_str());
}
