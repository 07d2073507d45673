#include "doctest.h"

#include "gorenstein/cli.hpp"
#include "gorenstein/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gorenstein;
using R = Rational;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gorenstein");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "gorenstein-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

}  // namespace

TEST_CASE("JSON round trips") {
    const std::vector<ModOneVector> gens{blocks({{R(1, 4), 2}, {R(1, 2), 3}})};
    const auto g = close_generators(gens, 5);
    const auto j = group_to_json(g);
    CHECK(j.dump() == R"({"N":5,"generators":[["1/4","1/4","1/2","1/2","1/2"]],"order":4})");
    CHECK(group_from_json(j).elements() == g.elements());

    Json wrong = j;
    wrong["order"] = 8;
    CHECK_THROWS(group_from_json(wrong));
    Json no_order = j;
    no_order.erase("order");
    CHECK(group_from_json(no_order).order() == 4);

    const ClassData d{2, {1, 2, 4, 8}, {{}, {1}, {2}}};
    CHECK(class_data_to_json(d).dump() == R"({"k":2,"chain":[1,2,4,8],"subsets":[[],[1],[2]]})");
    CHECK(class_data_from_json(class_data_to_json(d)) == d);

    const auto s = SimplexModel::from_vertices({{0, 0}, {2, 0}, {0, 1}});
    CHECK(simplex_to_json(s).dump() == R"({"d":2,"vertices":[[0,0],[2,0],[0,1]]})");
    CHECK(simplex_from_json(simplex_to_json(s)).vertices() == s.vertices());
}

TEST_CASE("CSV helpers") {
    CHECK(run_length({1, 1, 0, 1}) == "1x2;0x1;1x1");
    CHECK(run_length({}).empty());
    CHECK(subset_mask({}) == 0);
    CHECK(subset_mask({1, 3}) == 5);
}

TEST_CASE("classify command") {
    const auto two = run({"classify", "--v", "2", "--k", "1"});
    CHECK(two.code == 0);
    const auto j = Json::parse(two.out);
    CHECK(j["total"] == 1);
    REQUIRE(j["classes"].size() == 1);
    CHECK(j["classes"][0]["generators"][0].dump() == R"(["1/2","1/2"])");

    const auto eight = run({"classify", "--v", "8", "--k", "1", "--format", "text"});
    CHECK(eight.code == 0);
    CHECK(eight.out.find("1<8: 1\n  1<2<8: 2\n  1<4<8: 2\n  1<2<4<8: 6\ntotal 11") != std::string::npos);

    const auto six = run({"classify", "--v", "6", "--k", "1", "--oracle", "simplex-roundtrip", "--format", "csv"});
    CHECK(six.code == 0);
    CHECK(six.err.find("oracle simplex-roundtrip: 5 passed, 0 skipped, 0 failed") != std::string::npos);
    CHECK(six.out.rfind("chain,subsets,N,dimension,hstar\n", 0) == 0);
    CHECK(six.out.find("1/6,0,6,5,1x6\n") != std::string::npos);
}

TEST_CASE("classify output does not depend on worker count") {
    const auto a = run({"classify", "--v", "12", "--k", "2", "--workers", "1"});
    const auto b = run({"classify", "--v", "12", "--k", "2", "--workers", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"classify", "--v", "1", "--k", "1"}).code == 1);
    CHECK(run({"classify", "--v", "4"}).code == 1);
    CHECK(run({"classify", "--v", "4", "--k", "1", "--format", "xml"}).code == 1);
    CHECK(run({"classify", "--v", "4", "--k", "1", "--oracle", "nope"}).code == 1);
    CHECK(run({"count", "--v", "0"}).code == 1);
    CHECK(run({"decompose", "--k", "1", "--in", "/nonexistent/x.json"}).code == 1);
    CHECK(run({"--max-order", "0", "count", "--v", "4"}).code == 1);
}

TEST_CASE("count and chains") {
    const auto c12 = run({"count", "--v", "12"});
    CHECK(c12.code == 0);
    CHECK(c12.out.find("1\t1\t1\n2\t4\t8\n3\t3\t18\n") != std::string::npos);
    CHECK(c12.out.find("N(12) = 27") != std::string::npos);
    CHECK(run({"count", "--v", "9"}).out.find("N(9) = 3") != std::string::npos);
    CHECK(run({"count", "--v", "30"}).out.find("N(30) = 49") != std::string::npos);
    const auto j = Json::parse(run({"count", "--v", "12", "--format", "json"}).out);
    CHECK(j["total"] == 27);
    CHECK(run({"chains", "--v", "6"}).out == "1<2<6\n1<3<6\n1<6\n");
}

TEST_CASE("decompose command") {
    const auto cyc = scratch("cyclic4.json");
    write_file(cyc, R"({"N":4,"generators":[["1/4","1/4","1/4","1/4"]]})");
    const auto a = run({"decompose", "--k", "1", "--in", cyc.string()});
    CHECK(a.code == 0);
    CHECK(Json::parse(a.out).dump() == R"({"k":1,"chain":[1,4],"subsets":[[]]})");

    const auto two = scratch("chain124.json");
    write_file(two, R"({"N":5,"generators":[["1/4","1/4","1/2","1/2","1/2"]],"order":4})");
    const auto b = run({"decompose", "--k", "1", "--in", two.string()});
    CHECK(b.code == 0);
    CHECK(Json::parse(b.out).dump() == R"({"k":1,"chain":[1,2,4],"subsets":[[],[1]]})");

    const auto pyr = scratch("pyramid.json");
    write_file(pyr, R"({"N":3,"generators":[["0","1/2","1/2"]]})");
    const auto c = run({"decompose", "--k", "1", "--in", pyr.string()});
    CHECK(c.code == 2);
    CHECK(c.err.find("pyramid") != std::string::npos);

    const auto wrong_k = run({"decompose", "--k", "2", "--in", two.string()});
    CHECK(wrong_k.code == 2);

    const auto junk = scratch("junk.json");
    write_file(junk, "{not json");
    CHECK(run({"decompose", "--k", "1", "--in", junk.string()}).code == 1);
}

TEST_CASE("classify output decomposes back class by class") {
    const auto out = scratch("v12k2.json");
    REQUIRE(run({"classify", "--v", "12", "--k", "2", "--out", out.string()}).code == 0);
    std::ifstream f(out);
    const Json result = Json::parse(f);
    std::size_t i = 0;
    for (const auto& entry : result["classes"]) {
        const auto one = scratch("class" + std::to_string(i++) + ".json");
        write_file(one, entry.dump());
        const auto r = run({"decompose", "--k", "2", "--in", one.string()});
        REQUIRE(r.code == 0);
        const auto back = Json::parse(r.out);
        CHECK(back["chain"] == entry["chain"]);
        CHECK(back["subsets"] == entry["subsets"]);
    }
    CHECK(i == 27);
    // the whole file at once
    CHECK(run({"decompose", "--k", "2", "--in", out.string()}).code == 0);
}

TEST_CASE("environment caps apply unless a flag overrides them") {
    ::setenv(cli::kEnvMaxOrder, "5", 1);
    CHECK(run({"classify", "--v", "6", "--k", "1"}).code == 1);
    CHECK(run({"--max-order", "6", "classify", "--v", "6", "--k", "1"}).code == 0);
    ::unsetenv(cli::kEnvMaxOrder);
    CHECK(run({"classify", "--v", "6", "--k", "1"}).code == 0);
}

TEST_CASE("verify command") {
    const auto r = run({"verify", "--v", "6", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}
