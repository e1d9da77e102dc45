#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookdg/cli.hpp"
#include "hookdg/element.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hookdg;

struct result {
    int code;
    std::string out, err;
};

static result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hookdg");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

static size_t count(const std::string& s, const std::string& what)
{
    size_t c = 0;
    for (size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1))
        ++c;
    return c;
}

TEST_CASE("resolve")
{
    result r = run({"resolve", "--n", "2", "--d", "2", "--which", "both"});
    CHECK(r.code == 0);
    CHECK(count(r.out, "ranks [1,3,2]") == 2);

    result j = run({"resolve", "--n", "2", "--d", "2", "--format", "json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["complexes"].size() == 2);
    CHECK(doc["complexes"][0]["ranks"] == nlohmann::json::array({1, 3, 2}));
    CHECK(doc["complexes"][1]["complex"] == "ek");
    CHECK(doc["complexes"][0]["differentials"][0]["entries"][0][1] == "x1*x2");

    result b = run({"resolve", "--n", "2", "--ideal", "x1, x2^2"});
    CHECK(b.code == 0);
    CHECK(b.out.find("ranks [1,2,1]") != std::string::npos);

    CHECK(run({"resolve", "--n", "0", "--d", "2"}).code == 2);
    CHECK(run({"resolve", "--n", "2", "--d", "2", "--which", "nope"}).code == 2);
    CHECK(run({"resolve", "--n", "2", "--ideal", "x2"}).code == 2);
    CHECK(run({"resolve", "--n", "2", "--d", "2", "--format", "xml"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("multiply")
{
    result r = run({"multiply", "--which", "srinivasan", "--left", "[1|1|]", "--right", "[2|2|]"});
    CHECK(r.code == 0);
    CHECK(r.out == "x1*[1|2|2] + x2*[1|1|2]\n");

    CHECK(run({"multiply", "--which", "srinivasan", "--left", "[1|2|]", "--right", "[1|2|]"}).out == "0\n");
    CHECK(run({"multiply", "--which", "peeva", "--left", "[ | 1 1 | ]", "--right", "[ | 2 2 | ]"}).out ==
          "x1*[1|2 2|] + x2*[1|1 2|]\n");
    CHECK(run({"multiply", "--which", "peeva-recursive", "--left", "[|1 1|]", "--right", "[|2 2|]"}).out ==
          "x1*[1|2 2|] + x2*[1|1 2|]\n");
    CHECK(run({"multiply", "--which", "peeva", "--left", "(x1^2;)", "--right", "(x2^2;)"}).out ==
          "x1*(x2^2; 1) + x2*(x1*x2; 1)\n");
    CHECK(run({"multiply", "--which", "peeva-recursive", "--left", "(x1^2;)", "--right", "(x2^2;)"}).out ==
          "x1*(x2^2; 1) + x2*(x1*x2; 1)\n");
    CHECK(run({"multiply", "--which", "srinivasan", "--left", "x1*[1|1|]", "--right", "[2|2|]", "--n", "3"}).out ==
          "x1^2*[1|2|2] + x1*x2*[1|1|2]\n");

    // mismatched d, out-of-basis tableaux and parse failures are usage errors
    CHECK(run({"multiply", "--which", "srinivasan", "--left", "[1|1|]", "--right", "[2|2 2|]"}).code == 2);
    CHECK(run({"multiply", "--which", "srinivasan", "--left", "[1|1|]", "--right", "[2|2|]", "--d", "3"}).code == 2);
    CHECK(run({"multiply", "--which", "srinivasan", "--left", "[2|1|]", "--right", "[2|2|]"}).code == 2);
    CHECK(run({"multiply", "--which", "srinivasan", "--left", "[1|1", "--right", "[2|2|]"}).code == 2);
    CHECK(run({"multiply", "--which", "srinivasan", "--left", "[1|3|]", "--right", "[2|2|]", "--n", "2"}).code == 2);
    CHECK(run({"multiply", "--which", "srinivasan", "--left", "(x1^2;)", "--right", "[2|2|]"}).code == 2);
}

TEST_CASE("rendered products parse back")
{
    result j = run({"multiply", "--which", "srinivasan", "--left", "[1|1|]", "--right", "[2|3|]", "--format", "json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["n"] == 3);
    CHECK(doc["d"] == 2);
    std::string text = doc["result"];
    element e = parse_element(text, complex_kind::L, 3);
    CHECK(e.str() == text);
    element from_terms(complex_kind::L, 3);
    for (const auto& t : doc["terms"]) {
        std::string key = t["key"];
        from_terms += parse_element(key, complex_kind::L, 3) * monomial::parse(t["monomial"].get<std::string>(), 3) *
                      parse_rational(t["coefficient"].get<std::string>());
    }
    CHECK(from_terms == e);
}

TEST_CASE("check")
{
    result r = run({"check", "--suite", "iso", "--n", "2", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS iso n=2 d=2", 0) == 0);

    CHECK(run({"check", "--suite", "iso", "--n", "2", "--d", "2", "--corrupt"}).code == 1);
    CHECK(run({"check", "--suite", "nope"}).code == 2);
    CHECK(run({"check", "--n", "3-1"}).code == 2);
    CHECK(run({"check", "--suite", "strand", "--n", "2", "--d", "3", "--max-degree", "2"}).code == 2);

    result j = run({"check", "--suite", "d2", "--suite", "eta", "--n", "1-2", "--d", "2", "--format", "json"});
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["pass"] == true);
    CHECK(doc["reports"].size() == 4);
    CHECK(doc["reports"][0]["suite"] == "d2");
    CHECK(doc["reports"][3]["suite"] == "eta");
    CHECK(doc["reports"][3]["failures"].empty());
}

TEST_CASE("output file")
{
    auto path = std::filesystem::temp_directory_path() / "hookdg_cli_test.txt";
    std::filesystem::remove(path);
    result r = run({"resolve", "--n", "2", "--d", "1", "--which", "l", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    CHECK(s.str().find("ranks [1,2,1]") != std::string::npos);
    std::filesystem::remove(path);
}
