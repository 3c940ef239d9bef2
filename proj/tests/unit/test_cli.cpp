#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "efb/cli.hpp"
#include "efb/json_io.hpp"

using namespace efb;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden corpus") {
    std::size_t n = 0;
    for (const auto& entry : std::filesystem::directory_iterator(EFB_GOLDEN_DIR)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream f(entry.path());
        const Json c = Json::parse(f);
        INFO(entry.path().filename().string());
        const Run r = run(c["args"].get<std::vector<std::string>>(), c["stdin"].get<std::string>());
        CHECK(r.code == c["exit"].get<int>());
        CHECK(r.out == c["stdout"].get<std::string>());
        ++n;
    }
    CHECK(n >= 20);
}

TEST_CASE("constraint counts") {
    CHECK(run({"constraints", "--dim", "10"}).out == "10\n");
    CHECK(run({"constraints", "--dim", "12"}).out == "66\n");
    CHECK(run({"constraints", "--dim", "16"}).out == "1821\n");
}

TEST_CASE("annihilator of a Fock spinor") {
    const Run r = run({"annihilator"}, R"({"m": 3, "xi": {"1": "1"}})");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    std::vector<std::string> texts;
    for (const auto& v : j["vectors"]) texts.push_back(v["text"]);
    CHECK(texts == std::vector<std::string>{"p1", "q2", "q3"});
}

TEST_CASE("product output is canonical") {
    const std::string x =
        R"({"m":2,"terms":[{"a":[-1,1],"b":[1,1],"c":"4/6"},{"a":[1,1],"b":[-1,-1],"c":"+3"},{"a":[1,1],"b":[-1,-1],"c":"-1"}]})";
    const Run r = run({"product"}, "[" + x + "]");
    REQUIRE(r.code == 0);
    const Run again = run({"product"}, "[" + r.out + "]");
    CHECK(again.out == r.out);
    CHECK(element_to_json(element_from_json(Json::parse(r.out))).dump(2) + "\n" == r.out);
    const Json j = Json::parse(r.out);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["c"] == "2");
    CHECK(j["terms"][1]["c"] == "2/3");
}

TEST_CASE("exit codes and error categories") {
    auto code_of = [](const Run& r) { return Json::parse(r.err)["error"].get<std::string>(); };
    Run r = run({"annihilator"}, "{");
    CHECK(r.code == kExitMalformed);
    CHECK(code_of(r) == "malformed_input");
    r = run({"annihilator"}, R"({"m": 2, "xi": {}})");
    CHECK(r.code == kExitDomain);
    CHECK(code_of(r) == "zero_spinor");
    r = run({"annihilator", "--m", "3"}, R"({"m": 2, "xi": {"0": "1"}})");
    CHECK(r.code == kExitDomain);
    CHECK(code_of(r) == "dimension_mismatch");
    r = run({"annihilator"}, R"({"m": 9, "xi": {"0": "1"}})");
    CHECK(code_of(r) == "out_of_range");
    r = run({"annihilator"}, R"({"m": 2, "xi": {"0": "1+i"}})");
    CHECK(r.code == kExitDomain);
    CHECK(code_of(r) == "field_mismatch");
    r = run({"annihilator", "--field", "Qi"}, R"({"m": 2, "xi": {"0": "1+i"}})");
    CHECK(r.code == kExitOk);
    r = run({"annihilator"}, R"({"m": 2, "xi": {"0": "x"}})");
    CHECK(r.code == kExitMalformed);
    r = run({"product"}, R"([{"m": 2, "terms": []}, {"m": 3, "terms": []}])");
    CHECK(code_of(r) == "dimension_mismatch");
    r = run({"product"}, R"([{"m": 2, "terms": [{"a": [1, 2], "b": [1, 1], "c": "1"}]}])");
    CHECK(r.code == kExitMalformed);
    r = run({"subspace"}, R"({"m": 2, "vectors": [{"alpha": ["1", "0"], "beta": ["1", "0"]}]})");
    CHECK(code_of(r) == "not_totally_null");
    r = run({"constraints", "--dim", "7"});
    CHECK(code_of(r) == "dimension_mismatch");
    r = run({"verify", "--m", "7"});
    CHECK(code_of(r) == "out_of_range");
    r = run({"verify"});
    CHECK(r.code == kExitMalformed);
    r = run({"expand", "--basis", "other"}, "{}");
    CHECK(r.code == kExitMalformed);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("simplicity report") {
    Run r = run({"simplicity"}, R"({"m": 3, "xi": {"0": "1", "7": "1"}})");
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["simple"] == false);
    CHECK(j["verdicts"]["cartan_chevalley"] == false);
    CHECK(j["verdicts"]["generalized"] == false);
    r = run({"simplicity", "--format", "table"}, R"({"m": 2, "xi": {"1": "1", "3": "1"}})");
    CHECK(r.out.find("nullity             1") != std::string::npos);
}

TEST_CASE("verify ledger matches across runs") {
    const Run a = run({"verify", "--m", "2", "--seed", "9", "--trials", "3"});
    const Run b = run({"verify", "--m", "2", "--seed", "9", "--trials", "3", "--parallel"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
