#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "arfkit/cli.hpp"
#include "arfkit/serialize.hpp"

using namespace arfkit;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "arfkit");
    std::ostringstream out, err;
    int code = cli::main(args, out, err);
    return {code, out.str(), err.str()};
  }

  struct ScopedEnv {
    explicit ScopedEnv(char const* value) {
      ::setenv("ARFKIT_MAX_GENUS", value, 1);
    }
    ~ScopedEnv() {
      ::unsetenv("ARFKIT_MAX_GENUS");
    }
  };
}  // namespace

TEST_CASE("semigroup JSON") {
  auto j = to_json(NumericalSemigroup::from_generators({3, 7, 11}));
  CHECK(j.dump()
        == R"({"gens":[3,7,11],"frobenius":8,"genus":5,"multiplicity":3,"embdim":3})");
  CHECK(semigroup_from_json(j) == NumericalSemigroup::from_generators({3, 7, 11}));

  j["genus"] = 4;
  CHECK_THROWS_AS(semigroup_from_json(j), InvalidInput);
  CHECK_THROWS_AS(semigroup_from_json(Json::array()), InvalidInput);
  CHECK_THROWS_AS(semigroup_from_json(Json{{"gens", "3,7"}}), InvalidInput);
}

TEST_CASE("report JSON schema") {
  auto j = to_json(classify_report(NumericalSemigroup::from_generators({3, 7, 11})));
  for (auto key : {"semigroup", "invariants", "flags", "canonical", "criteria",
                   "violations", "consistent"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["invariants"]["m"] == 3);
  CHECK(j["invariants"]["F"] == 8);
  CHECK(j["invariants"]["ell"] == 1);
  CHECK(j["flags"]["arf"] == false);
  CHECK(j["flags"]["almost_symmetric"] == true);
  CHECK(j["flags"]["ggl"] == "true");
  CHECK(j["canonical"]["K_finite_part"] == Json{0, 3, 4, 6, 7});
  CHECK(j["canonical"]["S_gens"] == Json{3, 4});
  CHECK(j["consistent"] == true);
  REQUIRE(j["criteria"].size() == 6);
  CHECK(j["criteria"][1]["name"] == "two_plus_generators");
  CHECK(j["criteria"][1]["holds"] == false);
  CHECK(j["criteria"][1]["witnesses"] == Json{5});

  auto u = to_json(classify_report(NumericalSemigroup::from_generators({4, 7, 9})));
  CHECK(u["flags"]["ggl"] == "unknown");
  CHECK(u["criteria"][0]["applicable"] == false);
  CHECK(u["criteria"][0]["holds"] == "unknown");
  CHECK(u["criteria"][0]["raw_holds"].is_boolean());
}

TEST_CASE("report JSON round trip is deterministic") {
  for (auto const& h : enumerate_by_genus(6)) {
    auto const first  = to_json(classify_report(h)).dump();
    auto const parsed = Json::parse(first);
    auto const again  = to_json(classify_report(semigroup_from_json(parsed["semigroup"])));
    CHECK(again.dump() == first);
  }
}

TEST_CASE("cli: info, classify, lipman, arf-closure") {
  auto r = invoke({"info", "3,7,11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("8") != std::string::npos);

  r = invoke({"classify", "3,7,11", "--json"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["flags"]["arf"] == false);
  CHECK(j["flags"]["almost_symmetric"] == true);

  r = invoke({"lipman", "4,7,9,10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<3,4,5>") != std::string::npos);

  r = invoke({"lipman", "4,7,9,10", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).size() == 3);

  r = invoke({"arf-closure", "3,7,11"});
  CHECK(r.code == 0);
  CHECK(r.out == "<3,7,8>\n");

  r = invoke({"arf-closure", "4,5,6", "--unicode"});
  CHECK(r.out == "⟨4,5,6,7⟩\n");
}

TEST_CASE("cli: verify-paper") {
  auto r = invoke({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6/6 PASS") != std::string::npos);
}

TEST_CASE("cli: invalid input exits 2") {
  CHECK(invoke({"classify", "2,4"}).code == 2);
  CHECK(invoke({"classify", "3,x"}).code == 2);
  CHECK(invoke({"classify", "0,1"}).code == 2);
  CHECK(invoke({"classify"}).code == 2);
  CHECK(invoke({"frobnicate", "3,5"}).code == 2);
  CHECK(invoke({"survey"}).code == 2);
  CHECK(invoke({"survey", "--max-genus", "-1"}).code == 2);
  CHECK(invoke({"survey", "--max-genus", "2", "--jobs", "0"}).code == 2);
  CHECK(invoke({"survey", "--max-genus", "2", "--check", "nope"}).code == 2);
  CHECK(invoke({"survey", "--max-genus", "2", "--out", "/nonexistent/dir/x"})
            .code
        == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("cli: survey") {
  auto r = invoke({"survey", "--max-genus", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string        line;
  int                count = 0;
  while (std::getline(lines, line)) {
    auto j = Json::parse(line);
    CHECK(j.contains("gens"));
    CHECK(j["violations"].empty());
    ++count;
  }
  CHECK(count == 1 + 1 + 2 + 4);
  CHECK(r.err.find("total: 8 semigroups, 0 violations") != std::string::npos);

  auto path = std::filesystem::temp_directory_path() / "arfkit_survey_test.jsonl";
  r = invoke({"survey", "--max-genus", "2", "--out", path.string(), "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  count = 0;
  while (std::getline(in, line)) {
    ++count;
  }
  CHECK(count == 4);
  std::filesystem::remove(path);
}

TEST_CASE("cli: ARFKIT_MAX_GENUS") {
  {
    ScopedEnv env("2");
    auto r = invoke({"survey", "--max-genus", "5"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.err.find("total: 4 semigroups") != std::string::npos);
  }
  {
    ScopedEnv env("12");
    auto r = invoke({"survey", "--max-genus", "1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") == std::string::npos);
  }
  {
    ScopedEnv env("lots");
    CHECK(invoke({"survey", "--max-genus", "1"}).code == 2);
  }
}
