#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = trisat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.code == 0 ? r.out : r.err); }

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

const std::string kFixtures = TRISAT_FIXTURE_DIR;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes and error objects") {
  CHECK(call({"h1", "A_1", "2", "3", "7"}).code == 0);
  const Run bad = call({"h1", "A_1", "2", "3", "6"});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(json_of(bad)["error"]["kind"] == "invalid_argument");
  CHECK(call({"h1", "Q_3", "2", "3", "7"}).code == 1);
  CHECK(call({"h1", "E_9", "2", "3", "7"}).code == 1);
  CHECK(call({"nonsense"}).code == 1);
  CHECK(call({}).code == 1);
  CHECK(call({"epi", "--triple", "2,3,7", "--q", "9"}).code == 1);
  const Run budget = call({"delta", "E_8", "100"});
  CHECK(budget.code == 3);
  CHECK(json_of(budget)["error"]["kind"] == "budget");
  CHECK(call({"epi", "--triple", "2,3,7", "--q", "67"}).code == 3);
  CHECK(call({"table", "--which", "1", "--rank-cap", "500"}).code == 3);
  CHECK(call({"verify", "--fixtures", "/nonexistent"}).code == 1);
}

TEST_CASE("outputs carry no floating point numbers") {
  const std::vector<std::vector<std::string>> cmds{
      {"roots", "G_2", "--list"},
      {"h1", "E_8", "2", "3", "7"},
      {"delta", "C_3", "4"},
      {"classify", "A_2", "2", "5", "7"},
      {"saturation", "D_4", "3", "3", "9"},
      {"table", "--which", "4"},
      {"epi", "--triple", "2,3,7", "--q", "13"},
      {"deviation"},
      {"deviation", "--family", "E_8", "--n", "7"},
      {"marion", "A_1", "2", "3", "7", "--p", "11"},
      {"rigid-pairs", "--rank-cap", "2", "--c-cap", "10"},
  };
  for (const auto& c : cmds) {
    CAPTURE(c.front());
    const Run r = call(c);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_FALSE(has_float(j));
    CHECK(j["command"] == c.front());
  }
}

TEST_CASE("saturation and h1 payloads") {
  const auto sat = json_of(call({"saturation", "E_8", "2", "3", "7"}));
  CHECK(sat["outcome"] == "Saturated");
  CHECK(sat["reason"] == "None");
  CHECK(sat["base"]["h1"] == 12);
  const auto d4 = json_of(call({"saturation", "D_4", "3", "3", "9"}));
  CHECK(d4["reason"] == "StepEquality");
  CHECK(d4["failing_step"] == 0);
  const auto h1 = json_of(call({"h1", "G_2", "2", "4", "5"}));
  CHECK(h1["h1"] == 0);
  CHECK(h1["case"] == "f");
}

TEST_CASE("table formats") {
  const Run csv = call({"table", "--which", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  std::ifstream in(kFixtures + "/tables/table4.csv");
  std::string line, fixture_body;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') fixture_body += line + "\n";
  CHECK(csv.out == fixture_body);
  const Run md = call({"table", "--which", "4", "--format", "md"});
  CHECK(md.out.find("| X | r | (a,b,c) | provenance |") != std::string::npos);
  CHECK(call({"table", "--which", "4", "--format", "xml"}).code == 1);
}

TEST_CASE("verify is idempotent and flags mismatches") {
  const Run a = call({"verify", "--fixtures", kFixtures});
  const Run b = call({"verify", "--fixtures", kFixtures});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["tables"].size() == 4);
  for (const auto& t : j["tables"]) CHECK(t["match"] == true);

  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "trisat_verify_mismatch";
  fs::remove_all(tmp);
  fs::create_directories(tmp / "tables");
  for (int i = 1; i <= 4; ++i) {
    const std::string name = "table" + std::to_string(i) + ".csv";
    fs::copy_file(fs::path(kFixtures) / "tables" / name, tmp / "tables" / name);
  }
  {
    std::ofstream app(tmp / "tables" / "table4.csv", std::ios::app);
    app << "E,6,2,4,9,StepEquality\n";
  }
  const Run bad = call({"verify", "--fixtures", tmp.string()});
  CHECK(bad.code == 2);
  const auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["tables"][3]["match"] == false);
  CHECK(jb["tables"][3]["missing_count"] == 1);
  fs::remove_all(tmp);
}

}
