#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SYMPCOH_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "SYMPCOH_CLI must point at the CLI binary");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json parse_report(const CliResult& r) {
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("suite"));
  REQUIRE(j.contains("params"));
  REQUIRE(j.contains("checks"));
  REQUIRE(j.contains("elapsed_ms"));
  return j;
}

nlohmann::json witness_of(const nlohmann::json& report, const std::string& check) {
  for (const auto& c : report.at("checks"))
    if (c.at("check") == check) return c.at("witness");
  FAIL("missing check: " << check);
  return {};
}

}  // namespace

TEST_CASE("classgroup command") {
  CliResult r = run_cli("classgroup --disc -20");
  CHECK(r.exit_code == 0);
  nlohmann::json j = parse_report(r);
  CHECK(j.at("suite") == "classgroup");
  CHECK(witness_of(j, "class_number") == 2);

  r = run_cli("classgroup --disc -4");
  CHECK(r.exit_code == 0);
  CHECK(witness_of(parse_report(r), "class_number") == 1);

  r = run_cli("classgroup --disc -3");
  CHECK(r.exit_code == 0);
  CHECK(witness_of(parse_report(r), "class_number") == 1);

  // usage errors exit with 2
  CHECK(run_cli("classgroup --disc -21").exit_code == 2);
  CHECK(run_cli("classgroup").exit_code == 2);
}

TEST_CASE("reports are byte-identical up to elapsed_ms") {
  nlohmann::json a = parse_report(run_cli("classgroup --disc -23"));
  nlohmann::json b = parse_report(run_cli("classgroup --disc -23"));
  a["elapsed_ms"] = 0;
  b["elapsed_ms"] = 0;
  CHECK(a.dump() == b.dump());
}

TEST_CASE("homology command") {
  CliResult r = run_cli("homology --n 2 --group 2");
  CHECK(r.exit_code == 0);
  nlohmann::json j = parse_report(r);
  bool found = false;
  for (const auto& entry : witness_of(j, "summary"))
    if (entry.at("degree") == 1) {
      CHECK(entry.at("rank") == 1);
      CHECK(entry.at("torsion").empty());
      found = true;
    }
  CHECK(found);

  CHECK(run_cli("homology --n 1 --group 3").exit_code == 0);
  CHECK(run_cli("homology --n 2 --group 1").exit_code == 0);
  CHECK(run_cli("homology --n 1 --group 2,2").exit_code == 0);
  CHECK(run_cli("homology --n 5 --group 2").exit_code == 2);
  CHECK(run_cli("homology --n 2 --group 8").exit_code == 2);
  CHECK(run_cli("homology --n 2 --group 2,4").exit_code == 2);  // order 8 over the cap
}

TEST_CASE("verify-symbolic command") {
  CHECK(run_cli("verify-symbolic --n 1").exit_code == 0);
  CHECK(run_cli("verify-symbolic --n 2").exit_code == 0);
  nlohmann::json j = parse_report(run_cli("verify-symbolic --n 3"));
  CHECK(witness_of(j, "bad_part_cancels_to_zero").at("bad_count") == 40);
  CHECK(run_cli("verify-symbolic --n 6").exit_code == 2);
}

TEST_CASE("frame pipeline commands") {
  CHECK(run_cli("build-frame --disc -20 --n 1 --classes 1,0").exit_code == 0);
  CHECK(run_cli("verify-frame --disc -20 --n 1 --classes 1,0").exit_code == 0);
  CliResult r = run_cli("pushforward --disc -20 --n 1 --classes 1,0");
  CHECK(r.exit_code == 0);
  nlohmann::json j = parse_report(r);
  CHECK(witness_of(j, "chain").size() == 2);

  r = run_cli("pushforward --disc -20 --n 2 --classes '0,1;1,0'");
  CHECK(r.exit_code == 0);
  CHECK(witness_of(parse_report(r), "chain").size() == 4);

  CHECK(run_cli("build-frame --disc -20 --n 1 --classes 0,0").exit_code == 2);
  CHECK(run_cli("build-frame --disc -20 --n 1 --classes 2,0").exit_code == 2);
}

TEST_CASE("nonintegrality command") {
  CliResult r = run_cli("nonintegrality --cl 2 --n 2");
  CHECK(r.exit_code == 0);
  nlohmann::json j = parse_report(r);
  nlohmann::json counts = witness_of(j, "counts");
  CHECK(counts.at("distinct_nonzero_images") == 0);
  CHECK(counts.at("kappa_binomial") == 0);
  CHECK(counts.at("wedge_rank") == 1);

  CHECK(run_cli("nonintegrality --cl 5 --n 2").exit_code == 0);
  CHECK(run_cli("nonintegrality --cl 3 --n 3").exit_code == 0);
  CHECK(run_cli("nonintegrality --cl 1 --n 2").exit_code == 2);
  CHECK(run_cli("nonintegrality --cl 3 --n 1").exit_code == 2);
}
