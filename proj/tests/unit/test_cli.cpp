#ifdef MDENUM_HAVE_CLI

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "doctest.h"

using mdenum::cli::run;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("mdenum_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden outputs") {
    auto r = run({"partition", "--m", "2", "--n", "2", "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out == "v^4 + 2*v^2*x + 2*v^2*y + x^2 + y^2\n");
    CHECK(run({"aztec", "--m", "4", "--n", "4", "--orders", "2,2,2,2"}).out == "8\n");
    CHECK(run({"hosoya", "--m", "1", "--n", "1"}).out == "1\n");
    CHECK(run({"hosoya", "--m", "2", "--n", "4"}).out == "71\n");
    CHECK(run({"matching-poly", "--m", "2", "--n", "2"}).out == "1 + 4*z + 2*z^2\n");
    CHECK(run({"monomer-boundary", "--m", "3", "--n", "3"}).out == "4\n");
    CHECK(run({"dimer", "--m", "8", "--n", "8"}).out == "12988816\n");
  }

  TEST_CASE("numeric mode and rational weights") {
    CHECK(run({"partition", "--m", "2", "--n", "2", "--mode", "numeric"}).out == "7\n");
    // (1/2)^2 + 2/3 at v = 1/2, y = 2/3 on a 1x2 column.
    CHECK(run({"partition", "--m", "1", "--n", "2", "--mode", "numeric", "--v", "1/2", "--y", "2/3"}).out == "11/12\n");
    CHECK(run({"matching-poly", "--m", "2", "--n", "2", "--mode", "numeric", "--x", "2"}).out == "17\n");
    CHECK(run({"dimer", "--m", "2", "--n", "2", "--x", "2", "--y", "3"}).out == "13\n");
    CHECK(run({"dimer", "--m", "2", "--n", "2", "--x", "1/2", "--y", "1/3", "--verify"}).out == "13/36\n");
    const auto decimal = run({"partition", "--m", "2", "--n", "2", "--mode", "numeric", "--v", "0.5"});
    CHECK(decimal.status == 1);
    CHECK(decimal.err.find("--v") != std::string::npos);
  }

  TEST_CASE("json output round-trips byte for byte") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"partition", "--m", "2", "--n", "3", "--format", "json", "--verify"},
          std::vector<std::string>{"hosoya", "--m", "9", "--n", "9", "--format", "json"},
          std::vector<std::string>{"growth", "--m", "3", "--n", "2", "--format", "json", "--verify"},
          std::vector<std::string>{"aztec", "--m", "6", "--n", "6", "--orders", "3,3,3,3", "--format", "json"}}) {
      const auto r = run(args);
      REQUIRE(r.status == 0);
      const auto doc = nlohmann::json::parse(r.out);
      CHECK(doc.dump() + "\n" == r.out);
      CHECK(doc.contains("query"));
      CHECK(doc["result"].is_string());
      CHECK(doc["elapsed_ms"].is_number());
      CHECK((doc["verified"].is_boolean() || doc["verified"].is_null()));
      CHECK(doc["query"]["subcommand"] == args[0]);
    }
    const auto doc = nlohmann::json::parse(run({"aztec", "--m", "6", "--n", "6", "--orders", "3,3,3,3", "--format",
                                                "json", "--verify"}).out);
    CHECK(doc["result"] == "64");
    CHECK(doc["verified"] == true);
    CHECK(nlohmann::json::parse(run({"hosoya", "--m", "9", "--n", "9", "--format", "json", "--verify"}).out)["verified"]
              .is_null());
  }

  TEST_CASE("site files") {
    const auto corner = write_temp("corner.json", "[[1,1]]");
    CHECK(run({"fixed", "--m", "3", "--n", "3", "--sites", corner, "--verify"}).out == "4\n");
    const auto hole = write_temp("hole.json", "[[2,2]]");
    CHECK(run({"aztec", "--m", "3", "--n", "3", "--sites", hole, "--verify"}).out == "2\n");

    const auto malformed = write_temp("bad.json", "[[1,1,2]]");
    CHECK(run({"fixed", "--m", "3", "--n", "3", "--sites", malformed}).status == 1);
    const auto broken = write_temp("broken.json", "[[1,");
    CHECK(run({"fixed", "--m", "3", "--n", "3", "--sites", broken}).status == 1);
    const auto outside = write_temp("outside.json", "[[4,1]]");
    CHECK(run({"fixed", "--m", "3", "--n", "3", "--sites", outside}).status == 1);
    const auto in_corner = write_temp("corner_hole.json", "[[1,1]]");
    CHECK(run({"aztec", "--m", "4", "--n", "4", "--orders", "2,2,2,2", "--sites", in_corner}).status == 1);
    CHECK(run({"fixed", "--m", "3", "--n", "3", "--sites", "/nonexistent/sites.json"}).status == 1);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).status == 1);
    CHECK(run({"frobnicate"}).status == 1);
    CHECK(run({"hosoya", "--m", "2", "--n", "2", "--bogus"}).status == 1);
    CHECK(run({"hosoya", "--m", "2"}).status == 1);
    CHECK(run({"hosoya", "--m", "2", "--n", "2", "--format", "xml"}).status == 1);
    CHECK(run({"monomer-boundary", "--m", "2", "--n", "3"}).status == 1);
    CHECK(run({"aztec", "--m", "4", "--n", "4", "--orders", "4,3,1,1"}).status == 1);
    const auto guard = run({"hosoya", "--m", "30", "--n", "1"});
    CHECK(guard.status == 2);
    CHECK(guard.err.find("limit") != std::string::npos);
    CHECK(run({"hosoya", "--m", "10", "--n", "1", "--max-state-bits", "8"}).status == 2);
    CHECK(run({"partition", "--m", "15", "--n", "1"}).status == 2);
    CHECK(run({"partition", "--m", "15", "--n", "1", "--max-symbolic-bits", "15"}).status == 0);
  }

  TEST_CASE("verify agrees with oracles inside their bounds") {
    for (const char* sub : {"partition", "matching-poly", "hosoya", "dimer", "fixed"}) {
      for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
          const auto r = run({sub, "--m", std::to_string(m), "--n", std::to_string(n), "--verify", "--format", "json"});
          REQUIRE(r.status == 0);
          REQUIRE(nlohmann::json::parse(r.out)["verified"] == true);
        }
      }
    }
    const auto all = run({"verify", "--m", "3", "--n", "3"});
    CHECK(all.status == 0);
    CHECK(all.out == "partition,fixed,monomer-boundary-entries,monomer-boundary,construction\n");
  }

  TEST_CASE("growth formats") {
    const auto csv = run({"growth", "--m", "2", "--n", "2", "--format", "csv"});
    CHECK(csv.out.rfind("m,n,exact_count_digits,per_site_root,running_sup\n", 0) == 0);
    const auto dimer = run({"growth", "--m", "2", "--n", "2", "--growth-mode", "pure-dimer", "--format", "json"});
    const auto doc = nlohmann::json::parse(dimer.out);
    CHECK(doc["table"]["mode"] == "pure-dimer");
    CHECK(doc["result"].get<std::string>().rfind("1.189207115", 0) == 0);
  }
}

#endif
