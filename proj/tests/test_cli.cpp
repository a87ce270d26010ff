#include <cmath>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"

using dee::testing::data_path;
using dee::testing::matches_golden;
using dee::testing::run_cli;
using json = nlohmann::json;

namespace {

struct GoldenCase {
  const char* file;
  std::string args;
};

const GoldenCase kGolden[] = {
    {"compute_k4.json", "compute --g6 C~"},
    {"compute_c5.json", "compute --edges " + data_path("c5.txt")},
    {"compute_petersen.json", "compute --edges " + data_path("petersen.txt")},
    {"bounds_k4.json", "bounds --g6 C~"},
    {"bounds_c5.json", "bounds --edges " + data_path("c5.txt")},
    {"bounds_petersen.json", "bounds --edges " + data_path("petersen.txt")},
    {"bounds_c5.csv", "bounds --format csv --edges " + data_path("c5.txt")},
    {"sweep_k4.csv", "sweep --family complete --n 4..4"},
    {"sweep_c5.csv", "sweep --family cycle --n 5..5"},
    {"sweep_petersen.csv", "sweep --family petersen"},
    {"sweep_cycle_3_8.csv", "sweep --family cycle --n 3..8"},
};

}  // namespace

TEST_CASE("golden outputs are byte-identical across runs and thread counts") {
  for (const auto& c : kGolden) {
    const std::string file = c.file;
    CAPTURE(file);
    const auto first = run_cli(c.args + " --threads 1");
    REQUIRE(first.exit_code == 0);
    CHECK(matches_golden(c.file, first.out));
    CHECK(run_cli(c.args + " --threads 1").out == first.out);
    CHECK(run_cli(c.args + " --threads 4").out == first.out);
    CHECK(run_cli(c.args, "DEE_THREADS=3").out == first.out);
  }
}

TEST_CASE("compute values") {
  const auto k3 = run_cli("compute --g6 Bw");
  REQUIRE(k3.exit_code == 0);
  const json j = json::parse(k3.out);
  const double closed = std::exp(2.0) + 2.0 * std::exp(-1.0);
  CHECK(std::abs(j["dee"]["value"].get<double>() - closed) <= 1e-12);

  const auto k2 = run_cli("compute --edges " + data_path("k2.txt"));
  REQUIRE(k2.exit_code == 0);
  CHECK(std::abs(json::parse(k2.out)["dee"]["value"].get<double>() - 3.0862) <= 1e-4);
}

TEST_CASE("bounds precondition reporting") {
  const json k4 = json::parse(run_cli("bounds --g6 C~").out);
  bool t3_equal = false;
  for (const auto& b : k4["bounds"]) t3_equal |= b["theorem_id"] == "T3_lower" && b["equality"] == true;
  CHECK(t3_equal);

  const json c5 = json::parse(run_cli("bounds --edges " + data_path("c5.txt")).out);
  bool t6_equal = false;
  for (const auto& b : c5["bounds"]) t6_equal |= b["theorem_id"] == "T6_identity" && b["equality"] == true;
  CHECK(t6_equal);

  const json star = json::parse(run_cli("bounds --g6 E?~o").out);  // K_{1,5}
  REQUIRE(star["n"] == 6);
  bool omitted = false;
  for (const auto& o : star["omitted"]) omitted |= o["theorem_id"] == "T6_identity" && o["reason"] == "not regular";
  CHECK(omitted);
}

TEST_CASE("sweeps") {
  const auto complete = run_cli("sweep --family complete --n 2..10");
  REQUIRE(complete.exit_code == 0);
  std::size_t rows = 0;
  std::size_t pos = 0;
  while ((pos = complete.out.find('\n', pos)) != std::string::npos) {
    ++rows;
    ++pos;
  }
  CHECK(rows == 10);  // header + 9

  const auto multi = run_cli("sweep --family multipartite --parts 2,2,2 --format json");
  REQUIRE(multi.exit_code == 0);
  const json j = json::parse(multi.out);
  REQUIRE(j.size() == 1);
  bool multipartite = false;
  for (const auto& b : j[0]["bounds"]) multipartite |= b["theorem_id"] == "L4_class" && b["detail"] == "MultipartiteCase";
  CHECK(multipartite);

  CHECK(run_cli("sweep --family complete --n 9..2").exit_code == 2);
  CHECK(run_cli("sweep --family banana --n 2..3").exit_code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("compute --edges " + data_path("two_edges.txt")).exit_code == 3);
  CHECK(run_cli("compute --g6 C?").exit_code == 3);  // 4 isolated vertices
  CHECK(run_cli("compute --g6 B").exit_code == 2);
  CHECK(run_cli("compute --edges /nonexistent/file.txt").exit_code == 2);
  CHECK(run_cli("compute").exit_code == 2);
  CHECK(run_cli("verify --max-n 1").exit_code == 3);
  CHECK(run_cli("verify --max-n 9").exit_code == 3);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("verify output") {
  const auto v = run_cli("verify --max-n 5 --format json --threads 2");
  REQUIRE(v.exit_code == 0);
  const json j = json::parse(v.out);
  CHECK(j["graphs_checked"] == 1 + 4 + 38 + 728);
  CHECK(j["violations"].empty());
  CHECK(run_cli("verify --max-n 5 --threads 1").out == run_cli("verify --max-n 5 --threads 3").out);
}
