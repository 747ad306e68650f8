#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "glrank/certify.hpp"
#include "glrank/graph_io.hpp"
#include "glrank/matrix_io.hpp"
#include "glrank/mc_sim.hpp"

using namespace glrank;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = GLRANK_TEST_DATA;

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "glrank_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gcr on the 4-cycle") {
  const Run r = run({"gcr", kData + "/c4.edges", "--seed", "7"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "3\n");
  const Run j = run({"gcr", kData + "/c4.edges", "--seed", "7", "--trials", "5", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["gcr"] == 3);
  CHECK(doc["trials"] == 5);
  CHECK(doc["seed"] == 7);
}

TEST_CASE("ranks on K4") {
  const Run r = run({"ranks", kData + "/k4.edges", "--seed", "1", "--trials", "10"});
  REQUIRE(r.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["p"] == 4);
  CHECK(doc["edges"] == 6);
  CHECK(doc["invariants"]["degeneracy"] == 3);
  CHECK(doc["invariants"]["clique_number"] == 4);
  CHECK(doc["invariants"]["chordal"] == true);
  CHECK(doc["bounds"]["gcr"] == 4);
  CHECK(doc["bounds"]["kappa_star_plus1"] == 4);
  CHECK(doc["bounds"]["weak_rank_estimate"] == 4);
  CHECK(doc["bounds"]["gaussian_rank_estimate"] == 4);
  CHECK(doc["bounds"]["violations"].empty());
}

TEST_CASE("ranks matches the library call with the same seed") {
  const Run r = run({"ranks", kData + "/c4.edges", "--seed", "3", "--trials", "8"});
  const auto doc = nlohmann::json::parse(r.out);
  const RankBounds b = estimate_weak_ranks(cycle_graph(4), 8, 3);
  CHECK(doc["bounds"]["gaussian_rank_estimate"] == b.gaussian_rank_estimate);
  CHECK(doc["bounds"]["weak_rank_estimate"] == b.weak_rank_estimate);
  CHECK(doc["bounds"]["rbar"] == b.rbar);
  CHECK(doc["bounds"]["gcr"] == b.gcr);
}

TEST_CASE("certify the stored rank-2 instance") {
  const Run r = run({"certify", kData + "/c4.edges", kData + "/rank2.csv"});
  REQUIRE(r.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rank"] == 2);
  CHECK(doc["pseudo"]["exists"] == false);
  CHECK(doc["gaussian"]["exists"] == false);
  CHECK(doc["gaussian"]["inconclusive"] == false);
  // Certificates are exact fractions; re-check the pseudo one against the library.
  const auto& rows = doc["pseudo"]["certificate"];
  REQUIRE(rows.size() == 4);
  QMatrix phi(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) phi(i, j) = parse_rational(rows[i][j].get<std::string>());
  std::ifstream in(kData + "/rank2.csv");
  CHECK(valid_pseudo_certificate(cycle_graph(4), RankFactor::from_psd(read_symmetric_csv(in)), phi));

  const Run d = run({"certify", kData + "/c4.edges", kData + "/rank2_data.csv", "--data"});
  const auto dd = nlohmann::json::parse(d.out);
  CHECK(dd["pseudo"]["exists"] == false);
  CHECK(dd["gaussian"]["exists"] == false);
}

TEST_CASE("fit writes Omega and reports status") {
  const auto out = scratch("omega.csv");
  const Run r = run({"fit", "--method", "gaussian", "--graph", kData + "/k4.edges", "--data", kData + "/rank2_data.csv",
                     "--out", out.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(r.out)["status"] == "diverged");  // two samples on K4: no Gaussian MLE
  const auto s = scratch("s.csv");
  write_file(s, "2,1,0,0\n1,2,1,0\n0,1,2,1\n0,0,1,2\n");
  const Run g = run({"fit", "--method", "gaussian", "--graph", kData + "/k4.edges", "--matrix", s.string(), "--out",
                     out.string()});
  REQUIRE(g.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(g.out);
  CHECK(doc["status"] == "converged");
  CHECK(doc["omega"] == out.string());
  std::ifstream in(out);
  const QMatrix omega = read_matrix_csv(in);
  CHECK(omega.rows() == 4);
  CHECK(omega(0, 0).get_d() == doctest::Approx(0.8));  // (S^{-1})_00 for the tridiagonal S

  const Run c = run({"fit", "--method", "concord", "--graph", kData + "/c4.edges", "--matrix", kData + "/rank2.csv",
                     "--out", out.string()});
  REQUIRE(c.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(c.out)["status"] == "diverged");
}

TEST_CASE("simulate writes the CSV schema") {
  const auto out = scratch("sim.csv");
  const Run r = run({"simulate", "--family", "cycle", "--params", "5", "--n-max", "3", "--trials", "20", "--seed", "4",
                     "--out", out.string()});
  REQUIRE(r.code == cli::kExitOk);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == kSimCsvHeader);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 6);
  SimConfig cfg;
  cfg.graph_id = "cycle";
  cfg.graph = cycle_graph(5);
  cfg.n_max = 3;
  cfg.trials = 20;
  cfg.seed = 4;
  std::ifstream again(out);
  std::stringstream all;
  all << again.rdbuf();
  CHECK(all.str() == to_csv(existence_curve(cfg)));
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"gcr", kData + "/c4.edges"}).code == cli::kExitUsage);  // seed is mandatory
  CHECK(run({"gcr", kData + "/c4.edges", "--seed", "1", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"gcr", kData + "/missing.edges", "--seed", "1"}).code == cli::kExitUsage);
  CHECK(run({"fit", "--method", "lasso", "--graph", kData + "/c4.edges", "--matrix", kData + "/rank2.csv", "--out",
             scratch("x.csv").string()})
            .code == cli::kExitUsage);
  CHECK(run({"simulate", "--family", "cycle", "--params", "5", "--seed", "1"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("malformed files report their line") {
  const auto bad = scratch("bad.edges");
  write_file(bad, "p 3\ne 0 1\ne 0 9\n");
  const Run r = run({"gcr", bad.string(), "--seed", "1"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("line 3") != std::string::npos);
  const auto m = scratch("bad.csv");
  write_file(m, "1,0,0,0\n0,1,0,0\n0,0,1\n0,0,0,1\n");
  const Run c = run({"certify", kData + "/c4.edges", m.string()});
  CHECK(c.code == cli::kExitUsage);
  CHECK(c.err.find("line 3") != std::string::npos);
}

TEST_CASE("budget overruns exit with 2") {
  const auto big = scratch("big.edges");
  write_file(big, to_edge_list(cycle_graph(20)));
  const Run r = run({"ranks", big.string(), "--seed", "1"});
  CHECK(r.code == cli::kExitBudget);
  CHECK(r.err.find("budget") != std::string::npos);
}

}  // TEST_SUITE
