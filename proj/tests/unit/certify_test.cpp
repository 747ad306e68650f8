#include <doctest.h>

#include <fstream>
#include <random>

#include <json.hpp>

#include "glrank/certify.hpp"
#include "glrank/errors.hpp"
#include "glrank/graph_io.hpp"
#include "glrank/matrix_io.hpp"

using namespace glrank;

namespace {

RankFactor rank2_instance() {
  std::ifstream in(GLRANK_TEST_DATA "/rank2.csv");
  REQUIRE(in);
  return RankFactor::from_psd(read_symmetric_csv(in));
}

// Witness of Gaussian nonexistence: nonzero, PSD, in S_G and annihilated by X.
bool valid_gaussian_certificate(const Graph& g, const RankFactor& a, const QMatrix& phi) {
  if (phi.is_zero() || !phi.is_symmetric() || !is_psd_exact(phi)) return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (i != j && !g.adjacent(i, j) && phi(i, j) != 0) return false;
  return (a.x() * phi).is_zero();
}

struct Instance {
  Graph g;
  RankFactor a;
};

std::vector<Instance> random_instances(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t p = 4 + t % 4;
    const Graph g = erdos_renyi_connected(p, 0.5, rng());
    const std::size_t r = 1 + rng() % (p - 1);
    out.push_back({g, random_integer_factor(r, p, rng, 3)});
  }
  return out;
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("S_G coordinates round trip") {
  const Graph g = cycle_graph(4);
  CHECK(sym_dim(g) == 8);
  QVector c(8);
  for (std::size_t i = 0; i < 8; ++i) c[i] = Rational(static_cast<long>(i) - 3, 2);
  const QMatrix m = coords_to_matrix(g, c);
  CHECK(m.is_symmetric());
  CHECK(m(0, 2) == 0);
  CHECK(m(3, 3) == c[4 + 3]);
  CHECK(matrix_to_coords(g, m) == c);
  QMatrix off = m;
  off(0, 2) = off(2, 0) = 1;
  CHECK_THROWS_AS(matrix_to_coords(g, off), std::invalid_argument);
}

TEST_CASE("full-rank input always admits both estimators") {
  const Graph g = complete_graph(4);
  std::mt19937_64 rng(1);
  const RankFactor a = random_integer_factor(4, 4, rng);
  REQUIRE(a.rank() == 4);
  for (const auto& v : {check_pseudo(g, a), check_pseudo_recursive(g, a), check_gaussian(g, a)}) {
    CHECK(v.exists);
    CHECK(v.unique);
    CHECK(v.kernel_dim == 0);
  }
}

TEST_CASE("zero input has the whole diagonal in the kernel") {
  const Graph g = path_graph(3);
  const RankFactor a = RankFactor::zero(3);
  const ExistenceVerdict v = check_pseudo(g, a);
  CHECK_FALSE(v.exists);
  CHECK(v.kernel_dim == sym_dim(g));
  REQUIRE(v.certificate);
  CHECK(valid_pseudo_certificate(g, a, *v.certificate));
  const ExistenceVerdict w = check_gaussian(g, a);
  CHECK_FALSE(w.exists);
  REQUIRE(w.certificate);
  CHECK(valid_gaussian_certificate(g, a, *w.certificate));
}

TEST_CASE("stored rank-2 instance on the 4-cycle fails both estimators") {
  const Graph g = read_edge_list_file(GLRANK_TEST_DATA "/c4.edges");
  const RankFactor a = rank2_instance();
  CHECK(a.rank() == 2);
  const ExistenceVerdict ps = check_pseudo(g, a);
  CHECK_FALSE(ps.exists);
  REQUIRE(ps.certificate);
  CHECK(valid_pseudo_certificate(g, a, *ps.certificate));
  const ExistenceVerdict ga = check_gaussian(g, a);
  CHECK_FALSE(ga.exists);
  CHECK_FALSE(ga.inconclusive);
  REQUIRE(ga.certificate);
  CHECK(valid_gaussian_certificate(g, a, *ga.certificate));
  CHECK(check_pseudo_recursive(g, a).exists == ps.exists);

  std::ifstream in(GLRANK_TEST_DATA "/oracle_values.json");
  const auto oracle = nlohmann::json::parse(in)["rank2_c4"];
  CHECK(ps.exists == oracle["pseudo_exists"].get<bool>());
  CHECK(ga.exists == oracle["gaussian_exists"].get<bool>());
}

TEST_CASE("the data file gives the same verdicts as its Gram matrix") {
  const Graph g = cycle_graph(4);
  std::ifstream in(GLRANK_TEST_DATA "/rank2_data.csv");
  const RankFactor d = RankFactor::from_data(read_matrix_csv(in));
  const RankFactor a = rank2_instance();
  CHECK(check_pseudo(g, d).exists == check_pseudo(g, a).exists);
  CHECK(check_pseudo(g, d).kernel_dim == check_pseudo(g, a).kernel_dim);
  CHECK(check_gaussian(g, d).exists == check_gaussian(g, a).exists);
}

TEST_CASE("certificates are rejected when wrong") {
  const Graph g = cycle_graph(4);
  const RankFactor a = rank2_instance();
  CHECK_FALSE(valid_pseudo_certificate(g, a, QMatrix(4, 4)));
  CHECK_FALSE(valid_pseudo_certificate(g, a, QMatrix::identity(4)));
  QMatrix c = *check_pseudo(g, a).certificate;
  for (std::size_t i = 0; i < 4; ++i) c(i, i) = -c(i, i);
  CHECK_FALSE(valid_pseudo_certificate(g, a, c));
}

TEST_CASE("a complete graph below full rank has a rank-one obstruction") {
  const Graph g = complete_graph(5);
  std::mt19937_64 rng(3);
  const RankFactor a = random_integer_factor(3, 5, rng);
  const ExistenceVerdict v = check_gaussian(g, a);
  CHECK_FALSE(v.exists);
  REQUIRE(v.certificate);
  CHECK(valid_gaussian_certificate(g, a, *v.certificate));
  CHECK_FALSE(check_pseudo(g, a).exists);
}

TEST_CASE("one-dimensional kernels are decided exactly") {
  // Path 0-1-2 with X = (1, 1, 1): the kernel is spanned by a tridiagonal matrix.
  const Graph g = path_graph(3);
  const RankFactor a = RankFactor::from_rows(QMatrix::from_ints(2, 3, {1, 1, 1, 1, 2, 4}));
  const ExistenceVerdict v = check_gaussian(g, a);
  CHECK(v.kernel_dim == check_pseudo(g, a).kernel_dim);
  CHECK_FALSE(v.inconclusive);
  if (v.kernel_dim == 1) CHECK(v.method == "exact-psd");
}

TEST_CASE("trees at rank two admit both estimators") {
  std::mt19937_64 rng(8);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_tree(7, s);
    const RankFactor a = random_integer_factor(2, 7, rng);
    CHECK(check_pseudo(g, a).exists);
    CHECK(check_gaussian(g, a).exists);
  }
}

TEST_CASE("random instances: oracles agree and certificates check out") {
  std::size_t nonexistent = 0;
  for (const auto& [g, a] : random_instances(80, 99)) {
    const ExistenceVerdict ps = check_pseudo(g, a);
    const ExistenceVerdict rec = check_pseudo_recursive(g, a);
    const ExistenceVerdict ga = check_gaussian(g, a);
    CHECK(ps.exists == rec.exists);
    CHECK(ps.unique == rec.unique);
    CHECK(ps.kernel_dim == rec.kernel_dim);
    CHECK(ps.zero_diag_dim == rec.zero_diag_dim);
    CHECK(ps.kernel_dim >= sym_dim(g) - std::min(sym_dim(g), a.rank() * g.order()));
    if (!ps.exists) {
      ++nonexistent;
      REQUIRE(ps.certificate);
      CHECK(valid_pseudo_certificate(g, a, *ps.certificate));
    }
    CHECK_FALSE(ga.inconclusive);
    if (ps.exists) CHECK(ga.exists);
    if (!ga.exists && ga.certificate) CHECK(valid_gaussian_certificate(g, a, *ga.certificate));
    if (!ga.exists && !ga.inconclusive) CHECK(ga.psd_witness.has_value());
    // More rows only shrink the kernel, so existence is monotone.
    if (ps.exists) CHECK(check_pseudo(g, a.stacked(a)).exists);
  }
  CHECK(nonexistent > 5);
}

TEST_CASE("face recursion honours its budget") {
  // An instance whose search has to descend below the top face.
  std::mt19937_64 rng(6);
  const Graph g = erdos_renyi_connected(7, 0.5, 6);
  const RankFactor a = random_integer_factor(3, 7, rng, 3);
  CHECK_THROWS_AS(check_pseudo_recursive(g, a, 1), BudgetExceeded);
  CHECK(check_pseudo_recursive(g, a).exists == check_pseudo(g, a).exists);
}

TEST_CASE("generic completion rank matches the independent oracle on the catalog") {
  std::ifstream in(GLRANK_TEST_DATA "/oracle_values.json");
  const auto oracle = nlohmann::json::parse(in)["graphs"];
  for (const auto& [name, g] : standard_catalog()) {
    CAPTURE(name);
    CHECK(generic_completion_rank(g, 10, 7) == oracle.at(name)["gcr"].get<std::size_t>());
  }
  CHECK(generic_completion_rank(read_edge_list_file(GLRANK_TEST_DATA "/c4.edges"), 50, 7) == 3);
  CHECK_THROWS_AS(generic_completion_rank(cycle_graph(4), 0, 7), std::invalid_argument);
}

TEST_CASE("weak-rank estimates on small graphs") {
  const RankBounds path = estimate_weak_ranks(path_graph(5), 10, 1);
  CHECK(path.weak_rank_estimate == 2);
  CHECK(path.gaussian_rank_estimate == 2);
  CHECK(path.violations().empty());
  const RankBounds k4 = estimate_weak_ranks(complete_graph(4), 10, 1);
  CHECK(k4.weak_rank_estimate == 4);
  CHECK(k4.gaussian_rank_estimate == 4);
  CHECK(k4.gcr == 4);
  CHECK(k4.kappa_star_plus1 == 4);
  const RankBounds one = estimate_weak_ranks(Graph(1), 5, 1);
  CHECK(one.kappa_star_plus1 == 1);
  CHECK(one.weak_rank_estimate == 1);
  CHECK(one.gaussian_rank_estimate == 1);
  CHECK(one.gcr == 1);
  // Disconnected: the larger component decides.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}};
  const RankBounds two = estimate_weak_ranks(Graph(5, e), 10, 1);
  CHECK(two.weak_rank_estimate == 3);
  CHECK(two.gcr == 3);
}

TEST_CASE("violations name every broken link of the chain") {
  RankBounds b;
  b.kappa_star_plus1 = 4;
  b.gaussian_rank_estimate = 3;
  b.weak_rank_estimate = 3;
  b.gcr = 3;
  b.degeneracy_plus1 = 4;
  b.rbar = 2;
  const auto v = b.violations();
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("kappa*+1") == 0);
}

}  // TEST_SUITE
