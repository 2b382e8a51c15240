#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "gen.hpp"
#include "normtori/errors.hpp"
#include "normtori/obstruction.hpp"
#include "normtori/scenarios.hpp"
#include "normtori/smith.hpp"

using namespace normtori;
using testgen::Rng;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

ModelDescription triangle() {
  return {{"X1", "X2", "X3"}, {{"P1", {"X2", "X3"}}, {"P2", {"X1", "X3"}}, {"P3", {"X1", "X2"}}}, {}};
}

// Image of phi in prod Z/d_e by enumerating every vertex assignment.
std::set<std::vector<std::int64_t>> image_by_enumeration(const ObstructionProblem& p) {
  const IntMatrix phi = phi_matrix(p);
  const std::size_t V = p.graph.vertex_count();
  std::vector<std::int64_t> g(V, 0);
  std::set<std::vector<std::int64_t>> image;
  while (true) {
    std::vector<std::int64_t> e(phi.size());
    for (std::size_t b = 0; b < phi.size(); ++b) {
      std::int64_t s = 0;
      for (std::size_t v = 0; v < V; ++v) s += phi[b][v] * g[v];
      e[b] = s % p.edge_moduli[b];
    }
    image.insert(e);
    std::size_t v = 0;
    while (v < V && ++g[v] == p.n) g[v++] = 0;
    if (v == V) break;
  }
  return image;
}

std::int64_t product(const std::vector<std::int64_t>& v) {
  std::int64_t r = 1;
  for (auto x : v) r *= x;
  return r;
}

}  // namespace

TEST_CASE("phi_matrix examples") {
  const PatchGraph edge = build_graph({{"X1"}, {{"P1", {"X1"}}}, {}});
  CHECK(phi_matrix(make_problem(edge, 3)) == IntMatrix{{1, 1}});
  const IntMatrix tri = phi_matrix(make_problem(build_graph(triangle()), 2));
  REQUIRE(tri.size() == 6);
  for (const auto& row : tri) {
    CHECK(row.size() == 6);
    int ones = 0;
    for (auto x : row) ones += x == 1;
    CHECK(ones == 2);
  }
  ObstructionProblem p = make_problem(edge, 4);
  p.vertex_orders[0] = 2;
  CHECK(phi_matrix(p) == IntMatrix{{2, 1}});
}

TEST_CASE("smith normal form") {
  const IntMatrix A{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm s = smith_normal_form(A);
  CHECK(s.diagonal == std::vector<std::int64_t>{2, 6, 12});
  const IntMatrix D = multiply(multiply(s.U, A), s.V);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(D[i][j] == (i == j ? s.diagonal[i] : 0));
  CHECK(smith_normal_form({{0, 0}, {0, 0}}).rank == 0);
}

TEST_CASE("property: smith transforms diagonalize random matrices") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    IntMatrix A(r, std::vector<std::int64_t>(c));
    for (auto& row : A)
      for (auto& x : row) x = rng.range(-9, 9);
    const SmithForm s = smith_normal_form(A);
    const IntMatrix D = multiply(multiply(s.U, A), s.V);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) CHECK(D[i][j] == (i == j ? s.diagonal[i] : 0));
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
      if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  }
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel_invariants(make_problem(build_graph(triangle()), 2)) == std::vector<std::int64_t>{2});
  CHECK(cokernel_invariants(make_problem(build_graph(triangle()), 4)) == std::vector<std::int64_t>{4});
  std::uint64_t state = 5;
  for (int i = 0; i < 10; ++i) CHECK(cokernel_invariants(make_problem(build_graph(random_tree_model(state, 12)), 3)).empty());
}

TEST_CASE("cokernel of the triangle matches enumeration") {
  for (std::uint32_t n : {2u, 4u}) {
    const ObstructionProblem p = make_problem(build_graph(triangle()), n);
    const auto image = image_by_enumeration(p);
    std::int64_t total = 1;
    for (int i = 0; i < 6; ++i) total *= n;
    CHECK(static_cast<std::int64_t>(image.size()) * product(cokernel_invariants(p)) == total);
    if (n == 2) CHECK(image.size() == 32);
  }
}

TEST_CASE("in_image examples") {
  const ObstructionProblem p = make_problem(build_graph(triangle()), 2);
  const ShaReport zero = in_image(p, std::vector<std::int64_t>(6, 0));
  CHECK(zero.feasible);
  CHECK(zero.witness == std::vector<std::int64_t>(6, 0));

  std::vector<std::int64_t> t(6, 0);
  t[p.graph.branch_index("P1:X2")] = 1;
  const ShaReport r = in_image(p, t);
  CHECK_FALSE(r.feasible);
  CHECK(check_report(p, r));
  // The certificate is a cycle character: +-1 on every branch.
  for (auto c : r.certificate) CHECK((c % 2 + 2) % 2 == 1);
  CHECK(kind_of([&] { in_image(p, {1, 0}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("property: reports are self-consistent and match enumeration") {
  Rng rng(77);
  for (std::uint32_t n : {2u, 3u}) {
    const ObstructionProblem p = make_problem(build_graph(triangle()), n);
    const auto image = image_by_enumeration(p);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::int64_t> t(6);
      for (auto& x : t) x = static_cast<std::int64_t>(rng.below(n));
      const ShaReport r = in_image(p, t);
      CHECK(r.feasible == (image.count(t) == 1));
      CHECK(check_report(p, r));
      if (!r.feasible) {
        // certificate . phi = 0 and certificate . target != 0, recomputed here.
        const IntMatrix phi = phi_matrix(p);
        for (std::size_t v = 0; v < 6; ++v) {
          std::int64_t s = 0;
          for (std::size_t b = 0; b < 6; ++b) s += r.certificate[b] * phi[b][v];
          CHECK(s % n == 0);
        }
        std::int64_t s = 0;
        for (std::size_t b = 0; b < 6; ++b) s += r.certificate[b] * t[b];
        CHECK(s % n != 0);
      }
    }
  }
}

TEST_CASE("property: every target on a small tree is reachable") {
  std::uint64_t state = 21;
  for (int trial = 0; trial < 10; ++trial) {
    for (std::uint32_t n : {2u, 3u}) {
      const ObstructionProblem p = make_problem(build_graph(random_tree_model(state, 5)), n);
      const std::size_t E = p.graph.branches().size();
      std::vector<std::int64_t> t(E, 0);
      while (true) {
        const ShaReport r = in_image(p, t);
        CHECK(r.feasible);
        CHECK(check_report(p, r));
        std::size_t b = 0;
        while (b < E && ++t[b] == n) t[b++] = 0;
        if (b == E) break;
      }
    }
  }
}

TEST_CASE("heterogeneous moduli are flagged") {
  const PatchGraph g = build_graph(triangle());
  const ObstructionProblem p = make_problem(g, 4, {{"P1:X2", 2}});
  CHECK(p.edge_moduli[g.branch_index("P1:X2")] == 2);
  const ShaReport r = in_image(p, std::vector<std::int64_t>(6, 0));
  CHECK_FALSE(r.notes.empty());
  CHECK(kind_of([&] { make_problem(g, 4, {{"P1:X2", 3}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("verify_triangle") {
  for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}, {3, 19}, {2, 13}, {4, 17}}) {
    const ScenarioReport r = verify_triangle(n, q);
    CHECK_FALSE(r.sha.feasible);
    CHECK(r.sha.invariant_factors == std::vector<std::int64_t>{n});
  }
  CHECK(kind_of([] { verify_triangle(2, 7); }) == ErrorKind::IncompatibleModulus);
  CHECK(kind_of([] { verify_triangle(2, 9); }) == ErrorKind::NotPrime);
}

TEST_CASE("triangle report is invariant under relabeling") {
  PlaneConfiguration cfg = triangle_configuration(5);
  std::reverse(cfg.components.begin(), cfg.components.end());
  std::rotate(cfg.points.begin(), cfg.points.begin() + 1, cfg.points.end());
  for (const char* target : {"P1:X2", "P3:X1", "P2:X3"}) {
    const ScenarioReport r = run_patching_scenario(cfg, triangle_extension(5, 2), target);
    CHECK_FALSE(r.sha.feasible);
    CHECK(r.sha.invariant_factors == std::vector<std::int64_t>{2});
  }
}

TEST_CASE("local classes on the triangle") {
  const PlaneConfiguration cfg = triangle_configuration(5);
  const KummerDescriptor L = triangle_extension(5, 2);
  // At P3 = (0,0) on X1: xy -> (1, 1, 0) and y(x+y-1) -> (0, 1, class of -1).
  const ClassVector a = local_class(cfg, L.radicands[0], cfg.points[2], "X1", "X2", 2);
  const ClassVector b = local_class(cfg, L.radicands[1], cfg.points[2], "X1", "X2", 2);
  CHECK(a == ClassVector{1, 1, 0});
  CHECK(b == ClassVector{0, 1, 0});
}

TEST_CASE("multinorm reduction") {
  const PlaneConfiguration cfg = triangle_configuration(5);
  const KummerDescriptor L = triangle_extension(5, 2);
  const MultinormReduction same = multinorm_reduce(cfg, L, L, {});
  CHECK(same.proxy.radicands.size() == 2);
  CHECK(same.evidence.empty());

  for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}, {2, 13}, {3, 19}}) {
    const ScenarioReport r = verify_multinorm(n, q);
    CHECK_FALSE(r.sha.feasible);
    CHECK(r.sha.invariant_factors == std::vector<std::int64_t>{n});
  }
  CHECK(kind_of([] { verify_multinorm(2, 3); }) == ErrorKind::IncompatibleModulus);

  // A ratio equal to 2, a non-square mod 5, at every place.
  KummerDescriptor bad = L;
  bad.radicands[0].unit = {Poly2::constant(5, 2), Poly2::constant(5, 1)};
  std::vector<Place> places{{"P3", true, cfg.points[2], ""}};
  CHECK(kind_of([&] { multinorm_reduce(cfg, L, bad, places); }) == ErrorKind::EvidenceFailed);
}
