#include "normtori/obstruction.hpp"

#include <numeric>
#include <utility>

#include "normtori/errors.hpp"

namespace normtori {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t n) { return ((v % n) + n) % n; }

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return r == 1 ? mod(t, n) : 0;
}

// [phi | diag(d_e)]
IntMatrix presentation(const ObstructionProblem& p) {
  IntMatrix m = phi_matrix(p);
  const std::size_t e = m.size();
  for (std::size_t i = 0; i < e; ++i) {
    m[i].resize(p.graph.vertex_count() + e, 0);
    m[i][p.graph.vertex_count() + i] = p.edge_moduli[i];
  }
  return m;
}

std::vector<std::string> problem_notes(const ObstructionProblem& p) {
  std::vector<std::string> notes;
  for (auto d : p.edge_moduli)
    if (d != p.n) {
      notes.push_back("edge moduli differ from n: beyond the homogeneous setting");
      break;
    }
  for (auto o : p.vertex_orders)
    if (o != p.n) {
      notes.push_back("vertex orders below n: exponent-scaling convention, extrapolation");
      break;
    }
  return notes;
}

}  // namespace

ObstructionProblem make_problem(const PatchGraph& graph, std::uint32_t n, const std::map<std::string, std::uint32_t>& edge_moduli) {
  ObstructionProblem p{graph, n, std::vector<std::uint32_t>(graph.branches().size(), n),
                       std::vector<std::uint32_t>(graph.vertex_count(), n)};
  for (const auto& [label, d] : edge_moduli) p.edge_moduli[graph.branch_index(label)] = d;
  validate_problem(p);
  return p;
}

void validate_problem(const ObstructionProblem& p) {
  if (p.n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (p.edge_moduli.size() != p.graph.branches().size())
    throw Error(ErrorKind::DimensionMismatch, "one edge modulus per branch required");
  if (p.vertex_orders.size() != p.graph.vertex_count())
    throw Error(ErrorKind::DimensionMismatch, "one vertex order per vertex required");
  for (std::size_t i = 0; i < p.edge_moduli.size(); ++i)
    if (p.edge_moduli[i] == 0 || p.n % p.edge_moduli[i] != 0)
      throw Error(ErrorKind::InvalidArgument, "edge modulus of " + p.graph.branches()[i].label + " does not divide n");
  for (std::size_t v = 0; v < p.vertex_orders.size(); ++v)
    if (p.vertex_orders[v] == 0 || p.n % p.vertex_orders[v] != 0)
      throw Error(ErrorKind::InvalidArgument, "vertex order of " + p.graph.vertex_name(v) + " does not divide n");
}

IntMatrix phi_matrix(const ObstructionProblem& p) {
  validate_problem(p);
  const auto& br = p.graph.branches();
  IntMatrix m(br.size(), std::vector<std::int64_t>(p.graph.vertex_count(), 0));
  for (std::size_t e = 0; e < br.size(); ++e) {
    const std::size_t pv = p.graph.point_vertex(br[e].p), uv = p.graph.component_vertex(br[e].u);
    m[e][pv] += p.n / p.vertex_orders[pv];
    m[e][uv] += p.n / p.vertex_orders[uv];
  }
  return m;
}

std::vector<std::int64_t> cokernel_invariants(const ObstructionProblem& p) {
  const IntMatrix m = presentation(p);
  std::vector<std::int64_t> out;
  if (m.empty()) return out;
  for (auto d : smith_normal_form(m).diagonal)
    if (d != 1) out.push_back(d);
  return out;
}

ShaReport in_image(const ObstructionProblem& p, const std::vector<std::int64_t>& target) {
  const std::size_t E = p.graph.branches().size();
  const std::size_t V = p.graph.vertex_count();
  if (target.size() != E)
    throw Error(ErrorKind::DimensionMismatch, "target has " + std::to_string(target.size()) + " entries for " + std::to_string(E) + " branches");
  ShaReport r;
  r.target = target;
  r.notes = problem_notes(p);
  r.invariant_factors = cokernel_invariants(p);
  if (E == 0) {
    r.feasible = true;
    r.witness.assign(V, 0);
    return r;
  }
  const IntMatrix m = presentation(p);
  const SmithForm s = smith_normal_form(m);
  // U M V = D, so M x = t iff D y = U t with x = V y.
  std::vector<std::int64_t> ut(E, 0);
  for (std::size_t i = 0; i < E; ++i)
    for (std::size_t j = 0; j < E; ++j) ut[i] += s.U[i][j] * target[j];

  // The diagonal has full length E because diag(d_e) has full rank.
  for (std::size_t i = 0; i < E; ++i) {
    const std::int64_t d = s.diagonal[i];
    if (ut[i] % d == 0) continue;
    r.feasible = false;
    std::vector<std::int64_t> c(E);
    const std::int64_t scale = p.n / d;
    for (std::size_t j = 0; j < E; ++j) c[j] = mod(s.U[i][j] * scale, p.n);
    // Normalize so the first unit entry is 1 when possible.
    for (auto x : c) {
      if (x == 0) continue;
      const std::int64_t inv = inverse_mod(x, p.n);
      if (inv != 0)
        for (auto& y : c) y = mod(y * inv, p.n);
      break;
    }
    r.certificate = std::move(c);
    return r;
  }
  const std::size_t cols = V + E;
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t i = 0; i < E; ++i) y[i] = ut[i] / s.diagonal[i];
  r.feasible = true;
  r.witness.assign(V, 0);
  for (std::size_t v = 0; v < V; ++v) {
    std::int64_t x = 0;
    for (std::size_t k = 0; k < cols; ++k) x += s.V[v][k] * y[k];
    r.witness[v] = mod(x, p.n);
  }
  return r;
}

bool check_report(const ObstructionProblem& p, const ShaReport& r) {
  const IntMatrix phi = phi_matrix(p);
  const std::size_t E = phi.size();
  if (r.target.size() != E) return false;
  if (r.feasible) {
    if (r.witness.size() != p.graph.vertex_count()) return false;
    for (std::size_t e = 0; e < E; ++e) {
      std::int64_t s = 0;
      for (std::size_t v = 0; v < r.witness.size(); ++v) s += phi[e][v] * r.witness[v];
      if (mod(s - r.target[e], p.edge_moduli[e]) != 0) return false;
    }
    return true;
  }
  if (r.certificate.size() != E) return false;
  const std::int64_t n = p.n;
  for (std::size_t v = 0; v < p.graph.vertex_count(); ++v) {
    std::int64_t s = 0;
    for (std::size_t e = 0; e < E; ++e) s += r.certificate[e] * phi[e][v];
    if (mod(s, n) != 0) return false;
  }
  // The character must also be well defined on Z/d_e.
  for (std::size_t e = 0; e < E; ++e)
    if (mod(r.certificate[e] * p.edge_moduli[e], n) != 0) return false;
  std::int64_t t = 0;
  for (std::size_t e = 0; e < E; ++e) t += r.certificate[e] * r.target[e];
  return mod(t, n) != 0;
}

}  // namespace normtori
