#include "normtori/scenarios.hpp"

#include <algorithm>
#include <set>

#include "normtori/branch.hpp"
#include "normtori/errors.hpp"

namespace normtori {

namespace {

const Poly2& line_poly(const PlaneConfiguration& cfg, const std::string& name) {
  for (const auto& l : cfg.lines)
    if (l.name == name) return l.poly;
  throw Error(ErrorKind::UnknownComponent, "no line named " + name);
}

RationalFunction one(std::uint32_t q) { return {Poly2::constant(q, 1), Poly2::constant(q, 1)}; }

RationalFunction parse(const std::string& s, std::uint32_t q) { return parse_rational_function(s, q); }

// f2 / f1 with the line factors cancelled symbolically.
RationalFunction ratio(const PlaneConfiguration& cfg, const FactoredFunction& f2, const FactoredFunction& f1) {
  RationalFunction r = rf_div(f2.unit, f1.unit);
  std::map<std::string, int> e = f2.line_exponents;
  for (const auto& [name, k] : f1.line_exponents) e[name] -= k;
  for (const auto& [name, k] : e) {
    const Poly2& p = line_poly(cfg, name);
    if (k > 0) r.num = r.num * p.pow(static_cast<unsigned>(k));
    if (k < 0) r.den = r.den * p.pow(static_cast<unsigned>(-k));
  }
  return r;
}

std::set<ClassVector> span_of(const std::vector<ClassVector>& gens, std::uint32_t n) {
  std::set<ClassVector> span{{0, 0, 0}};
  for (const auto& g : gens) {
    std::set<ClassVector> next;
    for (const auto& s : span)
      for (std::uint64_t k = 0; k < n; ++k) next.insert({(s[0] + k * g[0]) % n, (s[1] + k * g[1]) % n, (s[2] + k * g[2]) % n});
    span = std::move(next);
  }
  return span;
}

void require_scenario_modulus(std::uint32_t n, std::uint32_t q) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
  const std::uint64_t n2 = static_cast<std::uint64_t>(n) * n;
  if ((q - 1) % n2 != 0)
    throw Error(ErrorKind::IncompatibleModulus, "q = " + std::to_string(q) + " is not 1 mod n^2 = " + std::to_string(n2));
}

void expect_obstruction(const ScenarioReport& r, std::uint32_t n) {
  const bool ok = !r.sha.feasible && r.sha.invariant_factors == std::vector<std::int64_t>{n} &&
                  std::all_of(r.edge_moduli.begin(), r.edge_moduli.end(), [&](std::uint32_t d) { return d == n; });
  if (!ok) {
    std::string got = r.sha.feasible ? "feasible" : "infeasible";
    got += ", factors [";
    for (std::size_t i = 0; i < r.sha.invariant_factors.size(); ++i) got += (i ? ", " : "") + std::to_string(r.sha.invariant_factors[i]);
    throw Error(ErrorKind::VerificationMismatch, "expected an infeasible target with cokernel [" + std::to_string(n) + "], got " + got + "]");
  }
}

}  // namespace

ModelDescription incidence_model(const PlaneConfiguration& cfg) {
  ModelDescription m;
  m.components = cfg.components;
  for (const auto& p : cfg.points) {
    PointSpec ps{p.name, {}};
    for (const auto& c : cfg.components)
      if (line_poly(cfg, c).evaluate(p.a % cfg.q, p.b % cfg.q) == 0) ps.on.push_back(c);
    m.points.push_back(std::move(ps));
  }
  return m;
}

ClassVector local_class(const PlaneConfiguration& cfg, const FactoredFunction& f, const PlanePoint& p,
                        const std::string& line_j, const std::string& line_k, std::uint32_t n) {
  const PrimeField field(cfg.q);
  auto exponent = [&](const std::string& name) -> std::int64_t {
    auto it = f.line_exponents.find(name);
    return it == f.line_exponents.end() ? 0 : it->second;
  };
  auto reduce = [&](std::int64_t e) { return static_cast<std::uint64_t>(((e % n) + n) % n); };
  std::uint32_t u = rational_point_residue(f.unit, p.a, p.b);
  if (u == 0) throw Error(ErrorKind::InvalidArgument, "unit part vanishes at " + p.name);
  for (const auto& [name, k] : f.line_exponents) {
    if (k == 0 || name == line_j || (!line_k.empty() && name == line_k)) continue;
    const std::uint32_t v = line_poly(cfg, name).evaluate(p.a % cfg.q, p.b % cfg.q);
    if (v == 0)
      throw Error(ErrorKind::UnsupportedShape, "line " + name + " passes through " + p.name + " but is not a local parameter there");
    u = field.mul(u, field.pow(v, k));
  }
  return {reduce(exponent(line_j)), line_k.empty() ? 0 : reduce(exponent(line_k)), unit_class(field, u, n)};
}

MultinormReduction multinorm_reduce(const PlaneConfiguration& cfg, const KummerDescriptor& l1, const KummerDescriptor& l2,
                                    const std::vector<Place>& places) {
  if (l1.n != l2.n || l1.radicands.size() != l2.radicands.size())
    throw Error(ErrorKind::InvalidArgument, "extensions must have the same degree and number of radicands");
  const PrimeField field(cfg.q);
  MultinormReduction out{l1, 2, {}};
  for (std::size_t i = 0; i < l1.radicands.size(); ++i) {
    const RationalFunction r = ratio(cfg, l2.radicands[i], l1.radicands[i]);
    for (const auto& place : places) {
      std::uint32_t value = 0;
      if (place.is_point) {
        try {
          value = rational_point_residue(r, place.point.a, place.point.b);
        } catch (const Error&) {
          throw Error(ErrorKind::EvidenceFailed, "radicand ratio " + std::to_string(i) + " has a pole at " + place.name);
        }
      } else if (!restriction_is_constant(r, line_of(line_poly(cfg, place.line)), value)) {
        throw Error(ErrorKind::EvidenceFailed, "radicand ratio " + std::to_string(i) + " is not constant along " + place.name);
      }
      if (value == 0 || !nth_power_test(field, value, l1.n))
        throw Error(ErrorKind::EvidenceFailed, "radicand ratio " + std::to_string(i) + " is " + std::to_string(value) + " at " +
                                                   place.name + ", not a unit n-th power");
      out.evidence.push_back({place.name, i, value});
    }
  }
  return out;
}

ScenarioReport run_patching_scenario(const PlaneConfiguration& cfg, const KummerDescriptor& l, const std::string& target_label) {
  const ModelDescription model = incidence_model(cfg);
  const PatchGraph graph = build_graph(model);
  ScenarioReport rep;
  std::map<std::string, std::uint32_t> moduli;
  for (const auto& br : graph.branches()) {
    const PlanePoint& pt = cfg.points[br.p];
    const std::string& comp = graph.components()[br.u];
    std::vector<std::string> others;
    for (const auto& c : model.points[br.p].on)
      if (c != comp) others.push_back(c);
    if (others.size() > 1) throw Error(ErrorKind::UnsupportedShape, "more than two components meet at " + pt.name);
    const std::string other = others.empty() ? std::string() : others.front();
    std::vector<ClassVector> cls;
    for (const auto& f : l.radicands) cls.push_back(local_class(cfg, f, pt, comp, other, l.n));
    const BranchShape shape = classify_branch(cls, l.n);
    const std::uint32_t d = rho_order_in_branch(shape, l.n);
    moduli[br.label] = d;
    rep.branch_labels.push_back(br.label);
    rep.edge_moduli.push_back(d);
    rep.checks.push_back("branch " + br.label + ": " + (shape.uniformizer ? "uniformizer" : "no uniformizer") + " radicand, " +
                         (shape.unit == UnitRadicand::Independent ? "independent unit radicand" : "no independent unit radicand") +
                         ", rho order " + std::to_string(d));
  }
  const ObstructionProblem problem = make_problem(graph, l.n, moduli);
  std::vector<std::int64_t> target(graph.branches().size(), 0);
  target[graph.branch_index(target_label)] = 1;
  rep.target_label = target_label;
  rep.sha = in_image(problem, target);
  if (!check_report(problem, rep.sha)) throw Error(ErrorKind::VerificationMismatch, "report failed its own consistency check");
  return rep;
}

PlaneConfiguration triangle_configuration(std::uint32_t q) {
  PlaneConfiguration cfg{q, {}, {"X1", "X2", "X3"}, {{"P1", 1, 0}, {"P2", 0, 1}, {"P3", 0, 0}}};
  cfg.lines = {{"X1", parse("x", q).num}, {"X2", parse("y", q).num}, {"X3", parse("x + y - 1", q).num}};
  return cfg;
}

KummerDescriptor triangle_extension(std::uint32_t q, std::uint32_t n) {
  return {"L", n, {{{{"X1", 1}, {"X2", 1}}, one(q)}, {{{"X2", 1}, {"X3", 1}}, one(q)}}};
}

ScenarioReport verify_triangle(std::uint32_t n, std::uint32_t q) {
  require_scenario_modulus(n, q);
  ScenarioReport r = run_patching_scenario(triangle_configuration(q), triangle_extension(q, n), "P1:X2");
  expect_obstruction(r, n);
  return r;
}

ScenarioReport verify_multinorm(std::uint32_t n, std::uint32_t q) {
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
  if ((6 * static_cast<std::uint64_t>(n)) % q == 0)
    throw Error(ErrorKind::IncompatibleModulus, "6n must be prime to the characteristic " + std::to_string(q));
  require_scenario_modulus(n, q);

  PlaneConfiguration cfg = triangle_configuration(q);
  cfg.lines.push_back({"X4", parse("x - 2", q).num});
  cfg.lines.push_back({"Y2", parse("y - 2", q).num});
  const RationalFunction theta1 = parse("(x - 2) / (x - 2 + xy(x + y - 1))", q);
  const RationalFunction theta2 = parse("(y - 2) / (y - 2 + xy(x + y - 1))", q);
  const RationalFunction inv_den1 = parse("1 / (x - 2 + xy(x + y - 1))", q);
  const RationalFunction inv_den2 = parse("1 / (y - 2 + xy(x + y - 1))", q);

  const KummerDescriptor l1 = triangle_extension(q, n);
  const KummerDescriptor l2{"L2", n, {{{{"X1", 1}, {"X2", 1}, {"X4", 1}}, inv_den1}, {{{"X2", 1}, {"X3", 1}, {"Y2", 1}}, inv_den2}}};

  std::vector<Place> places;
  for (const auto& p : cfg.points) places.push_back({p.name, true, p, ""});
  for (const auto& c : cfg.components) places.push_back({c, false, {}, c});
  const MultinormReduction red = multinorm_reduce(cfg, l1, l2, places);

  ScenarioReport rep = run_patching_scenario(cfg, red.proxy, "P1:X2");
  for (const auto& e : red.evidence)
    rep.checks.push_back("theta" + std::to_string(e.generator + 1) + " at " + e.place + " = " + std::to_string(e.value));
  for (const auto& p : cfg.points) {
    const std::uint32_t v1 = rational_point_residue(theta1, p.a, p.b), v2 = rational_point_residue(theta2, p.a, p.b);
    if (v1 != 1 || v2 != 1) throw Error(ErrorKind::VerificationMismatch, "theta is not 1 at " + p.name);
  }

  // Linear disjointness at Q = (2, 2) in the local parameters (x-2, y-2).
  const PlanePoint Q{"Q", 2, 2};
  std::vector<ClassVector> c1, c2;
  for (const auto& f : l1.radicands) c1.push_back(local_class(cfg, f, Q, "X4", "Y2", n));
  for (const auto& f : l2.radicands) c2.push_back(local_class(cfg, f, Q, "X4", "Y2", n));
  const auto s1 = span_of(c1, n), s2 = span_of(c2, n);
  std::size_t common = 0;
  for (const auto& v : s1) common += s2.count(v);
  if (common != 1 || s2.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::VerificationMismatch, "L1 and L2 are not linearly disjoint at Q");
  rep.checks.push_back("disjointness at Q: L1 unit classes " + std::to_string(c1[0][2]) + ", " + std::to_string(c1[1][2]) +
                       "; L2 radicand classes span " + std::to_string(s2.size()) + " classes; intersection trivial");
  rep.checks.push_back("product torus reduced to L1 with (rho, rho) -> rho^" + std::to_string(red.rho_exponent));
  expect_obstruction(rep, n);
  return rep;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t below(std::uint64_t& state, std::size_t m) { return static_cast<std::size_t>(splitmix64(state) % m); }

}  // namespace

ModelDescription random_tree_model(std::uint64_t& state, std::size_t vertices) {
  if (vertices < 2) throw Error(ErrorKind::InvalidArgument, "a random tree needs at least two vertices");
  // Vertex 0 is a point; each new vertex hangs off an earlier one and takes the other colour.
  std::vector<std::size_t> parent(vertices, 0);
  std::vector<bool> is_point(vertices, true);
  std::vector<std::size_t> index(vertices, 0);
  std::size_t points = 1, comps = 0;
  for (std::size_t v = 1; v < vertices; ++v) {
    parent[v] = below(state, v);
    is_point[v] = !is_point[parent[v]];
    index[v] = is_point[v] ? points++ : comps++;
  }
  ModelDescription m;
  for (std::size_t c = 0; c < comps; ++c) m.components.push_back("X" + std::to_string(c + 1));
  for (std::size_t p = 0; p < points; ++p) m.points.push_back({"P" + std::to_string(p + 1), {}});
  for (std::size_t v = 1; v < vertices; ++v) {
    const std::size_t pv = is_point[v] ? v : parent[v];
    const std::size_t uv = is_point[v] ? parent[v] : v;
    m.points[index[pv]].on.push_back(m.components[index[uv]]);
  }
  return m;
}

TreeSweep verify_trees(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  if (max_vertices < 2) throw Error(ErrorKind::InvalidArgument, "max_vertices must be at least 2");
  std::uint64_t state = seed;
  TreeSweep sweep;
  static constexpr std::uint32_t kModuli[] = {2, 3, 4};
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t n = kModuli[i % 3];
    const ModelDescription model = random_tree_model(state, 2 + below(state, max_vertices - 1));
    const PatchGraph g = build_graph(model);
    const ObstructionProblem problem = make_problem(g, n);
    std::vector<std::int64_t> target(g.branches().size());
    for (auto& t : target) t = static_cast<std::int64_t>(below(state, n));
    const ShaReport r = in_image(problem, target);
    if (!r.feasible || !check_report(problem, r))
      throw Error(ErrorKind::VerificationMismatch, "tree " + std::to_string(i) + " has an unreachable target");
    ++sweep.trees;
    sweep.edges += g.branches().size();
    ++sweep.feasible;
  }
  return sweep;
}

}  // namespace normtori
