#include "normtori_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "normtori/errors.hpp"
#include "normtori/finite_field.hpp"
#include "normtori/kummer_local.hpp"
#include "normtori/laurent_series.hpp"
#include "normtori/monomial.hpp"
#include "normtori/obstruction.hpp"
#include "normtori/scenarios.hpp"

namespace normtori::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// nlohmann reports a byte count; turn it into line and column.
json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.rfind(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw Error(ErrorKind::ParseError, what + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

[[noreturn]] void schema_error(const std::string& what, const std::string& where, const std::string& expected) {
  throw Error(ErrorKind::ParseError, what + ": " + where + ": expected " + expected);
}

std::string as_string(const json& j, const std::string& what, const std::string& where) {
  if (!j.is_string()) schema_error(what, where, "a string");
  return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& what, const std::string& where) {
  if (!j.is_number_integer()) schema_error(what, where, "an integer");
  return j.get<std::int64_t>();
}

json shape_vector(const std::vector<std::int64_t>& v) { return json(v); }

struct Options {
  bool json_out = false;
  int prec = kDefaultPrecision;
};

Report ramify(std::uint64_t e, std::uint64_t ell) {
  const std::uint64_t r = ramification_after_root(e, ell);
  Report rep{"ramify", "ok", {{"e", e}, {"ell", ell}, {"ramification", r}}, {std::to_string(r)}};
  return rep;
}

Report local_norm(std::uint32_t q, std::uint32_t n, const std::string& a_text, const std::string& lambda_text, int prec) {
  const PrimeField field(q);
  const LaurentSeries a = parse_series(a_text, q, prec);
  const LaurentSeries lambda = parse_series(lambda_text, q, prec);
  const CyclicKummerLocal ext(field, a, n);
  const bool norm = is_norm_cyclic(ext, lambda);
  const std::uint64_t symbol = tame_symbol(field, a, lambda, n);
  Report rep{"local-norm", "ok", {}, {}};
  rep.payload = {{"q", q},      {"n", n},       {"a", a.to_string()}, {"lambda", lambda.to_string()},
                 {"norm", norm}, {"symbol_class", symbol}, {"is_field", ext.is_field()}};
  rep.text = {std::string(norm ? "norm" : "not a norm") + " (tame symbol class " + std::to_string(symbol) + ")"};
  return rep;
}

Report local_hensel(std::uint32_t q, std::uint32_t n, const std::string& z_text, int prec) {
  const LaurentSeries z = parse_series(z_text, q, prec);
  const LaurentSeries w = hensel_nth_root(z, n);
  const bool ok = approx_equal(w.pow(n), z);
  Report rep{"local-hensel", ok ? "ok" : "mismatch", {}, {w.to_string()}};
  rep.payload = {{"q", q}, {"n", n}, {"z", z.to_string()}, {"root", w.to_string()}, {"recomposes", ok}};
  if (!ok) throw Error(ErrorKind::VerificationMismatch, "root does not recompose");
  return rep;
}

json branch_labels(const PatchGraph& g) {
  json labels = json::array();
  for (const auto& b : g.branches()) labels.push_back(b.label);
  return labels;
}

Report graph_check(const std::string& path) {
  const PatchGraph g = build_graph(parse_model(path));
  Report rep{"graph-check", "ok", {}, {}};
  rep.payload = {{"vertices", g.vertex_count()},
                 {"edges", g.branches().size()},
                 {"connected_components", g.connected_components()},
                 {"betti_number", betti_number(g)},
                 {"is_tree", is_tree(g)},
                 {"branches", branch_labels(g)}};
  rep.text = {std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.branches().size()) + " edges",
              "betti number " + std::to_string(betti_number(g)) + (is_tree(g) ? ", tree" : ", not a tree")};
  return rep;
}

json element_json(const GroupSpec& group, const GroupElement& x) {
  if (group.kind() == GroupSpec::Kind::Cyclic) return x.at(0);
  return json(x);
}

std::string element_text(const GroupSpec& group, const GroupElement& x) { return element_json(group, x).dump(); }

Report graph_factorize(const std::string& model_path, const std::string& values_path, const std::string& group_text) {
  const PatchGraph g = build_graph(parse_model(model_path));
  const GroupSpec group = GroupSpec::parse(group_text);
  const std::string what = values_path;
  const json doc = parse_json(read_file(values_path), what);
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_object()) schema_error(what, "edges", "an object");
  std::vector<GroupElement> values(g.branches().size());
  std::vector<bool> seen(values.size(), false);
  for (const auto& [label, v] : doc["edges"].items()) {
    const std::size_t b = g.branch_index(label);
    GroupElement x;
    if (group.kind() == GroupSpec::Kind::Cyclic) {
      x = {static_cast<int>(as_int(v, what, "edges." + label))};
    } else {
      if (!v.is_array()) schema_error(what, "edges." + label, "a permutation array");
      for (const auto& e : v) x.push_back(static_cast<int>(as_int(e, what, "edges." + label)));
    }
    group.validate(x);
    values[b] = std::move(x);
    seen[b] = true;
  }
  for (std::size_t b = 0; b < seen.size(); ++b)
    if (!seen[b]) throw Error(ErrorKind::MissingEdgeValue, "no value for branch " + g.branches()[b].label);
  const auto assignment = tree_factorize(g, values, group);
  Report rep{"graph-factorize", "ok", {}, {}};
  json vertices = json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertices[g.vertex_name(v)] = element_json(group, assignment[v]);
    rep.text.push_back(g.vertex_name(v) + " = " + element_text(group, assignment[v]));
  }
  rep.payload = {{"group", group.to_string()}, {"vertices", vertices}};
  return rep;
}

Report sha(const std::string& model_path, const std::string& target_path, std::uint32_t n) {
  const ModelDescription model = parse_model(model_path);
  const PatchGraph g = build_graph(model);
  const ObstructionProblem problem = make_problem(g, n, model.edge_moduli);
  const auto target = parse_target(target_path, g);
  const ShaReport r = in_image(problem, target);
  if (!check_report(problem, r)) throw Error(ErrorKind::VerificationMismatch, "report failed its consistency check");
  Report rep{"sha", r.feasible ? "ok" : "infeasible", {}, {}};
  json moduli = json::object(), tgt = json::object();
  for (std::size_t b = 0; b < g.branches().size(); ++b) {
    moduli[g.branches()[b].label] = problem.edge_moduli[b];
    tgt[g.branches()[b].label] = target[b];
  }
  json witness = nullptr, certificate = nullptr;
  if (r.feasible) {
    witness = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) witness[g.vertex_name(v)] = r.witness[v];
  } else {
    certificate = json::object();
    for (std::size_t b = 0; b < g.branches().size(); ++b) certificate[g.branches()[b].label] = r.certificate[b];
  }
  rep.payload = {{"n", n},
                 {"edge_moduli", moduli},
                 {"target", tgt},
                 {"invariant_factors", shape_vector(r.invariant_factors)},
                 {"feasible", r.feasible},
                 {"witness", witness},
                 {"certificate", certificate},
                 {"notes", r.notes}};
  std::string factors;
  for (auto f : r.invariant_factors) factors += (factors.empty() ? "" : ", ") + std::to_string(f);
  rep.text = {std::string(r.feasible ? "feasible" : "infeasible"), "cokernel [" + factors + "]"};
  if (r.feasible) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      rep.text.push_back("  " + g.vertex_name(v) + " -> " + std::to_string(r.witness[v]));
  } else {
    std::string cert;
    for (std::size_t b = 0; b < g.branches().size(); ++b)
      cert += (b ? " " : "") + g.branches()[b].label + "=" + std::to_string(r.certificate[b]);
    rep.text.push_back("certificate " + cert);
  }
  return rep;
}

Report scenario_report(const std::string& name, std::uint32_t n, std::uint32_t q, const ScenarioReport& s) {
  Report rep{"verify-paper", s.sha.feasible ? "ok" : "infeasible", {}, {}};
  json moduli = json::object(), certificate = nullptr;
  for (std::size_t b = 0; b < s.branch_labels.size(); ++b) moduli[s.branch_labels[b]] = s.edge_moduli[b];
  if (!s.sha.feasible) {
    certificate = json::object();
    for (std::size_t b = 0; b < s.branch_labels.size(); ++b) certificate[s.branch_labels[b]] = s.sha.certificate[b];
  }
  rep.payload = {{"scenario", name},
                 {"n", n},
                 {"q", q},
                 {"target", s.target_label},
                 {"edge_moduli", moduli},
                 {"invariant_factors", shape_vector(s.sha.invariant_factors)},
                 {"feasible", s.sha.feasible},
                 {"certificate", certificate},
                 {"checks", s.checks}};
  std::string factors;
  for (auto f : s.sha.invariant_factors) factors += (factors.empty() ? "" : ", ") + std::to_string(f);
  rep.text = {name + " n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " +
                  (s.sha.feasible ? "feasible" : "infeasible") + ", cokernel [" + factors + "]"};
  for (const auto& c : s.checks) rep.text.push_back("  " + c);
  return rep;
}

Report verify_paper(const std::string& scenario, std::uint32_t n, std::uint32_t q, std::uint64_t seed, std::size_t count) {
  if (scenario == "triangle") return scenario_report(scenario, n, q, verify_triangle(n, q));
  if (scenario == "multinorm") return scenario_report(scenario, n, q, verify_multinorm(n, q));
  const TreeSweep sweep = verify_trees(seed, count, 20);
  Report rep{"verify-paper", "ok", {}, {}};
  rep.payload = {{"scenario", scenario}, {"seed", seed}, {"trees", sweep.trees}, {"edges", sweep.edges}, {"feasible", sweep.feasible}};
  rep.text = {std::to_string(sweep.feasible) + "/" + std::to_string(sweep.trees) + " random tree targets reached (" +
              std::to_string(sweep.edges) + " edges)"};
  return rep;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::VerificationMismatch:
      return kExitMismatch;
    case ErrorKind::PrecisionExhausted:
      return kExitPrecision;
    default:
      return kExitUsage;
  }
}

}  // namespace

std::string render_json(const Report& r) {
  const json j = {{"command", r.command}, {"status", r.status}, {"payload", r.payload}, {"text", r.text}};
  return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::string s;
  for (const auto& line : r.text) s += line + "\n";
  return s;
}

Report parse_report(const std::string& json_text) {
  const json j = parse_json(json_text, "report");
  const std::string what = "report";
  if (!j.is_object()) schema_error(what, "top level", "an object");
  Report r;
  r.command = as_string(j.value("command", json()), what, "command");
  r.status = as_string(j.value("status", json()), what, "status");
  r.payload = j.value("payload", json::object());
  const json text = j.value("text", json::array());
  if (!text.is_array()) schema_error(what, "text", "an array");
  for (const auto& line : text) r.text.push_back(as_string(line, what, "text"));
  return r;
}

ModelDescription parse_model_text(const std::string& text) {
  const std::string what = "model";
  const json doc = parse_json(text, what);
  if (!doc.is_object()) schema_error(what, "top level", "an object");
  ModelDescription m;
  if (!doc.contains("components") || !doc["components"].is_array()) schema_error(what, "components", "an array");
  for (const auto& c : doc["components"]) m.components.push_back(as_string(c, what, "components[]"));
  if (!doc.contains("points") || !doc["points"].is_array()) schema_error(what, "points", "an array");
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const json& p = doc["points"][i];
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!p.is_object()) schema_error(what, where, "an object");
    PointSpec spec{as_string(p.value("name", json()), what, where + ".name"), {}};
    if (!p.contains("on") || !p["on"].is_array()) schema_error(what, where + ".on", "an array");
    for (const auto& c : p["on"]) spec.on.push_back(as_string(c, what, where + ".on[]"));
    m.points.push_back(std::move(spec));
  }
  if (doc.contains("edge_moduli")) {
    if (!doc["edge_moduli"].is_object()) schema_error(what, "edge_moduli", "an object");
    for (const auto& [label, v] : doc["edge_moduli"].items()) {
      const std::int64_t d = as_int(v, what, "edge_moduli." + label);
      if (d < 1) schema_error(what, "edge_moduli." + label, "a positive integer");
      m.edge_moduli[label] = static_cast<std::uint32_t>(d);
    }
  }
  return m;
}

ModelDescription parse_model(const std::string& path) { return parse_model_text(read_file(path)); }

std::vector<std::int64_t> parse_target_text(const std::string& text, const PatchGraph& g) {
  const std::string what = "target";
  const json doc = parse_json(text, what);
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_object()) schema_error(what, "edges", "an object");
  std::vector<std::int64_t> target(g.branches().size(), 0);
  for (const auto& [label, v] : doc["edges"].items()) target[g.branch_index(label)] = as_int(v, what, "edges." + label);
  return target;
}

std::vector<std::int64_t> parse_target(const std::string& path, const PatchGraph& g) {
  return parse_target_text(read_file(path), g);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-global obstructions for norm-one tori over semiglobal fields", "normtori"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_out, "Print the report as JSON");
  app.add_option("--prec", opt.prec, "Working precision in terms")->check(CLI::Range(1, 4096));

  std::function<Report()> action;

  std::uint64_t e = 0, ell = 0;
  auto* ram = app.add_subcommand("ramify", "Ramification index after adjoining an ell-th root of a uniformizer")->fallthrough();
  ram->add_option("--e", e, "Ramification index of the base")->required()->check(CLI::PositiveNumber);
  ram->add_option("--ell", ell, "Prime degree of the root")->required()->check(CLI::PositiveNumber);
  ram->callback([&] { action = [&] { return ramify(e, ell); }; });

  std::uint32_t q = 5, n = 2;
  std::string a_text, lambda_text, z_text;
  auto* ln = app.add_subcommand("local-norm", "Decide whether lambda is a norm from F(a^(1/n))")->fallthrough();
  ln->add_option("--q", q, "Residue characteristic")->required();
  ln->add_option("--n", n, "Degree, dividing q-1")->required();
  ln->add_option("--a", a_text, "Radicand series, e.g. \"t + 2*t^2\"")->required();
  ln->add_option("--lambda", lambda_text, "Series to test")->required();
  ln->callback([&] { action = [&] { return local_norm(q, n, a_text, lambda_text, opt.prec); }; });

  auto* lh = app.add_subcommand("local-hensel", "n-th root of a series with residue 1")->fallthrough();
  lh->add_option("--q", q, "Residue characteristic")->required();
  lh->add_option("--n", n, "Root degree")->required();
  lh->add_option("--z", z_text, "Series with valuation 0 and residue 1")->required();
  lh->callback([&] { action = [&] { return local_hensel(q, n, z_text, opt.prec); }; });

  std::string model_path, values_path, target_path, group_text;
  auto* gc = app.add_subcommand("graph-check", "Patching graph summary of a model")->fallthrough();
  gc->add_option("model", model_path, "Model JSON")->required();
  gc->callback([&] { action = [&] { return graph_check(model_path); }; });

  auto* gf = app.add_subcommand("graph-factorize", "Factor edge values through the vertices of a tree")->fallthrough();
  gf->add_option("model", model_path, "Model JSON")->required();
  gf->add_option("--values", values_path, "Edge values JSON {\"edges\": {...}}")->required();
  gf->add_option("--group", group_text, "zmod:<m> or sym:<k> (default zmod:<n>)");
  gf->add_option("--n", n, "Modulus of the default cyclic group");
  gf->callback([&] {
    action = [&] { return graph_factorize(model_path, values_path, group_text.empty() ? "zmod:" + std::to_string(n) : group_text); };
  });

  auto* sh = app.add_subcommand("sha", "Decide whether a target lies in the image of the product map")->fallthrough();
  sh->add_option("model", model_path, "Model JSON")->required();
  sh->add_option("--target", target_path, "Target JSON {\"edges\": {...}}")->required();
  sh->add_option("--n", n, "Exponent of the torus");
  sh->callback([&] { action = [&] { return sha(model_path, target_path, n); }; });

  std::string scenario;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  auto* vp = app.add_subcommand("verify-paper", "Reproduce a worked example")->fallthrough();
  vp->add_option("scenario", scenario, "triangle, multinorm or trees")
      ->required()
      ->check(CLI::IsMember({"triangle", "multinorm", "trees"}));
  vp->add_option("--n", n, "Exponent");
  vp->add_option("--q", q, "Residue characteristic");
  vp->add_option("--seed", seed, "Seed for the random trees");
  vp->add_option("--count", count, "Number of random trees");
  vp->callback([&] { action = [&] { return verify_paper(scenario, n, q, seed, count); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report rep;
  int code = kExitOk;
  try {
    rep = action();
  } catch (const Error& ex) {
    code = exit_code(ex.kind());
    rep.command = app.get_subcommands().front()->get_name();
    rep.status = ex.kind() == ErrorKind::VerificationMismatch ? "mismatch" : "error";
    rep.payload = {{"kind", std::string(to_string(ex.kind()))}, {"message", ex.what()}};
    rep.text = {std::string("error: ") + ex.what()};
    err << rep.text.front() << "\n";
    if (opt.json_out) out << render_json(rep);
    return code;
  }
  out << (opt.json_out ? render_json(rep) : render_text(rep));
  return code;
}

}  // namespace normtori::cli
