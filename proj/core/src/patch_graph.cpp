#include "normtori/patch_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "normtori/errors.hpp"

namespace normtori {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

PatchGraph::PatchGraph(std::vector<std::string> points, std::vector<std::string> components, std::vector<Branch> branches)
    : points_(std::move(points)), components_(std::move(components)), branches_(std::move(branches)) {
  for (const auto& b : branches_)
    if (b.p >= points_.size() || b.u >= components_.size())
      throw Error(ErrorKind::InvalidArgument, "branch " + b.label + " has an endpoint out of range");
}

const std::string& PatchGraph::vertex_name(std::size_t v) const {
  return is_point_vertex(v) ? points_.at(v) : components_.at(v - points_.size());
}

std::size_t PatchGraph::branch_index(const std::string& label) const {
  for (std::size_t i = 0; i < branches_.size(); ++i)
    if (branches_[i].label == label) return i;
  throw Error(ErrorKind::InvalidArgument, "no branch labelled " + label);
}

std::size_t PatchGraph::connected_components() const {
  UnionFind uf(vertex_count());
  for (const auto& b : branches_) uf.unite(point_vertex(b.p), component_vertex(b.u));
  std::size_t c = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (uf.find(v) == v) ++c;
  return c;
}

PatchGraph build_graph(const ModelDescription& model) {
  if (model.components.empty()) throw Error(ErrorKind::EmptyModel, "model has no components");
  std::map<std::string, std::size_t> comp_index;
  for (std::size_t i = 0; i < model.components.size(); ++i)
    if (!comp_index.emplace(model.components[i], i).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate component " + model.components[i]);
  std::set<std::string> point_names;
  std::vector<std::string> points;
  std::vector<Branch> branches;
  for (std::size_t p = 0; p < model.points.size(); ++p) {
    const auto& pt = model.points[p];
    if (!point_names.insert(pt.name).second) throw Error(ErrorKind::InvalidArgument, "duplicate point " + pt.name);
    if (pt.on.empty()) throw Error(ErrorKind::EmptyModel, "point " + pt.name + " lies on no component");
    points.push_back(pt.name);
    std::map<std::string, int> seen;
    for (const auto& c : pt.on) {
      auto it = comp_index.find(c);
      if (it == comp_index.end()) throw Error(ErrorKind::UnknownComponent, "point " + pt.name + " refers to unknown component " + c);
      const int k = ++seen[c];
      std::string label = pt.name + ":" + c;
      if (k > 1) label += "#" + std::to_string(k);
      branches.push_back({p, it->second, label});
    }
  }
  for (const auto& [label, d] : model.edge_moduli) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "edge modulus for " + label + " must be positive");
    if (std::none_of(branches.begin(), branches.end(), [&](const Branch& b) { return b.label == label; }))
      throw Error(ErrorKind::UnknownComponent, "edge modulus given for unknown branch " + label);
  }
  return PatchGraph(std::move(points), model.components, std::move(branches));
}

bool is_tree(const PatchGraph& g) {
  return g.connected_components() == 1 && g.branches().size() + 1 == g.vertex_count();
}

std::size_t betti_number(const PatchGraph& g) {
  return g.branches().size() + g.connected_components() - g.vertex_count();
}

std::vector<GroupElement> tree_factorize(const PatchGraph& g, const std::vector<GroupElement>& edge_values,
                                         const GroupSpec& group) {
  if (!is_tree(g)) throw Error(ErrorKind::NotATree, "patching graph has betti number " + std::to_string(betti_number(g)) +
                                                        " and " + std::to_string(g.connected_components()) + " component(s)");
  if (edge_values.size() != g.branches().size())
    throw Error(ErrorKind::MissingEdgeValue, "expected " + std::to_string(g.branches().size()) + " edge values, got " +
                                                 std::to_string(edge_values.size()));
  for (const auto& v : edge_values) group.validate(v);

  const std::size_t nv = g.vertex_count();
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t b = 0; b < g.branches().size(); ++b) {
    incident[g.point_vertex(g.branches()[b].p)].push_back(b);
    incident[g.component_vertex(g.branches()[b].u)].push_back(b);
  }
  std::vector<std::size_t> degree(nv);
  for (std::size_t v = 0; v < nv; ++v) degree[v] = incident[v].size();
  std::vector<bool> removed(nv, false), edge_gone(g.branches().size(), false);

  // Leaves ordered by (name, kind) so that peeling is reproducible.
  auto key = [&](std::size_t v) { return std::make_pair(g.vertex_name(v), g.is_point_vertex(v) ? 0 : 1); };
  auto cmp = [&](std::size_t a, std::size_t b) { return key(a) < key(b) || (key(a) == key(b) && a < b); };
  std::set<std::size_t, decltype(cmp)> leaves(cmp);
  for (std::size_t v = 0; v < nv; ++v)
    if (degree[v] == 1) leaves.insert(v);

  struct Peel {
    std::size_t leaf, edge;
  };
  std::vector<Peel> order;
  std::size_t remaining = nv;
  while (remaining > 1) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    std::size_t edge = 0;
    for (auto b : incident[leaf])
      if (!edge_gone[b]) edge = b;
    const auto& br = g.branches()[edge];
    const std::size_t other = g.is_point_vertex(leaf) ? g.component_vertex(br.u) : g.point_vertex(br.p);
    edge_gone[edge] = true;
    removed[leaf] = true;
    --remaining;
    order.push_back({leaf, edge});
    if (--degree[other] == 1) leaves.insert(other);
  }

  std::vector<GroupElement> value(nv);
  for (std::size_t v = 0; v < nv; ++v)
    if (!removed[v]) value[v] = group.identity();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& br = g.branches()[it->edge];
    const std::size_t pv = g.point_vertex(br.p), uv = g.component_vertex(br.u);
    const GroupElement& gb = edge_values[it->edge];
    if (it->leaf == pv) value[pv] = group.multiply(gb, group.inverse(value[uv]));
    else value[uv] = group.multiply(group.inverse(value[pv]), gb);
  }
  return value;
}

}  // namespace normtori
