#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "normtori/group.hpp"

namespace normtori {

struct PointSpec {
  std::string name;
  std::vector<std::string> on;  // incident components; repeats mark extra branches at a node
};

struct ModelDescription {
  std::vector<std::string> components;
  std::vector<PointSpec> points;
  std::map<std::string, std::uint32_t> edge_moduli;  // optional, keyed by branch label
};

struct Branch {
  std::size_t p;      // index into points
  std::size_t u;      // index into components
  std::string label;  // "P:U", with "#k" appended for the k-th repeat (k >= 2)
};

/// Bipartite graph with vertices 0..P-1 the points and P..P+U-1 the components.
class PatchGraph {
 public:
  PatchGraph(std::vector<std::string> points, std::vector<std::string> components, std::vector<Branch> branches);

  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<std::string>& components() const noexcept { return components_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }
  std::size_t vertex_count() const noexcept { return points_.size() + components_.size(); }
  std::size_t point_vertex(std::size_t p) const noexcept { return p; }
  std::size_t component_vertex(std::size_t u) const noexcept { return points_.size() + u; }
  const std::string& vertex_name(std::size_t v) const;
  bool is_point_vertex(std::size_t v) const noexcept { return v < points_.size(); }
  /// Branch index by label; throws InvalidArgument when absent.
  std::size_t branch_index(const std::string& label) const;
  std::size_t connected_components() const;

 private:
  std::vector<std::string> points_;
  std::vector<std::string> components_;
  std::vector<Branch> branches_;
};

PatchGraph build_graph(const ModelDescription& model);

bool is_tree(const PatchGraph& g);

/// |E| - |V| + number of connected components.
std::size_t betti_number(const PatchGraph& g);

/// Vertex values g_v with edge_values[b] = g_P * g_U for every branch b = (P, U).
/// edge_values is indexed like g.branches().
std::vector<GroupElement> tree_factorize(const PatchGraph& g, const std::vector<GroupElement>& edge_values,
                                         const GroupSpec& group);

}  // namespace normtori
