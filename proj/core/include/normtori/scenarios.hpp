#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "normtori/monomial.hpp"
#include "normtori/obstruction.hpp"
#include "normtori/rational_function.hpp"

namespace normtori {

struct NamedLine {
  std::string name;
  Poly2 poly;  // degree one
};

struct PlanePoint {
  std::string name;
  std::uint32_t a, b;
};

/// Lines in the affine plane over F_q; `components` names the lines that make
/// up the special fibre, the rest only serve as local parameters.
struct PlaneConfiguration {
  std::uint32_t q;
  std::vector<NamedLine> lines;
  std::vector<std::string> components;
  std::vector<PlanePoint> points;
};

/// unit * prod line^exponent.
struct FactoredFunction {
  std::map<std::string, int> line_exponents;
  RationalFunction unit;
};

/// F(n-th roots of the radicands).
struct KummerDescriptor {
  std::string name;
  std::uint32_t n;
  std::vector<FactoredFunction> radicands;
};

/// Incidences by evaluation: a point lies on every component vanishing there.
ModelDescription incidence_model(const PlaneConfiguration& cfg);

/// Class (e_j, e_k, unit class) of f at point p in the local parameters
/// (line j, line k); k may be empty for a point on a single component.
ClassVector local_class(const PlaneConfiguration& cfg, const FactoredFunction& f, const PlanePoint& p,
                        const std::string& line_j, const std::string& line_k, std::uint32_t n);

struct Place {
  std::string name;
  bool is_point;
  PlanePoint point;   // when is_point
  std::string line;   // otherwise
};

struct EvidenceRecord {
  std::string place;
  std::size_t generator;
  std::uint32_t value;  // residue of the radicand ratio at the place
};

struct MultinormReduction {
  KummerDescriptor proxy;
  /// (rho, ..., rho) in the product torus maps to rho^r on the proxy.
  std::uint32_t rho_exponent;
  std::vector<EvidenceRecord> evidence;
};

/// Checks at every place that each radicand ratio L2/L1 is a unit n-th power
/// there, so both factors of L1 x L2 localize to the same algebra.
MultinormReduction multinorm_reduce(const PlaneConfiguration& cfg, const KummerDescriptor& l1, const KummerDescriptor& l2,
                                    const std::vector<Place>& places);

struct ScenarioReport {
  ShaReport sha;
  std::vector<std::string> branch_labels;
  std::vector<std::uint32_t> edge_moduli;
  std::string target_label;
  std::vector<std::string> checks;
};

/// Builds the patching problem for L over cfg, with edge moduli from the
/// branch shapes, and tests the target rho on one branch.
ScenarioReport run_patching_scenario(const PlaneConfiguration& cfg, const KummerDescriptor& l, const std::string& target_label);

/// The triangle xy(x+y-1) with L = F(n-th root of xy, n-th root of y(x+y-1)).
PlaneConfiguration triangle_configuration(std::uint32_t q);
KummerDescriptor triangle_extension(std::uint32_t q, std::uint32_t n);

ScenarioReport verify_triangle(std::uint32_t n, std::uint32_t q);
ScenarioReport verify_multinorm(std::uint32_t n, std::uint32_t q);

/// A random bipartite tree with the given number of vertices (>= 2), points
/// named P1.. and components X1.., drawn from a splitmix64 stream.
ModelDescription random_tree_model(std::uint64_t& state, std::size_t vertices);

struct TreeSweep {
  std::size_t trees = 0;
  std::size_t edges = 0;
  std::size_t feasible = 0;
};

/// Random trees with at most max_vertices vertices and random targets for n
/// cycling through {2, 3, 4}; throws VerificationMismatch unless every target
/// is reached by a witness that recomposes.
TreeSweep verify_trees(std::uint64_t seed, std::size_t count, std::size_t max_vertices);

}  // namespace normtori
