#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "normtori/patch_graph.hpp"
#include "normtori/smith.hpp"

namespace normtori {

/// Per-branch cyclic groups Z/d_e of rho-exponents and the per-vertex orders
/// o_v of the rho-classes a vertex can contribute.
struct ObstructionProblem {
  PatchGraph graph;
  std::uint32_t n;
  std::vector<std::uint32_t> edge_moduli;    // d_e | n, indexed like graph.branches()
  std::vector<std::uint32_t> vertex_orders;  // o_v | n, indexed by vertex
};

/// All moduli and orders equal to n, except edge overrides from the model.
ObstructionProblem make_problem(const PatchGraph& graph, std::uint32_t n,
                                const std::map<std::string, std::uint32_t>& edge_moduli = {});

void validate_problem(const ObstructionProblem& p);

struct ShaReport {
  std::vector<std::int64_t> invariant_factors;
  std::vector<std::int64_t> target;
  bool feasible = false;
  std::vector<std::int64_t> witness;      // vertex exponents, when feasible
  std::vector<std::int64_t> certificate;  // edge character mod n, when infeasible
  std::vector<std::string> notes;
};

/// Row per branch with n/o_P and n/o_U in the endpoint columns.
IntMatrix phi_matrix(const ObstructionProblem& p);

/// Invariant factors > 1 of the cokernel of phi into prod Z/d_e.
std::vector<std::int64_t> cokernel_invariants(const ObstructionProblem& p);

/// Solves phi(g) = target (mod d_e), returning a witness or a certificate.
ShaReport in_image(const ObstructionProblem& p, const std::vector<std::int64_t>& target);

/// Recomputes phi(witness) - target mod d_e and certificate pairings; true when the report is self-consistent.
bool check_report(const ObstructionProblem& p, const ShaReport& r);

}  // namespace normtori
