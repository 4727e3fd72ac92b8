#pragma once

#include <vector>

#include "latbn/model.hpp"

namespace latbn {

// Partition of the internal (manifest) variables into c-components: delete
// every internal->internal arc, take connected components in the undirected
// sense, and keep the internal members of each component. Components with no
// internal member contribute nothing.
struct CComponentPartition {
  std::vector<std::vector<int>> blocks;  // each sorted; blocks ordered by minimum
};

// Deterministic topological order: Kahn's algorithm, ties broken by ascending
// variable id. Throws on cycles.
std::vector<int> topological_order(const Network& net);

// Strict descendants of v (v excluded), sorted.
std::vector<int> descendants(const Network& net, int v);

CComponentPartition c_components(const Network& net);

// Empirical parent set W_Z of an internal variable z: in the subgraph keeping
// all roots and only the internal variables up to z in the fixed topological
// order, take z's c-component C and return (C plus the internal parents of
// members of C) minus z. Sorted.
//
// Removing only z's strict descendants is not enough: two internal variables
// sharing a latent parent but no directed path would each land in the other's
// W set, and the product of Eq.-style conditionals would no longer equal the
// manifest marginal. Restricting to predecessors in one fixed order keeps the
// factorisation exact; the property tests pin this.
std::vector<int> empirical_parents(const Network& net, int z);

}  // namespace latbn
