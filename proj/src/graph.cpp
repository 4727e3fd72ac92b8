#include "latbn/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "latbn/error.hpp"

namespace latbn {

namespace {

std::vector<std::vector<int>> children_lists(const Network& net) {
  std::vector<std::vector<int>> children(net.variable_count());
  for (int i = 0; i < net.variable_count(); ++i) {
    for (int p : net.cpt(i).parents()) children[p].push_back(i);
  }
  return children;
}

bool is_internal(const Network& net, int id) { return !net.is_root(id); }

// Connected components (undirected) after deleting internal->internal arcs,
// restricted to the nodes where keep[id] is true. Returns the sorted internal
// members per component, ordered by minimum member id.
std::vector<std::vector<int>> internal_component_blocks(
    const Network& net, const std::vector<bool>& keep) {
  const int n = net.variable_count();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    for (int p : net.cpt(i).parents()) {
      if (!keep[p]) continue;
      if (is_internal(net, i) && is_internal(net, p)) continue;  // deleted arc
      adj[i].push_back(p);
      adj[p].push_back(i);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<bool> visited(n, false);
  for (int start = 0; start < n; ++start) {
    if (!keep[start] || visited[start]) continue;
    std::vector<int> members;
    std::queue<int> frontier;
    frontier.push(start);
    visited[start] = true;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      if (is_internal(net, v)) members.push_back(v);
      for (int u : adj[v]) {
        if (!visited[u]) {
          visited[u] = true;
          frontier.push(u);
        }
      }
    }
    if (!members.empty()) {
      std::sort(members.begin(), members.end());
      blocks.push_back(std::move(members));
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

std::vector<int> topological_order(const Network& net) {
  const int n = net.variable_count();
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i) indegree[i] = static_cast<int>(net.cpt(i).parents().size());
  const auto children = children_lists(net);

  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int ch : children[v]) {
      if (--indegree[ch] == 0) ready.push(ch);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument, "cycle detected: no topological order exists");
  }
  return order;
}

std::vector<int> descendants(const Network& net, int v) {
  if (v < 0 || v >= net.variable_count()) {
    throw Error(ErrorKind::kInvalidArgument, "unknown variable id");
  }
  const auto children = children_lists(net);
  std::vector<bool> seen(net.variable_count(), false);
  std::queue<int> frontier;
  frontier.push(v);
  std::vector<int> out;
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop();
    for (int ch : children[cur]) {
      if (!seen[ch]) {
        seen[ch] = true;
        out.push_back(ch);
        frontier.push(ch);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CComponentPartition c_components(const Network& net) {
  std::vector<bool> keep(net.variable_count(), true);
  return {internal_component_blocks(net, keep)};
}

std::vector<int> empirical_parents(const Network& net, int z) {
  if (z < 0 || z >= net.variable_count()) {
    throw Error(ErrorKind::kInvalidArgument, "unknown variable id");
  }
  if (net.is_root(z)) {
    throw Error(ErrorKind::kInvalidArgument,
                "empirical parents are defined for internal variables only");
  }

  const std::vector<int> order = topological_order(net);
  std::vector<int> position(net.variable_count(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);

  // Keep every root; keep internal variables up to z in the order.
  std::vector<bool> keep(net.variable_count(), false);
  for (int v = 0; v < net.variable_count(); ++v) {
    keep[v] = !is_internal(net, v) || position[v] <= position[z];
  }

  const auto blocks = internal_component_blocks(net, keep);
  const std::vector<int>* component = nullptr;
  for (const auto& block : blocks) {
    if (std::binary_search(block.begin(), block.end(), z)) {
      component = &block;
      break;
    }
  }
  // z itself is kept, so its block always exists.
  std::set<int> w(component->begin(), component->end());
  for (int member : *component) {
    for (int p : net.cpt(member).parents()) {
      if (is_internal(net, p)) w.insert(p);  // parents of kept nodes are kept
    }
  }
  w.erase(z);
  return {w.begin(), w.end()};
}

}  // namespace latbn
