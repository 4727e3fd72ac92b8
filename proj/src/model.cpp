#include "latbn/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "latbn/error.hpp"
#include "latbn/numeric.hpp"

namespace latbn {

namespace {

constexpr double kColumnSumTol = 1e-9;

void require(bool cond, const std::string& message) {
  if (!cond) throw Error(ErrorKind::kInvalidArgument, message);
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

}  // namespace

Cpt Cpt::dense(int child, int child_cardinality, std::vector<int> parents,
               std::vector<int> parent_cardinalities,
               std::vector<double> column_major_probs) {
  require(child >= 0, "cpt child id must be nonnegative");
  require(child_cardinality >= 1, "cpt child cardinality must be >= 1");
  require(parents.size() == parent_cardinalities.size(),
          "cpt parent list and cardinality list differ in length");
  Cpt c;
  c.child_ = child;
  c.child_card_ = child_cardinality;
  c.parents_ = std::move(parents);
  c.parent_cards_ = std::move(parent_cardinalities);
  for (int card : c.parent_cards_) require(card >= 1, "parent cardinality must be >= 1");
  c.config_count_ = radix_product(c.parent_cards_);
  require(static_cast<std::int64_t>(column_major_probs.size()) ==
              c.config_count_ * child_cardinality,
          "cpt table size does not match child cardinality times parent configurations");
  c.probs_ = std::move(column_major_probs);
  return c;
}

Cpt Cpt::from_columns(int child, int child_cardinality, std::vector<int> parents,
                      std::vector<int> parent_cardinalities,
                      const std::vector<std::vector<double>>& columns) {
  std::vector<double> flat;
  flat.reserve(columns.size() * child_cardinality);
  for (const auto& col : columns) {
    require(static_cast<int>(col.size()) == child_cardinality,
            "cpt column length does not match child cardinality");
    flat.insert(flat.end(), col.begin(), col.end());
  }
  return dense(child, child_cardinality, std::move(parents),
               std::move(parent_cardinalities), std::move(flat));
}

Cpt Cpt::deterministic(int child, int child_cardinality, std::vector<int> parents,
                       std::vector<int> parent_cardinalities,
                       std::vector<int> winning_states) {
  require(child >= 0, "cpt child id must be nonnegative");
  require(child_cardinality >= 1, "cpt child cardinality must be >= 1");
  require(parents.size() == parent_cardinalities.size(),
          "cpt parent list and cardinality list differ in length");
  Cpt c;
  c.child_ = child;
  c.child_card_ = child_cardinality;
  c.parents_ = std::move(parents);
  c.parent_cards_ = std::move(parent_cardinalities);
  for (int card : c.parent_cards_) require(card >= 1, "parent cardinality must be >= 1");
  c.config_count_ = radix_product(c.parent_cards_);
  require(static_cast<std::int64_t>(winning_states.size()) == c.config_count_,
          "deterministic cpt needs one winning state per parent configuration");
  for (int w : winning_states) {
    require(w >= 0 && w < child_cardinality,
            "deterministic cpt winning state out of range");
  }
  c.deterministic_ = true;
  c.winners_ = std::move(winning_states);
  return c;
}

double Cpt::value(int child_state, std::int64_t config) const {
  require(child_state >= 0 && child_state < child_card_, "child state out of range");
  require(config >= 0 && config < config_count_, "parent configuration out of range");
  if (deterministic_) {
    return winners_[config] == child_state ? 1.0 : 0.0;
  }
  return probs_[config * child_card_ + child_state];
}

int Cpt::winner(std::int64_t config) const {
  require(deterministic_, "winner() requires a deterministic cpt");
  require(config >= 0 && config < config_count_, "parent configuration out of range");
  return winners_[config];
}

std::int64_t Cpt::config_index(std::span<const int> parent_states) const {
  require(parent_states.size() == parents_.size(),
          "parent state vector length does not match parent list");
  for (std::size_t i = 0; i < parent_states.size(); ++i) {
    require(parent_states[i] >= 0 && parent_states[i] < parent_cards_[i],
            "parent state out of range");
  }
  return mixed_radix_encode(parent_states, parent_cards_);
}

std::vector<int> Cpt::config_states(std::int64_t config) const {
  require(config >= 0 && config < config_count_, "parent configuration out of range");
  std::vector<int> states(parents_.size());
  mixed_radix_decode(config, parent_cards_, states);
  return states;
}

std::vector<double> Cpt::column(std::int64_t config) const {
  std::vector<double> col(child_card_);
  for (int s = 0; s < child_card_; ++s) col[s] = value(s, config);
  return col;
}

double Cpt::column_sum(std::int64_t config) const {
  if (deterministic_) return 1.0;
  double sum = 0;
  for (int s = 0; s < child_card_; ++s) sum += probs_[config * child_card_ + s];
  return sum;
}

void Cpt::set_column(std::int64_t config, std::span<const double> probs) {
  require(!deterministic_, "set_column() requires a dense cpt");
  require(config >= 0 && config < config_count_, "parent configuration out of range");
  require(static_cast<int>(probs.size()) == child_card_,
          "column length does not match child cardinality");
  std::copy(probs.begin(), probs.end(), probs_.begin() + config * child_card_);
}

Network::Network(std::vector<Variable> variables, std::vector<Cpt> cpts)
    : variables_(std::move(variables)) {
  const int n = static_cast<int>(variables_.size());
  require(n > 0, "network needs at least one variable");
  require(static_cast<int>(cpts.size()) == n, "network needs exactly one cpt per variable");
  for (int i = 0; i < n; ++i) {
    require(variables_[i].id == i, "variable ids must be dense 0..n-1 in order");
    require(variables_[i].cardinality >= 1, "variable cardinality must be >= 1");
  }
  cpts_.resize(n, cpts[0]);
  std::vector<bool> seen(n, false);
  for (auto& c : cpts) {
    const int id = c.child();
    require(id >= 0 && id < n, "cpt child id out of range");
    require(!seen[id], "duplicate cpt for one variable");
    require(c.child_cardinality() == variables_[id].cardinality,
            "cpt child cardinality does not match variable");
    const auto& ps = c.parents();
    for (std::size_t k = 0; k < ps.size(); ++k) {
      require(ps[k] >= 0 && ps[k] < n, "cpt parent id out of range");
      require(ps[k] != id, "variable cannot be its own parent");
      require(c.parent_cardinalities()[k] == variables_[ps[k]].cardinality,
              "cpt parent cardinality does not match variable");
    }
    seen[id] = true;
    cpts_[id] = std::move(c);
  }
}

const Variable& Network::variable(int id) const {
  require(id >= 0 && id < variable_count(), "unknown variable id");
  return variables_[id];
}

const Cpt& Network::cpt(int id) const {
  require(id >= 0 && id < variable_count(), "unknown variable id");
  return cpts_[id];
}

std::vector<int> Network::root_ids() const {
  std::vector<int> out;
  for (const auto& v : variables_) {
    if (cpts_[v.id].is_root()) out.push_back(v.id);
  }
  return out;
}

std::vector<int> Network::latent_ids() const {
  std::vector<int> out;
  for (const auto& v : variables_) {
    if (v.role == Role::kLatent) out.push_back(v.id);
  }
  return out;
}

std::vector<int> Network::manifest_ids() const {
  std::vector<int> out;
  for (const auto& v : variables_) {
    if (v.role == Role::kManifest) out.push_back(v.id);
  }
  return out;
}

std::optional<int> Network::find(std::string_view name) const {
  for (const auto& v : variables_) {
    if (v.name == name) return v.id;
  }
  return std::nullopt;
}

Network Network::with_cpt(Cpt replacement) const {
  std::vector<Cpt> cpts = cpts_;
  const int id = replacement.child();
  require(id >= 0 && id < variable_count(), "unknown variable id");
  cpts[id] = std::move(replacement);
  return Network(variables_, std::move(cpts));
}

WeightedDataset::WeightedDataset(std::vector<int> manifest_order)
    : manifest_order_(std::move(manifest_order)) {}

void WeightedDataset::add(std::span<const int> states, double weight) {
  require(states.size() == manifest_order_.size(),
          "record must assign a state to every manifest variable");
  require(weight >= 0.0, "record weights must be nonnegative");
  require(std::isfinite(weight), "record weights must be finite");
  std::vector<int> key(states.begin(), states.end());
  records_[std::move(key)] += weight;
}

WeightedDataset WeightedDataset::scaled(double c) const {
  require(c > 0.0, "scale factor must be positive");
  WeightedDataset out(manifest_order_);
  for (const auto& [z, w] : records_) out.add(z, w * c);
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    if (!v.subject.empty()) os << v.subject << ": ";
    os << v.message << "\n";
  }
  return os.str();
}

namespace {

bool has_cycle(const Network& net) {
  const int n = net.variable_count();
  // colours: 0 unvisited, 1 on stack, 2 done
  std::vector<int> colour(n, 0);
  std::vector<std::vector<int>> children(n);
  for (int i = 0; i < n; ++i) {
    for (int p : net.cpt(i).parents()) children[p].push_back(i);
  }
  std::vector<std::pair<int, std::size_t>> stack;
  for (int start = 0; start < n; ++start) {
    if (colour[start] != 0) continue;
    stack.push_back({start, 0});
    colour[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < children[node].size()) {
        const int ch = children[node][next++];
        if (colour[ch] == 1) return true;
        if (colour[ch] == 0) {
          colour[ch] = 1;
          stack.push_back({ch, 0});
        }
      } else {
        colour[node] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

ValidationReport validate_network(const Network& net) {
  ValidationReport report;
  auto flag = [&](const std::string& subject, const std::string& message) {
    report.violations.push_back({subject, message});
  };

  std::unordered_set<std::string> names;
  for (const auto& v : net.variables()) {
    if (v.cardinality < 2) {
      flag(v.name, "cardinality " + std::to_string(v.cardinality) + " is below 2");
    }
    if (!names.insert(v.name).second) {
      flag(v.name, "duplicate variable name");
    }
    const bool root = net.is_root(v.id);
    if (v.role == Role::kLatent && !root) {
      flag(v.name, "latent non-root: latent variables must be parentless");
    }
    if (v.role == Role::kManifest && root) {
      flag(v.name, "manifest root: manifest variables must have at least one parent");
    }
    const Cpt& c = net.cpt(v.id);
    std::unordered_set<int> parent_set;
    for (int p : c.parents()) {
      if (!parent_set.insert(p).second) flag(v.name, "duplicate parent in cpt");
    }
    if (!c.is_deterministic()) {
      for (std::int64_t cfg = 0; cfg < c.config_count(); ++cfg) {
        bool negative = false;
        for (int s = 0; s < c.child_cardinality(); ++s) {
          if (c.value(s, cfg) < 0.0) negative = true;
        }
        if (negative) {
          flag(v.name, "column " + std::to_string(cfg) + " has a negative entry");
        }
        const double sum = c.column_sum(cfg);
        if (std::abs(sum - 1.0) > kColumnSumTol) {
          flag(v.name, "column " + std::to_string(cfg) + " sums to " + format_number(sum));
        }
      }
    }
  }
  if (has_cycle(net)) {
    flag("", "graph implied by the cpts contains a cycle");
  }
  return report;
}

double total_weight(const WeightedDataset& d) {
  KahanSum sum;
  for (const auto& [z, w] : d.records()) sum.add(w);
  return sum.value();
}

}  // namespace latbn
