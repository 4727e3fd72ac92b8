#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latbn {

enum class Role { kLatent, kManifest };

// A categorical variable. States are dense 0-based indices; display labels,
// when present, live only in the serialisation layer.
struct Variable {
  int id = -1;
  std::string name;
  int cardinality = 0;
  Role role = Role::kManifest;
};

// Conditional probability table for one child variable. Columns are parent
// configurations, indexed mixed-radix with the first declared parent most
// significant; each column is a distribution over the child's states.
//
// Storage is either dense (one probability per cell) or deterministic (one
// winning child state per column). Deterministic tables behave exactly like
// dense 0/1 tables through value().
class Cpt {
 public:
  static Cpt dense(int child, int child_cardinality, std::vector<int> parents,
                   std::vector<int> parent_cardinalities,
                   std::vector<double> column_major_probs);

  // Convenience builder taking one probability vector per parent
  // configuration, in column order.
  static Cpt from_columns(int child, int child_cardinality,
                          std::vector<int> parents,
                          std::vector<int> parent_cardinalities,
                          const std::vector<std::vector<double>>& columns);

  static Cpt deterministic(int child, int child_cardinality,
                           std::vector<int> parents,
                           std::vector<int> parent_cardinalities,
                           std::vector<int> winning_states);

  int child() const { return child_; }
  int child_cardinality() const { return child_card_; }
  const std::vector<int>& parents() const { return parents_; }
  const std::vector<int>& parent_cardinalities() const { return parent_cards_; }
  std::int64_t config_count() const { return config_count_; }
  bool is_root() const { return parents_.empty(); }
  bool is_deterministic() const { return deterministic_; }

  double value(int child_state, std::int64_t config) const;

  // Deterministic tables only: the single child state with mass 1.
  int winner(std::int64_t config) const;

  std::int64_t config_index(std::span<const int> parent_states) const;
  std::vector<int> config_states(std::int64_t config) const;

  std::vector<double> column(std::int64_t config) const;
  double column_sum(std::int64_t config) const;

  // Replaces one column of a dense table. The replacement need not be
  // normalised; validation reports such columns.
  void set_column(std::int64_t config, std::span<const double> probs);

 private:
  Cpt() = default;

  int child_ = -1;
  int child_card_ = 0;
  std::vector<int> parents_;
  std::vector<int> parent_cards_;
  std::int64_t config_count_ = 1;
  bool deterministic_ = false;
  std::vector<double> probs_;    // dense: [config * child_card_ + state]
  std::vector<int> winners_;     // deterministic: [config]
};

// A discrete Bayesian network: variables with dense ids 0..n-1 and one CPT
// per variable; edges are implied by the CPT parent lists.
//
// Construction enforces only structural coherence (one CPT per variable,
// consistent dimensions, known parent ids). Everything else — acyclicity,
// normalisation, the latent-root/manifest-internal role rule, cardinality
// bounds, name uniqueness — is reported by validate_network().
class Network {
 public:
  Network(std::vector<Variable> variables, std::vector<Cpt> cpts);

  int variable_count() const { return static_cast<int>(variables_.size()); }
  const Variable& variable(int id) const;
  const Cpt& cpt(int id) const;
  std::span<const Variable> variables() const { return variables_; }

  bool is_root(int id) const { return cpt(id).is_root(); }
  std::vector<int> root_ids() const;
  std::vector<int> latent_ids() const;    // by declared role
  std::vector<int> manifest_ids() const;  // by declared role

  std::optional<int> find(std::string_view name) const;

  // Rebuilds the network with one CPT replaced (same child and shape).
  Network with_cpt(Cpt replacement) const;

 private:
  std::vector<Variable> variables_;
  std::vector<Cpt> cpts_;  // cpts_[id].child() == id
};

// Observations of the manifest variables with nonnegative real weights.
// Weights are reals, not integers: exact-compatibility datasets need
// fractional n(z) = N * P(z). Records are complete over manifest_order and
// duplicate records aggregate their weights.
class WeightedDataset {
 public:
  WeightedDataset() = default;
  explicit WeightedDataset(std::vector<int> manifest_order);

  const std::vector<int>& manifest_order() const { return manifest_order_; }
  void add(std::span<const int> states, double weight);
  const std::map<std::vector<int>, double>& records() const { return records_; }
  bool empty() const { return records_.empty(); }

  // Multiplies every weight by c > 0.
  WeightedDataset scaled(double c) const;

 private:
  std::vector<int> manifest_order_;
  std::map<std::vector<int>, double> records_;
};

struct Violation {
  std::string subject;  // variable or cpt name, empty for network-level
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Diagnoses a network against the latent-root setting: cycles, unnormalised
// or negative CPT columns, latent non-roots, manifest roots, cardinality < 2,
// duplicate names. An empty report means valid.
ValidationReport validate_network(const Network& net);

double total_weight(const WeightedDataset& d);

}  // namespace latbn
