#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latbn/model.hpp"

namespace latbn {

inline constexpr int kUnassigned = -1;

// A (possibly partial) assignment of states to variables, dense over ids.
class Assignment {
 public:
  explicit Assignment(int variable_count)
      : states_(variable_count, kUnassigned) {}

  int operator[](int id) const { return states_[id]; }
  void set(int id, int state) { states_[id] = state; }
  void clear(int id) { states_[id] = kUnassigned; }
  bool assigned(int id) const { return states_[id] != kUnassigned; }
  int size() const { return static_cast<int>(states_.size()); }

 private:
  std::vector<int> states_;
};

// Builds an assignment of the manifest variables from a dataset record laid
// out according to `manifest_order`.
Assignment assignment_from_record(const Network& net,
                                  std::span<const int> manifest_order,
                                  std::span<const int> record);

// Mixed-radix enumeration over a fixed variable list; the first variable is
// the most significant digit. Used for latent configurations (ascending id)
// and for complete manifest states.
class StateSpace {
 public:
  StateSpace(const Network& net, std::vector<int> vars);

  std::int64_t size() const { return size_; }
  const std::vector<int>& variables() const { return vars_; }
  void decode(std::int64_t index, std::span<int> out) const;
  std::int64_t encode(std::span<const int> states) const;

 private:
  std::vector<int> vars_;
  std::vector<int> cards_;
  std::int64_t size_ = 1;
};

StateSpace latent_space(const Network& net);    // roots, ascending id
StateSpace manifest_space(const Network& net);  // internal, ascending id

// P(x) for a complete assignment: the product of one CPT entry per variable.
double joint_prob(const Network& net, const Assignment& a);

// P(z) for a complete manifest assignment, summing joint_prob over every
// joint latent configuration. Latent entries of `a` are ignored.
double marginal_manifest(const Network& net, const Assignment& a);

// Probability of a partial manifest event: sums marginal_manifest over all
// completions of the unassigned manifest variables. An assignment with every
// manifest variable set degenerates to marginal_manifest.
double manifest_event_prob(const Network& net, const Assignment& partial);

// P(target_var = target_state | context). The context is a partial manifest
// assignment not covering target_var. Throws kUndefinedConditional when the
// context has probability zero.
double conditional_manifest(const Network& net, int target_var, int target_state,
                            const Assignment& context);

// P(y | z) over joint latent configurations, indexed by latent_space(net).
// Throws kDegenerateLikelihood on zero-probability evidence.
std::vector<double> posterior_latents(const Network& net, const Assignment& z);

}  // namespace latbn
