#include "latbn/inference.hpp"

#include <algorithm>
#include <sstream>

#include "latbn/error.hpp"
#include "latbn/numeric.hpp"

namespace latbn {

namespace {

std::vector<int> roots_ascending(const Network& net) {
  std::vector<int> ids;
  for (int i = 0; i < net.variable_count(); ++i) {
    if (net.is_root(i)) ids.push_back(i);
  }
  return ids;
}

std::vector<int> internal_ascending(const Network& net) {
  std::vector<int> ids;
  for (int i = 0; i < net.variable_count(); ++i) {
    if (!net.is_root(i)) ids.push_back(i);
  }
  return ids;
}

void check_manifest_complete(const Network& net, const Assignment& a) {
  if (a.size() != net.variable_count()) {
    throw Error(ErrorKind::kInvalidArgument, "assignment size does not match network");
  }
  for (int id : internal_ascending(net)) {
    if (!a.assigned(id)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "assignment must cover every manifest variable (missing " +
                      net.variable(id).name + ")");
    }
    if (a[id] < 0 || a[id] >= net.variable(id).cardinality) {
      throw Error(ErrorKind::kInvalidArgument, "state out of range for " + net.variable(id).name);
    }
  }
}

}  // namespace

Assignment assignment_from_record(const Network& net,
                                  std::span<const int> manifest_order,
                                  std::span<const int> record) {
  if (manifest_order.size() != record.size()) {
    throw Error(ErrorKind::kInvalidArgument, "record length does not match manifest order");
  }
  Assignment a(net.variable_count());
  for (std::size_t i = 0; i < record.size(); ++i) a.set(manifest_order[i], record[i]);
  return a;
}

StateSpace::StateSpace(const Network& net, std::vector<int> vars)
    : vars_(std::move(vars)) {
  cards_.reserve(vars_.size());
  for (int v : vars_) {
    cards_.push_back(net.variable(v).cardinality);
    size_ *= cards_.back();
  }
}

void StateSpace::decode(std::int64_t index, std::span<int> out) const {
  mixed_radix_decode(index, cards_, out);
}

std::int64_t StateSpace::encode(std::span<const int> states) const {
  return mixed_radix_encode(states, cards_);
}

StateSpace latent_space(const Network& net) {
  return StateSpace(net, roots_ascending(net));
}

StateSpace manifest_space(const Network& net) {
  return StateSpace(net, internal_ascending(net));
}

double joint_prob(const Network& net, const Assignment& a) {
  if (a.size() != net.variable_count()) {
    throw Error(ErrorKind::kInvalidArgument, "assignment size does not match network");
  }
  std::vector<int> parent_states;
  double prob = 1.0;
  for (int id = 0; id < net.variable_count(); ++id) {
    if (!a.assigned(id)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "joint probability needs a complete assignment (missing " +
                      net.variable(id).name + ")");
    }
    const Cpt& c = net.cpt(id);
    parent_states.clear();
    for (int p : c.parents()) parent_states.push_back(a[p]);
    prob *= c.value(a[id], c.config_index(parent_states));
    if (prob == 0.0) return 0.0;
  }
  return prob;
}

double marginal_manifest(const Network& net, const Assignment& a) {
  check_manifest_complete(net, a);
  const StateSpace latents = latent_space(net);
  Assignment full = a;
  std::vector<int> y(latents.variables().size());
  KahanSum sum;
  for (std::int64_t k = 0; k < latents.size(); ++k) {
    latents.decode(k, y);
    for (std::size_t i = 0; i < y.size(); ++i) full.set(latents.variables()[i], y[i]);
    sum.add(joint_prob(net, full));
  }
  return sum.value();
}

double manifest_event_prob(const Network& net, const Assignment& partial) {
  if (partial.size() != net.variable_count()) {
    throw Error(ErrorKind::kInvalidArgument, "assignment size does not match network");
  }
  std::vector<int> free_vars;
  for (int id : manifest_space(net).variables()) {
    if (!partial.assigned(id)) free_vars.push_back(id);
  }
  const StateSpace completions(net, free_vars);
  Assignment a = partial;
  std::vector<int> states(free_vars.size());
  KahanSum sum;
  for (std::int64_t k = 0; k < completions.size(); ++k) {
    completions.decode(k, states);
    for (std::size_t i = 0; i < free_vars.size(); ++i) a.set(free_vars[i], states[i]);
    sum.add(marginal_manifest(net, a));
  }
  return sum.value();
}

double conditional_manifest(const Network& net, int target_var, int target_state,
                            const Assignment& context) {
  if (target_var < 0 || target_var >= net.variable_count() || net.is_root(target_var)) {
    throw Error(ErrorKind::kInvalidArgument, "conditional target must be a manifest variable");
  }
  if (context.assigned(target_var)) {
    throw Error(ErrorKind::kInvalidArgument, "context must not assign the target variable");
  }
  if (target_state < 0 || target_state >= net.variable(target_var).cardinality) {
    throw Error(ErrorKind::kInvalidArgument, "target state out of range");
  }
  const double p_context = manifest_event_prob(net, context);
  if (p_context <= 0.0) {
    throw Error(ErrorKind::kUndefinedConditional,
                "conditional undefined: context has probability zero");
  }
  Assignment with_target = context;
  with_target.set(target_var, target_state);
  return manifest_event_prob(net, with_target) / p_context;
}

std::vector<double> posterior_latents(const Network& net, const Assignment& z) {
  const double marginal = marginal_manifest(net, z);
  if (marginal <= 0.0) {
    throw Error(ErrorKind::kDegenerateLikelihood,
                "posterior undefined: evidence has probability zero");
  }
  const StateSpace latents = latent_space(net);
  std::vector<double> posterior(latents.size());
  Assignment full = z;
  std::vector<int> y(latents.variables().size());
  for (std::int64_t k = 0; k < latents.size(); ++k) {
    latents.decode(k, y);
    for (std::size_t i = 0; i < y.size(); ++i) full.set(latents.variables()[i], y[i]);
    posterior[k] = joint_prob(net, full) / marginal;
  }
  return posterior;
}

}  // namespace latbn
