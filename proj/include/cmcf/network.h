#ifndef CMCF_NETWORK_H_
#define CMCF_NETWORK_H_

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cmcf/cost_function.h"

namespace cmcf {

struct Arc {
  int id = 0;
  int tail = 0;
  int head = 0;
  double capacity = 0.0;
  CostFunction cost = CostFunction::Linear(1.0);
};

// Directed capacitated graph. Arc ids are dense and equal to insertion order.
// Parallel arcs are allowed; they are distinguished by id only.
class Network {
 public:
  int AddNode(std::string name);
  // Throws ConfigError on unknown endpoints, loops, negative or non-finite
  // capacities, and Kleinrock poles not strictly above the capacity.
  int AddArc(int tail, int head, double capacity, CostFunction cost);

  int num_nodes() const { return static_cast<int>(names_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(int id) const { return arcs_[id]; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const int> out_arcs(int node) const { return out_[node]; }
  std::span<const int> in_arcs(int node) const { return in_[node]; }

  const std::string& node_name(int node) const { return names_[node]; }
  std::optional<int> FindNode(const std::string& name) const;

  // Replaces capacity and cost of an existing arc (same validation).
  void SetArcCapacityAndCost(int id, double capacity, CostFunction cost);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct Commodity {
  int id = 0;
  int source = 0;
  int target = 0;
  double bandwidth = 0.0;
};

// Network + commodities + rejection penalty M. Immutable once built.
class Instance {
 public:
  // M = 2 * (1 + sum_a L_a).
  Instance(Network network, std::vector<Commodity> commodities);
  // Explicit M; must exceed sum_a L_a.
  Instance(Network network, std::vector<Commodity> commodities,
           double penalty);

  const Network& network() const { return network_; }
  std::span<const Commodity> commodities() const { return commodities_; }
  const Commodity& commodity(int k) const { return commodities_[k]; }
  int num_commodities() const { return static_cast<int>(commodities_.size()); }
  int num_arcs() const { return network_.num_arcs(); }
  int num_nodes() const { return network_.num_nodes(); }

  double penalty() const { return penalty_; }
  double lipschitz_sum() const { return lipschitz_sum_; }
  // Sum of r_a(0): the constant every formulation pays for idle arcs.
  double idle_cost() const { return idle_cost_; }
  bool has_nonconvex_costs() const;

  static double DefaultPenalty(const Network& network);

 private:
  void Validate();

  Network network_;
  std::vector<Commodity> commodities_;
  double penalty_ = 0.0;
  double lipschitz_sum_ = 0.0;
  double idle_cost_ = 0.0;
};

}  // namespace cmcf

#endif  // CMCF_NETWORK_H_
