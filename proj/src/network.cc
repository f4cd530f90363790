#include "cmcf/network.h"

#include <cmath>

#include "cmcf/errors.h"

namespace cmcf {
namespace {

void ValidateArc(int tail, int head, double capacity, const CostFunction& cost,
                 int num_nodes) {
  if (tail < 0 || tail >= num_nodes || head < 0 || head >= num_nodes) {
    throw ConfigError("arc endpoint is not a declared node");
  }
  if (tail == head) throw ConfigError("self-loop arcs are not supported");
  if (!std::isfinite(capacity) || capacity < 0.0) {
    throw ConfigError("arc capacity must be finite and nonnegative");
  }
  if (cost.kind() == CostKind::kKleinrock && !(cost.d() > capacity)) {
    throw ConfigError("Kleinrock pole must lie strictly above the capacity");
  }
}

}  // namespace

int Network::AddNode(std::string name) {
  if (index_.contains(name)) throw ConfigError("duplicate node " + name);
  int id = num_nodes();
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

int Network::AddArc(int tail, int head, double capacity, CostFunction cost) {
  ValidateArc(tail, head, capacity, cost, num_nodes());
  int id = num_arcs();
  arcs_.push_back(Arc{id, tail, head, capacity, std::move(cost)});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

void Network::SetArcCapacityAndCost(int id, double capacity,
                                    CostFunction cost) {
  Arc& arc = arcs_.at(id);
  ValidateArc(arc.tail, arc.head, capacity, cost, num_nodes());
  arc.capacity = capacity;
  arc.cost = std::move(cost);
}

std::optional<int> Network::FindNode(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Instance::DefaultPenalty(const Network& network) {
  double sum = 0.0;
  for (const Arc& arc : network.arcs()) {
    sum += arc.cost.LipschitzBound(arc.capacity);
  }
  return 2.0 * (1.0 + sum);
}

Instance::Instance(Network network, std::vector<Commodity> commodities)
    : network_(std::move(network)), commodities_(std::move(commodities)) {
  penalty_ = DefaultPenalty(network_);
  Validate();
}

Instance::Instance(Network network, std::vector<Commodity> commodities,
                   double penalty)
    : network_(std::move(network)),
      commodities_(std::move(commodities)),
      penalty_(penalty) {
  Validate();
}

void Instance::Validate() {
  lipschitz_sum_ = 0.0;
  idle_cost_ = 0.0;
  for (const Arc& arc : network_.arcs()) {
    lipschitz_sum_ += arc.cost.LipschitzBound(arc.capacity);
    idle_cost_ += arc.cost.Evaluate(0.0);
  }
  if (!(penalty_ > lipschitz_sum_) || !std::isfinite(penalty_)) {
    throw ConfigError("penalty M must exceed the sum of arc Lipschitz bounds");
  }
  for (std::size_t k = 0; k < commodities_.size(); ++k) {
    Commodity& c = commodities_[k];
    c.id = static_cast<int>(k);
    if (c.source < 0 || c.source >= network_.num_nodes() || c.target < 0 ||
        c.target >= network_.num_nodes()) {
      throw ConfigError("commodity endpoint is not a declared node");
    }
    if (c.source == c.target) {
      throw ConfigError("commodity source equals target");
    }
    if (!(c.bandwidth > 0.0) || !std::isfinite(c.bandwidth)) {
      throw ConfigError("commodity bandwidth must be positive");
    }
  }
}

bool Instance::has_nonconvex_costs() const {
  for (const Arc& arc : network_.arcs()) {
    if (!arc.cost.convex()) return true;
  }
  return false;
}

}  // namespace cmcf
