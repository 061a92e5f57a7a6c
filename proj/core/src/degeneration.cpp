#include "orbitnorm/degeneration.hpp"

#include <algorithm>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {

bool dominates(const Partition& top, const Partition& bottom) {
  if (top.size() != bottom.size()) {
    throw ContractError("dominance compares partitions of equal size, got " +
                        std::to_string(top.size()) + " and " +
                        std::to_string(bottom.size()));
  }
  const std::size_t rows = std::max(top.length(), bottom.length());
  int top_sum = 0;
  int bottom_sum = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    top_sum += top[i];
    bottom_sum += bottom[i];
    if (bottom_sum > top_sum) return false;
  }
  return true;
}

DegenPair::DegenPair(FormType eps, Partition bottom, Partition top)
    : eps_(eps), bottom_(std::move(bottom)), top_(std::move(top)) {
  if (bottom_.size() != top_.size()) {
    throw ContractError("degeneration members differ in size: [" +
                        bottom_.to_string() + "] vs [" + top_.to_string() +
                        "]");
  }
  for (const Partition* p : {&bottom_, &top_}) {
    if (auto why = eps_violation(*p, eps_)) {
      throw ContractError("[" + p->to_string() + "] is not a " +
                          to_string(eps_) + "-diagram: " + *why);
    }
  }
  if (!dominates(top_, bottom_)) {
    throw ContractError("[" + bottom_.to_string() + "] is not dominated by [" +
                        top_.to_string() + "]");
  }
}

std::vector<EpsDiagram> degenerations(const EpsDiagram& eta, int bound) {
  std::vector<EpsDiagram> out;
  for (auto& d : enumerate_eps_diagrams(eta.partition.size(), eta.eps, bound)) {
    if (d.partition != eta.partition && dominates(eta.partition, d.partition)) {
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<DegenPair> minimal_degenerations(const EpsDiagram& eta,
                                             int bound) {
  const auto below = degenerations(eta, bound);
  std::vector<DegenPair> out;
  for (const auto& sigma : below) {
    const bool covered = std::any_of(
        below.begin(), below.end(), [&](const EpsDiagram& nu) {
          return nu.partition != sigma.partition &&
                 dominates(nu.partition, sigma.partition);
        });
    if (!covered) out.emplace_back(eta.eps, sigma.partition, eta.partition);
  }
  return out;
}

PosetGraph hasse(int n, FormType eps, int bound) {
  if (n > bound) throw CapacityError("Hasse diagram", n, bound);
  PosetGraph graph{eps, n, {}, {}};
  const auto diagrams = enumerate_eps_diagrams(n, eps, bound);
  graph.nodes.reserve(diagrams.size());
  for (const auto& d : diagrams) graph.nodes.push_back(d.partition);
  for (const auto& d : diagrams) {
    for (const auto& pair : minimal_degenerations(d, bound)) {
      graph.edges.push_back({pair.top(), pair.bottom(), {}, {}, {}});
    }
  }
  return graph;
}

}  // namespace orbitnorm
