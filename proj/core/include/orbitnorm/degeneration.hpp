#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitnorm/partition.hpp"

namespace orbitnorm {

/// Dominance order: every prefix sum of `bottom` is at most the matching
/// prefix sum of `top`. Throws ContractError when the sizes differ.
bool dominates(const Partition& top, const Partition& bottom);

/// An eps-degeneration bottom <= top: two eps-diagrams of equal size with
/// top dominating bottom. Equal members are allowed.
class DegenPair {
 public:
  /// Throws ContractError if any invariant fails.
  DegenPair(FormType eps, Partition bottom, Partition top);

  FormType eps() const noexcept { return eps_; }
  const Partition& bottom() const noexcept { return bottom_; }
  const Partition& top() const noexcept { return top_; }
  bool is_trivial() const noexcept { return bottom_ == top_; }

  bool operator==(const DegenPair&) const = default;

 private:
  FormType eps_;
  Partition bottom_;
  Partition top_;
};

/// Every eps-diagram strictly below `eta`, in reverse-lexicographic order.
std::vector<EpsDiagram> degenerations(const EpsDiagram& eta,
                                      int bound = kDefaultEnumerationBound);

/// Maximal elements of degenerations(eta): the covering pairs below eta.
std::vector<DegenPair> minimal_degenerations(
    const EpsDiagram& eta, int bound = kDefaultEnumerationBound);

inline constexpr int kDefaultHasseBound = 26;

struct HasseEdge {
  Partition top;
  Partition bottom;
  // Filled in by classify_edges().
  std::optional<char> family;
  std::optional<int> family_n;
  std::optional<int> codim;
};

/// Cover graph of the degeneration order on eps-diagrams of size n.
struct PosetGraph {
  FormType eps;
  int n;
  std::vector<Partition> nodes;
  std::vector<HasseEdge> edges;
};

/// Nodes in enumeration order; edges grouped by top node in node order,
/// bottoms in enumeration order. Edge annotations are left empty.
PosetGraph hasse(int n, FormType eps, int bound = kDefaultHasseBound);

}  // namespace orbitnorm
