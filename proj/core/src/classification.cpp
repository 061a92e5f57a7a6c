#include "orbitnorm/classification.hpp"

#include <vector>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {
namespace {

std::vector<int> repeat(int part, int count) {
  return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), part);
}

std::vector<int> concat(std::vector<int> head, const std::vector<int>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

FormType family_form(Family f) {
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::D:
    case Family::G:
      return FormType::Symplectic;
    default:
      return FormType::Orthogonal;
  }
}

// Dimension of the underlying space as a function of n.
int space_dim(Family f, int n) {
  switch (f) {
    case Family::A: return 2;
    case Family::B: return 2 * n;
    case Family::C: return 2 * n + 1;
    case Family::D: return 4 * n + 2;
    case Family::E: return 4 * n;
    case Family::F: return 2 * n + 1;
    case Family::G: return 2 * n;
    case Family::H: return 2 * n;
  }
  return 0;
}

// Inverse of space_dim; nullopt when the dimension is not attained.
std::optional<int> parameter_for_dim(Family f, int dim) {
  auto exact = [&](int num, int den) -> std::optional<int> {
    if (num < 0 || num % den != 0) return std::nullopt;
    return num / den;
  };
  switch (f) {
    case Family::A: return dim == 2 ? std::optional<int>(0) : std::nullopt;
    case Family::B:
    case Family::G:
    case Family::H: return exact(dim, 2);
    case Family::C:
    case Family::F: return exact(dim - 1, 2);
    case Family::D: return exact(dim - 2, 4);
    case Family::E: return exact(dim, 4);
  }
  return std::nullopt;
}

}  // namespace

char family_letter(Family f) noexcept {
  return static_cast<char>('a' + static_cast<int>(f));
}

Family family_from_letter(char c) {
  if (c < 'a' || c > 'h') {
    throw ParseError(std::string("unknown family '") + c + "'");
  }
  return static_cast<Family>(c - 'a');
}

std::optional<int> min_parameter(Family f) noexcept {
  switch (f) {
    case Family::A: return std::nullopt;
    case Family::B: return 2;
    case Family::F: return 2;
    case Family::H: return 3;
    default: return 1;
  }
}

DegenType make_type(Family f, std::optional<int> n) {
  const auto lowest = min_parameter(f);
  if (!lowest) {
    if (n) throw ContractError("family a takes no parameter");
  } else if (!n || *n < *lowest) {
    throw ContractError(std::string("family ") + family_letter(f) +
                        " requires n >= " + std::to_string(*lowest));
  }
  const int k = n.value_or(0);
  int codim = 2;
  switch (f) {
    case Family::F:
    case Family::H: codim = 4 * k - 2; break;
    case Family::G: codim = 2 * k; break;
    default: break;
  }
  const std::string algebra =
      family_form(f) == FormType::Symplectic ? "sp_" : "so_";
  return DegenType{f, n, codim, algebra + std::to_string(space_dim(f, k))};
}

int table_codim(const DegenType& t) noexcept { return t.codim_table; }

DegenPair instantiate(const DegenType& t) {
  const int n = t.n.value_or(0);
  std::vector<int> top;
  std::vector<int> bottom;
  switch (t.family) {
    case Family::A:
      top = {2};
      bottom = {1, 1};
      break;
    case Family::B:
      top = {2 * n};
      bottom = {2 * n - 2, 2};
      break;
    case Family::C:
      top = {2 * n + 1};
      bottom = {2 * n - 1, 1, 1};
      break;
    case Family::D:
      top = {2 * n + 1, 2 * n + 1};
      bottom = {2 * n, 2 * n, 2};
      break;
    case Family::E:
      top = {2 * n, 2 * n};
      bottom = {2 * n - 1, 2 * n - 1, 1, 1};
      break;
    case Family::F:
      top = concat({2, 2}, repeat(1, 2 * n - 3));
      bottom = repeat(1, 2 * n + 1);
      break;
    case Family::G:
      top = concat({2}, repeat(1, 2 * n - 2));
      bottom = repeat(1, 2 * n);
      break;
    case Family::H:
      top = concat({2, 2}, repeat(1, 2 * n - 4));
      bottom = repeat(1, 2 * n);
      break;
  }
  return DegenPair(family_form(t.family), Partition(std::move(bottom)),
                   Partition(std::move(top)));
}

DegenType classify_core(const DegenPair& pair) {
  const int dim = pair.top().size();
  for (Family f : kAllFamilies) {
    if (family_form(f) != pair.eps()) continue;
    const auto solved = parameter_for_dim(f, dim);
    if (!solved) continue;
    const auto lowest = min_parameter(f);
    if (lowest && *solved < *lowest) continue;
    const DegenType candidate =
        make_type(f, lowest ? std::optional<int>(*solved) : std::nullopt);
    const DegenPair shape = instantiate(candidate);
    if (shape.top() == pair.top() && shape.bottom() == pair.bottom()) {
      return candidate;
    }
  }
  throw NotMinimalIrreducible("no table family matches [" +
                              pair.bottom().to_string() + "] <= [" +
                              pair.top().to_string() + "] for eps " +
                              to_string(pair.eps()));
}

Classification classify_minimal_degeneration(const DegenPair& pair) {
  ReductionResult reduction = irreducible_core(pair);
  DegenType type = classify_core(reduction.core);
  return {std::move(reduction), std::move(type)};
}

PosetGraph classify_edges(PosetGraph graph) {
  for (auto& edge : graph.edges) {
    const auto c = classify_minimal_degeneration(
        DegenPair(graph.eps, edge.bottom, edge.top));
    edge.family = family_letter(c.type.family);
    edge.family_n = c.type.n;
    edge.codim = table_codim(c.type);
  }
  return graph;
}

}  // namespace orbitnorm
