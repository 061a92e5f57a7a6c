#pragma once

#include <array>
#include <optional>
#include <string>

#include "orbitnorm/degeneration.hpp"
#include "orbitnorm/reduction.hpp"

namespace orbitnorm {

/// The eight families of minimal irreducible degenerations (Hesselink,
/// Kraft-Procesi), in table order.
enum class Family { A, B, C, D, E, F, G, H };

inline constexpr std::array<Family, 8> kAllFamilies = {
    Family::A, Family::B, Family::C, Family::D,
    Family::E, Family::F, Family::G, Family::H};

char family_letter(Family f) noexcept;
/// Accepts 'a'..'h'; throws ParseError otherwise.
Family family_from_letter(char c);

/// Smallest admissible parameter, nullopt for family a (no parameter).
std::optional<int> min_parameter(Family f) noexcept;

/// A family together with its parameter.
///
/// `codim_table` is the codimension as printed in the classification table:
/// 2 for a-e, 4n-2 for f and h, 2n for g. For f and h the printed value
/// disagrees with the orbit dimensions computed by the matrix oracle
/// (4n-4 and 4n-6 respectively); callers that need the true codimension
/// should consult codim_oracle().
struct DegenType {
  Family family;
  std::optional<int> n;
  int codim_table;
  std::string algebra_label;  // e.g. "sp_14" for d at n=3

  bool operator==(const DegenType&) const = default;
};

/// Validates the parameter range (b n>=2, c/d/e/g n>=1, f n>=2, h n>=3,
/// a none) and fills in the codimension and algebra label.
DegenType make_type(Family f, std::optional<int> n = std::nullopt);

int table_codim(const DegenType& t) noexcept;

/// The pair (sigma <= eta) of the given family and parameter.
DegenPair instantiate(const DegenType& t);

/// Matches an irreducible minimal degeneration against the table by exact
/// shape, solving for n. Ties resolve to the earlier family (g at n=1 is
/// reported as a). Throws NotMinimalIrreducible when nothing matches.
DegenType classify_core(const DegenPair& pair);

struct Classification {
  ReductionResult reduction;
  DegenType type;
};

/// irreducible_core() followed by classify_core() on the core.
Classification classify_minimal_degeneration(const DegenPair& pair);

/// Returns `graph` with every edge annotated by family, parameter and
/// table codimension.
PosetGraph classify_edges(PosetGraph graph);

}  // namespace orbitnorm
