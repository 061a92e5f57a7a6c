#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitnorm {

/// Type of the defining bilinear form: symmetric (orthogonal Lie algebra)
/// or alternating (symplectic Lie algebra). The underlying value is the
/// sign eps with (x, y) = eps * (y, x).
enum class FormType : int { Orthogonal = 1, Symplectic = -1 };

constexpr int sign(FormType eps) noexcept { return static_cast<int>(eps); }

constexpr FormType flip(FormType eps) noexcept {
  return eps == FormType::Orthogonal ? FormType::Symplectic
                                     : FormType::Orthogonal;
}

/// eps * (-1)^columns, the form type left after erasing `columns` columns.
constexpr FormType flip_times(FormType eps, int columns) noexcept {
  return columns % 2 == 0 ? eps : flip(eps);
}

/// Accepts +1 / -1 only.
FormType form_type_from_sign(int s);

/// "+1" or "-1".
std::string to_string(FormType eps);

/// A weakly decreasing list of positive integers. Never stores zero parts;
/// the empty list is the partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Sorts `parts` into weakly decreasing order. Throws ContractError if any
  /// part is not positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }

  /// Part i (0-based), or 0 past the end.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// Largest part, 0 for the empty partition.
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Comma-joined parts, e.g. "7,2,2"; empty string for the empty partition.
  std::string to_string() const;

  bool operator==(const Partition& other) const noexcept {
    return parts_ == other.parts_;
  }
  /// Lexicographic on parts (so reverse-lexicographic order is descending).
  std::strong_ordering operator<=>(const Partition& other) const noexcept {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Parses comma- and/or whitespace-separated positive integers in any order.
/// Throws ParseError naming the offending token.
Partition parse_partition(std::string_view text);

/// Column heights of the Young diagram: result_j = #{i : p_i >= j}.
Partition dual(const Partition& p);

/// Part size -> number of parts of that size.
std::map<int, int> multiplicities(const Partition& p);

Partition from_multiplicities(const std::map<int, int>& mult);

/// Describes why `p` is not a diagram of type `eps`, e.g.
/// "odd part 3 has odd multiplicity 1"; nullopt when it is valid.
std::optional<std::string> eps_violation(const Partition& p, FormType eps);

/// Orthogonal: every even part has even multiplicity. Symplectic: every odd
/// part has even multiplicity.
bool is_eps_diagram(const Partition& p, FormType eps);

/// Drops the first column: every part decremented, zeros removed.
Partition erase_first_column(const Partition& p);

/// A partition labelling a nilpotent orbit for the form type `eps`.
struct EpsDiagram {
  Partition partition;
  FormType eps;

  /// Validates the parity rule; throws ContractError otherwise.
  EpsDiagram(Partition p, FormType e);

  bool operator==(const EpsDiagram&) const = default;
};

inline constexpr int kDefaultEnumerationBound = 40;

/// All partitions of n, reverse-lexicographic (largest first part first).
std::vector<Partition> partitions_of(int n,
                                     int bound = kDefaultEnumerationBound);

/// Partitions of n that are eps-diagrams, reverse-lexicographic.
/// Throws CapacityError when n > bound.
std::vector<EpsDiagram> enumerate_eps_diagrams(
    int n, FormType eps, int bound = kDefaultEnumerationBound);

}  // namespace orbitnorm
