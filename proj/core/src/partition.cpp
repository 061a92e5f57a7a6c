#include "orbitnorm/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {

FormType form_type_from_sign(int s) {
  if (s == 1) return FormType::Orthogonal;
  if (s == -1) return FormType::Symplectic;
  throw ContractError("form type must be +1 or -1, got " + std::to_string(s));
}

std::string to_string(FormType eps) {
  return eps == FormType::Orthogonal ? "+1" : "-1";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part <= 0) {
      throw ContractError("partition parts must be positive, got " +
                          std::to_string(part));
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto is_sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() ||
        first == token.data() + token.size()) {
      throw ParseError("not an integer: '" + std::string(token) + "'");
    }
    if (value <= 0) {
      throw ParseError("parts must be positive: '" + std::string(token) + "'");
    }
    parts.push_back(value);
    pos = end;
  }
  return Partition(std::move(parts));
}

Partition dual(const Partition& p) {
  std::vector<int> columns(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++columns[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(columns));
}

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> mult;
  for (int part : p.parts()) ++mult[part];
  return mult;
}

Partition from_multiplicities(const std::map<int, int>& mult) {
  std::vector<int> parts;
  for (const auto& [part, count] : mult) parts.insert(parts.end(), count, part);
  return Partition(std::move(parts));
}

std::optional<std::string> eps_violation(const Partition& p, FormType eps) {
  // Orthogonal forms pair up even Jordan blocks, symplectic forms odd ones.
  const int paired_parity = eps == FormType::Orthogonal ? 0 : 1;
  const auto mult = multiplicities(p);
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const auto [part, count] = *it;
    if (part % 2 == paired_parity && count % 2 != 0) {
      return std::string(paired_parity == 0 ? "even" : "odd") + " part " +
             std::to_string(part) + " has odd multiplicity " +
             std::to_string(count);
    }
  }
  return std::nullopt;
}

bool is_eps_diagram(const Partition& p, FormType eps) {
  return !eps_violation(p, eps).has_value();
}

Partition erase_first_column(const Partition& p) {
  std::vector<int> parts;
  parts.reserve(p.length());
  for (int part : p.parts()) {
    if (part > 1) parts.push_back(part - 1);
  }
  return Partition(std::move(parts));
}

EpsDiagram::EpsDiagram(Partition p, FormType e)
    : partition(std::move(p)), eps(e) {
  if (auto why = eps_violation(partition, eps)) {
    throw ContractError("[" + partition.to_string() + "] is not a " +
                        to_string(eps) + "-diagram: " + *why);
  }
}

std::vector<Partition> partitions_of(int n, int bound) {
  if (n < 0) throw ContractError("cannot partition a negative integer");
  if (n > bound) throw CapacityError("partition enumeration", n, bound);

  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

std::vector<EpsDiagram> enumerate_eps_diagrams(int n, FormType eps,
                                               int bound) {
  std::vector<EpsDiagram> out;
  for (auto& p : partitions_of(n, bound)) {
    if (is_eps_diagram(p, eps)) out.emplace_back(std::move(p), eps);
  }
  return out;
}

}  // namespace orbitnorm
