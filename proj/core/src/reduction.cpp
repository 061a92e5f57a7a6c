#include "orbitnorm/reduction.hpp"

#include <algorithm>
#include <cassert>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {
namespace {

int common_prefix(const Partition& a, const Partition& b) {
  const std::size_t n = std::min(a.length(), b.length());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return static_cast<int>(i);
}

Partition drop_rows(const Partition& p, int rows) {
  const auto& parts = p.parts();
  return Partition(std::vector<int>(parts.begin() + rows, parts.end()));
}

Partition drop_columns(const Partition& p, int columns) {
  std::vector<int> parts;
  for (int part : p.parts()) {
    if (part > columns) parts.push_back(part - columns);
  }
  return Partition(std::move(parts));
}

}  // namespace

int common_leading_rows(const DegenPair& pair) {
  return common_prefix(pair.bottom(), pair.top());
}

int common_leading_columns(const DegenPair& pair) {
  return common_prefix(dual(pair.bottom()), dual(pair.top()));
}

DegenPair erase(const DegenPair& pair, int rows, int columns) {
  if (rows < 0 || rows > common_leading_rows(pair)) {
    throw ContractError("cannot erase " + std::to_string(rows) +
                        " rows: only " +
                        std::to_string(common_leading_rows(pair)) +
                        " leading rows are common");
  }
  const Partition bottom = drop_rows(pair.bottom(), rows);
  const Partition top = drop_rows(pair.top(), rows);
  const int common_columns = common_prefix(dual(bottom), dual(top));
  if (columns < 0 || columns > common_columns) {
    throw ContractError("cannot erase " + std::to_string(columns) +
                        " columns: only " + std::to_string(common_columns) +
                        " leading columns are common");
  }
  const FormType eps = flip_times(pair.eps(), columns);
  Partition new_bottom = drop_columns(bottom, columns);
  Partition new_top = drop_columns(top, columns);
  // Also rejects row counts that split a paired block of equal parts.
  return DegenPair(eps, std::move(new_bottom), std::move(new_top));
}

bool is_irreducible(const DegenPair& pair) {
  if (pair.is_trivial()) {
    throw ContractError("irreducibility is undefined for the trivial pair [" +
                        pair.top().to_string() + "]");
  }
  return common_leading_rows(pair) == 0 && common_leading_columns(pair) == 0;
}

ReductionResult irreducible_core(const DegenPair& pair, ReductionOrder order) {
  if (pair.is_trivial()) {
    throw ContractError("cannot reduce the trivial pair [" +
                        pair.top().to_string() + "]");
  }
  DegenPair current = pair;
  int total_rows = 0;
  int total_columns = 0;
  bool rows_turn = order == ReductionOrder::RowsFirst;
  int idle_steps = 0;
  while (idle_steps < 2) {
    if (rows_turn) {
      const int r = common_leading_rows(current);
      if (r > 0) current = erase(current, r, 0);
      total_rows += r;
      idle_steps = r > 0 ? 0 : idle_steps + 1;
    } else {
      const int s = common_leading_columns(current);
      if (s > 0) current = erase(current, 0, s);
      total_columns += s;
      idle_steps = s > 0 ? 0 : idle_steps + 1;
    }
    rows_turn = !rows_turn;
  }
  assert(!current.is_trivial() && !current.top().empty());

  const auto& top_parts = pair.top().parts();
  ReductionResult result{current, total_rows, total_columns,
                         std::vector<int>(top_parts.begin(),
                                          top_parts.begin() + total_rows),
                         {}};
  const Partition top_columns = dual(drop_rows(pair.top(), total_rows));
  for (int j = 0; j < total_columns; ++j) {
    result.erased_columns.push_back(top_columns[static_cast<std::size_t>(j)]);
  }
  return result;
}

DegenPair reconstruct(const ReductionResult& result) {
  const int s = result.columns;
  auto widen = [&](const Partition& core) {
    // Core rows gain s boxes; rows that vanished under column erasure come
    // back with the length read off the erased column heights.
    std::vector<int> parts;
    for (int part : core.parts()) parts.push_back(part + s);
    for (int height = static_cast<int>(core.length());; ++height) {
      int length = 0;
      for (int h : result.erased_columns) length += h > height ? 1 : 0;
      if (length == 0) break;
      parts.push_back(length);
    }
    std::vector<int> full = result.erased_rows;
    full.insert(full.end(), parts.begin(), parts.end());
    return Partition(std::move(full));
  };
  return DegenPair(flip_times(result.core.eps(), s),
                   widen(result.core.bottom()), widen(result.core.top()));
}

}  // namespace orbitnorm
