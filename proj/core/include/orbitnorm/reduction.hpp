#pragma once

#include <vector>

#include "orbitnorm/degeneration.hpp"

namespace orbitnorm {

/// Largest r such that the first r rows of bottom and top coincide.
int common_leading_rows(const DegenPair& pair);

/// Largest s such that the first s columns of bottom and top coincide.
int common_leading_columns(const DegenPair& pair);

/// Drops the first `rows` rows of both members, then the first `columns`
/// columns of what remains. The form type flips once per erased column.
/// Throws ContractError if the rows/columns are not common, or if the
/// truncated diagrams are not valid for the new form type (which can only
/// happen when `rows` splits a block of equal parts).
DegenPair erase(const DegenPair& pair, int rows, int columns);

/// No common leading row and no common leading column. Throws ContractError
/// on a trivial pair.
bool is_irreducible(const DegenPair& pair);

/// Outcome of cancelling common leading rows and columns to a fixpoint.
///
/// The cancelled region is always "first r rows, then first s columns of
/// what remains", whatever order the cancellations were performed in, so
/// the ledger records the original row lengths and the heights of the
/// erased columns measured after row erasure.
struct ReductionResult {
  DegenPair core;
  int rows = 0;                     // r
  int columns = 0;                  // s
  std::vector<int> erased_rows;     // original lengths of the r rows
  std::vector<int> erased_columns;  // heights of the s columns
};

enum class ReductionOrder { RowsFirst, ColumnsFirst };

/// Alternates maximal row and column cancellation until neither applies.
/// The core's form type is (-1)^s times the input's.
ReductionResult irreducible_core(
    const DegenPair& pair, ReductionOrder order = ReductionOrder::RowsFirst);

/// Re-adds the erased columns, then the erased rows, to the core.
DegenPair reconstruct(const ReductionResult& result);

}  // namespace orbitnorm
