#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitnorm/classification.hpp"
#include "orbitnorm/matrix_oracle.hpp"
#include "orbitnorm/partition.hpp"

namespace orbitnorm {

// Normality of an orbit closure is decided from the classified cores of its
// minimal degenerations: a core of family e makes the closure non-normal, a
// core of family d (with no e present) cannot be decided, and anything else
// leaves the closure normal. Only codimension-2 orbits matter for normality
// and every codimension-2 orbit in the closure is a minimal degeneration, so
// looking one step down is enough.

enum class Verdict { Normal, NotNormal, Undetermined };

std::string to_string(Verdict v);
/// Throws ParseError for anything but the three verdict names.
Verdict verdict_from_string(const std::string& s);

struct Witness {
  Partition sigma;
  ReductionResult reduction;
  DegenType type;
  /// Table codimension, or the oracle value when the oracle ran.
  int codim = 0;
  std::optional<int> oracle_codim;
};

struct NormalityVerdict {
  EpsDiagram eta;
  Verdict verdict;
  std::vector<Witness> witnesses;
};

struct DecideOptions {
  int bound = kDefaultEnumerationBound;
  /// Cross-check every witness codimension against the matrix oracle.
  bool oracle = false;
  int oracle_bound = kDefaultOracleBound;
};

/// NotNormal iff some witness is family e; otherwise Undetermined iff some
/// witness is family d; otherwise Normal.
Verdict verdict_from_witnesses(const std::vector<Witness>& witnesses);

/// Classifies every minimal degeneration of `eta`. Throws CapacityError
/// beyond the enumeration bound; NotMinimalIrreducible would indicate an
/// internal error.
NormalityVerdict decide(const EpsDiagram& eta, const DecideOptions& options = {});

struct SurveySummary {
  int normal = 0;
  int not_normal = 0;
  int undetermined = 0;
};

struct SurveyResult {
  FormType eps;
  int n;
  std::vector<NormalityVerdict> verdicts;  // enumeration order
  SurveySummary summary;
};

SurveySummary summarize(const std::vector<NormalityVerdict>& verdicts);

SurveyResult survey(int n, FormType eps, const DecideOptions& options = {});

}  // namespace orbitnorm
