#include "orbitnorm/normality.hpp"

#include <algorithm>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Normal: return "Normal";
    case Verdict::NotNormal: return "NotNormal";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "Normal") return Verdict::Normal;
  if (s == "NotNormal") return Verdict::NotNormal;
  if (s == "Undetermined") return Verdict::Undetermined;
  throw ParseError("unknown verdict '" + s + "'");
}

Verdict verdict_from_witnesses(const std::vector<Witness>& witnesses) {
  auto any_family = [&](Family f) {
    return std::any_of(witnesses.begin(), witnesses.end(),
                       [f](const Witness& w) { return w.type.family == f; });
  };
  if (any_family(Family::E)) return Verdict::NotNormal;
  if (any_family(Family::D)) return Verdict::Undetermined;
  return Verdict::Normal;
}

NormalityVerdict decide(const EpsDiagram& eta, const DecideOptions& options) {
  std::vector<Witness> witnesses;
  for (const auto& pair : minimal_degenerations(eta, options.bound)) {
    auto [reduction, type] = classify_minimal_degeneration(pair);
    Witness w{pair.bottom(), std::move(reduction), std::move(type), 0, {}};
    w.codim = table_codim(w.type);
    if (options.oracle) {
      // Cancellation preserves codimension, so the core is an acceptable
      // stand-in when the full pair is beyond the oracle bound.
      if (pair.top().size() <= options.oracle_bound) {
        w.oracle_codim = codim_oracle(pair, options.oracle_bound);
      } else if (w.reduction.core.top().size() <= options.oracle_bound) {
        w.oracle_codim = codim_oracle(w.reduction.core, options.oracle_bound);
      }
      if (w.oracle_codim) w.codim = *w.oracle_codim;
    }
    witnesses.push_back(std::move(w));
  }
  const Verdict verdict = verdict_from_witnesses(witnesses);
  return {eta, verdict, std::move(witnesses)};
}

SurveySummary summarize(const std::vector<NormalityVerdict>& verdicts) {
  SurveySummary s;
  for (const auto& v : verdicts) {
    switch (v.verdict) {
      case Verdict::Normal: ++s.normal; break;
      case Verdict::NotNormal: ++s.not_normal; break;
      case Verdict::Undetermined: ++s.undetermined; break;
    }
  }
  return s;
}

SurveyResult survey(int n, FormType eps, const DecideOptions& options) {
  SurveyResult result{eps, n, {}, {}};
  for (const auto& eta : enumerate_eps_diagrams(n, eps, options.bound)) {
    result.verdicts.push_back(decide(eta, options));
  }
  result.summary = summarize(result.verdicts);
  return result;
}

}  // namespace orbitnorm
