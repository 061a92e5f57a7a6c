#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "orbitnorm/classification.hpp"
#include "orbitnorm/degeneration.hpp"
#include "orbitnorm/matrix_oracle.hpp"
#include "orbitnorm/normality.hpp"
#include "orbitnorm/reduction.hpp"

namespace orbitnorm {

// JSON documents use insertion-ordered objects so that output is
// byte-stable. Rationals are written as "p/q" strings.

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const DegenPair& pair);
DegenPair degen_pair_from_json(const Json& j);

Json to_json(const ReductionResult& r);
ReductionResult reduction_from_json(const Json& j);

Json to_json(const DegenType& t);
DegenType degen_type_from_json(const Json& j);

Json to_json(const PosetGraph& g);

/// DOT digraph: nodes labelled by partition, edges "family,codim" when
/// annotated.
std::string to_dot(const PosetGraph& g);

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

Json to_json(const NilpotentModel& m);
NilpotentModel nilpotent_model_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const NormalityVerdict& v);
NormalityVerdict verdict_from_json(const Json& j);

Json to_json(const SurveyResult& s);

}  // namespace orbitnorm
