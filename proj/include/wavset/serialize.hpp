#pragma once

#include "wavset/acceptance.hpp"
#include "wavset/analysis.hpp"
#include "wavset/congruence.hpp"
#include "wavset/frames.hpp"
#include "wavset/interpolation.hpp"
#include "wavset/unitary_lab.hpp"

#include <json.hpp>

namespace wavset {

using Json = nlohmann::json;

// Exact values: {"num": p, "den": q}, meaning (p/q)·π for endpoints and
// offsets. Integers beyond 64 bits are written as decimal strings. Readers
// also accept the string form "p/q".
Json big_to_json(const BigInt& v);
Json to_json(const PiRational& x);
PiRational pi_rational_from_json(const Json& j);

/// {"unit": "pi", "intervals": [{"a": .., "b": ..}, ...]}
Json to_json(const Interval& iv);
Json to_json(const PiSet& e);
Interval interval_from_json(const Json& j);
PiSet pi_set_from_json(const Json& j);

Json to_json(const TranslationWitness& w);
Json to_json(const DilationWitness& w);
Json to_json(const WaveletVerdict& v);

/// Complex numbers are [re, im] pairs.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"domain", "target", "pieces": [{"piece", "offset", "shift"}]}; shift is
/// offset/2π when that is an integer, null otherwise.
Json to_json(const InterpolationMap& m);
InterpolationMap map_from_json(const Json& j);

Json to_json(const FrequencySymbol& s);
FrequencySymbol symbol_from_json(const Json& j);

Json to_json(const DilationPeriodicFunction& h);
DilationPeriodicFunction periodic_from_json(const Json& j);

/// {"order": k, "coefficients": [...], "sigma": map} or, instead of "sigma",
/// "e" and "f" sets from which the map is built.
Json to_json(const CoefficientFamily& f);
CoefficientFamily family_from_json(const Json& j);

Json to_json(const CriterionReport& r);
Json to_json(const GramWindow& g);

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
/// A vector is an n×1 matrix; a bare list of pairs is also accepted.
Vector vector_from_json(const Json& j);

/// {"elements": [matrix, ...]} or {"group_table": [[...], ...]}.
Json to_json(const UnitarySystem& u);
UnitarySystem system_from_json(const Json& j);

Json to_json(const OperatorSubspaceBasis& b);
Json to_json(const RankOneDecomposition& d);

/// Timings are left out unless asked for, so reruns are byte-identical.
Json to_json(const AcceptanceReport& r, bool include_timing);

}  // namespace wavset
