#pragma once

#include <json.hpp>
#include <utility>

#include "symshuffle/series.hpp"
#include "symshuffle/shuffle.hpp"

namespace symshuffle {

using Json = nlohmann::ordered_json;

// {"kind": "...", "reversed": bool, <model parameters>}; rationals are "p/q" strings.
Json spec_to_json(const ShuffleSpec& spec);
ShuffleSpec spec_from_json(const Json& j);

// {"n": n, "spec": {...}, "weights": {"2 1 3": "1/4", ...}}
Json distribution_to_json(const PermDistribution& d, const ShuffleSpec& spec);
std::pair<ShuffleSpec, PermDistribution> distribution_from_json(const Json& j);

// {"order": N, "terms": [{"n": n, "monomial": {"1": 2, "t": 1}, "coeff": "3/4"}, ...]}
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

}  // namespace symshuffle
