#pragma once

#include <json.hpp>

#include "vinpos/mobius.hpp"
#include "vinpos/poset.hpp"

namespace vinpos {

using Json = nlohmann::ordered_json;

/// { "bottom", "top", "scheme", "levels": [[str]], "edges": [[lower, upper]] }
Json interval_json(const Interval& iv);

/// { "sigma", "tau", "scheme", "mu", "method", "case", "occurrences", "rank" }
Json evaluation_json(const Permutation& sigma, const Permutation& tau,
                     const VincularScheme& scheme,
                     const MobiusEvaluation& eval);

}  // namespace vinpos
