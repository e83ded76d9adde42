#include "vinpos/json.hpp"

namespace vinpos {

Json interval_json(const Interval& iv) {
  Json levels = Json::array();
  for (std::size_t r = 0; r <= iv.rank(); ++r) {
    Json level = Json::array();
    for (const auto& p : iv.level(r)) level.push_back(p.str());
    levels.push_back(std::move(level));
  }
  Json edges = Json::array();
  for (const auto& e : iv.edges()) {
    edges.push_back({iv.elements()[e.lower].str(), iv.elements()[e.upper].str()});
  }
  return {
      {"bottom", iv.bottom().str()},
      {"top", iv.top().str()},
      {"scheme", iv.scheme().fingerprint()},
      {"levels", std::move(levels)},
      {"edges", std::move(edges)},
  };
}

Json evaluation_json(const Permutation& sigma, const Permutation& tau,
                     const VincularScheme& scheme,
                     const MobiusEvaluation& eval) {
  Json out = {
      {"sigma", sigma.str()},
      {"tau", tau.str()},
      {"scheme", scheme.fingerprint()},
      {"mu", eval.value},
      {"method", std::string(to_string(eval.method))},
      {"case", nullptr},
      {"occurrences", eval.occurrence_count},
      {"rank", eval.rank},
  };
  if (eval.case_label) out["case"] = std::string(to_string(*eval.case_label));
  return out;
}

}  // namespace vinpos
