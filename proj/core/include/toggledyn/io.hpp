#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "toggledyn/census.hpp"
#include "toggledyn/fence.hpp"
#include "toggledyn/sieving.hpp"
#include "toggledyn/stones.hpp"

namespace toggledyn {

// Vertices, coins and stones are 1-based in every JSON document.
void to_json(nlohmann::json& j, const OrbitSizes& s);
void to_json(nlohmann::json& j, const Composition& c);
// Ascending coefficients.
void to_json(nlohmann::json& j, const QPolynomial& p);
void to_json(nlohmann::json& j, const CspReport& r);
void to_json(nlohmann::json& j, const Collision& c);

nlohmann::json census_json(const OrbitCensus& census, const Graph& g, const OperatorWord& w,
                           bool order_only);
// Sampled form: "order_lower_bound" is the lcm of the orbit sizes reached.
nlohmann::json sampled_census_json(const SampledCensus& census, const Graph& g, const OperatorWord& w);
// One trace record per small step.
nlohmann::json small_step_json(const SmallStep& st);
nlohmann::json fence_json(const HasseFence& fence, const std::optional<Transversal>& tr);

}  // namespace toggledyn
