#include "toggledyn/io.hpp"

namespace toggledyn {

using nlohmann::json;

void to_json(json& j, const OrbitSizes& s) {
  j = json::object();
  for (auto [k, m] : s.counts) j[std::to_string(k)] = m;
}

void to_json(json& j, const Composition& c) { j = c.parts; }

void to_json(json& j, const QPolynomial& p) { j = p.coefficients(); }

void to_json(json& j, const CspReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k}, {"fixed_from_census", row.fixed_from_census}, {"poly_value", row.poly_value},
                    {"match", row.match}});
  j = {{"omega", r.omega}, {"mismatches", r.mismatches}, {"burnside", r.burnside_ok},
       {"float_agrees", r.float_agrees}, {"rows", rows}};
}

void to_json(json& j, const Collision& c) {
  json coins = json::array();
  for (int x : c.coins()) coins.push_back(x + 1);
  j = {{"kind", to_string(c.kind)}, {"time", c.time}, {"small_step", c.small_step},
       {"coins", coins}, {"vertex", c.vertex + 1}, {"flicker", c.flicker}};
}

json census_json(const OrbitCensus& census, const Graph& g, const OperatorWord& w, bool order_only) {
  json j = {{"graph", g.to_text()}, {"word", w.to_text()}, {"n", census.n},
            {"order", census.order().str()}};
  if (order_only) return j;
  j["sizes"] = census.sizes;
  j["orbit_count"] = census.sizes.orbit_count();
  j["total"] = census.sizes.total();
  json reps = json::array();
  for (const auto& [l, size] : census.representatives)
    reps.push_back({{"labeling", l.to_text()}, {"size", size}});
  j["reps"] = reps;
  return j;
}

json sampled_census_json(const SampledCensus& census, const Graph& g, const OperatorWord& w) {
  json reps = json::array();
  for (const auto& [l, size] : census.representatives)
    reps.push_back({{"labeling", l.to_text()}, {"size", size}});
  return {{"graph", g.to_text()},
          {"word", w.to_text()},
          {"n", census.n},
          {"sampled", true},
          {"samples", census.samples},
          {"order_lower_bound", census.sizes.order().str()},
          {"sizes", census.sizes},
          {"orbit_count", census.sizes.orbit_count()},
          {"reps", reps}};
}

json small_step_json(const SmallStep& st) {
  json dirs = json::array();
  for (auto d : st.after.direction) dirs.push_back(to_string(d));
  json coins = json::array();
  for (int v : st.after.coin_vertex) coins.push_back(v + 1);
  json moved = nullptr;
  if (st.moved_coin)
    moved = {{"coin", *st.moved_coin + 1}, {"from", st.coin_from + 1}, {"to", st.coin_to + 1}};
  return {{"t", st.time},
          {"i", st.index},
          {"stone", st.stone + 1},
          {"toggle", st.toggle},
          {"carried", st.carried},
          {"replica_carried", st.carried ? json(st.replica_carried + 1) : json(nullptr)},
          {"replica_passed", st.replica_passed + 1},
          {"coin_moved", moved},
          {"coins", coins},
          {"directions", dirs},
          {"collisions", st.collisions}};
}

json fence_json(const HasseFence& fence, const std::optional<Transversal>& tr) {
  json nodes = json::array();
  for (std::size_t k = 0; k < fence.nodes().size(); ++k) {
    json node = fence.nodes()[k];
    node["id"] = k;
    node["phi"] = fence.phi()[k] ? json(*fence.phi()[k]) : json(nullptr);
    nodes.push_back(node);
  }
  json edges = json::array();
  for (const auto& e : fence.edges())
    edges.push_back({{"lower", e.lower}, {"upper", e.upper}, {"coin", e.coin + 1}, {"energy", e.energy}});
  json j = {{"n", fence.n()},          {"d", fence.d()},
            {"t_begin", fence.t_begin()}, {"t_end", fence.t_end()},
            {"period", fence.state_period()}, {"nodes", nodes},
            {"edges", edges},          {"transversal", nullptr}};
  if (tr) {
    json times = json::array();
    for (int k : tr->nodes) times.push_back(fence.nodes()[k].time);
    j["transversal"] = {{"nodes", tr->nodes}, {"times", times}, {"energies", tr->energies},
                        {"canonical", canonical_rotation(tr->energies)},
                        {"rot_orbit_size", rot_orbit_size(tr->energies)}};
  }
  return j;
}

}  // namespace toggledyn
