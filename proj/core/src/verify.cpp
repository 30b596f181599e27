#include "toggledyn/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "toggledyn/census.hpp"
#include "toggledyn/error.hpp"
#include "toggledyn/fence.hpp"
#include "toggledyn/io.hpp"
#include "toggledyn/operators.hpp"
#include "toggledyn/residue.hpp"
#include "toggledyn/sieving.hpp"

namespace toggledyn {

using nlohmann::json;

void SuiteReport::record(json instance, bool pass) {
  ++checked;
  if (!pass) ++failed;
  instance["pass"] = pass;
  instances.push_back(std::move(instance));
}

json SuiteReport::to_json() const {
  return {{"suite", suite}, {"ok", ok()}, {"checked", checked}, {"failed", failed},
          {"instances", instances}};
}

namespace {

std::string big(const BigInt& x) { return x.str(); }

json sizes_json(const OrbitSizes& s) { return json(s); }

CensusOptions census_opts(const SuiteOptions& o) {
  CensusOptions c;
  c.threads = o.threads;
  c.keep_representatives = false;
  return c;
}

std::vector<int> d_values(const SuiteOptions& o, int d_max) {
  std::vector<int> out;
  for (int d = 1; d <= d_max; ++d)
    if (!o.d || *o.d == d) out.push_back(d);
  return out;
}

std::vector<Labeling> seed_labelings(const SuiteOptions& o, int n) {
  std::vector<Labeling> out;
  long long total = factorial(n);
  if (!o.seeds || *o.seeds >= total) {
    for (long long r = 0; r < total; ++r) out.push_back(Labeling::unrank(n, r));
    return out;
  }
  std::mt19937_64 rng(o.rng_seed);
  std::uniform_int_distribution<long long> pick(0, total - 1);
  for (long long k = 0; k < *o.seeds; ++k) out.push_back(Labeling::unrank(n, pick(rng)));
  return out;
}

std::set<int> initial_segment(int d) {
  std::set<int> b;
  for (int i = 1; i <= d; ++i) b.insert(i);
  return b;
}

json csp_json(const CspReport& r) {
  return {{"omega", r.omega}, {"mismatches", r.mismatches}, {"burnside", r.burnside_ok},
          {"float_agrees", r.float_agrees}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "thm-toric",   "thm-main",      "thm-broken-1d", "thm-broken-R",
      "prop-divisibility", "prop-homomesy", "prop-tpro-bro", "omega-counts",
      "fence-laws",  "phi-identities", "rot-csp"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& v = suite_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "thm-toric") return verify_thm_toric(opts);
  if (name == "thm-main") return verify_thm_main(opts);
  if (name == "thm-broken-1d") return verify_thm_broken_1d(opts);
  if (name == "thm-broken-R") return verify_thm_broken_r(opts);
  if (name == "prop-divisibility") return verify_prop_divisibility(opts);
  if (name == "prop-homomesy") return verify_prop_homomesy(opts);
  if (name == "prop-tpro-bro") return verify_prop_tpro_bro(opts);
  if (name == "omega-counts") return verify_omega_counts(opts);
  if (name == "fence-laws") return verify_fence_laws(opts);
  if (name == "phi-identities") return verify_phi_identities(opts);
  if (name == "rot-csp") return verify_rot_csp(opts);
  throw InvalidArgument("unknown suite: " + name);
}

SuiteReport verify_thm_toric(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "thm-toric";
  auto check = [&](const Graph& g, const char* kind) {
    int n = g.size();
    auto w = toric_word(n);
    std::size_t bad_orbits = 0, orbits = 0;
    for_each_orbit(g, w, [&](const std::vector<Labeling>& orbit) {
      ++orbits;
      for (const auto& s : orbit) {
        long long t = g.component_size_of(s.vertex_of(1));
        long long want = (n - 1) * t / std::gcd(t, static_cast<long long>(n));
        if (want != static_cast<long long>(orbit.size())) {
          ++bad_orbits;
          break;
        }
      }
    }, census_opts(opts));
    rep.record({{"graph", g.to_text()}, {"kind", kind}, {"orbits", orbits}, {"bad_orbits", bad_orbits}},
               bad_orbits == 0);
  };
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    for (const auto& t : unlabeled_trees(n)) check(t, "tree");
    for (int a = 1; a < n; ++a) {
      int b = n - a;
      if (a < b) continue;
      for (const auto& ta : unlabeled_trees(a))
        for (const auto& tb : unlabeled_trees(b)) check(disjoint_union(ta, tb), "forest");
    }
  }
  return rep;
}

SuiteReport verify_thm_main(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "thm-main";
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    Graph g = Graph::path(n);
    std::map<int, QPolynomial> polys;
    auto run = [&](const std::vector<int>& pi, int d) {
      if (opts.d && *opts.d != d) return;
      if (!polys.count(d)) polys.emplace(d, main_sieving_polynomial(n, d));
      auto census = full_census(g, permutoric_word(pi), census_opts(opts));
      auto csp = csp_verify(census.sizes, polys.at(d));
      bool order_ok = census.order() == d * (n - d);
      json pj = pi;
      rep.record({{"n", n}, {"d", d}, {"pi", pj}, {"order", big(census.order())},
                  {"expected_order", d * (n - d)}, {"csp", csp_json(csp)}},
                 order_ok && csp.passed());
    };
    if (n <= 6) {
      std::vector<int> pi(n);
      std::iota(pi.begin(), pi.end(), 1);
      do {
        run(pi, cyclic_descents(inverse_permutation(pi)));
      } while (std::next_permutation(pi.begin(), pi.end()));
    } else {
      for (int d = 1; d < n; ++d)
        run(AcyclicOrientation::source_d_sink_n(n, d).linear_extension(), d);
    }
  }
  return rep;
}

SuiteReport verify_thm_broken_1d(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "thm-broken-1d";
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    for (int d : d_values(opts, n - 1)) {
      auto census = full_census(Graph::path(n), cyc_broken_word(n, initial_segment(d)), census_opts(opts));
      auto csp = csp_verify(census.sizes, broken_initial_polynomial(n, d));
      bool order_ok = census.order() == (n - d) * n;
      rep.record({{"n", n}, {"d", d}, {"order", big(census.order())}, {"expected_order", (n - d) * n},
                  {"sizes", sizes_json(census.sizes)}, {"csp", csp_json(csp)}},
                 order_ok && csp.passed());
    }
  }
  return rep;
}

SuiteReport verify_thm_broken_r(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "thm-broken-R";
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    for (int d : d_values(opts, n / 2)) {
      auto r = canonical_S(n, d).complement_of_minus_one();
      auto census = full_census(Graph::path(n), cyc_broken_word(n, r), census_opts(opts));
      auto csp = csp_verify(census.sizes, broken_r_polynomial(n, d));
      bool order_ok = census.order() == d * n;
      rep.record({{"n", n}, {"d", d}, {"R", json(std::vector<int>(r.begin(), r.end()))},
                  {"order", big(census.order())}, {"expected_order", d * n},
                  {"sizes", sizes_json(census.sizes)}, {"csp", csp_json(csp)}},
                 order_ok && csp.passed());
    }
  }
  return rep;
}

SuiteReport verify_prop_divisibility(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "prop-divisibility";
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    Graph g = Graph::path(n);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::set<int> ccw;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) ccw.insert(i + 1);
      AcyclicOrientation beta(n, ccw);
      int d = beta.d();
      if (opts.d && *opts.d != d) continue;
      auto census = full_census(g, permutoric_word(beta), census_opts(opts));
      std::uint64_t m = std::lcm(d, n - d);
      rep.record({{"n", n}, {"d", d}, {"ccw", json(std::vector<int>(ccw.begin(), ccw.end()))},
                  {"lcm", m}, {"sizes", sizes_json(census.sizes)}},
                 census.sizes.all_divisible_by(m));
    }
  }
  return rep;
}

SuiteReport verify_prop_homomesy(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "prop-homomesy";
  std::mt19937_64 rng(opts.rng_seed);
  long long count = opts.seeds.value_or(200);
  int lo = std::max(2, opts.n_min);
  for (long long k = 0; k < count; ++k) {
    int n = std::uniform_int_distribution<int>(lo, std::max(lo, opts.n_max))(rng);
    double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    Graph g = random_connected_graph(n, p, rng);
    std::set<int> b;
    for (int x = 1; x <= n; ++x)
      if (rng() & 1) b.insert(x);
    if (static_cast<int>(b.size()) == n) b.erase(1 + static_cast<int>(rng() % n));
    std::vector<int> allowed;
    for (int i = 1; i <= n; ++i)
      if (!b.count(i == 1 ? n : i - 1)) allowed.push_back(i);
    int i = allowed[rng() % allowed.size()];
    int v = static_cast<int>(rng() % n);
    auto h = homomesy_check(g, cyc_broken_word(n, b), Statistic::indicator(v, i), Rational(1, n));
    rep.record({{"graph", g.to_text()}, {"B", json(std::vector<int>(b.begin(), b.end()))},
                {"v", v + 1}, {"i", i}, {"orbits", h.averages.size()}},
               h.homomesic);
  }
  return rep;
}

SuiteReport verify_prop_tpro_bro(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "prop-tpro-bro";
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    Graph g = Graph::path(n);
    for (int d : d_values(opts, n / 2)) {
      auto s = canonical_S(n, d);
      auto tpro = permutoric_word(AcyclicOrientation::from_sources(n, s.s));
      long long top = 2LL * std::lcm(d, n - d);
      std::size_t bad = 0;
      for (long long gamma = 0; gamma <= top; ++gamma) {
        auto dec = tpro_bro_decomposition(s, gamma);
        if (static_cast<long long>(dec.j.size()) != dec.r || !maps_equal(g, tpro.power(gamma), dec.word))
          ++bad;
      }
      rep.record({{"n", n}, {"d", d}, {"gammas", top + 1}, {"bad", bad}}, bad == 0);
    }
  }
  return rep;
}

SuiteReport verify_phi_identities(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "phi-identities";
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    Graph g = Graph::path(n);
    for (int d : d_values(opts, n - 1)) {
      auto tpro = permutoric_word(AcyclicOrientation::source_d_sink_n(n, d));
      bool word = maps_equal(g, tpro.power(d), tpro_beta_power_d_word(n, d));
      bool inverse_bro = maps_equal(g, tpro.power(d), inverse_cyc_bro_power_word(n, d));
      bool phi = maps_equal(g, phi_word(n, d).power(n / std::gcd(n, d)), tpro.power(std::lcm(d, n - d)));
      rep.record({{"n", n}, {"d", d}, {"tpro_d_word", word}, {"inverse_cyc_bro", inverse_bro}, {"phi_power", phi}},
                 word && inverse_bro && phi);
    }
  }
  return rep;
}

SuiteReport verify_rot_csp(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "rot-csp";
  for (int n = std::max(1, opts.n_min); n <= opts.n_max; ++n) {
    for (int d : d_values(opts, n)) {
      auto sizes = rot_census(n, d);
      auto csp = csp_verify(sizes, q_binomial(n - 1, d - 1));
      rep.record({{"n", n}, {"d", d}, {"sizes", sizes_json(sizes)}, {"csp", csp_json(csp)}}, csp.passed());
    }
  }
  return rep;
}

SuiteReport verify_omega_counts(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "omega-counts";
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    Graph g = Graph::path(n);
    for (int d : d_values(opts, n - 1)) {
      std::map<Composition, long long> fiber;
      std::size_t scale_bad = 0, class_bad = 0, rev_bad = 0, orbits = 0;
      bool every_member = n <= 6;
      for_each_orbit(g, phi_word(n, d), [&](const std::vector<Labeling>& orbit) {
        ++orbits;
        auto om = omega(orbit.front(), d);
        if (static_cast<long long>(orbit.size()) * d != static_cast<long long>(om.orbit_size) * n)
          ++scale_bad;
        ++fiber[om.canonical];
        if (every_member) {
          for (std::size_t k = 1; k < orbit.size(); ++k)
            if (omega(orbit[k], d).canonical != om.canonical) {
              ++class_bad;
              break;
            }
          std::vector<int> img(n);
          for (int v = 0; v < n; ++v) img[v] = residue(d + 1 - orbit.front().label_of(v), n);
          if (omega(Labeling(img), d).canonical != canonical_rotation(reversed(om.energies))) ++rev_bad;
        }
      }, census_opts(opts));

      long long want = factorial(d) * factorial(n - d);
      std::size_t fiber_bad = 0;
      json fj = json::object();
      for (const auto& [c, k] : fiber) {
        std::string key;
        for (int p : c.parts) key += (key.empty() ? "" : ",") + std::to_string(p);
        fj[key] = k;
        if (k != want) ++fiber_bad;
      }
      auto rots = rot_census(n, d);
      bool all_hit = fiber.size() == rots.orbit_count();

      OrbitSizes predicted;
      std::uint64_t mult = n * factorial(d - 1) * factorial(n - d - 1);
      for (auto [k, m] : rots.counts) predicted.counts[(n - d) * k] += mult * m;
      auto tpro = full_census(g, permutoric_word(AcyclicOrientation::source_d_sink_n(n, d)), census_opts(opts));
      bool multiset_ok = predicted == tpro.sizes;

      rep.record({{"n", n}, {"d", d}, {"phi_orbits", orbits}, {"scale_violations", scale_bad},
                  {"fiber_size", want}, {"fibers", fj}, {"fiber_violations", fiber_bad},
                  {"every_rot_orbit_hit", all_hit}, {"class_violations", class_bad},
                  {"rev_violations", rev_bad}, {"tpro_predicted", sizes_json(predicted)},
                  {"tpro_census", sizes_json(tpro.sizes)}},
                 scale_bad == 0 && fiber_bad == 0 && all_hit && class_bad == 0 && rev_bad == 0 &&
                     multiset_ok);
    }
  }
  return rep;
}

SuiteReport verify_fence_laws(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = "fence-laws";
  for (int n = std::max(2, opts.n_min); n <= opts.n_max; ++n) {
    auto seeds = seed_labelings(opts, n);
    for (int d : d_values(opts, n - 1)) {
      FenceLawReport total;
      std::size_t bad_seeds = 0;
      json first_bad;
      for (const auto& s : seeds) {
        Timeline tl(s, d);
        auto r = check_fence_laws(build_fence(tl, 3));
        total.diamonds += r.diamonds;
        total.half_diamonds += r.half_diamonds;
        total.diamond_violations += r.diamond_violations;
        total.half_diamond_violations += r.half_diamond_violations;
        total.timing_violations += r.timing_violations;
        total.rot_violations += r.rot_violations;
        total.regularity_violations += r.regularity_violations;
        total.transversals += r.transversals;
        if (!r.ok()) {
          if (!bad_seeds) first_bad = s.to_text();
          ++bad_seeds;
        }
      }
      rep.record({{"n", n}, {"d", d}, {"seeds", seeds.size()}, {"diamonds", total.diamonds},
                  {"half_diamonds", total.half_diamonds},
                  {"diamond_violations", total.diamond_violations},
                  {"half_diamond_violations", total.half_diamond_violations},
                  {"timing_violations", total.timing_violations},
                  {"rot_violations", total.rot_violations},
                  {"regularity_violations", total.regularity_violations},
                  {"transversals", total.transversals}, {"bad_seeds", bad_seeds},
                  {"first_bad_seed", first_bad}},
                 bad_seeds == 0);
    }
  }
  return rep;
}

}  // namespace toggledyn
