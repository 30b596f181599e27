#include "toggledyn/config.hpp"

#include <set>
#include <sstream>

#include "toggledyn/error.hpp"
#include "toggledyn/operators.hpp"

namespace toggledyn {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + tok + "'");
    }
  }
  return out;
}

std::string RunConfig::to_text() const {
  RunConfig def;
  std::ostringstream out;
  auto put = [&](const char* key, const std::string& v, const std::string& dv) {
    if (v != dv) out << key << "=" << v << "\n";
  };
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  auto flag = [](bool v) { return std::string(v ? "true" : "false"); };
  put("command", command, def.command);
  put("suite", suite, def.suite);
  put("graph", graph, def.graph);
  put("op", op, def.op);
  put("word", word, def.word);
  put("pi", pi, def.pi);
  put("b", b, def.b);
  put("n", opt(n), "");
  put("n_min", opt(n_min), "");
  put("d", opt(d), "");
  put("seed_labeling", seed_labeling, def.seed_labeling);
  put("seeds", seeds, def.seeds);
  put("rng_seed", std::to_string(rng_seed), std::to_string(def.rng_seed));
  put("format", format, def.format);
  put("max_n", std::to_string(max_n), std::to_string(def.max_n));
  put("force", flag(force), flag(def.force));
  put("threads", std::to_string(threads), std::to_string(def.threads));
  put("order_only", flag(order_only), flag(def.order_only));
  put("sample", std::to_string(sample), std::to_string(def.sample));
  put("until_period", flag(until_period), flag(def.until_period));
  put("steps", std::to_string(steps), std::to_string(def.steps));
  put("render", render, def.render);
  put("fence", flag(fence), flag(def.fence));
  return out.str();
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  auto to_bool = [](const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw InvalidArgument("expected true or false, got '" + v + "'");
  };
  auto to_ll = [](const std::string& v) {
    try {
      return std::stoll(v);
    } catch (const std::exception&) {
      throw InvalidArgument("expected an integer, got '" + v + "'");
    }
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument("config line without '=': " + line);
    std::string k = line.substr(0, eq), v = line.substr(eq + 1);
    if (k == "command") c.command = v;
    else if (k == "suite") c.suite = v;
    else if (k == "graph") c.graph = v;
    else if (k == "op") c.op = v;
    else if (k == "word") c.word = v;
    else if (k == "pi") c.pi = v;
    else if (k == "b") c.b = v;
    else if (k == "n") c.n = static_cast<int>(to_ll(v));
    else if (k == "n_min") c.n_min = static_cast<int>(to_ll(v));
    else if (k == "d") c.d = static_cast<int>(to_ll(v));
    else if (k == "seed_labeling") c.seed_labeling = v;
    else if (k == "seeds") c.seeds = v;
    else if (k == "rng_seed") c.rng_seed = static_cast<std::uint64_t>(to_ll(v));
    else if (k == "format") c.format = v;
    else if (k == "max_n") c.max_n = static_cast<int>(to_ll(v));
    else if (k == "force") c.force = to_bool(v);
    else if (k == "threads") c.threads = static_cast<unsigned>(to_ll(v));
    else if (k == "order_only") c.order_only = to_bool(v);
    else if (k == "sample") c.sample = to_ll(v);
    else if (k == "until_period") c.until_period = to_bool(v);
    else if (k == "steps") c.steps = to_ll(v);
    else if (k == "render") c.render = v;
    else if (k == "fence") c.fence = to_bool(v);
    else throw InvalidArgument("unknown config key: " + k);
  }
  return c;
}

Graph config_graph(const RunConfig& cfg) {
  if (!cfg.graph.empty()) return Graph::parse(cfg.graph);
  if (!cfg.n) throw InvalidArgument("either --graph or --n is required");
  return Graph::path(*cfg.n);
}

OperatorWord config_word(const RunConfig& cfg, int n) {
  if (cfg.op.empty() || cfg.op == "word") {
    if (cfg.word.empty()) throw InvalidArgument("no operator: give --op or --word");
    return OperatorWord::parse(n, cfg.word);
  }
  auto need_d = [&]() {
    if (!cfg.d) throw InvalidArgument("--op " + cfg.op + " needs --d");
    if (*cfg.d < 1 || *cfg.d > n - 1) throw InvalidArgument("d must satisfy 1 <= d <= n-1");
    return *cfg.d;
  };
  auto subset = [&]() {
    if (cfg.b == "R") {
      int d = need_d();
      if (2 * d > n) throw InvalidArgument("the canonical set R needs d <= n/2");
      return canonical_S(n, d).complement_of_minus_one();
    }
    if (cfg.b.empty()) {
      std::set<int> s;
      for (int i = 1; i <= need_d(); ++i) s.insert(i);
      return s;
    }
    auto v = parse_int_list(cfg.b);
    return std::set<int>(v.begin(), v.end());
  };
  if (cfg.op == "pro") return promotion_word(n);
  if (cfg.op == "tpro") return toric_word(n);
  if (cfg.op == "tpro-pi") {
    auto pi = parse_int_list(cfg.pi);
    if (static_cast<int>(pi.size()) != n) throw InvalidArgument("--pi must list n values");
    return permutoric_word(pi);
  }
  if (cfg.op == "tpro-beta") return permutoric_word(AcyclicOrientation::source_d_sink_n(n, need_d()));
  if (cfg.op == "bro") return broken_word(n, subset());
  if (cfg.op == "cyc-bro") return cyc_broken_word(n, subset());
  if (cfg.op == "phi") return phi_word(n, need_d());
  throw InvalidArgument("unknown operator: " + cfg.op);
}

}  // namespace toggledyn
