#include "toggledyn/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "toggledyn/error.hpp"

namespace toggledyn {

namespace {

using Buffer = CompiledWord::Buffer;

std::uint64_t rank_of(const Buffer& img, int n) {
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int a = img[i];
    int smaller_unused = a - __builtin_popcount(used & ((1u << a) - 1));
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << a;
  }
  return rank;
}

void unrank_into(std::uint64_t rank, int n, Buffer& img, Buffer& inv) {
  int labels[Labeling::kMaxN];
  permutation_unrank(rank, n, labels);
  for (int v = 0; v < n; ++v) {
    img[v] = static_cast<std::uint8_t>(labels[v] - 1);
    inv[labels[v] - 1] = static_cast<std::uint8_t>(v);
  }
}

class AtomicBitset {
 public:
  explicit AtomicBitset(std::uint64_t bits) : words_((bits + 63) / 64) {
    for (auto& w : words_) w.store(0, std::memory_order_relaxed);
  }
  bool test(std::uint64_t i) const {
    return (words_[i >> 6].load(std::memory_order_relaxed) >> (i & 63)) & 1u;
  }
  void set(std::uint64_t i) { words_[i >> 6].fetch_or(1ull << (i & 63), std::memory_order_relaxed); }

 private:
  std::vector<std::atomic<std::uint64_t>> words_;
};

void check_bound(int n, const CensusOptions& opts) {
  require(n >= 1 && n <= CompiledWord::kMaxN, "census supports 1 <= n <= 16");
  if (n > opts.max_n && !opts.force)
    throw BoundExceeded("census over " + std::to_string(n) + "! labelings exceeds the bound n <= " +
                        std::to_string(opts.max_n) + "; pass --force to override");
}

}  // namespace

std::uint64_t OrbitSizes::orbit_count() const {
  std::uint64_t c = 0;
  for (auto [s, m] : counts) c += m;
  return c;
}

std::uint64_t OrbitSizes::total() const {
  std::uint64_t c = 0;
  for (auto [s, m] : counts) c += s * m;
  return c;
}

BigInt OrbitSizes::order() const {
  BigInt l = 1;
  for (auto [s, m] : counts) {
    BigInt sz = s;
    l = l / boost::multiprecision::gcd(l, sz) * sz;
  }
  return l;
}

std::uint64_t OrbitSizes::fixed_points(long long k) const {
  std::uint64_t c = 0;
  for (auto [s, m] : counts) {
    long long r = k % static_cast<long long>(s);
    if (r == 0) c += s * m;
  }
  return c;
}

bool OrbitSizes::all_divisible_by(std::uint64_t m) const {
  return std::all_of(counts.begin(), counts.end(), [&](auto& e) { return e.first % m == 0; });
}

std::string to_string(const OrbitSizes& sizes) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [s, m] : sizes.counts) {
    os << (first ? "" : ", ") << s << "^" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

int default_max_n() {
  if (const char* env = std::getenv("TOGGLEDYN_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 9;
}

std::vector<Labeling> orbit_of(const Labeling& sigma, const OperatorWord& w, const Graph& g) {
  CompiledWord cw(w, g);
  std::vector<Labeling> out{sigma};
  Labeling x = cw.apply(sigma);
  while (!(x == sigma)) {
    out.push_back(x);
    x = cw.apply(x);
  }
  return out;
}

OrbitCensus full_census(const Graph& g, const OperatorWord& w, const CensusOptions& opts) {
  const int n = g.size();
  check_bound(n, opts);
  CompiledWord cw(w, g);
  const std::uint64_t total = factorial(n);
  AtomicBitset visited(total);

  OrbitCensus census;
  census.n = n;
  census.word = w.to_text();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> found;  // (min rank, size)

  if (opts.threads <= 1) {
    Buffer img{}, inv{};
    for (std::uint64_t r = 0; r < total; ++r) {
      if (visited.test(r)) continue;
      unrank_into(r, n, img, inv);
      std::uint64_t len = 0;
      std::uint64_t cur = r;
      do {
        visited.set(cur);
        cw.apply(img, inv);
        cur = rank_of(img, n);
        ++len;
      } while (cur != r);
      found.emplace_back(r, len);
    }
  } else {
    // Each start owns its orbit only if it is the orbit's minimal rank; a walk
    // aborts as soon as it meets a smaller rank.
    std::mutex mu;
    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t kChunk = 1024;
    auto worker = [&] {
      Buffer img{}, inv{};
      std::vector<std::pair<std::uint64_t, std::uint64_t>> local;
      std::vector<std::uint64_t> members;
      for (;;) {
        std::uint64_t lo = next.fetch_add(kChunk);
        if (lo >= total) break;
        std::uint64_t hi = std::min(total, lo + kChunk);
        for (std::uint64_t r = lo; r < hi; ++r) {
          if (visited.test(r)) continue;
          unrank_into(r, n, img, inv);
          members.clear();
          bool owner = true;
          std::uint64_t cur = r;
          do {
            members.push_back(cur);
            cw.apply(img, inv);
            cur = rank_of(img, n);
            if (cur < r) {
              owner = false;
              break;
            }
          } while (cur != r);
          if (!owner) continue;
          for (auto m : members) visited.set(m);
          local.emplace_back(r, members.size());
        }
      }
      std::lock_guard<std::mutex> lock(mu);
      found.insert(found.end(), local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::sort(found.begin(), found.end());
  }

  for (auto [r, len] : found) {
    ++census.sizes.counts[len];
    if (opts.keep_representatives) census.representatives.emplace_back(Labeling::unrank(n, r), len);
  }
  return census;
}

BigInt order_of(const Graph& g, const OperatorWord& w, const CensusOptions& opts) {
  CensusOptions o = opts;
  o.keep_representatives = false;
  return full_census(g, w, o).order();
}

bool divisibility_check(const OrbitCensus& census, std::uint64_t m) {
  return census.sizes.all_divisible_by(m);
}

SampledCensus sampled_census(const Graph& g, const OperatorWord& w, std::uint64_t samples,
                             std::uint64_t rng_seed, std::uint64_t max_orbit) {
  const int n = g.size();
  if (n < 1 || n > CompiledWord::kMaxN)
    throw InvalidArgument("sampled census supports 1 <= n <= " + std::to_string(CompiledWord::kMaxN));
  CompiledWord cw(w, g);
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, factorial(n) - 1);
  std::map<Labeling, std::uint64_t> found;  // smallest member -> orbit size
  Buffer img{}, inv{};
  for (std::uint64_t k = 0; k < samples; ++k) {
    unrank_into(pick(rng), n, img, inv);
    const Buffer start = img;
    Buffer least = img;
    std::uint64_t len = 0;
    do {
      if (std::lexicographical_compare(img.begin(), img.begin() + n, least.begin(), least.begin() + n))
        least = img;
      cw.apply(img, inv);
      if (++len > max_orbit)
        throw BoundExceeded("orbit longer than " + std::to_string(max_orbit) + " steps");
    } while (!std::equal(img.begin(), img.begin() + n, start.begin()));
    found.emplace(from_buffer(least, n), len);
  }
  SampledCensus out;
  out.n = n;
  out.samples = samples;
  for (const auto& [rep, len] : found) {
    ++out.sizes.counts[len];
    out.representatives.emplace_back(rep, len);
  }
  return out;
}

void for_each_orbit(const Graph& g, const OperatorWord& w,
                    const std::function<void(const std::vector<Labeling>&)>& visit,
                    const CensusOptions& opts) {
  const int n = g.size();
  check_bound(n, opts);
  CompiledWord cw(w, g);
  const std::uint64_t total = factorial(n);
  AtomicBitset visited(total);
  Buffer img{}, inv{};
  std::vector<Labeling> orbit;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (visited.test(r)) continue;
    unrank_into(r, n, img, inv);
    orbit.clear();
    std::uint64_t cur = r;
    do {
      visited.set(cur);
      orbit.push_back(from_buffer(img, n));
      cw.apply(img, inv);
      cur = rank_of(img, n);
    } while (cur != r);
    visit(orbit);
  }
}

std::optional<Labeling> first_difference(const Graph& g, const OperatorWord& a, const OperatorWord& b) {
  const int n = g.size();
  CompiledWord ca(a, g), cb(b, g);
  const std::uint64_t total = factorial(n);
  Buffer i1{}, v1{}, i2{}, v2{};
  for (std::uint64_t r = 0; r < total; ++r) {
    unrank_into(r, n, i1, v1);
    i2 = i1;
    v2 = v1;
    ca.apply(i1, v1);
    cb.apply(i2, v2);
    if (!std::equal(i1.begin(), i1.begin() + n, i2.begin())) return Labeling::unrank(n, r);
  }
  return std::nullopt;
}

bool maps_equal(const Graph& g, const OperatorWord& a, const OperatorWord& b) {
  return !first_difference(g, a, b).has_value();
}

Statistic Statistic::indicator(int v, int i) {
  return {"1_{v" + std::to_string(v + 1) + "," + std::to_string(i) + "}",
          [v, i](const Labeling& s) { return Rational(s.label_of(v) == i ? 1 : 0); }};
}

HomomesyReport homomesy_check(const Graph& g, const OperatorWord& w, const Statistic& stat,
                              const Rational& expected) {
  HomomesyReport rep;
  rep.expected = expected;
  rep.homomesic = true;
  for_each_orbit(g, w, [&](const std::vector<Labeling>& orbit) {
    Rational sum = 0;
    for (const auto& s : orbit) sum += stat.eval(s);
    Rational avg = sum / static_cast<long long>(orbit.size());
    rep.averages.push_back(avg);
    if (avg != expected) rep.homomesic = false;
  });
  return rep;
}

}  // namespace toggledyn
