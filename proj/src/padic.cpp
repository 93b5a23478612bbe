#include "degloci/padic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "degloci/errors.hpp"

namespace degloci {

namespace {

constexpr std::uint64_t kHistogramLimit = std::uint64_t{1} << 20;

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Word `word` of the random stream for coordinate `var` of sample `sample`.
std::uint64_t draw(std::uint64_t seed, std::uint64_t sample, std::uint64_t var, std::uint64_t word) {
  return mix(mix(mix(seed) ^ sample) ^ ((var << 32) | word));
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

using u128 = unsigned __int128;

struct Term {
  std::vector<int> exps;
  Integer coef;        // reduced mod p^K
  std::uint64_t coef64 = 0;
};

// Counts accumulated by one worker.
struct Tally {
  std::vector<std::vector<std::uint64_t>> center_val;  // [center][valuation of v - c, capped at K]
  std::vector<std::uint64_t> shell;                    // [valuation of v], size K + 1
  std::vector<std::uint64_t> hist;                     // v mod p^hist_level

  Tally(std::size_t centers, int K, std::uint64_t hist_size)
      : center_val(centers, std::vector<std::uint64_t>(K + 1, 0)), shell(K + 1, 0), hist(hist_size, 0) {}

  void merge(const Tally& o) {
    for (std::size_t j = 0; j < center_val.size(); ++j) {
      for (std::size_t k = 0; k < center_val[j].size(); ++k) center_val[j][k] += o.center_val[j][k];
    }
    for (std::size_t k = 0; k < shell.size(); ++k) shell[k] += o.shell[k];
    for (std::size_t r = 0; r < hist.size(); ++r) hist[r] += o.hist[r];
  }
};

class Sampler {
 public:
  Sampler(const Poly& f, const PadicConfig& cfg) : cfg_(cfg), nvars_(f.ring()->nvars()) {
    if (f.ring()->has_laurent()) throw ConfigError("p-adic maps must be polynomials");
    mpz_ui_pow_ui(M_.get_mpz_t(), static_cast<unsigned long>(cfg.p), static_cast<unsigned long>(cfg.K));
    small_ = M_ < (Integer(1) << 62);
    if (small_) M64_ = M_.get_ui();
    for (const auto& [m, c] : f.terms()) {
      if (!is_integer(c)) throw ConfigError("p-adic maps need integer coefficients; got " + to_string(c));
      Term t;
      t.exps.assign(m.exps.begin(), m.exps.begin() + static_cast<long>(nvars_));
      Integer r = c.get_num() % M_;
      if (r < 0) r += M_;
      t.coef = r;
      if (small_) t.coef64 = r.get_ui();
      terms_.push_back(std::move(t));
    }
    for (long long c : cfg.centers) {
      Integer r = Integer(std::to_string(c)) % M_;
      if (r < 0) r += M_;
      centers_.push_back(r);
    }
    hist_level_ = 0;
    while (hist_level_ < cfg.K && ipow(cfg.p, hist_level_ + 1) <= kHistogramLimit) ++hist_level_;
    hist_mod_ = ipow(cfg.p, hist_level_);
    // Words per coordinate in the large path: enough bits plus 64 spare.
    words_ = (mpz_sizeinbase(M_.get_mpz_t(), 2) + 63) / 64 + 1;
  }

  int hist_level() const { return hist_level_; }
  std::uint64_t hist_mod() const { return hist_mod_; }

  void run(std::uint64_t begin, std::uint64_t end, Tally& tally) const {
    std::vector<std::uint64_t> x64(nvars_);
    std::vector<Integer> xbig(nvars_);
    for (std::uint64_t s = begin; s < end; ++s) {
      if (small_) {
        for (std::size_t i = 0; i < nvars_; ++i) x64[i] = uniform64(s, i);
        record(eval64(x64), tally);
      } else {
        for (std::size_t i = 0; i < nvars_; ++i) xbig[i] = uniform_big(s, i);
        record_big(eval_big(xbig), tally);
      }
    }
  }

 private:
  std::uint64_t uniform64(std::uint64_t s, std::size_t var) const {
    std::uint64_t limit = (~std::uint64_t{0} / M64_) * M64_;
    for (std::uint64_t w = 0;; ++w) {
      std::uint64_t r = draw(cfg_.seed, s, var, w);
      if (r < limit) return r % M64_;
    }
  }

  Integer uniform_big(std::uint64_t s, std::size_t var) const {
    Integer acc = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      acc <<= 64;
      std::uint64_t r = draw(cfg_.seed, s, var, w);
      acc += Integer(static_cast<unsigned long>(r >> 32)) * Integer(1UL << 32) + Integer(static_cast<unsigned long>(r & 0xffffffffULL));
    }
    return acc % M_;
  }

  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % M64_);
  }

  std::uint64_t eval64(const std::vector<std::uint64_t>& x) const {
    std::uint64_t acc = 0;
    for (const auto& t : terms_) {
      std::uint64_t v = t.coef64;
      for (std::size_t i = 0; i < nvars_ && v; ++i) {
        for (int e = 0; e < t.exps[i]; ++e) v = mulmod(v, x[i]);
      }
      acc += v;
      if (acc >= M64_) acc -= M64_;
    }
    return acc;
  }

  Integer eval_big(const std::vector<Integer>& x) const {
    Integer acc = 0;
    for (const auto& t : terms_) {
      Integer v = t.coef;
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (int e = 0; e < t.exps[i]; ++e) v = (v * x[i]) % M_;
      }
      acc = (acc + v) % M_;
    }
    return acc;
  }

  int val64(std::uint64_t d) const {
    if (d == 0) return cfg_.K;
    int v = 0;
    auto p = static_cast<std::uint64_t>(cfg_.p);
    while (d % p == 0) {
      d /= p;
      ++v;
    }
    return std::min(v, cfg_.K);
  }

  int val_big(Integer d) const {
    if (d == 0) return cfg_.K;
    int v = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(cfg_.p))) {
      d /= cfg_.p;
      ++v;
    }
    return std::min(v, cfg_.K);
  }

  void record(std::uint64_t v, Tally& t) const {
    for (std::size_t j = 0; j < centers_.size(); ++j) {
      std::uint64_t c = centers_[j].get_ui();
      std::uint64_t d = v >= c ? v - c : v + M64_ - c;
      ++t.center_val[j][val64(d)];
    }
    ++t.shell[val64(v)];
    ++t.hist[v % hist_mod_];
  }

  void record_big(const Integer& v, Tally& t) const {
    for (std::size_t j = 0; j < centers_.size(); ++j) {
      Integer d = v - centers_[j];
      if (d < 0) d += M_;
      ++t.center_val[j][val_big(d)];
    }
    ++t.shell[val_big(v)];
    Integer r = v % Integer(static_cast<unsigned long>(hist_mod_));
    ++t.hist[r.get_ui()];
  }

  const PadicConfig& cfg_;
  std::size_t nvars_;
  Integer M_;
  bool small_ = true;
  std::uint64_t M64_ = 0;
  std::vector<Term> terms_;
  std::vector<Integer> centers_;
  int hist_level_ = 0;
  std::uint64_t hist_mod_ = 1;
  std::size_t words_ = 2;
};

}  // namespace

void PadicConfig::validate() const {
  if (!is_prime(p) || p > 100) throw ConfigError("p must be a prime in [2, 100]; got " + std::to_string(p));
  if (K < 1 || K > 12) throw ConfigError("K must lie in [1, 12]; got " + std::to_string(K));
  if (N < 10'000) throw ConfigError("N must be at least 10^4; got " + std::to_string(N));
}

const CenterProfile& DensityProfile::center(long long c) const {
  for (const auto& cp : centers) {
    if (cp.center == c) return cp;
  }
  throw ConfigError("center " + std::to_string(c) + " is not tracked");
}

DensityProfile estimate_pushforward(const Poly& f, const PadicConfig& cfg_in, const std::string& map_id) {
  cfg_in.validate();
  PadicConfig cfg = cfg_in;
  if (std::find(cfg.centers.begin(), cfg.centers.end(), 0LL) == cfg.centers.end()) {
    cfg.centers.insert(cfg.centers.begin(), 0);
  }
  Sampler sampler(f, cfg);

  unsigned threads = std::max(1u, cfg.threads);
  std::vector<Tally> tallies(threads, Tally(cfg.centers.size(), cfg.K, sampler.hist_mod()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    std::uint64_t begin = cfg.N * w / threads, end = cfg.N * (w + 1) / threads;
    if (threads == 1) {
      sampler.run(begin, end, tallies[w]);
    } else {
      pool.emplace_back([&, w, begin, end] { sampler.run(begin, end, tallies[w]); });
    }
  }
  for (auto& t : pool) t.join();
  Tally total = tallies.front();
  for (unsigned w = 1; w < threads; ++w) total.merge(tallies[w]);

  DensityProfile out;
  out.map_id = map_id.empty() ? f.str() : map_id;
  out.p = cfg.p;
  out.K = cfg.K;
  out.N = cfg.N;
  out.seed = cfg.seed;
  double N = static_cast<double>(cfg.N);
  for (std::size_t j = 0; j < cfg.centers.size(); ++j) {
    CenterProfile cp;
    cp.center = cfg.centers[j];
    std::uint64_t cumulative = 0;
    std::vector<std::uint64_t> hits(cfg.K + 1);
    for (int k = cfg.K; k >= 0; --k) {
      cumulative += total.center_val[j][k];
      hits[k] = cumulative;
    }
    for (int k = 0; k <= cfg.K; ++k) {
      double q = static_cast<double>(hits[k]) / N;
      double scale = std::pow(static_cast<double>(cfg.p), k);
      cp.levels.push_back({k, hits[k], scale * q, scale * std::sqrt(q * (1 - q) / N)});
    }
    out.centers.push_back(std::move(cp));
  }
  for (int nu = 0; nu < cfg.K; ++nu) {
    double q = static_cast<double>(total.shell[nu]) / N;
    double w = std::pow(static_cast<double>(cfg.p), -nu) * (1 - 1.0 / cfg.p);
    out.shells.push_back({nu, total.shell[nu], q / w, std::sqrt(q * (1 - q) / N) / w});
  }
  for (int k = 0; k <= sampler.hist_level(); ++k) {
    std::uint64_t mod = ipow(cfg.p, k);
    std::map<std::uint64_t, std::uint64_t> h;
    for (std::uint64_t r = 0; r < total.hist.size(); ++r) {
      if (total.hist[r]) h[r % mod] += total.hist[r];
    }
    out.histograms.push_back(std::move(h));
  }
  return out;
}

namespace {

int vp(long g, int p) {
  int v = 0;
  while (g % p == 0) {
    g /= p;
    ++v;
  }
  return v;
}

// Index of the g-th powers in Z_p^x.
long unit_power_index(long g, int p) {
  long pv = 1;
  for (int i = 0, e = vp(g, p); i < e; ++i) pv *= p;
  if (p == 2) return std::gcd(g, 2L) * pv;
  return std::gcd(g, static_cast<long>(p - 1)) * pv;
}

}  // namespace

Rational exact_monomial_density(const std::vector<int>& a, int p, int nu) {
  if (a.empty() || std::any_of(a.begin(), a.end(), [](int e) { return e < 1; })) {
    throw Error("exponents must all be at least 1");
  }
  if (nu < 0) throw Error("valuation must be non-negative");
  long g = 0;
  for (int e : a) g = std::gcd(g, static_cast<long>(e));
  Rational idx = unit_power_index(g, p);
  Rational unit_share = Rational(p - 1, p);
  std::size_t n = a.size();
  Rational total = 0;
  std::vector<int> v(n, 0);
  // Enumerate v with sum a_i v_i = nu.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      if (left % a[i] != 0) return;
      v[i] = left / a[i];
      long excess = 0;
      for (std::size_t j = 0; j < n; ++j) excess += static_cast<long>(a[j] - 1) * v[j];
      total += pow(unit_share, static_cast<long>(n - 1)) * idx * pow(Rational(p), excess);
      return;
    }
    for (int vi = 0; a[i] * vi <= left; ++vi) {
      v[i] = vi;
      rec(i + 1, left - a[i] * vi);
    }
  };
  rec(0, nu);
  return total;
}

Rational exact_xy_density_at_zero(int p, int k) { return Rational(k) * Rational(p - 1, p) + 1; }

Integer quadric_cone_count(int p, int k) {
  if (k < 0) throw Error("level must be non-negative");
  Integer P = p;
  std::vector<Integer> N(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    if (j == 0) {
      N[j] = 1;
    } else if (j == 1) {
      N[j] = P * P;
    } else {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(2 * (j - 1)));
      N[j] = (P * P - 1) * pw + P * P * P * N[j - 2];
    }
  }
  return N[k];
}

Rational exact_cone_density_at_zero(int p, int k) {
  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * k));
  Rational r(quadric_cone_count(p, k), denom);
  r.canonicalize();
  return r;
}

Verdict boundedness_verdict(const DensityProfile& profile, long long center, std::optional<std::pair<int, int>> window) {
  const CenterProfile& cp = profile.center(center);
  int lo = window ? window->first : std::max(1, profile.K / 2 - 1);
  int hi = window ? window->second : profile.K - 2;
  lo = std::max(lo, 0);
  hi = std::min(hi, profile.K);
  if (hi - lo + 1 < 3) throw Error("boundedness_verdict needs at least 3 precision levels in the window");

  Verdict v;
  v.first_level = lo;
  v.last_level = hi;
  double sw = 0, swx = 0, swy = 0;
  std::vector<double> xs, ys, ws;
  for (int k = lo; k <= hi; ++k) {
    const LevelEstimate& e = cp.levels[static_cast<std::size_t>(k)];
    double floor_se = std::pow(static_cast<double>(profile.p), k) / static_cast<double>(profile.N);
    double se = std::max(e.stderr_, floor_se);
    double w = 1 / (se * se);
    xs.push_back(k);
    ys.push_back(e.density);
    ws.push_back(w);
    sw += w;
    swx += w * k;
    swy += w * e.density;
  }
  double xbar = swx / sw, ybar = swy / sw;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += ws[i] * (xs[i] - xbar) * (xs[i] - xbar);
    sxy += ws[i] * (xs[i] - xbar) * (ys[i] - ybar);
  }
  v.trend = sxy / sxx;
  v.trend_se = std::sqrt(1 / sxx);
  v.bounded = !(v.trend > 4 * v.trend_se && v.trend > 0.1);

  bool any = false;
  for (int k = lo; k <= hi; ++k) {
    const LevelEstimate& e = cp.levels[static_cast<std::size_t>(k)];
    if (e.density <= 0 || e.stderr_ / e.density > 0.05) continue;
    v.sup_estimate = any ? std::max(v.sup_estimate, e.density) : e.density;
    any = true;
  }
  if (!any) v.sup_estimate = cp.levels[static_cast<std::size_t>(lo)].density;
  v.note = "sampling distinguishes a bounded from a divergent trend only; it cannot separate bounded from continuous";
  return v;
}

std::string profile_csv(const DensityProfile& profile) {
  std::ostringstream out;
  out << "kind,center,level,hits,density,stderr\n";
  for (const auto& cp : profile.centers) {
    for (const auto& e : cp.levels) {
      out << "ball," << cp.center << ',' << e.k << ',' << e.hits << ',' << e.density << ',' << e.stderr_ << '\n';
    }
  }
  for (const auto& s : profile.shells) {
    out << "shell,," << s.nu << ',' << s.hits << ',' << s.density << ',' << s.stderr_ << '\n';
  }
  return out.str();
}

}  // namespace degloci
