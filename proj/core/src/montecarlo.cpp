#include "levym/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace levym {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr std::size_t kBlock = 65536;

// fills values[i] for i in [begin,end) from a block-local engine
template <typename Fill>
void run_blocks(std::vector<double>& values, std::uint64_t seed, const Fill& fill) {
  const std::size_t n = values.size();
  for (std::size_t b = 0, i = 0; i < n; ++b, i += kBlock) {
    std::mt19937_64 rng(split_seed(seed, b));
    const std::size_t end = std::min(n, i + kBlock);
    for (std::size_t j = i; j < end; ++j) values[j] = fill(rng);
  }
}

double kanter_stable(std::mt19937_64& rng, double alpha, double t_pow) {
  std::uniform_real_distribution<double> unif(0.0, M_PI);
  std::exponential_distribution<double> expo(1.0);
  const double u = unif(rng);
  const double e = expo(rng);
  const double log_a = std::log(std::sin(alpha * u)) +
                       (1.0 - alpha) / alpha * std::log(std::sin((1.0 - alpha) * u)) -
                       (1.0 / alpha) * std::log(std::sin(u));
  return t_pow * std::exp(log_a - (1.0 - alpha) / alpha * std::log(e));
}

}  // namespace

SampleBatch sample_stable_subordinator(double alpha, double t, std::size_t n,
                                       std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("sample_stable_subordinator: alpha must be in (0,1)");
  SampleBatch batch;
  batch.seed = seed;
  batch.t = t;
  batch.family = "stable-subordinator:" + std::to_string(alpha);
  batch.values.resize(n);
  const double t_pow = std::pow(t, 1.0 / alpha);
  run_blocks(batch.values, seed,
             [&](std::mt19937_64& rng) { return kanter_stable(rng, alpha, t_pow); });
  return batch;
}

SampleBatch sample_gamma_process(double alpha, double beta, double t, std::size_t n,
                                 std::uint64_t seed) {
  if (!(alpha > 0.0 && beta > 0.0))
    throw std::invalid_argument("sample_gamma_process: alpha, beta must be > 0");
  SampleBatch batch;
  batch.seed = seed;
  batch.t = t;
  batch.family = "gamma:" + std::to_string(alpha) + "," + std::to_string(beta);
  batch.values.resize(n);
  run_blocks(batch.values, seed, [&](std::mt19937_64& rng) {
    std::gamma_distribution<double> gamma(alpha * t, 1.0 / beta);
    return gamma(rng);
  });
  return batch;
}

SampleBatch sample_compound_poisson(double eta,
                                    const std::function<double(std::mt19937_64&)>& jump_sampler,
                                    double t, std::size_t n, std::uint64_t seed) {
  if (!(eta > 0.0)) throw std::invalid_argument("sample_compound_poisson: eta must be > 0");
  SampleBatch batch;
  batch.seed = seed;
  batch.t = t;
  batch.family = "compound-poisson:" + std::to_string(eta);
  batch.values.resize(n);
  run_blocks(batch.values, seed, [&](std::mt19937_64& rng) {
    std::poisson_distribution<long> count(eta * t);
    const long k = count(rng);
    double s = 0.0;
    for (long j = 0; j < k; ++j) s += jump_sampler(rng);
    return s;
  });
  return batch;
}

SampleBatch sample_compound_poisson_atom(double eta, double y, double t, std::size_t n,
                                         std::uint64_t seed) {
  SampleBatch batch =
      sample_compound_poisson(eta, [y](std::mt19937_64&) { return y; }, t, n, seed);
  batch.family = "poisson-atom:" + std::to_string(eta) + "," + std::to_string(y);
  return batch;
}

SampleBatch sample_subordinate_brownian(double alpha, int d, double t, std::size_t n,
                                        std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::invalid_argument("sample_subordinate_brownian: alpha must be in (0,2)");
  if (d < 1) throw std::invalid_argument("sample_subordinate_brownian: d must be >= 1");
  SampleBatch batch;
  batch.seed = seed;
  batch.t = t;
  batch.family = "symmetric-stable:" + std::to_string(alpha) + ",d=" + std::to_string(d);
  batch.values.resize(n);
  const double half = 0.5 * alpha;
  const double t_pow = std::pow(t, 1.0 / half);
  run_blocks(batch.values, seed, [&](std::mt19937_64& rng) {
    const double s = kanter_stable(rng, half, t_pow);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = std::sqrt(2.0 * s);
    if (d == 1) return scale * normal(rng);
    double norm2 = 0.0;
    for (int k = 0; k < d; ++k) {
      const double z = normal(rng);
      norm2 += z * z;
    }
    return scale * std::sqrt(norm2);
  });
  return batch;
}

EmpiricalMoment empirical_moment(const SampleBatch& batch,
                                 const std::function<double(double)>& functional,
                                 const std::string& name) {
  EmpiricalMoment m;
  m.n = batch.values.size();
  m.functional = name;
  if (m.n < 2) throw std::invalid_argument("empirical_moment: need n >= 2");
  double sum = 0.0, sumsq = 0.0;
  for (double v : batch.values) {
    const double g = functional(v);
    if (!std::isfinite(g)) {
      m.diverged = true;
      m.mean = std::numeric_limits<double>::infinity();
      return m;
    }
    sum += g;
    sumsq += g * g;
  }
  m.mean = sum / m.n;
  const double var = std::max(0.0, sumsq / m.n - m.mean * m.mean);
  m.std_error = std::sqrt(var / m.n);
  return m;
}

}  // namespace levym
