#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace levym {

/// Seeded draw of one family at a fixed time. Values are scalars: S_t for
/// subordinators, the signed coordinate for d=1 symmetric processes, |X_t|
/// for d >= 2. Identical seeds reproduce the batch bitwise.
struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::string family;
  double t = 1.0;
};

struct EmpiricalMoment {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::string functional;
  bool diverged = false;  // non-finite functional values observed
};

/// SplitMix64 step; used to derive independent per-block streams.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// Positive alpha-stable subordinator (E e^{-u S_t} = e^{-t u^alpha}),
/// alpha in (0,1), sampled exactly:
///   S_t = t^{1/alpha} A(U) E^{-(1-alpha)/alpha},
///   A(u) = sin(alpha u) sin((1-alpha)u)^{(1-alpha)/alpha} / sin(u)^{1/alpha},
/// with U uniform on (0,pi) and E unit exponential.
SampleBatch sample_stable_subordinator(double alpha, double t, std::size_t n,
                                       std::uint64_t seed);

/// Gamma subordinator: S_t ~ Gamma(alpha t, rate beta).
SampleBatch sample_gamma_process(double alpha, double beta, double t, std::size_t n,
                                 std::uint64_t seed);

/// Compound Poisson: Poisson(eta t) count, jumps from `jump_sampler`.
SampleBatch sample_compound_poisson(double eta,
                                    const std::function<double(std::mt19937_64&)>& jump_sampler,
                                    double t, std::size_t n, std::uint64_t seed);
SampleBatch sample_compound_poisson_atom(double eta, double y, double t, std::size_t n,
                                         std::uint64_t seed);

/// Symmetric alpha-stable process with symbol |xi|^alpha via Brownian
/// subordination: X_t = sqrt(2 S~_t) Z with S~ an (alpha/2)-stable
/// subordinator and Z standard normal (the sqrt(2) matches psi_B = |xi|^2).
/// d = 1 stores the signed coordinate, d >= 2 stores |X_t|.
SampleBatch sample_subordinate_brownian(double alpha, int d, double t, std::size_t n,
                                        std::uint64_t seed);

EmpiricalMoment empirical_moment(const SampleBatch& batch,
                                 const std::function<double(double)>& functional,
                                 const std::string& name = {});

}  // namespace levym
