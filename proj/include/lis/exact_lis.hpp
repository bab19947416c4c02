#pragma once

// Exact distribution of the longest increasing subsequence length L_n, the
// Poisson generating function built from it, and a Monte Carlo sampler.

#include "lis/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lis {

/// count[l] = #{sigma in S_n : L_n(sigma) <= l} for l = 0..n; probabilities are count / n!.
struct ExactDist {
    int n = 0;
    std::vector<BigInt> count;
    BigInt denominator;  // n!

    Rat cdf(int l) const;
    Rat pdf(int l) const;  // P(L_n = l)
    double cdf_double(int l) const;
    double pdf_double(int l) const;
    double mean() const;
    double variance() const;
    /// l maximizing P(L_n = l).
    int mode() const;
};

/// Hook-length enumeration over partitions of n (n <= 80).
ExactDist exact_dist(int n, int threads = 1);

/// #{sigma in S_n : L_n(sigma) <= l}, enumerating only partitions with largest part <= l.
BigInt lis_count(int n, int l);

/// Enumerates all n! permutations (n <= 10).
ExactDist brute_force_dist(int n);

/// Length of the longest increasing subsequence by patience sorting.
int lis_length(const std::vector<int>& perm);
/// O(n^2) dynamic-programming oracle.
int lis_length_dp(const std::vector<int>& perm);

/// a_k = P(L_k <= l) for k = 0..K (exact).
std::vector<Rat> egf_coeffs(int l, int K);

/// P(z; l) = e^{-z} sum_{k <= K} a_k z^k / k!. Throws TruncationWarning when |z| > K/3.
std::complex<double> poisson_gf(int l, std::complex<double> z, int K = 80);
/// f(z; l) = e^z P(z; l) = sum_{k <= K} a_k z^k / k!.
std::complex<double> egf(int l, std::complex<double> z, int K = 80);

/// xoshiro256** seeded through splitmix64.
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t s_[4];
};

struct MonteCarloSummary {
    int n = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    double mean = 0.0;
    double variance = 0.0;  // unbiased sample variance
    std::map<int, long> histogram;
};

/// Fisher-Yates samples in blocks of fixed size, each block with its own derived
/// stream, so the result does not depend on the thread count.
MonteCarloSummary monte_carlo(int n, long samples, std::uint64_t seed, int threads = 1);

}  // namespace lis
