#include "lis/exact_lis.hpp"

#include "lis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

namespace lis {

Rat ExactDist::cdf(int l) const {
    if (l < 0) return Rat(0);
    if (l >= n) return Rat(1);
    Rat r(count[l], denominator);
    r.canonicalize();
    return r;
}

Rat ExactDist::pdf(int l) const { return cdf(l) - cdf(l - 1); }

double ExactDist::cdf_double(int l) const { return cdf(l).get_d(); }
double ExactDist::pdf_double(int l) const { return pdf(l).get_d(); }

double ExactDist::mean() const {
    // E L = sum_{l >= 0} P(L > l)
    Rat s(0);
    for (int l = 0; l < n; ++l) s += Rat(1) - cdf(l);
    return s.get_d();
}

double ExactDist::variance() const {
    Rat m1(0), m2(0);
    for (int l = 1; l <= n; ++l) {
        Rat p = pdf(l);
        m1 += l * p;
        m2 += l * l * p;
    }
    Rat v = m2 - m1 * m1;
    return v.get_d();
}

int ExactDist::mode() const {
    int best = 0;
    Rat bp(-1);
    for (int l = 0; l <= n; ++l) {
        Rat p = pdf(l);
        if (p > bp) {
            bp = p;
            best = l;
        }
    }
    return best;
}

namespace {

BigInt factorial(int n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Calls visit(parts) for every partition of n with largest part in [lo_first, hi_first]
// and every later part <= maxpart.
template <class Visit>
void partitions(int n, int lo_first, int hi_first, Visit&& visit) {
    std::vector<int> parts;
    parts.reserve(n);
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            visit(parts);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            parts.push_back(p);
            self(self, rem - p, p);
            parts.pop_back();
        }
    };
    for (int first = std::min(hi_first, n); first >= lo_first; --first) {
        parts.assign(1, first);
        rec(rec, n - first, first);
    }
}

// (f^lambda)^2 by the hook-length formula
class HookSquare {
  public:
    explicit HookSquare(int n) : nfact_(factorial(n)), conj_(n + 1) {}

    const BigInt& operator()(const std::vector<int>& parts) {
        const int rows = static_cast<int>(parts.size());
        const int cols = parts.front();
        for (int j = 0; j < cols; ++j) {
            int c = 0;
            while (c < rows && parts[c] > j) ++c;
            conj_[j] = c;
        }
        hooks_ = 1;
        unsigned long acc = 1;
        int in_acc = 0;
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < parts[i]; ++j) {
                acc *= static_cast<unsigned long>(parts[i] - j + conj_[j] - i - 1);
                if (++in_acc == 8) {
                    mpz_mul_ui(hooks_.get_mpz_t(), hooks_.get_mpz_t(), acc);
                    acc = 1;
                    in_acc = 0;
                }
            }
        }
        mpz_mul_ui(hooks_.get_mpz_t(), hooks_.get_mpz_t(), acc);
        mpz_divexact(f_.get_mpz_t(), nfact_.get_mpz_t(), hooks_.get_mpz_t());
        mpz_mul(f_.get_mpz_t(), f_.get_mpz_t(), f_.get_mpz_t());
        return f_;
    }

  private:
    BigInt nfact_, hooks_, f_;
    std::vector<int> conj_;
};

std::mutex cache_mutex;
std::map<int, ExactDist>& cache() {
    static std::map<int, ExactDist> c;
    return c;
}

}  // namespace

ExactDist exact_dist(int n, int threads) {
    if (n < 0) throw DomainError("exact_dist: n must be nonnegative");
    if (n > 80) throw ResourceLimit("exact_dist: n must not exceed 80");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find(n);
        if (it != cache().end()) return it->second;
    }
    ExactDist d;
    d.n = n;
    d.denominator = factorial(n);
    d.count.assign(n + 1, BigInt(0));
    if (n == 0) {
        d.count[0] = 1;
    } else {
        // by_first[l] = sum of (f^lambda)^2 over lambda with lambda_1 = l
        std::vector<BigInt> by_first(n + 1, BigInt(0));
        threads = std::max(1, std::min(threads, n));
        auto work = [&](int tid) {
            HookSquare hs(n);
            for (int first = n - tid; first >= 1; first -= threads) {
                BigInt sum = 0;
                partitions(n, first, first, [&](const std::vector<int>& p) { sum += hs(p); });
                by_first[first] = sum;
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        BigInt run = 0;
        for (int l = 0; l <= n; ++l) {
            run += by_first[l];
            d.count[l] = run;
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache().emplace(n, d);
    return d;
}

BigInt lis_count(int n, int l) {
    if (n < 0 || l < 0) throw DomainError("lis_count: arguments must be nonnegative");
    if (n > 80) throw ResourceLimit("lis_count: n must not exceed 80");
    if (n == 0) return 1;
    if (l == 0) return 0;
    HookSquare hs(n);
    BigInt sum = 0;
    partitions(n, 1, l, [&](const std::vector<int>& p) { sum += hs(p); });
    return sum;
}

int lis_length(const std::vector<int>& perm) {
    std::vector<int> tails;
    for (int v : perm) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

int lis_length_dp(const std::vector<int>& perm) {
    const std::size_t n = perm.size();
    std::vector<int> best(n, 1);
    int out = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (perm[j] < perm[i]) best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

ExactDist brute_force_dist(int n) {
    if (n < 0) throw DomainError("brute_force_dist: n must be nonnegative");
    if (n > 10) throw ResourceLimit("brute_force_dist: n must not exceed 10");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<long> tally(n + 1, 0);
    do {
        ++tally[lis_length(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    ExactDist d;
    d.n = n;
    d.denominator = factorial(n);
    d.count.assign(n + 1, BigInt(0));
    BigInt run = 0;
    for (int l = 0; l <= n; ++l) {
        run += tally[l];
        d.count[l] = run;
    }
    return d;
}

std::vector<Rat> egf_coeffs(int l, int K) {
    if (K < 0 || K > 80) throw DomainError("egf_coeffs: K must be in 0..80");
    std::vector<Rat> a(K + 1);
    for (int k = 0; k <= K; ++k) {
        if (l >= k) {
            a[k] = 1;
        } else {
            a[k] = Rat(lis_count(k, l), factorial(k));
            a[k].canonicalize();
        }
    }
    return a;
}

namespace {

std::mutex egf_mutex;

const std::vector<double>& egf_double(int l, int K) {
    static std::map<std::pair<int, int>, std::vector<double>> memo;
    std::lock_guard<std::mutex> lock(egf_mutex);
    auto key = std::make_pair(l, K);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto a = egf_coeffs(l, K);
    std::vector<double> v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k].get_d();
    return memo.emplace(key, std::move(v)).first->second;
}

}  // namespace

std::complex<double> egf(int l, std::complex<double> z, int K) {
    if (std::abs(z) > K / 3.0) throw TruncationWarning("egf: |z| exceeds K/3, truncation not controlled");
    const auto& a = egf_double(l, K);
    std::complex<double> term = 1.0, s = 0.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) term *= z / static_cast<double>(k);
        s += a[k] * term;
    }
    return s;
}

std::complex<double> poisson_gf(int l, std::complex<double> z, int K) {
    if (l >= K) {
        if (std::abs(z) > K / 3.0) throw TruncationWarning("poisson_gf: |z| exceeds K/3, truncation not controlled");
        return 1.0;
    }
    return std::exp(-z) * egf(l, z, K);
}

// ---- Monte Carlo -----------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = -bound % bound;
        while (low < threshold) {
            x = next();
            m = static_cast<__uint128_t>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

namespace {

constexpr long block_size = 16;

int patience(const std::vector<std::uint32_t>& perm, std::vector<std::uint32_t>& tails) {
    tails.clear();
    for (std::uint32_t v : perm) {
        // branch-light lower_bound
        std::size_t lo = 0, len = tails.size();
        while (len > 0) {
            std::size_t half = len / 2;
            bool less = tails[lo + half] < v;
            lo = less ? lo + half + 1 : lo;
            len = less ? len - half - 1 : half;
        }
        if (lo == tails.size())
            tails.push_back(v);
        else
            tails[lo] = v;
    }
    return static_cast<int>(tails.size());
}

}  // namespace

MonteCarloSummary monte_carlo(int n, long samples, std::uint64_t seed, int threads) {
    if (n < 1) throw DomainError("monte_carlo: n must be positive");
    if (samples < 1) throw DomainError("monte_carlo: samples must be positive");
    const long blocks = (samples + block_size - 1) / block_size;
    std::vector<int> lengths(samples);
    threads = std::max(1, threads);
    auto work = [&](int tid) {
        std::vector<std::uint32_t> perm(n), tails;
        tails.reserve(4096);
        for (long b = tid; b < blocks; b += threads) {
            std::uint64_t x = seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(b + 1));
            Xoshiro256 rng(splitmix64(x));
            const long end = std::min(samples, (b + 1) * block_size);
            for (long s = b * block_size; s < end; ++s) {
                for (int i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
                for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
                lengths[s] = patience(perm, tails);
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    MonteCarloSummary out;
    out.n = n;
    out.samples = samples;
    out.seed = seed;
    out.algorithm = "xoshiro256** (splitmix64 seeding), Fisher-Yates, patience sorting";
    double sum = 0.0;
    for (int L : lengths) {
        sum += L;
        ++out.histogram[L];
    }
    out.mean = sum / samples;
    double ss = 0.0;
    for (int L : lengths) ss += (L - out.mean) * (L - out.mean);
    out.variance = samples > 1 ? ss / (samples - 1) : 0.0;
    return out;
}

}  // namespace lis
