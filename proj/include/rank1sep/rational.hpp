#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>

namespace rank1sep {

/// Exact rational scalar used by all algebraic modules.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return static_cast<double>(r); }

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline std::string to_string(const Rat& r)
{
    return r.str();
}

/// Deterministic stream of small random rationals (numerators in
/// [-bound, bound], denominators in [1, den_bound]).
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed, int bound = 9, int den_bound = 4)
        : rng_(seed), num_(-bound, bound), den_(1, den_bound)
    {
    }

    Rat operator()() { return Rat(num_(rng_), den_(rng_)); }

    /// Nonzero sample.
    Rat nonzero()
    {
        Rat r = (*this)();
        while (r == 0)
            r = (*this)();
        return r;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> num_;
    std::uniform_int_distribution<int> den_;
};

/// SplitMix64 step, used to derive independent per-check seeds from one
/// master seed without coupling the streams.
inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, const std::string& tag)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return splitmix64(master ^ h);
}

} // namespace rank1sep
