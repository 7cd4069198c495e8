#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace noodle {

/// SplitMix64 step; used to derive independent seed streams from one root seed.
inline std::uint64_t splitmix64(std::uint64_t &state)
{
	std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

/// Derives a child seed from (seed, tag). Same inputs always give the same child.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : tag) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	std::uint64_t s = seed ^ h;
	return splitmix64(s);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::string_view sub)
{
	return derive_seed(derive_seed(seed, tag), sub);
}

/// Deterministic random source. mt19937_64 output is pinned by the standard and
/// all distributions below are implemented here, so streams are identical
/// across platforms and toolchains.
class Rng {
      public:
	explicit Rng(std::uint64_t seed) : gen_(seed) {}

	std::uint64_t next_u64() { return gen_(); }

	/// Uniform on [0, 1) with 53 random bits.
	double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

	double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

	/// Standard normal via Box-Muller; two uniforms per draw, no cached spare.
	double normal()
	{
		double u1 = 1.0 - uniform(); // (0, 1]
		double u2 = uniform();
		return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
	}

	/// Uniform integer in [0, n); rejection sampling, unbiased.
	std::uint64_t below(std::uint64_t n)
	{
		if (n == 0)
			return 0;
		std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
		std::uint64_t x;
		do {
			x = gen_();
		} while (x >= limit);
		return x % n;
	}

	template <typename T> void shuffle(std::vector<T> &v)
	{
		for (std::size_t i = v.size(); i > 1; --i)
			std::swap(v[i - 1], v[below(i)]);
	}

      private:
	std::mt19937_64 gen_;
};

} // namespace noodle
