#pragma once

#include <cstdint>
#include <random>

#include "ordgroups/fiber.hpp"
#include "ordgroups/free_word.hpp"
#include "ordgroups/group.hpp"
#include "ordgroups/kernel_word.hpp"
#include "ordgroups/mixed_word.hpp"

namespace ordgroups {

/// Seeded generator. Draws are derived from raw mt19937_64 output only, so
/// sequences are identical across standard libraries.
class Rng
{
  public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	std::uint64_t next() { return engine_(); }
	/// Uniform in [lo, hi].
	int between(int lo, int hi)
	{
		auto span = static_cast<std::uint64_t>(hi - lo) + 1;
		return lo + static_cast<int>(next() % span);
	}
	int sign() { return (next() & 1) ? 1 : -1; }

  private:
	std::mt19937_64 engine_;
};

/// Reduced word with length uniform in 0..max_len.
FreeWord random_free_word(Rng &rng, int rank, int max_len);

/// Product of a random word of length 0..radius in s~_i^{+-1}.
Element random_element(Rng &rng, OrderedGroup const &group, int radius);

/// Reduced kernel word with length uniform in 0..max_len; letter elements
/// drawn with random_element(radius).
KernelWord random_kernel_word(Rng &rng, OrderedGroup const &group, int max_len, int radius);

/// Normalized word with up to max_syllables raw syllables (free syllables of
/// length <= 3, G syllables from the radius ball).
MixedWord random_mixed_word(Rng &rng, OrderedGroup const &group, int max_syllables,
                            int radius);

/// Product of `factors` conjugates c x c^-1 with x = (g s_i s~_i^-1 g^-1)^{+-1}
/// and c a random mixed word: an element of ker(pi1) built without tau.
MixedWord random_kernel_mixed_word(Rng &rng, OrderedGroup const &group, int factors,
                                   int radius);

/// compose(random kernel word, random free word).
FiberElement random_fiber_element(Rng &rng, GroupPtr const &group, int kernel_len,
                                  int free_len, int radius);

} // namespace ordgroups
