#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace ordgroups {

/// A generator s_gen or its inverse. Generators are 1-based.
struct Letter {
	int gen = 1;
	int sign = 1;

	Letter inverse() const { return {gen, -sign}; }
	bool cancels(Letter const &other) const
	{
		return gen == other.gen && sign == -other.sign;
	}

	friend bool operator==(Letter const &, Letter const &) = default;
	friend auto operator<=>(Letter const &, Letter const &) = default;
};

/// Freely reduced word in a free group. The rank is not stored; it is
/// checked when words are built from raw input.
class FreeWord
{
  public:
	FreeWord() = default;

	/// Free reduction of an arbitrary letter sequence. Throws
	/// std::out_of_range if some generator lies outside 1..rank, and
	/// std::invalid_argument for a sign other than +1/-1.
	static FreeWord reduce(std::span<Letter const> raw, int rank);

	/// Same, without the rank check (generator must still be >= 1).
	static FreeWord reduce(std::span<Letter const> raw);

	static FreeWord generator(int gen, int sign = 1);

	std::vector<Letter> const &letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }

	/// Largest generator index used, 0 for the empty word.
	int max_generator() const;

	FreeWord inverse() const;

	friend FreeWord operator*(FreeWord const &a, FreeWord const &b);
	FreeWord &operator*=(FreeWord const &b);

	friend bool operator==(FreeWord const &, FreeWord const &) = default;
	friend auto operator<=>(FreeWord const &, FreeWord const &) = default;

  private:
	std::vector<Letter> letters_;
};

/// Cyclic reduction: strips mutually inverse first/last letters.
FreeWord cyclically_reduce(FreeWord const &w);

/// Exponent sum of generator `gen` in w.
long exponent_sum(FreeWord const &w, int gen);

} // namespace ordgroups
