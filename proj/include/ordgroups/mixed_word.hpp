#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordgroups/free_word.hpp"
#include "ordgroups/group.hpp"

namespace ordgroups {

/// A syllable of a word in F_n * G: a piece of F_n or an element of G.
using Syllable = std::variant<FreeWord, Element>;

/// Element of the free product F_n * G in normal form: alternating nonempty
/// free syllables and non-identity G syllables.
class MixedWord
{
  public:
	MixedWord() = default;

	/// Multiplies adjacent G syllables, reduces free syllables, drops
	/// trivial syllables. G syllables are validated against `group`
	/// (std::invalid_argument on mismatch); free letters must lie in 1..rank.
	static MixedWord normalize(std::vector<Syllable> const &raw,
	                           OrderedGroup const &group);

	/// Embedding of F_n.
	static MixedWord from_free(FreeWord const &w);

	/// Embedding of G.
	static MixedWord from_element(Element const &g, OrderedGroup const &group);

	std::vector<Syllable> const &syllables() const { return syllables_; }
	bool empty() const { return syllables_.empty(); }

	/// Checks the normal-form invariants structurally.
	bool is_normal(OrderedGroup const &group) const;

	friend bool operator==(MixedWord const &, MixedWord const &) = default;

  private:
	std::vector<Syllable> syllables_;
};

inline MixedWord mixed_normalize(std::vector<Syllable> const &raw,
                                 OrderedGroup const &group)
{
	return MixedWord::normalize(raw, group);
}

MixedWord mixed_mul(MixedWord const &u, MixedWord const &v, OrderedGroup const &group);
MixedWord mixed_inv(MixedWord const &u, OrderedGroup const &group);

/// pi1: F_n * G -> G, s_i -> s~_i and the identity on G.
Element pi1(MixedWord const &u, OrderedGroup const &group);

/// pi2: F_n -> G, s_i -> s~_i.
Element pi2(FreeWord const &v, OrderedGroup const &group);

/// "s1^2 g{1,0} s2^-1", or "1" for the empty word.
std::string format_mixed_word(MixedWord const &u, OrderedGroup const &group);

/// Parses s-letters and g{...} literals (with optional exponents).
MixedWord parse_mixed_word(std::string_view text, OrderedGroup const &group);

} // namespace ordgroups
