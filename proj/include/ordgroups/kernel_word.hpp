#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordgroups/group.hpp"

namespace ordgroups {

/// x_{g,gen}^sign, where x_{g,i} = g s_i s~_i^-1 g^-1 is a free generator of
/// ker(pi1).
struct KernelLetter {
	Element g;
	int gen = 1;
	int sign = 1;

	KernelLetter inverse() const { return {g, gen, -sign}; }
	bool cancels(KernelLetter const &o) const
	{
		return gen == o.gen && sign == -o.sign && g == o.g;
	}
	friend bool operator==(KernelLetter const &, KernelLetter const &) = default;
};

/// Freely reduced word in the letters x_{g,i}.
class KernelWord
{
  public:
	KernelWord() = default;

	static KernelWord reduce(std::vector<KernelLetter> const &raw);
	static KernelWord letter(Element g, int gen, int sign = 1);

	std::vector<KernelLetter> const &letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }

	KernelWord inverse() const;

	friend KernelWord operator*(KernelWord const &a, KernelWord const &b);
	KernelWord &operator*=(KernelWord const &b);
	KernelWord &operator*=(KernelLetter const &l);

	friend bool operator==(KernelWord const &, KernelWord const &) = default;

  private:
	std::vector<KernelLetter> letters_;
};

/// Throws std::invalid_argument unless every letter has an element of
/// `group` and a generator index in 1..rank.
void validate(KernelWord const &k, OrderedGroup const &group);

/// "x{1,0,1} x{0,1,2}^-1", or "1"; the last comma separates the generator
/// index from the G literal.
std::string format_kernel_word(KernelWord const &k, OrderedGroup const &group);
KernelWord parse_kernel_word(std::string_view text, OrderedGroup const &group);

} // namespace ordgroups
