#pragma once

#include <string_view>

#include "ordgroups/group.hpp"
#include "ordgroups/kernel_word.hpp"
#include "ordgroups/mixed_word.hpp"
#include "ordgroups/text.hpp"

namespace testing_helpers {

inline ordgroups::FreeWord fw(std::string_view text, int rank = 3)
{
	return ordgroups::parse_free_word(text, rank);
}

inline ordgroups::MixedWord mw(std::string_view text, ordgroups::OrderedGroup const &g)
{
	return ordgroups::parse_mixed_word(text, g);
}

inline ordgroups::KernelWord kw(std::string_view text, ordgroups::OrderedGroup const &g)
{
	return ordgroups::parse_kernel_word(text, g);
}

inline ordgroups::Element el(std::string_view literal, ordgroups::OrderedGroup const &g)
{
	return g.parse(literal);
}

} // namespace testing_helpers
