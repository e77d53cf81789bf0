#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "ordgroups/free_word.hpp"
#include "ordgroups/group.hpp"
#include "ordgroups/kernel_word.hpp"
#include "ordgroups/ncseries.hpp"

namespace ordgroups {

/// Order on the variables X_{g,i}: by g in the group order, then by i.
std::strong_ordering varkey_cmp(OrderedGroup const &group, Element const &g, int i,
                                Element const &h, int j);

/// Ranks the finitely many variables X_{g,i} occurring in a set of kernel
/// words, so that the rank order is the varkey order. Series built from
/// the same ranking are comparable.
class VariableRanking
{
  public:
	VariableRanking(OrderedGroup const &group, std::span<KernelWord const *const> words);

	Var rank_of(KernelLetter const &l) const;
	std::pair<Element, int> const &variable(Var v) const { return vars_.at(v); }
	std::size_t size() const { return vars_.size(); }

  private:
	OrderedGroup const *group_;
	std::vector<std::pair<Element, int>> vars_;
};

/// Magnus expansion of a word in F_r: x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + ...
/// truncated above degree `cap`.
Series expand(FreeWord const &w, int cap);

/// Magnus expansion of a kernel word, variables ranked by `vars`.
Series expand(KernelWord const &k, VariableRanking const &vars, int cap);

/// Result of a Magnus comparison and the truncation degree that decided it
/// (0 when the words are identical).
struct MagnusComparison {
	std::strong_ordering order = std::strong_ordering::equal;
	int cap = 0;
};

/// Upper bound on the cap the deepening schedule may reach.
int magnus_cap_limit(std::size_t len1, std::size_t len2);

/// Compares i(w1) and i(w2) at caps 2, 4, 8, ... until the difference has a
/// nonzero term. Identical words compare EQUAL without expansion.
MagnusComparison magnus_compare(FreeWord const &w1, FreeWord const &w2);
MagnusComparison magnus_compare(KernelWord const &k1, KernelWord const &k2,
                                OrderedGroup const &group);

inline std::strong_ordering magnus_cmp(FreeWord const &w1, FreeWord const &w2)
{
	return magnus_compare(w1, w2).order;
}
inline std::strong_ordering magnus_cmp(KernelWord const &k1, KernelWord const &k2,
                                       OrderedGroup const &group)
{
	return magnus_compare(k1, k2, group).order;
}

/// Single comparison at a fixed cap, no deepening.
std::strong_ordering magnus_cmp_at_cap(FreeWord const &w1, FreeWord const &w2, int cap);
std::strong_ordering magnus_cmp_at_cap(KernelWord const &k1, KernelWord const &k2,
                                       OrderedGroup const &group, int cap);

/// w > 1 in the Magnus order.
bool is_positive(FreeWord const &w);
bool is_positive(KernelWord const &k, OrderedGroup const &group);

} // namespace ordgroups
