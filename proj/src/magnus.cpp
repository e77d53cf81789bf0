#include "ordgroups/magnus.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordgroups {

std::strong_ordering varkey_cmp(OrderedGroup const &group, Element const &g, int i,
                                Element const &h, int j)
{
	if (auto c = group.cmp(g, h); c != 0)
		return c;
	return i <=> j;
}

VariableRanking::VariableRanking(OrderedGroup const &group,
                                 std::span<KernelWord const *const> words)
    : group_(&group)
{
	for (auto const *k : words)
		for (auto const &l : k->letters())
			vars_.emplace_back(l.g, l.gen);
	auto less = [&](auto const &a, auto const &b) {
		return varkey_cmp(group, a.first, a.second, b.first, b.second) < 0;
	};
	std::sort(vars_.begin(), vars_.end(), less);
	vars_.erase(std::unique(vars_.begin(), vars_.end(),
	                        [&](auto const &a, auto const &b) {
		                        return a.second == b.second && a.first == b.first;
	                        }),
	            vars_.end());
}

Var VariableRanking::rank_of(KernelLetter const &l) const
{
	auto it = std::lower_bound(vars_.begin(), vars_.end(), l, [&](auto const &v, auto const &x) {
		return varkey_cmp(*group_, v.first, v.second, x.g, x.gen) < 0;
	});
	if (it == vars_.end() || it->second != l.gen || !(it->first == l.g))
		throw std::invalid_argument("kernel letter not in variable ranking");
	return static_cast<Var>(it - vars_.begin());
}

Series expand(FreeWord const &w, int cap)
{
	Series s = Series::constant(1, cap);
	for (auto const &l : w.letters())
		s = s.times_generator(l.gen, l.sign);
	return s;
}

Series expand(KernelWord const &k, VariableRanking const &vars, int cap)
{
	Series s = Series::constant(1, cap);
	for (auto const &l : k.letters())
		s = s.times_generator(vars.rank_of(l), l.sign);
	return s;
}

int magnus_cap_limit(std::size_t len1, std::size_t len2)
{
	return static_cast<int>(2 * (len1 + len2) + 2);
}

namespace {

// Deepening over caps 2, 4, 8, ...; `at_cap` compares at one cap.
template <class AtCap>
MagnusComparison deepen(std::size_t len1, std::size_t len2, AtCap const &at_cap)
{
	int limit = magnus_cap_limit(len1, len2);
	for (int cap = 2;; cap *= 2)
	{
		int c = std::min(cap, limit);
		if (auto o = at_cap(c); o != 0)
			return {o, c};
		if (c >= limit)
			throw std::logic_error("Magnus comparison undecided at cap " +
			                       std::to_string(c) +
			                       " for distinct reduced words (expansion is not injective?)");
	}
}

} // namespace

std::strong_ordering magnus_cmp_at_cap(FreeWord const &w1, FreeWord const &w2, int cap)
{
	return series_cmp(expand(w1, cap), expand(w2, cap));
}

std::strong_ordering magnus_cmp_at_cap(KernelWord const &k1, KernelWord const &k2,
                                       OrderedGroup const &group, int cap)
{
	KernelWord const *ws[] = {&k1, &k2};
	VariableRanking vars(group, ws);
	return series_cmp(expand(k1, vars, cap), expand(k2, vars, cap));
}

MagnusComparison magnus_compare(FreeWord const &w1, FreeWord const &w2)
{
	if (w1 == w2)
		return {};
	return deepen(w1.length(), w2.length(),
	              [&](int cap) { return magnus_cmp_at_cap(w1, w2, cap); });
}

MagnusComparison magnus_compare(KernelWord const &k1, KernelWord const &k2,
                                OrderedGroup const &group)
{
	if (k1 == k2)
		return {};
	KernelWord const *ws[] = {&k1, &k2};
	VariableRanking vars(group, ws);
	return deepen(k1.length(), k2.length(), [&](int cap) {
		return series_cmp(expand(k1, vars, cap), expand(k2, vars, cap));
	});
}

bool is_positive(FreeWord const &w)
{
	return magnus_cmp(w, FreeWord{}) > 0;
}

bool is_positive(KernelWord const &k, OrderedGroup const &group)
{
	return magnus_cmp(k, KernelWord{}, group) > 0;
}

} // namespace ordgroups
