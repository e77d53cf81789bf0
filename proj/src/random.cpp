#include "ordgroups/random.hpp"

namespace ordgroups {

// Draws are sequenced by statement or braced initializers; rng calls inside
// one function-call argument list would make the order unspecified.

FreeWord random_free_word(Rng &rng, int rank, int max_len)
{
	int len = rng.between(0, max_len);
	std::vector<Letter> ls;
	while (static_cast<int>(ls.size()) < len)
	{
		Letter l{rng.between(1, rank), rng.sign()};
		if (!ls.empty() && ls.back().cancels(l))
			continue;
		ls.push_back(l);
	}
	return FreeWord::reduce(ls, rank);
}

Element random_element(Rng &rng, OrderedGroup const &group, int radius)
{
	int len = rng.between(0, radius);
	Element e = group.identity();
	for (int i = 0; i < len; ++i)
	{
		int gen = rng.between(1, group.rank());
		int sign = rng.sign();
		e = group.mul(e, group.generator(gen, sign));
	}
	return e;
}

KernelWord random_kernel_word(Rng &rng, OrderedGroup const &group, int max_len, int radius)
{
	int len = rng.between(0, max_len);
	KernelWord k;
	while (static_cast<int>(k.length()) < len)
	{
		KernelLetter l{random_element(rng, group, radius), rng.between(1, group.rank()), rng.sign()};
		if (!k.empty() && k.letters().back().cancels(l))
			continue;
		k *= l;
	}
	return k;
}

MixedWord random_mixed_word(Rng &rng, OrderedGroup const &group, int max_syllables, int radius)
{
	int n = rng.between(0, max_syllables);
	std::vector<Syllable> raw;
	for (int i = 0; i < n; ++i)
	{
		if (rng.next() & 1)
			raw.emplace_back(random_free_word(rng, group.rank(), 3));
		else
			raw.emplace_back(random_element(rng, group, radius));
	}
	return MixedWord::normalize(raw, group);
}

MixedWord random_kernel_mixed_word(Rng &rng, OrderedGroup const &group, int factors, int radius)
{
	MixedWord out;
	for (int f = 0; f < factors; ++f)
	{
		Element g = random_element(rng, group, radius);
		int i = rng.between(1, group.rank());
		std::vector<Syllable> x = {g, FreeWord::generator(i),
		                           group.inv(group.mul(g, group.generator(i)))};
		MixedWord gen = MixedWord::normalize(x, group);
		if (rng.sign() < 0)
			gen = mixed_inv(gen, group);
		MixedWord c = random_mixed_word(rng, group, 3, radius);
		out = mixed_mul(out, mixed_mul(mixed_mul(c, gen, group), mixed_inv(c, group), group), group);
	}
	return out;
}

FiberElement random_fiber_element(Rng &rng, GroupPtr const &group, int kernel_len, int free_len,
                                  int radius)
{
	auto k = random_kernel_word(rng, *group, kernel_len, radius);
	auto v = random_free_word(rng, group->rank(), free_len);
	return FiberElement::compose(k, v, group);
}

} // namespace ordgroups
