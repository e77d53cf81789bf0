#include "ordgroups/rs_rewrite.hpp"

#include "ordgroups/errors.hpp"

namespace ordgroups {

KernelWord tau(MixedWord const &w, OrderedGroup const &group)
{
	KernelWord out;
	Element state = group.identity();
	for (auto const &s : w.syllables())
	{
		if (auto const *fw = std::get_if<FreeWord>(&s))
		{
			for (auto const &l : fw->letters())
			{
				if (l.sign > 0)
				{
					out *= KernelLetter{state, l.gen, 1};
					state = group.mul(state, group.generator(l.gen, 1));
				}
				else
				{
					state = group.mul(state, group.generator(l.gen, -1));
					out *= KernelLetter{state, l.gen, -1};
				}
			}
		}
		else
		{
			state = group.mul(state, std::get<Element>(s));
		}
	}
	if (!group.is_identity(state))
		throw NotInKernel(group.format(state));
	return out;
}

MixedWord substitute(KernelWord const &k, OrderedGroup const &group)
{
	std::vector<Syllable> raw;
	raw.reserve(4 * k.length());
	for (auto const &l : k.letters())
	{
		// x_{g,i} = g . s_i . (s~_i^-1 g^-1)
		Element tail = group.inv(group.mul(l.g, group.generator(l.gen, 1)));
		if (l.sign > 0)
		{
			raw.emplace_back(l.g);
			raw.emplace_back(FreeWord::generator(l.gen, 1));
			raw.emplace_back(std::move(tail));
		}
		else
		{
			raw.emplace_back(group.inv(tail));
			raw.emplace_back(FreeWord::generator(l.gen, -1));
			raw.emplace_back(group.inv(l.g));
		}
	}
	return MixedWord::normalize(raw, group);
}

} // namespace ordgroups
