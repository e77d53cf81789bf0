#include "ordgroups/gentorsion.hpp"

#include <set>
#include <stdexcept>

#include "ordgroups/errors.hpp"

namespace ordgroups {

bool verify_certificate(OrderedGroup const &group, GenTorsionCertificate const &cert)
{
	group.require(cert.base);
	if (group.is_identity(cert.base) || cert.conjugators.empty())
		return false;
	Element product = group.identity();
	for (auto const &c : cert.conjugators)
		product = group.mul(product, group.mul(group.inv(c), group.mul(cert.base, c)));
	return group.is_identity(product);
}

bool verify_certificate(Presentation const &, FreeWord const &, std::vector<FreeWord> const &)
{
	throw WordProblemUnavailable(
	    "generalized torsion certificates need a normal form; this group is only "
	    "given by a presentation");
}

std::vector<Element> ball(OrderedGroup const &group, int radius)
{
	if (radius < 0)
		throw std::invalid_argument("ball radius must be >= 0");
	std::vector<Element> out{group.identity()};
	std::set<std::string> seen{group.key(out.front())};
	std::size_t layer_begin = 0;
	for (int r = 1; r <= radius; ++r)
	{
		std::size_t layer_end = out.size();
		for (std::size_t i = layer_begin; i < layer_end; ++i)
			for (int gen = 1; gen <= group.rank(); ++gen)
				for (int sign : {1, -1})
				{
					Element e = group.mul(out[i], group.generator(gen, sign));
					if (seen.insert(group.key(e)).second)
						out.push_back(std::move(e));
				}
		layer_begin = layer_end;
	}
	return out;
}

std::optional<GenTorsionCertificate> search_certificate(OrderedGroup const &group,
                                                        Element const &g, int max_k,
                                                        int radius)
{
	if (max_k < 1 || max_k > 3 || radius < 0 || radius > 3)
		throw std::invalid_argument("search_certificate requires 1 <= max_k <= 3 and 0 <= radius <= 3");
	group.require(g);
	if (group.is_identity(g))
		return std::nullopt;

	auto elems = ball(group, radius);
	std::vector<Element> conj;
	conj.reserve(elems.size());
	for (auto const &c : elems)
		conj.push_back(group.mul(group.inv(c), group.mul(g, c)));

	for (int k = 1; k <= max_k; ++k)
	{
		std::vector<std::size_t> idx(k, 0);
		while (true)
		{
			Element product = group.identity();
			for (auto i : idx)
				product = group.mul(product, conj[i]);
			if (group.is_identity(product))
			{
				GenTorsionCertificate cert{g, {}};
				for (auto i : idx)
					cert.conjugators.push_back(elems[i]);
				return cert;
			}
			// odometer, last position fastest
			int pos = k - 1;
			while (pos >= 0 && ++idx[pos] == elems.size())
				idx[pos--] = 0;
			if (pos < 0)
				break;
		}
	}
	return std::nullopt;
}

} // namespace ordgroups
