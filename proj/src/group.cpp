#include "ordgroups/group.hpp"

#include <charconv>
#include <regex>
#include <stdexcept>

#include "ordgroups/text.hpp"

namespace ordgroups {

void OrderedGroup::set_generators(std::vector<Element> gens)
{
	generators_ = std::move(gens);
	inverse_generators_.clear();
	for (auto const &g : generators_)
		inverse_generators_.push_back(inv(g));
}

Element OrderedGroup::generator(int gen, int sign) const
{
	if (gen < 1 || gen > rank())
		throw std::out_of_range("generator s" + std::to_string(gen) +
		                        " outside rank " + std::to_string(rank()));
	return sign > 0 ? generators_[gen - 1] : inverse_generators_[gen - 1];
}

void OrderedGroup::require(Element const &g) const
{
	if (!accepts(g))
		throw std::invalid_argument("element does not belong to group " + spec());
}

Element OrderedGroup::evaluate(FreeWord const &w) const
{
	Element r = identity();
	for (auto const &l : w.letters())
		r = mul(r, generator(l.gen, l.sign));
	return r;
}

char const *to_string(std::strong_ordering o)
{
	if (o < 0)
		return "LESS";
	if (o > 0)
		return "GREATER";
	return "EQUAL";
}

GroupPtr make_group(std::string_view spec_in)
{
	std::string spec(trim(spec_in));
	std::smatch m;
	static std::regex const zn(R"(Z\^([0-9]+))");
	static std::regex const bs(R"(BS\(\s*1\s*,\s*(-?[0-9]+)\s*\))");
	static std::regex const fr(R"(F([0-9]+))");
	auto to_int = [](std::string const &s) {
		int v = 0;
		auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
		if (ec != std::errc() || p != s.data() + s.size())
			throw std::invalid_argument("integer out of range: " + s);
		return v;
	};
	if (std::regex_match(spec, m, zn))
		return zn_lex_oracle(to_int(m[1]));
	if (std::regex_match(spec, m, bs))
		return bs1m_oracle(to_int(m[1]));
	if (std::regex_match(spec, m, fr))
		return free_oracle(to_int(m[1]));
	throw std::invalid_argument("unknown group spec '" + spec +
	                            "' (expected Z^n, BS(1,m), or Fr)");
}

} // namespace ordgroups
