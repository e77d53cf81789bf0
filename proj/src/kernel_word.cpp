#include "ordgroups/kernel_word.hpp"

#include <charconv>
#include <stdexcept>

#include "ordgroups/text.hpp"

namespace ordgroups {

KernelWord KernelWord::reduce(std::vector<KernelLetter> const &raw)
{
	KernelWord k;
	for (auto const &l : raw)
	{
		if (l.sign != 1 && l.sign != -1)
			throw std::invalid_argument("kernel letter sign must be +1 or -1");
		k *= l;
	}
	return k;
}

KernelWord KernelWord::letter(Element g, int gen, int sign)
{
	return reduce({KernelLetter{std::move(g), gen, sign}});
}

KernelWord KernelWord::inverse() const
{
	KernelWord k;
	k.letters_.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		k.letters_.push_back(it->inverse());
	return k;
}

KernelWord &KernelWord::operator*=(KernelLetter const &l)
{
	if (!letters_.empty() && letters_.back().cancels(l))
		letters_.pop_back();
	else
		letters_.push_back(l);
	return *this;
}

KernelWord &KernelWord::operator*=(KernelWord const &b)
{
	for (auto const &l : b.letters_)
		*this *= l;
	return *this;
}

KernelWord operator*(KernelWord const &a, KernelWord const &b)
{
	KernelWord r = a;
	r *= b;
	return r;
}

void validate(KernelWord const &k, OrderedGroup const &group)
{
	for (auto const &l : k.letters())
	{
		group.require(l.g);
		if (l.gen < 1 || l.gen > group.rank())
			throw std::out_of_range("kernel letter index " + std::to_string(l.gen) +
			                        " outside rank " + std::to_string(group.rank()));
	}
}

std::string format_kernel_word(KernelWord const &k, OrderedGroup const &group)
{
	if (k.empty())
		return "1";
	std::string out;
	auto const &ls = k.letters();
	for (std::size_t i = 0; i < ls.size();)
	{
		std::size_t j = i;
		while (j < ls.size() && ls[j] == ls[i])
			++j;
		if (!out.empty())
			out += ' ';
		out += format_power("x{" + group.format(ls[i].g) + "," +
		                        std::to_string(ls[i].gen) + "}",
		                    static_cast<long>(j - i) * ls[i].sign);
		i = j;
	}
	return out;
}

KernelWord parse_kernel_word(std::string_view text, OrderedGroup const &group)
{
	std::vector<KernelLetter> raw;
	for (auto const &t : tokenize_word(text))
	{
		if (t.kind == WordToken::Kind::Identity)
			continue;
		if (t.kind != WordToken::Kind::KernelLiteral)
			throw std::invalid_argument("kernel words contain only x{g,i} letters");
		auto [lit, idx] = split_last_comma(t.body);
		// accept both x{1,0,2} and x{g{1,0},2}
		if (lit.size() >= 3 && lit.substr(0, 2) == "g{" && lit.back() == '}')
			lit = lit.substr(2, lit.size() - 3);
		int gen = 0;
		auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), gen);
		if (ec != std::errc() || p != idx.data() + idx.size())
			throw std::invalid_argument("bad generator index in x{" + t.body + "}");
		KernelLetter l{group.parse(lit), gen, t.exponent < 0 ? -1 : 1};
		long n = t.exponent < 0 ? -t.exponent : t.exponent;
		for (long i = 0; i < n; ++i)
			raw.push_back(l);
	}
	auto k = KernelWord::reduce(raw);
	validate(k, group);
	return k;
}

} // namespace ordgroups
