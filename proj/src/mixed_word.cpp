#include "ordgroups/mixed_word.hpp"

#include <stdexcept>

#include "ordgroups/text.hpp"

namespace ordgroups {

namespace {

bool is_trivial(Syllable const &s, OrderedGroup const &group)
{
	if (auto const *w = std::get_if<FreeWord>(&s))
		return w->empty();
	return group.is_identity(std::get<Element>(s));
}

// Pushes onto a stack that is already in normal form.
void push_syllable(std::vector<Syllable> &stack, Syllable s, OrderedGroup const &group)
{
	if (is_trivial(s, group))
		return;
	if (stack.empty() || stack.back().index() != s.index())
	{
		stack.push_back(std::move(s));
		return;
	}
	Syllable merged = std::holds_alternative<FreeWord>(s)
	                      ? Syllable(std::get<FreeWord>(stack.back()) * std::get<FreeWord>(s))
	                      : Syllable(group.mul(std::get<Element>(stack.back()),
	                                           std::get<Element>(s)));
	stack.pop_back();
	if (!is_trivial(merged, group))
		stack.push_back(std::move(merged));
}

} // namespace

MixedWord MixedWord::normalize(std::vector<Syllable> const &raw, OrderedGroup const &group)
{
	MixedWord out;
	for (auto const &s : raw)
	{
		if (auto const *w = std::get_if<FreeWord>(&s))
		{
			if (w->max_generator() > group.rank())
				throw std::out_of_range("free letter outside rank " +
				                        std::to_string(group.rank()));
			push_syllable(out.syllables_, *w, group);
		}
		else
		{
			group.require(std::get<Element>(s));
			push_syllable(out.syllables_, s, group);
		}
	}
	return out;
}

MixedWord MixedWord::from_free(FreeWord const &w)
{
	MixedWord out;
	if (!w.empty())
		out.syllables_.push_back(w);
	return out;
}

MixedWord MixedWord::from_element(Element const &g, OrderedGroup const &group)
{
	return normalize({Syllable(g)}, group);
}

bool MixedWord::is_normal(OrderedGroup const &group) const
{
	for (std::size_t i = 0; i < syllables_.size(); ++i)
	{
		auto const &s = syllables_[i];
		if (i > 0 && syllables_[i - 1].index() == s.index())
			return false;
		if (auto const *w = std::get_if<FreeWord>(&s))
		{
			if (w->empty() || FreeWord::reduce(w->letters()) != *w ||
			    w->max_generator() > group.rank())
				return false;
		}
		else
		{
			auto const &g = std::get<Element>(s);
			if (!group.accepts(g) || group.is_identity(g))
				return false;
		}
	}
	return true;
}

MixedWord mixed_mul(MixedWord const &u, MixedWord const &v, OrderedGroup const &group)
{
	std::vector<Syllable> raw = u.syllables();
	raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
	return MixedWord::normalize(raw, group);
}

MixedWord mixed_inv(MixedWord const &u, OrderedGroup const &group)
{
	std::vector<Syllable> raw;
	raw.reserve(u.syllables().size());
	for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it)
	{
		if (auto const *w = std::get_if<FreeWord>(&*it))
			raw.emplace_back(w->inverse());
		else
			raw.emplace_back(group.inv(std::get<Element>(*it)));
	}
	return MixedWord::normalize(raw, group);
}

Element pi1(MixedWord const &u, OrderedGroup const &group)
{
	Element r = group.identity();
	for (auto const &s : u.syllables())
	{
		if (auto const *w = std::get_if<FreeWord>(&s))
			r = group.mul(r, group.evaluate(*w));
		else
			r = group.mul(r, std::get<Element>(s));
	}
	return r;
}

Element pi2(FreeWord const &v, OrderedGroup const &group)
{
	return group.evaluate(v);
}

std::string format_mixed_word(MixedWord const &u, OrderedGroup const &group)
{
	if (u.empty())
		return "1";
	std::string out;
	for (auto const &s : u.syllables())
	{
		if (!out.empty())
			out += ' ';
		if (auto const *w = std::get_if<FreeWord>(&s))
			out += format_free_word(*w, 's');
		else
			out += "g{" + group.format(std::get<Element>(s)) + "}";
	}
	return out;
}

MixedWord parse_mixed_word(std::string_view text, OrderedGroup const &group)
{
	std::vector<Syllable> raw;
	for (auto const &t : tokenize_word(text))
	{
		switch (t.kind)
		{
		case WordToken::Kind::Identity:
			break;
		case WordToken::Kind::Generator: {
			if (t.prefix != 's')
				throw std::invalid_argument("mixed words use s-letters, got x" +
				                            std::to_string(t.gen));
			if (t.gen > group.rank())
				throw std::out_of_range("generator s" + std::to_string(t.gen) +
				                        " outside rank " + std::to_string(group.rank()));
			long n = t.exponent < 0 ? -t.exponent : t.exponent;
			std::vector<Letter> ls(n, Letter{t.gen, t.exponent < 0 ? -1 : 1});
			raw.emplace_back(FreeWord::reduce(ls));
			break;
		}
		case WordToken::Kind::GroupLiteral: {
			Element g = group.parse(t.body);
			Element base = t.exponent < 0 ? group.inv(g) : g;
			long n = t.exponent < 0 ? -t.exponent : t.exponent;
			for (long i = 0; i < n; ++i)
				raw.emplace_back(base);
			break;
		}
		case WordToken::Kind::KernelLiteral:
			throw std::invalid_argument("kernel letters x{...} are not allowed in a mixed word");
		}
	}
	return MixedWord::normalize(raw, group);
}

} // namespace ordgroups
