#include "ordgroups/text.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ordgroups {

namespace {

constexpr long max_exponent = 1'000'000;

[[noreturn]] void bad_token(std::string_view tok, char const *why)
{
	throw std::invalid_argument("malformed token '" + std::string(tok) +
	                            "': " + why);
}

long parse_long(std::string_view s, std::string_view tok)
{
	long v = 0;
	auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
	if (ec != std::errc() || p != s.data() + s.size())
		bad_token(tok, "expected an integer");
	return v;
}

WordToken parse_token(std::string_view tok)
{
	WordToken t;
	std::string_view base = tok;

	// exponent suffix: everything after the last '^' outside braces
	auto close = tok.rfind('}');
	auto caret = tok.rfind('^');
	if (caret != std::string_view::npos &&
	    (close == std::string_view::npos || caret > close))
	{
		base = tok.substr(0, caret);
		t.exponent = parse_long(tok.substr(caret + 1), tok);
		if (t.exponent > max_exponent || t.exponent < -max_exponent)
			bad_token(tok, "exponent too large");
		if (t.exponent == 0)
			bad_token(tok, "zero exponent");
	}
	if (base.empty())
		bad_token(tok, "empty base");

	if (base == "1")
	{
		t.kind = WordToken::Kind::Identity;
		return t;
	}
	if ((base[0] == 'g' || base[0] == 'x') && base.size() >= 2 &&
	    base[1] == '{')
	{
		if (base.back() != '}')
			bad_token(tok, "unterminated literal");
		t.kind = base[0] == 'g' ? WordToken::Kind::GroupLiteral
		                        : WordToken::Kind::KernelLiteral;
		t.body = std::string(base.substr(2, base.size() - 3));
		return t;
	}
	if (base[0] == 's' || base[0] == 'x')
	{
		t.kind = WordToken::Kind::Generator;
		t.prefix = base[0];
		auto digits = base.substr(1);
		if (digits.empty() ||
		    !std::isdigit(static_cast<unsigned char>(digits[0])))
			bad_token(tok, "expected generator index");
		long g = parse_long(digits, tok);
		if (g < 1 || g > 1'000'000)
			bad_token(tok, "generator index out of range");
		t.gen = static_cast<int>(g);
		return t;
	}
	bad_token(tok, "unknown token");
}

} // namespace

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

std::vector<WordToken> tokenize_word(std::string_view text)
{
	std::vector<WordToken> out;
	std::size_t i = 0;
	while (i < text.size())
	{
		while (i < text.size() &&
		       std::isspace(static_cast<unsigned char>(text[i])))
			++i;
		if (i == text.size())
			break;
		std::size_t start = i;
		int depth = 0;
		while (i < text.size() &&
		       (depth > 0 || !std::isspace(static_cast<unsigned char>(text[i]))))
		{
			if (text[i] == '{')
				++depth;
			else if (text[i] == '}' && --depth < 0)
				bad_token(text.substr(start, i - start + 1), "unbalanced '}'");
			++i;
		}
		if (depth != 0)
			bad_token(text.substr(start), "unbalanced '{'");
		out.push_back(parse_token(text.substr(start, i - start)));
	}
	return out;
}

FreeWord parse_free_word(std::string_view text, int rank)
{
	std::vector<Letter> raw;
	for (auto const &t : tokenize_word(text))
	{
		if (t.kind == WordToken::Kind::Identity)
			continue;
		if (t.kind != WordToken::Kind::Generator)
			throw std::invalid_argument("free word may only contain generators");
		int sign = t.exponent < 0 ? -1 : 1;
		for (long e = 0; e < (t.exponent < 0 ? -t.exponent : t.exponent); ++e)
			raw.push_back({t.gen, sign});
	}
	return FreeWord::reduce(raw, rank);
}

std::string format_power(std::string const &base, long e)
{
	if (e == 1)
		return base;
	return base + "^" + std::to_string(e);
}

std::string format_free_word(FreeWord const &w, char prefix)
{
	if (w.empty())
		return "1";
	std::string out;
	auto const &ls = w.letters();
	for (std::size_t i = 0; i < ls.size();)
	{
		std::size_t j = i;
		while (j < ls.size() && ls[j] == ls[i])
			++j;
		if (!out.empty())
			out += ' ';
		out += format_power(prefix + std::to_string(ls[i].gen),
		                    static_cast<long>(j - i) * ls[i].sign);
		i = j;
	}
	return out;
}

std::pair<std::string_view, std::string_view> split_last_comma(std::string_view body)
{
	int depth = 0;
	std::size_t pos = std::string_view::npos;
	for (std::size_t i = 0; i < body.size(); ++i)
	{
		if (body[i] == '{')
			++depth;
		else if (body[i] == '}')
			--depth;
		else if (body[i] == ',' && depth == 0)
			pos = i;
	}
	if (pos == std::string_view::npos)
		throw std::invalid_argument("expected ',' in '" + std::string(body) + "'");
	return {trim(body.substr(0, pos)), trim(body.substr(pos + 1))};
}

} // namespace ordgroups
