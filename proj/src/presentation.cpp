#include "ordgroups/presentation.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ordgroups/text.hpp"

namespace ordgroups {

namespace {

bool valid_name(std::string_view s)
{
	if (s.empty() || s == "1")
		return false;
	for (char c : s)
		if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
			return false;
	return !std::isdigit(static_cast<unsigned char>(s[0]));
}

std::vector<std::string_view> split_ws(std::string_view s)
{
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < s.size())
	{
		while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
			++i;
		std::size_t j = i;
		while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
			++j;
		if (j > i)
			out.push_back(s.substr(i, j - i));
		i = j;
	}
	return out;
}

FreeWord power(int gen, long e)
{
	std::vector<Letter> ls(static_cast<std::size_t>(e < 0 ? -e : e), Letter{gen, e < 0 ? -1 : 1});
	return FreeWord::reduce(ls);
}

} // namespace

Presentation::Presentation(std::vector<std::string> names, std::vector<FreeWord> relators)
    : names_(std::move(names))
{
	std::set<std::string> seen;
	for (auto const &n : names_)
	{
		if (!valid_name(n))
			throw std::invalid_argument("invalid generator name '" + n + "'");
		if (!seen.insert(n).second)
			throw std::invalid_argument("duplicate generator name '" + n + "'");
	}
	for (auto const &r : relators)
	{
		if (r.max_generator() > num_generators())
			throw std::out_of_range("relator uses an undeclared generator");
		relators_.push_back(cyclically_reduce(r));
	}
}

int Presentation::generator_index(std::string_view name) const
{
	for (std::size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == name)
			return static_cast<int>(i) + 1;
	throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

FreeWord Presentation::parse_word(std::string_view text) const
{
	FreeWord w;
	for (auto tok : split_ws(text))
	{
		if (tok == "1")
			continue;
		long e = 1;
		auto name = tok;
		if (auto caret = tok.find('^'); caret != std::string_view::npos)
		{
			name = tok.substr(0, caret);
			auto es = tok.substr(caret + 1);
			auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
			if (ec != std::errc() || p != es.data() + es.size() || e > 1'000'000 || e < -1'000'000)
				throw std::invalid_argument("bad exponent in '" + std::string(tok) + "'");
		}
		w *= power(generator_index(name), e);
	}
	return w;
}

std::string Presentation::format_word(FreeWord const &w) const
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
		out += format_power(names_[ls[i].gen - 1], static_cast<long>(j - i) * ls[i].sign);
		i = j;
	}
	return out;
}

Presentation Presentation::with_relator(FreeWord r) const
{
	auto rels = relators_;
	rels.push_back(std::move(r));
	return Presentation(names_, std::move(rels));
}

Presentation parse_presentation(std::string_view text)
{
	std::vector<std::string> names;
	std::vector<std::string> rel_lines;
	bool have_gens = false;
	std::istringstream in{std::string(text)};
	std::string line;
	int lineno = 0;
	while (std::getline(in, line))
	{
		++lineno;
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		auto body = trim(line);
		if (body.empty())
			continue;
		auto colon = body.find(':');
		if (colon == std::string_view::npos)
			throw std::invalid_argument("line " + std::to_string(lineno) +
			                            ": expected 'gens:' or 'rel:'");
		auto key = trim(body.substr(0, colon));
		auto value = trim(body.substr(colon + 1));
		if (key == "gens")
		{
			if (have_gens)
				throw std::invalid_argument("line " + std::to_string(lineno) +
				                            ": duplicate 'gens:' line");
			have_gens = true;
			for (auto n : split_ws(value))
				names.emplace_back(n);
		}
		else if (key == "rel")
			rel_lines.emplace_back(value);
		else
			throw std::invalid_argument("line " + std::to_string(lineno) +
			                            ": unknown key '" + std::string(key) + "'");
	}
	if (!have_gens)
		throw std::invalid_argument("presentation has no 'gens:' line");
	Presentation skeleton(names, {});
	std::vector<FreeWord> rels;
	for (auto const &r : rel_lines)
	{
		if (auto eq = r.find('='); eq != std::string::npos)
			rels.push_back(skeleton.parse_word(std::string_view(r).substr(0, eq)) *
			               skeleton.parse_word(std::string_view(r).substr(eq + 1)).inverse());
		else
			rels.push_back(skeleton.parse_word(r));
	}
	return Presentation(std::move(names), std::move(rels));
}

std::string format_presentation(Presentation const &p)
{
	std::string out = "gens:";
	for (auto const &n : p.names())
		out += " " + n;
	out += "\n";
	for (auto const &r : p.relators())
		out += "rel: " + p.format_word(r) + "\n";
	return out;
}

Presentation higman_presentation()
{
	return parse_presentation("gens: a1 a2 a3 a4\n"
	                          "rel: a2^-1 a1 a2 = a1^2\n"
	                          "rel: a3^-1 a2 a3 = a2^2\n"
	                          "rel: a4^-1 a3 a4 = a3^2\n"
	                          "rel: a1^-1 a4 a1 = a4^2\n");
}

Presentation lemma41_presentation(int m)
{
	if (m < 1)
		throw std::invalid_argument("lemma41:m requires m >= 1");
	return parse_presentation("gens: a1 a2 a3 a4 b\n"
	                          "rel: a2^-1 a1 a2 = a1^2\n"
	                          "rel: a3^-1 a2 a3 = a2^2\n"
	                          "rel: a4^-1 a3 a4 = a3^2\n"
	                          "rel: a1^-1 a4 a1 = a4^2\n"
	                          "rel: a1^-1 b^" +
	                          std::to_string(2 * m) + " a1 = b^" +
	                          std::to_string(2 * m + 1) + "\n");
}

Presentation bs_presentation(int p, int q)
{
	return parse_presentation("gens: b t\nrel: t b^" + std::to_string(p) +
	                          " t^-1 = b^" + std::to_string(q) + "\n");
}

Presentation load_presentation(std::string_view spec_in)
{
	std::string spec(trim(spec_in));
	std::smatch m;
	static std::regex const lemma_m(R"(lemma41:m=(-?[0-9]+))");
	static std::regex const bs(R"(BS\(\s*(-?[0-9]+)\s*,\s*(-?[0-9]+)\s*\))");
	if (spec == "higman")
		return higman_presentation();
	if (spec == "lemma41")
		return lemma41_presentation(1);
	if (std::regex_match(spec, m, lemma_m))
		return lemma41_presentation(std::stoi(m[1]));
	if (std::regex_match(spec, m, bs))
		return bs_presentation(std::stoi(m[1]), std::stoi(m[2]));
	std::ifstream f(spec);
	if (!f)
		throw std::invalid_argument("unknown fixture or unreadable file '" + spec + "'");
	std::stringstream ss;
	ss << f.rdbuf();
	return parse_presentation(ss.str());
}

} // namespace ordgroups
