#include "ordgroups/finite_group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace ordgroups {

FiniteGroupTable FiniteGroupTable::symmetric(int degree)
{
	if (degree < 1 || degree > 6)
		throw std::invalid_argument("symmetric target degree must be in 1..6");
	FiniteGroupTable g;
	g.name_ = "S" + std::to_string(degree);
	std::vector<int> p(degree);
	std::iota(p.begin(), p.end(), 0);
	do
		g.perms_.push_back(p);
	while (std::next_permutation(p.begin(), p.end()));

	std::map<std::vector<int>, int> index;
	for (std::size_t i = 0; i < g.perms_.size(); ++i)
		index[g.perms_[i]] = static_cast<int>(i);
	g.n_ = static_cast<int>(g.perms_.size());
	g.table_.resize(static_cast<std::size_t>(g.n_) * g.n_);
	std::vector<int> r(degree);
	for (int a = 0; a < g.n_; ++a)
		for (int b = 0; b < g.n_; ++b)
		{
			for (int x = 0; x < degree; ++x)
				r[x] = g.perms_[a][g.perms_[b][x]];
			g.table_[static_cast<std::size_t>(a) * g.n_ + b] = index.at(r);
		}
	// composition of permutations is associative; skip the cubic check
	g.finish(false);
	return g;
}

FiniteGroupTable FiniteGroupTable::from_table(std::vector<std::vector<int>> const &table,
                                              std::string name)
{
	FiniteGroupTable g;
	g.name_ = std::move(name);
	g.n_ = static_cast<int>(table.size());
	if (g.n_ == 0)
		throw std::invalid_argument("empty multiplication table");
	for (auto const &row : table)
	{
		if (static_cast<int>(row.size()) != g.n_)
			throw std::invalid_argument("multiplication table is not square");
		for (int v : row)
			if (v < 0 || v >= g.n_)
				throw std::invalid_argument("table entry out of range");
		g.table_.insert(g.table_.end(), row.begin(), row.end());
	}
	g.finish(true);
	return g;
}

void FiniteGroupTable::finish(bool check_associativity)
{
	identity_ = -1;
	for (int e = 0; e < n_ && identity_ < 0; ++e)
	{
		bool ok = true;
		for (int a = 0; a < n_ && ok; ++a)
			ok = mul(e, a) == a && mul(a, e) == a;
		if (ok)
			identity_ = e;
	}
	if (identity_ < 0)
		throw std::invalid_argument(name_ + ": no identity element");
	inverse_.assign(n_, -1);
	for (int a = 0; a < n_; ++a)
	{
		for (int b = 0; b < n_; ++b)
			if (mul(a, b) == identity_ && mul(b, a) == identity_)
			{
				inverse_[a] = b;
				break;
			}
		if (inverse_[a] < 0)
			throw std::invalid_argument(name_ + ": element " + std::to_string(a) +
			                            " has no inverse");
	}
	if (!check_associativity)
		return;
	for (int a = 0; a < n_; ++a)
		for (int b = 0; b < n_; ++b)
			for (int c = 0; c < n_; ++c)
				if (mul(mul(a, b), c) != mul(a, mul(b, c)))
					throw std::invalid_argument(name_ + ": multiplication is not associative");
}

FiniteGroupTable FiniteGroupTable::parse(std::string_view text, std::string name)
{
	std::istringstream in{std::string(text)};
	int n = 0;
	if (!(in >> n) || n <= 0)
		throw std::invalid_argument("table file: expected a positive order");
	std::vector<std::vector<int>> table(n, std::vector<int>(n));
	for (auto &row : table)
		for (auto &v : row)
			if (!(in >> v))
				throw std::invalid_argument("table file: expected " + std::to_string(n * n) +
				                            " entries");
	std::string extra;
	if (in >> extra)
		throw std::invalid_argument("table file: trailing data");
	return from_table(table, std::move(name));
}

std::string FiniteGroupTable::format_element(int a) const
{
	if (perms_.empty())
		return std::to_string(a);
	std::string out = "[";
	for (std::size_t i = 0; i < perms_[a].size(); ++i)
	{
		if (i)
			out += ',';
		out += std::to_string(perms_[a][i] + 1);
	}
	return out + "]";
}

FiniteGroupTable make_target(std::string_view spec_in)
{
	std::string spec(spec_in);
	static std::regex const sym(R"(S([0-9]+))");
	std::smatch m;
	if (std::regex_match(spec, m, sym))
		return FiniteGroupTable::symmetric(std::stoi(m[1]));
	std::ifstream f(spec);
	if (!f)
		throw std::invalid_argument("unknown target '" + spec + "' (expected Sk or a table file)");
	std::stringstream ss;
	ss << f.rdbuf();
	return FiniteGroupTable::parse(ss.str(), spec);
}

} // namespace ordgroups
