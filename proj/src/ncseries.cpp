#include "ordgroups/ncseries.hpp"

#include <stdexcept>

namespace ordgroups {

std::strong_ordering shortlex_cmp(Monomial const &a, Monomial const &b)
{
	if (a.size() != b.size())
		return a.size() <=> b.size();
	return a <=> b;
}

Series::Series(int cap) : cap_(cap)
{
	if (cap < 0)
		throw std::invalid_argument("series cap must be >= 0");
}

Series Series::constant(BigInt c, int cap)
{
	Series s(cap);
	s.add_term({}, c);
	return s;
}

Series Series::generator(Var v, int sign, int cap)
{
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("generator sign must be +1 or -1");
	Series s = constant(1, cap);
	return s.times_generator(v, sign);
}

void Series::require_same_cap(Series const &o) const
{
	if (cap_ != o.cap_)
		throw std::invalid_argument("series caps differ (" + std::to_string(cap_) +
		                            " vs " + std::to_string(o.cap_) + ")");
}

BigInt Series::coefficient(Monomial const &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? BigInt(0) : it->second;
}

void Series::add_term(Monomial const &m, BigInt const &c)
{
	if (c == 0 || static_cast<int>(m.size()) > cap_)
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

std::optional<std::pair<Monomial, BigInt>> Series::leading_nonconst() const
{
	auto it = terms_.begin();
	if (it != terms_.end() && it->first.empty())
		++it;
	if (it == terms_.end())
		return std::nullopt;
	return *it;
}

Series Series::times_generator(Var v, int sign) const
{
	Series r(cap_);
	for (auto const &[m, c] : terms_)
	{
		r.add_term(m, c);
		Monomial ext = m;
		BigInt coef = c;
		for (int d = static_cast<int>(m.size()) + 1; d <= cap_; ++d)
		{
			ext.push_back(v);
			if (sign < 0)
				coef = -coef;
			r.add_term(ext, coef);
			if (sign > 0)
				break;
		}
	}
	return r;
}

Series &Series::operator+=(Series const &o)
{
	require_same_cap(o);
	for (auto const &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

Series &Series::operator-=(Series const &o)
{
	require_same_cap(o);
	for (auto const &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

Series operator-(Series const &a)
{
	Series r = a;
	for (auto &[m, c] : r.terms_)
		c = -c;
	return r;
}

Series operator*(Series const &a, Series const &b)
{
	a.require_same_cap(b);
	Series r(a.cap_);
	for (auto const &[ma, ca] : a.terms_)
	{
		for (auto const &[mb, cb] : b.terms_)
		{
			if (static_cast<int>(ma.size() + mb.size()) > a.cap_)
				break; // b's terms are ordered by degree
			Monomial m = ma;
			m.insert(m.end(), mb.begin(), mb.end());
			r.add_term(m, ca * cb);
		}
	}
	return r;
}

std::strong_ordering series_cmp(Series const &f, Series const &g)
{
	if (f.cap() != g.cap())
		throw std::invalid_argument("series_cmp: caps differ");
	auto cf = f.constant_term(), cg = g.constant_term();
	if (cf != cg)
		return cf < cg ? std::strong_ordering::less : std::strong_ordering::greater;
	auto lead = (f - g).leading_nonconst();
	if (!lead)
		return std::strong_ordering::equal;
	return lead->second > 0 ? std::strong_ordering::greater
	                        : std::strong_ordering::less;
}

std::string to_string(Series const &f,
                      std::function<std::string(Var)> const &var_name)
{
	if (f.is_zero())
		return "0";
	std::string out;
	for (auto const &[m, c] : f.terms())
	{
		BigInt mag = c < 0 ? BigInt(-c) : c;
		if (out.empty())
			out += c < 0 ? "-" : "";
		else
			out += c < 0 ? " - " : " + ";
		if (m.empty())
		{
			out += mag.str();
			continue;
		}
		if (mag != 1)
			out += mag.str() + " ";
		for (auto v : m)
			out += var_name(v);
	}
	return out;
}

} // namespace ordgroups
