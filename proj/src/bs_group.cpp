#include <charconv>
#include <stdexcept>

#include "key_codec.hpp"
#include "ordgroups/group.hpp"
#include "ordgroups/text.hpp"

namespace ordgroups {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

class BS1mGroup final : public OrderedGroup
{
  public:
	explicit BS1mGroup(int m) : m_(m)
	{
		set_generators({BSElement{BigRational(1), 0}, BSElement{BigRational(0), 1}});
	}

	std::string spec() const override { return "BS(1," + std::to_string(m_) + ")"; }

	Element identity() const override { return BSElement{BigRational(0), 0}; }

	Element mul(Element const &g, Element const &h) const override
	{
		auto const &x = get(g);
		auto const &y = get(h);
		return BSElement{x.a + power(x.k) * y.a, x.k + y.k};
	}

	Element inv(Element const &g) const override
	{
		auto const &x = get(g);
		return BSElement{-(power(-x.k) * x.a), -x.k};
	}

	// g < h iff g^-1 h = (m^-k (b - a), l - k) lies in the positive cone
	std::strong_ordering cmp(Element const &g, Element const &h) const override
	{
		auto const &x = get(g);
		auto const &y = get(h);
		if (x.k != y.k)
			return x.k <=> y.k;
		if (x.a == y.a)
			return std::strong_ordering::equal;
		bool flip = m_ < 0 && (x.k % 2 != 0);
		bool less = flip ? (y.a < x.a) : (x.a < y.a);
		return less ? std::strong_ordering::less : std::strong_ordering::greater;
	}

	std::string key(Element const &g) const override
	{
		auto const &x = get(g);
		std::string out;
		detail::put_bytes(out, numerator(x.a).str());
		detail::put_bytes(out, denominator(x.a).str());
		detail::put_i64(out, x.k);
		return out;
	}

	Element decode(std::string_view key) const override
	{
		detail::KeyReader r(key);
		BigInt num(std::string(r.bytes()));
		BigInt den(std::string(r.bytes()));
		auto k = r.i64();
		r.finish();
		BSElement e{BigRational(num, den), k};
		require(e);
		return e;
	}

	bool accepts(Element const &g) const override
	{
		auto const *e = std::get_if<BSElement>(&g);
		if (!e)
			return false;
		BigInt den = denominator(e->a);
		if (m_ == -1)
			return den == 1;
		while (den % m_ == 0)
			den /= m_;
		return den == 1;
	}

	std::string format(Element const &g) const override
	{
		auto const &x = get(g);
		return x.a.str() + ";k=" + std::to_string(x.k);
	}

	// "p/q;k=K", "p;k=K" or "p" (k = 0)
	Element parse(std::string_view literal) const override
	{
		auto lit = trim(literal);
		std::string_view a_part = lit, k_part;
		bool has_k = false;
		if (auto semi = lit.find(';'); semi != std::string_view::npos)
		{
			a_part = trim(lit.substr(0, semi));
			k_part = trim(lit.substr(semi + 1));
			if (k_part.substr(0, 2) != "k=")
				throw std::invalid_argument("bad BS literal '" + std::string(lit) + "'");
			k_part.remove_prefix(2);
			has_k = true;
		}
		auto fail = [&] {
			throw std::invalid_argument("bad BS literal '" + std::string(lit) + "'");
		};
		std::int64_t k = 0;
		if (has_k)
		{
			auto [p, ec] = std::from_chars(k_part.data(), k_part.data() + k_part.size(), k);
			if (ec != std::errc() || p != k_part.data() + k_part.size())
				fail();
		}
		auto valid_int = [](std::string_view s) {
			if (!s.empty() && s[0] == '-')
				s.remove_prefix(1);
			if (s.empty())
				return false;
			for (char c : s)
				if (c < '0' || c > '9')
					return false;
			return true;
		};
		BigRational a;
		if (auto slash = a_part.find('/'); slash != std::string_view::npos)
		{
			auto n = a_part.substr(0, slash), d = a_part.substr(slash + 1);
			if (!valid_int(n) || !valid_int(d) || d[0] == '-')
				fail();
			BigInt den{std::string(d)};
			if (den == 0)
				fail();
			a = BigRational(BigInt{std::string(n)}, den);
		}
		else
		{
			if (!valid_int(a_part))
				fail();
			a = BigRational(BigInt{std::string(a_part)});
		}
		BSElement e{a, k};
		if (!accepts(e))
			throw std::invalid_argument("BS(1," + std::to_string(m_) +
			                            ") literal has inadmissible denominator: '" +
			                            std::string(lit) + "'");
		return e;
	}

  private:
	BSElement const &get(Element const &g) const
	{
		require(g);
		return std::get<BSElement>(g);
	}

	// m^k as an exact rational
	BigRational power(std::int64_t k) const
	{
		if (m_ == -1)
			return BigRational(k % 2 == 0 ? 1 : -1);
		BigInt p = boost::multiprecision::pow(BigInt(m_), static_cast<unsigned>(k < 0 ? -k : k));
		return k >= 0 ? BigRational(p) : BigRational(BigInt(1), p);
	}

	int m_;
};

} // namespace

GroupPtr bs1m_oracle(int m)
{
	if (!(m >= 2 || m == -1))
		throw std::invalid_argument("BS(1,m) oracle requires m >= 2 or m = -1");
	return std::make_shared<BS1mGroup>(m);
}

} // namespace ordgroups
