#include <charconv>
#include <limits>
#include <stdexcept>

#include "key_codec.hpp"
#include "ordgroups/group.hpp"
#include "ordgroups/text.hpp"

namespace ordgroups {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
	std::int64_t r;
	if (__builtin_add_overflow(a, b, &r))
		throw std::overflow_error("Z^n coordinate overflow");
	return r;
}

class ZnGroup final : public OrderedGroup
{
  public:
	explicit ZnGroup(int n) : n_(n)
	{
		std::vector<Element> gens;
		for (int i = 0; i < n; ++i)
		{
			ZnElement e{std::vector<std::int64_t>(n, 0)};
			e.coords[i] = 1;
			gens.emplace_back(std::move(e));
		}
		set_generators(std::move(gens));
	}

	std::string spec() const override { return "Z^" + std::to_string(n_); }

	Element identity() const override
	{
		return ZnElement{std::vector<std::int64_t>(n_, 0)};
	}

	Element mul(Element const &g, Element const &h) const override
	{
		auto const &a = get(g).coords;
		auto const &b = get(h).coords;
		ZnElement r{std::vector<std::int64_t>(n_)};
		for (int i = 0; i < n_; ++i)
			r.coords[i] = checked_add(a[i], b[i]);
		return r;
	}

	Element inv(Element const &g) const override
	{
		ZnElement r = get(g);
		for (auto &c : r.coords)
		{
			if (c == std::numeric_limits<std::int64_t>::min())
				throw std::overflow_error("Z^n coordinate overflow");
			c = -c;
		}
		return r;
	}

	std::strong_ordering cmp(Element const &g, Element const &h) const override
	{
		return get(g).coords <=> get(h).coords;
	}

	// byte order of keys equals the lexicographic order
	std::string key(Element const &g) const override
	{
		std::string out;
		detail::put_u32(out, static_cast<std::uint32_t>(n_));
		for (auto c : get(g).coords)
			detail::put_i64(out, c);
		return out;
	}

	Element decode(std::string_view key) const override
	{
		detail::KeyReader r(key);
		if (r.u32() != static_cast<std::uint32_t>(n_))
			throw std::invalid_argument("key has wrong dimension");
		ZnElement e;
		for (int i = 0; i < n_; ++i)
			e.coords.push_back(r.i64());
		r.finish();
		return e;
	}

	bool accepts(Element const &g) const override
	{
		auto const *e = std::get_if<ZnElement>(&g);
		return e && static_cast<int>(e->coords.size()) == n_;
	}

	std::string format(Element const &g) const override
	{
		std::string out;
		for (auto c : get(g).coords)
		{
			if (!out.empty())
				out += ',';
			out += std::to_string(c);
		}
		return out;
	}

	Element parse(std::string_view literal) const override
	{
		ZnElement e;
		std::string_view rest = literal;
		while (true)
		{
			auto comma = rest.find(',');
			auto part = trim(rest.substr(0, comma));
			std::int64_t v = 0;
			auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
			if (part.empty() || ec != std::errc() || p != part.data() + part.size())
				throw std::invalid_argument("bad Z^n literal '" +
				                            std::string(literal) + "'");
			e.coords.push_back(v);
			if (comma == std::string_view::npos)
				break;
			rest = rest.substr(comma + 1);
		}
		if (static_cast<int>(e.coords.size()) != n_)
			throw std::invalid_argument("Z^" + std::to_string(n_) +
			                            " literal needs " + std::to_string(n_) +
			                            " coordinates: '" + std::string(literal) +
			                            "'");
		return e;
	}

  private:
	ZnElement const &get(Element const &g) const
	{
		require(g);
		return std::get<ZnElement>(g);
	}

	int n_;
};

} // namespace

GroupPtr zn_lex_oracle(int n)
{
	if (n < 1)
		throw std::invalid_argument("Z^n requires n >= 1");
	return std::make_shared<ZnGroup>(n);
}

} // namespace ordgroups
