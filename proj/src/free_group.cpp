#include <stdexcept>

#include "key_codec.hpp"
#include "ordgroups/group.hpp"
#include "ordgroups/magnus.hpp"
#include "ordgroups/text.hpp"

namespace ordgroups {

namespace {

// F_r as its own ordered oracle: elements are reduced words in x1..xr and
// the order is the Magnus bi-order.
class FreeGroup final : public OrderedGroup
{
  public:
	explicit FreeGroup(int r) : r_(r)
	{
		std::vector<Element> gens;
		for (int i = 1; i <= r; ++i)
			gens.emplace_back(FreeWord::generator(i));
		set_generators(std::move(gens));
	}

	std::string spec() const override { return "F" + std::to_string(r_); }

	Element identity() const override { return FreeWord{}; }

	Element mul(Element const &g, Element const &h) const override
	{
		return get(g) * get(h);
	}

	Element inv(Element const &g) const override { return get(g).inverse(); }

	std::strong_ordering cmp(Element const &g, Element const &h) const override
	{
		return magnus_cmp(get(g), get(h));
	}

	// equality only; byte order is not the Magnus order
	std::string key(Element const &g) const override
	{
		auto const &w = get(g);
		std::string out;
		detail::put_u32(out, static_cast<std::uint32_t>(w.length()));
		for (auto const &l : w.letters())
		{
			detail::put_u32(out, static_cast<std::uint32_t>(l.gen));
			out.push_back(l.sign > 0 ? '+' : '-');
		}
		return out;
	}

	Element decode(std::string_view key) const override
	{
		detail::KeyReader r(key);
		auto n = r.u32();
		std::vector<Letter> ls;
		for (std::uint32_t i = 0; i < n; ++i)
		{
			int gen = static_cast<int>(r.u32());
			auto s = r.byte();
			if (s != '+' && s != '-')
				throw std::invalid_argument("bad sign byte in free word key");
			ls.push_back({gen, s == '+' ? 1 : -1});
		}
		r.finish();
		auto w = FreeWord::reduce(ls, r_);
		if (w.length() != n)
			throw std::invalid_argument("free word key is not reduced");
		return w;
	}

	bool accepts(Element const &g) const override
	{
		auto const *w = std::get_if<FreeWord>(&g);
		return w && w->max_generator() <= r_;
	}

	std::string format(Element const &g) const override
	{
		return format_free_word(get(g), 'x');
	}

	Element parse(std::string_view literal) const override
	{
		return parse_free_word(literal, r_);
	}

  private:
	FreeWord const &get(Element const &g) const
	{
		require(g);
		return std::get<FreeWord>(g);
	}

	int r_;
};

} // namespace

GroupPtr free_oracle(int r)
{
	if (r < 1)
		throw std::invalid_argument("free group oracle requires rank >= 1");
	return std::make_shared<FreeGroup>(r);
}

} // namespace ordgroups
