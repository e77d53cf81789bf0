#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordgroups/bigint.hpp"
#include "ordgroups/free_word.hpp"

namespace ordgroups {

/// Element of Z^n.
struct ZnElement {
	std::vector<std::int64_t> coords;
	friend bool operator==(ZnElement const &, ZnElement const &) = default;
};

/// Element (a, k) of BS(1,m) in affine normal form; the product is
/// (a,k)(b,l) = (a + m^k b, k + l). The rational `a` has a denominator
/// that is a power of m (m >= 2), or is an integer (m = -1).
struct BSElement {
	BigRational a;
	std::int64_t k = 0;
	friend bool operator==(BSElement const &x, BSElement const &y)
	{
		return x.k == y.k && x.a == y.a;
	}
};

/// Normal form of a group element. Which alternative is live depends on the
/// group that produced it; normal forms are canonical, so == is equality in
/// the group.
using Element = std::variant<ZnElement, BSElement, FreeWord>;

/// A left-orderable group with solvable word problem, a left-invariant
/// strict total order and a designated generating tuple (s~_1, ..., s~_n).
///
/// Implementations are immutable after construction.
class OrderedGroup
{
  public:
	virtual ~OrderedGroup() = default;

	/// Spec string accepted by make_group(), e.g. "BS(1,-1)".
	virtual std::string spec() const = 0;

	virtual Element identity() const = 0;
	virtual Element mul(Element const &g, Element const &h) const = 0;
	virtual Element inv(Element const &g) const = 0;
	virtual bool is_identity(Element const &g) const { return g == identity(); }

	/// Left-invariant strict total order.
	virtual std::strong_ordering cmp(Element const &g, Element const &h) const = 0;

	/// Canonical byte encoding: key(g) == key(h) iff g == h.
	virtual std::string key(Element const &g) const = 0;
	virtual Element decode(std::string_view key) const = 0;

	/// True if g is a well-formed element of this group.
	virtual bool accepts(Element const &g) const = 0;

	/// Literal body as used inside g{...}.
	virtual std::string format(Element const &g) const = 0;
	virtual Element parse(std::string_view literal) const = 0;

	/// s~_1, ..., s~_n.
	std::vector<Element> const &generators() const { return generators_; }
	int rank() const { return static_cast<int>(generators_.size()); }

	/// s~_gen^sign.
	Element generator(int gen, int sign = 1) const;

	/// Throws std::invalid_argument unless accepts(g).
	void require(Element const &g) const;

	/// Product of s~ letters: evaluates a word in the generators.
	Element evaluate(FreeWord const &w) const;

  protected:
	std::vector<Element> generators_;
	std::vector<Element> inverse_generators_;
	void set_generators(std::vector<Element> gens);
};

using GroupPtr = std::shared_ptr<OrderedGroup const>;

/// Z^n with coordinatewise addition, lexicographic order, standard basis.
GroupPtr zn_lex_oracle(int n);

/// BS(1,m) for m >= 2 or m = -1; generators (b, t) = ((1,0), (0,1)); order
/// given by the positive cone {(a,k): k > 0} u {(a,0): a > 0}.
GroupPtr bs1m_oracle(int m);

/// Free group of rank r ordered by the Magnus order.
GroupPtr free_oracle(int r);

/// Parses "Z^2", "BS(1,2)", "BS(1,-1)", "F2".
GroupPtr make_group(std::string_view spec);

/// "LESS" / "EQUAL" / "GREATER".
char const *to_string(std::strong_ordering o);

} // namespace ordgroups
