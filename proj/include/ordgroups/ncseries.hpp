#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordgroups/bigint.hpp"

namespace ordgroups {

/// Index of a non-commuting variable X_v. Variables are totally ordered by
/// their index; callers with a richer variable set (the G-indexed X_{g,i})
/// rank their variables first, see magnus.hpp.
using Var = std::int64_t;

/// Word in the free monoid on the variables; empty is the constant monomial.
using Monomial = std::vector<Var>;

/// Shortlex: shorter first, equal lengths left-to-right.
std::strong_ordering shortlex_cmp(Monomial const &a, Monomial const &b);

struct ShortlexLess {
	bool operator()(Monomial const &a, Monomial const &b) const
	{
		return shortlex_cmp(a, b) < 0;
	}
};

/// Integer power series in non-commuting variables, truncated above total
/// degree `cap`. Terms are kept in shortlex order with no zero coefficients,
/// so the constant term (if any) comes first and the next entry is the
/// smallest non-constant term.
class Series
{
  public:
	using Terms = std::map<Monomial, BigInt, ShortlexLess>;

	explicit Series(int cap = 0);

	static Series constant(BigInt c, int cap);

	/// 1 + X_v for sign = +1, and 1 - X_v + X_v^2 - ... (to degree cap) for
	/// sign = -1.
	static Series generator(Var v, int sign, int cap);

	int cap() const { return cap_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	BigInt coefficient(Monomial const &m) const;
	BigInt constant_term() const { return coefficient({}); }

	/// Adds c * m; dropped if deg(m) > cap.
	void add_term(Monomial const &m, BigInt const &c);

	/// Shortlex-smallest term of positive degree.
	std::optional<std::pair<Monomial, BigInt>> leading_nonconst() const;

	/// Right multiplication by generator(v, sign, cap), without building the
	/// factor.
	Series times_generator(Var v, int sign) const;

	Series &operator+=(Series const &o);
	Series &operator-=(Series const &o);

	friend Series operator+(Series a, Series const &b) { return a += b; }
	friend Series operator-(Series a, Series const &b) { return a -= b; }
	friend Series operator-(Series const &a);
	friend Series operator*(Series const &a, Series const &b);

	friend bool operator==(Series const &a, Series const &b)
	{
		return a.cap_ == b.cap_ && a.terms_ == b.terms_;
	}

  private:
	void require_same_cap(Series const &o) const;

	int cap_;
	Terms terms_;
};

inline Series add(Series const &f, Series const &g) { return f + g; }
inline Series neg(Series const &f) { return -f; }
inline Series mul_trunc(Series const &f, Series const &g) { return f * g; }
inline Series gen_series(Var v, int sign, int cap)
{
	return Series::generator(v, sign, cap);
}

/// Order on series: constant terms first; if they agree, the sign of the
/// smallest non-constant term of f - g decides.
std::strong_ordering series_cmp(Series const &f, Series const &g);

/// "1 + X1 - 2 X1X2"; `var_name` renders a single variable.
std::string to_string(Series const &f,
                      std::function<std::string(Var)> const &var_name);

} // namespace ordgroups
