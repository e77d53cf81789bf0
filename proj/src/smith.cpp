#include "ordgroups/smith.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace ordgroups {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
	for (auto const &r : rows)
	{
		if (r.size() != cols_)
			throw std::invalid_argument("ragged matrix literal");
		for (long v : r)
			data_.emplace_back(v);
	}
}

IntMatrix IntMatrix::identity(std::size_t n)
{
	IntMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
	if (a == b)
		return;
	for (std::size_t j = 0; j < cols_; ++j)
		std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
	if (a == b)
		return;
	for (std::size_t i = 0; i < rows_; ++i)
		std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, BigInt const &factor)
{
	if (factor == 0)
		return;
	for (std::size_t j = 0; j < cols_; ++j)
		(*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, BigInt const &factor)
{
	if (factor == 0)
		return;
	for (std::size_t i = 0; i < rows_; ++i)
		(*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i)
{
	for (std::size_t j = 0; j < cols_; ++j)
		(*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(IntMatrix const &a, IntMatrix const &b)
{
	if (a.cols_ != b.rows_)
		throw std::invalid_argument("matrix dimensions do not match");
	IntMatrix r(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			auto const &x = a(i, k);
			if (x == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				r(i, j) += x * b(k, j);
		}
	return r;
}

BigInt determinant(IntMatrix const &m_in)
{
	if (m_in.rows() != m_in.cols())
		throw std::invalid_argument("determinant of a non-square matrix");
	std::size_t n = m_in.rows();
	if (n == 0)
		return 1;
	// Bareiss
	IntMatrix m = m_in;
	BigInt sign = 1, prev = 1;
	for (std::size_t k = 0; k + 1 < n; ++k)
	{
		if (m(k, k) == 0)
		{
			std::size_t p = k + 1;
			while (p < n && m(p, k) == 0)
				++p;
			if (p == n)
				return 0;
			m.swap_rows(k, p);
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
			for (std::size_t j = k + 1; j < n; ++j)
				m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
		prev = m(k, k);
	}
	return sign * m(n - 1, n - 1);
}

namespace {

BigInt abs_value(BigInt const &x) { return x < 0 ? BigInt(-x) : x; }

// Smallest nonzero |entry| in the block rows/cols >= t.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(IntMatrix const &d, std::size_t t)
{
	std::optional<std::pair<std::size_t, std::size_t>> best;
	BigInt best_abs;
	for (std::size_t i = t; i < d.rows(); ++i)
		for (std::size_t j = t; j < d.cols(); ++j)
		{
			if (d(i, j) == 0)
				continue;
			BigInt a = abs_value(d(i, j));
			if (!best || a < best_abs)
			{
				best = {i, j};
				best_abs = a;
			}
		}
	return best;
}

} // namespace

SmithForm smith_normal_form(IntMatrix const &a)
{
	SmithForm s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
	auto &d = s.d;
	std::size_t limit = std::min(a.rows(), a.cols());
	for (std::size_t t = 0; t < limit; ++t)
	{
		while (true)
		{
			auto pivot = min_pivot(d, t);
			if (!pivot)
				return s; // remaining block is zero
			d.swap_rows(t, pivot->first);
			s.u.swap_rows(t, pivot->first);
			d.swap_cols(t, pivot->second);
			s.v.swap_cols(t, pivot->second);

			bool clean = true;
			for (std::size_t i = t + 1; i < d.rows(); ++i)
			{
				BigInt q = d(i, t) / d(t, t);
				d.add_row(i, t, -q);
				s.u.add_row(i, t, -q);
				clean = clean && d(i, t) == 0;
			}
			for (std::size_t j = t + 1; j < d.cols(); ++j)
			{
				BigInt q = d(t, j) / d(t, t);
				d.add_col(j, t, -q);
				s.v.add_col(j, t, -q);
				clean = clean && d(t, j) == 0;
			}
			if (!clean)
				continue; // a smaller remainder exists; pivot again

			// divisibility: fold an offending row into row t and retry
			std::optional<std::size_t> bad;
			for (std::size_t i = t + 1; i < d.rows() && !bad; ++i)
				for (std::size_t j = t + 1; j < d.cols(); ++j)
					if (d(i, j) % d(t, t) != 0)
					{
						bad = i;
						break;
					}
			if (!bad)
				break;
			d.add_row(t, *bad, 1);
			s.u.add_row(t, *bad, 1);
		}
		if (d(t, t) < 0)
		{
			d.negate_row(t);
			s.u.negate_row(t);
		}
	}
	return s;
}

IntMatrix exponent_matrix(Presentation const &pres)
{
	IntMatrix m(pres.relators().size(), static_cast<std::size_t>(pres.num_generators()));
	for (std::size_t r = 0; r < pres.relators().size(); ++r)
		for (int g = 1; g <= pres.num_generators(); ++g)
			m(r, g - 1) = exponent_sum(pres.relators()[r], g);
	return m;
}

AbelianizationResult abelianization(Presentation const &pres)
{
	AbelianizationResult r;
	r.balanced = pres.num_generators() == pres.num_relators();
	auto snf = smith_normal_form(exponent_matrix(pres));
	int rank = 0;
	for (std::size_t i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i)
	{
		auto const &x = snf.d(i, i);
		if (x == 0)
			continue;
		++rank;
		if (x > 1)
			r.invariant_factors.push_back(x);
	}
	r.free_rank = pres.num_generators() - rank;
	return r;
}

std::string format_abelianization(AbelianizationResult const &r)
{
	std::string out = "invariant_factors=";
	for (std::size_t i = 0; i < r.invariant_factors.size(); ++i)
	{
		if (i)
			out += ',';
		out += r.invariant_factors[i].str();
	}
	out += " free_rank=" + std::to_string(r.free_rank);
	out += std::string(" balanced=") + (r.balanced ? "true" : "false");
	return out;
}

} // namespace ordgroups
