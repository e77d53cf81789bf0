#pragma once

#include <string>
#include <vector>

#include "ordgroups/bigint.hpp"
#include "ordgroups/presentation.hpp"

namespace ordgroups {

/// Dense integer matrix, row-major.
class IntMatrix
{
  public:
	IntMatrix() = default;
	IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

	static IntMatrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	BigInt &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	BigInt const &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	void swap_rows(std::size_t a, std::size_t b);
	void swap_cols(std::size_t a, std::size_t b);
	/// row[dst] += factor * row[src]
	void add_row(std::size_t dst, std::size_t src, BigInt const &factor);
	void add_col(std::size_t dst, std::size_t src, BigInt const &factor);
	void negate_row(std::size_t i);

	friend IntMatrix operator*(IntMatrix const &a, IntMatrix const &b);
	friend bool operator==(IntMatrix const &, IntMatrix const &) = default;

  private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free elimination); square matrices only.
BigInt determinant(IntMatrix const &m);

/// D = U * A * V with U, V unimodular and D diagonal with nonnegative
/// entries d_1 | d_2 | ... .
struct SmithForm {
	IntMatrix d, u, v;
};

/// Pivots on the entry of least absolute value; all arithmetic exact.
SmithForm smith_normal_form(IntMatrix const &a);

/// Invariant factors of H1 = Z^gens / (relator exponent rows).
struct AbelianizationResult {
	std::vector<BigInt> invariant_factors; ///< entries > 1, dividing chain
	int free_rank = 0;
	bool balanced = false; ///< #generators == #relators

	bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
};

/// Relator-by-generator exponent sums.
IntMatrix exponent_matrix(Presentation const &pres);

AbelianizationResult abelianization(Presentation const &pres);

/// "invariant_factors=2,4 free_rank=1 balanced=false"
std::string format_abelianization(AbelianizationResult const &r);

} // namespace ordgroups
