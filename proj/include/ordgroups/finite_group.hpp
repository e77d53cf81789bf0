#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ordgroups {

/// Finite group given by its full multiplication table on 0..order-1.
/// Group axioms are checked once at construction.
class FiniteGroupTable
{
  public:
	/// S_degree acting on {1..degree}; elements are the permutations in
	/// lexicographic order of their image lists (identity = 0), and
	/// (p * q)(x) = p(q(x)).
	static FiniteGroupTable symmetric(int degree);

	/// Validates closure, identity, inverses and associativity; throws
	/// std::invalid_argument otherwise.
	static FiniteGroupTable from_table(std::vector<std::vector<int>> const &table,
	                                   std::string name = "table");

	/// Text format: the order m on the first line, then m rows of m
	/// whitespace-separated entries.
	static FiniteGroupTable parse(std::string_view text, std::string name = "table");

	int order() const { return n_; }
	int identity() const { return identity_; }
	int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
	int inv(int a) const { return inverse_[a]; }
	std::string const &name() const { return name_; }

	/// Permutation image list "[2,1,3]" for symmetric groups, the index
	/// otherwise.
	std::string format_element(int a) const;

  private:
	FiniteGroupTable() = default;
	void finish(bool check_associativity);

	int n_ = 0;
	int identity_ = 0;
	std::vector<int> table_;
	std::vector<int> inverse_;
	std::vector<std::vector<int>> perms_;
	std::string name_;
};

/// "S4", or a path to a table file.
FiniteGroupTable make_target(std::string_view spec);

} // namespace ordgroups
