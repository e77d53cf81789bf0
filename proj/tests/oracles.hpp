#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. None of them shares code with the implementation under test.

#include <compare>
#include <map>
#include <vector>

#include "ordgroups/bigint.hpp"
#include "ordgroups/finite_group.hpp"
#include "ordgroups/free_word.hpp"
#include "ordgroups/ncseries.hpp"
#include "ordgroups/presentation.hpp"

namespace oracle {

using ordgroups::Letter;

/// Scans for an adjacent inverse pair, deletes it, starts over.
std::vector<Letter> naive_reduce(std::vector<Letter> w);

/// Dense truncated series with machine-integer coefficients.
using Poly = std::map<std::vector<long>, long long>;

Poly poly_mul(Poly const &a, Poly const &b, int cap);
/// Product of the generator factors, computed one full product at a time.
Poly naive_expand(std::vector<Letter> const &w, int cap);
Poly to_poly(ordgroups::Series const &s);

/// The comparison as a walk over the smallest, second smallest, ... terms
/// of both series in turn.
std::strong_ordering term_by_term_cmp(ordgroups::Series const &f, ordgroups::Series const &g);

/// |Hom(pres, target)| by trying every assignment, multiplying letter by
/// letter with the raw table.
std::uint64_t brute_force_homs(ordgroups::Presentation const &pres,
                               ordgroups::FiniteGroupTable const &target);

/// BS(1,m) element as an affine map x -> m^k x + a, carrying k separately
/// (for m = -1 the matrix only sees the parity of k).
struct Affine {
	ordgroups::BigRational scale, shift;
	long k = 0;
};
Affine affine_word(std::vector<Letter> const &w, int m);

} // namespace oracle
