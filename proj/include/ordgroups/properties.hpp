#pragma once

#include <cstdint>
#include <string>

#include "ordgroups/group.hpp"

namespace ordgroups {

/// Outcome of one randomized property check.
struct PropertyReport {
	std::string name;
	std::uint64_t cases = 0;
	std::uint64_t violations = 0;
	std::string first_violation; ///< empty when violations == 0
	double seconds = 0;

	bool ok() const { return violations == 0 && cases > 0; }
};

/// "name cases=N violations=V", plus " first=..." on failure. Timing is left
/// out so the line is reproducible.
std::string format_report(PropertyReport const &r);

// Every check draws from its own Rng(seed), so checks are reproducible in
// isolation and independent of the order they run in.

/// reduce idempotent and length-nonincreasing; w w^-1 reduces to 1.
PropertyReport check_free_reduction(std::uint64_t seed, int count);

/// Associativity, inverses, identity, trichotomy, transitivity,
/// left invariance and key round trips on random triples.
PropertyReport check_oracle_axioms(OrderedGroup const &group, std::uint64_t seed, int count);

/// pi1 and pi2 are homomorphisms, pi1 on embedded F_n equals pi2, and
/// normalize always yields normal form.
PropertyReport check_projections(OrderedGroup const &group, std::uint64_t seed, int count);

/// Trichotomy, transitivity and two-sided invariance of the Magnus order on
/// triples in F_rank with word length <= max_len.
PropertyReport check_magnus_biorder(int rank, std::uint64_t seed, int count, int max_len);

/// expand(uv) = expand(u) expand(v) at caps min_cap..max_cap.
PropertyReport check_magnus_homomorphism(int rank, std::uint64_t seed, int count,
                                         int min_cap, int max_cap);

/// Deepening comparison equals the single comparison at cap |w1| + |w2|.
PropertyReport check_magnus_deepening(int rank, std::uint64_t seed, int count);

/// l w l^-1 positive for positive w and every letter l.
PropertyReport check_conjugate_positivity(int rank, std::uint64_t seed, int count);

/// tau(substitute(k)) = k for kernel words of length <= max_len, letter
/// elements from the ball of the given radius.
PropertyReport check_tau_after_substitute(OrderedGroup const &group, std::uint64_t seed,
                                          int count, int max_len, int radius);

/// substitute(tau(w)) = w for products of conjugated free generators.
PropertyReport check_substitute_after_tau(OrderedGroup const &group, std::uint64_t seed,
                                          int count, int radius);

/// tau(w1 w2) = tau(w1) tau(w2) and pi1(substitute(k)) = 1.
PropertyReport check_tau_homomorphism(OrderedGroup const &group, std::uint64_t seed,
                                      int count, int radius);

/// act_letter(i, sign, x_{g,j}^e) equals tau of the conjugate
/// s_i^sign . substitute(x_{g,j}^e) . s_i^-sign, for all i, j <= max_index,
/// both signs and both exponents, `count` random g from the radius ball.
PropertyReport check_action_formulas(OrderedGroup const &group, std::uint64_t seed,
                                      int count, int radius, int max_index = 2);

/// Positive kernel words stay positive under act(w, .).
PropertyReport check_cone_invariance(OrderedGroup const &group, std::uint64_t seed,
                                     int count, int k_len, int w_len, int radius);

/// act(1,k) = k, act(w1 w2, k) = act(w1, act(w2, k)), and act_letter
/// respects products.
PropertyReport check_action_axioms(OrderedGroup const &group, std::uint64_t seed,
                                   int count, int radius);

/// Trichotomy, transitivity and two-sided invariance of fiber_cmp.
PropertyReport check_fiber_biorder(GroupPtr const &group, std::uint64_t seed, int count);

/// compose(decompose(p)) = p and decompose(compose(k, v)) = (k, v).
PropertyReport check_decompose_compose(GroupPtr const &group, std::uint64_t seed, int count);

} // namespace ordgroups
