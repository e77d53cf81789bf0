#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ordgroups/finite_group.hpp"
#include "ordgroups/presentation.hpp"

namespace ordgroups {

struct SearchBudget {
	std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
	std::chrono::milliseconds max_time{0}; ///< 0 = unlimited
};

struct HomSearchReport {
	std::string target;
	std::uint64_t total = 0;       ///< homomorphisms, trivial one included
	std::uint64_t nontrivial = 0;
	/// Images of the generators (in presentation order) of the first
	/// nontrivial homomorphism met in search order.
	std::optional<std::vector<int>> sample;
	std::uint64_t nodes = 0;       ///< partial assignments accepted
	double seconds = 0;
};

/// Counts all assignments of generator images in `target` satisfying every
/// relator. Backtracking over generators in order of decreasing relator
/// participation; relators in one generator filter its domain up front,
/// relators in two generators are precomputed as allowed-pair tables and
/// checked as soon as both ends are assigned, longer relators are checked
/// once all their generators are assigned. Throws BudgetExhausted.
HomSearchReport enumerate_homs(Presentation const &pres, FiniteGroupTable const &target,
                               SearchBudget budget = {});

/// Evaluates a word under a generator assignment.
int evaluate(FreeWord const &w, std::vector<int> const &images,
             FiniteGroupTable const &target);

/// Reports for S_2 .. S_K.
std::vector<HomSearchReport> symmetric_quotient_reports(Presentation const &pres, int K,
                                                        SearchBudget budget = {});

/// True iff there is no nontrivial homomorphism into any S_k, 2 <= k <= K.
bool trivial_quotients_up_to(Presentation const &pres, int K, SearchBudget budget = {});

} // namespace ordgroups
