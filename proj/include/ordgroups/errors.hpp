#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordgroups {

/// Base for errors that mean "the input is well-formed but the requested
/// object does not exist" (CLI exit status 1).
struct DomainError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// A mixed word handed to the kernel rewriting does not lie in ker(pi1).
struct NotInKernel : DomainError {
	explicit NotInKernel(std::string residual_)
	    : DomainError("word is not in ker(pi1): pi1 = " + residual_),
	      residual(std::move(residual_))
	{}
	std::string residual; ///< formatted pi1 value of the whole word
};

/// (u, v) with pi1(u) != pi2(v).
struct NotInFiber : DomainError {
	NotInFiber(std::string pi1_, std::string pi2_)
	    : DomainError("pair is not in the fiber product: pi1(u) = " + pi1_ +
	                  ", pi2(v) = " + pi2_),
	      pi1(std::move(pi1_)), pi2(std::move(pi2_))
	{}
	std::string pi1, pi2;
};

/// Group is only known by a presentation; no normal form available.
struct WordProblemUnavailable : DomainError {
	using DomainError::DomainError;
};

/// Homomorphism search ran out of nodes or wall time (CLI exit status 3).
struct BudgetExhausted : std::runtime_error {
	BudgetExhausted(std::uint64_t nodes_, std::uint64_t partial_total_,
	                std::string const &where)
	    : std::runtime_error("search budget exhausted " + where + " after " +
	                         std::to_string(nodes_) + " nodes (" +
	                         std::to_string(partial_total_) +
	                         " homomorphisms found so far)"),
	      nodes(nodes_), partial_total(partial_total_)
	{}
	std::uint64_t nodes;
	std::uint64_t partial_total;
};

} // namespace ordgroups
