#pragma once

#include <optional>
#include <vector>

#include "ordgroups/group.hpp"
#include "ordgroups/presentation.hpp"

namespace ordgroups {

/// Claims (c_1^-1 g c_1) ... (c_k^-1 g c_k) = 1 with g != 1.
struct GenTorsionCertificate {
	Element base;
	std::vector<Element> conjugators;
};

/// Evaluates the product of conjugates in the oracle's normal form. False
/// for an identity base or an empty conjugator list.
bool verify_certificate(OrderedGroup const &group, GenTorsionCertificate const &cert);

/// Presentation-only groups have no word problem here: always throws
/// WordProblemUnavailable.
bool verify_certificate(Presentation const &pres, FreeWord const &base,
                        std::vector<FreeWord> const &conjugators);

/// Elements of word length <= radius, deduplicated by normal form, in
/// breadth-first order (right multiplication by s~_1, s~_1^-1, s~_2, ...).
std::vector<Element> ball(OrderedGroup const &group, int radius);

/// Scans k = 1..max_k and all ordered k-tuples of ball elements (first
/// conjugator most significant) for a certificate with base g.
/// Requires max_k <= 3 and radius <= 3.
std::optional<GenTorsionCertificate> search_certificate(OrderedGroup const &group,
                                                        Element const &g, int max_k,
                                                        int radius);

} // namespace ordgroups
