#pragma once

#include "ordgroups/group.hpp"
#include "ordgroups/kernel_word.hpp"
#include "ordgroups/mixed_word.hpp"

namespace ordgroups {

/// Rewrites an element of ker(pi1) < F_n * G in the free basis
/// x_{g,i} = g s_i s~_i^-1 g^-1, with G itself as the transversal.
///
/// Single left-to-right pass with state g = pi1(prefix), starting at 1:
///   s_i      emits x_{g,i},             then g <- g s~_i
///   s_i^-1   sets g <- g s~_i^-1,       then emits x_{g,i}^-1
///   h in G   emits nothing,             g <- g h
/// Throws NotInKernel if the final state is not the identity.
KernelWord tau(MixedWord const &w, OrderedGroup const &group);

/// Replaces each x_{g,i}^{+-1} by (g s_i s~_i^-1 g^-1)^{+-1} and normalizes.
MixedWord substitute(KernelWord const &k, OrderedGroup const &group);

} // namespace ordgroups
