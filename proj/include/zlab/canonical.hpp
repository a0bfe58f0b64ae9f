#pragma once

#include <cstddef>
#include <vector>

#include "zlab/zroupoid.hpp"

namespace zlab {

/// Relabels alg by perm: the result maps perm[a] -> perm[b] to perm[a -> b].
Zroupoid relabel(const Zroupoid& alg, const std::vector<Element>& perm);

/// The lexicographically least relabeling under permutations fixing 0.
/// Two algebras are isomorphic as <A, ->, 0> iff their canonical forms agree.
Zroupoid canonicalize(const Zroupoid& alg);

/// True iff no 0-fixing relabeling is lexicographically smaller.
bool is_canonical(const Zroupoid& alg);

/// Number of distinct tables among the 0-fixing relabelings of alg.
std::size_t orbit_size(const Zroupoid& alg);

}  // namespace zlab
