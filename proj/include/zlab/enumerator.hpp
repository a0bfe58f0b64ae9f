#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zlab/identity.hpp"
#include "zlab/zroupoid.hpp"

namespace zlab {

enum class Dedup { none, up_to_iso };

/// Default ceiling on the carrier size; 6 already means 6^36 raw tables.
inline constexpr std::size_t default_size_cap = 6;

struct SearchSpec {
    std::size_t size = 1;
    /// Conjunction of identities every emitted table must satisfy.
    std::vector<Identity> required;
    Dedup dedup = Dedup::none;
    std::optional<std::size_t> limit;
    /// Worker count; 0 means hardware concurrency.
    unsigned threads = 1;
    /// Permits sizes above default_size_cap.
    bool allow_large = false;
};

struct SearchStats {
    std::size_t nodes = 0;
    std::size_t partitions = 0;
};

/// Every size-n table satisfying all required identities, each exactly
/// once (one canonical representative per isomorphism class under
/// up_to_iso), in lexicographic table order.
///
/// Cells are filled row-major by backtracking; a partial table is pruned as
/// soon as some required identity has an assignment whose two sides are
/// fully determined and differ. With several workers the tree is split on
/// a prefix of cells and the partitions are merged in prefix order, so the
/// output does not depend on the schedule.
///
/// Throws std::invalid_argument for size 0, or for a size above the cap
/// without allow_large.
std::vector<Zroupoid> enumerate(const SearchSpec& spec, SearchStats* stats = nullptr);

/// Resolves a worker count: explicit > ZLAB_THREADS > hardware concurrency.
unsigned resolve_threads(unsigned requested);

}  // namespace zlab
