#include "zlab/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "zlab/canonical.hpp"
#include "zlab/evaluate.hpp"

namespace zlab {

namespace {

// All n^k value tuples of one arity, flattened, last slot fastest.
std::vector<Element> tuples(std::size_t n, std::size_t k) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= n;
    std::vector<Element> out;
    out.reserve(count * std::max<std::size_t>(k, 1));
    std::vector<Element> values(k, 0);
    for (std::size_t t = 0; t < count; ++t) {
        out.insert(out.end(), values.begin(), values.end());
        for (std::size_t i = k; i-- > 0;) {
            if (++values[i] < n) break;
            values[i] = 0;
        }
    }
    return out;
}

class Search {
public:
    Search(std::size_t n, const std::vector<CompiledIdentity>& ids, Dedup dedup, std::optional<std::size_t> limit)
        : n_(n), ids_(ids), dedup_(dedup), limit_(limit) {
        for (const auto& id : ids_) tuples_.push_back(tuples(n_, id.arity()));
    }

    bool consistent(std::span<const Element> cells) const {
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            const auto& id = ids_[i];
            const std::size_t k = id.arity();
            const auto& all = tuples_[i];
            const std::size_t count = k == 0 ? 1 : all.size() / k;
            for (std::size_t t = 0; t < count; ++t) {
                const Element* values = all.data() + t * k;
                const Element l = id.lhs().eval_partial(cells, n_, values);
                if (l == undecided) continue;
                const Element r = id.rhs().eval_partial(cells, n_, values);
                if (r != undecided && l != r) return false;
            }
        }
        return true;
    }

    /// Consistent assignments of the first `depth` cells, in lexicographic order.
    std::vector<std::vector<Element>> prefixes(std::size_t depth) {
        std::vector<std::vector<Element>> out;
        std::vector<Element> cells(n_ * n_, undecided);
        collect_prefixes(cells, 0, depth, out);
        return out;
    }

    void run(std::vector<Element> cells, std::size_t start, std::vector<Zroupoid>& out) {
        cells_ = std::move(cells);
        out_ = &out;
        descend(start);
    }

    std::size_t nodes() const noexcept { return nodes_; }

private:
    void collect_prefixes(std::vector<Element>& cells, std::size_t pos, std::size_t depth,
                          std::vector<std::vector<Element>>& out) {
        if (pos == depth) {
            out.push_back(cells);
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            cells[pos] = static_cast<Element>(v);
            ++nodes_;
            if (consistent(cells)) collect_prefixes(cells, pos + 1, depth, out);
        }
        cells[pos] = undecided;
    }

    bool full() const { return limit_ && out_->size() >= *limit_; }

    void descend(std::size_t pos) {
        if (pos == cells_.size()) {
            Zroupoid alg(n_, cells_);
            if (dedup_ == Dedup::none || is_canonical(alg)) out_->push_back(std::move(alg));
            return;
        }
        for (std::size_t v = 0; v < n_ && !full(); ++v) {
            cells_[pos] = static_cast<Element>(v);
            ++nodes_;
            if (consistent(cells_)) descend(pos + 1);
        }
        cells_[pos] = undecided;
    }

    std::size_t n_;
    const std::vector<CompiledIdentity>& ids_;
    Dedup dedup_;
    std::optional<std::size_t> limit_;
    std::vector<std::vector<Element>> tuples_;
    std::vector<Element> cells_;
    std::vector<Zroupoid>* out_ = nullptr;
    std::size_t nodes_ = 0;
};

}  // namespace

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ZLAB_THREADS")) {
        try {
            const long value = std::stol(env);
            if (value > 0) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Zroupoid> enumerate(const SearchSpec& spec, SearchStats* stats) {
    const std::size_t n = spec.size;
    if (n == 0) throw std::invalid_argument("carrier size must be at least 1");
    if (n > max_carrier_size || (n > default_size_cap && !spec.allow_large))
        throw std::invalid_argument("carrier size " + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(default_size_cap) + " (override to go further)");

    std::vector<CompiledIdentity> ids;
    ids.reserve(spec.required.size());
    for (const auto& id : spec.required) ids.emplace_back(id);

    const unsigned threads = resolve_threads(spec.threads);
    const std::size_t cells = n * n;

    std::vector<Zroupoid> result;
    if (spec.limit && *spec.limit == 0) return result;

    if (threads <= 1) {
        Search search(n, ids, spec.dedup, spec.limit);
        // Every identity is checked once on the empty table so that
        // variable-free identities such as 0'' = 0 are never skipped.
        if (search.consistent(std::vector<Element>(cells, undecided)))
            search.run(std::vector<Element>(cells, undecided), 0, result);
        if (stats) {
            stats->nodes = search.nodes();
            stats->partitions = 1;
        }
        return result;
    }

    // Split on enough leading cells to give every worker several partitions.
    std::size_t depth = 0;
    for (std::size_t width = 1; depth < cells && width < 8ul * threads; ++depth) width *= n;

    Search splitter(n, ids, spec.dedup, spec.limit);
    std::vector<std::vector<Element>> prefixes;
    if (splitter.consistent(std::vector<Element>(cells, undecided))) prefixes = splitter.prefixes(depth);

    std::vector<std::vector<Zroupoid>> parts(prefixes.size());
    std::vector<std::size_t> part_nodes(prefixes.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            Search search(n, ids, spec.dedup, spec.limit);
            search.run(prefixes[i], depth, parts[i]);
            part_nodes[i] = search.nodes();
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (auto& part : parts) {
        for (auto& alg : part) {
            if (spec.limit && result.size() >= *spec.limit) break;
            result.push_back(std::move(alg));
        }
    }
    if (stats) {
        stats->nodes = splitter.nodes();
        for (std::size_t nodes : part_nodes) stats->nodes += nodes;
        stats->partitions = prefixes.size();
    }
    return result;
}

}  // namespace zlab
