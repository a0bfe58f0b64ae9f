#include "zlab/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace zlab {

namespace {

// Calls fn(perm) for every permutation of {0..n-1} fixing 0, in
// lexicographic order; stops early when fn returns false.
template <typename Fn>
void for_each_fixing_zero(std::size_t n, Fn fn) {
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    do {
        if (!fn(perm)) return;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

// Compares relabel(alg, perm) against alg cell by cell without building it.
// Negative if the relabeling is smaller.
int compare_relabeled(const Zroupoid& alg, const std::vector<Element>& perm, const std::vector<Element>& inverse) {
    const std::size_t n = alg.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Element relabeled = perm[alg(inverse[a], inverse[b])];
            const Element original = alg(static_cast<Element>(a), static_cast<Element>(b));
            if (relabeled != original) return relabeled < original ? -1 : 1;
        }
    return 0;
}

}  // namespace

Zroupoid relabel(const Zroupoid& alg, const std::vector<Element>& perm) {
    const std::size_t n = alg.size();
    std::vector<Element> cells(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            cells[perm[a] * n + perm[b]] = perm[alg(static_cast<Element>(a), static_cast<Element>(b))];
    return Zroupoid(n, std::move(cells));
}

Zroupoid canonicalize(const Zroupoid& alg) {
    Zroupoid best = alg;
    for_each_fixing_zero(alg.size(), [&](const std::vector<Element>& perm) {
        Zroupoid candidate = relabel(alg, perm);
        if (candidate < best) best = std::move(candidate);
        return true;
    });
    return best;
}

bool is_canonical(const Zroupoid& alg) {
    bool minimal = true;
    std::vector<Element> inverse(alg.size());
    for_each_fixing_zero(alg.size(), [&](const std::vector<Element>& perm) {
        for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = static_cast<Element>(i);
        minimal = compare_relabeled(alg, perm, inverse) >= 0;
        return minimal;
    });
    return minimal;
}

std::size_t orbit_size(const Zroupoid& alg) {
    std::set<std::vector<Element>> seen;
    for_each_fixing_zero(alg.size(), [&](const std::vector<Element>& perm) {
        const Zroupoid image = relabel(alg, perm);
        seen.emplace(image.cells().begin(), image.cells().end());
        return true;
    });
    return seen.size();
}

}  // namespace zlab
