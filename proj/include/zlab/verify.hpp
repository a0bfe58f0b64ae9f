#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zlab/zroupoid.hpp"

namespace zlab {

/// A strict inclusion lower ⊂ upper of the reference classification with
/// its published separating table (a model of upper outside lower).
struct ReferenceInclusion {
    std::string lower;
    std::string upper;
    Zroupoid witness;
};

std::vector<ReferenceInclusion> reference_proper_inclusions();

/// Groups of labels the reference classification proves equal, e.g.
/// {A23, A25, C25, D25, E25} and {B25, S}.
std::vector<std::vector<std::string>> reference_equalities();

struct VerifyCheck {
    std::string id;
    std::string title;
    bool passed = true;
    std::vector<std::string> evidence;
};

struct VerifyReport {
    std::size_t bound = 0;
    std::vector<std::size_t> symmetric_counts;
    std::vector<VerifyCheck> checks;

    bool passed() const noexcept;
};

/// Replays every finitely checkable claim of the reference classification
/// against the symmetric models of size <= max_n:
///   catalog             60 identities, 47 collapsing + 13 surviving labels
///   semilattice-models  2_s satisfies all 60 identities
///   boolean-in-a12      2_b satisfies A12 and the Boolean axioms
///   collapse-to-sl      each collapsing label holds exactly on C ∩ I10 models
///   equalities          reference equalities are indistinguishable
///   proper-inclusions   every strict inclusion has a witness no larger than
///                       the published one, and the published tables classify
///                       as claimed
///   poset               bounded poset matches the reference Hasse diagram,
///                       with SL = A23 ∧ A12
///   lemmas              lemma suites on every implication zroupoid of size
///                       <= min(max_n, 3) and every symmetric model
/// Failures are recorded in the report; nothing throws for a failed check.
/// Equalities are only ever established "up to size max_n".
VerifyReport verify_claims(std::size_t max_n, unsigned threads = 1);

}  // namespace zlab
