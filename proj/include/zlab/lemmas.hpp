#pragma once

#include <string>
#include <vector>

#include "zlab/zroupoid.hpp"

namespace zlab {

/// The class a consequence is stated over.
enum class LemmaScope { implication, involutive, symmetric };

struct LemmaCheck {
    std::string name;
    LemmaScope scope;
    /// Scope membership and the lemma's own hypothesis both hold.
    bool applicable = false;
    bool passed = true;
    /// Labels of the conclusions that failed (for the equivalence lemma,
    /// the labels that disagree with the first condition).
    std::vector<std::string> failed;
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;

    bool all_passed() const noexcept;
    const LemmaCheck& at(const std::string& name) const;
};

/// Evaluates every known consequence of the implication-zroupoid axioms on
/// alg. A lemma whose scope or hypothesis fails is reported as not
/// applicable and counts as passed.
///
/// "involution-equivalents" is special: the four conditions
///   0' -> x = x,  x'' = x,  (x -> x')' = x,  x' -> x = x
/// must be all true or all false on every implication zroupoid.
LemmaReport lemma_suite(const Zroupoid& alg);

/// Lemma names in evaluation order.
std::vector<std::string> lemma_names();

}  // namespace zlab
