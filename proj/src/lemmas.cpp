#include "zlab/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

#include "zlab/bol_moufang.hpp"
#include "zlab/classify.hpp"
#include "zlab/evaluate.hpp"

namespace zlab {

namespace {

enum class Hypothesis { all_of, any_of, equivalence };

struct Lemma {
    std::string name;
    LemmaScope scope;
    Hypothesis mode;
    std::vector<CompiledIdentity> hypotheses;
    std::vector<CompiledIdentity> conclusions;
};

std::vector<CompiledIdentity> compile(const std::string& prefix, std::initializer_list<const char*> sources) {
    std::vector<CompiledIdentity> out;
    char item = 'a';
    for (const char* src : sources) out.emplace_back(parse_identity(prefix + "." + item++, src));
    return out;
}

std::vector<CompiledIdentity> catalog_entries(std::initializer_list<const char*> labels) {
    std::vector<CompiledIdentity> out;
    for (const char* label : labels) out.emplace_back(bol_moufang_catalog().at(label));
    return out;
}

std::vector<Lemma> build() {
    using S = LemmaScope;
    using H = Hypothesis;
    std::vector<Lemma> lemmas;

    lemmas.push_back({"involution-equivalents", S::implication, H::equivalence, {},
                      compile("involution-equivalents",
                              {"0' -> x = x", "x'' = x", "(x -> x')' = x", "x' -> x = x"})});

    lemmas.push_back({"meet-commutative-prime-fixed", S::implication, H::all_of,
                      compile("meet-commutative-prime-fixed.hyp", {"x ^ y = y ^ x", "x' = x"}),
                      compile("meet-commutative-prime-fixed", {"x -> y = y -> x"})});

    lemmas.push_back({"involutive-zero-swaps", S::involutive, H::all_of, {},
                      compile("involutive-zero-swaps", {"x' -> 0' = 0 -> x", "0 -> x' = x -> 0'"})});

    lemmas.push_back({"involutive-laws", S::involutive, H::all_of, {},
                      compile("involutive-laws", {
                                                     "(x -> 0') -> y = (x -> y') -> y",
                                                     "x -> (0 -> x)' = x'",
                                                     "(y -> x) -> y = (0 -> x) -> y",
                                                     "(0 -> x) -> (0 -> y) = x -> (0 -> y)",
                                                     "x -> y = x -> (x -> y)",
                                                     "0 -> (0 -> x)' = 0 -> x'",
                                                     "0 -> (x' -> y)' = x -> (0 -> y')",
                                                     "0 -> (x -> y) = x -> (0 -> y)",
                                                     "0 -> (x -> y')' = 0 -> (x' -> y)",
                                                     "x -> (y -> x') = y -> x'",
                                                     "(x -> y')' -> z = x -> (y -> z)",
                                                 })});

    lemmas.push_back({"prime-distributes", S::involutive, H::all_of,
                      compile("prime-distributes.hyp", {"0 -> x = x"}),
                      compile("prime-distributes", {"(x -> y)' = x' -> y'"})});

    lemmas.push_back({"symmetric-exchange", S::symmetric, H::all_of, {},
                      compile("symmetric-exchange", {
                                                        "x -> (y -> z) = y -> (x -> z)",
                                                        "x' -> y = y' -> x",
                                                        "x -> y = y' -> x'",
                                                        "x -> y' = y -> x'",
                                                    })});

    lemmas.push_back({"idempotent-prime-fixed", S::symmetric, H::all_of,
                      compile("idempotent-prime-fixed.hyp", {"x -> x = x"}),
                      compile("idempotent-prime-fixed", {"x' = x"})});

    lemmas.push_back({"square-prime-fixed", S::symmetric, H::all_of,
                      compile("square-prime-fixed.hyp", {"x' = x -> x", "0' = 0"}),
                      compile("square-prime-fixed", {"x' = x"})});

    lemmas.push_back({"square-associativity", S::symmetric, H::all_of,
                      compile("square-associativity.hyp", {"0 -> (x -> x) = x -> x"}),
                      compile("square-associativity", {"(x -> x) -> (y -> z) = ((x -> x) -> y) -> z"})});

    lemmas.push_back({"a23-consequences", S::symmetric, H::all_of, catalog_entries({"A23"}),
                      compile("a23-consequences", {
                                                      "0 -> x = x",
                                                      "(x -> x) -> y = x -> ((x -> 0') -> y)",
                                                      "(x -> x) -> y = x -> (x -> y')'",
                                                  })});

    lemmas.push_back({"x25-consequences", S::symmetric, H::any_of, catalog_entries({"A25", "C25", "D25", "E25"}),
                      compile("x25-consequences", {"0 -> x = x", "(x -> y)' = x' -> y'"})});

    lemmas.push_back({"a25-exchange", S::symmetric, H::all_of, catalog_entries({"A25"}),
                      compile("a25-exchange", {"x -> (y -> (y' -> z)) = y -> ((y -> x) -> z)"})});

    lemmas.push_back({"a12-consequences", S::symmetric, H::any_of, catalog_entries({"A12", "D12", "D35"}),
                      compile("a12-consequences", {
                                                      "0 -> x' = x -> x",
                                                      "x -> x = 0 -> x",
                                                      "0 -> (x -> y) = 0 -> (y -> x)",
                                                      "0 -> (x -> (y -> z)) = 0 -> ((x -> y) -> z)",
                                                  })});
    return lemmas;
}

const std::vector<Lemma>& registry() {
    static const std::vector<Lemma> lemmas = build();
    return lemmas;
}

bool in_scope(LemmaScope scope, const ClassReport& r) {
    switch (scope) {
    case LemmaScope::implication:
        return r.implication_zroupoid;
    case LemmaScope::involutive:
        return r.involutive;
    case LemmaScope::symmetric:
        return r.symmetric;
    }
    return false;
}

}  // namespace

bool LemmaReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

const LemmaCheck& LemmaReport::at(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::out_of_range("no lemma named '" + name + "'");
}

LemmaReport lemma_suite(const Zroupoid& alg) {
    const ClassReport classes = classify(alg);
    LemmaReport report;
    for (const Lemma& lemma : registry()) {
        LemmaCheck check{lemma.name, lemma.scope, false, true, {}};
        check.applicable = in_scope(lemma.scope, classes);
        if (check.applicable) {
            auto holds_here = [&](const CompiledIdentity& id) { return holds(alg, id); };
            switch (lemma.mode) {
            case Hypothesis::all_of:
                check.applicable = std::all_of(lemma.hypotheses.begin(), lemma.hypotheses.end(), holds_here);
                break;
            case Hypothesis::any_of:
                check.applicable = std::any_of(lemma.hypotheses.begin(), lemma.hypotheses.end(), holds_here);
                break;
            case Hypothesis::equivalence:
                break;
            }
        }
        if (check.applicable) {
            if (lemma.mode == Hypothesis::equivalence) {
                const bool first = holds(alg, lemma.conclusions.front());
                for (const auto& id : lemma.conclusions)
                    if (holds(alg, id) != first) check.failed.push_back(id.label());
            } else {
                for (const auto& id : lemma.conclusions)
                    if (!holds(alg, id)) check.failed.push_back(id.label());
            }
            check.passed = check.failed.empty();
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::vector<std::string> lemma_names() {
    std::vector<std::string> names;
    for (const auto& lemma : registry()) names.push_back(lemma.name);
    return names;
}

}  // namespace zlab
