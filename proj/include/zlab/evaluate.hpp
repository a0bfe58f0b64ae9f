#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zlab/identity.hpp"
#include "zlab/zroupoid.hpp"

namespace zlab {

/// Bindings from variable symbols to carrier elements.
struct Assignment {
    std::vector<std::pair<char, Element>> bindings;

    std::optional<Element> find(char var) const noexcept;
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

class UnboundVariable : public std::out_of_range {
public:
    explicit UnboundVariable(char var);
    char variable() const noexcept { return var_; }

private:
    char var_;
};

/// Structural evaluation; throws UnboundVariable if env misses a variable of t.
Element eval_term(const Zroupoid& alg, const Term& t, const Assignment& env);

/// Cell value standing for "not decided yet" in partially filled tables.
inline constexpr Element undecided = 0xFF;

/// A term flattened to postfix over numbered variable slots.
class CompiledTerm {
public:
    CompiledTerm(const Term& t, std::span<const char> slots);

    Element eval(std::span<const Element> cells, std::size_t n, const Element* values) const noexcept;
    /// Returns `undecided` as soon as an undecided cell is read.
    Element eval_partial(std::span<const Element> cells, std::size_t n, const Element* values) const noexcept;

private:
    static constexpr std::int8_t zero_op = -1;
    static constexpr std::int8_t apply_op = -2;
    static constexpr std::size_t max_stack = 96;

    std::vector<std::int8_t> program_;
};

/// Both sides of an identity compiled against its variable list.
class CompiledIdentity {
public:
    explicit CompiledIdentity(Identity id);

    const Identity& identity() const noexcept { return identity_; }
    const std::string& label() const noexcept { return identity_.label; }
    std::size_t arity() const noexcept { return identity_.variables.size(); }

    const CompiledTerm& lhs() const noexcept { return lhs_; }
    const CompiledTerm& rhs() const noexcept { return rhs_; }

private:
    Identity identity_;
    CompiledTerm lhs_;
    CompiledTerm rhs_;
};

struct Counterexample {
    Assignment assignment;
    Element lhs;
    Element rhs;
};

struct SatisfactionResult {
    bool holds = true;
    /// The lexicographically first failing assignment; engaged iff !holds.
    std::optional<Counterexample> witness;
    /// Every failing assignment, in order, when requested.
    std::vector<Counterexample> failures;
};

enum class FailureReport { first, all };

/// Checks lhs = rhs under all n^k assignments, variables alphabetical and
/// the last variable varying fastest.
SatisfactionResult satisfies(const Zroupoid& alg, const Identity& id, FailureReport report = FailureReport::first);
SatisfactionResult satisfies(const Zroupoid& alg, const CompiledIdentity& id,
                             FailureReport report = FailureReport::first);

/// Boolean-only fast path.
bool holds(const Zroupoid& alg, const CompiledIdentity& id) noexcept;

}  // namespace zlab
