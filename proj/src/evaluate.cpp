#include "zlab/evaluate.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace zlab {

std::optional<Element> Assignment::find(char var) const noexcept {
    for (const auto& [name, value] : bindings)
        if (name == var) return value;
    return std::nullopt;
}

UnboundVariable::UnboundVariable(char var)
    : std::out_of_range(std::string("variable '") + var + "' is not bound"), var_(var) {}

Element eval_term(const Zroupoid& alg, const Term& t, const Assignment& env) {
    switch (t.kind()) {
    case Term::Kind::zero:
        return 0;
    case Term::Kind::variable: {
        auto value = env.find(t.name());
        if (!value) throw UnboundVariable(t.name());
        if (*value >= alg.size()) throw std::out_of_range("assigned value lies outside the carrier");
        return *value;
    }
    case Term::Kind::arrow:
        break;
    }
    const Element a = eval_term(alg, t.left(), env);
    const Element b = eval_term(alg, t.right(), env);
    return alg(a, b);
}

namespace {

void emit(const Term& t, std::span<const char> slots, std::vector<std::int8_t>& out, std::size_t& height,
          std::size_t& max_height) {
    switch (t.kind()) {
    case Term::Kind::zero:
        out.push_back(-1);
        max_height = std::max(max_height, ++height);
        return;
    case Term::Kind::variable: {
        auto it = std::find(slots.begin(), slots.end(), t.name());
        if (it == slots.end()) throw UnboundVariable(t.name());
        out.push_back(static_cast<std::int8_t>(it - slots.begin()));
        max_height = std::max(max_height, ++height);
        return;
    }
    case Term::Kind::arrow:
        emit(t.left(), slots, out, height, max_height);
        emit(t.right(), slots, out, height, max_height);
        out.push_back(-2);
        --height;
        return;
    }
}

}  // namespace

CompiledTerm::CompiledTerm(const Term& t, std::span<const char> slots) {
    if (slots.size() > 100) throw std::invalid_argument("too many variables to compile");
    std::size_t height = 0;
    std::size_t max_height = 0;
    emit(t, slots, program_, height, max_height);
    if (max_height > max_stack) throw std::invalid_argument("term too deep to compile");
}

Element CompiledTerm::eval(std::span<const Element> cells, std::size_t n, const Element* values) const noexcept {
    std::array<Element, max_stack> stack;
    std::size_t sp = 0;
    for (std::int8_t op : program_) {
        if (op >= 0) {
            stack[sp++] = values[op];
        } else if (op == zero_op) {
            stack[sp++] = 0;
        } else {
            const Element b = stack[--sp];
            stack[sp - 1] = cells[stack[sp - 1] * n + b];
        }
    }
    return stack[0];
}

Element CompiledTerm::eval_partial(std::span<const Element> cells, std::size_t n,
                                   const Element* values) const noexcept {
    std::array<Element, max_stack> stack;
    std::size_t sp = 0;
    for (std::int8_t op : program_) {
        if (op >= 0) {
            stack[sp++] = values[op];
        } else if (op == zero_op) {
            stack[sp++] = 0;
        } else {
            const Element b = stack[--sp];
            const Element v = cells[stack[sp - 1] * n + b];
            if (v == undecided) return undecided;
            stack[sp - 1] = v;
        }
    }
    return stack[0];
}

CompiledIdentity::CompiledIdentity(Identity id)
    : identity_(std::move(id)),
      lhs_(identity_.lhs, identity_.variables),
      rhs_(identity_.rhs, identity_.variables) {}

namespace {

// Advances values[0..k) as an odometer with the last slot fastest.
bool next_assignment(std::span<Element> values, std::size_t n) noexcept {
    for (std::size_t i = values.size(); i-- > 0;) {
        if (++values[i] < n) return true;
        values[i] = 0;
    }
    return false;
}

Assignment bind_values(const Identity& id, std::span<const Element> values) {
    Assignment env;
    for (std::size_t i = 0; i < values.size(); ++i) env.bindings.emplace_back(id.variables[i], values[i]);
    return env;
}

}  // namespace

SatisfactionResult satisfies(const Zroupoid& alg, const CompiledIdentity& id, FailureReport report) {
    SatisfactionResult result;
    const auto cells = alg.cells();
    const std::size_t n = alg.size();
    std::vector<Element> values(id.arity(), 0);
    do {
        const Element l = id.lhs().eval(cells, n, values.data());
        const Element r = id.rhs().eval(cells, n, values.data());
        if (l == r) continue;
        Counterexample cex{bind_values(id.identity(), values), l, r};
        if (result.holds) {
            result.holds = false;
            result.witness = cex;
        }
        if (report == FailureReport::first) break;
        result.failures.push_back(std::move(cex));
    } while (next_assignment(values, n));
    return result;
}

SatisfactionResult satisfies(const Zroupoid& alg, const Identity& id, FailureReport report) {
    return satisfies(alg, CompiledIdentity(id), report);
}

bool holds(const Zroupoid& alg, const CompiledIdentity& id) noexcept {
    const auto cells = alg.cells();
    const std::size_t n = alg.size();
    std::array<Element, 100> values{};
    std::span<Element> slots(values.data(), id.arity());
    do {
        if (id.lhs().eval(cells, n, values.data()) != id.rhs().eval(cells, n, values.data())) return false;
    } while (next_assignment(slots, n));
    return true;
}

}  // namespace zlab
