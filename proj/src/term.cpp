#include "zlab/term.hpp"

#include <algorithm>

namespace zlab {

struct Term::Node {
    Kind kind = Kind::zero;
    char name = 0;
    std::size_t depth = 0;
    // Empty for leaves; the children of an arrow are always engaged.
    std::vector<Term> children;
};

Term::Term() : Term(zero()) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::variable(char name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::variable;
    node->name = name;
    return Term(std::move(node));
}

Term Term::zero() {
    static const std::shared_ptr<const Node> shared = [] {
        auto node = std::make_shared<Node>();
        node->kind = Kind::zero;
        return std::shared_ptr<const Node>(std::move(node));
    }();
    return Term(shared);
}

Term Term::arrow(Term lhs, Term rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::arrow;
    node->depth = 1 + std::max(lhs.depth(), rhs.depth());
    node->children.reserve(2);
    node->children.push_back(std::move(lhs));
    node->children.push_back(std::move(rhs));
    return Term(std::move(node));
}

Term Term::prime(Term t) { return arrow(std::move(t), zero()); }

Term Term::meet(Term lhs, Term rhs) {
    return prime(arrow(std::move(lhs), prime(std::move(rhs))));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

bool Term::is_prime() const noexcept {
    return is_arrow() && node_->children[1].is_zero();
}

char Term::name() const {
    if (!is_variable()) throw std::logic_error("Term::name on a non-variable");
    return node_->name;
}

const Term& Term::left() const {
    if (!is_arrow()) throw std::logic_error("Term::left on a leaf");
    return node_->children[0];
}

const Term& Term::right() const {
    if (!is_arrow()) throw std::logic_error("Term::right on a leaf");
    return node_->children[1];
}

std::size_t Term::depth() const noexcept { return node_->depth; }

bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.depth() != b.depth()) return false;
    switch (a.kind()) {
    case Term::Kind::zero:
        return true;
    case Term::Kind::variable:
        return a.node_->name == b.node_->name;
    case Term::Kind::arrow:
        return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

namespace {

void collect(const Term& t, std::vector<char>& out) {
    switch (t.kind()) {
    case Term::Kind::variable:
        out.push_back(t.name());
        break;
    case Term::Kind::zero:
        break;
    case Term::Kind::arrow:
        collect(t.left(), out);
        collect(t.right(), out);
        break;
    }
}

void print(const Term& t, TermStyle style, bool nested, std::string& out) {
    switch (t.kind()) {
    case Term::Kind::variable:
        out += t.name();
        return;
    case Term::Kind::zero:
        out += '0';
        return;
    case Term::Kind::arrow:
        break;
    }
    if (style == TermStyle::sugared && t.is_prime()) {
        // The operand of a prime is parenthesised unless it is a leaf or
        // itself a prime: (x -> y)' but x'' and 0'.
        print(t.left(), style, true, out);
        out += '\'';
        return;
    }
    if (nested) out += '(';
    print(t.left(), style, true, out);
    out += " -> ";
    print(t.right(), style, true, out);
    if (nested) out += ')';
}

}  // namespace

std::vector<char> occurrences(const Term& t) {
    std::vector<char> out;
    collect(t, out);
    return out;
}

std::vector<char> variables(const Term& t) {
    auto vars = occurrences(t);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::string print_term(const Term& t, TermStyle style) {
    std::string out;
    print(t, style, false, out);
    return out;
}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), detail_(what), offset_(offset) {}

}  // namespace zlab
