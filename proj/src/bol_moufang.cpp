#include "zlab/bol_moufang.hpp"

#include <algorithm>
#include <stdexcept>

namespace zlab {

namespace {

constexpr std::array<WordPattern, 6> patterns{{
    {'A', {'x', 'x', 'y', 'z'}},
    {'B', {'x', 'y', 'x', 'z'}},
    {'C', {'x', 'y', 'y', 'z'}},
    {'D', {'x', 'y', 'z', 'x'}},
    {'E', {'x', 'y', 'z', 'y'}},
    {'F', {'x', 'y', 'z', 'z'}},
}};

constexpr std::array<Bracketing, 5> shapes{{
    {1, "o -> (o -> (o -> o))"},
    {2, "o -> ((o -> o) -> o)"},
    {3, "(o -> o) -> (o -> o)"},
    {4, "(o -> (o -> o)) -> o"},
    {5, "((o -> o) -> o) -> o"},
}};

constexpr std::array<std::string_view, 10> names{"I", "I0", "I20", "MC", "C", "I10", "DM", "KL", "BA", "SL"};

Identity named(std::string label, std::string_view src) {
    return parse_identity(std::move(label), src);
}

}  // namespace

std::span<const WordPattern> word_patterns() { return patterns; }

std::span<const Bracketing> bracketings() { return shapes; }

Term bracket(int bracketing, const std::array<Term, 4>& v) {
    using T = Term;
    switch (bracketing) {
    case 1:
        return T::arrow(v[0], T::arrow(v[1], T::arrow(v[2], v[3])));
    case 2:
        return T::arrow(v[0], T::arrow(T::arrow(v[1], v[2]), v[3]));
    case 3:
        return T::arrow(T::arrow(v[0], v[1]), T::arrow(v[2], v[3]));
    case 4:
        return T::arrow(T::arrow(v[0], T::arrow(v[1], v[2])), v[3]);
    case 5:
        return T::arrow(T::arrow(T::arrow(v[0], v[1]), v[2]), v[3]);
    default:
        throw std::invalid_argument("bracketing must be in 1..5, got " + std::to_string(bracketing));
    }
}

Term bracketed_word(const WordPattern& pattern, int bracketing) {
    std::array<Term, 4> leaves;
    for (std::size_t i = 0; i < 4; ++i) leaves[i] = Term::variable(pattern.letters[i]);
    return bracket(bracketing, leaves);
}

Catalog::Catalog() {
    entries_.reserve(60);
    for (const auto& pattern : patterns)
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                std::string label{pattern.code};
                label += static_cast<char>('0' + i);
                label += static_cast<char>('0' + j);
                entries_.emplace_back(std::move(label), bracketed_word(pattern, i), bracketed_word(pattern, j));
            }
}

bool Catalog::contains(std::string_view label) const noexcept {
    return std::any_of(entries_.begin(), entries_.end(), [&](const Identity& id) { return id.label == label; });
}

const Identity& Catalog::at(std::string_view label) const {
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Identity& id) { return id.label == label; });
    if (it == entries_.end()) throw std::out_of_range("no Bol-Moufang identity labelled '" + std::string(label) + "'");
    return *it;
}

const Catalog& bol_moufang_catalog() {
    static const Catalog catalog;
    return catalog;
}

std::string_view catalog_tag(std::string_view label) {
    if (label == "B15") return "Moufang";
    if (label == "E25") return "Bol";
    return {};
}

std::vector<Identity> axiom(std::string_view name) {
    if (name == "I") return {named("I", "(x -> y) -> z = ((z' -> x) -> (y -> z)')'")};
    if (name == "I0") return {named("I0", "0'' = 0")};
    if (name == "I20") return {named("I20", "x'' = x")};
    if (name == "MC") return {named("MC", "x ^ y = y ^ x")};
    if (name == "C") return {named("C", "x -> y = y -> x")};
    if (name == "I10") return {named("I10", "x' = x")};
    if (name == "DM") return {named("DM", "(x -> y) -> x = x")};
    if (name == "KL") return {named("KL", "(x -> x) -> (y -> y) = y -> y")};
    if (name == "BA") return {named("BA", "x -> x = 0'")};
    if (name == "SL" || name == "SL_idem") return {axiom("C").front(), axiom("I10").front()};
    throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

std::span<const std::string_view> axiom_names() { return names; }

}  // namespace zlab
