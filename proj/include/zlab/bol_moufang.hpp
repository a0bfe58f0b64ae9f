#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zlab/identity.hpp"

namespace zlab {

/// One of the six ways x, y, z form a word of length 4 with one letter repeated.
struct WordPattern {
    char code;
    std::array<char, 4> letters;
};

/// One of the five binary trees with four leaves, written with "o" for a leaf.
struct Bracketing {
    int code;
    std::string_view shape;
};

std::span<const WordPattern> word_patterns();
std::span<const Bracketing> bracketings();

/// Places the four leaves, in order, into the given bracketing (1..5).
Term bracket(int bracketing, const std::array<Term, 4>& leaves);

/// The pattern's word under the given bracketing.
Term bracketed_word(const WordPattern& pattern, int bracketing);

/// The 60 identities X_ij (pattern X under bracketing i ≈ pattern X under
/// bracketing j, i < j), in label order A12, A13, ..., F45.
class Catalog {
public:
    Catalog();

    std::size_t size() const noexcept { return entries_.size(); }
    const Identity& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool contains(std::string_view label) const noexcept;
    /// Throws std::out_of_range for an unknown label.
    const Identity& at(std::string_view label) const;

private:
    std::vector<Identity> entries_;
};

/// Shared immutable instance.
const Catalog& bol_moufang_catalog();

/// "Moufang" for B15, "Bol" for E25, empty otherwise. Informational only.
std::string_view catalog_tag(std::string_view label);

/// Named defining identities: I, I0, I20, MC, C, I10, DM, KL, BA and the
/// pair SL = {C, I10}. Throws std::invalid_argument for an unknown name.
std::vector<Identity> axiom(std::string_view name);

std::span<const std::string_view> axiom_names();

}  // namespace zlab
