#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zlab/term.hpp"

namespace zlab {

/// An equation lhs ≈ rhs with a catalog label.
struct Identity {
    std::string label;
    Term lhs;
    Term rhs;
    /// Distinct variables of both sides, alphabetical.
    std::vector<char> variables;

    Identity() = default;
    Identity(std::string label, Term lhs, Term rhs);
};

/// Parses "lhs ≈ rhs"; a plain "=" is accepted in place of "≈".
Identity parse_identity(std::string label, std::string_view src, ParseOptions options = {});

/// "lhs ≈ rhs" in the requested style.
std::string print_identity(const Identity& id, TermStyle style = TermStyle::sugared);

}  // namespace zlab
