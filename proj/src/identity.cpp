#include "zlab/identity.hpp"

#include <algorithm>
#include <iterator>

namespace zlab {

Identity::Identity(std::string label_, Term lhs_, Term rhs_)
    : label(std::move(label_)), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
    auto left = zlab::variables(lhs);
    auto right = zlab::variables(rhs);
    std::set_union(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(variables));
}

Identity parse_identity(std::string label, std::string_view src, ParseOptions options) {
    constexpr std::string_view approx = "\xE2\x89\x88";  // ≈
    std::size_t split = src.find(approx);
    std::size_t width = approx.size();
    if (split == std::string_view::npos) {
        split = src.find('=');
        width = 1;
    }
    if (split == std::string_view::npos) throw ParseError("expected '\xE2\x89\x88' or '='", src.size());
    if (src.find('=', split + width) != std::string_view::npos || src.find(approx, split + width) != std::string_view::npos)
        throw ParseError("more than one equation sign", split);

    Term lhs;
    Term rhs;
    try {
        lhs = parse_term(src.substr(0, split), options);
    } catch (const ParseError& e) {
        throw ParseError("left-hand side: " + e.detail(), e.offset());
    }
    try {
        rhs = parse_term(src.substr(split + width), options);
    } catch (const ParseError& e) {
        throw ParseError("right-hand side: " + e.detail(), split + width + e.offset());
    }
    return Identity(std::move(label), std::move(lhs), std::move(rhs));
}

std::string print_identity(const Identity& id, TermStyle style) {
    return print_term(id.lhs, style) + " \xE2\x89\x88 " + print_term(id.rhs, style);
}

}  // namespace zlab
