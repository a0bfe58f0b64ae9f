#include "zlab/term.hpp"

#include <cctype>

namespace zlab {

namespace {

class Parser {
public:
    Parser(std::string_view src, ParseOptions options) : src_(src), options_(options) {}

    Term parse() {
        Term t = parse_arrow(0);
        skip_space();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(std::string_view token) {
        skip_space();
        if (src_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    Term checked(Term t) const {
        if (t.depth() > max_term_depth) fail("term exceeds maximum depth " + std::to_string(max_term_depth));
        return t;
    }

    Term parse_arrow(std::size_t nesting) {
        if (nesting > max_term_depth) fail("term exceeds maximum depth " + std::to_string(max_term_depth));
        Term lhs = parse_meet(nesting);
        if (accept("->")) {
            Term rhs = parse_arrow(nesting + 1);
            return checked(Term::arrow(std::move(lhs), std::move(rhs)));
        }
        return lhs;
    }

    Term parse_meet(std::size_t nesting) {
        Term lhs = parse_postfix(nesting);
        while (accept("^")) {
            Term rhs = parse_postfix(nesting);
            lhs = checked(Term::meet(std::move(lhs), std::move(rhs)));
        }
        return lhs;
    }

    Term parse_postfix(std::size_t nesting) {
        Term t = parse_atom(nesting);
        while (accept("'")) t = checked(Term::prime(std::move(t)));
        return t;
    }

    Term parse_atom(std::size_t nesting) {
        skip_space();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (c == '0') {
            ++pos_;
            return Term::zero();
        }
        if (c == '(') {
            ++pos_;
            Term t = parse_arrow(nesting + 1);
            if (!accept(")")) fail("expected ')'");
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (!options_.free_variables && c != 'x' && c != 'y' && c != 'z')
                fail("unknown variable '" + std::string(1, c) + "'");
            ++pos_;
            return Term::variable(c);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    ParseOptions options_;
    std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view src, ParseOptions options) {
    return Parser(src, options).parse();
}

}  // namespace zlab
