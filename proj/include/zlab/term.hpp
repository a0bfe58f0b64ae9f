#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zlab {

/// A groupoid term over the signature <->, 0>.
///
/// Terms are immutable trees with shared structure, so copying is cheap and
/// a Term can be handed to any number of threads. Only three node kinds
/// exist: variables, the constant 0, and the binary arrow. The derived
/// operations x' and x ^ y are expanded at construction time.
class Term {
public:
    enum class Kind : std::uint8_t { variable, zero, arrow };

    /// The constant 0.
    Term();

    static Term variable(char name);
    static Term zero();
    static Term arrow(Term lhs, Term rhs);

    /// x' := x -> 0
    static Term prime(Term t);
    /// x ^ y := (x -> y')'
    static Term meet(Term lhs, Term rhs);

    Kind kind() const noexcept;
    bool is_variable() const noexcept { return kind() == Kind::variable; }
    bool is_zero() const noexcept { return kind() == Kind::zero; }
    bool is_arrow() const noexcept { return kind() == Kind::arrow; }
    /// Arrow whose right operand is 0.
    bool is_prime() const noexcept;

    char name() const;
    const Term& left() const;
    const Term& right() const;

    /// Leaves have depth 0.
    std::size_t depth() const noexcept;

    friend bool operator==(const Term& a, const Term& b) noexcept;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Variable occurrences, left to right, with repetition.
std::vector<char> occurrences(const Term& t);

/// Distinct variables in alphabetical order.
std::vector<char> variables(const Term& t);

enum class TermStyle { sugared, raw };

/// Prints with every nested arrow parenthesised. The sugared style writes
/// Arrow(t, 0) as t'; the raw style uses only "->" and "0".
std::string print_term(const Term& t, TermStyle style = TermStyle::sugared);

inline constexpr std::size_t max_term_depth = 64;

struct ParseOptions {
    /// Accept any ASCII letter as a variable instead of only x, y, z.
    bool free_variables = false;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }
    /// The message without the offset suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

/// Grammar, loosest first:
///   term    := meet ("->" term)?          right associative
///   meet    := postfix ("^" postfix)*     left associative
///   postfix := atom "'"*
///   atom    := "0" | letter | "(" term ")"
Term parse_term(std::string_view src, ParseOptions options = {});

}  // namespace zlab
