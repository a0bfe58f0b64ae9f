#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zlab {

/// A carrier element; the carrier of a size-n algebra is {0, ..., n-1}.
using Element = std::uint8_t;

inline constexpr std::size_t max_carrier_size = 16;

/// A finite algebra <A, ->, 0> given by its Cayley table, with element 0 as
/// the distinguished constant. Cells are stored row-major: cell a*n+b holds
/// a -> b.
class Zroupoid {
public:
    /// Throws std::invalid_argument unless 1 <= size <= max_carrier_size,
    /// cells.size() == size*size and every cell is below size.
    Zroupoid(std::size_t size, std::vector<Element> cells);

    static Zroupoid from_rows(const std::vector<std::vector<int>>& rows);
    static Zroupoid trivial();

    std::size_t size() const noexcept { return size_; }
    Element operator()(Element a, Element b) const noexcept { return cells_[a * size_ + b]; }
    Element prime(Element a) const noexcept { return cells_[a * size_]; }
    std::span<const Element> cells() const noexcept { return cells_; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const Zroupoid&, const Zroupoid&) = default;
    /// Orders by size, then row-major lexicographically.
    friend bool operator<(const Zroupoid& a, const Zroupoid& b) noexcept;

private:
    std::size_t size_;
    std::vector<Element> cells_;
};

/// The two-element semilattice algebra: 0 -> 0 = 0, every other product 1.
Zroupoid two_s();
/// The two-element Boolean implication algebra: 1 -> 0 = 0, every other product 1.
Zroupoid two_b();

}  // namespace zlab
