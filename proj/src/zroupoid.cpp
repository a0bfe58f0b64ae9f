#include "zlab/zroupoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zlab {

Zroupoid::Zroupoid(std::size_t size, std::vector<Element> cells) : size_(size), cells_(std::move(cells)) {
    if (size_ == 0 || size_ > max_carrier_size)
        throw std::invalid_argument("carrier size must be in 1.." + std::to_string(max_carrier_size) + ", got " +
                                    std::to_string(size_));
    if (cells_.size() != size_ * size_)
        throw std::invalid_argument("expected " + std::to_string(size_ * size_) + " cells, got " +
                                    std::to_string(cells_.size()));
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] >= size_)
            throw std::invalid_argument("cell (" + std::to_string(i / size_) + ", " + std::to_string(i % size_) +
                                        ") = " + std::to_string(cells_[i]) + " lies outside the carrier");
}

Zroupoid Zroupoid::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Element> cells;
    cells.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (rows[a].size() != n)
            throw std::invalid_argument("row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                                        " entries, expected " + std::to_string(n));
        for (int v : rows[a]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw std::invalid_argument("entry " + std::to_string(v) + " in row " + std::to_string(a) +
                                            " lies outside the carrier");
            cells.push_back(static_cast<Element>(v));
        }
    }
    return Zroupoid(n, std::move(cells));
}

Zroupoid Zroupoid::trivial() { return Zroupoid(1, {0}); }

std::vector<std::vector<int>> Zroupoid::rows() const {
    std::vector<std::vector<int>> out(size_, std::vector<int>(size_));
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b) out[a][b] = cells_[a * size_ + b];
    return out;
}

bool operator<(const Zroupoid& a, const Zroupoid& b) noexcept {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end());
}

Zroupoid two_s() { return Zroupoid(2, {0, 1, 1, 1}); }

Zroupoid two_b() { return Zroupoid(2, {1, 1, 0, 1}); }

}  // namespace zlab
