#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zlab/variety.hpp"

namespace zlab {

/// How a bounded relation compares with the reference classification.
enum class RelationStatus {
    /// Agrees with the reference.
    consistent,
    /// Inclusion holds on the bounded models but not in the reference; the
    /// bound is too small to separate the two.
    exceeds_reference,
    /// The reference has an inclusion that a bounded model refutes.
    contradicts_reference,
};

std::string_view to_string(RelationStatus s);

struct Relation {
    std::string lower;
    std::string upper;
    bool computed;
    bool expected;
    RelationStatus status;
};

struct Separation {
    std::string in;
    std::string out;
    Witness witness;
};

struct PosetReport {
    std::size_t bound = 0;
    std::vector<std::string> labels;
    /// includes[i][j]: every model of labels[i] up to the bound is a model of labels[j].
    std::vector<std::vector<bool>> includes;
    /// Labels indistinguishable up to the bound; ordered by first appearance.
    std::vector<std::vector<std::string>> classes;
    /// Cover edges between classes, lower index first.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    /// One entry per ordered pair of distinct labels.
    std::vector<Relation> relations;
    /// Minimal witness for every ordered pair that is not an inclusion.
    std::vector<Separation> separations;

    bool is_quasi_order() const;
    bool consistent_with_reference() const;
    std::size_t class_of(const std::string& label) const;
    const Separation* separation(const std::string& in, const std::string& out) const;
};

/// Throws std::invalid_argument for an unknown or repeated label.
PosetReport poset(const ModelLibrary& lib, const std::vector<std::string>& labels);

/// Hasse diagram, one node per class, edges pointing upward.
std::string to_dot(const PosetReport& report);

}  // namespace zlab
