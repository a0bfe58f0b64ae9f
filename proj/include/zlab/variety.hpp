#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zlab/evaluate.hpp"
#include "zlab/identity.hpp"
#include "zlab/zroupoid.hpp"

namespace zlab {

/// A subvariety of the symmetric implication zroupoids. The base axioms
/// I, I0, I20 and MC are implicit; `defining` lists only what is added.
struct VarietyDescriptor {
    std::string label;
    std::vector<Identity> defining;
};

/// I, I0, I20, MC.
std::vector<Identity> symmetric_base();

/// Accepts the 60 Bol-Moufang labels, "SL" (C and I10), "BA" (DM and the
/// Boolean axiom), "S" (nothing added) and "trivial" or "T" (x = 0).
/// Throws std::invalid_argument for anything else.
VarietyDescriptor variety(std::string_view label);

/// The 47 Bol-Moufang labels whose varieties collapse to SL.
std::span<const std::string_view> collapsing_labels();
/// The remaining 13 Bol-Moufang labels.
std::span<const std::string_view> surviving_labels();

/// The distinct varieties of the reference classification, bottom first:
/// trivial, SL, BA, A23, A12, F25, S.
std::span<const std::string_view> reference_varieties();

/// The reference variety a label is known to equal (e.g. "D25" -> "A23",
/// any collapsing label -> "SL", "B25" -> "S").
std::string_view reference_class(std::string_view label);

/// Whether the reference classification has variety(lower) ⊆ variety(upper).
bool reference_inclusion(std::string_view lower, std::string_view upper);

/// All models of v of size <= max_n up to isomorphism, smallest first and in
/// canonical order within a size. Runs the enumerator with the base axioms
/// plus v.defining.
std::vector<Zroupoid> models_of(const VarietyDescriptor& v, std::size_t max_n, unsigned threads = 1);

/// The symmetric implication zroupoids of size <= bound, up to isomorphism,
/// enumerated once and shared by every comparison at that bound.
class ModelLibrary {
public:
    explicit ModelLibrary(std::size_t bound, unsigned threads = 1);

    std::size_t bound() const noexcept { return bound_; }
    const std::vector<Zroupoid>& models() const noexcept { return models_; }
    /// Number of models of each size 1..bound.
    std::vector<std::size_t> counts_by_size() const;

    /// membership(v)[k] says whether models()[k] satisfies v.defining.
    std::vector<bool> membership(const VarietyDescriptor& v) const;
    std::vector<Zroupoid> members(const VarietyDescriptor& v) const;

private:
    std::size_t bound_;
    std::vector<Zroupoid> models_;
};

/// A model in one variety that fails an identity of another.
struct Witness {
    Zroupoid model;
    /// Label of the first defining identity of the excluding variety that fails.
    std::string failed_identity;
    Counterexample counterexample;
};

/// The smallest, then canonically least, library model satisfying x but
/// failing some identity of y; nullopt when none exists up to the bound.
std::optional<Witness> distinguish(const ModelLibrary& lib, const VarietyDescriptor& x, const VarietyDescriptor& y);
std::optional<Witness> distinguish(const VarietyDescriptor& x, const VarietyDescriptor& y, std::size_t max_n,
                                   unsigned threads = 1);

enum class Verdict { equal_up_to_n, left_proper_in_right, right_proper_in_left, incomparable };

std::string_view to_string(Verdict v);

struct ComparisonReport {
    std::string left;
    std::string right;
    Verdict verdict;
    /// In left, not in right.
    std::optional<Witness> left_only;
    /// In right, not in left.
    std::optional<Witness> right_only;
    std::size_t bound;

    /// One line, e.g. "A23 = A25 (equal up to size 4)".
    std::string summary() const;
};

/// Compares two varieties on the library models. Witnesses are re-checked
/// against both descriptors; a witness that does not classify as claimed
/// raises std::logic_error.
ComparisonReport compare(const ModelLibrary& lib, const VarietyDescriptor& left, const VarietyDescriptor& right);

}  // namespace zlab
