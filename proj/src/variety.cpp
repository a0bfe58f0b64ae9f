#include "zlab/variety.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "zlab/bol_moufang.hpp"
#include "zlab/classify.hpp"
#include "zlab/enumerator.hpp"

namespace zlab {

namespace {

constexpr std::array<std::string_view, 47> collapsing{
    "A13", "A14", "A15", "A24", "A34", "A45", "B12", "B14", "B15", "B23", "B24", "B34",
    "B35", "B45", "C12", "C13", "C14", "C15", "C23", "C24", "C34", "C35", "C45", "D13",
    "D14", "D15", "D23", "D24", "D34", "D45", "E12", "E13", "E14", "E15", "E23", "E24",
    "E34", "E35", "E45", "F12", "F14", "F15", "F23", "F24", "F34", "F35", "F45",
};

constexpr std::array<std::string_view, 13> surviving{
    "A12", "A23", "A25", "A35", "B13", "B25", "C25", "D12", "D25", "D35", "E25", "F13", "F25",
};

constexpr std::array<std::string_view, 7> reference{"trivial", "SL", "BA", "A23", "A12", "F25", "S"};

// Cover relations of the reference poset, lower first.
constexpr std::array<std::pair<std::string_view, std::string_view>, 8> reference_covers{{
    {"trivial", "SL"},
    {"trivial", "BA"},
    {"SL", "A23"},
    {"SL", "A12"},
    {"BA", "A12"},
    {"A23", "F25"},
    {"A12", "F25"},
    {"F25", "S"},
}};

std::size_t reference_index(std::string_view label) {
    auto it = std::find(reference.begin(), reference.end(), label);
    if (it == reference.end()) throw std::logic_error("not a reference variety: " + std::string(label));
    return static_cast<std::size_t>(it - reference.begin());
}

const std::array<std::array<bool, 7>, 7>& reference_order() {
    static const auto order = [] {
        std::array<std::array<bool, 7>, 7> le{};
        for (std::size_t i = 0; i < 7; ++i) le[i][i] = true;
        for (const auto& [lo, hi] : reference_covers) le[reference_index(lo)][reference_index(hi)] = true;
        for (std::size_t k = 0; k < 7; ++k)
            for (std::size_t i = 0; i < 7; ++i)
                for (std::size_t j = 0; j < 7; ++j) le[i][j] = le[i][j] || (le[i][k] && le[k][j]);
        return le;
    }();
    return order;
}

bool contains(std::span<const std::string_view> set, std::string_view label) {
    return std::find(set.begin(), set.end(), label) != set.end();
}

std::vector<CompiledIdentity> compile_all(const VarietyDescriptor& v) {
    return {v.defining.begin(), v.defining.end()};
}

bool satisfies_all(const Zroupoid& alg, const std::vector<CompiledIdentity>& ids) {
    return std::all_of(ids.begin(), ids.end(), [&](const CompiledIdentity& id) { return holds(alg, id); });
}

void verify_witness(const Witness& w, const VarietyDescriptor& in, const VarietyDescriptor& out) {
    if (!classify(w.model).symmetric) throw std::logic_error("witness is not a symmetric implication zroupoid");
    for (const auto& id : in.defining)
        if (!satisfies(w.model, id).holds)
            throw std::logic_error("witness for " + in.label + " fails its identity " + id.label);
    auto failed = std::find_if(out.defining.begin(), out.defining.end(),
                               [&](const Identity& id) { return id.label == w.failed_identity; });
    if (failed == out.defining.end() || satisfies(w.model, *failed).holds)
        throw std::logic_error("witness does not fail " + w.failed_identity + " of " + out.label);
}

}  // namespace

std::vector<Identity> symmetric_base() {
    std::vector<Identity> base;
    for (auto name : {"I", "I0", "I20", "MC"})
        for (auto& id : axiom(name)) base.push_back(std::move(id));
    return base;
}

VarietyDescriptor variety(std::string_view label) {
    const auto& catalog = bol_moufang_catalog();
    if (catalog.contains(label)) return {std::string(label), {catalog.at(label)}};
    if (label == "SL") return {"SL", axiom("SL")};
    if (label == "BA") return {"BA", {axiom("DM").front(), axiom("BA").front()}};
    if (label == "S") return {"S", {}};
    if (label == "trivial" || label == "T") return {"trivial", {parse_identity("T", "x = 0")}};
    throw std::invalid_argument("unknown variety label '" + std::string(label) + "'");
}

std::span<const std::string_view> collapsing_labels() { return collapsing; }

std::span<const std::string_view> surviving_labels() { return surviving; }

std::span<const std::string_view> reference_varieties() { return reference; }

std::string_view reference_class(std::string_view label) {
    if (label == "T") return "trivial";
    if (contains(reference, label)) return *std::find(reference.begin(), reference.end(), label);
    if (contains(collapsing, label)) return "SL";
    for (auto member : {"A25", "C25", "D25", "E25"})
        if (label == member) return "A23";
    for (auto member : {"B13", "D12", "D35", "F13"})
        if (label == member) return "A12";
    if (label == "A35") return "F25";
    if (label == "B25") return "S";
    throw std::invalid_argument("unknown variety label '" + std::string(label) + "'");
}

bool reference_inclusion(std::string_view lower, std::string_view upper) {
    return reference_order()[reference_index(reference_class(lower))][reference_index(reference_class(upper))];
}

std::vector<Zroupoid> models_of(const VarietyDescriptor& v, std::size_t max_n, unsigned threads) {
    if (max_n == 0) throw std::invalid_argument("max size must be at least 1");
    std::vector<Zroupoid> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        SearchSpec spec;
        spec.size = n;
        spec.required = symmetric_base();
        spec.required.insert(spec.required.end(), v.defining.begin(), v.defining.end());
        spec.dedup = Dedup::up_to_iso;
        spec.threads = threads;
        auto models = enumerate(spec);
        out.insert(out.end(), std::make_move_iterator(models.begin()), std::make_move_iterator(models.end()));
    }
    return out;
}

ModelLibrary::ModelLibrary(std::size_t bound, unsigned threads)
    : bound_(bound), models_(models_of(variety("S"), bound, threads)) {}

std::vector<std::size_t> ModelLibrary::counts_by_size() const {
    std::vector<std::size_t> counts(bound_, 0);
    for (const auto& m : models_) ++counts[m.size() - 1];
    return counts;
}

std::vector<bool> ModelLibrary::membership(const VarietyDescriptor& v) const {
    const auto ids = compile_all(v);
    std::vector<bool> out;
    out.reserve(models_.size());
    for (const auto& m : models_) out.push_back(satisfies_all(m, ids));
    return out;
}

std::vector<Zroupoid> ModelLibrary::members(const VarietyDescriptor& v) const {
    const auto ids = compile_all(v);
    std::vector<Zroupoid> out;
    for (const auto& m : models_)
        if (satisfies_all(m, ids)) out.push_back(m);
    return out;
}

std::optional<Witness> distinguish(const ModelLibrary& lib, const VarietyDescriptor& x, const VarietyDescriptor& y) {
    const auto in = compile_all(x);
    const auto out = compile_all(y);
    for (const auto& m : lib.models()) {
        if (!satisfies_all(m, in)) continue;
        for (const auto& id : out) {
            auto result = satisfies(m, id);
            if (!result.holds) return Witness{m, id.label(), std::move(*result.witness)};
        }
    }
    return std::nullopt;
}

std::optional<Witness> distinguish(const VarietyDescriptor& x, const VarietyDescriptor& y, std::size_t max_n,
                                   unsigned threads) {
    return distinguish(ModelLibrary(max_n, threads), x, y);
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::equal_up_to_n:
        return "equal_up_to_n";
    case Verdict::left_proper_in_right:
        return "left_proper_in_right";
    case Verdict::right_proper_in_left:
        return "right_proper_in_left";
    case Verdict::incomparable:
        return "incomparable";
    }
    return "?";
}

std::string ComparisonReport::summary() const {
    const std::string bound_text = " (up to size " + std::to_string(bound) + ")";
    switch (verdict) {
    case Verdict::equal_up_to_n:
        return left + " = " + right + " (equal up to size " + std::to_string(bound) + ")";
    case Verdict::left_proper_in_right:
        return left + " \xE2\x8A\x82 " + right + bound_text;
    case Verdict::right_proper_in_left:
        return right + " \xE2\x8A\x82 " + left + bound_text;
    case Verdict::incomparable:
        return left + " and " + right + " incomparable" + bound_text;
    }
    return {};
}

ComparisonReport compare(const ModelLibrary& lib, const VarietyDescriptor& left, const VarietyDescriptor& right) {
    ComparisonReport report{left.label, right.label, Verdict::equal_up_to_n, distinguish(lib, left, right),
                            distinguish(lib, right, left), lib.bound()};
    if (report.left_only) verify_witness(*report.left_only, left, right);
    if (report.right_only) verify_witness(*report.right_only, right, left);
    if (report.left_only && report.right_only)
        report.verdict = Verdict::incomparable;
    else if (report.left_only)
        report.verdict = Verdict::right_proper_in_left;
    else if (report.right_only)
        report.verdict = Verdict::left_proper_in_right;
    return report;
}

}  // namespace zlab
