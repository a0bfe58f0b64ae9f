#include "zlab/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zlab {

std::string_view to_string(RelationStatus s) {
    switch (s) {
    case RelationStatus::consistent:
        return "consistent";
    case RelationStatus::exceeds_reference:
        return "exceeds_reference";
    case RelationStatus::contradicts_reference:
        return "contradicts_reference";
    }
    return "?";
}

bool PosetReport::is_quasi_order() const {
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!includes[i][i]) return false;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (includes[i][j] && includes[j][k] && !includes[i][k]) return false;
    }
    return true;
}

bool PosetReport::consistent_with_reference() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const Relation& r) { return r.status == RelationStatus::consistent; });
}

std::size_t PosetReport::class_of(const std::string& label) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (std::find(classes[c].begin(), classes[c].end(), label) != classes[c].end()) return c;
    throw std::out_of_range("label '" + label + "' is not in the poset");
}

const Separation* PosetReport::separation(const std::string& in, const std::string& out) const {
    for (const auto& s : separations)
        if (s.in == in && s.out == out) return &s;
    return nullptr;
}

PosetReport poset(const ModelLibrary& lib, const std::vector<std::string>& labels) {
    PosetReport report;
    report.bound = lib.bound();
    report.labels = labels;

    std::vector<VarietyDescriptor> varieties;
    std::vector<std::vector<bool>> members;
    std::set<std::string> seen;
    for (const auto& label : labels) {
        varieties.push_back(variety(label));
        if (!seen.insert(varieties.back().label).second)
            throw std::invalid_argument("label '" + label + "' given twice");
        members.push_back(lib.membership(varieties.back()));
    }

    const std::size_t n = labels.size();
    const std::size_t models = lib.models().size();
    report.includes.assign(n, std::vector<bool>(n, true));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < models; ++m)
                if (members[i][m] && !members[j][m]) {
                    report.includes[i][j] = false;
                    break;
                }

    std::vector<std::size_t> class_index(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (class_index[i] != n) continue;
        class_index[i] = report.classes.size();
        report.classes.push_back({labels[i]});
        for (std::size_t j = i + 1; j < n; ++j)
            if (report.includes[i][j] && report.includes[j][i]) {
                class_index[j] = class_index[i];
                report.classes.back().push_back(labels[j]);
            }
    }

    // Strict order on classes, then covers: a < b with no c strictly between.
    const std::size_t k = report.classes.size();
    std::vector<std::size_t> rep(k);
    for (std::size_t i = n; i-- > 0;) rep[class_index[i]] = i;
    auto below = [&](std::size_t a, std::size_t b) {
        return a != b && report.includes[rep[a]][rep[b]];
    };
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (!below(a, b)) continue;
            bool covered = true;
            for (std::size_t c = 0; c < k && covered; ++c)
                if (below(a, c) && below(c, b)) covered = false;
            if (covered) report.covers.emplace_back(a, b);
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Relation r{labels[i], labels[j], report.includes[i][j], reference_inclusion(labels[i], labels[j]),
                       RelationStatus::consistent};
            if (r.computed && !r.expected) r.status = RelationStatus::exceeds_reference;
            if (!r.computed && r.expected) r.status = RelationStatus::contradicts_reference;
            report.relations.push_back(std::move(r));
            if (!report.includes[i][j]) {
                auto w = distinguish(lib, varieties[i], varieties[j]);
                if (!w) throw std::logic_error("non-inclusion without a witness");
                report.separations.push_back({labels[i], labels[j], std::move(*w)});
            }
        }
    return report;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const PosetReport& report) {
    std::string out = "digraph varieties {\n";
    out += "  rankdir=BT;\n";
    out += "  label=" + quote("inclusions up to size " + std::to_string(report.bound)) + ";\n";
    out += "  node [shape=box];\n";
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
        std::string name;
        for (const auto& label : report.classes[c]) name += (name.empty() ? "" : " = ") + label;
        out += "  c" + std::to_string(c) + " [label=" + quote(name) + "];\n";
    }
    for (const auto& [lo, hi] : report.covers)
        out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace zlab
