#include "zlab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zlab {

json to_json(const Zroupoid& alg) {
    json doc;
    doc["size"] = alg.size();
    doc["table"] = alg.rows();
    return doc;
}

Zroupoid zroupoid_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("size") || !doc.contains("table"))
        throw std::invalid_argument("algebra must be an object with \"size\" and \"table\"");
    if (!doc["size"].is_number_integer()) throw std::invalid_argument("\"size\" must be an integer");
    const auto size = doc["size"].get<long long>();
    const auto& table = doc["table"];
    if (!table.is_array()) throw std::invalid_argument("\"table\" must be an array of rows");
    if (size < 1 || static_cast<long long>(table.size()) != size)
        throw std::invalid_argument("\"table\" must have exactly \"size\" rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : table) {
        if (!row.is_array()) throw std::invalid_argument("each table row must be an array");
        std::vector<int> values;
        for (const auto& cell : row) {
            if (!cell.is_number_integer()) throw std::invalid_argument("table entries must be integers");
            values.push_back(cell.get<int>());
        }
        rows.push_back(std::move(values));
    }
    return Zroupoid::from_rows(rows);
}

json to_json(const Identity& id) {
    json doc;
    doc["label"] = id.label;
    doc["text"] = print_identity(id, TermStyle::sugared);
    doc["lhs"] = print_term(id.lhs, TermStyle::raw);
    doc["rhs"] = print_term(id.rhs, TermStyle::raw);
    doc["variables"] = json::array();
    for (char v : id.variables) doc["variables"].push_back(std::string(1, v));
    return doc;
}

json to_json(const Assignment& env) {
    json doc = json::object();
    for (const auto& [var, value] : env.bindings) doc[std::string(1, var)] = value;
    return doc;
}

namespace {

json counterexample(const Counterexample& cex) {
    return {{"assignment", to_json(cex.assignment)}, {"lhs", cex.lhs}, {"rhs", cex.rhs}};
}

}  // namespace

json to_json(const SatisfactionResult& result) {
    json doc;
    doc["holds"] = result.holds;
    doc["witness"] = result.witness ? counterexample(*result.witness) : json(nullptr);
    if (!result.failures.empty()) {
        doc["failures"] = json::array();
        for (const auto& f : result.failures) doc["failures"].push_back(counterexample(f));
    }
    return doc;
}

json to_json(const ClassReport& r) {
    json doc;
    doc["identities"] = {{"I0", r.i0}, {"I", r.i},   {"I20", r.i20}, {"MC", r.mc}, {"C", r.c},
                         {"I10", r.i10}, {"DM", r.dm}, {"KL", r.kl},   {"BA", r.ba}};
    doc["classes"] = {{"implication_zroupoid", r.implication_zroupoid},
                      {"involutive", r.involutive},
                      {"meet_commutative", r.meet_commutative},
                      {"symmetric", r.symmetric},
                      {"SL", r.semilattice},
                      {"DM", r.de_morgan},
                      {"KL", r.kleene},
                      {"BA", r.boolean}};
    return doc;
}

json to_json(const LemmaReport& report) {
    json doc;
    doc["all_passed"] = report.all_passed();
    doc["lemmas"] = json::array();
    for (const auto& c : report.checks)
        doc["lemmas"].push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed},
                                 {"failed", c.failed}});
    return doc;
}

json to_json(const Witness& w) {
    return {{"algebra", to_json(w.model)}, {"fails", w.failed_identity},
            {"counterexample", counterexample(w.counterexample)}};
}

json to_json(const ComparisonReport& report) {
    json doc;
    doc["left"] = report.left;
    doc["right"] = report.right;
    doc["verdict"] = std::string(to_string(report.verdict));
    doc["bound"] = report.bound;
    doc["summary"] = report.summary();
    doc["left_only"] = report.left_only ? to_json(*report.left_only) : json(nullptr);
    doc["right_only"] = report.right_only ? to_json(*report.right_only) : json(nullptr);
    return doc;
}

json to_json(const PosetReport& report) {
    json doc;
    doc["bound"] = report.bound;
    doc["note"] = "inclusions and equalities hold up to size " + std::to_string(report.bound) + " only";
    doc["labels"] = report.labels;
    doc["classes"] = report.classes;
    doc["covers"] = json::array();
    for (const auto& [lo, hi] : report.covers) doc["covers"].push_back({{"lower", lo}, {"upper", hi}});
    doc["relations"] = json::array();
    for (const auto& r : report.relations)
        doc["relations"].push_back({{"lower", r.lower},
                                    {"upper", r.upper},
                                    {"computed", r.computed},
                                    {"expected", r.expected},
                                    {"status", std::string(to_string(r.status))}});
    doc["separations"] = json::array();
    for (const auto& s : report.separations)
        doc["separations"].push_back({{"in", s.in}, {"out", s.out}, {"witness", to_json(s.witness)}});
    doc["quasi_order"] = report.is_quasi_order();
    doc["consistent_with_reference"] = report.consistent_with_reference();
    return doc;
}

json to_json(const VerifyReport& report) {
    json doc;
    doc["bound"] = report.bound;
    doc["note"] = "equalities are established up to size " + std::to_string(report.bound) + " only";
    doc["symmetric_models_by_size"] = report.symmetric_counts;
    doc["passed"] = report.passed();
    doc["checks"] = json::array();
    for (const auto& c : report.checks)
        doc["checks"].push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"evidence", c.evidence}});
    return doc;
}

Zroupoid read_algebra(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return zroupoid_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

}  // namespace zlab
