// zlab: finite-model laboratory for Bol-Moufang identities over
// implication zroupoids.
//
// Exit status: 0 on success, 1 when verify-paper finds a failing check,
// 2 on usage or I/O errors.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zlab/bol_moufang.hpp"
#include "zlab/classify.hpp"
#include "zlab/enumerator.hpp"
#include "zlab/json_io.hpp"
#include "zlab/lemmas.hpp"
#include "zlab/poset.hpp"
#include "zlab/variety.hpp"
#include "zlab/verify.hpp"

namespace fs = std::filesystem;
using namespace zlab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    unsigned threads = 0;

    bool json = false;
    bool text = false;

    std::string algebra_path;
    std::vector<std::string> identities;
    bool all_failures = false;
    bool free_variables = false;
    bool lemmas = false;

    std::size_t size = 0;
    std::vector<std::string> required;
    bool upto_iso = false;
    std::size_t limit = 0;
    std::string out_path;
    bool allow_large = false;

    std::string left;
    std::string right;
    std::size_t distinguish_max = 3;
    std::size_t poset_max = 3;
    std::size_t verify_max = 0;
    std::vector<std::string> labels;
    std::string dot_path;
    std::string json_path;
    std::string report_path;
    bool deep = false;
};

void require_readable(const std::string& path) {
    if (!fs::is_regular_file(path)) throw UsageError("no such file: " + path);
}

void require_writable(const std::string& path) {
    if (path.empty()) return;
    const fs::path parent = fs::absolute(path).parent_path();
    if (!fs::is_directory(parent)) throw UsageError("output directory does not exist: " + parent.string());
}

// A catalog label, an axiom name, or a literal equation such as "x -> x = x".
std::vector<Identity> resolve_identity(const std::string& spec, bool free_variables) {
    if (spec.find('=') != std::string::npos || spec.find("\xE2\x89\x88") != std::string::npos) {
        try {
            return {parse_identity(spec, spec, ParseOptions{free_variables})};
        } catch (const ParseError& e) {
            throw UsageError("cannot parse identity '" + spec + "': " + e.what());
        }
    }
    if (bol_moufang_catalog().contains(spec)) return {bol_moufang_catalog().at(spec)};
    try {
        return axiom(spec);
    } catch (const std::invalid_argument&) {
        throw UsageError("unknown identity '" + spec + "' (expected a catalog label, an axiom name or an equation)");
    }
}

std::string table_lines(const Zroupoid& alg, const std::string& indent) {
    std::ostringstream out;
    out << indent << "->";
    for (std::size_t b = 0; b < alg.size(); ++b) out << ' ' << b;
    out << '\n';
    for (std::size_t a = 0; a < alg.size(); ++a) {
        out << indent << a << " ";
        for (std::size_t b = 0; b < alg.size(); ++b)
            out << ' ' << int(alg(static_cast<Element>(a), static_cast<Element>(b)));
        out << '\n';
    }
    return out.str();
}

std::string assignment_text(const Assignment& env) {
    std::string out;
    for (const auto& [var, value] : env.bindings)
        out += (out.empty() ? "" : ", ") + std::string(1, var) + ":=" + std::to_string(value);
    return out;
}

void emit(const std::string& path, const std::string& contents) {
    if (path.empty())
        std::cout << contents;
    else
        write_file_atomic(path, contents);
}

int run_identities(const RunConfig& cfg) {
    if (cfg.json) {
        json doc = json::array();
        for (const auto& id : bol_moufang_catalog()) {
            json entry = to_json(id);
            entry["raw"] = print_identity(id, TermStyle::raw);
            if (auto tag = catalog_tag(id.label); !tag.empty()) entry["tag"] = std::string(tag);
            doc.push_back(std::move(entry));
        }
        std::cout << doc.dump(2) << '\n';
        return exit_ok;
    }
    for (const auto& id : bol_moufang_catalog()) {
        std::cout << id.label << "  " << print_identity(id, TermStyle::sugared);
        if (auto tag = catalog_tag(id.label); !tag.empty()) std::cout << "  [" << tag << "]";
        std::cout << '\n';
    }
    return exit_ok;
}

int run_check(const RunConfig& cfg) {
    require_readable(cfg.algebra_path);
    const Zroupoid alg = read_algebra(cfg.algebra_path);
    std::vector<Identity> ids;
    for (const auto& spec : cfg.identities)
        for (auto& id : resolve_identity(spec, cfg.free_variables)) ids.push_back(std::move(id));

    const auto mode = cfg.all_failures ? FailureReport::all : FailureReport::first;
    json doc = json::array();
    for (const auto& id : ids) {
        const auto result = satisfies(alg, id, mode);
        if (cfg.json) {
            json entry = to_json(id);
            entry["result"] = to_json(result);
            doc.push_back(std::move(entry));
            continue;
        }
        std::cout << id.label << ": " << print_identity(id) << "  " << (result.holds ? "holds" : "FAILS");
        if (result.witness)
            std::cout << " at " << assignment_text(result.witness->assignment) << " (lhs "
                      << int(result.witness->lhs) << ", rhs " << int(result.witness->rhs) << ")";
        std::cout << '\n';
        for (std::size_t i = 1; i < result.failures.size(); ++i)
            std::cout << "    also at " << assignment_text(result.failures[i].assignment) << '\n';
    }
    if (cfg.json) std::cout << doc.dump(2) << '\n';
    return exit_ok;
}

int run_classify(const RunConfig& cfg) {
    require_readable(cfg.algebra_path);
    const Zroupoid alg = read_algebra(cfg.algebra_path);
    const ClassReport report = classify(alg);
    if (cfg.json) {
        json doc = to_json(report);
        if (cfg.lemmas) doc["lemmas"] = to_json(lemma_suite(alg));
        std::cout << doc.dump(2) << '\n';
        return exit_ok;
    }
    const json doc = to_json(report);
    std::cout << "identities:";
    for (const auto& [name, value] : doc["identities"].items()) std::cout << ' ' << name << (value ? "+" : "-");
    std::cout << "\nclasses:";
    for (const auto& [name, value] : doc["classes"].items())
        if (value.get<bool>()) std::cout << ' ' << name;
    std::cout << '\n';
    if (cfg.lemmas) {
        for (const auto& c : lemma_suite(alg).checks) {
            std::cout << "  " << c.name << ": " << (!c.applicable ? "n/a" : c.passed ? "pass" : "FAIL");
            for (const auto& f : c.failed) std::cout << ' ' << f;
            std::cout << '\n';
        }
    }
    return exit_ok;
}

int run_enumerate(const RunConfig& cfg) {
    require_writable(cfg.out_path);
    SearchSpec spec;
    spec.size = cfg.size;
    for (const auto& name : cfg.required)
        for (auto& id : resolve_identity(name, cfg.free_variables)) spec.required.push_back(std::move(id));
    spec.dedup = cfg.upto_iso ? Dedup::up_to_iso : Dedup::none;
    if (cfg.limit > 0) spec.limit = cfg.limit;
    spec.threads = cfg.threads;
    spec.allow_large = cfg.allow_large;
    if (spec.size > default_size_cap && spec.allow_large)
        std::cerr << "warning: size " << spec.size << " may take a very long time\n";

    std::vector<Zroupoid> models;
    try {
        models = enumerate(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string lines;
    for (const auto& m : models) lines += to_json(m).dump() + '\n';
    emit(cfg.out_path, lines);
    if (!cfg.out_path.empty()) std::cerr << models.size() << " algebras written to " << cfg.out_path << '\n';
    return exit_ok;
}

int run_distinguish(const RunConfig& cfg) {
    const VarietyDescriptor x = variety(cfg.left);
    const VarietyDescriptor y = variety(cfg.right);
    const ModelLibrary lib(cfg.distinguish_max, cfg.threads);
    const auto witness = distinguish(lib, x, y);
    if (cfg.json) {
        json doc;
        doc["in"] = x.label;
        doc["out"] = y.label;
        doc["bound"] = cfg.distinguish_max;
        doc["witness"] = witness ? to_json(*witness) : json(nullptr);
        std::cout << doc.dump(2) << '\n';
        return exit_ok;
    }
    if (!witness) {
        std::cout << "no model of " << x.label << " outside " << y.label << " up to size " << cfg.distinguish_max << '\n';
        return exit_ok;
    }
    std::cout << "witness of size " << witness->model.size() << " in " << x.label << ", failing "
              << witness->failed_identity << " of " << y.label << " at "
              << assignment_text(witness->counterexample.assignment) << ":\n"
              << table_lines(witness->model, "  ");
    return exit_ok;
}

int run_poset(const RunConfig& cfg) {
    require_writable(cfg.dot_path);
    require_writable(cfg.json_path);
    std::vector<std::string> labels = cfg.labels;
    if (labels.empty())
        for (auto l : reference_varieties()) labels.emplace_back(l);
    for (const auto& l : labels) variety(l);

    const ModelLibrary lib(cfg.poset_max, cfg.threads);
    const PosetReport report = poset(lib, labels);
    if (!cfg.dot_path.empty()) write_file_atomic(cfg.dot_path, to_dot(report));
    if (!cfg.json_path.empty()) write_file_atomic(cfg.json_path, to_json(report).dump(2) + '\n');

    std::cout << "inclusions up to size " << report.bound << " over " << lib.models().size() << " symmetric models\n";
    auto class_name = [&](std::size_t c) {
        std::string name;
        for (const auto& l : report.classes[c]) name += (name.empty() ? "" : " = ") + l;
        return name;
    };
    for (std::size_t c = 0; c < report.classes.size(); ++c) std::cout << "  class " << class_name(c) << '\n';
    for (const auto& [lo, hi] : report.covers)
        std::cout << "  " << class_name(lo) << " \xE2\x8A\x82 " << class_name(hi) << '\n';
    for (const auto& r : report.relations)
        if (r.status != RelationStatus::consistent)
            std::cout << "  " << r.lower << " \xE2\x8A\x86 " << r.upper << ": " << to_string(r.status) << '\n';
    return exit_ok;
}

int run_verify(const RunConfig& cfg) {
    require_writable(cfg.report_path);
    const std::size_t bound = cfg.verify_max ? cfg.verify_max : (cfg.deep ? 4 : 3);
    const VerifyReport report = verify_claims(bound, cfg.threads);
    if (!cfg.report_path.empty()) write_file_atomic(cfg.report_path, to_json(report).dump(2) + '\n');
    std::cout << "checks up to size " << bound << " (symmetric models per size:";
    for (auto c : report.symmetric_counts) std::cout << ' ' << c;
    std::cout << ")\n";
    for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.title << '\n';
        if (cfg.text || !c.passed)
            for (const auto& e : c.evidence) std::cout << "    " << e << '\n';
    }
    return report.passed() ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-model laboratory for Bol-Moufang identities over implication zroupoids"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--threads", cfg.threads, "Worker threads (default: ZLAB_THREADS or machine parallelism)");

    auto* identities = app.add_subcommand("identities", "List the 60 Bol-Moufang identities");
    auto* id_json = identities->add_flag("--json", cfg.json, "JSON array output");
    identities->add_flag("--text", cfg.text, "Plain text output (default)")->excludes(id_json);

    auto* check = app.add_subcommand("check", "Check identities on an algebra");
    check->add_option("--algebra", cfg.algebra_path, "Algebra JSON file")->required();
    check->add_option("--identity", cfg.identities, "Catalog label, axiom name or equation")->required();
    check->add_flag("--all-failures", cfg.all_failures, "Report every failing assignment");
    check->add_flag("--free-vars", cfg.free_variables, "Allow any letter as a variable in equations");
    check->add_flag("--json", cfg.json, "JSON output");

    auto* classify_cmd = app.add_subcommand("classify", "Report class memberships of an algebra");
    classify_cmd->add_option("--algebra", cfg.algebra_path, "Algebra JSON file")->required();
    classify_cmd->add_flag("--lemmas", cfg.lemmas, "Also run the lemma suite");
    classify_cmd->add_flag("--json", cfg.json, "JSON output");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate finite models of a set of identities");
    enumerate_cmd->add_option("--size", cfg.size, "Carrier size")->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--require", cfg.required, "Required identities, comma separated")
        ->required()
        ->delimiter(',');
    enumerate_cmd->add_flag("--upto-iso", cfg.upto_iso, "One representative per isomorphism class");
    enumerate_cmd->add_option("--limit", cfg.limit, "Stop after this many algebras");
    enumerate_cmd->add_option("--out", cfg.out_path, "Write JSON lines here instead of stdout");
    enumerate_cmd->add_flag("--allow-large", cfg.allow_large, "Permit sizes above the default cap of 6");
    enumerate_cmd->add_flag("--free-vars", cfg.free_variables, "Allow any letter as a variable in equations");

    auto* distinguish_cmd = app.add_subcommand("distinguish", "Find a model of X outside Y");
    distinguish_cmd->add_option("X", cfg.left, "Variety label")->required();
    distinguish_cmd->add_option("Y", cfg.right, "Variety label")->required();
    distinguish_cmd->add_option("--max-size", cfg.distinguish_max, "Largest model size")->default_val(3)->check(
        CLI::PositiveNumber);
    distinguish_cmd->add_flag("--json", cfg.json, "JSON output");

    auto* poset_cmd = app.add_subcommand("poset", "Bounded inclusion poset of varieties");
    poset_cmd->add_option("--labels", cfg.labels, "Variety labels, comma separated")->delimiter(',');
    poset_cmd->add_option("--max-size", cfg.poset_max, "Largest model size")->default_val(3)->check(
        CLI::PositiveNumber);
    poset_cmd->add_option("--dot", cfg.dot_path, "Write the Hasse diagram as DOT");
    poset_cmd->add_option("--json", cfg.json_path, "Write the report as JSON");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Replay every finitely checkable classification claim");
    verify_cmd->add_option("--max-size", cfg.verify_max, "Largest model size (default 3, or 4 with --deep)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--deep", cfg.deep, "Check up to size 4");
    verify_cmd->add_option("--report", cfg.report_path, "Write the JSON report here");
    verify_cmd->add_flag("--verbose", cfg.text, "Print evidence for passing checks too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "zlab: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (*identities) return run_identities(cfg);
        if (*check) return run_check(cfg);
        if (*classify_cmd) return run_classify(cfg);
        if (*enumerate_cmd) return run_enumerate(cfg);
        if (*distinguish_cmd) return run_distinguish(cfg);
        if (*poset_cmd) return run_poset(cfg);
        if (*verify_cmd) return run_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "zlab: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "zlab: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "zlab: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
