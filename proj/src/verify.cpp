#include "zlab/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zlab/bol_moufang.hpp"
#include "zlab/classify.hpp"
#include "zlab/enumerator.hpp"
#include "zlab/evaluate.hpp"
#include "zlab/lemmas.hpp"
#include "zlab/poset.hpp"
#include "zlab/variety.hpp"

namespace zlab {

namespace {

Zroupoid four_element_witness() {
    return Zroupoid::from_rows({{0, 1, 2, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {3, 3, 3, 3}});
}

Zroupoid three_element_witness() { return Zroupoid::from_rows({{2, 2, 2}, {1, 1, 2}, {0, 1, 2}}); }

std::string table_text(const Zroupoid& alg) {
    std::string out = "[";
    for (std::size_t a = 0; a < alg.size(); ++a) {
        out += a ? " / " : "";
        for (std::size_t b = 0; b < alg.size(); ++b)
            out += (b ? " " : "") + std::to_string(alg(static_cast<Element>(a), static_cast<Element>(b)));
    }
    return out + "]";
}

VerifyCheck start(std::string id, std::string title) {
    VerifyCheck check;
    check.id = std::move(id);
    check.title = std::move(title);
    return check;
}

bool in_variety(const Zroupoid& alg, const VarietyDescriptor& v) {
    return std::all_of(v.defining.begin(), v.defining.end(),
                       [&](const Identity& id) { return satisfies(alg, id).holds; });
}

VerifyCheck check_catalog() {
    VerifyCheck check = start("catalog", "60 identities; 47 collapsing and 13 surviving labels partition them");
    const auto& catalog = bol_moufang_catalog();
    std::set<std::string> labels;
    for (const auto& id : catalog) labels.insert(id.label);
    check.evidence.push_back("catalog size " + std::to_string(catalog.size()) + ", distinct labels " +
                             std::to_string(labels.size()));
    check.passed = catalog.size() == 60 && labels.size() == 60;

    const auto collapsing = collapsing_labels();
    const auto surviving = surviving_labels();
    std::set<std::string> united;
    for (auto l : collapsing) united.emplace(l);
    for (auto l : surviving) united.emplace(l);
    check.evidence.push_back("collapsing " + std::to_string(collapsing.size()) + ", surviving " +
                             std::to_string(surviving.size()) + ", union " + std::to_string(united.size()));
    check.passed = check.passed && collapsing.size() == 47 && surviving.size() == 13 && united == labels;

    const std::string a12 = print_identity(catalog.at("A12"), TermStyle::raw);
    check.evidence.push_back("A12: " + a12);
    check.passed = check.passed && a12 == "x -> (x -> (y -> z)) \xE2\x89\x88 x -> ((x -> y) -> z)";
    return check;
}

VerifyCheck check_semilattice_models() {
    VerifyCheck check = start("semilattice-models", "2_s satisfies all 60 Bol-Moufang identities");
    const Zroupoid alg = two_s();
    std::size_t held = 0;
    for (const auto& id : bol_moufang_catalog()) {
        if (satisfies(alg, id).holds)
            ++held;
        else
            check.evidence.push_back("2_s fails " + id.label);
    }
    check.evidence.insert(check.evidence.begin(), std::to_string(held) + "/60 hold on 2_s");
    check.passed = held == 60 && classify(alg).semilattice;
    return check;
}

VerifyCheck check_boolean_in_a12() {
    VerifyCheck check = start("boolean-in-a12", "2_b satisfies A12 and the Boolean axioms");
    const Zroupoid alg = two_b();
    const bool a12 = satisfies(alg, bol_moufang_catalog().at("A12")).holds;
    const auto classes = classify(alg);
    check.evidence.push_back(std::string("A12 ") + (a12 ? "holds" : "fails") + ", boolean " +
                             (classes.boolean ? "yes" : "no") + ", symmetric " + (classes.symmetric ? "yes" : "no"));
    check.passed = a12 && classes.boolean && classes.symmetric;
    return check;
}

VerifyCheck check_collapse(const ModelLibrary& lib) {
    VerifyCheck check = start("collapse-to-sl",
                      "each collapsing label holds on a symmetric model iff C and I10 both hold (up to size " +
                          std::to_string(lib.bound()) + ")");
    const auto sl = lib.membership(variety("SL"));
    std::size_t exceptions = 0;
    for (auto label : collapsing_labels()) {
        const auto members = lib.membership(variety(label));
        for (std::size_t m = 0; m < members.size(); ++m)
            if (members[m] != sl[m]) {
                ++exceptions;
                check.evidence.push_back(std::string(label) + " disagrees with SL on " + table_text(lib.models()[m]));
            }
    }
    const auto sl_count = static_cast<std::size_t>(std::count(sl.begin(), sl.end(), true));
    check.evidence.insert(check.evidence.begin(), std::to_string(collapsing_labels().size()) + " labels x " +
                                                      std::to_string(lib.models().size()) + " models, " +
                                                      std::to_string(sl_count) + " in SL, " +
                                                      std::to_string(exceptions) + " exceptions");
    check.passed = exceptions == 0;
    return check;
}

VerifyCheck check_equalities(const ModelLibrary& lib) {
    VerifyCheck check = start("equalities",
                      "reference equalities hold on every model up to size " + std::to_string(lib.bound()));
    for (const auto& group : reference_equalities()) {
        const auto first = lib.membership(variety(group.front()));
        std::string names;
        bool same = true;
        for (const auto& label : group) {
            names += (names.empty() ? "" : " = ") + label;
            const auto members = lib.membership(variety(label));
            if (members != first) {
                same = false;
                auto w = distinguish(lib, variety(label), variety(group.front()));
                if (!w) w = distinguish(lib, variety(group.front()), variety(label));
                check.evidence.push_back(label + " differs from " + group.front() + " on " + table_text(w->model));
            }
        }
        check.evidence.push_back(names + (same ? ": equal up to size " + std::to_string(lib.bound()) : ": DIFFER"));
        check.passed = check.passed && same;
    }
    return check;
}

VerifyCheck check_proper_inclusions(const ModelLibrary& lib) {
    VerifyCheck check = start("proper-inclusions",
                      "each strict inclusion has a witness no larger than the published table, and each published "
                      "table classifies as claimed");
    for (const auto& inclusion : reference_proper_inclusions()) {
        const auto lower = variety(inclusion.lower);
        const auto upper = variety(inclusion.upper);
        const std::string name = inclusion.lower + " \xE2\x8A\x82 " + inclusion.upper;

        const bool published_ok =
            classify(inclusion.witness).symmetric && in_variety(inclusion.witness, upper) &&
            !in_variety(inclusion.witness, lower);
        check.evidence.push_back(name + ": published table " + table_text(inclusion.witness) +
                                 (published_ok ? " classifies as claimed" : " does NOT classify as claimed"));
        check.passed = check.passed && published_ok;

        const std::size_t published_size = inclusion.witness.size();
        const auto found = distinguish(lib, upper, lower);
        if (found) {
            const bool small_enough = found->model.size() <= published_size;
            check.evidence.push_back(name + ": minimal witness of size " + std::to_string(found->model.size()) + " " +
                                     table_text(found->model) + " fails " + found->failed_identity);
            check.passed = check.passed && small_enough;
        } else if (lib.bound() >= published_size) {
            check.evidence.push_back(name + ": no witness up to size " + std::to_string(lib.bound()));
            check.passed = false;
        } else {
            check.evidence.push_back(name + ": no witness up to size " + std::to_string(lib.bound()) +
                                     "; the published one has size " + std::to_string(published_size));
        }
        const auto backwards = distinguish(lib, lower, upper);
        if (backwards) {
            check.evidence.push_back(name + ": inclusion refuted by " + table_text(backwards->model));
            check.passed = false;
        }
    }
    return check;
}

VerifyCheck check_poset(const ModelLibrary& lib) {
    VerifyCheck check = start("poset", "bounded inclusion poset matches the reference Hasse diagram; SL = A23 \xE2\x88\xA7 A12");
    std::vector<std::string> labels;
    for (auto l : reference_varieties()) labels.emplace_back(l);
    const PosetReport report = poset(lib, labels);

    if (!report.is_quasi_order()) {
        check.passed = false;
        check.evidence.push_back("computed inclusion is not a quasi-order");
    }
    std::size_t contradictions = 0;
    std::size_t exceedances = 0;
    for (const auto& r : report.relations) {
        if (r.status == RelationStatus::contradicts_reference) {
            ++contradictions;
            check.evidence.push_back("refuted: " + r.lower + " \xE2\x8A\x86 " + r.upper);
        } else if (r.status == RelationStatus::exceeds_reference) {
            ++exceedances;
            check.evidence.push_back("not yet separated at this bound: " + r.lower + " \xE2\x8A\x86 " + r.upper);
        }
    }
    for (const auto& [lo, hi] : report.covers) {
        std::string lower;
        std::string upper;
        for (const auto& l : report.classes[lo]) lower += (lower.empty() ? "" : "=") + l;
        for (const auto& l : report.classes[hi]) upper += (upper.empty() ? "" : "=") + l;
        check.evidence.push_back("cover " + lower + " -> " + upper);
    }
    check.passed = check.passed && contradictions == 0;

    // Every reference witness fits at bound 4; from there on the diagram must match exactly.
    std::size_t largest = 0;
    for (const auto& inclusion : reference_proper_inclusions())
        largest = std::max(largest, inclusion.witness.size());
    if (lib.bound() >= largest) {
        const bool exact = exceedances == 0 && report.classes.size() == labels.size() && report.covers.size() == 8;
        check.evidence.push_back(exact ? "diagram matches the reference exactly"
                                       : "diagram differs from the reference");
        check.passed = check.passed && exact;
    } else {
        check.evidence.push_back("bound " + std::to_string(lib.bound()) + " is below the largest published witness (" +
                                 std::to_string(largest) + "); only refutations count");
    }

    const auto a23 = lib.membership(variety("A23"));
    const auto a12 = lib.membership(variety("A12"));
    const auto sl = lib.membership(variety("SL"));
    std::size_t both = 0;
    bool meet = true;
    for (std::size_t m = 0; m < sl.size(); ++m)
        if (a23[m] && a12[m]) {
            ++both;
            meet = meet && sl[m];
        }
    check.evidence.push_back(std::to_string(both) + " models in A23 \xE2\x88\xA9 A12, " +
                             (meet ? "all in SL" : "some outside SL"));
    check.passed = check.passed && meet;
    return check;
}

VerifyCheck check_lemmas(const ModelLibrary& lib, unsigned threads) {
    const std::size_t implication_bound = std::min<std::size_t>(lib.bound(), 3);
    VerifyCheck check = start("lemmas", "lemma suites on implication zroupoids up to size " +
                                    std::to_string(implication_bound) + " and symmetric models up to size " +
                                    std::to_string(lib.bound()));
    std::vector<Zroupoid> models;
    for (std::size_t n = 1; n <= implication_bound; ++n) {
        SearchSpec spec;
        spec.size = n;
        for (auto name : {"I", "I0"})
            for (auto& id : axiom(name)) spec.required.push_back(std::move(id));
        spec.threads = threads;
        auto found = enumerate(spec);
        models.insert(models.end(), found.begin(), found.end());
    }
    const std::size_t implication_models = models.size();
    for (const auto& m : lib.models())
        if (m.size() > implication_bound) models.push_back(m);

    std::size_t applications = 0;
    std::size_t failures = 0;
    for (const auto& m : models) {
        for (const auto& c : lemma_suite(m).checks) {
            applications += c.applicable;
            if (!c.passed) {
                ++failures;
                std::string failed;
                for (const auto& f : c.failed) failed += " " + f;
                check.evidence.push_back(c.name + " fails on " + table_text(m) + ":" + failed);
            }
        }
    }
    check.evidence.insert(check.evidence.begin(),
                          std::to_string(implication_models) + " implication zroupoids, " +
                              std::to_string(models.size() - implication_models) + " larger symmetric models, " +
                              std::to_string(applications) + " applicable lemma instances, " +
                              std::to_string(failures) + " failures");
    check.passed = failures == 0;
    return check;
}

}  // namespace

std::vector<ReferenceInclusion> reference_proper_inclusions() {
    return {
        {"SL", "A23", four_element_witness()},
        {"A23", "F25", two_b()},
        {"SL", "A12", two_b()},
        {"BA", "A12", two_s()},
        {"A12", "F25", four_element_witness()},
        {"F25", "S", three_element_witness()},
    };
}

std::vector<std::vector<std::string>> reference_equalities() {
    return {
        {"A23", "A25", "C25", "D25", "E25"},
        {"A12", "B13", "D12", "D35", "F13"},
        {"A35", "F25"},
        {"B25", "S"},
    };
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport verify_claims(std::size_t max_n, unsigned threads) {
    VerifyReport report;
    report.bound = max_n;
    const ModelLibrary lib(max_n, threads);
    report.symmetric_counts = lib.counts_by_size();
    report.checks.push_back(check_catalog());
    report.checks.push_back(check_semilattice_models());
    report.checks.push_back(check_boolean_in_a12());
    report.checks.push_back(check_collapse(lib));
    report.checks.push_back(check_equalities(lib));
    report.checks.push_back(check_proper_inclusions(lib));
    report.checks.push_back(check_poset(lib));
    report.checks.push_back(check_lemmas(lib, threads));
    return report;
}

}  // namespace zlab
