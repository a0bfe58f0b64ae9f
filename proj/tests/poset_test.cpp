#include <doctest.h>

#include <algorithm>

#include "zlab/poset.hpp"
#include "zlab/verify.hpp"

using namespace zlab;

namespace {

std::vector<std::string> reference_labels() {
    std::vector<std::string> labels;
    for (auto l : reference_varieties()) labels.emplace_back(l);
    return labels;
}

std::string class_name(const PosetReport& r, std::size_t c) {
    std::string out;
    for (const auto& l : r.classes[c]) out += (out.empty() ? "" : "=") + l;
    return out;
}

std::vector<std::string> cover_names(const PosetReport& r) {
    std::vector<std::string> out;
    for (auto [lo, hi] : r.covers) out.push_back(class_name(r, lo) + "<" + class_name(r, hi));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("reference poset at size 4") {
    const ModelLibrary lib(4);
    const PosetReport r = poset(lib, reference_labels());
    CHECK(r.is_quasi_order());
    CHECK(r.consistent_with_reference());
    CHECK(r.classes.size() == 7);
    CHECK(cover_names(r) == std::vector<std::string>{"A12<F25", "A23<F25", "BA<A12", "F25<S", "SL<A12", "SL<A23",
                                                     "trivial<BA", "trivial<SL"});
    for (const auto& rel : r.relations) CHECK(rel.status == RelationStatus::consistent);

    const Separation* sep = r.separation("F25", "A12");
    REQUIRE(sep);
    CHECK(sep->witness.model.size() == 4);
    CHECK(r.separation("SL", "A12") == nullptr);
}

TEST_CASE("equality classes at size 4") {
    const ModelLibrary lib(4);
    const PosetReport r = poset(lib, {"A23", "A25", "C25", "D25", "E25", "A12", "B13", "D12", "D35", "F13", "A35",
                                      "F25", "B25", "S"});
    CHECK(r.is_quasi_order());
    CHECK(r.consistent_with_reference());
    REQUIRE(r.classes.size() == 4);
    CHECK(r.classes[0] == std::vector<std::string>{"A23", "A25", "C25", "D25", "E25"});
    CHECK(r.classes[1] == std::vector<std::string>{"A12", "B13", "D12", "D35", "F13"});
    CHECK(r.classes[2] == std::vector<std::string>{"A35", "F25"});
    CHECK(r.classes[3] == std::vector<std::string>{"B25", "S"});
}

TEST_CASE("small bounds merge classes without contradicting the reference") {
    const ModelLibrary lib(3);
    const PosetReport r = poset(lib, reference_labels());
    CHECK(r.is_quasi_order());
    CHECK_FALSE(r.consistent_with_reference());
    for (const auto& rel : r.relations) CHECK(rel.status != RelationStatus::contradicts_reference);
    CHECK(r.class_of("SL") == r.class_of("A23"));
    CHECK(r.class_of("A12") == r.class_of("F25"));
    const bool exceeds = std::any_of(r.relations.begin(), r.relations.end(), [](const Relation& rel) {
        return rel.status == RelationStatus::exceeds_reference;
    });
    CHECK(exceeds);
}

TEST_CASE("labels are validated") {
    const ModelLibrary lib(2);
    CHECK_THROWS_AS(poset(lib, {"SL", "SL"}), std::invalid_argument);
    CHECK_THROWS_AS(poset(lib, {"SL", "Q"}), std::invalid_argument);
}

TEST_CASE("dot output draws one node per class") {
    const ModelLibrary lib(4);
    const PosetReport r = poset(lib, {"A23", "E25", "F25", "S"});
    const std::string dot = to_dot(r);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("A23 = E25") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 2);
}

TEST_CASE("published separating tables") {
    const auto inclusions = reference_proper_inclusions();
    REQUIRE(inclusions.size() == 6);
    for (const auto& inc : inclusions) {
        CAPTURE(inc.lower);
        CAPTURE(inc.upper);
        CHECK(reference_inclusion(inc.lower, inc.upper));
        CHECK_FALSE(reference_inclusion(inc.upper, inc.lower));
    }
    CHECK(reference_equalities().size() == 4);
}

TEST_CASE("claims replay") {
    for (std::size_t bound : {1u, 2u, 3u}) {
        CAPTURE(bound);
        const VerifyReport r = verify_claims(bound);
        CHECK(r.passed());
        CHECK(r.checks.size() == 8);
        CHECK(r.symmetric_counts.size() == bound);
        for (const auto& c : r.checks) {
            CAPTURE(c.id);
            CHECK(c.passed);
        }
    }
}
