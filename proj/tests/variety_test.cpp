#include <doctest.h>

#include "zlab/bol_moufang.hpp"
#include "zlab/canonical.hpp"
#include "zlab/classify.hpp"
#include "zlab/variety.hpp"

using namespace zlab;

namespace {

const ModelLibrary& library4() {
    static const ModelLibrary lib(4);
    return lib;
}

}  // namespace

TEST_CASE("variety labels") {
    CHECK(variety("A23").defining.size() == 1);
    CHECK(variety("SL").defining.size() == 2);
    CHECK(variety("BA").defining.size() == 2);
    CHECK(variety("S").defining.empty());
    CHECK(variety("T").label == "trivial");
    CHECK_THROWS_AS(variety("A11"), std::invalid_argument);
    CHECK_THROWS_AS(variety(""), std::invalid_argument);
    CHECK(symmetric_base().size() == 4);
}

TEST_CASE("reference fixture") {
    CHECK(reference_varieties().size() == 7);
    CHECK(reference_class("D25") == "A23");
    CHECK(reference_class("F13") == "A12");
    CHECK(reference_class("A35") == "F25");
    CHECK(reference_class("B25") == "S");
    CHECK(reference_class("B15") == "SL");
    CHECK(reference_inclusion("SL", "S"));
    CHECK(reference_inclusion("BA", "F25"));
    CHECK(reference_inclusion("C13", "D12"));
    CHECK_FALSE(reference_inclusion("BA", "A23"));
    CHECK_FALSE(reference_inclusion("A23", "A12"));
    CHECK_FALSE(reference_inclusion("S", "F25"));
    CHECK_THROWS(reference_class("nope"));
}

TEST_CASE("library filtering agrees with direct enumeration") {
    for (auto label : {"S", "SL", "BA", "A23", "A12", "F25", "trivial", "B25", "C13"}) {
        CAPTURE(label);
        CHECK(library4().members(variety(label)) == models_of(variety(label), 4));
    }
    CHECK(library4().counts_by_size() == std::vector<std::size_t>{1, 2, 3, 9});
    CHECK(models_of(variety("trivial"), 4) == std::vector<Zroupoid>{Zroupoid::trivial()});
}

TEST_CASE("library is ordered by size, then canonically") {
    const auto& models = library4().models();
    CHECK(std::is_sorted(models.begin(), models.end()));
    for (const auto& m : models) {
        CHECK(is_canonical(m));
        CHECK(classify(m).symmetric);
    }
}

TEST_CASE("distinguish finds minimal witnesses") {
    const auto w = distinguish(library4(), variety("F25"), variety("A23"));
    REQUIRE(w);
    CHECK(w->model == two_b());
    CHECK(w->failed_identity == "A23");
    CHECK_FALSE(satisfies(w->model, bol_moufang_catalog().at("A23")).holds);

    const auto ba = distinguish(library4(), variety("A12"), variety("BA"));
    REQUIRE(ba);
    CHECK(ba->model == two_s());

    const auto sl = distinguish(library4(), variety("A23"), variety("SL"));
    REQUIRE(sl);
    CHECK(sl->model.size() == 4);
    CHECK(sl->failed_identity == "C");

    CHECK_FALSE(distinguish(library4(), variety("SL"), variety("A23")));
    CHECK_FALSE(distinguish(library4(), variety("S"), variety("B25")));
    CHECK_FALSE(distinguish(variety("A23"), variety("SL"), 3));
}

TEST_CASE("witnesses are stable as the bound grows") {
    for (auto [x, y] : {std::pair{"F25", "A23"}, {"S", "F25"}, {"A12", "SL"}, {"A12", "BA"}}) {
        CAPTURE(x);
        CAPTURE(y);
        const auto small = distinguish(variety(x), variety(y), 3);
        REQUIRE(small);
        CHECK(distinguish(library4(), variety(x), variety(y))->model == small->model);
    }
}

TEST_CASE("comparison verdicts") {
    const auto eq = compare(library4(), variety("A23"), variety("E25"));
    CHECK(eq.verdict == Verdict::equal_up_to_n);
    CHECK(eq.summary() == "A23 = E25 (equal up to size 4)");

    const auto lt = compare(library4(), variety("SL"), variety("A12"));
    CHECK(lt.verdict == Verdict::left_proper_in_right);
    REQUIRE(lt.right_only);
    CHECK(lt.right_only->model == two_b());
    CHECK(lt.summary() == "SL ⊂ A12 (up to size 4)");

    const auto gt = compare(library4(), variety("S"), variety("F25"));
    CHECK(gt.verdict == Verdict::right_proper_in_left);
    REQUIRE(gt.left_only);
    CHECK(gt.left_only->model.size() == 3);

    const auto inc = compare(library4(), variety("A23"), variety("A12"));
    CHECK(inc.verdict == Verdict::incomparable);
    CHECK(inc.left_only);
    CHECK(inc.right_only);
    CHECK(to_string(inc.verdict) == "incomparable");
}

TEST_CASE("collapsing labels hold exactly on the semilattice models") {
    const auto sl = library4().membership(variety("SL"));
    for (auto label : collapsing_labels()) {
        CAPTURE(label);
        CHECK(library4().membership(variety(label)) == sl);
    }
}
