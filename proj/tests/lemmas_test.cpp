#include <doctest.h>

#include "zlab/bol_moufang.hpp"
#include "zlab/classify.hpp"
#include "zlab/enumerator.hpp"
#include "zlab/lemmas.hpp"
#include "zlab/variety.hpp"

using namespace zlab;

namespace {

std::vector<Identity> implication_axioms() {
    auto ids = axiom("I");
    ids.push_back(axiom("I0").front());
    return ids;
}

}  // namespace

TEST_CASE("registry") {
    const auto names = lemma_names();
    CHECK(names.size() == 13);
    CHECK(names.front() == "involution-equivalents");
    const auto report = lemma_suite(two_b());
    CHECK(report.checks.size() == names.size());
    CHECK_THROWS_AS(report.at("no-such-lemma"), std::out_of_range);
}

TEST_CASE("scopes and hypotheses decide applicability") {
    const auto b = lemma_suite(two_b());
    CHECK(b.all_passed());
    CHECK(b.at("involution-equivalents").applicable);
    CHECK(b.at("symmetric-exchange").applicable);
    CHECK_FALSE(b.at("prime-distributes").applicable);
    CHECK_FALSE(b.at("idempotent-prime-fixed").applicable);
    CHECK(b.at("a12-consequences").applicable);
    CHECK_FALSE(b.at("a23-consequences").applicable);

    const auto s = lemma_suite(two_s());
    CHECK(s.all_passed());
    CHECK(s.at("idempotent-prime-fixed").applicable);
    CHECK(s.at("a23-consequences").applicable);

    const Zroupoid not_implication(2, {1, 0, 0, 1});
    const auto n = lemma_suite(not_implication);
    CHECK(n.all_passed());
    for (const auto& c : n.checks) CHECK_FALSE(c.applicable);
}

TEST_CASE("every implication zroupoid up to size 3 passes every lemma") {
    std::size_t algebras = 0;
    std::size_t involutive = 0;
    std::size_t applicable = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        SearchSpec spec;
        spec.size = n;
        spec.required = implication_axioms();
        for (const auto& alg : enumerate(spec)) {
            ++algebras;
            involutive += classify(alg).involutive;
            const auto report = lemma_suite(alg);
            for (const auto& c : report.checks) {
                INFO(c.name);
                CHECK(c.passed);
                applicable += c.applicable;
            }
        }
    }
    CHECK(algebras == 35);
    CHECK(involutive > 0);
    CHECK(involutive < algebras);
    CHECK(applicable > algebras);
}

TEST_CASE("symmetric models of size 4 pass every lemma") {
    for (const auto& alg : models_of(variety("S"), 4)) {
        const auto report = lemma_suite(alg);
        CHECK(report.all_passed());
        CHECK(report.at("symmetric-exchange").applicable);
    }
}

TEST_CASE("the equivalence lemma stays silent outside implication zroupoids") {
    const Zroupoid loose(2, {1, 0, 0, 1});
    const auto report = lemma_suite(loose);
    CHECK_FALSE(classify(loose).implication_zroupoid);
    CHECK_FALSE(report.at("involution-equivalents").applicable);
}
