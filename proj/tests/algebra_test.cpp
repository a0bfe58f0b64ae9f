#include <doctest.h>

#include <set>

#include "zlab/bol_moufang.hpp"
#include "zlab/canonical.hpp"
#include "zlab/classify.hpp"
#include "zlab/evaluate.hpp"
#include "zlab/zroupoid.hpp"

using namespace zlab;

namespace {

const Zroupoid four = Zroupoid::from_rows({{0, 1, 2, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {3, 3, 3, 3}});
const Zroupoid three = Zroupoid::from_rows({{2, 2, 2}, {1, 1, 2}, {0, 1, 2}});

Assignment xyz(Element x, Element y, Element z) { return Assignment{{{'x', x}, {'y', y}, {'z', z}}}; }

}  // namespace

TEST_CASE("tables validate their input") {
    CHECK_THROWS_AS(Zroupoid(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Zroupoid(2, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Zroupoid(2, {0, 1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Zroupoid::from_rows({{0, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(Zroupoid(17, std::vector<Element>(17 * 17, 0)), std::invalid_argument);

    CHECK(two_b().rows() == std::vector<std::vector<int>>{{1, 1}, {0, 1}});
    CHECK(two_s().rows() == std::vector<std::vector<int>>{{0, 1}, {1, 1}});
    CHECK(two_b().prime(1) == 0);
    CHECK(Zroupoid::trivial().size() == 1);
    CHECK(Zroupoid::trivial() < two_s());
    CHECK(two_s() < two_b());
}

TEST_CASE("evaluation") {
    const Term t = parse_term("(x -> y) -> z");
    CHECK(eval_term(two_b(), t, xyz(1, 0, 0)) == 1);
    CHECK(eval_term(two_b(), t, xyz(1, 1, 0)) == 0);
    CHECK(eval_term(four, parse_term("x'"), xyz(1, 0, 0)) == 2);
    CHECK(eval_term(four, parse_term("x ^ y"), xyz(1, 2, 0)) == 3);
    CHECK_THROWS_AS(eval_term(two_b(), t, Assignment{{{'x', 0}}}), UnboundVariable);

    const CompiledTerm compiled(t, std::vector<char>{'x', 'y', 'z'});
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y)
            for (Element z = 0; z < 4; ++z) {
                const Element values[] = {x, y, z};
                CHECK(compiled.eval(four.cells(), 4, values) == eval_term(four, t, xyz(x, y, z)));
            }

    std::vector<Element> partial(four.cells().begin(), four.cells().end());
    partial[1 * 4 + 0] = undecided;
    const Element values[] = {1, 0, 0};
    CHECK(compiled.eval_partial(partial, 4, values) == undecided);
    const Element decided[] = {0, 0, 0};
    CHECK(compiled.eval_partial(partial, 4, decided) == four(0, 0));
}

TEST_CASE("satisfaction reports the first counterexample") {
    const auto c = satisfies(two_b(), axiom("C").front());
    CHECK_FALSE(c.holds);
    REQUIRE(c.witness);
    CHECK(c.witness->assignment == Assignment{{{'x', 0}, {'y', 1}}});
    CHECK(c.witness->lhs == 1);
    CHECK(c.witness->rhs == 0);
    CHECK(c.failures.empty());

    const auto all = satisfies(two_b(), axiom("C").front(), FailureReport::all);
    CHECK(all.failures.size() == 2);
    CHECK(all.failures[1].assignment == Assignment{{{'x', 1}, {'y', 0}}});

    CHECK(satisfies(two_s(), axiom("C").front()).holds);
    CHECK_FALSE(satisfies(two_s(), axiom("C").front()).witness);
    CHECK(satisfies(Zroupoid::trivial(), axiom("I").front()).holds);
    CHECK(satisfies(two_b(), axiom("I0").front()).holds);

    const CompiledIdentity f25(bol_moufang_catalog().at("F25"));
    CHECK_FALSE(holds(three, f25));
    CHECK(holds(four, f25));
}

TEST_CASE("the two-element algebras") {
    const auto s = classify(two_s());
    CHECK(s.symmetric);
    CHECK(s.semilattice);
    CHECK_FALSE(s.de_morgan);
    CHECK_FALSE(s.boolean);

    const auto b = classify(two_b());
    CHECK(b.symmetric);
    CHECK(b.de_morgan);
    CHECK(b.kleene);
    CHECK(b.boolean);
    CHECK_FALSE(b.semilattice);
    CHECK_FALSE(b.c);
    CHECK_FALSE(b.i10);

    const auto t = classify(Zroupoid::trivial());
    CHECK(t.symmetric);
    CHECK(t.semilattice);
    CHECK(t.boolean);
}

TEST_CASE("published separating tables") {
    const auto f = classify(four);
    CHECK(f.symmetric);
    CHECK_FALSE(f.i10);
    CHECK_FALSE(f.semilattice);
    CHECK(satisfies(four, bol_moufang_catalog().at("A23")).holds);
    CHECK_FALSE(satisfies(four, bol_moufang_catalog().at("A12")).holds);

    const auto t = classify(three);
    CHECK(t.symmetric);
    CHECK_FALSE(satisfies(three, bol_moufang_catalog().at("F25")).holds);
}

TEST_CASE("not every table is an implication zroupoid") {
    CHECK(classify(Zroupoid(2, {0, 0, 0, 0})).implication_zroupoid);

    const Zroupoid swap(2, {1, 0, 0, 1});
    const auto r = classify(swap);
    CHECK(r.i0);
    CHECK_FALSE(r.i);
    CHECK_FALSE(r.implication_zroupoid);
    CHECK_FALSE(r.symmetric);
}

TEST_CASE("canonical form") {
    CHECK(canonicalize(Zroupoid::trivial()) == Zroupoid::trivial());
    CHECK(canonicalize(two_b()) == two_b());
    CHECK(is_canonical(two_b()));
    CHECK(orbit_size(two_b()) == 1);

    const std::vector<Element> swap12{0, 2, 1};
    const Zroupoid swapped = relabel(three, swap12);
    CHECK(swapped.rows() == std::vector<std::vector<int>>{{1, 1, 1}, {0, 1, 2}, {2, 1, 2}});
    CHECK(canonicalize(swapped) == canonicalize(three));
    CHECK(relabel(swapped, swap12) == three);
    CHECK(orbit_size(three) == 2);
    CHECK(is_canonical(canonicalize(three)));
    CHECK(canonicalize(three) == std::min(three, swapped));

    const Zroupoid c4 = canonicalize(four);
    CHECK_FALSE(c4 < canonicalize(relabel(four, {0, 3, 1, 2})));
    CHECK(c4 == canonicalize(relabel(four, {0, 3, 1, 2})));
    std::set<std::vector<std::vector<int>>> orbit;
    std::vector<Element> perm{0, 1, 2, 3};
    do orbit.insert(relabel(four, perm).rows());
    while (std::next_permutation(perm.begin() + 1, perm.end()));
    CHECK(orbit.size() == orbit_size(four));
}
