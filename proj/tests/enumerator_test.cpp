#include <doctest.h>

#include <cstdlib>

#include "support/naive_oracle.hpp"
#include "zlab/bol_moufang.hpp"
#include "zlab/canonical.hpp"
#include "zlab/enumerator.hpp"
#include "zlab/evaluate.hpp"
#include "zlab/variety.hpp"

using namespace zlab;

namespace {

std::vector<Identity> axioms(std::initializer_list<const char*> names) {
    std::vector<Identity> out;
    for (auto name : names)
        for (auto& id : axiom(name)) out.push_back(std::move(id));
    return out;
}

SearchSpec spec_for(std::size_t n, std::vector<Identity> required, Dedup dedup, unsigned threads = 1) {
    SearchSpec spec;
    spec.size = n;
    spec.required = std::move(required);
    spec.dedup = dedup;
    spec.threads = threads;
    return spec;
}

}  // namespace

TEST_CASE("size one has only the trivial algebra") {
    const auto models = enumerate(spec_for(1, axioms({"I", "I0"}), Dedup::none));
    REQUIRE(models.size() == 1);
    CHECK(models.front() == Zroupoid::trivial());
}

TEST_CASE("pruned search equals the naive filter") {
    for (auto names : {std::initializer_list<const char*>{"I", "I0"}, {"I", "I0", "I20", "MC"}}) {
        const auto ids = axioms(names);
        for (int n = 1; n <= 3; ++n)
            for (bool iso : {false, true}) {
                CAPTURE(ids.size());
                CAPTURE(n);
                CAPTURE(iso);
                const auto fast = enumerate(spec_for(static_cast<std::size_t>(n), ids, iso ? Dedup::up_to_iso : Dedup::none));
                CHECK(fast == oracle::models(n, ids, iso));
            }
    }
}

TEST_CASE("golden counts, computed by the naive oracle") {
    struct Row {
        std::size_t n, raw, iso;
    };
    for (auto [n, raw, iso] : {Row{1, 1, 1}, Row{2, 3, 3}, Row{3, 31, 17}}) {
        CAPTURE(n);
        CHECK(enumerate(spec_for(n, axioms({"I", "I0"}), Dedup::none)).size() == raw);
        CHECK(enumerate(spec_for(n, axioms({"I", "I0"}), Dedup::up_to_iso)).size() == iso);
    }
    for (auto [n, raw, iso] : {Row{1, 1, 1}, Row{2, 2, 2}, Row{3, 6, 3}}) {
        CAPTURE(n);
        CHECK(enumerate(spec_for(n, symmetric_base(), Dedup::none)).size() == raw);
        CHECK(enumerate(spec_for(n, symmetric_base(), Dedup::up_to_iso)).size() == iso);
    }
    CHECK(enumerate(spec_for(4, symmetric_base(), Dedup::up_to_iso)).size() == 9);
}

TEST_CASE("symmetric models of size two are exactly 2_s and 2_b") {
    const auto models = enumerate(spec_for(2, symmetric_base(), Dedup::up_to_iso));
    CHECK(models == std::vector<Zroupoid>{two_s(), two_b()});
}

TEST_CASE("raw counts are orbit sums of the representatives") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const auto reps = enumerate(spec_for(n, symmetric_base(), Dedup::up_to_iso));
        const auto raw = enumerate(spec_for(n, symmetric_base(), Dedup::none));
        std::size_t sum = 0;
        for (const auto& r : reps) {
            CHECK(is_canonical(r));
            sum += orbit_size(r);
        }
        CHECK(sum == raw.size());
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(canonicalize(reps[i]) == canonicalize(reps[j]));
    }
}

TEST_CASE("every emitted algebra satisfies every required identity") {
    std::vector<Identity> ids = symmetric_base();
    ids.push_back(bol_moufang_catalog().at("F25"));
    for (const auto& alg : enumerate(spec_for(4, ids, Dedup::none)))
        for (const auto& id : ids) CHECK(satisfies(alg, id).holds);
}

TEST_CASE("output is lexicographic and independent of the worker count") {
    const auto one = enumerate(spec_for(4, symmetric_base(), Dedup::none, 1));
    CHECK(std::is_sorted(one.begin(), one.end()));
    for (unsigned threads : {2u, 3u, 8u}) {
        CAPTURE(threads);
        SearchStats stats;
        CHECK(enumerate(spec_for(4, symmetric_base(), Dedup::none, threads), &stats) == one);
        CHECK(stats.partitions > 1);
        CHECK(enumerate(spec_for(4, symmetric_base(), Dedup::up_to_iso, threads)) ==
              enumerate(spec_for(4, symmetric_base(), Dedup::up_to_iso, 1)));
    }
}

TEST_CASE("limit keeps the lexicographic prefix") {
    const auto all = enumerate(spec_for(3, axioms({"I", "I0"}), Dedup::none));
    for (unsigned threads : {1u, 4u}) {
        auto spec = spec_for(3, axioms({"I", "I0"}), Dedup::none, threads);
        spec.limit = 5;
        const auto some = enumerate(spec);
        CHECK(some == std::vector<Zroupoid>(all.begin(), all.begin() + 5));
    }
    auto spec = spec_for(3, axioms({"I", "I0"}), Dedup::none);
    spec.limit = 0;
    CHECK(enumerate(spec).empty());
}

TEST_CASE("no required identities means every table") {
    CHECK(enumerate(spec_for(2, {}, Dedup::none)).size() == 16);
    CHECK(enumerate(spec_for(2, {}, Dedup::up_to_iso)).size() == 16);
}

TEST_CASE("unsatisfiable requirements give an empty result") {
    CHECK(enumerate(spec_for(2, {parse_identity("T", "x = 0")}, Dedup::none)).empty());
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(enumerate(spec_for(0, symmetric_base(), Dedup::none)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate(spec_for(7, symmetric_base(), Dedup::none)), std::invalid_argument);
    auto big = spec_for(17, symmetric_base(), Dedup::none);
    big.allow_large = true;
    CHECK_THROWS_AS(enumerate(big), std::invalid_argument);
}

TEST_CASE("thread resolution") {
    CHECK(resolve_threads(3) == 3);
    ::setenv("ZLAB_THREADS", "5", 1);
    CHECK(resolve_threads(0) == 5);
    CHECK(resolve_threads(2) == 2);
    ::setenv("ZLAB_THREADS", "junk", 1);
    CHECK(resolve_threads(0) >= 1);
    ::unsetenv("ZLAB_THREADS");
    CHECK(resolve_threads(0) >= 1);
}
