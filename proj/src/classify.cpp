#include "zlab/classify.hpp"

#include "zlab/bol_moufang.hpp"
#include "zlab/evaluate.hpp"

namespace zlab {

namespace {

struct CompiledAxioms {
    CompiledIdentity i{axiom("I").front()};
    CompiledIdentity mc{axiom("MC").front()};
    CompiledIdentity c{axiom("C").front()};
    CompiledIdentity dm{axiom("DM").front()};
    CompiledIdentity kl{axiom("KL").front()};
    CompiledIdentity ba{axiom("BA").front()};
};

const CompiledAxioms& compiled() {
    static const CompiledAxioms axioms;
    return axioms;
}

}  // namespace

ClassReport classify(const Zroupoid& alg) {
    const auto& ax = compiled();
    const std::size_t n = alg.size();
    ClassReport r;

    r.i0 = alg.prime(alg.prime(0)) == 0;
    r.i20 = true;
    r.i10 = true;
    for (std::size_t a = 0; a < n; ++a) {
        const auto e = static_cast<Element>(a);
        r.i20 = r.i20 && alg.prime(alg.prime(e)) == e;
        r.i10 = r.i10 && alg.prime(e) == e;
    }
    r.i = holds(alg, ax.i);
    r.mc = holds(alg, ax.mc);
    r.c = holds(alg, ax.c);
    r.dm = holds(alg, ax.dm);
    r.kl = holds(alg, ax.kl);
    r.ba = holds(alg, ax.ba);

    r.implication_zroupoid = r.i && r.i0;
    r.involutive = r.implication_zroupoid && r.i20;
    r.meet_commutative = r.implication_zroupoid && r.mc;
    r.symmetric = r.involutive && r.meet_commutative;
    r.semilattice = r.implication_zroupoid && r.c && r.i10;
    r.de_morgan = r.implication_zroupoid && r.dm;
    r.kleene = r.de_morgan && r.kl;
    r.boolean = r.de_morgan && r.ba;
    return r;
}

}  // namespace zlab
