#pragma once

#include "zlab/zroupoid.hpp"

namespace zlab {

/// Which defining identities hold, and the class memberships they imply.
/// Every class below is a subclass of the implication zroupoids; BA and KL
/// are additionally subclasses of DM.
struct ClassReport {
    // Identity-level truth values.
    bool i0 = false;   // 0'' = 0
    bool i = false;    // (x -> y) -> z = ((z' -> x) -> (y -> z)')'
    bool i20 = false;  // x'' = x
    bool mc = false;   // x ^ y = y ^ x
    bool c = false;    // x -> y = y -> x
    bool i10 = false;  // x' = x
    bool dm = false;   // (x -> y) -> x = x
    bool kl = false;   // (x -> x) -> (y -> y) = y -> y
    bool ba = false;   // x -> x = 0'

    // Class memberships.
    bool implication_zroupoid = false;
    bool involutive = false;
    bool meet_commutative = false;
    bool symmetric = false;
    bool semilattice = false;
    bool de_morgan = false;
    bool kleene = false;
    bool boolean = false;
};

ClassReport classify(const Zroupoid& alg);

}  // namespace zlab
