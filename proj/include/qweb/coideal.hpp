#pragma once

#include "qweb/glrep.hpp"

namespace qweb {

// The two quantized fixed-point subalgebras acting on our module spaces.
// Both are generated inside the big quantum group, so their action on any
// object is obtained by evaluating the defining expressions with the
// object-level Chevalley operators.
enum class Subalgebra { Orth, Symp };

// Twisted generator of the orthogonal subalgebra: B_i = F_i - K_i^-1 E_i,
// defined for i = 1..n-1.
inline SparseMat<RatFunc> orth_B(const ObjectBasis& ob, int i) {
    return act_F(ob, i) - act_K(ob, i, -1) * act_E(ob, i);
}

// Twisted generator of the symplectic subalgebra, for even i in 2..n-2:
//   B_i = F_i - K_i^-1 (E_{i-1}E_{i+1}E_i - q^-1 E_{i-1}E_iE_{i+1}
//                        - q^-1 E_{i+1}E_iE_{i-1} + q^-2 E_iE_{i-1}E_{i+1}).
// The cubic part is the right adjoint action of E_{i-1}E_{i+1} on E_i.
inline SparseMat<RatFunc> symp_B(const ObjectBasis& ob, int i) {
    auto Em = act_E(ob, i - 1), Ep = act_E(ob, i + 1), E = act_E(ob, i);
    RatFunc qi(Laurent::q(-1)), qi2(Laurent::q(-2));
    auto ad = Em * Ep * E - qi * (Em * E * Ep) - qi * (Ep * E * Em) + qi2 * (E * Em * Ep);
    return act_F(ob, i) - act_K(ob, i, -1) * ad;
}

// All generators of the subalgebra action on an object, used for
// equivariance and commutation checks.  For the symplectic case the odd-index
// E/F/K generators pass through unchanged.
struct SubalgebraGen {
    std::string name;
    SparseMat<RatFunc> op;
    // action on the trivial module: K acts by 1, everything else by 0
    RatFunc trivial_scalar;
};

inline std::vector<SubalgebraGen> subalgebra_generators(const ObjectBasis& ob, Subalgebra s) {
    int n = ob.n();
    std::vector<SubalgebraGen> gens;
    if (s == Subalgebra::Orth) {
        for (int i = 1; i <= n - 1; ++i)
            gens.push_back({"B" + std::to_string(i), orth_B(ob, i), RatFunc()});
    } else {
        for (int i = 1; i <= n - 1; i += 2) {
            gens.push_back({"E" + std::to_string(i), act_E(ob, i), RatFunc()});
            gens.push_back({"F" + std::to_string(i), act_F(ob, i), RatFunc()});
            gens.push_back({"K" + std::to_string(i), act_K(ob, i), RatFunc(1)});
        }
        for (int i = 2; i <= n - 2; i += 2)
            gens.push_back({"B" + std::to_string(i), symp_B(ob, i), RatFunc()});
    }
    return gens;
}

// The subalgebra attached to an evaluation (family, flavor) pair:
// cup/cap webs pair with the orthogonal form on exterior-flavor evaluations
// and the symplectic form on symmetric ones; dotted webs the other way round.
inline Subalgebra subalgebra_for(Flavor flavor, bool dotted_family) {
    if (dotted_family) return flavor == Flavor::Ext ? Subalgebra::Symp : Subalgebra::Orth;
    return flavor == Flavor::Ext ? Subalgebra::Orth : Subalgebra::Symp;
}

} // namespace qweb
