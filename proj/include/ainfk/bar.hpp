// Truncated bar coalgebra machinery: suspended words, the coderivation b
// packaging all products, and co-Leibniz / coalgebra-morphism evaluation.
// Every sign in the artifact is produced here from one suspension dictionary:
//   b_n(s a_1 ... s a_n) = (-1)^{(n-1)deg a_1 + ... + deg a_{n-1}} s m_n(a_1,...,a_n).
#pragma once

#include <functional>
#include <map>

#include "ainfk/structure.hpp"

namespace ainfk {

using BarElem = std::map<Word, Scalar>;  // sparse combination of composable words

inline int susp_deg(const AInfStructure& S, int sym) { return S.syms[sym].deg - 1; }

inline int word_susp_deg(const AInfStructure& S, const Word& w) {
    int d = 0;
    for (int s : w) d += susp_deg(S, s);
    return d;
}

// Exponent of the suspension dictionary for an n-letter block.
inline long susp_sign_exp(const AInfStructure& S, const Word& w) {
    long e = 0;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n - 1; ++i) e += static_cast<long>(n - 1 - i) * S.syms[w[i]].deg;
    return e;
}

void barelem_axpy(const Field& F, BarElem& acc, const Scalar& c, const Word& w);
void elem_axpy_sparse(const Field& F, Elem& acc, const Scalar& c, const Elem& x);

// Suspended single-block application of a component table (products or
// functor/homotopy components): sign * table[w]. Missing entries are zero.
Elem susp_apply(const AInfStructure& S, const std::map<int, std::map<Word, Elem>>& comps,
                const Word& w);

// Cogenerated bar differential on one word: susp_apply against S.products.
Elem bar_cogen(const AInfStructure& S, const Word& w);

// Full coderivation (co-Leibniz extension) of the product components with
// arities in [lmin, lmax]; never lengthens words.
BarElem bar_d(const AInfStructure& S, const BarElem& x, int lmin = 1, int lmax = -1);

// A coalgebra morphism given by its suspended cogenerated components.
struct BarMorphismView {
    const AInfStructure* src = nullptr;
    const AInfStructure* tgt = nullptr;
    std::function<Elem(const Word&)> cogen;  // suspended component on a block
};

// Block-composition expansion F(w) = sum over compositions of tensor products
// of cogenerated images (components have suspended degree 0, so no Koszul signs).
BarElem bar_apply_morphism(const BarMorphismView& f, const Word& w);
BarElem bar_apply_morphism(const BarMorphismView& f, const BarElem& x);

// pi_1 of a morphism image / of a BarElem through a cogen map.
Elem bar_pi1(const BarElem& x, const Field& F, const std::function<Elem(const Word&)>& cogen);

// check_bar_square: residual pi_1(b(b(word))) per word length <= W.
Report check_bar_square(const AInfStructure& S, int max_word_len);

}  // namespace ainfk
