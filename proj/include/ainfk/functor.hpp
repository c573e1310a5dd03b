// A-infinity functors, homotopies between minimal structures, the group
// action m -> m + delta(F) by bar conjugation, and morphism homotopies.
#pragma once

#include "ainfk/bar.hpp"

namespace ainfk {

struct StructureMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ObjectMapMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotMinimal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AInfFunctor {
    const AInfStructure* src = nullptr;
    const AInfStructure* tgt = nullptr;
    std::vector<int> object_map;                   // src object index -> tgt object index
    std::map<int, std::map<Word, Elem>> comps;     // n >= 1, degree 1-n; sparse

    void set_comp(const Word& w, Elem value);      // validates slot/degree
};

AInfFunctor identity_functor(const AInfStructure& S);

// Homotopy data over a minimal structure: components n >= 2 of degree 1-n,
// F_1 implicitly the identity.
struct HomotopyData {
    const AInfStructure* base = nullptr;
    std::map<int, std::map<Word, Elem>> comps;

    void set_comp(const Word& w, Elem value);
};

// Suspended cogenerated views for the bar engine.
BarMorphismView functor_view(const AInfFunctor& F);
BarMorphismView homotopy_view(const AInfStructure& S, const std::map<int, std::map<Word, Elem>>& comps);

// Functor-equation residuals pi_1(F b - b' F) on basis words, arity <= bound.
Report check_functor(const AInfFunctor& F, int up_to_arity = -1);

AInfFunctor compose_functors(const AInfFunctor& G, const AInfFunctor& F);

// m' = m + delta(F) via b' = F_bar b F_bar^{-1}; requires m minimal.
AInfStructure apply_homotopy(const AInfStructure& S, const HomotopyData& F);

// Group inverse of a homotopy (solve F o G = id arity by arity).
HomotopyData homotopy_inverse(const AInfStructure& S, const HomotopyData& F);

// Composition of two homotopies (components of G_bar o F_bar).
HomotopyData compose_homotopies(const AInfStructure& S, const HomotopyData& G,
                                const HomotopyData& F);

// The homotopy as an A-infinity functor (S, m) -> (S, m + delta(F)).
AInfFunctor homotopy_as_functor(const AInfStructure& S, const AInfStructure& S_target,
                                const HomotopyData& F);

// Homotopy between closed morphisms f, g : components h_n of degree -n,
// extended by the (F,G)-co-Leibniz rule.
struct MorphismHomotopy {
    const AInfStructure* src = nullptr;
    const AInfStructure* tgt = nullptr;
    std::vector<int> object_map;
    std::map<int, std::map<Word, Elem>> comps;  // n >= 1, degree -n
};

// The (F,G)-coderivation extension of H applied to a word.
BarElem morphism_homotopy_extend(const MorphismHomotopy& H, const AInfFunctor& f,
                                 const AInfFunctor& g, const Word& w);

// true iff F - G = b H + H b holds on cogenerated components for all basis
// words of length <= max_word_len (the co-Leibniz identity holds by the
// extension used on both sides).
bool check_morphism_homotopy(const MorphismHomotopy& H, const AInfFunctor& f,
                             const AInfFunctor& g, int max_word_len);

}  // namespace ainfk
