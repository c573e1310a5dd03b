// A-infinity categories as finite data: objects, graded hom spaces, sparse
// higher-product tables, and the defining-identity checker.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ainfk/field.hpp"
#include "ainfk/graded.hpp"

namespace ainfk {

// Interned basis symbol of some hom space.
struct SymInfo {
    int src = 0;  // source object index (domain of the morphism)
    int tgt = 0;  // target object index
    int deg = 0;
    int idx = 0;  // index within hom(src,tgt) at this degree
};

using Word = std::vector<int>;          // composable symbol ids, composition order
using Elem = std::map<int, Scalar>;     // sparse combination of symbol ids (homogeneous)

struct ArityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AInfStructure {
    Field field;
    std::vector<std::string> objects;
    std::map<std::pair<int, int>, GradedSpace> hom;  // (src,tgt) -> graded space
    int arity_bound = 2;                             // N_max

    // interned symbols, ordered by (src,tgt,deg,label-order)
    std::vector<SymInfo> syms;
    // products[n] : tuples of length n -> sparse output element (only nonzero stored)
    std::map<int, std::map<Word, Elem>> products;

    void intern_symbols();  // call after hom spaces are final

    int object_index(const std::string& name) const;
    int sym_id(int src, int tgt, int deg, int idx) const;
    int sym_id(int src, int tgt, int deg, const std::string& label) const;
    const SymInfo& info(int id) const { return syms.at(id); }
    const std::string& label(int id) const {
        const SymInfo& s = syms.at(id);
        return hom.at({s.src, s.tgt}).label(s.deg, s.idx);
    }

    bool composable(const Word& w) const;
    // output (src,tgt,degree) of an arity-n product on a composable word
    std::tuple<int, int, int> output_slot(const Word& w) const;

    const Elem* product(const Word& w) const;  // nullptr when not stored (zero)
    void set_product(const Word& w, Elem value);

    const GradedSpace& space_of(int sym) const {
        const SymInfo& s = syms.at(sym);
        return hom.at({s.src, s.tgt});
    }

private:
    std::map<std::tuple<int, int, int, int>, int> sym_lookup_;
};

// Enumerate composable basis words of the given length; optional filters.
struct WordFilter {
    std::function<bool(const AInfStructure&, int sym)> letter;  // per-letter admission
    std::optional<std::pair<int, int>> out_degree_window;       // inclusive window on output degree
};
void for_each_word(const AInfStructure& S, int length, const WordFilter& filter,
                   const std::function<void(const Word&)>& fn);

// One nonzero A-infinity constraint (or functor-equation) residual.
struct Residual {
    int arity = 0;
    Word tuple;
    Elem value;
};
using Report = std::vector<Residual>;

// The §1.1 constraint, checked directly from the displayed formula with
// the Koszul epsilon of moving m_l past the leading arguments.
Report check_ainf(const AInfStructure& S, int up_to_arity);

// Residual of the constraint on one tuple (empty = holds there).
Elem ainf_residual(const AInfStructure& S, const Word& w);

AInfStructure opposite(const AInfStructure& S);

// Two-object pair view (A = Hom(Y,Y), M = Hom(X,Y)).
struct AInfPair {
    AInfStructure cat;  // objects: [Y, X]; hom(Y,X) = hom(X,X) = 0
    static constexpr int Y = 0;
    static constexpr int X = 1;
    const GradedSpace& algebra() const { return cat.hom.at({Y, Y}); }
    const GradedSpace& module() const { return cat.hom.at({X, Y}); }
};

AInfPair representable_pair(const AInfStructure& S, int obj_O, int obj_X);

}  // namespace ainfk
