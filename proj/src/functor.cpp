#include "ainfk/functor.hpp"

namespace ainfk {

namespace {

void prune_zero(const Field& F, Elem& e) {
    for (auto it = e.begin(); it != e.end();) {
        if (F.is_zero(it->second))
            it = e.erase(it);
        else {
            it->second = F.norm(it->second);
            ++it;
        }
    }
}

// validate a component entry: slot objects through the object map, degree shift
void validate_comp(const AInfStructure& S, const AInfStructure& T,
                   const std::vector<int>& object_map, const Word& w, const Elem& value,
                   int shift_per_arity /* 1-n => 1, -n => 0 */) {
    if (!S.composable(w)) throw std::invalid_argument("component tuple not composable");
    int n = static_cast<int>(w.size());
    int deg = shift_per_arity - n;
    for (int s : w) deg += S.syms[s].deg;
    int osrc = object_map.at(S.syms[w.back()].src);
    int otgt = object_map.at(S.syms[w.front()].tgt);
    for (auto& [s, c] : value) {
        const SymInfo& si = T.syms.at(s);
        if (si.src != osrc || si.tgt != otgt || si.deg != deg)
            throw std::invalid_argument("component value outside its slot/degree");
    }
}

std::vector<int> identity_object_map(const AInfStructure& S) {
    std::vector<int> m(S.objects.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
    return m;
}

}  // namespace

void AInfFunctor::set_comp(const Word& w, Elem value) {
    prune_zero(src->field, value);
    if (value.empty()) {
        auto it = comps.find(static_cast<int>(w.size()));
        if (it != comps.end()) it->second.erase(w);
        return;
    }
    validate_comp(*src, *tgt, object_map, w, value, 1);
    comps[static_cast<int>(w.size())][w] = std::move(value);
}

void HomotopyData::set_comp(const Word& w, Elem value) {
    prune_zero(base->field, value);
    if (static_cast<int>(w.size()) < 2)
        throw std::invalid_argument("homotopy components start at arity 2");
    if (value.empty()) {
        auto it = comps.find(static_cast<int>(w.size()));
        if (it != comps.end()) it->second.erase(w);
        return;
    }
    validate_comp(*base, *base, identity_object_map(*base), w, value, 1);
    comps[static_cast<int>(w.size())][w] = std::move(value);
}

AInfFunctor identity_functor(const AInfStructure& S) {
    AInfFunctor F;
    F.src = &S;
    F.tgt = &S;
    F.object_map = identity_object_map(S);
    for (int s = 0; s < static_cast<int>(S.syms.size()); ++s)
        F.comps[1][Word{s}] = Elem{{s, S.field.one()}};
    return F;
}

BarMorphismView functor_view(const AInfFunctor& F) {
    BarMorphismView v;
    v.src = F.src;
    v.tgt = F.tgt;
    const AInfStructure* S = F.src;
    const auto* comps = &F.comps;
    v.cogen = [S, comps](const Word& w) { return susp_apply(*S, *comps, w); };
    return v;
}

BarMorphismView homotopy_view(const AInfStructure& S,
                              const std::map<int, std::map<Word, Elem>>& comps) {
    BarMorphismView v;
    v.src = &S;
    v.tgt = &S;
    const AInfStructure* sp = &S;
    const auto* cp = &comps;
    v.cogen = [sp, cp](const Word& w) -> Elem {
        if (w.size() == 1) return Elem{{w[0], sp->field.one()}};
        return susp_apply(*sp, *cp, w);
    };
    return v;
}

Report check_functor(const AInfFunctor& F, int up_to_arity) {
    const AInfStructure& S = *F.src;
    const AInfStructure& T = *F.tgt;
    if (static_cast<int>(F.object_map.size()) != static_cast<int>(S.objects.size()))
        throw ObjectMapMismatch("object map size mismatch");
    for (int o : F.object_map)
        if (o < 0 || o >= static_cast<int>(T.objects.size()))
            throw ObjectMapMismatch("object map image out of range");
    int bound = up_to_arity > 0 ? up_to_arity : std::min(S.arity_bound, T.arity_bound);
    BarMorphismView fv = functor_view(F);
    Report rep;
    for (int n = 1; n <= bound; ++n) {
        for_each_word(S, n, WordFilter{}, [&](const Word& w) {
            // pi_1(F(b_src(w)))
            BarElem bw = bar_d(S, BarElem{{w, S.field.one()}});
            Elem lhs = bar_pi1(bw, S.field, fv.cogen);
            // pi_1(b_tgt(F(w)))
            BarElem fw = bar_apply_morphism(fv, w);
            Elem rhs = bar_pi1(fw, T.field, [&](const Word& u) { return bar_cogen(T, u); });
            Elem r = lhs;
            elem_axpy_sparse(T.field, r, T.field.neg(T.field.one()), rhs);
            if (!r.empty()) rep.push_back(Residual{n, w, std::move(r)});
        });
    }
    return rep;
}

AInfFunctor compose_functors(const AInfFunctor& G, const AInfFunctor& F) {
    if (F.tgt != G.src) throw StructureMismatch("compose_functors: F.tgt != G.src");
    AInfFunctor H;
    H.src = F.src;
    H.tgt = G.tgt;
    H.object_map.resize(F.object_map.size());
    for (size_t i = 0; i < F.object_map.size(); ++i)
        H.object_map[i] = G.object_map.at(F.object_map[i]);
    const AInfStructure& S = *F.src;
    BarMorphismView fv = functor_view(F);
    BarMorphismView gv = functor_view(G);
    int bound = std::min(S.arity_bound, std::min(F.tgt->arity_bound, G.tgt->arity_bound));
    for (int n = 1; n <= bound; ++n) {
        for_each_word(S, n, WordFilter{}, [&](const Word& w) {
            BarElem fw = bar_apply_morphism(fv, w);
            Elem img = bar_pi1(fw, S.field, gv.cogen);
            if (img.empty()) return;
            // unsuspend: components are stored unsuspended
            if (susp_sign_exp(S, w) % 2 != 0)
                for (auto& [s, c] : img) c = S.field.neg(c);
            H.comps[n][w] = std::move(img);
        });
    }
    return H;
}

namespace {

// suspended inverse components of a homotopy (unipotent coalgebra morphism)
std::map<int, std::map<Word, Elem>> suspended_inverse(const AInfStructure& S,
                                                      const HomotopyData& F) {
    const Field& K = S.field;
    std::map<int, std::map<Word, Elem>> ginv;  // suspended tables, n >= 2
    BarMorphismView fv = homotopy_view(S, F.comps);
    for (int n = 2; n <= S.arity_bound; ++n) {
        BarMorphismView gv = homotopy_view(S, ginv);  // known components < n suffice
        // NOTE: ginv is captured by reference inside homotopy_view, so the
        // growing table is visible as we fill arity n.
        std::map<Word, Elem> stage;
        for_each_word(S, n, WordFilter{}, [&](const Word& w) {
            // 0 = sum over compositions of F-hat applied to G-blocks; isolate G_n
            BarElem gw = bar_apply_morphism(gv, w);  // G with G_n still absent
            Elem acc = bar_pi1(gw, K, fv.cogen);
            // the missing term is F_1(G_n(w)) = G_n(w); solve G_n(w) = -acc,
            // but acc currently contains the full sum with G_n treated as 0,
            // including F_hat_n(w) from the all-singletons composite.
            if (acc.empty()) return;
            Elem val;
            for (auto& [s, c] : acc) val[s] = K.neg(c);
            stage[w] = std::move(val);
        });
        // suspended table entry (stored suspended: un-sign susp_apply convention)
        // susp_apply applies the dictionary sign to stored-unsuspended tables;
        // here we computed the suspended value directly, so store it de-signed.
        for (auto& [w, val] : stage) {
            Elem raw = val;
            if (susp_sign_exp(S, w) % 2 != 0)
                for (auto& [s, c] : raw) c = K.neg(c);
            ginv[n][w] = std::move(raw);
        }
    }
    return ginv;
}

}  // namespace

AInfStructure apply_homotopy(const AInfStructure& S, const HomotopyData& F) {
    if (S.products.count(1) && !S.products.at(1).empty())
        throw NotMinimal("apply_homotopy requires a minimal structure");
    const Field& K = S.field;
    auto ginv = suspended_inverse(S, F);

    AInfStructure T;
    T.field = S.field;
    T.objects = S.objects;
    T.hom = S.hom;
    T.arity_bound = S.arity_bound;
    T.intern_symbols();  // same symbol ids as S (same hom data)

    BarMorphismView fv = homotopy_view(S, F.comps);
    BarMorphismView gv = homotopy_view(S, ginv);

    for (int n = 2; n <= S.arity_bound; ++n) {
        for_each_word(S, n, WordFilter{}, [&](const Word& w) {
            BarElem gw = bar_apply_morphism(gv, w);
            BarElem bgw = bar_d(S, gw);
            Elem val = bar_pi1(bgw, K, fv.cogen);
            if (val.empty()) return;
            if (susp_sign_exp(S, w) % 2 != 0)
                for (auto& [s, c] : val) c = K.neg(c);
            T.set_product(w, std::move(val));
        });
    }
    return T;
}

HomotopyData homotopy_inverse(const AInfStructure& S, const HomotopyData& F) {
    HomotopyData G;
    G.base = &S;
    G.comps = suspended_inverse(S, F);
    return G;
}

HomotopyData compose_homotopies(const AInfStructure& S, const HomotopyData& G,
                                const HomotopyData& F) {
    const Field& K = S.field;
    HomotopyData H;
    H.base = &S;
    BarMorphismView fv = homotopy_view(S, F.comps);
    BarMorphismView gv = homotopy_view(S, G.comps);
    for (int n = 2; n <= S.arity_bound; ++n) {
        for_each_word(S, n, WordFilter{}, [&](const Word& w) {
            BarElem fw = bar_apply_morphism(fv, w);
            Elem img = bar_pi1(fw, K, gv.cogen);
            if (img.empty()) return;
            if (susp_sign_exp(S, w) % 2 != 0)
                for (auto& [s, c] : img) c = K.neg(c);
            H.comps[n][w] = std::move(img);
        });
    }
    return H;
}

AInfFunctor homotopy_as_functor(const AInfStructure& S, const AInfStructure& S_target,
                                const HomotopyData& F) {
    AInfFunctor out;
    out.src = &S;
    out.tgt = &S_target;
    out.object_map = identity_object_map(S);
    for (int s = 0; s < static_cast<int>(S.syms.size()); ++s)
        out.comps[1][Word{s}] = Elem{{s, S.field.one()}};
    for (auto& [n, table] : F.comps) out.comps[n] = table;
    return out;
}

BarElem morphism_homotopy_extend(const MorphismHomotopy& H, const AInfFunctor& f,
                                 const AInfFunctor& g, const Word& w) {
    const AInfStructure& S = *H.src;
    const Field& K = S.field;
    BarMorphismView fv = functor_view(f);
    BarMorphismView gv = functor_view(g);
    BarElem out;
    const int n = static_cast<int>(w.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            Word mid(w.begin() + a, w.begin() + a + (b - a));
            Elem hmid = susp_apply(S, H.comps, mid);
            if (hmid.empty()) continue;
            Word prefix(w.begin(), w.begin() + a);
            Word suffix(w.begin() + b, w.end());
            int sgn_exp = word_susp_deg(S, prefix);
            // F(prefix) (x) h(mid) (x) G(suffix)
            BarElem fparts = prefix.empty() ? BarElem{{Word{}, K.one()}}
                                            : bar_apply_morphism(fv, prefix);
            BarElem gparts = suffix.empty() ? BarElem{{Word{}, K.one()}}
                                            : bar_apply_morphism(gv, suffix);
            for (auto& [fw, fc] : fparts) {
                for (auto& [u, cu] : hmid) {
                    for (auto& [gw, gc] : gparts) {
                        Word word = fw;
                        word.push_back(u);
                        word.insert(word.end(), gw.begin(), gw.end());
                        Scalar c = K.mul(K.mul(fc, cu), gc);
                        if (sgn_exp % 2 != 0) c = K.neg(c);
                        barelem_axpy(K, out, c, word);
                    }
                }
            }
        }
    }
    return out;
}

bool check_morphism_homotopy(const MorphismHomotopy& H, const AInfFunctor& f,
                             const AInfFunctor& g, int max_word_len) {
    const AInfStructure& S = *f.src;
    const AInfStructure& T = *f.tgt;
    const Field& K = S.field;
    BarMorphismView fv = functor_view(f);
    BarMorphismView gv = functor_view(g);
    auto hhat = [&](const Word& u) { return susp_apply(S, H.comps, u); };
    bool ok = true;
    for (int n = 1; n <= max_word_len && ok; ++n) {
        for_each_word(S, n, WordFilter{}, [&](const Word& w) {
            if (!ok) return;
            Elem res = bar_pi1(BarElem{{w, K.one()}}, K, fv.cogen);  // F-hat(w)
            Elem gval = bar_pi1(BarElem{{w, K.one()}}, K, gv.cogen);
            elem_axpy_sparse(K, res, K.neg(K.one()), gval);
            // - pi_1(b_tgt(H(w)))
            BarElem hw = morphism_homotopy_extend(H, f, g, w);
            Elem bh = bar_pi1(hw, K, [&](const Word& u) { return bar_cogen(T, u); });
            elem_axpy_sparse(K, res, K.neg(K.one()), bh);
            // - pi_1(H-hat(b_src(w)))
            BarElem bw = bar_d(S, BarElem{{w, K.one()}});
            Elem hb = bar_pi1(bw, K, hhat);
            elem_axpy_sparse(K, res, K.neg(K.one()), hb);
            if (!res.empty()) ok = false;
        });
    }
    return ok;
}

}  // namespace ainfk
