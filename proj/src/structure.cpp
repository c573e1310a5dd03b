#include "ainfk/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainfk {

void AInfStructure::intern_symbols() {
    syms.clear();
    sym_lookup_.clear();
    for (auto& [key, space] : hom) {
        for (auto& [deg, labels] : space.degrees) {
            for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
                sym_lookup_[{key.first, key.second, deg, i}] = static_cast<int>(syms.size());
                syms.push_back(SymInfo{key.first, key.second, deg, i});
            }
        }
    }
}

int AInfStructure::object_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(objects.size()); ++i)
        if (objects[i] == name) return i;
    throw std::invalid_argument("unknown object: " + name);
}

int AInfStructure::sym_id(int src, int tgt, int deg, int idx) const {
    auto it = sym_lookup_.find({src, tgt, deg, idx});
    if (it == sym_lookup_.end()) throw std::invalid_argument("unknown basis symbol");
    return it->second;
}

int AInfStructure::sym_id(int src, int tgt, int deg, const std::string& label) const {
    auto it = hom.find({src, tgt});
    if (it == hom.end()) throw std::invalid_argument("unknown hom space");
    int idx = it->second.index_of(deg, label);
    if (idx < 0) throw std::invalid_argument("unknown basis label: " + label);
    return sym_id(src, tgt, deg, idx);
}

bool AInfStructure::composable(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (syms[w[i]].src != syms[w[i + 1]].tgt) return false;
    return !w.empty();
}

std::tuple<int, int, int> AInfStructure::output_slot(const Word& w) const {
    int deg = 2 - static_cast<int>(w.size());
    for (int s : w) deg += syms[s].deg;
    return {syms[w.back()].src, syms[w.front()].tgt, deg};
}

const Elem* AInfStructure::product(const Word& w) const {
    auto nit = products.find(static_cast<int>(w.size()));
    if (nit == products.end()) return nullptr;
    auto it = nit->second.find(w);
    return it == nit->second.end() ? nullptr : &it->second;
}

void AInfStructure::set_product(const Word& w, Elem value) {
    int n = static_cast<int>(w.size());
    if (n < 1 || n > arity_bound) throw ArityExceeded("product arity outside 1..N_max");
    if (!composable(w)) throw std::invalid_argument("non-composable product tuple");
    for (auto it = value.begin(); it != value.end();) {
        if (field.is_zero(it->second))
            it = value.erase(it);
        else {
            it->second = field.norm(it->second);
            ++it;
        }
    }
    if (value.empty()) {
        products[n].erase(w);
        return;
    }
    auto [osrc, otgt, odeg] = output_slot(w);
    for (auto& [s, c] : value) {
        const SymInfo& si = syms.at(s);
        if (si.src != osrc || si.tgt != otgt || si.deg != odeg)
            throw std::invalid_argument("product value outside its hom slot/degree");
    }
    products[n][w] = std::move(value);
}

void for_each_word(const AInfStructure& S, int length, const WordFilter& filter,
                   const std::function<void(const Word&)>& fn) {
    if (length <= 0) return;
    Word w;
    w.reserve(length);
    std::function<void(int)> rec = [&](int pos) {
        for (int s = 0; s < static_cast<int>(S.syms.size()); ++s) {
            if (pos > 0 && S.syms[w[pos - 1]].src != S.syms[s].tgt) continue;
            if (filter.letter && !filter.letter(S, s)) continue;
            w.push_back(s);
            if (pos + 1 == length) {
                bool ok = true;
                if (filter.out_degree_window) {
                    auto [src, tgt, deg] = S.output_slot(w);
                    (void)src;
                    (void)tgt;
                    ok = deg >= filter.out_degree_window->first &&
                         deg <= filter.out_degree_window->second;
                }
                if (ok) fn(w);
            } else {
                rec(pos + 1);
            }
            w.pop_back();
        }
    };
    rec(0);
}

Elem ainf_residual(const AInfStructure& S, const Word& w) {
    const Field& F = S.field;
    const int n = static_cast<int>(w.size());
    Elem acc;
    for (int l = 1; l <= n; ++l) {
        int k = n + 1 - l;
        for (int j = 1; j <= k; ++j) {
            Word block(w.begin() + (j - 1), w.begin() + (j - 1) + l);
            const Elem* mid = S.product(block);
            if (!mid) continue;
            long lead = 0;  // sum of degrees m_l moves past
            for (int i = 0; i < j - 1; ++i) lead += S.syms[w[i]].deg;
            long expo = j + static_cast<long>(l) * (k - j) + static_cast<long>(l) * lead;
            Scalar sgn = (expo % 2 == 0) ? F.one() : F.neg(F.one());
            for (auto& [u, cu] : *mid) {
                if (k == 1) {
                    Scalar c = F.mul(sgn, cu);
                    Scalar s = F.add(acc.count(u) ? acc[u] : F.zero(), c);
                    if (F.is_zero(s))
                        acc.erase(u);
                    else
                        acc[u] = s;
                    continue;
                }
                Word outer;
                outer.reserve(k);
                outer.insert(outer.end(), w.begin(), w.begin() + (j - 1));
                outer.push_back(u);
                outer.insert(outer.end(), w.begin() + (j - 1) + l, w.end());
                const Elem* val = S.product(outer);
                if (!val) continue;
                Scalar c = F.mul(sgn, cu);
                for (auto& [v, cv] : *val) {
                    Scalar s = F.add(acc.count(v) ? acc[v] : F.zero(), F.mul(c, cv));
                    if (F.is_zero(s))
                        acc.erase(v);
                    else
                        acc[v] = s;
                }
            }
        }
    }
    return acc;
}

Report check_ainf(const AInfStructure& S, int up_to_arity) {
    if (up_to_arity > S.arity_bound)
        throw ArityExceeded("check_ainf arity exceeds the structure's bound");
    Report rep;
    for (int n = 1; n <= up_to_arity; ++n) {
        for_each_word(S, n, WordFilter{}, [&](const Word& w) {
            Elem r = ainf_residual(S, w);
            if (!r.empty()) rep.push_back(Residual{n, w, std::move(r)});
        });
    }
    return rep;
}

AInfStructure opposite(const AInfStructure& S) {
    AInfStructure T;
    T.field = S.field;
    T.objects = S.objects;
    T.arity_bound = S.arity_bound;
    for (auto& [key, space] : S.hom) T.hom[{key.second, key.first}] = space;
    T.intern_symbols();

    auto flip = [&](int sym) {
        const SymInfo& si = S.syms[sym];
        return T.sym_id(si.tgt, si.src, si.deg, si.idx);
    };

    const Field& F = S.field;
    for (auto& [n, table] : S.products) {
        for (auto& [w, val] : table) {
            Word t(w.rbegin(), w.rend());
            for (int& s : t) s = flip(s);
            // (-1)^{binom(n+1,2)+1+sum_{i<j} deg_i deg_j}
            long expo = (static_cast<long>(n + 1) * n) / 2 + 1;
            for (size_t i = 0; i < w.size(); ++i)
                for (size_t j = i + 1; j < w.size(); ++j)
                    expo += static_cast<long>(S.syms[w[i]].deg) * S.syms[w[j]].deg;
            Elem out;
            for (auto& [u, c] : val) out[flip(u)] = (expo % 2 == 0) ? c : F.neg(c);
            T.set_product(t, std::move(out));
        }
    }
    return T;
}

AInfPair representable_pair(const AInfStructure& S, int obj_O, int obj_X) {
    AInfPair P;
    P.cat.field = S.field;
    P.cat.objects = {"Y", "X"};
    P.cat.arity_bound = S.arity_bound;
    P.cat.hom[{AInfPair::Y, AInfPair::Y}] = S.hom.count({obj_O, obj_O})
                                                ? S.hom.at({obj_O, obj_O})
                                                : GradedSpace{};
    P.cat.hom[{AInfPair::X, AInfPair::Y}] = S.hom.count({obj_X, obj_O})
                                                ? S.hom.at({obj_X, obj_O})
                                                : GradedSpace{};
    P.cat.intern_symbols();

    auto lift = [&](int sym, bool module_slot) {
        const SymInfo& si = S.syms[sym];
        return module_slot ? P.cat.sym_id(AInfPair::X, AInfPair::Y, si.deg, si.idx)
                           : P.cat.sym_id(AInfPair::Y, AInfPair::Y, si.deg, si.idx);
    };

    for (auto& [n, table] : S.products) {
        for (auto& [w, val] : table) {
            // keep tuples of shapes A...A and A...A,M relative to (O, X)
            bool ok = true, module_tail = false;
            for (size_t i = 0; i < w.size(); ++i) {
                const SymInfo& si = S.syms[w[i]];
                if (si.src == obj_O && si.tgt == obj_O && i + 1 != w.size())
                    continue;
                if (i + 1 == w.size()) {
                    if (si.src == obj_O && si.tgt == obj_O) break;
                    if (si.src == obj_X && si.tgt == obj_O) {
                        module_tail = true;
                        break;
                    }
                }
                ok = false;
                break;
            }
            if (!ok) continue;
            Word t;
            for (size_t i = 0; i < w.size(); ++i)
                t.push_back(lift(w[i], module_tail && i + 1 == w.size()));
            Elem out;
            bool out_ok = true;
            for (auto& [u, c] : val) {
                const SymInfo& si = S.syms[u];
                if (module_tail && si.src == obj_X && si.tgt == obj_O)
                    out[lift(u, true)] = c;
                else if (!module_tail && si.src == obj_O && si.tgt == obj_O)
                    out[lift(u, false)] = c;
                else
                    out_ok = false;
            }
            if (out_ok && !out.empty()) P.cat.set_product(t, std::move(out));
        }
    }
    return P;
}

}  // namespace ainfk
