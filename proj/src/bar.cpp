#include "ainfk/bar.hpp"

namespace ainfk {

void barelem_axpy(const Field& F, BarElem& acc, const Scalar& c, const Word& w) {
    auto it = acc.find(w);
    Scalar s = F.add(it == acc.end() ? F.zero() : it->second, c);
    if (F.is_zero(s)) {
        if (it != acc.end()) acc.erase(it);
    } else {
        acc[w] = s;
    }
}

void elem_axpy_sparse(const Field& F, Elem& acc, const Scalar& c, const Elem& x) {
    for (auto& [i, v] : x) {
        Scalar s = F.add(acc.count(i) ? acc[i] : F.zero(), F.mul(c, v));
        if (F.is_zero(s))
            acc.erase(i);
        else
            acc[i] = s;
    }
}

Elem susp_apply(const AInfStructure& S, const std::map<int, std::map<Word, Elem>>& comps,
                const Word& w) {
    auto nit = comps.find(static_cast<int>(w.size()));
    if (nit == comps.end()) return {};
    auto it = nit->second.find(w);
    if (it == nit->second.end()) return {};
    if (susp_sign_exp(S, w) % 2 == 0) return it->second;
    Elem out;
    for (auto& [s, c] : it->second) out[s] = S.field.neg(c);
    return out;
}

Elem bar_cogen(const AInfStructure& S, const Word& w) {
    const Elem* p = S.product(w);
    if (!p) return {};
    if (susp_sign_exp(S, w) % 2 == 0) return *p;
    Elem out;
    for (auto& [s, c] : *p) out[s] = S.field.neg(c);
    return out;
}

BarElem bar_d(const AInfStructure& S, const BarElem& x, int lmin, int lmax) {
    const Field& F = S.field;
    if (lmax < 0) lmax = S.arity_bound;
    BarElem out;
    for (auto& [w, c] : x) {
        const int n = static_cast<int>(w.size());
        int prefix_sdeg = 0;
        for (int j = 0; j < n; ++j) {
            for (int l = lmin; l <= lmax && j + l <= n; ++l) {
                Word block(w.begin() + j, w.begin() + j + l);
                Elem img = bar_cogen(S, block);
                if (img.empty()) continue;
                Scalar base = (prefix_sdeg % 2 == 0) ? c : F.neg(c);
                for (auto& [u, cu] : img) {
                    Word spliced;
                    spliced.reserve(n - l + 1);
                    spliced.insert(spliced.end(), w.begin(), w.begin() + j);
                    spliced.push_back(u);
                    spliced.insert(spliced.end(), w.begin() + j + l, w.end());
                    barelem_axpy(F, out, F.mul(base, cu), spliced);
                }
            }
            prefix_sdeg += susp_deg(S, w[j]);
        }
    }
    return out;
}

BarElem bar_apply_morphism(const BarMorphismView& f, const Word& w) {
    const Field& F = f.src->field;
    const int n = static_cast<int>(w.size());
    // compositions of w into blocks; expand block images left to right
    BarElem out;
    std::function<void(int, const Word&, const Scalar&)> rec = [&](int pos, const Word& acc,
                                                                   const Scalar& coeff) {
        if (pos == n) {
            barelem_axpy(F, out, coeff, acc);
            return;
        }
        for (int l = 1; pos + l <= n; ++l) {
            Word block(w.begin() + pos, w.begin() + pos + l);
            Elem img = f.cogen(block);
            if (img.empty()) continue;
            for (auto& [u, cu] : img) {
                Word next = acc;
                next.push_back(u);
                rec(pos + l, next, F.mul(coeff, cu));
            }
        }
    };
    rec(0, {}, F.one());
    return out;
}

BarElem bar_apply_morphism(const BarMorphismView& f, const BarElem& x) {
    const Field& F = f.src->field;
    BarElem out;
    for (auto& [w, c] : x) {
        BarElem part = bar_apply_morphism(f, w);
        for (auto& [u, cu] : part) barelem_axpy(F, out, F.mul(c, cu), u);
    }
    return out;
}

Elem bar_pi1(const BarElem& x, const Field& F, const std::function<Elem(const Word&)>& cogen) {
    Elem out;
    for (auto& [w, c] : x) {
        Elem img = cogen(w);
        if (!img.empty()) elem_axpy_sparse(F, out, c, img);
    }
    return out;
}

Report check_bar_square(const AInfStructure& S, int max_word_len) {
    Report rep;
    for (int n = 1; n <= max_word_len; ++n) {
        for_each_word(S, n, WordFilter{}, [&](const Word& w) {
            BarElem bw = bar_d(S, BarElem{{w, S.field.one()}});
            Elem r = bar_pi1(bw, S.field, [&](const Word& u) { return bar_cogen(S, u); });
            if (!r.empty()) rep.push_back(Residual{n, w, std::move(r)});
        });
    }
    return rep;
}

}  // namespace ainfk
