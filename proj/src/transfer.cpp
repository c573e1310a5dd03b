#include "ainfk/transfer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ainfk {

namespace {

std::string padded(const char* stem, int k) {
    std::ostringstream os;
    os << stem;
    if (k < 10) os << "00";
    else if (k < 100) os << "0";
    os << k;
    return os.str();
}

// columns of m_1 : A_d -> A_{d+1} for one hom space
Matrix m1_matrix(const AInfStructure& S, std::pair<int, int> key, int d) {
    const GradedSpace& sp = S.hom.at(key);
    int ncols = sp.dim(d), nrows = sp.dim(d + 1);
    Matrix m(nrows, std::vector<Scalar>(ncols, Scalar(0)));
    for (int j = 0; j < ncols; ++j) {
        int sym = S.sym_id(key.first, key.second, d, j);
        const Elem* col = S.product(Word{sym});
        if (!col) continue;
        for (auto& [u, c] : *col) m[S.syms[u].idx][j] = c;
    }
    return m;
}

}  // namespace

ContractionData contraction_from_dg(const AInfStructure& D) {
    const Field& F = D.field;
    ContractionData c;
    c.base = &D;
    for (auto& [key, sp] : D.hom) {
        GradedSpace H;
        LinearMap incl, proj, htpy;
        incl.shift = 0;
        proj.shift = 0;
        htpy.shift = -1;

        // per degree: Z = ker m1, B = im m1, pick pivot-based H-reps and C-complement
        std::map<int, std::vector<std::map<int, Scalar>>> h_reps, b_rows, c_vecs;
        for (auto& [d, labels] : sp.degrees) {
            int dim = static_cast<int>(labels.size());
            Matrix md = m1_matrix(D, key, d);
            auto Z = kernel_basis(F, md, dim);
            // image of m1 from degree d-1
            Matrix prev = m1_matrix(D, key, d - 1);
            Matrix brows;
            for (size_t j = 0; prev.size() && j < prev[0].size(); ++j) {
                std::vector<Scalar> row(dim, Scalar(0));
                bool nz = false;
                for (int i = 0; i < dim; ++i) {
                    row[i] = prev[i][j];
                    if (!F.is_zero(row[i])) nz = true;
                }
                if (nz) brows.push_back(std::move(row));
            }
            auto brr = row_reduce(F, brows);
            std::vector<std::map<int, Scalar>> B;
            for (size_t r = 0; r < brr.pivots.size(); ++r) {
                std::map<int, Scalar> v;
                for (int i = 0; i < dim; ++i)
                    if (!F.is_zero(brr.reduced[r][i])) v[i] = brr.reduced[r][i];
                B.push_back(std::move(v));
            }
            b_rows[d] = B;

            // H-reps: Z-vectors reduced against B then against accepted reps
            std::vector<std::map<int, Scalar>> reps;
            auto reduce_against = [&](std::map<int, Scalar> v,
                                      const std::vector<std::map<int, Scalar>>& rows) {
                for (auto& row : rows) {
                    if (row.empty()) continue;
                    int lead = row.begin()->first;
                    auto it = v.find(lead);
                    if (it == v.end()) continue;
                    Scalar f = F.div(it->second, row.begin()->second);
                    for (auto& [i, rc] : row) {
                        Scalar s = F.sub(v.count(i) ? v[i] : F.zero(), F.mul(f, rc));
                        if (F.is_zero(s))
                            v.erase(i);
                        else
                            v[i] = s;
                    }
                }
                return v;
            };
            for (auto& z : Z) {
                auto v = reduce_against(reduce_against(z, B), reps);
                if (v.empty()) continue;
                Scalar inv = F.inv(v.begin()->second);
                for (auto& [i, s] : v) s = F.mul(s, inv);
                reps.push_back(std::move(v));
            }
            std::sort(reps.begin(), reps.end(),
                      [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
            h_reps[d] = reps;

            // C: standard vectors on non-pivot coordinates of Z (complement of ker)
            Matrix zrows;
            for (auto& z : Z) {
                std::vector<Scalar> row(dim, Scalar(0));
                for (auto& [i, s] : z) row[i] = s;
                zrows.push_back(std::move(row));
            }
            auto zrr = row_reduce(F, zrows);
            std::vector<bool> piv(dim, false);
            for (int p : zrr.pivots) piv[p] = true;
            std::vector<std::map<int, Scalar>> C;
            for (int i = 0; i < dim; ++i)
                if (!piv[i]) C.push_back({{i, F.one()}});
            c_vecs[d] = C;

            for (int k = 0; k < static_cast<int>(reps.size()); ++k)
                H.add_label(d, padded("h", k));
        }

        // assemble i, p, h per degree
        for (auto& [d, labels] : sp.degrees) {
            int dim = static_cast<int>(labels.size());
            auto& reps = h_reps[d];
            auto& B = b_rows[d];
            auto& C = c_vecs[d];
            int hn = static_cast<int>(reps.size());
            for (int k = 0; k < hn; ++k)
                if (!reps[k].empty()) incl.entries[{d, k}] = reps[k];

            if (dim == 0) continue;
            // solve [reps | B | C] alpha = e_j for all j at once: row reduce [Mat | I]
            int cols = hn + static_cast<int>(B.size()) + static_cast<int>(C.size());
            Matrix a(dim, std::vector<Scalar>(cols + dim, Scalar(0)));
            int cc = 0;
            auto put = [&](const std::map<int, Scalar>& v) {
                for (auto& [i, s] : v) a[i][cc] = s;
                ++cc;
            };
            for (auto& v : reps) put(v);
            for (auto& v : B) put(v);
            for (auto& v : C) put(v);
            for (int i = 0; i < dim; ++i) a[i][cols + i] = F.one();
            auto rr = row_reduce(F, a);
            if (static_cast<int>(rr.pivots.size()) < dim ||
                rr.pivots[dim - 1] >= cols)
                throw InvalidContraction("decomposition H+B+C does not span");
            // coordinates of e_j in the column basis: row r gives coefficient of
            // column pivots[r]; p(e_j) = H-block coords; B-part feeds h.
            for (int j = 0; j < dim; ++j) {
                std::map<int, Scalar> pc;       // H coords
                std::map<int, Scalar> bpart;    // B coords
                for (int r = 0; r < dim; ++r) {
                    Scalar coef = rr.reduced[r][cols + j];
                    if (F.is_zero(coef)) continue;
                    int col = rr.pivots[r];
                    if (col < hn)
                        pc[col] = coef;
                    else if (col < hn + static_cast<int>(B.size()))
                        bpart[col - hn] = coef;
                }
                if (!pc.empty()) proj.entries[{d, j}] = pc;
                if (!bpart.empty()) {
                    // h(e_j) = -c where m1(c) = (B-part of e_j), c in span C_{d-1}
                    std::map<int, Scalar> target;  // vector in degree d
                    for (auto& [bi, coef] : bpart)
                        for (auto& [i, s] : B[bi]) {
                            Scalar t = F.add(target.count(i) ? target[i] : F.zero(),
                                             F.mul(coef, s));
                            if (F.is_zero(t))
                                target.erase(i);
                            else
                                target[i] = t;
                        }
                    // solve m1 * (C-combination) = target
                    auto& Cprev = c_vecs[d - 1];
                    Matrix m1p = m1_matrix(D, key, d - 1);
                    int nc = static_cast<int>(Cprev.size());
                    Matrix solve(dim, std::vector<Scalar>(nc + 1, Scalar(0)));
                    for (int q = 0; q < nc; ++q) {
                        // column = m1 applied to C-vector q
                        for (auto& [i, s] : Cprev[q])
                            for (int rrow = 0; rrow < dim; ++rrow)
                                if (!F.is_zero(m1p.size() ? m1p[rrow][i] : Scalar(0)))
                                    solve[rrow][q] = F.add(solve[rrow][q],
                                                           F.mul(s, m1p[rrow][i]));
                    }
                    for (int i = 0; i < dim; ++i)
                        solve[i][nc] = target.count(i) ? target[i] : F.zero();
                    auto srr = row_reduce(F, solve);
                    std::map<int, Scalar> cvec;  // in degree d-1 coordinates
                    for (size_t r = 0; r < srr.pivots.size(); ++r) {
                        if (srr.pivots[r] >= nc)
                            throw InvalidContraction("B-part not hit by m1 on C");
                        Scalar coef = srr.reduced[r][nc];
                        if (F.is_zero(coef)) continue;
                        for (auto& [i, s] : Cprev[srr.pivots[r]]) {
                            Scalar t = F.add(cvec.count(i) ? cvec[i] : F.zero(),
                                             F.mul(coef, s));
                            if (F.is_zero(t))
                                cvec.erase(i);
                            else
                                cvec[i] = t;
                        }
                    }
                    std::map<int, Scalar> hcol;
                    for (auto& [i, s] : cvec) hcol[i] = F.neg(s);
                    if (!hcol.empty()) htpy.entries[{d, j}] = hcol;
                }
            }
        }
        c.h_space[key] = std::move(H);
        c.incl[key] = std::move(incl);
        c.proj[key] = std::move(proj);
        c.htpy[key] = std::move(htpy);
    }
    return c;
}

bool contraction_valid(const AInfStructure& D, const ContractionData& c) {
    const Field& F = D.field;
    for (auto& [key, hsp] : c.h_space) {
        const GradedSpace& asp = D.hom.at(key);
        const LinearMap& I = c.incl.at(key);
        const LinearMap& P = c.proj.at(key);
        const LinearMap& Hh = c.htpy.at(key);
        auto m1 = [&](int d, const std::map<int, Scalar>& v) {
            std::map<int, Scalar> out;
            for (auto& [j, s] : v) {
                int sym = D.sym_id(key.first, key.second, d, j);
                const Elem* col = D.product(Word{sym});
                if (!col) continue;
                for (auto& [u, cc] : *col) {
                    Scalar t = F.add(out.count(D.syms[u].idx) ? out[D.syms[u].idx] : F.zero(),
                                     F.mul(s, cc));
                    if (F.is_zero(t))
                        out.erase(D.syms[u].idx);
                    else
                        out[D.syms[u].idx] = t;
                }
            }
            return out;
        };
        auto apply = [&](const LinearMap& L, int d, const std::map<int, Scalar>& v) {
            std::map<int, Scalar> out;
            for (auto& [j, s] : v)
                for (auto& [i, t] : L.apply_basis(d, j)) {
                    Scalar u = F.add(out.count(i) ? out[i] : F.zero(), F.mul(s, t));
                    if (F.is_zero(u))
                        out.erase(i);
                    else
                        out[i] = u;
                }
            return out;
        };
        // p i = id on H; h i = 0
        for (auto& [d, labels] : hsp.degrees) {
            for (int k = 0; k < static_cast<int>(labels.size()); ++k) {
                auto iv = apply(I, d, {{k, F.one()}});
                auto piv = apply(P, d, iv);
                if (piv != std::map<int, Scalar>{{k, F.one()}}) return false;
                if (!apply(Hh, d, iv).empty()) return false;
            }
        }
        // i p - id = m1 h + h m1; p h = 0; h h = 0 on A
        for (auto& [d, labels] : asp.degrees) {
            for (int j = 0; j < static_cast<int>(labels.size()); ++j) {
                std::map<int, Scalar> e{{j, F.one()}};
                auto lhs = apply(I, d, apply(P, d, e));
                Scalar minus = F.neg(F.one());
                lhs[j] = F.add(lhs.count(j) ? lhs[j] : F.zero(), minus);
                if (F.is_zero(lhs[j])) lhs.erase(j);
                auto rhs = m1(d - 1, apply(Hh, d, e));
                for (auto& [i, s] : apply(Hh, d + 1, m1(d, e))) {
                    Scalar t = F.add(rhs.count(i) ? rhs[i] : F.zero(), s);
                    if (F.is_zero(t))
                        rhs.erase(i);
                    else
                        rhs[i] = t;
                }
                if (lhs != rhs) return false;
                if (!apply(P, d - 1, apply(Hh, d, e)).empty()) return false;
                if (!apply(Hh, d - 1, apply(Hh, d, e)).empty()) return false;
            }
        }
    }
    return true;
}

namespace {

struct TransferEngine {
    const AInfStructure& D;
    const ContractionData& c;
    const AInfStructure& H;  // minimal skeleton (hom spaces interned)
    const Field& F;

    // letterwise maps on symbols
    Elem incl_letter(int hsym) const {
        const SymInfo& si = H.syms[hsym];
        Elem out;
        for (auto& [i, s] : c.incl.at({si.src, si.tgt}).apply_basis(si.deg, si.idx))
            out[D.sym_id(si.src, si.tgt, si.deg, i)] = s;
        return out;
    }
    Elem proj_letter(int asym) const {
        const SymInfo& si = D.syms[asym];
        Elem out;
        for (auto& [i, s] : c.proj.at({si.src, si.tgt}).apply_basis(si.deg, si.idx))
            out[H.sym_id(si.src, si.tgt, si.deg, i)] = s;
        return out;
    }
    Elem htpy_letter(int asym) const {
        const SymInfo& si = D.syms[asym];
        Elem out;
        for (auto& [i, s] : c.htpy.at({si.src, si.tgt}).apply_basis(si.deg, si.idx))
            out[D.sym_id(si.src, si.tgt, si.deg - 1, i)] = s;
        return out;
    }
    Elem ip_letter(int asym) const {
        Elem out;
        for (auto& [h, s] : proj_letter(asym)) elem_axpy_sparse(F, out, s, incl_letter(h));
        return out;
    }

    // tensor-trick homotopy: sum_r 1^r (x) h (x) (ip)^s with Koszul prefix sign
    BarElem tensor_homotopy(const BarElem& x) const {
        BarElem out;
        for (auto& [w, coeff] : x) {
            int n = static_cast<int>(w.size());
            int prefix = 0;
            for (int r = 0; r < n; ++r) {
                Elem hmid = htpy_letter(w[r]);
                if (!hmid.empty()) {
                    Scalar base = (prefix % 2 == 0) ? coeff : F.neg(coeff);
                    // expand suffix through ip letter by letter
                    std::vector<std::pair<Word, Scalar>> tails{{Word{}, F.one()}};
                    for (int q = r + 1; q < n; ++q) {
                        Elem img = ip_letter(w[q]);
                        std::vector<std::pair<Word, Scalar>> next;
                        for (auto& [tw, tc] : tails)
                            for (auto& [u, cu] : img) {
                                Word nw = tw;
                                nw.push_back(u);
                                next.push_back({std::move(nw), F.mul(tc, cu)});
                            }
                        tails = std::move(next);
                        if (tails.empty()) break;
                    }
                    for (auto& [u, cu] : hmid)
                        for (auto& [tw, tc] : tails) {
                            Word word(w.begin(), w.begin() + r);
                            word.push_back(u);
                            word.insert(word.end(), tw.begin(), tw.end());
                            barelem_axpy(F, out, F.mul(F.mul(base, cu), tc), word);
                        }
                }
                prefix += susp_deg(D, w[r]);
            }
        }
        return out;
    }

    BarElem delta(const BarElem& x) const { return bar_d(D, x, 2, D.arity_bound); }

    Elem series_pi1(BarElem cur) const {
        // pi_1 of (1 - delta h_TT)^{-1} applied after an initial delta is folded in
        Elem acc;
        while (!cur.empty()) {
            for (auto& [w, s] : cur)
                if (w.size() == 1) elem_axpy_sparse(F, acc, s, Elem{{w[0], F.one()}});
            BarElem next = delta(tensor_homotopy(cur));
            cur = std::move(next);
        }
        return acc;
    }

    // cogenerated transferred product on an H-word (suspended value)
    Elem product_cogen(const Word& hw) const {
        // i^tensor
        BarElem cur{{Word{}, F.one()}};
        {
            BarElem start;
            std::vector<std::pair<Word, Scalar>> acc{{Word{}, F.one()}};
            for (int s : hw) {
                Elem img = incl_letter(s);
                std::vector<std::pair<Word, Scalar>> next;
                for (auto& [w, cc] : acc)
                    for (auto& [u, cu] : img) {
                        Word nw = w;
                        nw.push_back(u);
                        next.push_back({std::move(nw), F.mul(cc, cu)});
                    }
                acc = std::move(next);
                if (acc.empty()) break;
            }
            for (auto& [w, cc] : acc) barelem_axpy(F, start, cc, w);
            cur = std::move(start);
        }
        Elem down = series_pi1(delta(cur));
        // project
        Elem out;
        for (auto& [a, s] : down) elem_axpy_sparse(F, out, s, proj_letter(a));
        return out;
    }

    // suspended projection-functor component on an A-word
    Elem functor_cogen(const Word& aw) const {
        Elem down = series_pi1(BarElem{{aw, F.one()}});
        Elem out;
        for (auto& [a, s] : down) elem_axpy_sparse(F, out, s, proj_letter(a));
        return out;
    }
};

}  // namespace

MinimalModel transfer(const AInfStructure& D, const ContractionData& c, int N,
                      const TransferOptions& opts) {
    if (!contraction_valid(D, c)) throw InvalidContraction("contraction identities fail");
    MinimalModel M;
    M.minimal.field = D.field;
    M.minimal.objects = D.objects;
    M.minimal.arity_bound = N;
    for (auto& [key, hsp] : c.h_space) M.minimal.hom[key] = hsp;
    M.minimal.intern_symbols();

    TransferEngine eng{D, c, M.minimal, D.field};

    int lo = -(1 << 28), hi = 1 << 28;
    if (opts.degree_window) {
        lo = opts.degree_window->first;
        hi = opts.degree_window->second;
    }
    WordFilter filter;
    filter.letter = [&](const AInfStructure& S, int sym) {
        return S.syms[sym].deg >= lo && S.syms[sym].deg <= hi;
    };
    filter.out_degree_window = std::pair<int, int>{lo, hi};

    for (int n = 2; n <= N; ++n) {
        for_each_word(M.minimal, n, filter, [&](const Word& w) {
            Elem val = eng.product_cogen(w);
            if (val.empty()) return;
            if (susp_sign_exp(M.minimal, w) % 2 != 0)
                for (auto& [s, cc] : val) cc = D.field.neg(cc);
            M.minimal.set_product(w, std::move(val));
        });
    }

    M.projection.src = &D;
    M.projection.tgt = &M.minimal;
    M.projection.object_map.resize(D.objects.size());
    for (size_t i = 0; i < D.objects.size(); ++i)
        M.projection.object_map[i] = static_cast<int>(i);
    // F_1 = p
    for (int s = 0; s < static_cast<int>(D.syms.size()); ++s) {
        Elem col = eng.proj_letter(s);
        if (!col.empty()) M.projection.comps[1][Word{s}] = std::move(col);
    }
    for (int n = 2; n <= std::min(N, opts.functor_table_arity); ++n) {
        WordFilter afilter;
        // output degree of F_n is (sum deg) + 1 - n; the window filter applies to
        // the product-slot degree (sum deg) + 2 - n, hence the +1 offset.
        afilter.out_degree_window = std::pair<int, int>{lo + 1, hi + 1};
        for_each_word(D, n, afilter, [&](const Word& w) {
            Elem val = eng.functor_cogen(w);
            if (val.empty()) return;
            if (susp_sign_exp(D, w) % 2 != 0)
                for (auto& [s, cc] : val) cc = D.field.neg(cc);
            M.projection.comps[n][w] = std::move(val);
        });
    }
    return M;
}

AInfStructure local_algebra_fixture(int n, int N, const Field& field, int width) {
    if (n < 2) throw std::invalid_argument("local_algebra_fixture needs n >= 2");
    int T = width >= 0 ? width : N + 2;
    AInfStructure S;
    S.field = field;
    S.objects = {"O"};
    S.arity_bound = std::max(2, N);
    GradedSpace sp;
    // basis x^a u_{j->k}: map C^{-j} -> C^{-k} of degree j - k, a in [0, n)
    auto label = [&](int a, int j, int k) {
        std::ostringstream os;
        os << "x" << a << "_c" << (j < 10 ? "0" : "") << j << "_c" << (k < 10 ? "0" : "") << k;
        return os.str();
    };
    for (int j = 0; j <= T; ++j)
        for (int k = 0; k <= T; ++k)
            for (int a = 0; a < n; ++a) sp.add_label(j - k, label(a, j, k));
    S.hom[{0, 0}] = sp;
    S.intern_symbols();

    auto sym = [&](int a, int j, int k) {
        return S.sym_id(0, 0, j - k, S.hom.at({0, 0}).index_of(j - k, label(a, j, k)));
    };
    auto dstep = [&](int j) { return (j % 2 == 1) ? 1 : n - 1; };  // delta: column j -> j-1

    const Scalar one = field.one();
    // m_2(f, g) = f o g
    for (int j = 0; j <= T; ++j)
        for (int k = 0; k <= T; ++k)
            for (int l = 0; l <= T; ++l)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (a + b >= n) continue;
                        // g: C^{-j} -> C^{-k} (x^b), f: C^{-k} -> C^{-l} (x^a)
                        S.set_product(Word{sym(a, k, l), sym(b, j, k)},
                                      Elem{{sym(a + b, j, l), one}});
                    }
    // m_1(f) = delta o f - (-1)^{deg f} f o delta
    for (int j = 0; j <= T; ++j)
        for (int k = 0; k <= T; ++k)
            for (int a = 0; a < n; ++a) {
                Elem val;
                if (k >= 1 && a + dstep(k) < n)
                    val[sym(a + dstep(k), j, k - 1)] = one;
                int fdeg = j - k;
                if (j + 1 <= T && a + dstep(j + 1) < n) {
                    Scalar s = (fdeg % 2 == 0) ? field.neg(one) : one;
                    int id2 = sym(a + dstep(j + 1), j + 1, k);
                    Scalar t = field.add(val.count(id2) ? val[id2] : field.zero(), s);
                    if (field.is_zero(t))
                        val.erase(id2);
                    else
                        val[id2] = t;
                }
                if (!val.empty()) S.set_product(Word{sym(a, j, k)}, std::move(val));
            }
    return S;
}

AInfStructure positive_part(const AInfStructure& S) {
    AInfStructure T;
    T.field = S.field;
    T.objects = S.objects;
    T.arity_bound = S.arity_bound;
    for (auto& [key, sp] : S.hom) {
        GradedSpace q;
        for (auto& [d, labels] : sp.degrees)
            if (d >= 1)
                for (auto& l : labels) q.add_label(d, l);
        T.hom[key] = q;
    }
    T.intern_symbols();
    auto lift = [&](int sym) -> int {
        const SymInfo& si = S.syms[sym];
        if (si.deg < 1) return -1;
        return T.sym_id(si.src, si.tgt, si.deg, si.idx);
    };
    for (auto& [n, table] : S.products)
        for (auto& [w, val] : table) {
            Word t;
            bool ok = true;
            for (int s : w) {
                int u = lift(s);
                if (u < 0) {
                    ok = false;
                    break;
                }
                t.push_back(u);
            }
            if (!ok) continue;
            Elem out;
            for (auto& [u, c] : val) {
                int v = lift(u);
                if (v >= 0) out[v] = c;
            }
            if (!out.empty()) T.set_product(t, std::move(out));
        }
    return T;
}

}  // namespace ainfk
