#include "ainfk/linalg.hpp"

#include <set>

namespace ainfk {

RowReduceResult row_reduce(const Field& F, const Matrix& m) {
    Matrix a = m;
    for (auto& row : a)
        for (auto& x : row) x = F.norm(x);
    const int nrows = static_cast<int>(a.size());
    const int ncols = nrows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (!F.is_zero(a[i][c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Scalar inv = F.inv(a[r][c]);
        for (int j = c; j < ncols; ++j) a[r][j] = F.mul(a[r][j], inv);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || F.is_zero(a[i][c])) continue;
            Scalar f = a[i][c];
            for (int j = c; j < ncols; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

LinearMap right_inverse(const Field& F, const LinearMap& m) {
    LinearMap s;
    s.source = m.target;
    s.target = m.source;
    s.shift = -m.shift;

    // degrees where either the target has vectors or the map could land
    std::set<int> target_degrees;
    for (auto& [d, v] : m.target->degrees) target_degrees.insert(d);

    for (int td : target_degrees) {
        int sd = td - m.shift;
        int nrows = m.target->dim(td);
        int ncols = m.source->dim(sd);
        if (nrows == 0) continue;
        Matrix a(nrows, std::vector<Scalar>(ncols + nrows, Scalar(0)));
        for (int j = 0; j < ncols; ++j) {
            for (auto& [i, c] : m.apply_basis(sd, j)) a[i][j] = c;
        }
        for (int i = 0; i < nrows; ++i) a[i][ncols + i] = F.one();  // augment [M | I]
        auto rr = row_reduce(F, a);
        // surjective iff every row of the M-block carries a pivot in the first ncols columns
        int rank = 0;
        for (int p : rr.pivots)
            if (p < ncols) ++rank;
        if (rank < nrows) throw NotSurjective("right_inverse: map not surjective in a degree");
        // rows 0..nrows-1 now read e_{pivot col} = sum_k inv[i][k] f_k; the section sends
        // f_i to the pivot-column combination solving M s = I.
        for (int i = 0; i < nrows; ++i) {
            // row i has pivot rr.pivots[i] < ncols and tail = coefficients of f_k
            // M x = e_i with x supported on pivot columns: solve by back-reading rows.
            std::map<int, Scalar> col;
            for (int rrow = 0; rrow < rank; ++rrow) {
                Scalar c = rr.reduced[rrow][ncols + i];
                if (!F.is_zero(c)) col[rr.pivots[rrow]] = c;
            }
            // x_{pivot of row rrow} = [I-part of row rrow]_i, other coords 0; this solves
            // Mx = e_i because non-pivot columns are set to zero.
            if (!col.empty()) s.entries[{td, i}] = std::move(col);
        }
    }
    return s;
}

std::vector<std::map<int, Scalar>> kernel_basis(const Field& F, const Matrix& m, int ncols) {
    auto rr = row_reduce(F, m);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<std::map<int, Scalar>> out;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        std::map<int, Scalar> v;
        v[c] = F.one();
        for (size_t r = 0; r < rr.pivots.size(); ++r) {
            Scalar coeff = rr.reduced[r][c];
            if (!F.is_zero(coeff)) v[rr.pivots[r]] = F.neg(coeff);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ainfk
