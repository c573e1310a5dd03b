// Dense exact row reduction and the deterministic pivot-column machinery
// built on it (sections, kernels, cohomology splittings).
#pragma once

#include <map>
#include <vector>

#include "ainfk/field.hpp"
#include "ainfk/graded.hpp"

namespace ainfk {

using Matrix = std::vector<std::vector<Scalar>>;

struct RowReduceResult {
    Matrix reduced;           // reduced row-echelon form
    std::vector<int> pivots;  // strictly increasing pivot columns
};

struct NotSurjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RowReduceResult row_reduce(const Field& F, const Matrix& m);

// Right inverse of a surjective map, chosen through the pivot columns of the
// reduced form. Throws NotSurjective when any degree fails surjectivity.
LinearMap right_inverse(const Field& F, const LinearMap& m);

// Kernel basis (as sparse columns over the column index) of a matrix
// interpreted as rows = equations over the columns.
std::vector<std::map<int, Scalar>> kernel_basis(const Field& F, const Matrix& m, int ncols);

}  // namespace ainfk
