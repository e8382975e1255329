#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace endohecke {

using SparseRow = std::map<int, mpq_class>;
using QMat = std::vector<std::vector<mpq_class>>;

// Basis of {x : row . x = 0 for all rows} in Q^ncols, by sparse elimination.
std::vector<SparseRow> nullspace(int ncols, const std::vector<SparseRow>& rows);

int rank(QMat m);
// Inverse of a square matrix; throws if singular.
QMat inverse(QMat m);
// Pivot rows (original indices) and pivot columns of a Gaussian elimination with partial row swaps.
std::pair<std::vector<int>, std::vector<int>> pivots(const QMat& m);

}  // namespace endohecke
