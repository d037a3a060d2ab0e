#pragma once

#include <optional>
#include <vector>

#include "selforth/ff.hpp"

namespace selforth {

// Exact dense linear algebra over field elements. The routines only use
// +, *, inverse and zero tests, so they work unchanged for matrices whose
// entries all lie in the middle field GF(q): pivoting never leaves it.
using Vec = std::vector<FElem>;
using Mat = std::vector<Vec>;

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(Mat& a);

int rank(Mat a);

// Multiplicative inverse of a square matrix, or nullopt when singular.
std::optional<Mat> invert(const Mat& a);

// Basis (as rows) of { v : a v^T = 0 } for the canonical dot product.
Mat nullspace(const Mat& a, const FieldTower* tw);

// RREF non-zero rows: a canonical independent generating set of the row space.
Mat row_basis(Mat a);

FElem dot(const Vec& x, const Vec& y);

} // namespace selforth
