#pragma once

#include "gwa/scalars.hpp"

// Subspaces of N^n are stored as matrices whose columns form a basis.
namespace gwa::sub {

Matrix zero(int n, int N);
Matrix full(int n, int N);
Matrix span(const Matrix& a);                       // column space
Matrix image(const Matrix& A, const Matrix& S);     // A(S)
Matrix preimage(const Matrix& A, const Matrix& T);  // {v : A v in T}
Matrix intersect(const Matrix& S, const Matrix& T);
Matrix sum(const Matrix& S, const Matrix& T);
bool contains(const Matrix& S, const Matrix& T);  // T inside S
inline int dim(const Matrix& S) { return S.cols(); }
// Columns of `u` not spanned by `l`, chosen greedily so that [l | result] spans l + u.
Matrix complement(const Matrix& l, const Matrix& u);

}  // namespace gwa::sub
