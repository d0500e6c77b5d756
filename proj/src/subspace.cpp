#include "gwa/subspace.hpp"

namespace gwa::sub {

Matrix zero(int n, int N) { return Matrix(n, 0, N); }
Matrix full(int n, int N) { return Matrix::identity(n, N); }

Matrix span(const Matrix& a) {
  if (a.cols() == 0) return Matrix(a.rows(), 0, a.conductor());
  auto [r, piv] = rref(a.transpose());
  return r.block(0, 0, static_cast<int>(piv.size()), r.cols()).transpose();
}

Matrix image(const Matrix& A, const Matrix& S) {
  if (S.cols() == 0) return Matrix(A.rows(), 0, A.conductor());
  return span(A * S);
}

Matrix preimage(const Matrix& A, const Matrix& T) {
  const int n = A.cols();
  if (T.cols() == 0) return span(nullspace(A));
  Matrix ns = nullspace(Matrix::hcat(A, T));
  return span(ns.block(0, 0, n, ns.cols()));
}

Matrix intersect(const Matrix& S, const Matrix& T) {
  if (S.cols() == 0 || T.cols() == 0) return Matrix(S.rows(), 0, S.conductor());
  Matrix ns = nullspace(Matrix::hcat(S, T));
  return span(S * ns.block(0, 0, S.cols(), ns.cols()));
}

Matrix sum(const Matrix& S, const Matrix& T) { return span(Matrix::hcat(S, T)); }

bool contains(const Matrix& S, const Matrix& T) {
  if (T.cols() == 0) return true;
  return rank(Matrix::hcat(S, T)) == rank(S);
}

Matrix complement(const Matrix& l, const Matrix& u) {
  Matrix acc = l;
  int rk = rank(l);
  Matrix out(u.rows(), 0, u.conductor());
  for (int j = 0; j < u.cols(); ++j) {
    Matrix cand = Matrix::hcat(acc, u.col(j));
    int r2 = rank(cand);
    if (r2 > rk) {
      acc = cand;
      rk = r2;
      out = Matrix::hcat(out, u.col(j));
    }
  }
  return out;
}

}  // namespace gwa::sub
