#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cgdlab {

// Row-major dense matrix. Only the handful of operations the games and
// nets need; nothing general-purpose.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c, double fill = 0.0)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static Mat identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
  }

  static Mat from_flat(const std::vector<double>& flat, int r, int c) {
    if (static_cast<int>(flat.size()) != r * c)
      throw std::invalid_argument("from_flat: size mismatch");
    Mat m(r, c);
    m.a = flat;
    return m;
  }
};

inline Mat matmul(const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matmul: shape mismatch");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      const double aik = A(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
    }
  }
  return C;
}

inline Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

inline Mat madd(const Mat& A, const Mat& B) {
  Mat C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
  return C;
}

inline Mat msub(const Mat& A, const Mat& B) {
  Mat C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
  return C;
}

inline Mat mscale(double c, const Mat& A) {
  Mat C = A;
  for (double& e : C.a) e *= c;
  return C;
}

inline double frob_inner(const Mat& A, const Mat& B) {
  double s = 0.0;
  for (std::size_t i = 0; i < A.a.size(); ++i) s += A.a[i] * B.a[i];
  return s;
}

inline double frob_norm(const Mat& A) { return std::sqrt(frob_inner(A, A)); }

}  // namespace cgdlab
