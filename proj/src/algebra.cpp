#include "slicereg/algebra.hpp"

namespace slicereg {

SO3Matrix SO3Matrix::identity() {
  SO3Matrix out;
  for (int n = 0; n < 3; ++n) out.m[n][n] = GRat(1);
  return out;
}

GRat SO3Matrix::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool SO3Matrix::is_orthogonal() const {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      GRat dot;
      for (int n = 0; n < 3; ++n) dot += m[n][r] * m[n][c];
      if (dot != GRat(r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

SO3Matrix aut_to_matrix(const CQuat& alpha) {
  if (alpha.norm().is_zero()) throw ZeroDivisorError("conjugating element has zero norm");
  const CQuat inv = inverse(alpha);
  SO3Matrix out;
  for (int col = 0; col < 3; ++col) {
    const CQuat image = alpha * CQuat::basis(col + 1) * inv;
    for (int row = 0; row < 3; ++row) out.m[row][col] = image[row + 1];
  }
  return out;
}

bool in_quadratic_cone(const R3Quat& x) {
  return x.first.trace() == x.second.trace() && x.first.norm() == x.second.norm();
}

}  // namespace slicereg
