// SPDX-License-Identifier: Apache-2.0
//
// Complex 4x4 matrix algebra of the Riemann-Silberstein form of Maxwell's
// equations: alpha matrices, so(3) generators s_i, Lorentz generators j^{ab}
// and the Cartesian <-> cyclic change of basis U4.
#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace cmx {

using cplx = std::complex<double>;

enum class Basis { cartesian, cyclic };

/// State column (0, psi^1, psi^2, psi^3) with psi^k = E^k + i cB^k.
/// Slot 0 is auxiliary and vanishes for a physical state.
struct FieldVector {
  std::array<cplx, 4> c{};

  cplx& operator[](std::size_t i) { return c[i]; }
  const cplx& operator[](std::size_t i) const { return c[i]; }

  FieldVector& operator+=(const FieldVector& o);
  FieldVector& operator-=(const FieldVector& o);
  FieldVector& operator*=(cplx s);
  double max_abs() const;
};

FieldVector operator+(FieldVector a, const FieldVector& b);
FieldVector operator-(FieldVector a, const FieldVector& b);
FieldVector operator*(cplx s, FieldVector v);

class Matrix4C {
 public:
  constexpr Matrix4C() = default;
  explicit Matrix4C(const std::array<std::array<cplx, 4>, 4>& rows);

  static Matrix4C identity();
  static Matrix4C zero() { return {}; }
  /// 1 in slot 0 and `b` in the lower-right 3x3 block.
  static Matrix4C block(cplx corner, const std::array<std::array<cplx, 3>, 3>& b);

  cplx& operator()(int r, int c) { return m_[4 * r + c]; }
  const cplx& operator()(int r, int c) const { return m_[4 * r + c]; }

  Matrix4C& operator+=(const Matrix4C& o);
  Matrix4C& operator-=(const Matrix4C& o);
  Matrix4C& operator*=(cplx s);

  Matrix4C adjoint() const;
  double max_abs() const;

  friend Matrix4C operator*(const Matrix4C& a, const Matrix4C& b);
  friend FieldVector operator*(const Matrix4C& a, const FieldVector& v);

 private:
  std::array<cplx, 16> m_{};
};

Matrix4C operator+(Matrix4C a, const Matrix4C& b);
Matrix4C operator-(Matrix4C a, const Matrix4C& b);
Matrix4C operator*(cplx s, Matrix4C a);
Matrix4C commutator(const Matrix4C& a, const Matrix4C& b);
double max_abs_diff(const Matrix4C& a, const Matrix4C& b);

/// alpha^k, k = 0..3. alpha^0 is the identity; the cyclic-basis matrices are
/// the tabulated ones, not computed by conjugation.
Matrix4C alpha(int k, Basis basis = Basis::cartesian);

/// Rotation generator s_i, i = 1..3, embedded as block-diag(0, tau_i).
Matrix4C generator(int i, Basis basis = Basis::cartesian);

/// Lorentz generator j^{ab}, a,b = 0..3: j^{23} = s1, j^{31} = s2, j^{12} = s3,
/// j^{0k} = i s_k, antisymmetric, j^{aa} = 0.
Matrix4C lorentz_generator(int a, int b, Basis basis = Basis::cartesian);

struct CyclicTransform {
  Matrix4C forward;  // U4
  Matrix4C inverse;  // U4^{-1} = U4^+
};

const CyclicTransform& cyclic_transform();

/// U4 M U4^{-1}
Matrix4C to_cyclic(const Matrix4C& m);
FieldVector to_cyclic(const FieldVector& v);
FieldVector to_cartesian(const FieldVector& v);

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
};

struct AlgebraReport {
  std::vector<IdentityCheck> checks;
  double max_residual = 0.0;
};

/// Product rules, squares and alpha^0 commutation in both bases, plus the
/// conjugation identities linking the two bases.
AlgebraReport verify_algebra();

}  // namespace cmx
