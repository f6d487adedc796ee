// SPDX-License-Identifier: Apache-2.0
#include "cmx/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "cmx/errors.hpp"

namespace cmx {

namespace {

constexpr cplx I{0.0, 1.0};

using Rows = std::array<std::array<cplx, 4>, 4>;

const Rows kAlpha1{{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}};
const Rows kAlpha2{{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};
const Rows kAlpha3{{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};

// Cyclic-basis forms; alpha'^1 and alpha'^2 carry an overall 1/sqrt(2).
const Rows kAlpha1Cyc{{{0, -1, 0, 1}, {1, 0, -I, 0}, {0, -I, 0, -I}, {-1, 0, -I, 0}}};
const Rows kAlpha2Cyc{{{0, -I, 0, -I}, {-I, 0, -1, 0}, {0, 1, 0, -1}, {-I, 0, 1, 0}}};
const Rows kAlpha3Cyc{{{0, 0, 1, 0}, {0, -I, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, I}}};

using Block = std::array<std::array<cplx, 3>, 3>;

const Block kTau1{{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}};
const Block kTau2{{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}};
const Block kTau3{{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}};

const Block kTau1Cyc{{{0, -I, 0}, {-I, 0, -I}, {0, -I, 0}}};  // x 1/sqrt(2)
const Block kTau2Cyc{{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}};    // x 1/sqrt(2)
const Block kTau3Cyc{{{-I, 0, 0}, {0, 0, 0}, {0, 0, I}}};

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

FieldVector& FieldVector::operator+=(const FieldVector& o) {
  for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
  return *this;
}

FieldVector& FieldVector::operator-=(const FieldVector& o) {
  for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
  return *this;
}

FieldVector& FieldVector::operator*=(cplx s) {
  for (auto& x : c) x *= s;
  return *this;
}

double FieldVector::max_abs() const {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

FieldVector operator+(FieldVector a, const FieldVector& b) { return a += b; }
FieldVector operator-(FieldVector a, const FieldVector& b) { return a -= b; }
FieldVector operator*(cplx s, FieldVector v) { return v *= s; }

Matrix4C::Matrix4C(const Rows& rows) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) (*this)(r, c) = rows[r][c];
}

Matrix4C Matrix4C::identity() {
  Matrix4C m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Matrix4C Matrix4C::block(cplx corner, const Block& b) {
  Matrix4C m;
  m(0, 0) = corner;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r + 1, c + 1) = b[r][c];
  return m;
}

Matrix4C& Matrix4C::operator+=(const Matrix4C& o) {
  for (std::size_t i = 0; i < 16; ++i) m_[i] += o.m_[i];
  return *this;
}

Matrix4C& Matrix4C::operator-=(const Matrix4C& o) {
  for (std::size_t i = 0; i < 16; ++i) m_[i] -= o.m_[i];
  return *this;
}

Matrix4C& Matrix4C::operator*=(cplx s) {
  for (auto& x : m_) x *= s;
  return *this;
}

Matrix4C Matrix4C::adjoint() const {
  Matrix4C out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

double Matrix4C::max_abs() const {
  double m = 0.0;
  for (const auto& x : m_) m = std::max(m, std::abs(x));
  return m;
}

Matrix4C operator*(const Matrix4C& a, const Matrix4C& b) {
  Matrix4C out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

FieldVector operator*(const Matrix4C& a, const FieldVector& v) {
  FieldVector out;
  for (int r = 0; r < 4; ++r) {
    cplx s = 0.0;
    for (int k = 0; k < 4; ++k) s += a(r, k) * v.c[k];
    out.c[r] = s;
  }
  return out;
}

Matrix4C operator+(Matrix4C a, const Matrix4C& b) { return a += b; }
Matrix4C operator-(Matrix4C a, const Matrix4C& b) { return a -= b; }
Matrix4C operator*(cplx s, Matrix4C a) { return a *= s; }

Matrix4C commutator(const Matrix4C& a, const Matrix4C& b) { return a * b - b * a; }

double max_abs_diff(const Matrix4C& a, const Matrix4C& b) { return (a - b).max_abs(); }

Matrix4C alpha(int k, Basis basis) {
  const bool cyc = basis == Basis::cyclic;
  switch (k) {
    case 0:
      return Matrix4C::identity();
    case 1:
      return cyc ? kInvSqrt2 * Matrix4C(kAlpha1Cyc) : Matrix4C(kAlpha1);
    case 2:
      return cyc ? kInvSqrt2 * Matrix4C(kAlpha2Cyc) : Matrix4C(kAlpha2);
    case 3:
      return cyc ? Matrix4C(kAlpha3Cyc) : Matrix4C(kAlpha3);
    default:
      fail(ErrorCode::invalid_argument, "alpha: index must be 0..3, got " + std::to_string(k));
  }
}

Matrix4C generator(int i, Basis basis) {
  const bool cyc = basis == Basis::cyclic;
  switch (i) {
    case 1:
      return cyc ? kInvSqrt2 * Matrix4C::block(0.0, kTau1Cyc) : Matrix4C::block(0.0, kTau1);
    case 2:
      return cyc ? kInvSqrt2 * Matrix4C::block(0.0, kTau2Cyc) : Matrix4C::block(0.0, kTau2);
    case 3:
      return cyc ? Matrix4C::block(0.0, kTau3Cyc) : Matrix4C::block(0.0, kTau3);
    default:
      fail(ErrorCode::invalid_argument, "generator: index must be 1..3, got " + std::to_string(i));
  }
}

Matrix4C lorentz_generator(int a, int b, Basis basis) {
  if (a < 0 || a > 3 || b < 0 || b > 3)
    fail(ErrorCode::invalid_argument, "lorentz_generator: indices must be 0..3");
  if (a == b) return Matrix4C::zero();
  if (a > b) return -1.0 * lorentz_generator(b, a, basis);
  if (a == 0) return I * generator(b, basis);
  // (1,2) -> s3, (1,3) -> -s2, (2,3) -> s1
  if (a == 1 && b == 2) return generator(3, basis);
  if (a == 1 && b == 3) return -1.0 * generator(2, basis);
  return generator(1, basis);
}

const CyclicTransform& cyclic_transform() {
  static const CyclicTransform t = [] {
    const double s = kInvSqrt2;
    const Block u{{{-s, I * s, 0}, {0, 0, 1}, {s, I * s, 0}}};
    const Block ui{{{-s, 0, s}, {-I * s, 0, -I * s}, {0, 1, 0}}};
    return CyclicTransform{Matrix4C::block(1.0, u), Matrix4C::block(1.0, ui)};
  }();
  return t;
}

Matrix4C to_cyclic(const Matrix4C& m) {
  const auto& t = cyclic_transform();
  return t.forward * m * t.inverse;
}

FieldVector to_cyclic(const FieldVector& v) { return cyclic_transform().forward * v; }
FieldVector to_cartesian(const FieldVector& v) { return cyclic_transform().inverse * v; }

AlgebraReport verify_algebra() {
  AlgebraReport rep;
  auto add = [&rep](std::string name, double r) {
    rep.max_residual = std::max(rep.max_residual, r);
    rep.checks.push_back({std::move(name), r});
  };
  const Matrix4C id = Matrix4C::identity();

  for (Basis basis : {Basis::cartesian, Basis::cyclic}) {
    const std::string tag = basis == Basis::cartesian ? "" : "'";
    const Matrix4C a0 = alpha(0, basis), a1 = alpha(1, basis), a2 = alpha(2, basis),
                   a3 = alpha(3, basis);
    const Matrix4C alphas[4] = {a0, a1, a2, a3};

    add("alpha" + tag + "1 alpha" + tag + "2 = alpha" + tag + "3", max_abs_diff(a1 * a2, a3));
    add("alpha" + tag + "2 alpha" + tag + "1 = -alpha" + tag + "3",
        max_abs_diff(a2 * a1, -1.0 * a3));
    add("alpha" + tag + "2 alpha" + tag + "3 = alpha" + tag + "1", max_abs_diff(a2 * a3, a1));
    add("alpha" + tag + "3 alpha" + tag + "2 = -alpha" + tag + "1",
        max_abs_diff(a3 * a2, -1.0 * a1));
    add("alpha" + tag + "3 alpha" + tag + "1 = alpha" + tag + "2", max_abs_diff(a3 * a1, a2));
    add("alpha" + tag + "1 alpha" + tag + "3 = -alpha" + tag + "2",
        max_abs_diff(a1 * a3, -1.0 * a2));
    add("(alpha" + tag + "0)^2 = I", max_abs_diff(a0 * a0, id));
    for (int k = 1; k <= 3; ++k) {
      const std::string ks = std::to_string(k);
      add("(alpha" + tag + ks + ")^2 = -I", max_abs_diff(alphas[k] * alphas[k], -1.0 * id));
      add("alpha" + tag + ks + " alpha" + tag + "0 = alpha" + tag + ks,
          max_abs_diff(alphas[k] * a0, alphas[k]));
      add("alpha" + tag + "0 alpha" + tag + ks + " = alpha" + tag + ks,
          max_abs_diff(a0 * alphas[k], alphas[k]));
    }
    const Matrix4C s1 = generator(1, basis), s2 = generator(2, basis), s3 = generator(3, basis);
    add("[s" + tag + "1, s" + tag + "2] = s" + tag + "3", max_abs_diff(commutator(s1, s2), s3));
    add("[s" + tag + "2, s" + tag + "3] = s" + tag + "1", max_abs_diff(commutator(s2, s3), s1));
    add("[s" + tag + "3, s" + tag + "1] = s" + tag + "2", max_abs_diff(commutator(s3, s1), s2));
  }

  const auto& t = cyclic_transform();
  add("U4 U4^-1 = I", max_abs_diff(t.forward * t.inverse, id));
  add("U4^-1 = U4^+", max_abs_diff(t.inverse, t.forward.adjoint()));
  for (int k = 0; k <= 3; ++k)
    add("U4 alpha" + std::to_string(k) + " U4^-1 = alpha'" + std::to_string(k),
        max_abs_diff(to_cyclic(alpha(k)), alpha(k, Basis::cyclic)));
  for (int i = 1; i <= 3; ++i)
    add("U4 s" + std::to_string(i) + " U4^-1 = s'" + std::to_string(i),
        max_abs_diff(to_cyclic(generator(i)), generator(i, Basis::cyclic)));
  return rep;
}

}  // namespace cmx
