#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coophunt/model.hpp"

namespace coophunt {

// sparse bivariate polynomial, key (i, j) for u^i v^j
struct bipoly {
  std::map<std::pair<int, int>, double> c;

  static bipoly constant(double a) {
    bipoly p;
    if (a != 0) p.c[{0, 0}] = a;
    return p;
  }
  // a + b u + d v
  static bipoly affine(double a, double b, double d) {
    bipoly p;
    if (a != 0) p.c[{0, 0}] = a;
    if (b != 0) p.c[{1, 0}] = b;
    if (d != 0) p.c[{0, 1}] = d;
    return p;
  }

  double coeff(int i, int j) const {
    auto it = c.find({i, j});
    return it == c.end() ? 0.0 : it->second;
  }

  bipoly& operator+=(const bipoly& o) {
    for (auto& [k, v] : o.c) c[k] += v;
    return *this;
  }
  bipoly& operator*=(double s) {
    for (auto& [k, v] : c) v *= s;
    return *this;
  }
  friend bipoly operator+(bipoly a, const bipoly& b) { return a += b; }
  friend bipoly operator-(bipoly a, bipoly b) { return a += (b *= -1); }
  friend bipoly operator*(bipoly a, double s) { return a *= s; }
  friend bipoly operator*(double s, bipoly a) { return a *= s; }
  friend bipoly operator*(const bipoly& a, const bipoly& b) {
    bipoly r;
    for (auto& [ka, va] : a.c)
      for (auto& [kb, vb] : b.c) r.c[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    return r;
  }

  // homogeneous part of degree k as c[i] for u^(k-i) v^i
  Eigen::VectorXd homogeneous(int k) const {
    Eigen::VectorXd h = Eigen::VectorXd::Zero(k + 1);
    for (auto& [e, v] : c)
      if (e.first + e.second == k) h[e.second] += v;
    return h;
  }
};

// 2x2 real matrix as columns, for the linear coordinate changes
struct linear_map {
  double m11, m12, m21, m22;
  linear_map inverse() const {
    const double d = m11 * m22 - m12 * m21;
    if (d == 0) throw std::domain_error("linear_map: singular");
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
  }
};

// field3 written in (u, v) where (x, y) = at + M (u, v)
inline std::pair<bipoly, bipoly> field3_in(const param_set& p, const state& at, const linear_map& M) {
  const bipoly X = bipoly::affine(at.x, M.m11, M.m12);
  const bipoly Y = bipoly::affine(at.y, M.m21, M.m22);
  const bipoly w = bipoly::constant(1) + p.alpha * Y;
  const bipoly X2 = X * X;
  const bipoly f = X * (p.sigma * (bipoly::constant(p.kappa) - X) * (bipoly::constant(1) + p.h * w * X2) -
                        p.kappa * (w * X * Y));
  const bipoly g = p.kappa * Y * ((1 - p.h) * w * X2 - bipoly::constant(1));
  return {f, g};
}

// Basis that turns a zero-trace Jacobian into omega * [[0, -1], [1, 0]]:
// first column along x, second column J m1 / omega.
inline linear_map rotation_basis(const mat2& J) {
  const double d = J.det();
  if (!(d > 0)) throw std::domain_error("rotation_basis: need det J > 0");
  if (J.a21 == 0) throw std::domain_error("rotation_basis: a21 = 0");
  const double w = std::sqrt(d);
  const double c1 = 1 / J.a21;
  return {c1, J.a11 * c1 / w, 0, 1 / w};
}

// u' = -v + P(u, v), v' = u + Q(u, v): nonlinear parts at E1 of field3,
// after the rotation basis and the time rescaling by omega
struct normalized_focus {
  bipoly P, Q;
  double omega;
  linear_map basis;
};

inline normalized_focus normalize_focus(const param_set& p, const state& e1) {
  const mat2 J = jacobian3(p, e1);
  normalized_focus n;
  n.omega = std::sqrt(J.det());
  n.basis = rotation_basis(J);
  const auto [f, g] = field3_in(p, e1, n.basis);
  const linear_map Mi = n.basis.inverse();
  const bipoly P = (Mi.m11 * f + Mi.m12 * g) * (1 / n.omega);
  const bipoly Q = (Mi.m21 * f + Mi.m22 * g) * (1 / n.omega);
  for (auto& [k, v] : P.c)
    if (k.first + k.second >= 2) n.P.c[k] = v;
  for (auto& [k, v] : Q.c)
    if (k.first + k.second >= 2) n.Q.c[k] = v;
  return n;
}

// Focal values L_1..L_N of u' = -v + P, v' = u + Q. A formal first integral
// H = (u^2 + v^2)/2 + H_3 + H_4 + ... is built degree by degree; at even
// degree 2k+2 the obstruction is L_k (u^2 + v^2)^(k+1), with the u^(2k+2)
// coefficient of H fixed to zero.
inline std::vector<double> lyapunov_constants(const bipoly& P, const bipoly& Q, int N) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  const int top = 2 * N + 2;
  std::vector<VectorXd> H(top + 1);
  H[2] = VectorXd::Zero(3);
  H[2] << 0.5, 0, 0.5;
  auto du = [](const VectorXd& c, int k) {
    VectorXd r(k);
    for (int i = 0; i < k; ++i) r[i] = (k - i) * c[i];
    return r;
  };
  auto dv = [](const VectorXd& c, int k) {
    VectorXd r(k);
    for (int i = 1; i <= k; ++i) r[i - 1] = i * c[i];
    return r;
  };
  auto mul = [](const VectorXd& a, const VectorXd& b) {
    VectorXd r = VectorXd::Zero(a.size() + b.size() - 1);
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  std::vector<double> L;
  for (int k = 3; k <= top; ++k) {
    VectorXd rhs = VectorXd::Zero(k + 1);
    for (int m = 2; m < k; ++m) {
      const int d = k - m + 1;
      if (d < 2) continue;
      rhs += mul(du(H[m], m), P.homogeneous(d)) + mul(dv(H[m], m), Q.homogeneous(d));
    }
    // u d/dv - v d/du on the degree-k coefficients
    MatrixXd A = MatrixXd::Zero(k + 1, k + 1);
    for (int i = 0; i <= k; ++i) {
      if (i >= 1) A(i - 1, i) += i;
      if (i < k) A(i + 1, i) -= k - i;
    }
    if (k % 2) {
      H[k] = A.fullPivLu().solve(-rhs);
      continue;
    }
    MatrixXd M = MatrixXd::Zero(k + 2, k + 2);
    M.topLeftCorner(k + 1, k + 1) = A;
    double binom = 1;  // C(k/2, j/2) on even j
    for (int j = 0; j <= k; j += 2) {
      M(j, k + 1) = -binom;
      binom = binom * (k / 2 - j / 2) / (j / 2 + 1);
    }
    M(k + 1, 0) = 1;
    VectorXd b = VectorXd::Zero(k + 2);
    b.head(k + 1) = -rhs;
    const VectorXd sol = M.fullPivLu().solve(b);
    H[k] = sol.head(k + 1);
    L.push_back(sol[k + 1]);
  }
  return L;
}

// First Lyapunov coefficient by the projection formula on the unreduced
// field: l = Re(<p, C(q,q,qb)> - 2<p, B(q, J^-1 B(q,qb))> + <p, B(qb, (2iw - J)^-1 B(q,q))>) / (2w)
inline double first_lyapunov_projection(const param_set& p, const state& e) {
  using cd = std::complex<double>;
  using V = Eigen::Vector2cd;
  using M = Eigen::Matrix2cd;
  const auto [f, g] = field3_in(p, e, {1, 0, 0, 1});
  const mat2 j = jacobian3(p, e);
  if (!(j.det() > 0)) throw std::domain_error("first_lyapunov_projection: need det J > 0");
  const double w = std::sqrt(j.det());
  M A;
  A << j.a11, j.a12, j.a21, j.a22;
  // eigenvectors: A q = i w q, A^T p = -i w p, <p, q> = 1
  const cd I(0, 1);
  V q(-j.a12, j.a11 - I * w);
  if (std::abs(q[0]) + std::abs(q[1]) < 1e-300) q = V(j.a22 - I * w, -j.a21);
  V pv(j.a21, -(j.a11 + I * w));
  if (std::abs(pv[0]) + std::abs(pv[1]) < 1e-300) pv = V(j.a22 + I * w, -j.a12);
  pv /= std::conj(pv.dot(q));  // Eigen dot conjugates the first argument
  const bipoly* comp[2] = {&f, &g};
  auto B = [&](const V& a, const V& b) {
    V r;
    for (int k = 0; k < 2; ++k) {
      const bipoly& F = *comp[k];
      r[k] = 2.0 * F.coeff(2, 0) * a[0] * b[0] + F.coeff(1, 1) * (a[0] * b[1] + a[1] * b[0]) +
             2.0 * F.coeff(0, 2) * a[1] * b[1];
    }
    return r;
  };
  auto C = [&](const V& a, const V& b, const V& c) {
    V r;
    for (int k = 0; k < 2; ++k) {
      const bipoly& F = *comp[k];
      r[k] = 6.0 * F.coeff(3, 0) * a[0] * b[0] * c[0] +
             2.0 * F.coeff(2, 1) * (a[0] * b[0] * c[1] + a[0] * b[1] * c[0] + a[1] * b[0] * c[0]) +
             2.0 * F.coeff(1, 2) * (a[0] * b[1] * c[1] + a[1] * b[0] * c[1] + a[1] * b[1] * c[0]) +
             6.0 * F.coeff(0, 3) * a[1] * b[1] * c[1];
    }
    return r;
  };
  const V qb = q.conjugate();
  const V s1 = A.fullPivLu().solve(B(q, qb));
  const V s2 = (2.0 * I * w * M::Identity() - A).fullPivLu().solve(B(q, q));
  const cd val = pv.dot(C(q, q, qb)) - 2.0 * pv.dot(B(q, s1)) + pv.dot(B(qb, s2));
  return val.real() / (2 * w);
}

}  // namespace coophunt
