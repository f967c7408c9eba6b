#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coophunt {

using rational = mpq_class;

template <class T>
struct poly;

namespace detail {

template <class T>
struct is_poly : std::false_type {};
template <class T>
struct is_poly<poly<T>> : std::true_type {};

}  // namespace detail

template <class T>
T zero_of() {
  return T{};
}

template <class T>
T one_of() {
  if constexpr (detail::is_poly<T>::value)
    return T(one_of<typename T::value_type>());
  else
    return T(1);
}

template <class T>
bool is_zero(const T& v) {
  if constexpr (detail::is_poly<T>::value)
    return v.zero();
  else
    return v == 0;
}

// Univariate polynomial, lowest degree first. T is a field or a ring
// (poly<rational> serves as the ring Q[h] for resultants in another variable).
template <class T>
struct poly {
  using value_type = T;
  std::vector<T> c;

  poly() = default;
  explicit poly(std::vector<T> v) : c(std::move(v)) { trim(); }
  explicit poly(const T& v) : c{v} { trim(); }
  poly(std::initializer_list<T> v) : c(v) { trim(); }

  static poly monomial(const T& a, int k) {
    poly p;
    if (is_zero(a)) return p;
    p.c.assign(k + 1, zero_of<T>());
    p.c[k] = a;
    return p;
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const T& lead() const {
    if (c.empty()) throw std::domain_error("poly: leading coefficient of zero polynomial");
    return c.back();
  }
  T coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : zero_of<T>(); }
  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  template <class U>
  U operator()(const U& x) const {
    U r = zero_of<U>();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      r *= x;
      r += U(*it);
    }
    return r;
  }

  poly derivative() const {
    poly d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * T(static_cast<long>(k)));
    d.trim();
    return d;
  }

  poly operator-() const {
    poly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  poly& operator+=(const poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), zero_of<T>());
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    trim();
    return *this;
  }
  poly& operator-=(const poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), zero_of<T>());
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
    trim();
    return *this;
  }
  poly& operator*=(const poly& o) { return *this = *this * o; }
  poly& operator*=(const T& s) {
    for (auto& v : c) v *= s;
    trim();
    return *this;
  }
  friend poly operator+(poly a, const poly& b) { return a += b; }
  friend poly operator-(poly a, const poly& b) { return a -= b; }
  friend poly operator*(const poly& a, const poly& b) {
    if (a.zero() || b.zero()) return poly{};
    std::vector<T> r(a.c.size() + b.c.size() - 1, zero_of<T>());
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return poly(std::move(r));
  }
  friend poly operator*(poly a, const T& s) { return a *= s; }
  friend poly operator*(const T& s, poly a) { return a *= s; }
  friend bool operator==(const poly& a, const poly& b) { return a.c == b.c; }
};

template <class T>
struct division {
  poly<T> quotient, remainder;
};

// lc(g)^(deg f - deg g + 1) f = q g + r with deg r < deg g; no division needed
template <class T>
division<T> pseudo_div(const poly<T>& f, const poly<T>& g) {
  if (g.zero()) throw std::domain_error("pseudo_div: zero divisor");
  const int n = g.degree();
  division<T> out;
  out.remainder = f;
  if (f.degree() < n) return out;
  const T b = g.lead();
  int e = f.degree() - n + 1;
  while (!out.remainder.zero() && out.remainder.degree() >= n) {
    const auto s = poly<T>::monomial(out.remainder.lead(), out.remainder.degree() - n);
    out.quotient = out.quotient * b + s;
    out.remainder = out.remainder * b - s * g;
    --e;
  }
  T be = one_of<T>();
  for (int k = 0; k < e; ++k) be *= b;
  out.quotient *= be;
  out.remainder *= be;
  return out;
}

// ordinary division over a field
template <class T>
division<T> divide(const poly<T>& f, const poly<T>& g) {
  if (g.zero()) throw std::domain_error("divide: zero divisor");
  division<T> out;
  out.remainder = f;
  const int n = g.degree();
  while (!out.remainder.zero() && out.remainder.degree() >= n) {
    const T q = out.remainder.lead() / g.lead();
    const auto s = poly<T>::monomial(q, out.remainder.degree() - n);
    out.quotient += s;
    auto r = out.remainder - s * g;
    // the leading term cancels exactly in exact arithmetic; force it for floats
    if (!r.zero() && r.degree() == out.remainder.degree()) {
      r.c.pop_back();
      r.trim();
    }
    out.remainder = std::move(r);
  }
  return out;
}

template <class T>
T exact_div(const T& a, const T& b) {
  if constexpr (detail::is_poly<T>::value) {
    auto d = divide(a, b);
    if (!d.remainder.zero()) throw std::logic_error("exact_div: nonzero remainder");
    return d.quotient;
  } else {
    return T(a / b);
  }
}

template <class T>
poly<T> monic(poly<T> p) {
  if (p.zero()) return p;
  const T l = p.lead();
  for (auto& v : p.c) v /= l;
  return p;
}

// gcd over a field, monic
template <class T>
poly<T> gcd(poly<T> a, poly<T> b) {
  while (!b.zero()) {
    auto r = divide(a, b).remainder;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

template <class T>
using matrix = std::vector<std::vector<T>>;

template <class T>
matrix<T> sylvester(const poly<T>& f, const poly<T>& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) throw std::domain_error("sylvester: zero polynomial");
  const int N = m + n;
  matrix<T> s(N, std::vector<T>(N, zero_of<T>()));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = f.c[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = g.c[n - k];
  return s;
}

inline std::size_t coeff_bits(double) { return 0; }
inline std::size_t coeff_bits(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }
inline std::size_t coeff_bits(const rational& v) {
  return mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
}
template <class T>
std::size_t coeff_bits(const poly<T>& p) {
  std::size_t b = 0;
  for (const auto& v : p.c) b = std::max(b, coeff_bits(v));
  return b;
}

// Fraction-free elimination; every division is exact in the ring.
// bit_cap = 0 disables the size guard.
template <class T>
T det_bareiss(matrix<T> a, std::size_t bit_cap = 0) {
  const std::size_t n = a.size();
  if (n == 0) return one_of<T>();
  T prev = one_of<T>();
  bool flip = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a[p][k])) ++p;
      if (p == n) return zero_of<T>();
      std::swap(a[k], a[p]);
      flip = !flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_div(t, prev);
        if (bit_cap && coeff_bits(a[i][j]) > bit_cap)
          throw std::overflow_error("det_bareiss: coefficient size exceeds cap");
      }
      a[i][k] = zero_of<T>();
    }
    prev = a[k][k];
  }
  T d = a[n - 1][n - 1];
  return flip ? T(-d) : d;
}

inline double det_lu(matrix<double> a) {
  const std::size_t n = a.size();
  double d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == 0) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      d = -d;
    }
    d *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= m * a[k][j];
    }
  }
  return d;
}

// exact resultant (Bareiss); T may itself be a polynomial ring
template <class T>
T resultant(const poly<T>& f, const poly<T>& g, std::size_t bit_cap = 0) {
  return det_bareiss(sylvester(f, g), bit_cap);
}

inline double resultant(const poly<double>& f, const poly<double>& g) { return det_lu(sylvester(f, g)); }

struct root {
  double lo, hi;  // isolating interval
  double x;       // refined value
  int multiplicity;
};

using root_set = std::vector<root>;

namespace detail {

template <class T>
int sign_of(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

template <class T>
std::vector<poly<T>> sturm_chain(const poly<T>& f) {
  std::vector<poly<T>> s{f, f.derivative()};
  while (!s.back().zero() && s.back().degree() > 0) {
    auto r = divide(s[s.size() - 2], s.back()).remainder;
    if (r.zero()) break;
    // positive rescaling keeps the signs and tames coefficient growth
    T l = r.lead();
    if (l < 0) l = -l;
    for (auto& v : r.c) v /= l;
    s.push_back(-r);
  }
  return s;
}

template <class T>
int variations(const std::vector<poly<T>>& s, const T& x) {
  int v = 0, last = 0;
  for (const auto& p : s) {
    const int sg = sign_of(p(x));
    if (sg == 0) continue;
    if (last && sg != last) ++v;
    last = sg;
  }
  return v;
}

}  // namespace detail

// Real roots of f in the open interval (lo, hi) by Sturm sequences over Q,
// refined by bisection until the interval is narrower than tol.
inline root_set real_roots_exact(const poly<rational>& f, const rational& lo, const rational& hi,
                                 double tol = 1e-12) {
  if (f.zero()) throw std::domain_error("real_roots: zero polynomial");
  root_set out;
  if (f.degree() == 0) return out;
  const auto g = gcd(f, f.derivative());
  const auto sqf = divide(f, g).quotient;
  const auto chain = detail::sturm_chain(sqf);
  auto count = [&](const rational& a, const rational& b) {
    return detail::variations(chain, a) - detail::variations(chain, b);
  };
  // multiplicity by how many successive gcds keep the root
  auto mult = [&](const rational& a, const rational& b, bool point) {
    int m = 1;
    poly<rational> d = g;
    while (d.degree() > 0) {
      bool has = point ? is_zero(d(a)) : [&] {
        const auto ch = detail::sturm_chain(monic(d));
        return detail::variations(ch, a) - detail::variations(ch, b) > 0;
      }();
      if (!has) break;
      ++m;
      d = gcd(d, d.derivative());
    }
    return m;
  };
  const rational width(tol);
  // (a, b] intervals; a == b marks a root hit exactly
  std::vector<std::pair<rational, rational>> stack{{lo, hi}};
  std::vector<std::pair<rational, rational>> isolated;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const bool root_at_b = is_zero(sqf(b));
    int n = count(a, b);
    if (root_at_b && b == hi) --n;  // the domain is open at hi
    if (n <= 0) continue;
    if (n == 1) {
      if (root_at_b)
        isolated.emplace_back(b, b);
      else
        isolated.emplace_back(a, b);
      continue;
    }
    const rational m = (a + b) / 2;
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  for (auto [a, b] : isolated) {
    if (a != b) {
      const int sb = detail::sign_of(rational(sqf(b)));
      while (rational(b - a) > width) {
        const rational m = (a + b) / 2;
        const int sm = detail::sign_of(rational(sqf(m)));
        if (sm == 0) {
          a = b = m;
          break;
        }
        (sm == sb ? b : a) = m;
      }
    }
    const bool exact = a == b;
    out.push_back({a.get_d(), b.get_d(), rational((a + b) / 2).get_d(), mult(a, b, exact)});
  }
  std::sort(out.begin(), out.end(), [](const root& p, const root& q) { return p.x < q.x; });
  return out;
}

namespace detail {

inline double magnitude(const poly<double>& f, double x) {
  double s = 0, p = 1;
  for (double v : f.c) {
    s += std::abs(v) * p;
    p *= std::abs(x);
  }
  return s;
}

// values this close to zero relative to the term magnitudes are treated as zero
inline constexpr double snap_tol = 64 * std::numeric_limits<double>::epsilon();

inline double snapped(const poly<double>& f, double x) {
  const double v = f(x);
  return std::abs(v) <= snap_tol * magnitude(f, x) ? 0.0 : v;
}

inline double bisect(const poly<double>& f, double a, double b) {
  double fa = f(a);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Distinct roots in the open interval, by Rolle recursion on derivatives.
// A critical value counts as zero when it is rounding noise or when the pair
// of roots it would split into lies closer than cluster_tol.
inline std::vector<std::pair<double, int>> rolle_roots(const poly<double>& f, double lo, double hi,
                                                       double cluster_tol) {
  std::vector<std::pair<double, int>> out;
  if (f.degree() <= 0) return out;
  if (f.degree() == 1) {
    const double x = -f.c[0] / f.c[1];
    if (x > lo && x < hi) out.push_back({x, 1});
    return out;
  }
  const auto df = f.derivative();
  const auto d2f = df.derivative();
  const auto crit = rolle_roots(df, lo, hi, cluster_tol);
  std::vector<std::pair<double, int>> pts{{lo, 0}};
  pts.insert(pts.end(), crit.begin(), crit.end());
  pts.push_back({hi, 0});
  std::vector<double> val(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto [c, m] = pts[k];
    val[k] = snapped(f, c);
    const double w = cluster_tol * std::max(1.0, std::abs(c));
    if (m > 0 && std::abs(val[k]) <= std::abs(d2f(c)) * w * w / 8) val[k] = 0;
  }
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    // a zero at a critical point of multiplicity m is a root of multiplicity m + 1
    if (k > 0 && val[k] == 0) out.push_back({pts[k].first, pts[k].second + 1});
    if (val[k] != 0 && val[k + 1] != 0 && (val[k] > 0) != (val[k + 1] > 0))
      out.push_back({bisect(f, pts[k].first, pts[k + 1].first), 1});
  }
  return out;
}

}  // namespace detail

// Float path. Critical points split the domain into monotone pieces; a sign
// change on a piece brackets a simple root, a vanishing critical value is a
// multiple root. Roots closer than cluster_tol are merged.
inline root_set real_roots(const poly<double>& f, double lo, double hi, double tol = 1e-12,
                           double cluster_tol = 1e-9) {
  if (f.zero()) throw std::domain_error("real_roots: zero polynomial");
  for (double v : f.c)
    if (!std::isfinite(v)) throw std::domain_error("real_roots: ill-conditioned (non-finite coefficient)");
  auto raw = detail::rolle_roots(f, lo, hi, cluster_tol);
  std::sort(raw.begin(), raw.end());
  root_set out;
  for (auto [x, m] : raw) {
    if (!out.empty() && std::abs(x - out.back().x) <= cluster_tol * std::max(1.0, std::abs(x))) {
      out.back().multiplicity += m;
      out.back().hi = x;
      continue;
    }
    out.push_back({x - tol, x + tol, x, m});
  }
  return out;
}

}  // namespace coophunt
