#pragma once

#include "coophunt/detail/literal.hpp"

namespace coophunt::detail {

// unfolding coefficients of the shifted, rescaled system at the cusp
template <class T>
struct bt_cd {
  T c00, c10, c01, c02, c11, c20, d00, d10, d01, d11, d02, d20;
};

template <class T>
struct bt_e {
  T e00, e10, e01, e20, e02, e11;
};

template <class T>
struct bt_curve_terms {
  T g01, g10, h01, h10, f11, f12, f22, f32;
};

template <class T>
bt_cd<T> eval_bt_cd(const T& xs, const T& h, const T& e1, const T& e2) {
  bt_cd<T> r;
  r.c00 = ((T(-1) * e1 * ipow<T>(xs, 4) * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2)) / ((T(-8) + (T(4) * ipow<T>(xs, 2)) + (T(4) * h * (T(1) + (T(-2) * ipow<T>(xs, 2)))) + (T(4) * ipow<T>(h, 2) * ipow<T>(xs, 2)))));
  r.c10 = (e1 * ipow<T>(xs, 3) * (T(-1) + h) * ((T(-1) / T(2)) + ((T(-1) * ipow<T>(xs, 2)) / (T(2))) + ((T(1) * h * ipow<T>(xs, 2)) / (T(2)))));
  r.c01 = ((T(-1) * (T(4) + (T(-2) * ipow<T>(xs, 2)) + (h * (T(-2) + (T(4) * ipow<T>(xs, 2)))) + (T(-2) * ipow<T>(h, 2) * ipow<T>(xs, 2)) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2)))) / ((T(-4) + (T(2) * ipow<T>(xs, 2)) + (T(2) * h * (T(1) + (T(-2) * ipow<T>(xs, 2)))) + (T(2) * ipow<T>(h, 2) * ipow<T>(xs, 2)))));
  r.c02 = ((T(-1) * (T(4) + (T(-2) * ipow<T>(xs, 2)) + (h * (T(-2) + (T(4) * ipow<T>(xs, 2)))) + (T(-2) * ipow<T>(h, 2) * ipow<T>(xs, 2)) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2)))) / (T(4) * xs * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))));
  r.c11 = ((T(1) * (((T(6) + (T(-2) * ipow<T>(xs, 2)) + (T(2) * h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(-3) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2)))))) / (T(2) * xs * (T(-1) + h) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2)));
  r.c20 = ((T(1) * (T(-12) + (T(6) * ipow<T>(xs, 2)) + (h * (T(6) + (T(-12) * ipow<T>(xs, 2)))) + (T(6) * ipow<T>(h, 2) * ipow<T>(xs, 2)) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * (T(-3) + ipow<T>(xs, 4) + (T(6) * ipow<T>(xs, 2)) + (ipow<T>(h, 2) * ipow<T>(xs, 4)) + (T(-2) * h * ipow<T>(xs, 2) * (T(3) + ipow<T>(xs, 2)))))) * (T(2) + (T(-1) * h) + (T(-1) * ipow<T>(xs, 2)) + (T(-1) * ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(2) * h * ipow<T>(xs, 2)))) / (T(4) * xs * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2)));
  r.d00 = ((xs * ((T(-2) * e2 * ipow<T>((T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2))), 2)) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2)))) + (e1 * e2 * h * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))))) / (ipow<T>((T(-1) + h), 2) * (T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(8) + (T(-4) * ipow<T>(xs, 2)) + (T(4) * h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))));
  r.d10 = ((T(-1) * ((T(2) * e2 * ipow<T>((T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2))), 2)) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(-1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2)))) + (e1 * e2 * h * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(-1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))))) / (ipow<T>((T(-1) + h), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 3) * (T(4) + (T(-2) * ipow<T>(xs, 2)) + (T(2) * h * ipow<T>(xs, 2)))));
  r.d01 = ((((T(-1) * e2 * ipow<T>((T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2))), 2) * (T(2) + (T(2) * h * ipow<T>(xs, 2)))) + (T(-1) * e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 3) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2)))) + (e1 * e2 * h * ipow<T>(xs, 5) * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))))) / ((T(-1) + h) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(4) + (T(-2) * ipow<T>(xs, 2)) + (T(2) * h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))));
  r.d11 = ((T(1) * ((T(-1) * e2 * ipow<T>((T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2))), 2) * (T(2) + (T(2) * h)) * (T(3) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2)))) + (T(-1) * ipow<T>((T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(-2) + (T(2) * h)) * (T(3) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(3) + ipow<T>(xs, 2) + (h * (T(3) + ipow<T>(xs, 4) + (T(-7) * ipow<T>(xs, 2)))) + (ipow<T>(h, 3) * ipow<T>(xs, 4)) + (T(-2) * ipow<T>(h, 2) * ipow<T>(xs, 2) * (T(-3) + ipow<T>(xs, 2))))) + (T(2) * e1 * e2 * h * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * (T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(3) + (T(-4) * ipow<T>(xs, 2)) + (T(4) * h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))))) / (T(2) * xs * ipow<T>((T(-1) + h), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 3) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2)))));
  r.d02 = ((T(-1) * ((e2 * ipow<T>((T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2))), 2) * (T(-6) + (T(-6) * h) + (T(2) * ipow<T>(xs, 2)) + (T(-4) * h * ipow<T>(xs, 2)) + (T(2) * ipow<T>(h, 2) * ipow<T>(xs, 2)))) + (T(-1) * (T(-2) + (T(2) * h)) * (T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (T(4) * h) + (h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 3) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(-1) + (T(7) * h) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-1) * h * ipow<T>(xs, 2)))) + (T(6) * e1 * e2 * h * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))))) / (T(4) * xs * ipow<T>((T(-1) + h), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 2) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))));
  r.d20 = ((T(1) * ((T(-1) * e2 * ipow<T>((T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2))), 2) * (T(6) + (T(-2) * ipow<T>(xs, 2)) + (T(6) * h) + (T(-4) * h * ipow<T>(xs, 2)) + (T(6) * ipow<T>(h, 2) * ipow<T>(xs, 2)))) + (T(-1) * (T(-2) + (T(2) * h)) * (T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(6) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2)))) + (e1 * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 3) * (T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(3) + (T(-1) * ipow<T>(xs, 4)) + (T(-6) * ipow<T>(xs, 2)) + (h * (T(3) + (T(-1) * ipow<T>(xs, 2)) + (T(-1) * ipow<T>(xs, 6)) + (T(7) * ipow<T>(xs, 4)))) + (ipow<T>(h, 4) * ipow<T>(xs, 6)) + (ipow<T>(h, 2) * ipow<T>(xs, 2) * (T(7) + (T(-11) * ipow<T>(xs, 2)) + (T(3) * ipow<T>(xs, 4)))) + (T(-1) * ipow<T>(h, 3) * ipow<T>(xs, 4) * (T(-5) + (T(3) * ipow<T>(xs, 2)))))) + (T(2) * e1 * e2 * h * ipow<T>(xs, 3) * ipow<T>((T(-1) + h), 2) * (T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * (T(3) + (T(-5) * ipow<T>(xs, 2)) + (T(5) * h * ipow<T>(xs, 2))) * (T(-2) + h + ipow<T>(xs, 2) + (ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(-2) * h * ipow<T>(xs, 2))))) * (T(2) + (T(-1) * h) + (T(-1) * ipow<T>(xs, 2)) + (T(-1) * ipow<T>(h, 2) * ipow<T>(xs, 2)) + (T(2) * h * ipow<T>(xs, 2)))) / (T(4) * xs * ipow<T>((T(-1) + h), 4) * ipow<T>((T(1) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))), 4) * (T(2) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2)))));
  (void)e2;
  return r;
}

template <class T>
bt_e<T> eval_bt_e(const bt_cd<T>& q) {
  const auto& [c00, c10, c01, c02, c11, c20, d00, d10, d01, d11, d02, d20] = q;
  bt_e<T> r;
  r.e00 = ((T(-1) * ((T(-1) * ipow<T>(c01, 4)) + (T(2) * ipow<T>(c00, 2) * ipow<T>(c02, 2)) + (T(2) * c00 * c02 * ipow<T>(c01, 2))) * ((d00 * ipow<T>(c01, 6)) + (d02 * ipow<T>(c00, 2) * ipow<T>(c01, 4)) + (d02 * ipow<T>(c00, 4) * ipow<T>(c02, 2)) + (T(-1) * c00 * d01 * ipow<T>(c01, 5)) + (T(-1) * c02 * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 3)) + (T(2) * c02 * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 2)))) / (ipow<T>(c01, 9)));
  r.e10 = ((((d10 * ipow<T>(c01, 10)) + (c11 * d00 * ipow<T>(c01, 9)) + (T(-1) * c00 * d11 * ipow<T>(c01, 9)) + (T(-1) * c10 * d01 * ipow<T>(c01, 9)) + (c02 * d11 * ipow<T>(c00, 2) * ipow<T>(c01, 7)) + (T(-1) * c11 * d02 * ipow<T>(c00, 2) * ipow<T>(c01, 7)) + (T(-12) * c10 * d02 * ipow<T>(c00, 5) * ipow<T>(c02, 4)) + (T(-2) * c00 * c02 * d10 * ipow<T>(c01, 8)) + (T(-2) * c02 * c10 * d00 * ipow<T>(c01, 8)) + (T(-2) * d10 * ipow<T>(c00, 2) * ipow<T>(c01, 6) * ipow<T>(c02, 2)) + (T(2) * c00 * c10 * d02 * ipow<T>(c01, 8)) + (T(2) * d11 * ipow<T>(c00, 4) * ipow<T>(c01, 3) * ipow<T>(c02, 3)) + (T(4) * d11 * ipow<T>(c00, 3) * ipow<T>(c01, 5) * ipow<T>(c02, 2)) + (T(-30) * c10 * d02 * ipow<T>(c00, 4) * ipow<T>(c01, 2) * ipow<T>(c02, 3)) + (T(-20) * c10 * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 4) * ipow<T>(c02, 2)) + (T(-5) * c02 * c11 * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 6)) + (T(-4) * c00 * c10 * d00 * ipow<T>(c01, 6) * ipow<T>(c02, 2)) + (T(-4) * c11 * d01 * ipow<T>(c00, 3) * ipow<T>(c01, 4) * ipow<T>(c02, 2)) + (T(2) * c00 * c02 * c10 * d01 * ipow<T>(c01, 7)) + (T(2) * c00 * c02 * c11 * d00 * ipow<T>(c01, 7)) + (T(6) * c01 * c11 * d02 * ipow<T>(c00, 5) * ipow<T>(c02, 3)) + (T(6) * c02 * c11 * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 5)) + (T(8) * c10 * d01 * ipow<T>(c00, 3) * ipow<T>(c01, 3) * ipow<T>(c02, 3)) + (T(12) * c10 * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 5) * ipow<T>(c02, 2)) + (T(13) * c11 * d02 * ipow<T>(c00, 4) * ipow<T>(c01, 3) * ipow<T>(c02, 2)))) / (ipow<T>(c01, 9)));
  r.e01 = ((((c10 * ipow<T>(c01, 9)) + (d01 * ipow<T>(c01, 9)) + (T(-1) * c00 * c11 * ipow<T>(c01, 8)) + (T(-2) * c00 * d02 * ipow<T>(c01, 8)) + (T(2) * c02 * d00 * ipow<T>(c01, 8)) + (T(12) * d02 * ipow<T>(c00, 5) * ipow<T>(c02, 4)) + (T(-1) * c02 * c11 * ipow<T>(c00, 2) * ipow<T>(c01, 6)) + (T(-12) * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 5) * ipow<T>(c02, 2)) + (T(-8) * d01 * ipow<T>(c00, 3) * ipow<T>(c01, 3) * ipow<T>(c02, 3)) + (T(-2) * c00 * c02 * d01 * ipow<T>(c01, 7)) + (T(4) * c00 * d00 * ipow<T>(c01, 6) * ipow<T>(c02, 2)) + (T(20) * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 4) * ipow<T>(c02, 2)) + (T(30) * d02 * ipow<T>(c00, 4) * ipow<T>(c01, 2) * ipow<T>(c02, 3)))) / (ipow<T>(c01, 9)));
  r.e20 = ((T(-1) * ((T(-1) * d20 * ipow<T>(c01, 10)) + (c10 * d11 * ipow<T>(c01, 9)) + (c20 * d01 * ipow<T>(c01, 9)) + (T(-1) * c11 * d10 * ipow<T>(c01, 9)) + (T(-1) * d02 * ipow<T>(c01, 8) * ipow<T>(c10, 2)) + (d02 * ipow<T>(c00, 2) * ipow<T>(c01, 6) * ipow<T>(c11, 2)) + (T(-1) * c00 * d01 * ipow<T>(c01, 7) * ipow<T>(c11, 2)) + (T(-1) * c02 * d01 * ipow<T>(c01, 7) * ipow<T>(c10, 2)) + (T(-2) * c00 * c20 * d02 * ipow<T>(c01, 8)) + (T(2) * c00 * c02 * d20 * ipow<T>(c01, 8)) + (T(2) * c02 * c10 * d10 * ipow<T>(c01, 8)) + (T(2) * c02 * c20 * d00 * ipow<T>(c01, 8)) + (T(2) * d00 * ipow<T>(c01, 6) * ipow<T>(c02, 2) * ipow<T>(c10, 2)) + (T(2) * d20 * ipow<T>(c00, 2) * ipow<T>(c01, 6) * ipow<T>(c02, 2)) + (T(30) * d02 * ipow<T>(c00, 4) * ipow<T>(c02, 4) * ipow<T>(c10, 2)) + (T(-12) * c00 * d01 * ipow<T>(c01, 5) * ipow<T>(c02, 2) * ipow<T>(c10, 2)) + (T(-12) * c10 * d11 * ipow<T>(c00, 2) * ipow<T>(c01, 5) * ipow<T>(c02, 2)) + (T(-12) * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 3) * ipow<T>(c02, 3) * ipow<T>(c10, 2)) + (T(-8) * c10 * d11 * ipow<T>(c00, 3) * ipow<T>(c01, 3) * ipow<T>(c02, 3)) + (T(-4) * c00 * c02 * c20 * d01 * ipow<T>(c01, 7)) + (T(-4) * c20 * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 5) * ipow<T>(c02, 2)) + (T(-2) * c00 * c02 * c10 * d11 * ipow<T>(c01, 7)) + (T(-2) * c00 * c02 * c11 * d10 * ipow<T>(c01, 7)) + (T(-2) * c02 * c10 * c11 * d00 * ipow<T>(c01, 7)) + (T(-2) * c02 * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 5) * ipow<T>(c11, 2)) + (T(2) * c00 * c10 * c11 * d02 * ipow<T>(c01, 7)) + (T(4) * c00 * c10 * d10 * ipow<T>(c01, 6) * ipow<T>(c02, 2)) + (T(4) * c02 * c20 * d02 * ipow<T>(c00, 2) * ipow<T>(c01, 6)) + (T(4) * c11 * d11 * ipow<T>(c00, 3) * ipow<T>(c01, 4) * ipow<T>(c02, 2)) + (T(5) * c02 * c11 * d11 * ipow<T>(c00, 2) * ipow<T>(c01, 6)) + (T(6) * c20 * d02 * ipow<T>(c00, 4) * ipow<T>(c01, 2) * ipow<T>(c02, 3)) + (T(6) * d02 * ipow<T>(c00, 4) * ipow<T>(c01, 2) * ipow<T>(c02, 2) * ipow<T>(c11, 2)) + (T(8) * c02 * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 4) * ipow<T>(c11, 2)) + (T(12) * c20 * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 4) * ipow<T>(c02, 2)) + (T(30) * d02 * ipow<T>(c00, 2) * ipow<T>(c01, 4) * ipow<T>(c02, 2) * ipow<T>(c10, 2)) + (T(60) * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 2) * ipow<T>(c02, 3) * ipow<T>(c10, 2)) + (T(-52) * c10 * c11 * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 3) * ipow<T>(c02, 2)) + (T(-30) * c01 * c10 * c11 * d02 * ipow<T>(c00, 4) * ipow<T>(c02, 3)) + (T(-18) * c02 * c10 * c11 * d02 * ipow<T>(c00, 2) * ipow<T>(c01, 5)) + (T(10) * c00 * c02 * c10 * c11 * d01 * ipow<T>(c01, 6)) + (T(12) * c10 * c11 * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 4) * ipow<T>(c02, 2)))) / (ipow<T>(c01, 9)));
  r.e02 = ((T(-1) * ((T(-1) * c11 * ipow<T>(c01, 8)) + (T(-1) * d02 * ipow<T>(c01, 8)) + (T(-1) * c02 * d01 * ipow<T>(c01, 7)) + (T(2) * d00 * ipow<T>(c01, 6) * ipow<T>(c02, 2)) + (T(30) * d02 * ipow<T>(c00, 4) * ipow<T>(c02, 4)) + (T(-12) * c00 * d01 * ipow<T>(c01, 5) * ipow<T>(c02, 2)) + (T(-12) * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 3) * ipow<T>(c02, 3)) + (T(-2) * c00 * c02 * c11 * ipow<T>(c01, 6)) + (T(30) * d02 * ipow<T>(c00, 2) * ipow<T>(c01, 4) * ipow<T>(c02, 2)) + (T(60) * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 2) * ipow<T>(c02, 3)))) / (ipow<T>(c01, 9)));
  r.e11 = ((T(-1) * ((T(-1) * d11 * ipow<T>(c01, 9)) + (T(-2) * c20 * ipow<T>(c01, 9)) + (c10 * c11 * ipow<T>(c01, 8)) + (T(-1) * c00 * ipow<T>(c01, 7) * ipow<T>(c11, 2)) + (T(-2) * c02 * d10 * ipow<T>(c01, 8)) + (T(2) * c10 * d02 * ipow<T>(c01, 8)) + (T(-60) * c10 * d02 * ipow<T>(c00, 4) * ipow<T>(c02, 4)) + (T(-4) * c00 * d10 * ipow<T>(c01, 6) * ipow<T>(c02, 2)) + (T(-4) * c10 * d00 * ipow<T>(c01, 6) * ipow<T>(c02, 2)) + (T(-2) * c00 * c11 * d02 * ipow<T>(c01, 7)) + (T(2) * c00 * c02 * d11 * ipow<T>(c01, 7)) + (T(2) * c02 * c10 * d01 * ipow<T>(c01, 7)) + (T(2) * c02 * c11 * d00 * ipow<T>(c01, 7)) + (T(8) * d11 * ipow<T>(c00, 3) * ipow<T>(c01, 3) * ipow<T>(c02, 3)) + (T(12) * d11 * ipow<T>(c00, 2) * ipow<T>(c01, 5) * ipow<T>(c02, 2)) + (T(-120) * c10 * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 2) * ipow<T>(c02, 3)) + (T(-60) * c10 * d02 * ipow<T>(c00, 2) * ipow<T>(c01, 4) * ipow<T>(c02, 2)) + (T(-12) * c11 * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 4) * ipow<T>(c02, 2)) + (T(-10) * c00 * c02 * c11 * d01 * ipow<T>(c01, 6)) + (T(2) * c00 * c02 * c10 * c11 * ipow<T>(c01, 6)) + (T(18) * c02 * c11 * d02 * ipow<T>(c00, 2) * ipow<T>(c01, 5)) + (T(24) * c00 * c10 * d01 * ipow<T>(c01, 5) * ipow<T>(c02, 2)) + (T(24) * c10 * d01 * ipow<T>(c00, 2) * ipow<T>(c01, 3) * ipow<T>(c02, 3)) + (T(30) * c01 * c11 * d02 * ipow<T>(c00, 4) * ipow<T>(c02, 3)) + (T(52) * c11 * d02 * ipow<T>(c00, 3) * ipow<T>(c01, 3) * ipow<T>(c02, 2)))) / (ipow<T>(c01, 9)));
  return r;
}

template <class T>
bt_curve_terms<T> eval_bt_curve_terms(const T& xs, const T& h) {
  bt_curve_terms<T> r;
  r.g01 = ((T(-1) * ((h * (T(6) + (T(-15) * ipow<T>(xs, 2)) + (T(3) * ipow<T>(xs, 4)))) + (ipow<T>(h, 3) * ipow<T>(xs, 4)) + (T(-1) * (T(-6) + ipow<T>(xs, 2)) * (T(-2) + ipow<T>(xs, 2))) + (T(-1) * ipow<T>(h, 2) * ipow<T>(xs, 2) * (T(-7) + (T(3) * ipow<T>(xs, 2)))))) / (T(2) * ipow<T>(xs, 3) * ((h * (T(3) + (T(-18) * ipow<T>(xs, 2)) + (T(11) * ipow<T>(xs, 4)))) + (ipow<T>(h, 3) * (T(3) + (T(-22) * ipow<T>(xs, 2)) + (T(26) * ipow<T>(xs, 4)))) + (T(-2) * ipow<T>(xs, 2) * (T(-2) + ipow<T>(xs, 2))) + (T(3) * ipow<T>(h, 5) * ipow<T>(xs, 4)) + (T(-1) * ipow<T>(h, 2) * (T(-1) + (T(4) * ipow<T>(xs, 2))) * (T(-6) + (T(6) * ipow<T>(xs, 2)))) + (T(-2) * ipow<T>(h, 4) * ipow<T>(xs, 2) * (T(-3) + (T(7) * ipow<T>(xs, 2)))))));
  r.g10 = ((((T(-1) * ipow<T>(h, 3) * (T(108) + (T(-20378) * ipow<T>(xs, 10)) + (T(-18657) * ipow<T>(xs, 4)) + (T(-1931) * ipow<T>(xs, 14)) + (T(129) * ipow<T>(xs, 16)) + (T(2628) * ipow<T>(xs, 2)) + (T(6947) * ipow<T>(xs, 8)) + (T(10077) * ipow<T>(xs, 12)) + (T(21402) * ipow<T>(xs, 6)))) + (T(-1) * ipow<T>(h, 11) * ipow<T>(xs, 16)) + (ipow<T>(h, 2) * (T(-6) + ipow<T>(xs, 2)) * (T(144) + (T(-2004) * ipow<T>(xs, 2)) + (T(-1994) * ipow<T>(xs, 6)) + (T(-1872) * ipow<T>(xs, 8)) + (T(-525) * ipow<T>(xs, 12)) + (T(46) * ipow<T>(xs, 14)) + (T(1889) * ipow<T>(xs, 10)) + (T(4366) * ipow<T>(xs, 4)))) + (ipow<T>(h, 4) * ipow<T>(xs, 2) * (T(-612) + (T(-22065) * ipow<T>(xs, 8)) + (T(-3143) * ipow<T>(xs, 12)) + (T(-1482) * ipow<T>(xs, 2)) + (T(246) * ipow<T>(xs, 14)) + (T(6986) * ipow<T>(xs, 4)) + (T(7298) * ipow<T>(xs, 6)) + (T(13597) * ipow<T>(xs, 10)))) + (ipow<T>(h, 6) * ipow<T>(xs, 6) * (T(-1876) + (T(-10596) * ipow<T>(xs, 4)) + (T(-3031) * ipow<T>(xs, 8)) + (T(336) * ipow<T>(xs, 10)) + (T(5950) * ipow<T>(xs, 2)) + (T(8949) * ipow<T>(xs, 6)))) + (ipow<T>(h, 8) * ipow<T>(xs, 10) * (T(-628) + (T(-726) * ipow<T>(xs, 4)) + (T(129) * ipow<T>(xs, 6)) + (T(1202) * ipow<T>(xs, 2)))) + (T(-1) * ipow<T>(h, 5) * ipow<T>(xs, 4) * (T(1455) + (T(-18001) * ipow<T>(xs, 6)) + (T(-3633) * ipow<T>(xs, 10)) + (T(-3410) * ipow<T>(xs, 2)) + (T(336) * ipow<T>(xs, 12)) + (T(9172) * ipow<T>(xs, 4)) + (T(13045) * ipow<T>(xs, 8)))) + (T(-1) * ipow<T>(h, 7) * ipow<T>(xs, 8) * (T(1415) + (T(-3856) * ipow<T>(xs, 2)) + (T(-1801) * ipow<T>(xs, 6)) + (T(246) * ipow<T>(xs, 8)) + (T(4199) * ipow<T>(xs, 4)))) + (T(-1) * ipow<T>(h, 9) * ipow<T>(xs, 12) * (T(157) + (T(-178) * ipow<T>(xs, 2)) + (T(46) * ipow<T>(xs, 4)))) + (T(10) * ipow<T>(h, 10) * ipow<T>(xs, 14) * (T(-2) + ipow<T>(xs, 2))) + (ipow<T>((T(1) + xs), 2) * ipow<T>((T(-1) + xs), 2) * ipow<T>((T(-6) + ipow<T>(xs, 2)), 3) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(1) + ipow<T>(xs, 2))) + (T(-1) * h * ipow<T>((T(-6) + ipow<T>(xs, 2)), 2) * (T(-1) + ipow<T>(xs, 2)) * (T(-2) + ipow<T>(xs, 2)) * (T(-36) + (T(-51) * ipow<T>(xs, 6)) + (T(9) * ipow<T>(xs, 4)) + (T(10) * ipow<T>(xs, 8)) + (T(88) * ipow<T>(xs, 2)))))) / (ipow<T>(xs, 3) * ((T(4) * ipow<T>(h, 4) * (T(81) + (T(-425320) * ipow<T>(xs, 10)) + (T(-159048) * ipow<T>(xs, 14)) + (T(-94296) * ipow<T>(xs, 6)) + (T(-1944) * ipow<T>(xs, 2)) + (T(18684) * ipow<T>(xs, 4)) + (T(26841) * ipow<T>(xs, 16)) + (T(267390) * ipow<T>(xs, 8)) + (T(367452) * ipow<T>(xs, 12)))) + (T(4) * ipow<T>(h, 5) * (T(-162) + (T(-685440) * ipow<T>(xs, 12)) + (T(-431196) * ipow<T>(xs, 8)) + (T(-60642) * ipow<T>(xs, 16)) + (T(-29376) * ipow<T>(xs, 4)) + (T(3240) * ipow<T>(xs, 2)) + (T(147480) * ipow<T>(xs, 6)) + (T(326088) * ipow<T>(xs, 14)) + (T(729624) * ipow<T>(xs, 10)))) + (T(4) * ipow<T>(h, 6) * (T(81) + (T(-886088) * ipow<T>(xs, 10)) + (T(-493728) * ipow<T>(xs, 14)) + (T(-145488) * ipow<T>(xs, 6)) + (T(-2376) * ipow<T>(xs, 2)) + (T(25704) * ipow<T>(xs, 4)) + (T(102477) * ipow<T>(xs, 16)) + (T(471874) * ipow<T>(xs, 8)) + (T(928368) * ipow<T>(xs, 12)))) + (T(64) * ipow<T>(xs, 8) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 4)) + (T(324) * ipow<T>(h, 14) * ipow<T>(xs, 16)) + (T(-216) * ipow<T>(h, 13) * ipow<T>(xs, 14) * (T(-12) + (T(19) * ipow<T>(xs, 2)))) + (T(-96) * ipow<T>(h, 11) * ipow<T>(xs, 10) * (T(-189) + (T(-1692) * ipow<T>(xs, 4)) + (T(904) * ipow<T>(xs, 6)) + (T(999) * ipow<T>(xs, 2)))) + (T(-32) * ipow<T>(h, 7) * ipow<T>(xs, 2) * (T(-81) + (T(-95299) * ipow<T>(xs, 8)) + (T(-69876) * ipow<T>(xs, 12)) + (T(-11070) * ipow<T>(xs, 4)) + (T(1485) * ipow<T>(xs, 2)) + (T(16449) * ipow<T>(xs, 14)) + (T(43428) * ipow<T>(xs, 6)) + (T(115002) * ipow<T>(xs, 10)))) + (T(-16) * ipow<T>(h, 9) * ipow<T>(xs, 6) * (T(-1134) + (T(-74012) * ipow<T>(xs, 8)) + (T(-45090) * ipow<T>(xs, 4)) + (T(11475) * ipow<T>(xs, 2)) + (T(24043) * ipow<T>(xs, 10)) + (T(84408) * ipow<T>(xs, 6)))) + (T(8) * ipow<T>(h, 10) * ipow<T>(xs, 8) * (T(2835) + (T(-66480) * ipow<T>(xs, 6)) + (T(-21276) * ipow<T>(xs, 2)) + (T(26813) * ipow<T>(xs, 8)) + (T(57888) * ipow<T>(xs, 4)))) + (T(24) * ipow<T>(h, 8) * ipow<T>(xs, 4) * (T(378) + (T(-78888) * ipow<T>(xs, 10)) + (T(-75956) * ipow<T>(xs, 6)) + (T(-5076) * ipow<T>(xs, 2)) + (T(21507) * ipow<T>(xs, 12)) + (T(27531) * ipow<T>(xs, 4)) + (T(110364) * ipow<T>(xs, 8)))) + (T(108) * ipow<T>(h, 12) * ipow<T>(xs, 12) * (T(84) + (T(-280) * ipow<T>(xs, 2)) + (T(223) * ipow<T>(xs, 4)))) + (T(-128) * h * ipow<T>(xs, 6) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 3) * (T(3) + (T(-12) * ipow<T>(xs, 2)) + (T(8) * ipow<T>(xs, 4)))) + (T(-32) * ipow<T>(h, 3) * ipow<T>(xs, 2) * (T(-2) + ipow<T>(xs, 2)) * (T(27) + (T(-5840) * ipow<T>(xs, 6)) + (T(-4806) * ipow<T>(xs, 10)) + (T(-378) * ipow<T>(xs, 2)) + (T(1077) * ipow<T>(xs, 12)) + (T(2127) * ipow<T>(xs, 4)) + (T(7821) * ipow<T>(xs, 8)))) + (T(96) * ipow<T>(h, 2) * ipow<T>(xs, 4) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(9) + (T(-236) * ipow<T>(xs, 6)) + (T(-76) * ipow<T>(xs, 2)) + (T(79) * ipow<T>(xs, 8)) + (T(222) * ipow<T>(xs, 4)))))));
  r.h01 = ((T(-1) * (T(6) + (T(-1) * ipow<T>(xs, 2)) + (h * ipow<T>(xs, 2))) * ((ipow<T>(h, 4) * ipow<T>(xs, 6)) + (ipow<T>(h, 2) * ipow<T>(xs, 2) * (T(5) + (T(-12) * ipow<T>(xs, 2)) + (T(6) * ipow<T>(xs, 4)))) + (ipow<T>((T(1) + xs), 2) * ipow<T>((T(-1) + xs), 2) * (T(-2) + ipow<T>(xs, 2))) + (T(-1) * h * (T(-2) + (T(2) * ipow<T>(xs, 2))) * (T(1) + (T(-4) * ipow<T>(xs, 2)) + (T(2) * ipow<T>(xs, 4)))) + (T(-4) * ipow<T>(h, 3) * ipow<T>(xs, 4) * (T(-1) + ipow<T>(xs, 2))))) / (((T(-2) * ipow<T>(xs, 2) * (T(-2) + ipow<T>(xs, 2))) + (T(3) * ipow<T>(h, 3) * ipow<T>(xs, 4)) + (h * (T(-1) + ipow<T>(xs, 2)) * (T(-3) + (T(7) * ipow<T>(xs, 2)))) + (T(-2) * ipow<T>(h, 2) * ipow<T>(xs, 2) * (T(-3) + (T(4) * ipow<T>(xs, 2))))) * (T(-8) + (T(4) * h) + (T(4) * ipow<T>(xs, 2)) + (T(-8) * h * ipow<T>(xs, 2)) + (T(4) * ipow<T>(h, 2) * ipow<T>(xs, 2)))));
  r.h10 = ((((ipow<T>(h, 4) * ipow<T>(xs, 8)) + (ipow<T>((T(-1) + ipow<T>(xs, 2)), 2) * ipow<T>((T(-6) + ipow<T>(xs, 2)), 2)) + (ipow<T>(h, 2) * ipow<T>(xs, 4) * (T(61) + (T(-42) * ipow<T>(xs, 2)) + (T(6) * ipow<T>(xs, 4)))) + (T(-2) * ipow<T>(h, 3) * ipow<T>(xs, 6) * (T(-7) + (T(2) * ipow<T>(xs, 2)))) + (T(-2) * h * ipow<T>(xs, 2) * (T(-1) + ipow<T>(xs, 2)) * (T(-7) + (T(2) * ipow<T>(xs, 2))) * (T(-6) + ipow<T>(xs, 2)))) * ((T(-1) * ipow<T>(h, 3) * (T(30) + (T(-5424) * ipow<T>(xs, 6)) + (T(-1848) * ipow<T>(xs, 10)) + (T(-490) * ipow<T>(xs, 2)) + (T(231) * ipow<T>(xs, 12)) + (T(2628) * ipow<T>(xs, 4)) + (T(4850) * ipow<T>(xs, 8)))) + (T(-3) * ipow<T>(h, 9) * ipow<T>(xs, 12)) + (ipow<T>(h, 2) * (T(-1) + ipow<T>(xs, 2)) * (T(-66) + (T(-2299) * ipow<T>(xs, 4)) + (T(-865) * ipow<T>(xs, 8)) + (T(101) * ipow<T>(xs, 10)) + (T(791) * ipow<T>(xs, 2)) + (T(2277) * ipow<T>(xs, 6)))) + (ipow<T>(h, 4) * ipow<T>(xs, 2) * (T(-141) + (T(-3781) * ipow<T>(xs, 4)) + (T(-2240) * ipow<T>(xs, 8)) + (T(343) * ipow<T>(xs, 10)) + (T(1244) * ipow<T>(xs, 2)) + (T(4595) * ipow<T>(xs, 6)))) + (ipow<T>(h, 6) * ipow<T>(xs, 6) * (T(-258) + (T(-882) * ipow<T>(xs, 4)) + (T(231) * ipow<T>(xs, 6)) + (T(896) * ipow<T>(xs, 2)))) + (ipow<T>(h, 8) * ipow<T>(xs, 10) * (T(-33) + (T(26) * ipow<T>(xs, 2)))) + (ipow<T>((T(-1) + ipow<T>(xs, 2)), 3) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(-18) + (T(3) * ipow<T>(xs, 2)))) + (T(-1) * ipow<T>(h, 5) * ipow<T>(xs, 4) * (T(267) + (T(-1764) * ipow<T>(xs, 6)) + (T(-1486) * ipow<T>(xs, 2)) + (T(343) * ipow<T>(xs, 8)) + (T(2683) * ipow<T>(xs, 4)))) + (T(-1) * ipow<T>(h, 7) * ipow<T>(xs, 8) * (T(132) + (T(-256) * ipow<T>(xs, 2)) + (T(101) * ipow<T>(xs, 4)))) + (T(-1) * h * ipow<T>((T(-1) + ipow<T>(xs, 2)), 2) * (T(-2) + ipow<T>(xs, 2)) * (T(-54) + (T(-188) * ipow<T>(xs, 4)) + (T(26) * ipow<T>(xs, 6)) + (T(269) * ipow<T>(xs, 2)))))) / ((T(-16) + (T(8) * h) + (T(8) * ipow<T>(xs, 2)) + (T(-16) * h * ipow<T>(xs, 2)) + (T(8) * ipow<T>(h, 2) * ipow<T>(xs, 2))) * ((ipow<T>(h, 4) * (T(81) + (T(-192616) * ipow<T>(xs, 10)) + (T(-80392) * ipow<T>(xs, 14)) + (T(-41592) * ipow<T>(xs, 6)) + (T(-1080) * ipow<T>(xs, 2)) + (T(8748) * ipow<T>(xs, 4)) + (T(14353) * ipow<T>(xs, 16)) + (T(117334) * ipow<T>(xs, 8)) + (T(175260) * ipow<T>(xs, 12)))) + (T(16) * ipow<T>(xs, 8) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 4)) + (T(81) * ipow<T>(h, 12) * ipow<T>(xs, 16)) + (T(-216) * ipow<T>(h, 11) * ipow<T>(xs, 14) * (T(-3) + (T(4) * ipow<T>(xs, 2)))) + (T(-24) * ipow<T>(h, 9) * ipow<T>(xs, 10) * (T(-189) + (T(-1143) * ipow<T>(xs, 4)) + (T(517) * ipow<T>(xs, 6)) + (T(810) * ipow<T>(xs, 2)))) + (T(-8) * ipow<T>(h, 5) * ipow<T>(xs, 2) * (T(-81) + (T(-30559) * ipow<T>(xs, 8)) + (T(-16359) * ipow<T>(xs, 12)) + (T(-5157) * ipow<T>(xs, 4)) + (T(918) * ipow<T>(xs, 2)) + (T(3301) * ipow<T>(xs, 14)) + (T(16509) * ipow<T>(xs, 6)) + (T(31464) * ipow<T>(xs, 10)))) + (T(-8) * ipow<T>(h, 7) * ipow<T>(xs, 6) * (T(-567) + (T(-15619) * ipow<T>(xs, 8)) + (T(-13608) * ipow<T>(xs, 4)) + (T(4320) * ipow<T>(xs, 2)) + (T(4321) * ipow<T>(xs, 10)) + (T(21117) * ipow<T>(xs, 6)))) + (T(2) * ipow<T>(h, 8) * ipow<T>(xs, 8) * (T(2835) + (T(-35916) * ipow<T>(xs, 6)) + (T(-16740) * ipow<T>(xs, 2)) + (T(12299) * ipow<T>(xs, 8)) + (T(37314) * ipow<T>(xs, 4)))) + (T(4) * ipow<T>(h, 6) * ipow<T>(xs, 4) * (T(567) + (T(-51132) * ipow<T>(xs, 6)) + (T(-37898) * ipow<T>(xs, 10)) + (T(-5346) * ipow<T>(xs, 2)) + (T(8827) * ipow<T>(xs, 12)) + (T(22599) * ipow<T>(xs, 4)) + (T(62421) * ipow<T>(xs, 8)))) + (T(108) * ipow<T>(h, 10) * ipow<T>(xs, 12) * (T(21) + (T(-58) * ipow<T>(xs, 2)) + (T(39) * ipow<T>(xs, 4)))) + (T(-8) * ipow<T>(h, 3) * ipow<T>(xs, 2) * (T(-2) + ipow<T>(xs, 2)) * (T(27) + (T(-3376) * ipow<T>(xs, 6)) + (T(-2922) * ipow<T>(xs, 10)) + (T(-270) * ipow<T>(xs, 2)) + (T(691) * ipow<T>(xs, 12)) + (T(1305) * ipow<T>(xs, 4)) + (T(4557) * ipow<T>(xs, 8)))) + (T(8) * ipow<T>(h, 2) * ipow<T>(xs, 4) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(27) + (T(-508) * ipow<T>(xs, 6)) + (T(-180) * ipow<T>(xs, 2)) + (T(179) * ipow<T>(xs, 8)) + (T(474) * ipow<T>(xs, 4)))) + (T(-32) * h * ipow<T>(xs, 6) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 3) * (T(-1) + ipow<T>(xs, 2)) * (T(-3) + (T(7) * ipow<T>(xs, 2)))))));
  r.f11 = ((((T(2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2)) + (T(2) * ipow<T>(h, 2) * (T(1) + (T(-8) * ipow<T>(xs, 2)) + (T(6) * ipow<T>(xs, 4)))) + (T(2) * ipow<T>(h, 4) * ipow<T>(xs, 4)) + (T(-4) * ipow<T>(h, 3) * ipow<T>(xs, 2) * (T(-1) + (T(2) * ipow<T>(xs, 2)))) + (T(-2) * h * (T(-1) + (T(2) * ipow<T>(xs, 2))) * (T(-4) + (T(2) * ipow<T>(xs, 2)))))) / (ipow<T>(xs, 3) * ((ipow<T>(h, 2) * (T(-6) + (T(-40) * ipow<T>(xs, 4)) + (T(15) * ipow<T>(xs, 6)) + (T(30) * ipow<T>(xs, 2)))) + (ipow<T>(h, 3) * (T(2) + (T(-20) * ipow<T>(xs, 2)) + (T(-20) * ipow<T>(xs, 6)) + (T(40) * ipow<T>(xs, 4)))) + (ipow<T>(h, 6) * ipow<T>(xs, 6)) + (ipow<T>((T(-1) + ipow<T>(xs, 2)), 2) * (T(-2) + ipow<T>(xs, 2))) + (T(-1) * h * (T(-2) + (T(2) * ipow<T>(xs, 2))) * (T(3) + (T(-7) * ipow<T>(xs, 2)) + (T(3) * ipow<T>(xs, 4)))) + (T(-2) * ipow<T>(h, 5) * ipow<T>(xs, 4) * (T(-2) + (T(3) * ipow<T>(xs, 2)))) + (T(5) * ipow<T>(h, 4) * ipow<T>(xs, 2) * (T(-1) + ipow<T>(xs, 2)) * (T(-1) + (T(3) * ipow<T>(xs, 2)))))));
  r.f12 = ((((T(-2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 3)) + (T(-2) * ipow<T>(h, 6) * ipow<T>(xs, 6)) + (T(2) * h * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(-3) + (T(6) * ipow<T>(xs, 2)))) + (T(2) * ipow<T>(h, 3) * (T(-1) + (T(2) * ipow<T>(xs, 2))) * (T(1) + (T(-16) * ipow<T>(xs, 2)) + (T(10) * ipow<T>(xs, 4)))) + (T(6) * ipow<T>(h, 5) * ipow<T>(xs, 4) * (T(-1) + (T(2) * ipow<T>(xs, 2)))) + (T(-6) * ipow<T>(h, 4) * ipow<T>(xs, 2) * (T(-1) + ipow<T>(xs, 2)) * (T(-1) + (T(5) * ipow<T>(xs, 2)))) + (T(-2) * ipow<T>(h, 2) * (T(-1) + (T(5) * ipow<T>(xs, 2))) * (T(-3) + (T(3) * ipow<T>(xs, 2))) * (T(-2) + ipow<T>(xs, 2))))) / (ipow<T>(xs, 3) * ((ipow<T>(h, 3) * (T(-16) + (T(-500) * ipow<T>(xs, 4)) + (T(-392) * ipow<T>(xs, 8)) + (T(84) * ipow<T>(xs, 10)) + (T(160) * ipow<T>(xs, 2)) + (T(665) * ipow<T>(xs, 6)))) + (ipow<T>(h, 4) * (T(4) + (T(-665) * ipow<T>(xs, 6)) + (T(-126) * ipow<T>(xs, 10)) + (T(-80) * ipow<T>(xs, 2)) + (T(375) * ipow<T>(xs, 4)) + (T(490) * ipow<T>(xs, 8)))) + (ipow<T>(h, 9) * ipow<T>(xs, 10)) + (T(-1) * ipow<T>((T(-1) + ipow<T>(xs, 2)), 3) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2)) + (ipow<T>(h, 5) * ipow<T>(xs, 2) * (T(16) + (T(-392) * ipow<T>(xs, 6)) + (T(-150) * ipow<T>(xs, 2)) + (T(126) * ipow<T>(xs, 8)) + (T(399) * ipow<T>(xs, 4)))) + (T(-1) * ipow<T>(h, 6) * ipow<T>(xs, 4) * (T(-25) + (T(-196) * ipow<T>(xs, 4)) + (T(84) * ipow<T>(xs, 6)) + (T(133) * ipow<T>(xs, 2)))) + (T(-1) * ipow<T>(h, 8) * ipow<T>(xs, 8) * (T(-7) + (T(9) * ipow<T>(xs, 2)))) + (h * ipow<T>((T(-1) + ipow<T>(xs, 2)), 2) * (T(-2) + ipow<T>(xs, 2)) * (T(8) + (T(-20) * ipow<T>(xs, 2)) + (T(9) * ipow<T>(xs, 4)))) + (ipow<T>(h, 7) * ipow<T>(xs, 6) * (T(-1) + (T(2) * ipow<T>(xs, 2))) * (T(-19) + (T(18) * ipow<T>(xs, 2)))) + (T(-1) * ipow<T>(h, 2) * (T(-1) + ipow<T>(xs, 2)) * (T(-3) + (T(2) * ipow<T>(xs, 2))) * (T(-8) + (T(-53) * ipow<T>(xs, 4)) + (T(18) * ipow<T>(xs, 6)) + (T(40) * ipow<T>(xs, 2)))))));
  r.f22 = ((((T(-20) * ipow<T>(h, 12) * ipow<T>(xs, 14)) + (T(-2) * ipow<T>(h, 5) * (T(15) + (T(-67876) * ipow<T>(xs, 10)) + (T(-37848) * ipow<T>(xs, 6)) + (T(-5400) * ipow<T>(xs, 14)) + (T(-815) * ipow<T>(xs, 2)) + (T(9146) * ipow<T>(xs, 4)) + (T(30912) * ipow<T>(xs, 12)) + (T(71899) * ipow<T>(xs, 8)))) + (T(-2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 5) * (T(6) + (T(-7) * ipow<T>(xs, 2)) + (T(5) * ipow<T>(xs, 4)))) + (T(-2) * ipow<T>(h, 2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 3) * (T(69) + (T(-1113) * ipow<T>(xs, 6)) + (T(-536) * ipow<T>(xs, 2)) + (T(375) * ipow<T>(xs, 8)) + (T(1223) * ipow<T>(xs, 4)))) + (T(-2) * ipow<T>(h, 4) * (T(-2) + ipow<T>(xs, 2)) * (T(57) + (T(-22374) * ipow<T>(xs, 6)) + (T(-15114) * ipow<T>(xs, 10)) + (T(-1345) * ipow<T>(xs, 2)) + (T(3180) * ipow<T>(xs, 12)) + (T(8640) * ipow<T>(xs, 4)) + (T(26951) * ipow<T>(xs, 8)))) + (T(-2) * ipow<T>(h, 6) * ipow<T>(xs, 2) * (T(100) + (T(-44954) * ipow<T>(xs, 6)) + (T(-31710) * ipow<T>(xs, 10)) + (T(-2479) * ipow<T>(xs, 2)) + (T(6678) * ipow<T>(xs, 12)) + (T(16665) * ipow<T>(xs, 4)) + (T(55751) * ipow<T>(xs, 8)))) + (T(-2) * ipow<T>(h, 8) * ipow<T>(xs, 6) * (T(450) + (T(-11829) * ipow<T>(xs, 6)) + (T(-4160) * ipow<T>(xs, 2)) + (T(4005) * ipow<T>(xs, 8)) + (T(11465) * ipow<T>(xs, 4)))) + (T(2) * h * ipow<T>((T(-2) + ipow<T>(xs, 2)), 4) * (T(-30) + (T(-138) * ipow<T>(xs, 4)) + (T(64) * ipow<T>(xs, 6)) + (T(121) * ipow<T>(xs, 2)))) + (T(2) * ipow<T>(h, 3) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(-87) + (T(-5099) * ipow<T>(xs, 8)) + (T(-4502) * ipow<T>(xs, 4)) + (T(1152) * ipow<T>(xs, 2)) + (T(1330) * ipow<T>(xs, 10)) + (T(7204) * ipow<T>(xs, 6)))) + (T(2) * ipow<T>(h, 7) * ipow<T>(xs, 4) * (T(-285) + (T(-23178) * ipow<T>(xs, 8)) + (T(-17964) * ipow<T>(xs, 4)) + (T(4160) * ipow<T>(xs, 2)) + (T(6060) * ipow<T>(xs, 10)) + (T(31276) * ipow<T>(xs, 6)))) + (T(2) * ipow<T>(h, 9) * ipow<T>(xs, 8) * (T(-425) + (T(-4014) * ipow<T>(xs, 4)) + (T(1880) * ipow<T>(xs, 6)) + (T(2479) * ipow<T>(xs, 2)))) + (T(6) * ipow<T>(h, 11) * ipow<T>(xs, 12) * (T(-25) + (T(38) * ipow<T>(xs, 2)))) + (T(-10) * ipow<T>(h, 10) * ipow<T>(xs, 10) * (T(-16) + (T(17) * ipow<T>(xs, 2))) * (T(-3) + (T(7) * ipow<T>(xs, 2)))))) / (ipow<T>(xs, 3) * ((ipow<T>(h, 4) * (T(216) + (T(-407484) * ipow<T>(xs, 10)) + (T(-196515) * ipow<T>(xs, 14)) + (T(-116179) * ipow<T>(xs, 6)) + (T(-6994) * ipow<T>(xs, 18)) + (T(-3840) * ipow<T>(xs, 2)) + (T(28695) * ipow<T>(xs, 4)) + (T(57354) * ipow<T>(xs, 16)) + (T(278124) * ipow<T>(xs, 8)) + (T(366615) * ipow<T>(xs, 12)))) + (ipow<T>(h, 5) * (T(-144) + (T(-636552) * ipow<T>(xs, 12)) + (T(-383376) * ipow<T>(xs, 8)) + (T(-121968) * ipow<T>(xs, 16)) + (T(-30084) * ipow<T>(xs, 4)) + (T(3360) * ipow<T>(xs, 2)) + (T(16302) * ipow<T>(xs, 18)) + (T(140805) * ipow<T>(xs, 6)) + (T(378873) * ipow<T>(xs, 14)) + (T(632772) * ipow<T>(xs, 10)))) + (ipow<T>(h, 6) * (T(36) + (T(-698418) * ipow<T>(xs, 10)) + (T(-539946) * ipow<T>(xs, 14)) + (T(-111797) * ipow<T>(xs, 6)) + (T(-28743) * ipow<T>(xs, 18)) + (T(-1536) * ipow<T>(xs, 2)) + (T(19063) * ipow<T>(xs, 4)) + (T(194205) * ipow<T>(xs, 16)) + (T(363678) * ipow<T>(xs, 8)) + (T(803502) * ipow<T>(xs, 12)))) + (T(9) * ipow<T>(h, 15) * ipow<T>(xs, 18)) + (ipow<T>(h, 3) * (T(-2) + ipow<T>(xs, 2)) * (T(72) + (T(-63960) * ipow<T>(xs, 10)) + (T(-27378) * ipow<T>(xs, 6)) + (T(-15186) * ipow<T>(xs, 14)) + (T(-1164) * ipow<T>(xs, 2)) + (T(2197) * ipow<T>(xs, 16)) + (T(7789) * ipow<T>(xs, 4)) + (T(42855) * ipow<T>(xs, 12)) + (T(54771) * ipow<T>(xs, 8)))) + (ipow<T>(h, 7) * ipow<T>(xs, 2) * (T(288) + (T(-743076) * ipow<T>(xs, 10)) + (T(-235224) * ipow<T>(xs, 14)) + (T(-234696) * ipow<T>(xs, 6)) + (T(-6726) * ipow<T>(xs, 2)) + (T(39039) * ipow<T>(xs, 16)) + (T(56243) * ipow<T>(xs, 4)) + (T(548154) * ipow<T>(xs, 8)) + (T(575982) * ipow<T>(xs, 12)))) + (ipow<T>(h, 9) * ipow<T>(xs, 6) * (T(2079) + (T(-238440) * ipow<T>(xs, 6)) + (T(-153428) * ipow<T>(xs, 10)) + (T(-24444) * ipow<T>(xs, 2)) + (T(33748) * ipow<T>(xs, 12)) + (T(108984) * ipow<T>(xs, 4)) + (T(271590) * ipow<T>(xs, 8)))) + (ipow<T>(h, 13) * ipow<T>(xs, 14) * (T(477) + (T(-1320) * ipow<T>(xs, 2)) + (T(862) * ipow<T>(xs, 4)))) + (T(-1) * ipow<T>(h, 10) * ipow<T>(xs, 8) * (T(-2709) + (T(-80949) * ipow<T>(xs, 8)) + (T(-76611) * ipow<T>(xs, 4)) + (T(21307) * ipow<T>(xs, 10)) + (T(23679) * ipow<T>(xs, 2)) + (T(115269) * ipow<T>(xs, 6)))) + (T(-1) * ipow<T>(h, 12) * ipow<T>(xs, 12) * (T(-1323) + (T(-8162) * ipow<T>(xs, 4)) + (T(3562) * ipow<T>(xs, 6)) + (T(5871) * ipow<T>(xs, 2)))) + (T(-4) * ipow<T>(xs, 4) * ipow<T>((T(-1) + ipow<T>(xs, 2)), 3) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 4)) + (T(-3) * ipow<T>(h, 8) * ipow<T>(xs, 4) * (T(-339) + (T(-166590) * ipow<T>(xs, 8)) + (T(-72600) * ipow<T>(xs, 12)) + (T(-32900) * ipow<T>(xs, 4)) + (T(5435) * ipow<T>(xs, 2)) + (T(13728) * ipow<T>(xs, 14)) + (T(99972) * ipow<T>(xs, 6)) + (T(153318) * ipow<T>(xs, 10)))) + (T(-3) * ipow<T>(h, 14) * ipow<T>(xs, 16) * (T(-33) + (T(43) * ipow<T>(xs, 2)))) + (T(3) * ipow<T>(h, 11) * ipow<T>(xs, 10) * (T(777) + (T(-10340) * ipow<T>(xs, 6)) + (T(-4962) * ipow<T>(xs, 2)) + (T(3393) * ipow<T>(xs, 8)) + (T(11101) * ipow<T>(xs, 4)))) + (T(-1) * ipow<T>(h, 2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(-3) + (T(3) * ipow<T>(xs, 2))) * (T(3) + (T(-968) * ipow<T>(xs, 6)) + (T(-734) * ipow<T>(xs, 10)) + (T(-58) * ipow<T>(xs, 2)) + (T(159) * ipow<T>(xs, 12)) + (T(357) * ipow<T>(xs, 4)) + (T(1245) * ipow<T>(xs, 8)))) + (T(4) * h * ipow<T>(xs, 2) * ipow<T>((T(-1) + ipow<T>(xs, 2)), 2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 3) * (T(-3) + (T(-37) * ipow<T>(xs, 4)) + (T(16) * ipow<T>(xs, 6)) + (T(21) * ipow<T>(xs, 2)))))));
  r.f32 = ((((T(-548) * ipow<T>(h, 12) * ipow<T>(xs, 14)) + (T(-2) * ipow<T>(h, 5) * (T(519) + (T(-2185108) * ipow<T>(xs, 10)) + (T(-1349400) * ipow<T>(xs, 6)) + (T(-154008) * ipow<T>(xs, 14)) + (T(-29423) * ipow<T>(xs, 2)) + (T(333434) * ipow<T>(xs, 4)) + (T(936096) * ipow<T>(xs, 12)) + (T(2450755) * ipow<T>(xs, 8)))) + (T(-2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 5) * (T(294) + (T(-343) * ipow<T>(xs, 2)) + (T(149) * ipow<T>(xs, 4)))) + (T(-10) * ipow<T>(h, 8) * ipow<T>(xs, 6) * (T(2898) + (T(-69729) * ipow<T>(xs, 6)) + (T(-26512) * ipow<T>(xs, 2)) + (T(22401) * ipow<T>(xs, 8)) + (T(70765) * ipow<T>(xs, 4)))) + (T(-2) * ipow<T>(h, 2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 3) * (T(3165) + (T(-39561) * ipow<T>(xs, 6)) + (T(-23960) * ipow<T>(xs, 2)) + (T(10959) * ipow<T>(xs, 8)) + (T(50471) * ipow<T>(xs, 4)))) + (T(-2) * ipow<T>(h, 4) * (T(-10) + (T(5) * ipow<T>(xs, 2))) * (T(429) + (T(-164238) * ipow<T>(xs, 6)) + (T(-94866) * ipow<T>(xs, 10)) + (T(-10445) * ipow<T>(xs, 2)) + (T(18276) * ipow<T>(xs, 12)) + (T(66408) * ipow<T>(xs, 4)) + (T(184195) * ipow<T>(xs, 8)))) + (T(-2) * ipow<T>(h, 6) * ipow<T>(xs, 2) * (T(3388) + (T(-1497050) * ipow<T>(xs, 6)) + (T(-951006) * ipow<T>(xs, 10)) + (T(-85903) * ipow<T>(xs, 2)) + (T(189126) * ipow<T>(xs, 12)) + (T(573345) * ipow<T>(xs, 4)) + (T(1768415) * ipow<T>(xs, 8)))) + (T(-2) * ipow<T>(h, 10) * ipow<T>(xs, 10) * (T(7224) + (T(-23663) * ipow<T>(xs, 2)) + (T(16459) * ipow<T>(xs, 4)))) + (T(2) * h * ipow<T>((T(-2) + ipow<T>(xs, 2)), 4) * (T(-1470) + (T(-5514) * ipow<T>(xs, 4)) + (T(1888) * ipow<T>(xs, 6)) + (T(5641) * ipow<T>(xs, 2)))) + (T(2) * ipow<T>(h, 3) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(-3615) + (T(-181190) * ipow<T>(xs, 4)) + (T(-168275) * ipow<T>(xs, 8)) + (T(38530) * ipow<T>(xs, 10)) + (T(48240) * ipow<T>(xs, 2)) + (T(266980) * ipow<T>(xs, 6)))) + (T(2) * ipow<T>(h, 7) * ipow<T>(xs, 4) * (T(-9429) + (T(-688890) * ipow<T>(xs, 8)) + (T(-584940) * ipow<T>(xs, 4)) + (T(138320) * ipow<T>(xs, 2)) + (T(170508) * ipow<T>(xs, 10)) + (T(978220) * ipow<T>(xs, 6)))) + (T(6) * ipow<T>(h, 11) * ipow<T>(xs, 12) * (T(-721) + (T(1046) * ipow<T>(xs, 2)))) + (T(10) * ipow<T>(h, 9) * ipow<T>(xs, 8) * (T(-2653) + (T(-23478) * ipow<T>(xs, 4)) + (T(10456) * ipow<T>(xs, 6)) + (T(15107) * ipow<T>(xs, 2)))))) / (ipow<T>(xs, 3) * ((T(25) * ipow<T>(h, 4) * (T(216) + (T(-407484) * ipow<T>(xs, 10)) + (T(-196515) * ipow<T>(xs, 14)) + (T(-116179) * ipow<T>(xs, 6)) + (T(-6994) * ipow<T>(xs, 18)) + (T(-3840) * ipow<T>(xs, 2)) + (T(28695) * ipow<T>(xs, 4)) + (T(57354) * ipow<T>(xs, 16)) + (T(278124) * ipow<T>(xs, 8)) + (T(366615) * ipow<T>(xs, 12)))) + (T(25) * ipow<T>(h, 5) * (T(-144) + (T(-636552) * ipow<T>(xs, 12)) + (T(-383376) * ipow<T>(xs, 8)) + (T(-121968) * ipow<T>(xs, 16)) + (T(-30084) * ipow<T>(xs, 4)) + (T(3360) * ipow<T>(xs, 2)) + (T(16302) * ipow<T>(xs, 18)) + (T(140805) * ipow<T>(xs, 6)) + (T(378873) * ipow<T>(xs, 14)) + (T(632772) * ipow<T>(xs, 10)))) + (T(25) * ipow<T>(h, 6) * (T(36) + (T(-698418) * ipow<T>(xs, 10)) + (T(-539946) * ipow<T>(xs, 14)) + (T(-111797) * ipow<T>(xs, 6)) + (T(-28743) * ipow<T>(xs, 18)) + (T(-1536) * ipow<T>(xs, 2)) + (T(19063) * ipow<T>(xs, 4)) + (T(194205) * ipow<T>(xs, 16)) + (T(363678) * ipow<T>(xs, 8)) + (T(803502) * ipow<T>(xs, 12)))) + (T(225) * ipow<T>(h, 15) * ipow<T>(xs, 18)) + (T(-100) * ipow<T>(xs, 4) * ipow<T>((T(-1) + ipow<T>(xs, 2)), 3) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 4)) + (T(-75) * ipow<T>(h, 8) * ipow<T>(xs, 4) * (T(-339) + (T(-166590) * ipow<T>(xs, 8)) + (T(-72600) * ipow<T>(xs, 12)) + (T(-32900) * ipow<T>(xs, 4)) + (T(5435) * ipow<T>(xs, 2)) + (T(13728) * ipow<T>(xs, 14)) + (T(99972) * ipow<T>(xs, 6)) + (T(153318) * ipow<T>(xs, 10)))) + (T(-75) * ipow<T>(h, 14) * ipow<T>(xs, 16) * (T(-33) + (T(43) * ipow<T>(xs, 2)))) + (T(-25) * ipow<T>(h, 10) * ipow<T>(xs, 8) * (T(-2709) + (T(-80949) * ipow<T>(xs, 8)) + (T(-76611) * ipow<T>(xs, 4)) + (T(21307) * ipow<T>(xs, 10)) + (T(23679) * ipow<T>(xs, 2)) + (T(115269) * ipow<T>(xs, 6)))) + (T(-25) * ipow<T>(h, 12) * ipow<T>(xs, 12) * (T(-1323) + (T(-8162) * ipow<T>(xs, 4)) + (T(3562) * ipow<T>(xs, 6)) + (T(5871) * ipow<T>(xs, 2)))) + (T(25) * ipow<T>(h, 3) * (T(-2) + ipow<T>(xs, 2)) * (T(72) + (T(-63960) * ipow<T>(xs, 10)) + (T(-27378) * ipow<T>(xs, 6)) + (T(-15186) * ipow<T>(xs, 14)) + (T(-1164) * ipow<T>(xs, 2)) + (T(2197) * ipow<T>(xs, 16)) + (T(7789) * ipow<T>(xs, 4)) + (T(42855) * ipow<T>(xs, 12)) + (T(54771) * ipow<T>(xs, 8)))) + (T(25) * ipow<T>(h, 7) * ipow<T>(xs, 2) * (T(288) + (T(-743076) * ipow<T>(xs, 10)) + (T(-235224) * ipow<T>(xs, 14)) + (T(-234696) * ipow<T>(xs, 6)) + (T(-6726) * ipow<T>(xs, 2)) + (T(39039) * ipow<T>(xs, 16)) + (T(56243) * ipow<T>(xs, 4)) + (T(548154) * ipow<T>(xs, 8)) + (T(575982) * ipow<T>(xs, 12)))) + (T(25) * ipow<T>(h, 9) * ipow<T>(xs, 6) * (T(2079) + (T(-238440) * ipow<T>(xs, 6)) + (T(-153428) * ipow<T>(xs, 10)) + (T(-24444) * ipow<T>(xs, 2)) + (T(33748) * ipow<T>(xs, 12)) + (T(108984) * ipow<T>(xs, 4)) + (T(271590) * ipow<T>(xs, 8)))) + (T(25) * ipow<T>(h, 13) * ipow<T>(xs, 14) * (T(477) + (T(-1320) * ipow<T>(xs, 2)) + (T(862) * ipow<T>(xs, 4)))) + (T(75) * ipow<T>(h, 11) * ipow<T>(xs, 10) * (T(777) + (T(-10340) * ipow<T>(xs, 6)) + (T(-4962) * ipow<T>(xs, 2)) + (T(3393) * ipow<T>(xs, 8)) + (T(11101) * ipow<T>(xs, 4)))) + (T(-25) * ipow<T>(h, 2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 2) * (T(-3) + (T(3) * ipow<T>(xs, 2))) * (T(3) + (T(-968) * ipow<T>(xs, 6)) + (T(-734) * ipow<T>(xs, 10)) + (T(-58) * ipow<T>(xs, 2)) + (T(159) * ipow<T>(xs, 12)) + (T(357) * ipow<T>(xs, 4)) + (T(1245) * ipow<T>(xs, 8)))) + (T(100) * h * ipow<T>(xs, 2) * ipow<T>((T(-1) + ipow<T>(xs, 2)), 2) * ipow<T>((T(-2) + ipow<T>(xs, 2)), 3) * (T(-3) + (T(-37) * ipow<T>(xs, 4)) + (T(16) * ipow<T>(xs, 6)) + (T(21) * ipow<T>(xs, 2)))))));
  return r;
}

}  // namespace coophunt::detail
