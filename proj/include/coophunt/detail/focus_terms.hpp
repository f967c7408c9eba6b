#pragma once

#include <vector>

#include "coophunt/detail/literal.hpp"

namespace coophunt::detail {

template <class T>
struct focus_term {
  int i, j;
  T a, b;
};

// coefficients of u^i v^j in the two components, degrees 2 to 5
template <class T>
std::vector<focus_term<T>> eval_focus_terms(const T& x1, const T& h, const T& kappa, const T& omega) {
  std::vector<focus_term<T>> r;
  r.push_back({2, 0,
    ((T(-1) * ((T(-1) * kappa) + (T(-8) * h * x1) + (T(4) * h * kappa))) / (T(4) * omega * x1 * (T(-1) + h) * (kappa + (T(-1) * x1)))),
    ((T(1) * ((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa))) / (T(4) * kappa * x1 * (T(-1) + h) * (kappa + (T(-1) * x1)) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))))});
  r.push_back({1, 1,
    ((T(1) * kappa * ((kappa * (T(1) + (T(2) * h)) * (T(3) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))) + (T(-4) * x1 * (T(1) + h) * (T(2) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))))) / (T(2) * ipow<T>(omega, 2) * x1 * (T(-1) + h) * (kappa + (T(-1) * x1)))),
    ((T(1) * (T(3) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))) * ((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa))) / (T(2) * omega * x1 * (T(-1) + h) * (kappa + (T(-1) * x1)) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))))});
  r.push_back({0, 2,
    ((T(-1) * ipow<T>(kappa, 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))), 2) * ((T(-8) * x1) + (T(3) * kappa))) / (T(4) * ipow<T>(omega, 3) * x1 * (T(-1) + h) * (kappa + (T(-1) * x1)))),
    ((T(-1) * kappa * (T(3) + (T(-3) * ipow<T>(x1, 2)) + (T(3) * h * ipow<T>(x1, 2))) * ((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa))) / (T(4) * ipow<T>(omega, 2) * x1 * (T(-1) + h) * (kappa + (T(-1) * x1))))});
  r.push_back({3, 0,
    ((T(-1) * h * (kappa + (T(-4) * x1)) * ((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa))) / (T(4) * kappa * omega * ipow<T>(x1, 2) * ipow<T>((T(-1) + h), 2) * ipow<T>((kappa + (T(-1) * x1)), 2) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))))),
    T(0)});
  r.push_back({2, 1,
    ((T(-1) * ((kappa * (T(-2) + ipow<T>(x1, 2) + (T(-1) * h) + (ipow<T>(h, 2) * ipow<T>(x1, 2)) + (T(-2) * h * ipow<T>(x1, 2)))) + (T(2) * x1 * (T(1) + h) * (T(2) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))))) * ((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa))) / (T(4) * ipow<T>(omega, 2) * ipow<T>(x1, 2) * ipow<T>((T(-1) + h), 2) * ipow<T>((kappa + (T(-1) * x1)), 2) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))))),
    ((T(1) * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 2) * (T(2) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))) / (T(4) * kappa * omega * ipow<T>(x1, 2) * ipow<T>((T(-1) + h), 2) * ipow<T>((kappa + (T(-1) * x1)), 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))), 2)))});
  r.push_back({1, 2,
    ((T(1) * kappa * ((kappa * ((T(2) * ipow<T>(x1, 2)) + (T(9) * h) + (T(-7) * h * ipow<T>(x1, 2)) + (T(5) * ipow<T>(h, 2) * ipow<T>(x1, 2)))) + (T(-4) * x1 * (ipow<T>(x1, 2) + (T(3) * h) + (T(-3) * h * ipow<T>(x1, 2)) + (T(2) * ipow<T>(h, 2) * ipow<T>(x1, 2))))) * ((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa))) / (T(4) * ipow<T>(omega, 3) * ipow<T>(x1, 2) * ipow<T>((T(-1) + h), 2) * ipow<T>((kappa + (T(-1) * x1)), 2))),
    ((T(-1) * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 2)) / (T(2) * ipow<T>(omega, 2) * (T(-1) + h) * ipow<T>((kappa + (T(-1) * x1)), 2) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))))});
  r.push_back({0, 3,
    ((T(-1) * ipow<T>(kappa, 2) * ((kappa * (T(2) + ipow<T>(x1, 2) + (T(9) * h) + (T(-4) * h * ipow<T>(x1, 2)) + (T(3) * ipow<T>(h, 2) * ipow<T>(x1, 2)))) + (T(-2) * x1 * (T(2) + ipow<T>(x1, 2) + (T(6) * h) + (T(-4) * h * ipow<T>(x1, 2)) + (T(3) * ipow<T>(h, 2) * ipow<T>(x1, 2))))) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))) * ((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa))) / (T(4) * ipow<T>(omega, 4) * ipow<T>(x1, 2) * ipow<T>((T(-1) + h), 2) * ipow<T>((kappa + (T(-1) * x1)), 2))),
    ((T(1) * kappa * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 2) * (T(-2) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))) / (T(4) * ipow<T>(omega, 3) * ipow<T>(x1, 2) * ipow<T>((T(-1) + h), 2) * ipow<T>((kappa + (T(-1) * x1)), 2)))});
  r.push_back({4, 0,
    ((T(1) * h * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 2)) / (T(8) * ipow<T>(kappa, 2) * omega * ipow<T>(x1, 2) * ipow<T>((T(-1) + h), 3) * ipow<T>((kappa + (T(-1) * x1)), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))), 2))),
    T(0)});
  r.push_back({3, 1,
    ((T(-1) * h * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 2) * (kappa + (T(-2) * x1))) / (T(4) * kappa * ipow<T>(omega, 2) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((kappa + (T(-1) * x1)), 3) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))))),
    T(0)});
  r.push_back({2, 2,
    ((T(1) * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 2) * ((kappa * (T(1) + (T(5) * h) + (T(-3) * h * ipow<T>(x1, 2)) + (T(3) * ipow<T>(h, 2) * ipow<T>(x1, 2)))) + (T(-1) * x1 * (T(2) + (T(11) * h) + (T(-9) * h * ipow<T>(x1, 2)) + (T(9) * ipow<T>(h, 2) * ipow<T>(x1, 2)))))) / (T(4) * ipow<T>(omega, 3) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((kappa + (T(-1) * x1)), 3) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))))),
    ((T(1) * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 3)) / (T(4) * kappa * ipow<T>(omega, 2) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((kappa + (T(-1) * x1)), 3) * ipow<T>((T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))), 2)))});
  r.push_back({1, 3,
    ((T(-1) * kappa * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 2) * ((kappa * (T(2) + (T(7) * h) + (T(-3) * h * ipow<T>(x1, 2)) + (T(3) * ipow<T>(h, 2) * ipow<T>(x1, 2)))) + (T(-2) * x1 * (T(2) + (T(7) * h) + (T(-5) * h * ipow<T>(x1, 2)) + (T(5) * ipow<T>(h, 2) * ipow<T>(x1, 2)))))) / (T(4) * ipow<T>(omega, 4) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((kappa + (T(-1) * x1)), 3))),
    ((T(-1) * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 3)) / (T(2) * ipow<T>(omega, 3) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((kappa + (T(-1) * x1)), 3) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))))});
  r.push_back({0, 4,
    ((T(1) * ipow<T>(kappa, 2) * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 2) * ((kappa * (T(2) + (T(6) * h) + (T(-2) * h * ipow<T>(x1, 2)) + (T(2) * ipow<T>(h, 2) * ipow<T>(x1, 2)))) + (T(-1) * x1 * (T(4) + (T(11) * h) + (T(-7) * h * ipow<T>(x1, 2)) + (T(7) * ipow<T>(h, 2) * ipow<T>(x1, 2))))) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))) / (T(8) * ipow<T>(omega, 5) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((kappa + (T(-1) * x1)), 3))),
    ((T(1) * kappa * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 3)) / (T(4) * ipow<T>(omega, 4) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 3) * ipow<T>((kappa + (T(-1) * x1)), 3)))});
  r.push_back({4, 1,
    ((T(1) * h * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 3)) / (T(8) * ipow<T>(kappa, 2) * ipow<T>(omega, 2) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 4) * ipow<T>((kappa + (T(-1) * x1)), 4) * ipow<T>((T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))), 2))),
    T(0)});
  r.push_back({3, 2,
    ((T(-1) * h * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 3)) / (T(2) * kappa * ipow<T>(omega, 3) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 4) * ipow<T>((kappa + (T(-1) * x1)), 4) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))))),
    T(0)});
  r.push_back({2, 3,
    ((T(3) * h * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 3)) / (T(4) * ipow<T>(omega, 4) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 4) * ipow<T>((kappa + (T(-1) * x1)), 4))),
    T(0)});
  r.push_back({1, 4,
    ((T(-1) * h * kappa * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 3) * (T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2)))) / (T(2) * ipow<T>(omega, 5) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 4) * ipow<T>((kappa + (T(-1) * x1)), 4))),
    T(0)});
  r.push_back({0, 5,
    ((T(1) * h * ipow<T>(kappa, 2) * ipow<T>((T(1) + (T(-1) * ipow<T>(x1, 2)) + (h * ipow<T>(x1, 2))), 2) * ipow<T>(((T(-1) * kappa) + (T(-2) * h * x1) + (T(2) * h * kappa)), 3)) / (T(8) * ipow<T>(omega, 6) * ipow<T>(x1, 3) * ipow<T>((T(-1) + h), 4) * ipow<T>((kappa + (T(-1) * x1)), 4))),
    T(0)});
  return r;
}

}  // namespace coophunt::detail
