#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "coophunt/detail/literal.hpp"

namespace coophunt::detail {

// one monomial of a printed multivariate polynomial with an exact coefficient
template <std::size_t N>
struct poly_term {
  const char* coeff;
  std::array<int, N> exp;
};

template <class T, std::size_t N>
T eval_terms(const std::vector<poly_term<N>>& terms, const std::array<T, N>& at) {
  T s(0);
  for (const auto& t : terms) {
    T m = lit<T>(t.coeff);
    for (std::size_t k = 0; k < N; ++k)
      if (t.exp[k]) m *= ipow(at[k], t.exp[k]);
    s += m;
  }
  return s;
}

// sum of the absolute values of the terms, a scale for residuals
template <std::size_t N>
double eval_terms_abs(const std::vector<poly_term<N>>& terms, const std::array<double, N>& at) {
  double s = 0;
  for (const auto& t : terms) {
    double m = std::abs(lit<double>(t.coeff));
    for (std::size_t k = 0; k < N; ++k)
      if (t.exp[k]) m *= ipow(std::abs(at[k]), t.exp[k]);
    s += m;
  }
  return s;
}

}  // namespace coophunt::detail
