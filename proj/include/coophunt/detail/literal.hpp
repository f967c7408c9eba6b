#pragma once

#include <cstdlib>
#include <string>
#include <type_traits>

namespace coophunt::detail {

// integer power by squaring, works for double and exact rationals alike
template <class T>
T ipow(const T& b, int n) {
  T r(1);
  T p(b);
  while (n > 0) {
    if (n & 1) r *= p;
    n >>= 1;
    if (n) p *= p;
  }
  return r;
}

// numeric literal from its decimal text, "p" or "p/q"
template <class T>
T lit(const std::string& s) {
  if constexpr (std::is_floating_point_v<T>) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return static_cast<T>(std::strtold(s.c_str(), nullptr));
    return static_cast<T>(std::strtold(s.substr(0, slash).c_str(), nullptr) /
                          std::strtold(s.substr(slash + 1).c_str(), nullptr));
  } else {
    T r(s);
    if constexpr (requires(T& x) { x.canonicalize(); }) r.canonicalize();
    return r;
  }
}

}  // namespace coophunt::detail
