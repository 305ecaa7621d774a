#pragma once

#include <utility>
#include <vector>

#include "area/errors.hpp"

namespace area {

/// rational + sum of coefficient * sqrt(radicand). T must be a field with
/// structural equality; terms with equal radicands are merged.
template <class T>
struct SurdSum {
  T rational{};
  std::vector<std::pair<T, T>> roots;  // (coefficient, radicand)

  SurdSum() = default;
  SurdSum(T value) : rational(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static SurdSum root(T radicand) {
    SurdSum out;
    out.add_root(T(1), std::move(radicand));
    return out;
  }

  bool has_roots() const { return !roots.empty(); }

  void add_root(T coefficient, T radicand) {
    if (is_zero_value(coefficient) || is_zero_value(radicand)) return;
    for (auto it = roots.begin(); it != roots.end(); ++it) {
      if (it->second == radicand) {
        it->first = it->first + coefficient;
        if (is_zero_value(it->first)) roots.erase(it);
        return;
      }
    }
    roots.emplace_back(std::move(coefficient), std::move(radicand));
  }

  SurdSum operator-() const {
    SurdSum out;
    out.rational = T(0) - rational;
    for (const auto& [k, r] : roots) out.roots.emplace_back(T(0) - k, r);
    return out;
  }

  friend SurdSum operator+(SurdSum a, const SurdSum& b) {
    a.rational = a.rational + b.rational;
    for (const auto& [k, r] : b.roots) a.add_root(k, r);
    return a;
  }

  friend SurdSum operator-(const SurdSum& a, const SurdSum& b) { return a + (-b); }

  friend SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum out;
    out.rational = a.rational * b.rational;
    for (const auto& [k, r] : b.roots) out.add_root(a.rational * k, r);
    for (const auto& [k, r] : a.roots) out.add_root(b.rational * k, r);
    for (const auto& [k1, r1] : a.roots) {
      for (const auto& [k2, r2] : b.roots) {
        if (r1 == r2) {
          out.rational = out.rational + k1 * k2 * r1;
        } else {
          out.add_root(k1 * k2, r1 * r2);
        }
      }
    }
    return out;
  }

  /// Division is only defined by a surd-free divisor.
  friend SurdSum operator/(const SurdSum& a, const SurdSum& b) {
    if (b.has_roots()) throw Error(ErrorKind::UnsupportedShape, "division by an expression containing sqrt");
    SurdSum out;
    out.rational = a.rational / b.rational;
    for (const auto& [k, r] : a.roots) out.add_root(k / b.rational, r);
    return out;
  }

  SurdSum pow(int exponent) const {
    if (exponent < 0) {
      if (has_roots()) throw Error(ErrorKind::UnsupportedShape, "negative power of an expression containing sqrt");
      return SurdSum(power_of(T(1) / rational, -exponent));
    }
    if (!has_roots()) return SurdSum(power_of(rational, exponent));
    SurdSum out(T(1));
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
  }

  /// Applies f to every stored value (rational part, coefficients, radicands).
  template <class F>
  SurdSum map(F&& f) const {
    SurdSum out;
    out.rational = f(rational);
    for (const auto& [k, r] : roots) out.add_root(f(k), f(r));
    return out;
  }

 private:
  static bool is_zero_value(const T& v) { return v == T(0); }
  static T power_of(const T& base, int e) {
    T out(1);
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
  }
};

}  // namespace area
