#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "knotband/laurent_poly.hpp"

namespace knotband {

/// Element of Z[x]/(x^4 - x^2 + 1), x standing for zeta = e^{i*pi/6}.
///
/// Coordinates are in the power basis 1, x, x^2, x^3. Useful constants:
/// omega = x^2, i = x^3, sqrt3 = 2x - x^3, x^{-1} = x - x^3.
class Cyclo12 {
 public:
  using Coords = std::array<std::int64_t, 4>;

  Cyclo12() = default;
  Cyclo12(std::int64_t n) : c_{n, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  explicit Cyclo12(const Coords& coords) : c_(coords) {}

  static Cyclo12 zeta() { return Cyclo12(Coords{0, 1, 0, 0}); }
  static Cyclo12 zeta_inverse() { return Cyclo12(Coords{0, 1, 0, -1}); }
  static Cyclo12 omega() { return Cyclo12(Coords{0, 0, 1, 0}); }
  static Cyclo12 i() { return Cyclo12(Coords{0, 0, 0, 1}); }
  static Cyclo12 sqrt3() { return Cyclo12(Coords{0, 2, 0, -1}); }

  const Coords& coords() const { return c_; }
  bool is_zero() const { return c_ == Coords{}; }
  /// True when the element is a rational integer (only the constant coordinate set).
  bool is_integer() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  friend Cyclo12 operator+(const Cyclo12& a, const Cyclo12& b);
  friend Cyclo12 operator-(const Cyclo12& a, const Cyclo12& b);
  friend Cyclo12 operator*(const Cyclo12& a, const Cyclo12& b);
  Cyclo12 operator-() const;
  friend bool operator==(const Cyclo12&, const Cyclo12&) = default;

  /// Complex conjugation, x -> x^{-1}; an involutive ring automorphism.
  Cyclo12 conj() const;
  /// |v|^2 = v * conj(v), as an element of the ring (it is a nonnegative real).
  Cyclo12 abs_squared() const { return *this * conj(); }
  Cyclo12 pow(unsigned n) const;

 private:
  Coords c_{};
};

/// Element of Z[x]/(x^2 + x - 1), x standing for (sqrt5 - 1)/2.
/// sqrt5 = 2x + 1 and x^{-1} = x + 1.
class GoldenValue {
 public:
  GoldenValue() = default;
  GoldenValue(std::int64_t n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  GoldenValue(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}

  static GoldenValue x() { return {0, 1}; }
  static GoldenValue x_inverse() { return {1, 1}; }
  static GoldenValue sqrt5() { return {1, 2}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

  friend GoldenValue operator+(const GoldenValue& l, const GoldenValue& r);
  friend GoldenValue operator-(const GoldenValue& l, const GoldenValue& r);
  friend GoldenValue operator*(const GoldenValue& l, const GoldenValue& r);
  GoldenValue operator-() const;
  friend bool operator==(const GoldenValue&, const GoldenValue&) = default;

  /// Galois conjugation x -> -x - 1 (sqrt5 -> -sqrt5).
  GoldenValue conj() const;
  /// Field norm v * conj(v), a rational integer.
  std::int64_t norm() const;
  GoldenValue pow(unsigned n) const;

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

/// Value of the shape  sign * i^{c-1} * (i*sqrt3)^delta.
struct CycloClass {
  int sign = 1;
  int delta = 0;
  friend bool operator==(const CycloClass&, const CycloClass&) = default;
};

/// Value of the shape  sign * sqrt5^r.
struct GoldenClass {
  int sign = 1;
  int r = 0;
  friend bool operator==(const GoldenClass&, const GoldenClass&) = default;
};

/// Substitutes q -> zeta (t^{1/2} = e^{i*pi/6}) into a Jones polynomial written in q.
Cyclo12 eval_cyclo12(const LaurentPoly& jones_q);

/// Matches v against sign * i^{components-1} * (i*sqrt3)^delta; nullopt when v has another shape.
std::optional<CycloClass> classify_cyclo(const Cyclo12& v, int components);

/// Substitutes z -> (sqrt5 - 1)/2 into a Q polynomial.
GoldenValue eval_golden(const LaurentPoly& q_poly);

/// Matches v against sign * sqrt5^r; nullopt when v has another shape.
std::optional<GoldenClass> classify_golden(const GoldenValue& v);

/// Symbolic rendering, e.g. "-i*sqrt3", "3", "1", "3*i*sqrt3". Requires the
/// value to be of the form unit * sqrt3^k with unit in {1,i,-1,-i}.
std::string render_cyclo(const Cyclo12& v);
/// Symbolic rendering of sign * sqrt5^r, e.g. "1", "-sqrt5", "-sqrt5^2".
std::string render_golden(const GoldenClass& g);
/// Raw coordinate rendering "[a,b,c,d]" for values of unknown shape.
std::string render_coords(const Cyclo12& v);

}  // namespace knotband
