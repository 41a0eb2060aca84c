#pragma once

#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace knotband {

/// Integer Laurent polynomial in one formal variable, stored sparsely.
///
/// The variable is implicit: callers use it for A (Kauffman bracket),
/// q = t^{1/2} (Jones) or z (Q polynomial). No zero coefficient is ever
/// stored, so structural equality is polynomial equality. Arithmetic is
/// overflow-checked and throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Coeff c, int exponent);
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, Coeff>> terms);

  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  int min_degree() const;
  int max_degree() const;
  const Terms& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exponent k -> -k. Realizes V(K!; t) = V(K; t^{-1}).
  LaurentPoly invert_variable() const;
  /// Multiplication by var^k.
  LaurentPoly shift(int k) const;
  /// Substitution var -> var^k; k may be negative.
  LaurentPoly substitute_power(int k) const;
  LaurentPoly pow(unsigned n) const;

  /// Quotient when `divisor` divides this polynomial exactly, else nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Evaluates at x, where x_inv is the inverse of x in Ring.
  template <class Ring>
  Ring evaluate(const Ring& x, const Ring& x_inv) const {
    Ring acc{};
    Ring power{1};
    int exp = 0;
    for (auto it = terms_.lower_bound(0); it != terms_.end(); ++it) {
      while (exp < it->first) {
        power = power * x;
        ++exp;
      }
      acc = acc + power * Ring{it->second};
    }
    power = Ring{1};
    exp = 0;
    for (auto it = std::make_reverse_iterator(terms_.lower_bound(0)); it != terms_.rend(); ++it) {
      while (exp < -it->first) {
        power = power * x_inv;
        ++exp;
      }
      acc = acc + power * Ring{it->second};
    }
    return acc;
  }

  /// Human-readable form, highest degree last, e.g. "q^-2 - 2 + 3*q".
  std::string to_string(std::string_view var) const;

 private:
  void add_term(int exponent, Coeff c);
  Terms terms_;
};

// Free-function aliases for the ring operations.
inline LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly poly_invert_variable(const LaurentPoly& p) { return p.invert_variable(); }

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace knotband
