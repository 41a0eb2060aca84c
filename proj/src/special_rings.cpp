#include "knotband/special_rings.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace knotband {

using checked::add;
using checked::mul;

Cyclo12 operator+(const Cyclo12& a, const Cyclo12& b) {
  Cyclo12::Coords r{};
  for (int k = 0; k < 4; ++k) r[k] = add(a.c_[k], b.c_[k]);
  return Cyclo12(r);
}

Cyclo12 operator-(const Cyclo12& a, const Cyclo12& b) { return a + (-b); }

Cyclo12 Cyclo12::operator-() const {
  Coords r{};
  for (int k = 0; k < 4; ++k) r[k] = mul(c_[k], -1);
  return Cyclo12(r);
}

Cyclo12 operator*(const Cyclo12& a, const Cyclo12& b) {
  // Product in Z[x] has degree <= 6; reduce with x^4 = x^2 - 1, x^5 = x^3 - x, x^6 = -1.
  std::array<std::int64_t, 7> p{};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) p[j + k] = add(p[j + k], mul(a.c_[j], b.c_[k]));
  Cyclo12::Coords r{p[0], p[1], p[2], p[3]};
  r[2] = add(r[2], p[4]);
  r[0] = add(r[0], -p[4]);
  r[3] = add(r[3], p[5]);
  r[1] = add(r[1], -p[5]);
  r[0] = add(r[0], -p[6]);
  return Cyclo12(r);
}

Cyclo12 Cyclo12::conj() const {
  // x -> x^{-1} = x - x^3 ; x^2 -> x^{-2} = 1 - x^2 ; x^3 -> x^{-3} = -x^3.
  Coords r{};
  r[0] = add(c_[0], c_[2]);
  r[1] = c_[1];
  r[2] = mul(c_[2], -1);
  r[3] = add(mul(c_[1], -1), mul(c_[3], -1));
  return Cyclo12(r);
}

Cyclo12 Cyclo12::pow(unsigned n) const {
  Cyclo12 result(1);
  Cyclo12 base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

GoldenValue operator+(const GoldenValue& l, const GoldenValue& r) {
  return {add(l.a_, r.a_), add(l.b_, r.b_)};
}

GoldenValue operator-(const GoldenValue& l, const GoldenValue& r) { return l + (-r); }

GoldenValue GoldenValue::operator-() const { return {mul(a_, -1), mul(b_, -1)}; }

GoldenValue operator*(const GoldenValue& l, const GoldenValue& r) {
  // (a + bx)(c + dx) = ac + (ad + bc)x + bd x^2, with x^2 = 1 - x.
  const std::int64_t ac = mul(l.a_, r.a_);
  const std::int64_t bd = mul(l.b_, r.b_);
  const std::int64_t cross = add(mul(l.a_, r.b_), mul(l.b_, r.a_));
  return {add(ac, bd), add(cross, -bd)};
}

GoldenValue GoldenValue::conj() const {
  // a + b(-1 - x) = (a - b) - b x
  return {add(a_, -b_), mul(b_, -1)};
}

std::int64_t GoldenValue::norm() const {
  GoldenValue n = *this * conj();
  if (n.b_ != 0) throw std::logic_error("golden norm is not rational");
  return n.a_;
}

GoldenValue GoldenValue::pow(unsigned n) const {
  GoldenValue result(1);
  GoldenValue base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Cyclo12 eval_cyclo12(const LaurentPoly& jones_q) {
  return jones_q.evaluate(Cyclo12::zeta(), Cyclo12::zeta_inverse());
}

GoldenValue eval_golden(const LaurentPoly& q_poly) {
  return q_poly.evaluate(GoldenValue::x(), GoldenValue::x_inverse());
}

namespace {

// Returns k with n == base^k, or -1.
int exact_log(std::int64_t n, std::int64_t base) {
  if (n <= 0) return -1;
  int k = 0;
  while (n % base == 0) {
    n /= base;
    ++k;
  }
  return n == 1 ? k : -1;
}

}  // namespace

std::optional<CycloClass> classify_cyclo(const Cyclo12& v, int components) {
  if (components < 1) throw std::invalid_argument("component count must be positive");
  const Cyclo12 n = v.abs_squared();
  if (!n.is_integer()) return std::nullopt;
  const int delta = exact_log(n.coords()[0], 3);
  if (delta < 0) return std::nullopt;
  // Candidate i^{c-1} (i sqrt3)^delta; v must be +/- that.
  const Cyclo12 base = Cyclo12::i().pow(static_cast<unsigned>(components - 1)) *
                       (Cyclo12::i() * Cyclo12::sqrt3()).pow(static_cast<unsigned>(delta));
  if (v == base) return CycloClass{1, delta};
  if (v == -base) return CycloClass{-1, delta};
  return std::nullopt;
}

std::optional<GoldenClass> classify_golden(const GoldenValue& v) {
  const std::int64_t n = v.norm();
  const std::int64_t mag = n < 0 ? -n : n;
  const int r = exact_log(mag, 5);
  if (r < 0) return std::nullopt;
  const GoldenValue base = GoldenValue::sqrt5().pow(static_cast<unsigned>(r));
  if (v == base) return GoldenClass{1, r};
  if (v == -base) return GoldenClass{-1, r};
  return std::nullopt;
}

std::string render_coords(const Cyclo12& v) {
  const auto& c = v.coords();
  return "[" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
         "," + std::to_string(c[3]) + "]";
}

std::string render_cyclo(const Cyclo12& v) {
  if (v.is_zero()) return "0";
  const Cyclo12 n = v.abs_squared();
  const int k = n.is_integer() ? exact_log(n.coords()[0], 3) : -1;
  if (k < 0) return render_coords(v);
  std::int64_t magnitude = 1;
  for (int j = 0; j < k / 2; ++j) magnitude *= 3;
  const bool has_sqrt3 = (k % 2) == 1;
  const Cyclo12 radial = has_sqrt3 ? Cyclo12(magnitude) * Cyclo12::sqrt3() : Cyclo12(magnitude);
  const Cyclo12 units[4] = {Cyclo12(1), Cyclo12::i(), Cyclo12(-1), -Cyclo12::i()};
  for (int u = 0; u < 4; ++u) {
    if (units[u] * radial != v) continue;
    const bool negative = u >= 2;
    const bool has_i = (u % 2) == 1;
    std::vector<std::string> parts;
    if (magnitude != 1 || (!has_i && !has_sqrt3)) parts.push_back(std::to_string(magnitude));
    if (has_i) parts.emplace_back("i");
    if (has_sqrt3) parts.emplace_back("sqrt3");
    std::string out = negative ? "-" : "";
    for (std::size_t p = 0; p < parts.size(); ++p) out += (p ? "*" : "") + parts[p];
    return out;
  }
  return render_coords(v);
}

std::string render_golden(const GoldenClass& g) {
  std::string body;
  if (g.r == 0)
    body = "1";
  else if (g.r == 1)
    body = "sqrt5";
  else
    body = "sqrt5^" + std::to_string(g.r);
  return (g.sign < 0 ? "-" : "") + body;
}

}  // namespace knotband
