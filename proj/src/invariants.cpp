#include "knotband/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

namespace knotband {

namespace {

void require(bool ok, const std::string& identity, const std::string& detail) {
  if (!ok) throw InvariantError("identity " + identity + " failed: " + detail);
}

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

std::string to_string(QStatus s) {
  switch (s) {
    case QStatus::Ok: return "ok";
    case QStatus::BudgetExceeded: return "budget-exceeded";
    case QStatus::Skipped: return "skipped";
  }
  return "?";
}

std::pair<std::int64_t, std::int64_t> gaussian_parts(const Cyclo12& v) {
  const auto& c = v.coords();
  if (c[1] != 0 || c[2] != 0) throw std::logic_error("not a Gaussian integer: " + render_coords(v));
  return {c[0], c[3]};
}

InvariantSet invariants(const PlanarDiagram& d, const Orientation& o, const InvariantOptions& options) {
  InvariantSet inv;
  inv.components = component_count(d);
  inv.crossings = d.size();

  inv.jones = jones(d, o);
  const SpecialValues sv = special_values(inv.jones, inv.components);
  inv.v_omega = sv.v_omega;
  inv.v_minus1 = sv.v_minus1;
  inv.v_i = sv.v_i;
  if (inv.v_i) inv.arf = *inv.v_i == 1 ? 0 : 1;

  inv.signature = signature(d, o);
  inv.det = determinant(d);
  inv.homology = double_cover_homology(d);

  const auto omega = classify_cyclo(inv.v_omega, inv.components);
  require(omega.has_value(), "omega-delta", "V(omega) = " + render_coords(inv.v_omega) + " has no +-i^{c-1}(i sqrt3)^k form");
  inv.omega_class = *omega;
  require(omega->delta == inv.homology.delta, "omega-delta",
          "|V(omega)| gives " + std::to_string(omega->delta) + ", H_1 mod 3 gives " + std::to_string(inv.homology.delta));
  inv.checks.push_back("omega-delta");

  const auto [re, im] = gaussian_parts(inv.v_minus1);
  const BigInt norm = BigInt(re) * re + BigInt(im) * im;
  require(norm == inv.det * inv.det, "det-jones",
          "det " + str(inv.det) + " vs |V(-1)|^2 = " + str(norm));
  BigInt product = 1;
  for (const auto& f : inv.homology.factors) product *= f;
  require(product == inv.det, "det-jones", "det " + str(inv.det) + " vs product of H_1 factors " + str(product));
  inv.checks.push_back("det-jones");

  if (inv.is_knot()) {
    require(inv.signature % 2 == 0, "sign-jones", "odd signature " + std::to_string(inv.signature));
    require(im == 0 && re != 0, "sign-jones", "V(-1) = " + render_coords(inv.v_minus1) + " for a knot");
    const int expected = (inv.signature / 2) % 2 == 0 ? 1 : -1;
    require((re > 0 ? 1 : -1) == expected, "sign-jones",
            "sigma = " + std::to_string(inv.signature) + " but V(-1) = " + std::to_string(re));
    inv.checks.push_back("sign-jones");

    const int det_mod8 = static_cast<int>(inv.det % 8);
    const int arf_from_det = (det_mod8 == 1 || det_mod8 == 7) ? 0 : 1;
    require(arf_from_det == *inv.arf, "arf-det",
            "Arf from V(i) is " + std::to_string(*inv.arf) + ", det " + str(inv.det) + " gives " + std::to_string(arf_from_det));
    inv.checks.push_back("arf-det");
  }

  if (options.compute_q) {
    try {
      inv.q_poly = q_polynomial(d, options.q_options, options.q_cache);
      inv.q_status = QStatus::Ok;
    } catch (const QBudgetExceeded&) {
      inv.q_status = QStatus::BudgetExceeded;
    }
  }
  if (inv.q_poly) {
    inv.lambda = eval_golden(*inv.q_poly);
    const auto golden = classify_golden(*inv.lambda);
    require(golden.has_value(), "lambda-r", "lambda has no +-sqrt5^r form");
    require(golden->r == inv.homology.r, "lambda-r",
            "lambda gives r = " + std::to_string(golden->r) + ", H_1 mod 5 gives " + std::to_string(inv.homology.r));
    inv.lambda_class = golden;
    inv.checks.push_back("lambda-r");
  }
  return inv;
}

InvariantSet invariants(const PlanarDiagram& d, const InvariantOptions& options) {
  return invariants(d, default_orientation(d), options);
}

}  // namespace knotband
