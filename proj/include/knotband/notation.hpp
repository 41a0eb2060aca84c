#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotband/planar_diagram.hpp"

namespace knotband {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `PD[X(a,b,c,d), ...]`. `PD[]` is the unknot; an `O` item adds a
/// crossingless component (so `render_pd` output always parses back).
/// Whitespace is ignored; X[...] brackets are accepted as well as X(...).
PlanarDiagram parse_pd(std::string_view text);
std::string render_pd(const PlanarDiagram& d);

class KnotTable;

/// One summand of a knot expression.
struct KnotTerm {
  enum class Kind { Name, Family, Unknot, Hopf, HopfNegative, Pd };
  Kind kind = Kind::Unknot;
  std::string name;                  // Kind::Name
  long long family_index = 0;        // Kind::Family, the m of K[m]
  std::optional<PlanarDiagram> pd;   // Kind::Pd
  bool mirrored = false;             // trailing '!'
  std::size_t position = 0;          // offset in the source text
};

/// expr := term ('#' term)* ; term := (NAME | 'K[' INT ']' | 'U' | 'hopf' | 'hopf-' | pd-literal) '!'?
struct KnotExpr {
  std::vector<KnotTerm> summands;
};

KnotExpr parse_knot_expr_ast(std::string_view text);
/// Table lookups, mirrors and connected sums. Throws ParseError for unknown
/// names and for '#' applied to a link.
PlanarDiagram evaluate_knot_expr(const KnotExpr& expr, const KnotTable& table);
PlanarDiagram parse_knot_expr(std::string_view text, const KnotTable& table);

}  // namespace knotband
