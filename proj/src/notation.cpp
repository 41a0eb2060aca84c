#include "knotband/notation.hpp"

#include <cctype>
#include <limits>

#include "knotband/constructions.hpp"
#include "knotband/knot_table.hpp"

namespace knotband {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  long long integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected an integer");
    }
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<long long>::max() - 9) / 10) {
        pos_ = start;
        fail("integer out of range");
      }
      v = v * 10 + (text_[pos_++] - '0');
    }
    return neg ? -v : v;
  }
  // [0-9]+ '_' [0-9]+ with no interior whitespace
  std::string knot_name() {
    skip_ws();
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > from;
    };
    if (!digits() || pos_ >= text_.size() || text_[pos_] != '_') fail("expected a knot name like 3_1");
    ++pos_;
    if (!digits()) fail("expected a knot name like 3_1");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

PlanarDiagram parse_pd_at(Cursor& cur) {
  if (!cur.accept_word("PD")) cur.fail("expected 'PD['");
  cur.expect('[');
  std::vector<Crossing> xs;
  int loops = 0;
  const std::size_t open = cur.pos();
  if (!cur.accept(']')) {
    do {
      if (cur.accept('O')) {
        ++loops;
        continue;
      }
      if (!cur.accept('X')) cur.fail("expected 'X(' or 'O'");
      const char close = cur.accept('(') ? ')' : (cur.expect('['), ']');
      Crossing x;
      for (std::size_t s = 0; s < 4; ++s) {
        if (s > 0) cur.expect(',');
        const std::size_t at = cur.pos();
        const long long v = cur.integer(false);
        if (v <= 0 || v > std::numeric_limits<int>::max()) throw ParseError("arc labels must be positive integers", at);
        x.arcs[s] = static_cast<int>(v);
      }
      cur.expect(close);
      xs.push_back(x);
    } while (cur.accept(','));
    cur.expect(']');
  }
  if (xs.empty() && loops == 0) return PlanarDiagram::unknot();
  try {
    PlanarDiagram d(std::move(xs), loops);
    // Label degrees alone admit non-planar gluings; the Euler check on faces catches them.
    for (const auto& piece : split_components(d).pieces) faces(piece);
    return d;
  } catch (const DiagramError& e) {
    throw ParseError(e.what(), open);
  }
}

KnotTerm parse_term(Cursor& cur) {
  KnotTerm t;
  t.position = cur.pos();
  const char c = cur.peek();
  if (c == 'P') {
    t.kind = KnotTerm::Kind::Pd;
    t.pd = parse_pd_at(cur);
  } else if (cur.accept_word("hopf")) {
    t.kind = cur.accept('-') ? KnotTerm::Kind::HopfNegative : KnotTerm::Kind::Hopf;
  } else if (cur.accept_word("K[")) {
    t.kind = KnotTerm::Kind::Family;
    try {
      t.family_index = cur.integer(true);
    } catch (const ParseError& e) {
      throw ParseError("malformed integer in K[m]", e.position());
    }
    cur.expect(']');
  } else if (c == 'U') {
    cur.accept('U');
    t.kind = KnotTerm::Kind::Unknot;
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    t.kind = KnotTerm::Kind::Name;
    t.name = cur.knot_name();
  } else {
    cur.fail("expected a knot term (NAME, K[m], U, hopf, hopf-, PD[...])");
  }
  t.mirrored = cur.accept('!');
  return t;
}

}  // namespace

PlanarDiagram parse_pd(std::string_view text) {
  Cursor cur(text);
  PlanarDiagram d = parse_pd_at(cur);
  if (!cur.at_end()) cur.fail("trailing input after PD literal");
  return d;
}

std::string render_pd(const PlanarDiagram& d) {
  if (d.size() == 0 && d.free_loops() == 1) return "PD[]";
  std::string out = "PD[";
  bool first = true;
  for (const auto& x : d.crossings()) {
    if (!first) out += ",";
    first = false;
    out += "X(" + std::to_string(x.arcs[0]) + "," + std::to_string(x.arcs[1]) + "," + std::to_string(x.arcs[2]) + "," +
           std::to_string(x.arcs[3]) + ")";
  }
  for (int k = 0; k < d.free_loops(); ++k) {
    if (!first) out += ",";
    first = false;
    out += "O";
  }
  return out + "]";
}

KnotExpr parse_knot_expr_ast(std::string_view text) {
  Cursor cur(text);
  KnotExpr e;
  if (cur.at_end()) cur.fail("empty knot expression");
  do {
    e.summands.push_back(parse_term(cur));
  } while (cur.accept('#'));
  if (!cur.at_end()) cur.fail("unexpected input");
  return e;
}

PlanarDiagram evaluate_knot_expr(const KnotExpr& expr, const KnotTable& table) {
  std::optional<PlanarDiagram> acc;
  for (const auto& t : expr.summands) {
    PlanarDiagram d;
    switch (t.kind) {
      case KnotTerm::Kind::Name: {
        const KnotRecord* r = table.find(t.name);
        if (!r) throw ParseError("unknown knot name '" + t.name + "'", t.position);
        d = r->pd;
        break;
      }
      case KnotTerm::Kind::Family:
        d = km_diagram(t.family_index);
        break;
      case KnotTerm::Kind::Unknot:
        d = PlanarDiagram::unknot();
        break;
      case KnotTerm::Kind::Hopf:
        d = hopf_link(true);
        break;
      case KnotTerm::Kind::HopfNegative:
        d = hopf_link(false);
        break;
      case KnotTerm::Kind::Pd:
        d = *t.pd;
        break;
    }
    if (t.mirrored) d = mirror(d);
    if (expr.summands.size() > 1 && component_count(d) != 1)
      throw ParseError("'#' operand has " + std::to_string(component_count(d)) + " components; only knots can be summed",
                       t.position);
    acc = acc ? connected_sum(*acc, d) : d;
  }
  return *acc;
}

PlanarDiagram parse_knot_expr(std::string_view text, const KnotTable& table) {
  return evaluate_knot_expr(parse_knot_expr_ast(text), table);
}

}  // namespace knotband
