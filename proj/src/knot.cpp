#include "cp2genus/knot.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cp2genus/errors.hpp"

namespace cp2 {

KnotPtr make_node(KnotExpr&& e) {
  return std::make_shared<const KnotExpr>(std::move(e));
}

int braid_components(const BraidWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : w.letters) {
    int i = std::abs(letter) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(w.strands, false);
  int cycles = 0;
  for (int s = 0; s < w.strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
  }
  return cycles;
}

namespace {

void validate_braid(const BraidWord& w) {
  if (w.strands < 2) throw SemanticError("braid needs at least 2 strands");
  std::vector<bool> used(w.strands - 1, false);
  for (int letter : w.letters) {
    int i = std::abs(letter);
    if (i < 1 || i > w.strands - 1)
      throw SemanticError("braid letter out of range: " +
                          std::to_string(letter));
    used[i - 1] = true;
  }
  for (int i = 0; i + 1 < w.strands; ++i)
    if (!used[i])
      throw SemanticError("braid closure has a disconnected Seifert surface "
                          "(generator " +
                          std::to_string(i + 1) + " unused)");
  if (braid_components(w) != 1)
    throw SemanticError("braid closure is a link, not a knot");
}

}  // namespace

KnotPtr KnotExpr::unknot() {
  static const KnotPtr u = make_node(KnotExpr(KnotKind::Unknot));
  return u;
}

KnotPtr KnotExpr::torus(int p, int q) {
  if (p < 2 || q < 1)
    throw SemanticError("torus knot requires p >= 2 and q >= 1");
  if (std::gcd(p, q) != 1)
    throw SemanticError("torus parameters must be coprime: T(" +
                        std::to_string(p) + "," + std::to_string(q) + ")");
  if (q == 1) return unknot();
  KnotExpr e(KnotKind::Torus);
  e.p = p;
  e.q = q;
  return make_node(std::move(e));
}

KnotPtr KnotExpr::mirror(const KnotPtr& k) {
  switch (k->kind) {
    case KnotKind::Unknot:
      return k;
    case KnotKind::Mirror:
      return k->parts[0];
    case KnotKind::Sum: {
      std::vector<KnotPtr> parts;
      for (const auto& part : k->parts) parts.push_back(mirror(part));
      return sum(std::move(parts));
    }
    default: {
      KnotExpr e(KnotKind::Mirror);
      e.parts = {k};
      return make_node(std::move(e));
    }
  }
}

KnotPtr KnotExpr::sum(std::vector<KnotPtr> parts) {
  std::vector<KnotPtr> flat;
  for (auto& part : parts) {
    if (part->kind == KnotKind::Sum)
      flat.insert(flat.end(), part->parts.begin(), part->parts.end());
    else if (part->kind != KnotKind::Unknot)
      flat.push_back(std::move(part));
  }
  if (flat.empty()) return unknot();
  if (flat.size() == 1) return flat[0];
  std::stable_sort(flat.begin(), flat.end(),
                   [](const KnotPtr& a, const KnotPtr& b) {
                     return print_knot(a) < print_knot(b);
                   });
  KnotExpr e(KnotKind::Sum);
  e.parts = std::move(flat);
  return make_node(std::move(e));
}

KnotPtr KnotExpr::braid_closure(BraidWord w) {
  validate_braid(w);
  KnotExpr e(KnotKind::Braid);
  e.braid = std::move(w);
  return make_node(std::move(e));
}

KnotPtr KnotExpr::whitehead(int clasp, const KnotPtr& companion) {
  if (clasp != 1 && clasp != -1)
    throw SemanticError("Whitehead clasp must be + or -");
  KnotExpr e(KnotKind::WhiteheadDouble);
  e.clasp = clasp;
  e.parts = {companion};
  return make_node(std::move(e));
}

KnotPtr KnotExpr::seifert_given(SeifertMatrix v) {
  if (v.size() == 0) return unknot();
  KnotExpr e(KnotKind::SeifertGiven);
  e.matrix = std::move(v);
  return make_node(std::move(e));
}

std::string print_knot(const KnotPtr& k) {
  switch (k->kind) {
    case KnotKind::Unknot:
      return "U";
    case KnotKind::Torus:
      return "T(" + std::to_string(k->p) + "," + std::to_string(k->q) + ")";
    case KnotKind::Mirror:
      return "-" + print_knot(k->parts[0]);
    case KnotKind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < k->parts.size(); ++i) {
        if (i) s += " # ";
        s += print_knot(k->parts[i]);
      }
      return s;
    }
    case KnotKind::Braid: {
      std::string s = "braid(" + std::to_string(k->braid.strands) + ";";
      for (int letter : k->braid.letters) s += " " + std::to_string(letter);
      return s + ")";
    }
    case KnotKind::WhiteheadDouble:
      return std::string("Wh") + (k->clasp > 0 ? "+" : "-") + "(" +
             print_knot(k->parts[0]) + ")";
    case KnotKind::SeifertGiven: {
      std::string s = "seifert([";
      for (int i = 0; i < k->matrix.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < k->matrix.size(); ++j) {
          if (j) s += ",";
          s += std::to_string(k->matrix.at(i, j));
        }
        s += "]";
      }
      return s + "])";
    }
  }
  throw InternalError("unreachable knot kind");
}

bool knot_equal(const KnotPtr& a, const KnotPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case KnotKind::Unknot:
      return true;
    case KnotKind::Torus:
      return a->p == b->p && a->q == b->q;
    case KnotKind::Braid:
      return a->braid == b->braid;
    case KnotKind::SeifertGiven:
      return a->matrix == b->matrix;
    case KnotKind::WhiteheadDouble:
      if (a->clasp != b->clasp) return false;
      [[fallthrough]];
    case KnotKind::Mirror:
    case KnotKind::Sum:
      if (a->parts.size() != b->parts.size()) return false;
      for (std::size_t i = 0; i < a->parts.size(); ++i)
        if (!knot_equal(a->parts[i], b->parts[i])) return false;
      return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser (recursive descent over the knot DSL).

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  KnotPtr parse() {
    KnotPtr k = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return k;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::stol(text_.substr(start, pos_ - start));
  }

  bool peek_int() {
    skip_ws();
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  KnotPtr parse_sum() {
    std::vector<KnotPtr> parts{parse_unary()};
    while (accept('#')) parts.push_back(parse_unary());
    return KnotExpr::sum(std::move(parts));
  }

  KnotPtr parse_unary() {
    if (accept('-')) return KnotExpr::mirror(parse_unary());
    return parse_atom();
  }

  KnotPtr parse_atom() {
    skip_ws();
    std::size_t at = pos_;
    try {
      if (accept('U')) return KnotExpr::unknot();
      if (accept('T')) {
        expect('(');
        long p = parse_int();
        expect(',');
        long q = parse_int();
        expect(')');
        return KnotExpr::torus(static_cast<int>(p), static_cast<int>(q));
      }
      if (starts_with("Wh")) {
        pos_ += 2;
        int clasp;
        if (accept('+'))
          clasp = 1;
        else if (accept('-'))
          clasp = -1;
        else
          fail("expected '+' or '-' after Wh");
        expect('(');
        KnotPtr companion = parse_sum();
        expect(')');
        return KnotExpr::whitehead(clasp, companion);
      }
      if (starts_with("braid")) {
        pos_ += 5;
        expect('(');
        BraidWord w;
        w.strands = static_cast<int>(parse_int());
        expect(';');
        while (peek_int()) w.letters.push_back(static_cast<int>(parse_int()));
        if (w.letters.empty()) fail("braid word must have at least one letter");
        expect(')');
        return KnotExpr::braid_closure(std::move(w));
      }
      if (starts_with("seifert")) {
        pos_ += 7;
        expect('(');
        expect('[');
        std::vector<std::vector<long>> rows;
        do {
          expect('[');
          std::vector<long> row{parse_int()};
          while (accept(',')) row.push_back(parse_int());
          expect(']');
          rows.push_back(std::move(row));
        } while (accept(','));
        expect(']');
        expect(')');
        return KnotExpr::seifert_given(SeifertMatrix(std::move(rows)));
      }
    } catch (const SemanticError& e) {
      throw ParseError(std::string(e.what()) + " at position " +
                           std::to_string(at),
                       at);
    }
    fail("expected a knot atom");
  }

  bool starts_with(const char* word) {
    skip_ws();
    return text_.compare(pos_, std::string::traits_type::length(word), word) == 0;
  }
};

}  // namespace

KnotPtr parse_knot(const std::string& text) { return Parser(text).parse(); }

SeifertMatrix seifert_matrix(const KnotPtr& k) {
  switch (k->kind) {
    case KnotKind::Unknot:
      return SeifertMatrix();
    case KnotKind::Torus: {
      // standard positive braid (s1 ... s_{p-1})^q on p strands
      BraidWord w;
      w.strands = k->p;
      for (int rep = 0; rep < k->q; ++rep)
        for (int i = 1; i < k->p; ++i) w.letters.push_back(i);
      return seifert_from_braid(w);
    }
    case KnotKind::Mirror:
      return seifert_matrix(k->parts[0]).mirrored();
    case KnotKind::Sum: {
      SeifertMatrix v;
      for (const auto& part : k->parts)
        v = SeifertMatrix::block_diag(v, seifert_matrix(part));
      return v;
    }
    case KnotKind::Braid:
      return seifert_from_braid(k->braid);
    case KnotKind::WhiteheadDouble:
      // untwisted double: the companion contributes nothing abelian
      return SeifertMatrix(k->clasp > 0
                               ? std::vector<std::vector<long>>{{1, 1}, {0, 0}}
                               : std::vector<std::vector<long>>{{-1, 1}, {0, 0}});
    case KnotKind::SeifertGiven:
      return k->matrix;
  }
  throw InternalError("unreachable knot kind");
}

}  // namespace cp2
