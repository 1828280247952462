#include "qreider/document.hpp"

#include "qreider/errors.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace qreider {

std::optional<std::string> Query::option(const std::string& key) const {
  for (const auto& [k, v] : options)
    if (k == key) return v;
  return std::nullopt;
}

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int col = 0;  // 1-based start column
  int end_col = 0;
};

std::vector<Token> lex(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '\''))
        ++j;
      out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col, static_cast<int>(j) + 1});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::number, std::string(line.substr(i, j - i)), col, static_cast<int>(j) + 1});
      i = j;
    } else if (std::string_view("()[],=:;+-*/").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), col, col + 1});
      ++i;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", static_cast<int>(line.size()) + 1, static_cast<int>(line.size()) + 1});
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of statement";
  return "'" + t.text + "'";
}

// ---------------------------------------------------------------- parsing

const std::set<std::string> kStopWords = {"through", "contains"};

class Cursor {
 public:
  Cursor(std::vector<Token> toks, int line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::end; }
  bool is_punct(char c) const { return peek().kind == Tok::punct && peek().text[0] == c; }
  bool is_word(const std::string& w) const { return peek().kind == Tok::ident && peek().text == w; }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line_, peek().col, "expected " + expected + ", found " + describe(peek()));
  }

  void expect_punct(char c) {
    if (!is_punct(c)) fail(std::string("'") + c + "'");
    next();
  }
  void expect_word(const std::string& w) {
    if (!is_word(w)) fail("'" + w + "'");
    next();
  }
  void expect_end() {
    if (!at_end()) fail("end of statement");
  }

  std::string ident(const char* what = "a name") {
    if (peek().kind != Tok::ident) fail(what);
    return next().text;
  }

  // identifiers joined by adjacent hyphens: check-free, on-section
  std::string word(const char* what = "a word") {
    if (peek().kind != Tok::ident) fail(what);
    Token t = next();
    std::string out = t.text;
    int end = t.end_col;
    while (is_punct('-') && peek().col == end && peek(1).kind == Tok::ident && peek(1).col == end + 1) {
      next();
      t = next();
      out += "-" + t.text;
      end = t.end_col;
    }
    return out;
  }

  // word, integer or signed integer, as text
  std::string value() {
    if (peek().kind == Tok::ident) return word("a value");
    std::string sign;
    if (is_punct('-')) {
      next();
      sign = "-";
    }
    if (peek().kind != Tok::number) fail("a value");
    return sign + next().text;
  }

  int integer(const char* what = "an integer") {
    std::string sign;
    if (is_punct('-')) {
      next();
      sign = "-";
    }
    if (peek().kind != Tok::number) fail(what);
    const Token t = next();
    try {
      return std::stoi(sign + t.text);
    } catch (const std::exception&) {
      throw ParseError(line_, t.col, "integer out of range");
    }
  }

  ParamExpr expr() {
    ParamExpr left = term();
    while (is_punct('+') || is_punct('-')) {
      const char op = next().text[0];
      ParamExpr right = term();
      left = op == '+' ? left + right : left - right;
    }
    return left;
  }

  Rational constant(const char* what) {
    const int col = peek().col;
    const ParamExpr e = expr();
    if (!e.is_constant()) throw ParseError(line_, col, std::string(what) + " must be a rational constant");
    return e.value();
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> out{ident()};
    while (is_punct(',')) {
      next();
      out.push_back(ident());
    }
    return out;
  }

 private:
  bool starts_factor() const {
    const Token& t = peek();
    if (t.kind == Tok::number) return true;
    if (t.kind == Tok::ident) return !kStopWords.count(t.text);
    return t.kind == Tok::punct && t.text == "(";
  }

  ParamExpr term() {
    ParamExpr left = unary();
    for (;;) {
      if (is_punct('*') || is_punct('/')) {
        const char op = next().text[0];
        const int col = peek().col;
        ParamExpr right = unary();
        try {
          left = op == '*' ? left * right : left / right;
        } catch (const DomainError& e) {
          throw ParseError(line_, col, e.what());
        }
      } else if (starts_factor()) {
        left = left * unary();
      } else {
        return left;
      }
    }
  }

  ParamExpr unary() {
    if (is_punct('-')) {
      next();
      return -unary();
    }
    if (is_punct('+')) {
      next();
      return unary();
    }
    return primary();
  }

  ParamExpr primary() {
    const Token& t = peek();
    if (t.kind == Tok::number) return ParamExpr::constant(Rational(Integer{next().text}));
    if (t.kind == Tok::ident && !kStopWords.count(t.text)) return ParamExpr::symbol(next().text);
    if (is_punct('(')) {
      next();
      ParamExpr inner = expr();
      expect_punct(')');
      return inner;
    }
    fail("an expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

std::vector<std::pair<std::string, int>> mult_list(Cursor& c) {
  std::vector<std::pair<std::string, int>> out;
  std::set<std::string> seen;
  if (c.at_end() || c.is_punct(';')) return out;
  for (;;) {
    const int col = c.peek().col;
    const std::string name = c.ident("a curve name");
    c.expect_punct('=');
    const int m = c.integer("a multiplicity");
    if (!seen.insert(name).second) throw ParseError(c.line(), col, "curve '" + name + "' listed twice");
    out.emplace_back(name, m);
    if (!c.is_punct(',')) break;
    c.next();
  }
  return out;
}

std::vector<Token> slice(const std::vector<Token>& toks, std::size_t begin, std::size_t end) {
  std::vector<Token> out(toks.begin() + begin, toks.begin() + end);
  const Token& last = toks[end];
  out.push_back({Tok::end, "", last.col, last.col});
  return out;
}

// split at top-level ';'
std::vector<std::vector<Token>> statements(const std::vector<Token>& toks) {
  std::vector<std::vector<Token>> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const bool sep = toks[i].kind == Tok::punct && toks[i].text == ";";
    if (sep || toks[i].kind == Tok::end) {
      if (i > begin) out.push_back(slice(toks, begin, i));
      begin = i + 1;
    }
  }
  return out;
}

enum class Section { none, surface, curves, points, tangents, cone, params, divisors, queries };

Section section_named(const std::string& s) {
  if (s == "surface") return Section::surface;
  if (s == "curves") return Section::curves;
  if (s == "points") return Section::points;
  if (s == "tangents") return Section::tangents;
  if (s == "cone") return Section::cone;
  if (s == "params") return Section::params;
  if (s == "divisors") return Section::divisors;
  if (s == "queries") return Section::queries;
  return Section::none;
}

void parse_surface(Cursor& c, Document& doc) {
  if (!doc.surface) doc.surface = SurfaceDecl{{}, {}, ParamExpr(), Rational(1), {c.line()}};
  auto& s = *doc.surface;
  const int key_col = c.peek().col;
  const std::string key = c.ident("a surface key");
  c.expect_punct('=');
  if (key == "basis") {
    s.basis = c.name_list();
  } else if (key == "gram") {
    s.gram.clear();
    c.expect_punct('[');
    for (;;) {
      c.expect_punct('[');
      std::vector<Rational> row{c.constant("gram entry")};
      while (c.is_punct(',')) {
        c.next();
        row.push_back(c.constant("gram entry"));
      }
      c.expect_punct(']');
      s.gram.push_back(std::move(row));
      if (!c.is_punct(',')) break;
      c.next();
    }
    c.expect_punct(']');
  } else if (key == "K") {
    s.canonical = c.expr();
  } else if (key == "chi_O") {
    s.chi_o = c.constant("chi_O");
  } else {
    throw ParseError(c.line(), key_col, "unknown surface key '" + key + "' (basis, gram, K, chi_O)");
  }
  c.expect_end();
}

void parse_cone(Cursor& c, Document& doc) {
  if (!doc.cone) doc.cone = ConeDecl{};
  auto& cone = *doc.cone;
  const int kind_col = c.peek().col;
  const std::string kind = c.word("a cone statement");
  if (kind == "hirzebruch") {
    cone.hirzebruch_n = c.integer("the Hirzebruch index");
    cone.at = {c.line()};
    while (!c.at_end()) {
      const int key_col = c.peek().col;
      const std::string key = c.ident("section= or fiber=");
      c.expect_punct('=');
      if (key == "section")
        cone.section = c.ident();
      else if (key == "fiber")
        cone.fiber = c.ident();
      else
        throw ParseError(c.line(), key_col, "unknown hirzebruch option '" + key + "'");
    }
  } else if (kind == "place") {
    PlacementDecl p;
    p.at = {c.line()};
    p.point = c.ident("a point name");
    const int where_col = c.peek().col;
    const std::string where = c.word("on-section or off-section");
    if (where == "on-section")
      p.on_section = true;
    else if (where != "off-section")
      throw ParseError(c.line(), where_col, "expected on-section or off-section, found '" + where + "'");
    if (!c.at_end()) {
      c.expect_word("fiber");
      c.expect_punct('=');
      p.fiber = c.ident("a fiber label");
    }
    cone.placements.push_back(std::move(p));
  } else if (kind == "orient") {
    OrientDecl o;
    o.at = {c.line()};
    o.tangent = c.ident("a tangent name");
    const int dir_col = c.peek().col;
    const std::string dir = c.word("a direction");
    if (dir == "along-section")
      o.direction = TangentDirection::along_section;
    else if (dir == "along-fiber")
      o.direction = TangentDirection::along_fiber;
    else if (dir == "transverse")
      o.direction = TangentDirection::transverse;
    else
      throw ParseError(c.line(), dir_col, "unknown direction '" + dir + "' (along-section, along-fiber, transverse)");
    cone.orientations.push_back(std::move(o));
  } else if (kind == "generator") {
    GeneratorDecl g;
    g.at = {c.line()};
    g.name = c.ident("a generator name");
    c.expect_punct('=');
    g.cls = c.expr();
    if (c.is_word("through")) {
      c.next();
      g.through = c.name_list();
    }
    if (c.is_word("contains")) {
      c.next();
      g.contains = c.name_list();
    }
    cone.generators.push_back(std::move(g));
  } else {
    throw ParseError(c.line(), kind_col, "unknown cone statement '" + kind + "' (hirzebruch, place, orient, generator)");
  }
  c.expect_end();
}

Query parse_query(Cursor& c) {
  Query q;
  q.at = {c.line()};
  q.command = c.word("a query command");
  while (!c.at_end()) {
    if (c.peek().kind == Tok::ident && c.peek(1).kind == Tok::punct && c.peek(1).text == "=") {
      const std::string key = c.ident();
      c.next();
      if (key == "witness") {
        std::vector<ParamExpr> values;
        c.expect_punct('(');
        values.push_back(c.expr());
        while (c.is_punct(',')) {
          c.next();
          values.push_back(c.expr());
        }
        c.expect_punct(')');
        q.witness = std::move(values);
      } else {
        q.options.emplace_back(key, c.value());
      }
    } else {
      q.args.push_back(c.value());
    }
  }
  return q;
}

void parse_statement(Section section, Cursor& c, Document& doc) {
  const int line = c.line();
  switch (section) {
    case Section::none:
      throw ParseError(line, c.peek().col, "statement outside of any section");
    case Section::surface:
      parse_surface(c, doc);
      return;
    case Section::curves: {
      CurveDecl d{c.ident("a curve name"), {}, {line}};
      c.expect_punct('=');
      d.cls = c.expr();
      c.expect_end();
      doc.curves.push_back(std::move(d));
      return;
    }
    case Section::points: {
      PointDecl p{c.ident("a point name"), {}, {line}};
      c.expect_punct(':');
      p.mults = mult_list(c);
      c.expect_end();
      doc.points.push_back(std::move(p));
      return;
    }
    case Section::tangents: {
      TangentDecl t;
      t.at = {line};
      t.name = c.ident("a tangent name");
      c.expect_word("at");
      t.point = c.ident("a point name");
      c.expect_punct(':');
      t.mults_V = mult_list(c);
      while (c.is_punct(';')) {
        c.next();
        c.expect_word("contains");
        const auto names = c.name_list();
        t.contains.insert(t.contains.end(), names.begin(), names.end());
      }
      c.expect_end();
      doc.tangents.push_back(std::move(t));
      return;
    }
    case Section::cone:
      parse_cone(c, doc);
      return;
    case Section::params: {
      ParamDecl p;
      p.at = {line};
      p.name = c.ident("a parameter name");
      c.expect_word("in");
      c.expect_punct('(');
      p.lo = c.constant("lower end");
      c.expect_punct(',');
      p.hi = c.constant("upper end");
      c.expect_punct(')');
      c.expect_end();
      doc.params.push_back(std::move(p));
      return;
    }
    case Section::divisors: {
      DivisorDecl d{c.ident("a divisor name"), {}, {line}};
      c.expect_punct('=');
      d.expr = c.expr();
      c.expect_end();
      doc.divisors.push_back(std::move(d));
      return;
    }
    case Section::queries:
      doc.queries.push_back(parse_query(c));
      return;
  }
}

}  // namespace

Document parse_document(std::string_view text) {
  Document doc;
  Section section = Section::none;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto toks = lex(line, line_no);
    if (toks.front().kind == Tok::end) continue;

    if (toks.front().kind == Tok::punct && toks.front().text == "[") {
      Cursor c(toks, line_no);
      c.next();
      const int col = c.peek().col;
      const std::string name = c.ident("a section name");
      c.expect_punct(']');
      c.expect_end();
      section = section_named(name);
      if (section == Section::none) throw ParseError(line_no, col, "unknown section '" + name + "'");
      continue;
    }

    if (section == Section::tangents) {
      Cursor c(toks, line_no);
      parse_statement(section, c, doc);
      continue;
    }
    for (auto& stmt : statements(toks)) {
      Cursor c(std::move(stmt), line_no);
      parse_statement(section, c, doc);
    }
  }
  return doc;
}

// ---------------------------------------------------------------- printing

namespace {

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string mults_text(const std::vector<std::pair<std::string, int>>& mults) {
  std::vector<std::string> parts;
  for (const auto& [c, m] : mults) parts.push_back(c + " = " + std::to_string(m));
  return join(parts);
}

const char* direction_word(TangentDirection d) {
  switch (d) {
    case TangentDirection::along_section: return "along-section";
    case TangentDirection::along_fiber: return "along-fiber";
    case TangentDirection::transverse: return "transverse";
  }
  return "transverse";
}

}  // namespace

std::string print_document(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  auto header = [&](const char* name) {
    if (!first) os << "\n";
    first = false;
    os << "[" << name << "]\n";
  };

  if (doc.surface) {
    header("surface");
    const auto& s = *doc.surface;
    os << "basis = " << join(s.basis) << "\n";
    std::vector<std::string> rows;
    for (const auto& row : s.gram) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(to_string(v));
      rows.push_back("[" + join(cells) + "]");
    }
    os << "gram = [" << join(rows) << "]\n";
    os << "K = " << to_string(s.canonical) << "\n";
    os << "chi_O = " << to_string(s.chi_o) << "\n";
  }
  if (!doc.curves.empty()) {
    header("curves");
    for (const auto& c : doc.curves) os << c.name << " = " << to_string(c.cls) << "\n";
  }
  if (!doc.points.empty()) {
    header("points");
    for (const auto& p : doc.points) {
      os << p.name << ":";
      if (!p.mults.empty()) os << " " << mults_text(p.mults);
      os << "\n";
    }
  }
  if (!doc.tangents.empty()) {
    header("tangents");
    for (const auto& t : doc.tangents) {
      os << t.name << " at " << t.point << ":";
      if (!t.mults_V.empty()) os << " " << mults_text(t.mults_V);
      if (!t.contains.empty()) os << "; contains " << join(t.contains);
      os << "\n";
    }
  }
  if (doc.cone) {
    header("cone");
    const auto& c = *doc.cone;
    if (c.hirzebruch_n)
      os << "hirzebruch " << *c.hirzebruch_n << " section=" << c.section << " fiber=" << c.fiber << "\n";
    for (const auto& p : c.placements) {
      os << "place " << p.point << (p.on_section ? " on-section" : " off-section");
      if (!p.fiber.empty()) os << " fiber=" << p.fiber;
      os << "\n";
    }
    for (const auto& o : c.orientations) os << "orient " << o.tangent << " " << direction_word(o.direction) << "\n";
    for (const auto& g : c.generators) {
      os << "generator " << g.name << " = " << to_string(g.cls);
      if (!g.through.empty()) os << " through " << join(g.through);
      if (!g.contains.empty()) os << " contains " << join(g.contains);
      os << "\n";
    }
  }
  if (!doc.params.empty()) {
    header("params");
    for (const auto& p : doc.params) os << p.name << " in (" << to_string(p.lo) << ", " << to_string(p.hi) << ")\n";
  }
  if (!doc.divisors.empty()) {
    header("divisors");
    for (const auto& d : doc.divisors) os << d.name << " = " << to_string(d.expr) << "\n";
  }
  if (!doc.queries.empty()) {
    header("queries");
    for (const auto& q : doc.queries) {
      os << q.command;
      for (const auto& a : q.args) os << " " << a;
      for (const auto& [k, v] : q.options) os << " " << k << "=" << v;
      if (q.witness) {
        std::vector<std::string> parts;
        for (const auto& e : *q.witness) parts.push_back(to_string(e));
        os << " witness=(" << join(parts) << ")";
      }
      os << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- resolution

DivisorForm Workspace::divisor(const std::string& name) const {
  if (const auto it = symbols.divisors.find(name); it != symbols.divisors.end()) return it->second;
  if (symbols.curves.count(name)) return DivisorForm{{name, AffineForm::of(1)}};
  throw UnknownNameError("undefined divisor '" + name + "'");
}

QDivisor Workspace::concrete(const std::string& name) const {
  if (!surface) throw DomainError("document declares no surface");
  std::map<std::string, Rational> coeffs;
  for (const auto& [curve, coeff] : divisor(name)) {
    if (!coeff.is_constant())
      throw DomainError("divisor '" + name + "' depends on parameters; use a search query");
    coeffs.emplace(curve, coeff.constant);
  }
  return QDivisor(surface, std::move(coeffs));
}

namespace {

template <typename Fn>
auto at_line(const SourceLine& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where.line, 1, e.what());
  }
}

DivisorClass class_in_basis(const ParamExpr& e, const LatticePtr& lattice) {
  SymbolTable table;
  for (const auto& l : lattice->basis_labels()) table.curves.insert(l);
  const DivisorForm form = linearize_divisor(e, table);
  std::vector<Rational> coeffs(lattice->rank());
  for (const auto& [label, coeff] : form) {
    if (!coeff.is_constant()) throw DomainError("class expressions cannot depend on parameters");
    coeffs[*lattice->index_of(label)] = coeff.constant;
  }
  return DivisorClass(lattice, std::move(coeffs));
}

}  // namespace

Workspace resolve(const Document& doc) {
  Workspace ws;
  if (doc.surface) {
    const auto& s = *doc.surface;
    at_line(s.at, [&] {
      if (s.basis.empty()) throw InvariantError("surface needs 'basis ='");
      auto lattice = std::make_shared<const IntersectionLattice>(s.basis, s.gram);
      if (s.canonical == ParamExpr()) throw InvariantError("surface needs 'K ='");
      ws.surface = std::make_shared<SurfaceModel>(lattice, class_in_basis(s.canonical, lattice), s.chi_o);
      return 0;
    });
  }
  auto need_surface = [&](const SourceLine& where, const char* what) {
    if (!ws.surface) throw ParseError(where.line, 1, std::string(what) + " declared without a [surface]");
  };

  for (const auto& c : doc.curves) {
    need_surface(c.at, "curve");
    at_line(c.at, [&] {
      ws.surface->add_curve(c.name, class_in_basis(c.cls, ws.surface->lattice()));
      return 0;
    });
    ws.symbols.curves.insert(c.name);
  }
  for (const auto& p : doc.points) {
    need_surface(p.at, "point");
    at_line(p.at, [&] {
      PointSpec spec{p.name, {}};
      for (const auto& [c, m] : p.mults) spec.mults[c] = m;
      ws.surface->add_point(std::move(spec));
      return 0;
    });
  }
  for (const auto& t : doc.tangents) {
    need_surface(t.at, "tangent");
    at_line(t.at, [&] {
      TangentSpec spec{t.name, t.point, {}, {t.contains.begin(), t.contains.end()}};
      for (const auto& [c, m] : t.mults_V) spec.mults_V[c] = m;
      ws.surface->add_tangent(std::move(spec));
      return 0;
    });
  }

  if (doc.cone) {
    const auto& c = *doc.cone;
    need_surface(c.at, "cone");
    const auto& surface = *ws.surface;
    if (c.hirzebruch_n) {
      at_line(c.at, [&] {
        if (!c.generators.empty()) throw InvariantError("a cone is either hirzebruch or a generator list");
        HirzebruchFamily fam{*c.hirzebruch_n, surface.curve(c.section).cls, surface.curve(c.fiber).cls, {}, {}};
        for (const auto& p : c.placements) {
          at_line(p.at, [&] {
            surface.point(p.point);
            fam.placements[p.point] = {p.on_section, p.fiber};
            return 0;
          });
        }
        for (const auto& o : c.orientations) {
          at_line(o.at, [&] {
            surface.tangent(o.tangent);
            fam.orientations[o.tangent] = o.direction;
            return 0;
          });
        }
        ws.cone.emplace(std::move(fam));
        return 0;
      });
    } else {
      FiniteGenerators gens;
      for (const auto& g : c.generators) {
        at_line(g.at, [&] {
          SymbolTable curves_only;
          curves_only.curves = ws.symbols.curves;
          std::map<std::string, Rational> coeffs;
          for (const auto& [curve, coeff] : linearize_divisor(g.cls, curves_only)) {
            if (!coeff.is_constant()) throw DomainError("generator classes cannot depend on parameters");
            coeffs.emplace(curve, coeff.constant);
          }
          for (const auto& p : g.through) surface.point(p);
          for (const auto& t : g.contains) surface.tangent(t);
          gens.generators.push_back({g.name, class_of(QDivisor(ws.surface, std::move(coeffs))),
                                     {g.through.begin(), g.through.end()}, {g.contains.begin(), g.contains.end()}});
          return 0;
        });
      }
      if (!c.placements.empty() || !c.orientations.empty())
        throw ParseError(c.placements.empty() ? c.orientations.front().at.line : c.placements.front().at.line, 1,
                         "place/orient only apply to a hirzebruch cone");
      at_line(c.at, [&] {
        ws.cone.emplace(std::move(gens));
        return 0;
      });
    }
  }

  for (const auto& p : doc.params) {
    if (ws.symbols.curves.count(p.name) || ws.symbols.params.count(p.name))
      throw ParseError(p.at.line, 1, "name '" + p.name + "' is already declared");
    ws.params.push_back({p.name, p.lo, p.hi});
    ws.symbols.params.insert(p.name);
  }
  for (const auto& d : doc.divisors) {
    if (ws.symbols.curves.count(d.name) || ws.symbols.params.count(d.name) || ws.symbols.divisors.count(d.name))
      throw ParseError(d.at.line, 1, "name '" + d.name + "' is already declared");
    at_line(d.at, [&] {
      ws.symbols.divisors[d.name] = linearize_divisor(d.expr, ws.symbols);
      return 0;
    });
  }
  return ws;
}

std::pair<Document, Workspace> load(std::string_view text) {
  Document doc = parse_document(text);
  Workspace ws = resolve(doc);
  return {std::move(doc), std::move(ws)};
}

}  // namespace qreider
