#include "area/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "area/errors.hpp"

namespace area {

void FileOptions::apply(ProverOptions& opts) const {
  if (area_coords) opts.area_coords = *area_coords;
  if (oracle_samples) opts.oracle_samples = *oracle_samples;
  if (seed) opts.seed = *seed;
}

namespace {

struct PredicateShape {
  std::vector<int> groups;
};

const std::map<std::string, PredicateShape>& predicates() {
  static const std::map<std::string, PredicateShape> table = {
      {"collinear", {{3}}},     {"parallel", {{2, 2}}}, {"perpendicular", {{2, 2}}},
      {"identical", {{2}}},     {"midpoint", {{1, 2}}}, {"eqdist", {{2, 2}}},
  };
  return table;
}

std::string join_groups(const std::vector<std::string>& args, const std::vector<int>& groups) {
  std::string out;
  std::size_t k = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g > 0) out += ";";
    for (int i = 0; i < groups[g]; ++i, ++k) {
      if (i > 0) out += ",";
      out += args.at(k);
    }
  }
  return out;
}

}  // namespace

Conjecture Goal::conjecture() const {
  if (predicate.empty()) return Conjecture{{clause}, {}};
  const auto& a = arguments;
  if (predicate == "collinear") return collinear(a[0], a[1], a[2]);
  if (predicate == "parallel") return parallel(a[0], a[1], a[2], a[3]);
  if (predicate == "perpendicular") return perpendicular(a[0], a[1], a[2], a[3]);
  if (predicate == "identical") return identical(a[0], a[1]);
  if (predicate == "midpoint") return midpoint(a[0], a[1], a[2]);
  if (predicate == "eqdist") return eqdist(a[0], a[1], a[2], a[3]);
  throw Error(ErrorKind::InvalidArgument, "unknown predicate '" + predicate + "'");
}

std::string Goal::to_string() const {
  if (predicate.empty()) return clause.to_string();
  return predicate + "(" + join_groups(arguments, predicates().at(predicate).groups) + ")";
}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  static const std::vector<std::pair<std::string, std::string>> symbols = {
      {":=", ":="}, {"==", "="}, {"!=", "!="}, {"<=", "<="}, {">=", ">="},
      {"≠", "!="}, {"≤", "<="}, {"≥", ">="}, {"−", "-"},
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\'')) ++j;
      t.kind = Tok::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      t.kind = Tok::Number;
      t.text = src.substr(i, j - i);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    bool matched = false;
    for (const auto& [spelling, canon] : symbols) {
      if (src.compare(i, spelling.size(), spelling) == 0) {
        t.kind = Tok::Symbol;
        t.text = canon;
        advance(spelling.size());
        out.push_back(t);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string("()[],;:+-*/^=<>").find(ch) != std::string::npos) {
      t.kind = Tok::Symbol;
      t.text = std::string(1, ch);
      advance(1);
      out.push_back(t);
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

Scalar parse_number(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return Scalar(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::string den = "1" + std::string(text.size() - dot - 1, '0');
  Scalar v(digits + "/" + den);
  v.canonicalize();
  return v;
}

bool is_keyword(const std::string& s) {
  return s == "param" || s == "points" || s == "prove" || s == "option";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  SourceFile file() {
    SourceFile out;
    bool have_goal = false;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::Ident && t.text == "param") {
        next();
        parameter_list(out);
      } else if (t.kind == Tok::Ident && t.text == "points") {
        next();
        points_statement(out);
      } else if (t.kind == Tok::Ident && t.text == "option") {
        next();
        option(out.options);
      } else if (t.kind == Tok::Ident && t.text == "prove") {
        Token at = next();
        if (have_goal) throw ParseError(at.line, at.col, "a file has exactly one goal");
        out.goal = goal(out);
        have_goal = true;
      } else if (t.kind == Tok::Ident && is_ecs(t.text) && peek(1).text == "(") {
        raw_step(out);
      } else if (t.kind == Tok::Ident && peek(1).text == ":=") {
        named_step(out);
      } else {
        fail(t, "expected a statement");
      }
      accept(";");
    }
    if (!have_goal) fail(peek(), "missing 'prove' goal");
    return out;
  }

  ExprTree standalone_expression() {
    ExprTree e = expression(nullptr);
    if (peek().kind != Tok::End) fail(peek(), "unexpected trailing input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(const std::string& sym) {
    if (peek().kind == Tok::Symbol && peek().text == sym) {
      next();
      return true;
    }
    return false;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, msg + ", found " + found);
  }
  Token expect(const std::string& sym) {
    if (!(peek().kind == Tok::Symbol && peek().text == sym)) fail(peek(), "expected '" + sym + "'");
    return next();
  }
  Token ident(const char* what) {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail(peek(), std::string("expected ") + what);
    return next();
  }
  static bool is_ecs(const std::string& s) { return s.size() == 4 && s.rfind("ECS", 0) == 0 && s[3] >= '1' && s[3] <= '5'; }

  static std::string at(const Token& t) { return std::to_string(t.line) + ":" + std::to_string(t.col) + ": "; }

  void declare_name(SourceFile& f, const Token& t) {
    if (f.construction.has_point(t.text) || f.construction.parameters().count(t.text)) {
      throw Error(ErrorKind::DuplicatePoint, at(t) + "'" + t.text + "' is already declared");
    }
  }

  void parameter_list(SourceFile& f) {
    do {
      Token t = ident("a parameter name");
      declare_name(f, t);
      f.construction.declare_parameter(t.text);
      params_.insert(t.text);
      f.parameters.push_back(t.text);
      accept(",");
    } while (peek().kind == Tok::Ident && !is_keyword(peek().text) && peek(1).text != ":=" &&
             !(is_ecs(peek().text) && peek(1).text == "("));
  }

  void points_statement(SourceFile& f) {
    std::vector<Token> names;
    do {
      names.push_back(ident("a point name"));
      accept(",");
    } while (peek().kind == Tok::Ident && !is_keyword(peek().text) && peek(1).text != ":=" &&
             !(is_ecs(peek().text) && peek(1).text == "("));
    std::vector<std::string> pts;
    for (const auto& t : names) pts.push_back(t.text);
    append(f, Step::free_points(pts), names.front());
  }

  void append(SourceFile& f, Step step, const Token& where) {
    for (const auto& name : step.introduced()) {
      if (f.construction.parameters().count(name)) {
        throw Error(ErrorKind::DuplicatePoint, at(where) + "'" + name + "' is already declared as a parameter");
      }
    }
    if (step.r) check_params(*step.r, where);
    try {
      f.construction.append_step(std::move(step));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnknownPoint || e.kind() == ErrorKind::DuplicatePoint) {
        throw Error(e.kind(), at(where) + e.what());
      }
      throw;
    }
  }

  void check_params(const ExprTree& e, const Token& where) const {
    std::set<std::string> used;
    e.collect_params(used);
    for (const auto& p : used) {
      if (!params_.count(p)) throw ParseError(where.line, where.col, "undeclared parameter '" + p + "'");
    }
  }

  std::vector<std::string> name_group(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) expect(",");
      out.push_back(ident("a point name").text);
    }
    return out;
  }

  void named_step(SourceFile& f) {
    Token y = next();
    expect(":=");
    Token ctor = ident("a constructor");
    expect("(");
    Step step;
    if (ctor.text == "intersect") {
      auto uv = name_group(2);
      expect(";");
      auto pq = name_group(2);
      step = Step::intersection(y.text, uv[0], uv[1], pq[0], pq[1]);
    } else if (ctor.text == "foot") {
      auto p = name_group(1);
      expect(";");
      auto uv = name_group(2);
      step = Step::foot(y.text, p[0], uv[0], uv[1]);
    } else if (ctor.text == "on_parallel") {
      auto w = name_group(1);
      expect(";");
      auto uv = name_group(2);
      expect(";");
      ExprTree r = expression(&f);
      step = Step::on_parallel(y.text, w[0], uv[0], uv[1], r);
    } else if (ctor.text == "on_perp") {
      auto uv = name_group(2);
      expect(";");
      ExprTree r = expression(&f);
      step = Step::on_perpendicular(y.text, uv[0], uv[1], r);
    } else if (is_ecs(ctor.text) && ctor.text != "ECS1") {
      step = ecs_arguments(f, ctor, y.text);
    } else {
      fail(ctor, "unknown constructor '" + ctor.text + "'");
    }
    expect(")");
    append(f, std::move(step), y);
  }

  Step ecs_arguments(SourceFile& f, const Token& ctor, const std::string& y) {
    int k = ctor.text[3] - '0';
    std::vector<std::string> args;
    auto sep = [&] {
      if (!accept(",")) expect(";");
    };
    std::size_t names = k == 2 ? 4 : k == 3 ? 3 : k == 4 ? 3 : 2;
    for (std::size_t i = 0; i < names; ++i) {
      if (i > 0) sep();
      args.push_back(ident("a point name").text);
    }
    switch (k) {
      case 2: return Step::intersection(y, args[0], args[1], args[2], args[3]);
      case 3: return Step::foot(y, args[0], args[1], args[2]);
      case 4: sep(); return Step::on_parallel(y, args[0], args[1], args[2], expression(&f));
      default: sep(); return Step::on_perpendicular(y, args[0], args[1], expression(&f));
    }
  }

  void raw_step(SourceFile& f) {
    Token ctor = next();
    expect("(");
    if (ctor.text == "ECS1") {
      std::vector<Token> names;
      do {
        names.push_back(ident("a point name"));
      } while (accept(","));
      expect(")");
      std::vector<std::string> pts;
      for (const auto& t : names) pts.push_back(t.text);
      append(f, Step::free_points(pts), names.front());
      return;
    }
    Token y = ident("a point name");
    if (!accept(",")) expect(";");
    Step step = ecs_arguments(f, ctor, y.text);
    expect(")");
    append(f, std::move(step), y);
  }

  void option(FileOptions& o) {
    Token key = ident("an option name");
    expect("=");
    Token value = next();
    try {
      if (key.text == "area_coords") {
        o.area_coords = parse_area_coords_mode(value.text);
      } else if (key.text == "oracle_samples") {
        if (value.kind != Tok::Number) fail(value, "expected a number");
        o.oracle_samples = std::stoi(value.text);
      } else if (key.text == "seed") {
        if (value.kind != Tok::Number) fail(value, "expected a number");
        o.seed = std::stoull(value.text);
      } else {
        fail(key, "unknown option '" + key.text + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(value.line, value.col, e.what());
    }
  }

  Goal goal(SourceFile& f) {
    Goal g;
    if (peek().kind == Tok::Ident && predicates().count(peek().text) && peek(1).text == "(") {
      Token name = next();
      const auto& shape = predicates().at(name.text).groups;
      expect("(");
      for (std::size_t gi = 0; gi < shape.size(); ++gi) {
        if (gi > 0) expect(";");
        for (int i = 0; i < shape[gi]; ++i) {
          if (i > 0) expect(",");
          Token t = ident("a point name");
          require_point(f, t);
          g.arguments.push_back(t.text);
        }
      }
      expect(")");
      g.predicate = name.text;
      return g;
    }
    g.clause.lhs = expression(&f);
    g.clause.relation = relation();
    g.clause.rhs = expression(&f);
    return g;
  }

  Relation relation() {
    const Token& t = peek();
    static const std::map<std::string, Relation> rels = {{"=", Relation::Eq},  {"!=", Relation::Ne},
                                                         {"<=", Relation::Le}, {"<", Relation::Lt},
                                                         {">=", Relation::Ge}, {">", Relation::Gt}};
    if (t.kind == Tok::Symbol) {
      auto it = rels.find(t.text);
      if (it != rels.end()) {
        next();
        return it->second;
      }
    }
    fail(t, "expected a relation");
  }

  void require_point(SourceFile& f, const Token& t) {
    if (!f.construction.has_point(t.text)) {
      throw Error(ErrorKind::UnknownPoint, at(t) + "unknown point '" + t.text + "'");
    }
  }

  ExprTree expression(SourceFile* f) {
    std::vector<ExprTree> terms{term(f)};
    while (peek().kind == Tok::Symbol && (peek().text == "+" || peek().text == "-")) {
      bool minus = next().text == "-";
      ExprTree t = term(f);
      terms.push_back(minus ? ExprTree::neg(t) : t);
    }
    return ExprTree::sum(std::move(terms));
  }

  ExprTree term(SourceFile* f) {
    if (accept("-")) return ExprTree::neg(term(f));
    if (accept("+")) return term(f);
    std::vector<ExprTree> acc{power(f)};
    while (peek().kind == Tok::Symbol && (peek().text == "*" || peek().text == "/")) {
      if (next().text == "*") {
        acc.push_back(power(f));
      } else {
        ExprTree q = ExprTree::quotient(ExprTree::product(std::move(acc)), power(f));
        acc = {q};
      }
    }
    return ExprTree::product(std::move(acc));
  }

  ExprTree power(SourceFile* f) {
    ExprTree base = primary(f);
    if (!accept("^")) return base;
    bool paren = accept("(");
    bool negative = accept("-");
    Token n = next();
    if (n.kind != Tok::Number || n.text.find('.') != std::string::npos) fail(n, "expected an integer exponent");
    if (paren) expect(")");
    int e = std::stoi(n.text);
    return ExprTree::power(base, negative ? -e : e);
  }

  std::vector<std::string> atom_points(SourceFile* f, const std::vector<int>& groups, const std::string& close) {
    std::vector<std::string> out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (g > 0) expect(";");
      for (int i = 0; i < groups[g]; ++i) {
        if (i > 0) expect(",");
        Token t = ident("a point name");
        if (f) require_point(*f, t);
        out.push_back(t.text);
      }
    }
    expect(close);
    return out;
  }

  ExprTree primary(SourceFile* f) {
    Token t = next();
    if (t.kind == Tok::Number) return ExprTree::constant(parse_number(t.text));
    if (t.kind == Tok::Symbol && t.text == "(") {
      ExprTree e = expression(f);
      expect(")");
      return e;
    }
    if (t.kind != Tok::Ident) fail(t, "expected an expression");
    if ((t.text == "S" || t.text == "P") && peek().text == "[") {
      next();
      std::vector<std::string> pts;
      do {
        Token p = ident("a point name");
        if (f) require_point(*f, p);
        pts.push_back(p.text);
      } while (accept(","));
      Token close = expect("]");
      if (pts.size() != 3 && pts.size() != 4) throw ParseError(close.line, close.col, t.text + "[...] takes 3 or 4 points");
      return t.text == "S" ? ExprTree::S(pts) : ExprTree::P(pts);
    }
    if (peek().text == "(") {
      if (t.text == "ratio") {
        next();
        return ExprTree::quantity(QuantityKind::DistRatio, atom_points(f, {2, 2}, ")"));
      }
      if (t.text == "d2") {
        next();
        return ExprTree::quantity(QuantityKind::QuadDist, atom_points(f, {2}, ")"));
      }
      if (t.text == "dist") {
        next();
        return ExprTree::sqrt(ExprTree::quantity(QuantityKind::QuadDist, atom_points(f, {2}, ")")));
      }
      if (t.text == "sqrt") {
        next();
        ExprTree e = expression(f);
        expect(")");
        return ExprTree::sqrt(e);
      }
      fail(t, "unknown function '" + t.text + "'");
    }
    if (is_keyword(t.text)) fail(t, "expected an expression");
    if (f && !params_.count(t.text)) {
      if (f->construction.has_point(t.text)) fail(t, "a point cannot be used as a value");
      throw ParseError(t.line, t.col, "undeclared parameter '" + t.text + "'");
    }
    return ExprTree::param(t.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> params_;
};

}  // namespace

SourceFile parse(const std::string& text) {
  Parser p(text);
  return p.file();
}

ExprTree parse_expression(const std::string& text) {
  Parser p(text);
  return p.standalone_expression();
}

std::string print(const SourceFile& file) {
  std::ostringstream out;
  for (const auto& p : file.parameters) out << "param " << p << "\n";
  for (const auto& step : file.construction.steps()) {
    const auto& a = step.points;
    switch (step.kind) {
      case StepKind::ECS1:
        out << "points";
        for (const auto& n : a) out << " " << n;
        break;
      case StepKind::ECS2:
        out << a[0] << " := intersect(" << a[1] << "," << a[2] << "; " << a[3] << "," << a[4] << ")";
        break;
      case StepKind::ECS3:
        out << a[0] << " := foot(" << a[1] << "; " << a[2] << "," << a[3] << ")";
        break;
      case StepKind::ECS4:
        out << a[0] << " := on_parallel(" << a[1] << "; " << a[2] << "," << a[3] << "; " << step.r->to_string() << ")";
        break;
      case StepKind::ECS5:
        out << a[0] << " := on_perp(" << a[1] << "," << a[2] << "; " << step.r->to_string() << ")";
        break;
    }
    out << "\n";
  }
  const FileOptions& o = file.options;
  if (o.area_coords) out << "option area_coords = " << area_coords_mode_name(*o.area_coords) << "\n";
  if (o.oracle_samples) out << "option oracle_samples = " << *o.oracle_samples << "\n";
  if (o.seed) out << "option seed = " << *o.seed << "\n";
  out << "prove " << file.goal.to_string() << "\n";
  return out.str();
}

}  // namespace area
