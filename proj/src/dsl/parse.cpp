#include "trigbash/dsl/ast.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace trigbash::dsl {

namespace {

const std::set<std::string> kReservedWords = {
    "parallel",    "perpendicular",  "centroid",   "circumcenter", "incenter",
    "orthocenter", "symmedian_point"};

const std::set<std::string> kKeywords = {"free",    "triangle", "point", "on",
                                         "let",     "require",  "assert"};

const std::set<std::string> kConstraintWords = {"acute",     "obtuse_at", "scalene",
                                                "isosceles", "min_angle", "order"};

struct Token {
  enum class Kind { Ident, Number, Angle, Sym, End } kind = Kind::End;
  std::string text;   // ident text or symbol
  double number = 0.0;
  bool deg = false;   // Angle unit
  int col = 0;
};

class LineLexer {
 public:
  LineLexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
    throw ParseError{line_no_, tok_.col, msg, std::move(expected)};
  }
  int line_no() const { return line_no_; }

 private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.col = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size() || line_[pos_] == '#') {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Kind::Ident;
      tok_.text = line_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
        (c == '.' && pos_ + 1 < line_.size() &&
         std::isdigit(static_cast<unsigned char>(line_[pos_ + 1])))) {
      size_t start = pos_;
      if (c == '-' || c == '+') ++pos_;
      bool any = false;
      while (pos_ < line_.size() &&
             (std::isdigit(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '.')) {
        ++pos_;
        any = true;
      }
      if (pos_ < line_.size() && (line_[pos_] == 'e' || line_[pos_] == 'E')) {
        size_t mark = pos_;
        ++pos_;
        if (pos_ < line_.size() && (line_[pos_] == '-' || line_[pos_] == '+')) ++pos_;
        if (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
          while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        } else {
          pos_ = mark;
        }
      }
      if (!any) {
        tok_.col = static_cast<int>(start) + 1;
        throw ParseError{line_no_, tok_.col, "malformed number", {"digit"}};
      }
      std::string num = line_.substr(start, pos_ - start);
      double value = 0.0;
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc() || p != num.data() + num.size())
        throw ParseError{line_no_, static_cast<int>(start) + 1, "malformed number '" + num + "'", {"number"}};
      // optional unit suffix glued to the number
      if (line_.compare(pos_, 3, "deg") == 0) {
        pos_ += 3;
        tok_.kind = Token::Kind::Angle;
        tok_.deg = true;
      } else if (line_.compare(pos_, 3, "rad") == 0) {
        pos_ += 3;
        tok_.kind = Token::Kind::Angle;
        tok_.deg = false;
      } else {
        tok_.kind = Token::Kind::Number;
      }
      tok_.number = value;
      tok_.text = num;
      return;
    }
    if (c == '<' || c == '>') {
      if (pos_ + 1 < line_.size() && line_[pos_ + 1] == '=') {
        tok_.text = line_.substr(pos_, 2);
        pos_ += 2;
      } else {
        tok_.text = std::string(1, c);
        ++pos_;
      }
      tok_.kind = Token::Kind::Sym;
      return;
    }
    if (std::string("(){},=@").find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Sym;
      tok_.text = std::string(1, c);
      ++pos_;
      return;
    }
    throw ParseError{line_no_, tok_.col, std::string("unexpected character '") + c + "'", {}};
  }

  const std::string& line_;
  int line_no_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  SceneAst run(const std::string& source) {
    SceneAst ast;
    std::istringstream in(source);
    std::string line;
    int line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
      ++line_no;
      std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      if (trimmed[0] == '#') {
        if (header) {
          if (trimmed.rfind("# title:", 0) == 0) ast.title = trim(trimmed.substr(8));
          if (trimmed.rfind("# paper:", 0) == 0) ast.anchor = trim(trimmed.substr(8));
        }
        continue;
      }
      header = false;
      LineLexer lex(line, line_no);
      Statement st = parse_statement(lex);
      if (lex.peek().kind != Token::Kind::End)
        lex.fail("trailing tokens after statement", {"end of line"});
      st.pos = {line_no, 1};
      st.source = trimmed;
      ast.statements.push_back(std::move(st));
    }
    return ast;
  }

 private:
  static std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  std::string expect_ident(LineLexer& lex, const char* what) {
    if (lex.peek().kind != Token::Kind::Ident) lex.fail(std::string("expected ") + what, {what});
    return lex.take().text;
  }

  void expect_sym(LineLexer& lex, const std::string& s) {
    if (lex.peek().kind != Token::Kind::Sym || lex.peek().text != s)
      lex.fail("expected '" + s + "'", {s});
    lex.take();
  }

  std::string declare(LineLexer& lex, std::string id) {
    if (kKeywords.count(id) || kReservedWords.count(id) || kConstraintWords.count(id))
      lex.fail("'" + id + "' is a reserved word");
    if (declared_.count(id)) lex.fail("identifier '" + id + "' bound twice");
    declared_.insert(id);
    return id;
  }

  Statement parse_statement(LineLexer& lex) {
    if (lex.peek().kind != Token::Kind::Ident)
      lex.fail("expected statement keyword", {"free", "let", "require", "assert"});
    std::string kw = lex.take().text;
    if (kw == "free") return parse_free(lex);
    if (kw == "let") return parse_let(lex);
    if (kw == "require") return parse_require(lex);
    if (kw == "assert") return parse_assert(lex);
    lex.fail("unknown statement '" + kw + "'", {"free", "let", "require", "assert"});
  }

  Statement parse_free(LineLexer& lex) {
    Statement st;
    std::string what = expect_ident(lex, "'triangle' or 'point'");
    if (what == "triangle") {
      st.kind = Statement::Kind::FreeTriangle;
      for (int i = 0; i < 3; ++i) st.tri_ids[i] = expect_ident(lex, "vertex name");
      for (const auto& id : st.tri_ids) declare(lex, id);
      if (st.tri_ids[0] == st.tri_ids[1] || st.tri_ids[1] == st.tri_ids[2] ||
          st.tri_ids[0] == st.tri_ids[2])
        lex.fail("triangle vertices must be distinct");
      if (lex.peek().kind == Token::Kind::Sym && lex.peek().text == "{")
        st.constraints = parse_constraints(lex, st.tri_ids);
      return st;
    }
    if (what == "point") {
      st.kind = Statement::Kind::FreePoint;
      std::string id = expect_ident(lex, "point name");
      std::string on = expect_ident(lex, "'on'");
      if (on != "on") lex.fail("expected 'on'", {"on"});
      st.locus = parse_expr(lex, false);
      st.id = declare(lex, id);  // locus may not reference the point itself
      return st;
    }
    lex.fail("expected 'triangle' or 'point'", {"triangle", "point"});
  }

  std::vector<Constraint> parse_constraints(LineLexer& lex, const std::array<std::string, 3>& ids) {
    expect_sym(lex, "{");
    std::vector<Constraint> out;
    while (!(lex.peek().kind == Token::Kind::Sym && lex.peek().text == "}")) {
      if (lex.peek().kind == Token::Kind::Sym && lex.peek().text == ",") {
        lex.take();
        continue;
      }
      Constraint c;
      c.pos = {lex.line_no(), lex.peek().col};
      std::string w = expect_ident(lex, "constraint keyword");
      if (w == "acute") {
        c.kind = Constraint::Kind::Acute;
      } else if (w == "scalene") {
        c.kind = Constraint::Kind::Scalene;
      } else if (w == "obtuse_at") {
        c.kind = Constraint::Kind::ObtuseAt;
        c.a = expect_ident(lex, "vertex name");
      } else if (w == "isosceles") {
        c.kind = Constraint::Kind::Isosceles;
        c.a = expect_ident(lex, "side token");
        c.b = expect_ident(lex, "side token");
      } else if (w == "min_angle") {
        c.kind = Constraint::Kind::MinAngle;
        if (lex.peek().kind != Token::Kind::Angle)
          lex.fail("min_angle needs an angle literal with deg/rad suffix", {"angle literal"});
        Token t = lex.take();
        c.angle = t.number;
        c.deg = t.deg;
      } else if (w == "order") {
        c.kind = Constraint::Kind::Order;
        c.a = expect_ident(lex, "side token");
        expect_sym(lex, "<");
        c.b = expect_ident(lex, "side token");
      } else {
        lex.fail("unknown constraint '" + w + "'",
                 {"acute", "obtuse_at", "scalene", "isosceles", "min_angle", "order"});
      }
      out.push_back(std::move(c));
      (void)ids;
    }
    expect_sym(lex, "}");
    return out;
  }

  Statement parse_let(LineLexer& lex) {
    Statement st;
    st.kind = Statement::Kind::Let;
    std::vector<std::string> ids;
    ids.push_back(expect_ident(lex, "binding name"));
    while (lex.peek().kind == Token::Kind::Sym && lex.peek().text == ",") {
      lex.take();
      ids.push_back(expect_ident(lex, "binding name"));
    }
    expect_sym(lex, "=");
    st.call = parse_expr(lex, false);
    if (st.call->kind != Expr::Kind::Call) lex.fail("let binding requires a construction call");
    for (auto& id : ids) st.ids.push_back(declare(lex, id));
    return st;
  }

  Statement parse_require(LineLexer& lex) {
    Statement st;
    st.kind = Statement::Kind::Require;
    st.pred = parse_expr(lex, false);
    if (st.pred->kind != Expr::Kind::Call) lex.fail("require needs a predicate or scalar call");
    if (lex.peek().kind == Token::Kind::Sym &&
        (lex.peek().text == "<" || lex.peek().text == ">" || lex.peek().text == "<=" ||
         lex.peek().text == ">=")) {
      std::string op = lex.take().text;
      st.cmp = op == "<" ? CmpOp::Lt : op == ">" ? CmpOp::Gt : op == "<=" ? CmpOp::Le : CmpOp::Ge;
      if (lex.peek().kind == Token::Kind::Number) {
        st.rhs = lex.take().number;
      } else if (lex.peek().kind == Token::Kind::Angle) {
        Token t = lex.take();
        st.rhs = t.number;
        st.rhs_deg = t.deg;
        st.rhs_is_angle = true;
      } else {
        lex.fail("expected numeric or angle literal after comparison", {"number"});
      }
    }
    return st;
  }

  Statement parse_assert(LineLexer& lex) {
    Statement st;
    st.kind = Statement::Kind::Assert;
    st.assertion = parse_expr(lex, true);
    if (st.assertion->kind != Expr::Kind::Call) lex.fail("assert needs an assertion call");
    return st;
  }

  ExprPtr parse_expr(LineLexer& lex, bool top_assert) {
    Token t = lex.peek();
    auto node = std::make_shared<Expr>();
    node->pos = {lex.line_no(), t.col};
    switch (t.kind) {
      case Token::Kind::Number:
        lex.take();
        node->kind = Expr::Kind::Number;
        node->number = t.number;
        return node;
      case Token::Kind::Angle:
        lex.take();
        node->kind = Expr::Kind::AngleLit;
        node->number = t.number;
        node->deg = t.deg;
        return node;
      case Token::Kind::Sym:
        if (t.text == "@") {
          lex.take();
          node->kind = Expr::Kind::Hole;
          return node;
        }
        lex.fail("unexpected symbol '" + t.text + "'");
      case Token::Kind::Ident:
        break;
      default:
        lex.fail("unexpected end of line", {"expression"});
    }
    lex.take();
    if (lex.peek().kind == Token::Kind::Sym && lex.peek().text == "(") {
      node->kind = Expr::Kind::Call;
      node->name = t.text;
      lex.take();
      if (!(lex.peek().kind == Token::Kind::Sym && lex.peek().text == ")")) {
        node->args.push_back(parse_expr(lex, false));
        while (lex.peek().kind == Token::Kind::Sym && lex.peek().text == ",") {
          lex.take();
          node->args.push_back(parse_expr(lex, false));
        }
      }
      expect_sym(lex, ")");
      return node;
    }
    if (kReservedWords.count(t.text)) {
      node->kind = Expr::Kind::Word;
      node->name = t.text;
      return node;
    }
    if (!declared_.count(t.text))
      throw ParseError{lex.line_no(), t.col, "use of undeclared identifier '" + t.text + "'", {}};
    node->kind = Expr::Kind::Ident;
    node->name = t.text;
    (void)top_assert;
    return node;
  }

  std::set<std::string> declared_;
};

std::string format_number(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

void print_expr(std::ostream& os, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Ident:
    case Expr::Kind::Word:
      os << e.name;
      break;
    case Expr::Kind::Hole:
      os << "@";
      break;
    case Expr::Kind::Number:
      os << format_number(e.number);
      break;
    case Expr::Kind::AngleLit:
      os << format_number(e.number) << (e.deg ? "deg" : "rad");
      break;
    case Expr::Kind::Call:
      os << e.name << "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << ", ";
        print_expr(os, *e.args[i]);
      }
      os << ")";
      break;
  }
}

void print_constraint(std::ostream& os, const Constraint& c) {
  switch (c.kind) {
    case Constraint::Kind::Acute: os << "acute"; break;
    case Constraint::Kind::Scalene: os << "scalene"; break;
    case Constraint::Kind::ObtuseAt: os << "obtuse_at " << c.a; break;
    case Constraint::Kind::Isosceles: os << "isosceles " << c.a << " " << c.b; break;
    case Constraint::Kind::MinAngle:
      os << "min_angle " << format_number(c.angle) << (c.deg ? "deg" : "rad");
      break;
    case Constraint::Kind::Order: os << "order " << c.a << " < " << c.b; break;
  }
}

}  // namespace

SceneAst parse(const std::string& source) { return Parser().run(source); }

std::string pretty_print(const SceneAst& ast) {
  std::ostringstream os;
  if (!ast.title.empty()) os << "# title: " << ast.title << "\n";
  if (!ast.anchor.empty()) os << "# paper: " << ast.anchor << "\n";
  for (const Statement& st : ast.statements) {
    switch (st.kind) {
      case Statement::Kind::FreeTriangle:
        os << "free triangle " << st.tri_ids[0] << " " << st.tri_ids[1] << " " << st.tri_ids[2];
        if (!st.constraints.empty()) {
          os << " { ";
          for (size_t i = 0; i < st.constraints.size(); ++i) {
            if (i) os << " ";
            print_constraint(os, st.constraints[i]);
          }
          os << " }";
        }
        break;
      case Statement::Kind::FreePoint:
        os << "free point " << st.id << " on ";
        print_expr(os, *st.locus);
        break;
      case Statement::Kind::Let: {
        os << "let ";
        for (size_t i = 0; i < st.ids.size(); ++i) {
          if (i) os << ", ";
          os << st.ids[i];
        }
        os << " = ";
        print_expr(os, *st.call);
        break;
      }
      case Statement::Kind::Require:
        os << "require ";
        print_expr(os, *st.pred);
        if (st.cmp != CmpOp::None) {
          os << (st.cmp == CmpOp::Lt ? " < " : st.cmp == CmpOp::Gt ? " > "
                 : st.cmp == CmpOp::Le ? " <= " : " >= ");
          os << format_number(st.rhs);
          if (st.rhs_is_angle) os << (st.rhs_deg ? "deg" : "rad");
        }
        break;
      case Statement::Kind::Assert:
        os << "assert ";
        print_expr(os, *st.assertion);
        break;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size()) return false;
  if (a->kind == Expr::Kind::Number || a->kind == Expr::Kind::AngleLit) {
    if (a->number != b->number || a->deg != b->deg) return false;
  }
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!expr_equal(a->args[i], b->args[i])) return false;
  return true;
}

}  // namespace

bool ast_equal(const SceneAst& a, const SceneAst& b) {
  if (a.title != b.title || a.anchor != b.anchor) return false;
  if (a.statements.size() != b.statements.size()) return false;
  for (size_t i = 0; i < a.statements.size(); ++i) {
    const Statement &x = a.statements[i], &y = b.statements[i];
    if (x.kind != y.kind) return false;
    if (x.tri_ids != y.tri_ids || x.id != y.id || x.ids != y.ids) return false;
    if (x.cmp != y.cmp || x.rhs != y.rhs || x.rhs_deg != y.rhs_deg ||
        x.rhs_is_angle != y.rhs_is_angle)
      return false;
    if (x.constraints.size() != y.constraints.size()) return false;
    for (size_t j = 0; j < x.constraints.size(); ++j) {
      const Constraint &p = x.constraints[j], &q = y.constraints[j];
      if (p.kind != q.kind || p.a != q.a || p.b != q.b || p.angle != q.angle || p.deg != q.deg)
        return false;
    }
    if (!expr_equal(x.locus, y.locus) || !expr_equal(x.call, y.call) ||
        !expr_equal(x.pred, y.pred) || !expr_equal(x.assertion, y.assertion))
      return false;
  }
  return true;
}

}  // namespace trigbash::dsl
