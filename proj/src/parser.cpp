#include "hwfuzz/parser.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "hwfuzz/errors.hpp"
#include "hwfuzz/lexer.hpp"

namespace hwfuzz {

namespace {

using Cat = ParseError::Category;

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<SourceModule> run() {
    std::vector<SourceModule> modules;
    while (!at_end()) {
      if (is_kw("module")) {
        modules.push_back(parse_module());
      } else {
        error_expected({"module"});
      }
    }
    std::unordered_set<std::string> names;
    for (const auto& m : modules) {
      if (!names.insert(m.name).second)
        throw ParseError(Cat::DuplicateName, m.span.line, m.span.column,
                         "duplicate module '" + m.name + "'");
      validate(m);
    }
    return modules;
  }

private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;

  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek(size_t off = 1) const {
    size_t i = pos_ + off;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at_end() const { return cur().kind == TokenKind::End; }
  void bump() {
    if (!at_end()) ++pos_;
  }

  bool is_kw(std::string_view kw) const {
    return cur().kind == TokenKind::Keyword && cur().text == kw;
  }
  bool is_sym(std::string_view s) const {
    return cur().kind == TokenKind::Symbol && cur().text == s;
  }
  bool accept_kw(std::string_view kw) {
    if (!is_kw(kw)) return false;
    bump();
    return true;
  }
  bool accept_sym(std::string_view s) {
    if (!is_sym(s)) return false;
    bump();
    return true;
  }

  [[noreturn]] void error_expected(std::vector<std::string> expected) const {
    std::string msg = "expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += " or ";
      msg += "'" + expected[i] + "'";
    }
    msg += ", got ";
    switch (cur().kind) {
      case TokenKind::End: msg += "end of input"; break;
      case TokenKind::Number:
      case TokenKind::SizedNumber: msg += "a number"; break;
      default: msg += "'" + cur().text + "'";
    }
    throw ParseError(Cat::Syntax, cur().span.line, cur().span.column, msg, std::move(expected));
  }

  [[noreturn]] void unsupported(const std::string& what) const {
    throw ParseError(Cat::UnsupportedConstruct, cur().span.line, cur().span.column,
                     what + " is not supported");
  }

  void expect_sym(std::string_view s) {
    if (!accept_sym(s)) error_expected({std::string(s)});
  }
  void expect_kw(std::string_view kw) {
    if (!accept_kw(kw)) error_expected({std::string(kw)});
  }

  std::string expect_ident() {
    if (cur().kind != TokenKind::Identifier) error_expected({"identifier"});
    std::string name = cur().text;
    bump();
    return name;
  }

  uint64_t expect_const_number() {
    if (cur().kind != TokenKind::Number && cur().kind != TokenKind::SizedNumber)
      error_expected({"constant number"});
    uint64_t v = cur().value;
    bump();
    return v;
  }

  // [msb:lsb] with literal bounds. Declarations require lsb == 0.
  int parse_decl_range() {
    SourceSpan span = cur().span;
    expect_sym("[");
    uint64_t msb = expect_const_number();
    expect_sym(":");
    uint64_t lsb = expect_const_number();
    expect_sym("]");
    if (lsb != 0)
      throw ParseError(Cat::UnsupportedConstruct, span.line, span.column,
                       "declaration ranges must end at bit 0");
    if (msb > 63)
      throw ParseError(Cat::UnsupportedConstruct, span.line, span.column,
                       "vectors wider than 64 bits are not supported");
    return static_cast<int>(msb) + 1;
  }

  SourceModule parse_module() {
    SourceModule m;
    m.span = cur().span;
    expect_kw("module");
    m.name = expect_ident();
    if (is_sym("#")) unsupported("parameterized module");
    if (accept_sym("(")) {
      if (!is_sym(")")) parse_port_list(m);
      expect_sym(")");
    }
    expect_sym(";");
    while (!is_kw("endmodule")) {
      if (at_end()) error_expected({"endmodule"});
      parse_module_item(m);
    }
    expect_kw("endmodule");
    return m;
  }

  void parse_port_list(SourceModule& m) {
    Direction dir = Direction::Input;
    NetKind kind = NetKind::Wire;
    int width = 1;
    bool have_dir = false;
    for (;;) {
      SourceSpan span = cur().span;
      if (is_kw("inout")) unsupported("inout port");
      if (accept_kw("input")) {
        dir = Direction::Input;
        kind = NetKind::Wire;
        width = 1;
        have_dir = true;
      } else if (accept_kw("output")) {
        dir = Direction::Output;
        kind = NetKind::Wire;
        width = 1;
        have_dir = true;
      }
      if (!have_dir) unsupported("non-ANSI port list");
      if (accept_kw("wire")) kind = NetKind::Wire;
      else if (accept_kw("reg")) kind = NetKind::Reg;
      if (is_sym("[")) width = parse_decl_range();
      PortDecl p;
      p.name = expect_ident();
      p.dir = dir;
      p.width = width;
      p.kind = kind;
      p.span = span;
      m.ports.push_back(std::move(p));
      if (!accept_sym(",")) break;
    }
  }

  void parse_module_item(SourceModule& m) {
    if (is_kw("wire") || is_kw("reg")) {
      parse_net_decl(m);
    } else if (is_kw("assign")) {
      parse_cont_assign(m);
    } else if (is_kw("always")) {
      parse_always(m);
    } else if (is_kw("assert")) {
      parse_assertion(m);
    } else if (cur().kind == TokenKind::Identifier) {
      parse_instance(m);
    } else if (cur().kind == TokenKind::Keyword) {
      unsupported("'" + cur().text + "' construct");
    } else {
      error_expected({"wire", "reg", "assign", "always", "assert", "identifier"});
    }
  }

  void parse_net_decl(SourceModule& m) {
    NetKind kind = accept_kw("reg") ? NetKind::Reg : (expect_kw("wire"), NetKind::Wire);
    int width = 1;
    if (is_sym("[")) width = parse_decl_range();
    for (;;) {
      NetDecl d;
      d.span = cur().span;
      d.name = expect_ident();
      d.kind = kind;
      d.width = width;
      if (accept_sym("=")) {
        if (kind == NetKind::Wire)
          throw ParseError(Cat::UnsupportedConstruct, d.span.line, d.span.column,
                           "wire initializers are not supported");
        SourceSpan lit_span = cur().span;
        if (cur().kind != TokenKind::Number && cur().kind != TokenKind::SizedNumber)
          error_expected({"constant initializer"});
        d.has_init = true;
        d.init = cur().value;
        int lit_width = cur().kind == TokenKind::SizedNumber ? cur().width : 64;
        bump();
        if (width < 64 && d.init >= (uint64_t{1} << width))
          throw ParseError(Cat::Syntax, lit_span.line, lit_span.column,
                           "initializer value does not fit in declared width");
        (void)lit_width;
      }
      m.items.emplace_back(std::move(d));
      if (!accept_sym(",")) break;
    }
    expect_sym(";");
  }

  void parse_cont_assign(SourceModule& m) {
    ContAssign a;
    a.span = cur().span;
    expect_kw("assign");
    a.lhs = parse_lvalue();
    expect_sym("=");
    a.rhs = parse_expr();
    expect_sym(";");
    m.items.emplace_back(std::move(a));
  }

  void parse_always(SourceModule& m) {
    AlwaysBlock b;
    b.span = cur().span;
    expect_kw("always");
    expect_sym("@");
    expect_sym("(");
    if (is_sym("*")) unsupported("always @(*)");
    for (;;) {
      EdgeKind edge;
      if (accept_kw("posedge")) edge = EdgeKind::Posedge;
      else if (accept_kw("negedge")) edge = EdgeKind::Negedge;
      else unsupported("level-sensitive always block");
      b.sensitivity.emplace_back(edge, expect_ident());
      if (accept_kw("or") || accept_sym(",")) continue;
      break;
    }
    expect_sym(")");
    b.body = parse_stmt_or_block();
    m.items.emplace_back(std::move(b));
  }

  void parse_assertion(SourceModule& m) {
    AssertionDecl a;
    a.span = cur().span;
    expect_kw("assert");
    expect_kw("property");
    expect_sym("(");
    expect_sym("@");
    expect_sym("(");
    if (accept_kw("posedge")) a.clock_edge = EdgeKind::Posedge;
    else if (accept_kw("negedge")) a.clock_edge = EdgeKind::Negedge;
    else error_expected({"posedge", "negedge"});
    a.clock_name = expect_ident();
    expect_sym(")");
    if (accept_kw("disable")) {
      expect_kw("iff");
      expect_sym("(");
      a.disable_expr = parse_expr();
      a.has_disable = true;
      expect_sym(")");
    }
    a.antecedent = parse_expr();
    if (is_sym("|=>")) unsupported("non-overlapping implication |=>");
    expect_sym("|->");
    a.consequent = parse_expr();
    expect_sym(")");
    expect_sym(";");
    m.items.emplace_back(std::move(a));
  }

  void parse_instance(SourceModule& m) {
    Instance inst;
    inst.span = cur().span;
    inst.module_name = expect_ident();
    inst.inst_name = expect_ident();
    expect_sym("(");
    if (!is_sym(")")) {
      for (;;) {
        if (!is_sym("."))
          unsupported("positional port connection");
        bump();
        std::string port = expect_ident();
        expect_sym("(");
        Expr e = parse_expr();
        expect_sym(")");
        inst.connections.emplace_back(std::move(port), std::move(e));
        if (!accept_sym(",")) break;
      }
    }
    expect_sym(")");
    expect_sym(";");
    m.items.emplace_back(std::move(inst));
  }

  std::vector<Stmt> parse_stmt_or_block() {
    if (accept_kw("begin")) {
      std::vector<Stmt> stmts;
      while (!is_kw("end")) {
        if (at_end()) error_expected({"end"});
        stmts.push_back(parse_stmt());
      }
      expect_kw("end");
      return stmts;
    }
    std::vector<Stmt> one;
    one.push_back(parse_stmt());
    return one;
  }

  Stmt parse_stmt() {
    Stmt s;
    s.span = cur().span;
    if (is_kw("if")) {
      s.kind = Stmt::Kind::If;
      bump();
      expect_sym("(");
      s.cond = parse_expr();
      expect_sym(")");
      s.then_body = parse_stmt_or_block();
      if (accept_kw("else")) {
        s.has_else = true;
        s.else_body = parse_stmt_or_block();
      }
      return s;
    }
    if (is_kw("case")) {
      s.kind = Stmt::Kind::Case;
      bump();
      expect_sym("(");
      s.subject = parse_expr();
      expect_sym(")");
      while (!is_kw("endcase")) {
        if (at_end()) error_expected({"endcase"});
        if (accept_kw("default")) {
          if (s.has_default)
            throw ParseError(Cat::Syntax, s.span.line, s.span.column,
                             "multiple default case items");
          accept_sym(":");
          s.has_default = true;
          s.default_body = parse_stmt_or_block();
        } else {
          Stmt::CaseItem item;
          for (;;) {
            item.labels.push_back(parse_expr());
            if (!accept_sym(",")) break;
          }
          expect_sym(":");
          item.body = parse_stmt_or_block();
          s.items.push_back(std::move(item));
        }
      }
      expect_kw("endcase");
      return s;
    }
    if (cur().kind == TokenKind::Keyword) unsupported("'" + cur().text + "' statement");

    s.kind = Stmt::Kind::Assign;
    s.lhs = parse_lvalue();
    if (accept_sym("=")) s.blocking = true;
    else if (accept_sym("<=")) s.blocking = false;
    else error_expected({"=", "<="});
    s.rhs = parse_expr();
    expect_sym(";");
    return s;
  }

  // identifier with optional bit- or part-select
  Expr parse_lvalue() {
    if (cur().kind != TokenKind::Identifier) error_expected({"identifier"});
    Expr e = Expr::ident(cur().text);
    e.span = cur().span;
    bump();
    if (is_sym("[")) parse_select_suffix(e);
    return e;
  }

  void parse_select_suffix(Expr& base) {
    SourceSpan span = cur().span;
    expect_sym("[");
    Expr first = parse_expr();
    if (accept_sym(":")) {
      if (first.kind != Expr::Kind::Literal)
        throw ParseError(Cat::UnsupportedConstruct, span.line, span.column,
                         "part-select bounds must be constant");
      Expr lsb_e = parse_expr();
      if (lsb_e.kind != Expr::Kind::Literal)
        throw ParseError(Cat::UnsupportedConstruct, span.line, span.column,
                         "part-select bounds must be constant");
      expect_sym("]");
      if (first.value > 63 || lsb_e.value > first.value)
        throw ParseError(Cat::Syntax, span.line, span.column, "invalid part-select range");
      Expr e;
      e.kind = Expr::Kind::PartSelect;
      e.span = base.span;
      e.name = base.name;
      e.msb = static_cast<int>(first.value);
      e.lsb = static_cast<int>(lsb_e.value);
      base = std::move(e);
      return;
    }
    expect_sym("]");
    Expr e;
    e.kind = Expr::Kind::BitSelect;
    e.span = base.span;
    e.name = base.name;
    e.args.push_back(std::move(first));
    base = std::move(e);
  }

  Expr parse_expr() { return parse_ternary(); }

  Expr parse_ternary() {
    Expr cond = parse_binary(0);
    if (!is_sym("?")) return cond;
    SourceSpan span = cur().span;
    bump();
    Expr then_e = parse_ternary();
    expect_sym(":");
    Expr else_e = parse_ternary();
    Expr e;
    e.kind = Expr::Kind::Ternary;
    e.span = span;
    e.args.push_back(std::move(cond));
    e.args.push_back(std::move(then_e));
    e.args.push_back(std::move(else_e));
    return e;
  }

  struct BinOpInfo {
    std::string_view sym;
    BinaryOp op;
    int prec;
  };

  static const BinOpInfo* binop_info(const Token& t) {
    static const BinOpInfo kOps[] = {
        {"||", BinaryOp::LogOr, 1},
        {"&&", BinaryOp::LogAnd, 2},
        {"|", BinaryOp::BitOr, 3},
        {"^", BinaryOp::BitXor, 4},
        {"&", BinaryOp::BitAnd, 5},
        {"==", BinaryOp::Eq, 6},
        {"!=", BinaryOp::Ne, 6},
        {"<", BinaryOp::Lt, 7},
        {"<=", BinaryOp::Le, 7},
        {">", BinaryOp::Gt, 7},
        {">=", BinaryOp::Ge, 7},
        {"<<", BinaryOp::Shl, 8},
        {">>", BinaryOp::Shr, 8},
        {"+", BinaryOp::Add, 9},
        {"-", BinaryOp::Sub, 9},
        {"*", BinaryOp::Mul, 10},
        {"/", BinaryOp::Div, 10},
        {"%", BinaryOp::Mod, 10},
    };
    if (t.kind != TokenKind::Symbol) return nullptr;
    for (const auto& info : kOps)
      if (info.sym == t.text) return &info;
    return nullptr;
  }

  Expr parse_binary(int min_prec) {
    Expr lhs = parse_unary();
    for (;;) {
      const BinOpInfo* info = binop_info(cur());
      if (!info || info->prec < min_prec) return lhs;
      SourceSpan span = cur().span;
      bump();
      Expr rhs = parse_binary(info->prec + 1);
      Expr e;
      e.kind = Expr::Kind::Binary;
      e.bin_op = info->op;
      e.span = span;
      e.args.push_back(std::move(lhs));
      e.args.push_back(std::move(rhs));
      lhs = std::move(e);
    }
  }

  Expr parse_unary() {
    SourceSpan span = cur().span;
    UnaryOp op;
    if (accept_sym("~")) op = UnaryOp::BitNot;
    else if (accept_sym("!")) op = UnaryOp::LogNot;
    else if (accept_sym("-")) op = UnaryOp::Neg;
    else if (accept_sym("&")) op = UnaryOp::RedAnd;
    else if (accept_sym("|")) op = UnaryOp::RedOr;
    else if (accept_sym("^")) op = UnaryOp::RedXor;
    else return parse_primary();
    Expr e;
    e.kind = Expr::Kind::Unary;
    e.un_op = op;
    e.span = span;
    e.args.push_back(parse_unary());
    return e;
  }

  Expr parse_primary() {
    SourceSpan span = cur().span;
    if (cur().kind == TokenKind::Number) {
      Expr e = Expr::literal(cur().value, 32, false);
      e.span = span;
      bump();
      return e;
    }
    if (cur().kind == TokenKind::SizedNumber) {
      Expr e = Expr::literal(cur().value, cur().width, true);
      e.span = span;
      bump();
      return e;
    }
    if (cur().kind == TokenKind::Identifier) {
      Expr e = Expr::ident(cur().text);
      e.span = span;
      bump();
      if (is_sym("[")) parse_select_suffix(e);
      return e;
    }
    if (accept_sym("(")) {
      Expr e = parse_expr();
      expect_sym(")");
      return e;
    }
    if (accept_sym("{")) {
      Expr e;
      e.kind = Expr::Kind::Concat;
      e.span = span;
      for (;;) {
        Expr part = parse_expr();
        if (is_sym("{"))
          throw ParseError(Cat::UnsupportedConstruct, span.line, span.column,
                           "replication is not supported");
        e.args.push_back(std::move(part));
        if (!accept_sym(",")) break;
      }
      expect_sym("}");
      return e;
    }
    error_expected({"expression"});
  }

  // Duplicate-name and identifier-resolution checks.
  void validate(const SourceModule& m) const {
    std::unordered_set<std::string> declared;
    for (const auto& p : m.ports) {
      if (!declared.insert(p.name).second)
        throw ParseError(Cat::DuplicateName, p.span.line, p.span.column,
                         "duplicate port '" + p.name + "'");
    }
    std::unordered_set<std::string> instances;
    for (const auto& item : m.items) {
      if (const auto* d = std::get_if<NetDecl>(&item)) {
        if (!declared.insert(d->name).second)
          throw ParseError(Cat::DuplicateName, d->span.line, d->span.column,
                           "duplicate declaration '" + d->name + "'");
      } else if (const auto* inst = std::get_if<Instance>(&item)) {
        if (declared.count(inst->inst_name) || !instances.insert(inst->inst_name).second)
          throw ParseError(Cat::DuplicateName, inst->span.line, inst->span.column,
                           "duplicate instance name '" + inst->inst_name + "'");
      }
    }

    auto check_expr = [&](const Expr& e, auto&& self) -> void {
      if (e.kind == Expr::Kind::Ident || e.kind == Expr::Kind::BitSelect ||
          e.kind == Expr::Kind::PartSelect) {
        if (!declared.count(e.name))
          throw ParseError(Cat::UnresolvedIdentifier, e.span.line, e.span.column,
                           "unresolved identifier '" + e.name + "'");
      }
      for (const auto& a : e.args) self(a, self);
    };
    auto check = [&](const Expr& e) { check_expr(e, check_expr); };

    std::function<void(const Stmt&)> check_stmt = [&](const Stmt& s) {
      switch (s.kind) {
        case Stmt::Kind::Assign:
          check(s.lhs);
          check(s.rhs);
          break;
        case Stmt::Kind::If:
          check(s.cond);
          for (const auto& t : s.then_body) check_stmt(t);
          for (const auto& t : s.else_body) check_stmt(t);
          break;
        case Stmt::Kind::Case:
          check(s.subject);
          for (const auto& item : s.items) {
            for (const auto& l : item.labels) check(l);
            for (const auto& t : item.body) check_stmt(t);
          }
          for (const auto& t : s.default_body) check_stmt(t);
          break;
      }
    };

    for (const auto& item : m.items) {
      if (const auto* a = std::get_if<ContAssign>(&item)) {
        check(a->lhs);
        check(a->rhs);
      } else if (const auto* b = std::get_if<AlwaysBlock>(&item)) {
        for (const auto& [edge, name] : b->sensitivity) {
          (void)edge;
          if (!declared.count(name))
            throw ParseError(Cat::UnresolvedIdentifier, b->span.line, b->span.column,
                             "unresolved identifier '" + name + "'");
        }
        for (const auto& s : b->body) check_stmt(s);
      } else if (const auto* inst = std::get_if<Instance>(&item)) {
        for (const auto& [port, e] : inst->connections) {
          (void)port;
          check(e);
        }
      } else if (const auto* as = std::get_if<AssertionDecl>(&item)) {
        if (!declared.count(as->clock_name))
          throw ParseError(Cat::UnresolvedIdentifier, as->span.line, as->span.column,
                           "unresolved identifier '" + as->clock_name + "'");
        if (as->has_disable) check(as->disable_expr);
        check(as->antecedent);
        check(as->consequent);
      }
    }
  }
};

}  // namespace

std::vector<SourceModule> parse(std::string_view source_text) {
  return Parser(tokenize(source_text)).run();
}

// ---- structural equality (spans ignored) ----

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal:
      if (a.value != b.value || a.lit_width != b.lit_width || a.sized != b.sized) return false;
      break;
    case Expr::Kind::Ident:
      if (a.name != b.name) return false;
      break;
    case Expr::Kind::Unary:
      if (a.un_op != b.un_op) return false;
      break;
    case Expr::Kind::Binary:
      if (a.bin_op != b.bin_op) return false;
      break;
    case Expr::Kind::BitSelect:
      if (a.name != b.name) return false;
      break;
    case Expr::Kind::PartSelect:
      if (a.name != b.name || a.msb != b.msb || a.lsb != b.lsb) return false;
      break;
    case Expr::Kind::Ternary:
    case Expr::Kind::Concat:
      break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!expr_equal(a.args[i], b.args[i])) return false;
  return true;
}

namespace {

bool stmts_equal(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!stmt_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool stmt_equal(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Stmt::Kind::Assign:
      return a.blocking == b.blocking && expr_equal(a.lhs, b.lhs) && expr_equal(a.rhs, b.rhs);
    case Stmt::Kind::If:
      return a.has_else == b.has_else && expr_equal(a.cond, b.cond) &&
             stmts_equal(a.then_body, b.then_body) && stmts_equal(a.else_body, b.else_body);
    case Stmt::Kind::Case: {
      if (a.has_default != b.has_default || a.items.size() != b.items.size()) return false;
      if (!expr_equal(a.subject, b.subject)) return false;
      for (size_t i = 0; i < a.items.size(); ++i) {
        const auto& x = a.items[i];
        const auto& y = b.items[i];
        if (x.labels.size() != y.labels.size()) return false;
        for (size_t j = 0; j < x.labels.size(); ++j)
          if (!expr_equal(x.labels[j], y.labels[j])) return false;
        if (!stmts_equal(x.body, y.body)) return false;
      }
      return stmts_equal(a.default_body, b.default_body);
    }
  }
  return false;
}

bool module_equal(const SourceModule& a, const SourceModule& b) {
  if (a.name != b.name || a.ports.size() != b.ports.size() || a.items.size() != b.items.size())
    return false;
  for (size_t i = 0; i < a.ports.size(); ++i) {
    const auto& x = a.ports[i];
    const auto& y = b.ports[i];
    if (x.name != y.name || x.dir != y.dir || x.width != y.width || x.kind != y.kind) return false;
  }
  for (size_t i = 0; i < a.items.size(); ++i) {
    const auto& x = a.items[i];
    const auto& y = b.items[i];
    if (x.index() != y.index()) return false;
    bool eq = std::visit(
        [&](const auto& xa) -> bool {
          using T = std::decay_t<decltype(xa)>;
          const auto& ya = std::get<T>(y);
          if constexpr (std::is_same_v<T, NetDecl>) {
            return xa.name == ya.name && xa.kind == ya.kind && xa.width == ya.width &&
                   xa.has_init == ya.has_init && xa.init == ya.init;
          } else if constexpr (std::is_same_v<T, ContAssign>) {
            return expr_equal(xa.lhs, ya.lhs) && expr_equal(xa.rhs, ya.rhs);
          } else if constexpr (std::is_same_v<T, AlwaysBlock>) {
            if (xa.sensitivity != ya.sensitivity) return false;
            return stmts_equal(xa.body, ya.body);
          } else if constexpr (std::is_same_v<T, Instance>) {
            if (xa.module_name != ya.module_name || xa.inst_name != ya.inst_name ||
                xa.connections.size() != ya.connections.size())
              return false;
            for (size_t j = 0; j < xa.connections.size(); ++j) {
              if (xa.connections[j].first != ya.connections[j].first ||
                  !expr_equal(xa.connections[j].second, ya.connections[j].second))
                return false;
            }
            return true;
          } else {
            static_assert(std::is_same_v<T, AssertionDecl>);
            if (xa.clock_edge != ya.clock_edge || xa.clock_name != ya.clock_name ||
                xa.has_disable != ya.has_disable)
              return false;
            if (xa.has_disable && !expr_equal(xa.disable_expr, ya.disable_expr)) return false;
            return expr_equal(xa.antecedent, ya.antecedent) &&
                   expr_equal(xa.consequent, ya.consequent);
          }
        },
        x);
    if (!eq) return false;
  }
  return true;
}

}  // namespace hwfuzz
