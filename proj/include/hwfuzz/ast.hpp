#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hwfuzz {

struct SourceSpan {
  int line = 0;
  int column = 0;
};

enum class UnaryOp { BitNot, LogNot, Neg, RedAnd, RedOr, RedXor };

enum class BinaryOp {
  Add, Sub, Mul, Div, Mod,
  BitAnd, BitOr, BitXor,
  LogAnd, LogOr,
  Eq, Ne, Lt, Le, Gt, Ge,
  Shl, Shr,
};

// Expression tree with value semantics; children live in `args`.
//   Literal:    value, lit_width, sized
//   Ident:      name
//   Unary:      un_op, args[0]
//   Binary:     bin_op, args[0], args[1]
//   Ternary:    args[0] ? args[1] : args[2]
//   Concat:     args (MSB part first, as written)
//   BitSelect:  name[args[0]]
//   PartSelect: name[msb:lsb]
struct Expr {
  enum class Kind { Literal, Ident, Unary, Binary, Ternary, Concat, BitSelect, PartSelect };

  Kind kind = Kind::Literal;
  SourceSpan span;

  uint64_t value = 0;
  int lit_width = 32;
  bool sized = false;

  std::string name;
  UnaryOp un_op = UnaryOp::BitNot;
  BinaryOp bin_op = BinaryOp::Add;
  int msb = 0;
  int lsb = 0;
  std::vector<Expr> args;

  static Expr literal(uint64_t v, int width = 32, bool is_sized = false) {
    Expr e;
    e.kind = Kind::Literal;
    e.value = v;
    e.lit_width = width;
    e.sized = is_sized;
    return e;
  }

  static Expr ident(std::string n) {
    Expr e;
    e.kind = Kind::Ident;
    e.name = std::move(n);
    return e;
  }
};

// Structural equality; source spans are ignored.
bool expr_equal(const Expr& a, const Expr& b);

struct Stmt {
  enum class Kind { Assign, If, Case };

  struct CaseItem {
    std::vector<Expr> labels;
    std::vector<Stmt> body;
  };

  Kind kind = Kind::Assign;
  SourceSpan span;

  // Assign
  Expr lhs;
  Expr rhs;
  bool blocking = true;

  // If
  Expr cond;
  std::vector<Stmt> then_body;
  std::vector<Stmt> else_body;
  bool has_else = false;

  // Case
  Expr subject;
  std::vector<CaseItem> items;
  std::vector<Stmt> default_body;
  bool has_default = false;
};

bool stmt_equal(const Stmt& a, const Stmt& b);

enum class Direction { Input, Output };
enum class NetKind { Wire, Reg };
enum class EdgeKind { Posedge, Negedge };

struct PortDecl {
  std::string name;
  Direction dir = Direction::Input;
  int width = 1;
  NetKind kind = NetKind::Wire;
  SourceSpan span;
};

struct NetDecl {
  std::string name;
  NetKind kind = NetKind::Wire;
  int width = 1;
  bool has_init = false;
  uint64_t init = 0;
  SourceSpan span;
};

struct ContAssign {
  Expr lhs;
  Expr rhs;
  SourceSpan span;
};

struct AlwaysBlock {
  std::vector<std::pair<EdgeKind, std::string>> sensitivity;
  std::vector<Stmt> body;
  SourceSpan span;
};

struct Instance {
  std::string module_name;
  std::string inst_name;
  std::vector<std::pair<std::string, Expr>> connections;
  SourceSpan span;
};

// assert property(@(edge clk) disable iff(d) antecedent |-> consequent);
// Overlapping implication only.
struct AssertionDecl {
  EdgeKind clock_edge = EdgeKind::Posedge;
  std::string clock_name;
  bool has_disable = false;
  Expr disable_expr;
  Expr antecedent;
  Expr consequent;
  SourceSpan span;
};

using ModuleItem = std::variant<NetDecl, ContAssign, AlwaysBlock, Instance, AssertionDecl>;

struct SourceModule {
  std::string name;
  std::vector<PortDecl> ports;
  std::vector<ModuleItem> items;
  SourceSpan span;
};

bool module_equal(const SourceModule& a, const SourceModule& b);

}  // namespace hwfuzz
