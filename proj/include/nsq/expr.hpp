#pragma once
// Expression language for the command-line tool: a lexer and LL(1)
// recursive-descent parser with byte-offset diagnostics, a typed evaluator
// over the two word algebras (noncommutative letter words and quasisymmetric
// words, which may meet only at pair and pi), and a printer whose output for
// scalars and elements parses back to an equal value.
//
// Grammar ('*', infix 'osh' and 'sh' bind tighter than '+' and '-'):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | 'osh' | 'sh') factor)*
//   factor  := '-' factor | primary
//   primary := NUMBER ('/' NUMBER)? | WORD | NAME '(' expr (',' expr)* ')'
//            | '(' expr ')'
//   WORD    := '[' (NUMBER (',' NUMBER)*)? ']'
//
// Functions:  Zn(k), Xn(k), Yn(k), Un(k) single letters; Z([..]) a letter
// word; P(n), Pp(n) the two Newton primitives; Palpha([..]) the Lyndon-word
// primitive; E([..]) the free generator; h(n), e(n) complete and elementary
// elements; L(u,v), N(u,v) decomposition entries; bracket(x,y); delta(x);
// vN(n,x), fN(n,x), vQ(n,x), fQ(n,x) the two operator families; pair(x,y);
// pi(x); osh(x,y), sh(x,y) callable products.  '*' multiplies scalars,
// scales, concatenates letter words, and overlap-shuffles quasisymmetric
// words; '+'/'-' lift scalars to multiples of the unit when the other side
// is an element.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsq/algebra.hpp"
#include "nsq/qsymm.hpp"
#include "nsq/words.hpp"

namespace nsq {

// Diagnostic with a byte offset into the source text.  kind is one of
// "lexical", "syntax", "type", "domain", "bound"; what() is preformatted as
// "<kind> error at offset <off>: <message>".
class ExprError : public std::runtime_error {
  public:
    ExprError(std::string kind, size_t offset, const std::string& message);
    const std::string& kind() const { return kind_; }
    size_t offset() const { return offset_; }

  private:
    std::string kind_;
    size_t offset_;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Op { scalar, word, call, add, sub, mul, osh, sh, neg };
    Op op;
    size_t offset = 0;       // byte offset anchoring diagnostics
    Rat value;               // scalar
    Composition word;        // word literal
    std::string name;        // call
    std::vector<ExprPtr> args;  // call arguments; operands for the rest
};

ExprPtr parse_expression(const std::string& text);

// A typed result: exactly one slot is meaningful, selected by kind.
struct Value {
    enum class Kind { scalar, n_element, q_element, n_tensor, q_tensor };
    Kind kind = Kind::scalar;
    Rat scalar;
    AlgebraElement nel;
    QElement qel;
    TensorElement nten;
    QTensor qten;
};

struct EvalConfig {
    int bound = 12;  // largest allowed weight for any intermediate result
};

Value evaluate(const Expr& e, const EvalConfig& config);

// Human-readable form; for scalars and elements it re-parses to an equal
// value.  Tensor output is display-only.
std::string print_value(const Value& v);

const char* kind_name(Value::Kind k);

} // namespace nsq
