#include "nsq/expr.hpp"

#include <cctype>
#include <utility>

#include "nsq/generators.hpp"
#include "nsq/isobaric.hpp"
#include "nsq/nsymm.hpp"
#include "nsq/primitives.hpp"

namespace nsq {

ExprError::ExprError(std::string kind, size_t offset, const std::string& message)
    : std::runtime_error(kind + " error at offset " + std::to_string(offset) +
                         ": " + message),
      kind_(std::move(kind)),
      offset_(offset) {}

// ---- lexer ----

namespace {

struct Token {
    enum class Type {
        number, name, lbracket, rbracket, lparen, rparen,
        comma, plus, minus, star, slash, end
    };
    Type type;
    size_t offset;
    std::string text;  // name spelling or digit run
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        size_t at = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            toks.push_back({Token::Type::number, at, text.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) ||
                    text[j] == '_')) ++j;
            toks.push_back({Token::Type::name, at, text.substr(i, j - i)});
            i = j;
            continue;
        }
        Token::Type t;
        switch (c) {
            case '[': t = Token::Type::lbracket; break;
            case ']': t = Token::Type::rbracket; break;
            case '(': t = Token::Type::lparen; break;
            case ')': t = Token::Type::rparen; break;
            case ',': t = Token::Type::comma; break;
            case '+': t = Token::Type::plus; break;
            case '-': t = Token::Type::minus; break;
            case '*': t = Token::Type::star; break;
            case '/': t = Token::Type::slash; break;
            default:
                throw ExprError("lexical", at,
                                std::string("unexpected character '") + c + "'");
        }
        toks.push_back({t, at, std::string(1, c)});
        ++i;
    }
    toks.push_back({Token::Type::end, text.size(), ""});
    return toks;
}

// ---- parser ----

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ExprError("syntax", peek().offset, msg);
    }

    Token expect(Token::Type t, const std::string& what) {
        if (peek().type != t) fail("expected " + what);
        return take();
    }

    long number_value(const Token& t) const {
        try {
            return std::stol(t.text);
        } catch (const std::out_of_range&) {
            throw ExprError("syntax", t.offset, "number out of range");
        }
    }

    ExprPtr node(Expr::Op op, size_t off) {
        auto e = std::make_unique<Expr>();
        e->op = op;
        e->offset = off;
        return e;
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (peek().type == Token::Type::plus ||
               peek().type == Token::Type::minus) {
            Token op = take();
            ExprPtr right = parse_term();
            ExprPtr e = node(op.type == Token::Type::plus ? Expr::Op::add
                                                          : Expr::Op::sub,
                             op.offset);
            e->args.push_back(std::move(left));
            e->args.push_back(std::move(right));
            left = std::move(e);
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        for (;;) {
            Expr::Op op;
            if (peek().type == Token::Type::star) op = Expr::Op::mul;
            else if (peek().type == Token::Type::name && peek().text == "osh")
                op = Expr::Op::osh;
            else if (peek().type == Token::Type::name && peek().text == "sh")
                op = Expr::Op::sh;
            else break;
            Token t = take();
            ExprPtr right = parse_factor();
            ExprPtr e = node(op, t.offset);
            e->args.push_back(std::move(left));
            e->args.push_back(std::move(right));
            left = std::move(e);
        }
        return left;
    }

    ExprPtr parse_factor() {
        if (peek().type == Token::Type::minus) {
            Token t = take();
            ExprPtr e = node(Expr::Op::neg, t.offset);
            e->args.push_back(parse_factor());
            return e;
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        switch (peek().type) {
            case Token::Type::number: {
                Token t = take();
                Rat v(number_value(t));
                if (peek().type == Token::Type::slash) {
                    take();
                    Token d = expect(Token::Type::number, "a denominator");
                    long den = number_value(d);
                    if (den == 0)
                        throw ExprError("domain", d.offset, "zero denominator");
                    v = Rat(number_value(t), den);
                    v.canonicalize();
                }
                ExprPtr e = node(Expr::Op::scalar, t.offset);
                e->value = v;
                return e;
            }
            case Token::Type::lbracket: {
                Token open = take();
                ExprPtr e = node(Expr::Op::word, open.offset);
                if (peek().type != Token::Type::rbracket) {
                    for (;;) {
                        Token p = expect(Token::Type::number, "a composition part");
                        long part = number_value(p);
                        if (part < 1)
                            fail_at(p.offset, "composition parts must be positive");
                        e->word.parts.push_back(static_cast<int>(part));
                        if (peek().type == Token::Type::comma) { take(); continue; }
                        break;
                    }
                }
                expect(Token::Type::rbracket, "']' to close the word");
                return e;
            }
            case Token::Type::name: {
                Token t = take();
                ExprPtr e = node(Expr::Op::call, t.offset);
                e->name = t.text;
                expect(Token::Type::lparen, "'(' after a function name");
                if (peek().type != Token::Type::rparen) {
                    e->args.push_back(parse_expr());
                    while (peek().type == Token::Type::comma) {
                        take();
                        e->args.push_back(parse_expr());
                    }
                }
                expect(Token::Type::rparen, "')' to close the argument list");
                return e;
            }
            case Token::Type::lparen: {
                take();
                ExprPtr e = parse_expr();
                expect(Token::Type::rparen, "')'");
                return e;
            }
            default:
                fail("expected a number, a word like [1,2], a function call, "
                     "or '('");
        }
    }

    [[noreturn]] static void fail_at(size_t off, const std::string& msg) {
        throw ExprError("syntax", off, msg);
    }
};

} // namespace

ExprPtr parse_expression(const std::string& text) {
    Parser p{lex(text)};
    ExprPtr e = p.parse_expr();
    if (p.peek().type != Token::Type::end)
        throw ExprError("syntax", p.peek().offset, "unexpected trailing input");
    return e;
}

// ---- evaluator ----

namespace {

Value make_scalar(Rat v) {
    Value out;
    out.kind = Value::Kind::scalar;
    out.scalar = std::move(v);
    return out;
}

Value make_n(AlgebraElement x) {
    Value out;
    out.kind = Value::Kind::n_element;
    out.nel = std::move(x);
    return out;
}

Value make_q(QElement x) {
    Value out;
    out.kind = Value::Kind::q_element;
    out.qel = std::move(x);
    return out;
}

int value_weight(const Value& v) {
    switch (v.kind) {
        case Value::Kind::scalar: return 0;
        case Value::Kind::n_element: return max_weight(v.nel);
        case Value::Kind::q_element: return q_max_weight(v.qel);
        case Value::Kind::n_tensor: {
            int w = 0;
            for (const auto& [k, c] : v.nten.terms)
                w = std::max(w, word_weight(k.first) + word_weight(k.second));
            return w;
        }
        case Value::Kind::q_tensor: {
            int w = 0;
            for (const auto& [k, c] : v.qten.terms)
                w = std::max(w, k.first.weight() + k.second.weight());
            return w;
        }
    }
    return 0;
}

[[noreturn]] void type_error(size_t off, const std::string& msg) {
    throw ExprError("type", off, msg);
}

void check_bound(int w, const EvalConfig& cfg, size_t off) {
    if (w > cfg.bound)
        throw ExprError("bound", off,
                        "weight " + std::to_string(w) + " exceeds the bound " +
                            std::to_string(cfg.bound) +
                            " (raise it with --bound)");
}

Value finish(Value v, const EvalConfig& cfg, size_t off) {
    check_bound(value_weight(v), cfg, off);
    return v;
}

// Scalars lift to multiples of the unit next to an element.
void lift_pair(Value& a, Value& b, size_t off) {
    if (a.kind == b.kind) return;
    auto lift = [&](Value& s, const Value& like) {
        if (s.kind != Value::Kind::scalar) return false;
        if (like.kind == Value::Kind::n_element) {
            s = make_n(scalar_multiply(s.scalar, AlgebraElement::one()));
            return true;
        }
        if (like.kind == Value::Kind::q_element) {
            s = make_q(q_scalar_multiply(s.scalar, QElement::one()));
            return true;
        }
        return false;
    };
    if (lift(a, b) || lift(b, a)) return;
    type_error(off, std::string("cannot combine a ") + kind_name(a.kind) +
                        " with a " + kind_name(b.kind) +
                        "; the two algebras meet only at pair and pi");
}

long int_arg(const Value& v, const Expr& node, const std::string& fname,
             long lo, long hi) {
    if (v.kind != Value::Kind::scalar || v.scalar.get_den() != 1)
        type_error(node.offset, fname + " expects an integer argument");
    if (!v.scalar.get_num().fits_slong_p())
        throw ExprError("bound", node.offset, fname + ": argument out of range");
    long k = v.scalar.get_num().get_si();
    if (k < lo || k > hi)
        throw ExprError(
            k < lo ? "domain" : "bound", node.offset,
            fname + ": argument " + std::to_string(k) + " outside [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return k;
}

Composition word_arg(const Value& v, const Expr& node, const std::string& fname) {
    if (v.kind == Value::Kind::q_element && v.qel.terms.size() == 1 &&
        v.qel.terms.begin()->second == 1)
        return v.qel.terms.begin()->first;
    type_error(node.offset, fname + " expects a word literal like [1,2]");
}

Value eval_node(const Expr& e, const EvalConfig& cfg);

Value eval_call(const Expr& e, const EvalConfig& cfg) {
    const std::string& f = e.name;
    auto arity = [&](size_t n) {
        if (e.args.size() != n)
            type_error(e.offset, f + " expects " + std::to_string(n) +
                                     (n == 1 ? " argument" : " arguments"));
    };
    auto arg = [&](size_t i) { return eval_node(*e.args[i], cfg); };
    auto need_n = [&](Value v, size_t i) {
        if (v.kind != Value::Kind::n_element)
            type_error(e.args[i]->offset,
                       f + " expects a letter-word element here");
        return std::move(v.nel);
    };
    auto need_q = [&](Value v, size_t i) {
        if (v.kind != Value::Kind::q_element)
            type_error(e.args[i]->offset,
                       f + " expects a quasisymmetric element here");
        return std::move(v.qel);
    };
    auto domain_guard = [&](auto&& fn) {
        try {
            return fn();
        } catch (const std::invalid_argument& ex) {
            throw ExprError("domain", e.offset, ex.what());
        }
    };

    // single letters
    if (f == "Zn" || f == "Xn" || f == "Yn" || f == "Un") {
        arity(1);
        long k = int_arg(arg(0), *e.args[0], f, 1, cfg.bound);
        Alphabet tag = f == "Zn"   ? Alphabet::Z
                       : f == "Xn" ? Alphabet::X
                       : f == "Yn" ? Alphabet::Y
                                   : Alphabet::U;
        return make_n(AlgebraElement::monomial(
            letter_word(tag, Composition{static_cast<int>(k)})));
    }
    if (f == "Z") {
        arity(1);
        Composition w = word_arg(arg(0), *e.args[0], f);
        check_bound(w.weight(), cfg, e.offset);
        return make_n(z_monomial(w));
    }
    if (f == "P" || f == "Pp") {
        arity(1);
        long n = int_arg(arg(0), *e.args[0], f, 1, cfg.bound);
        return make_n(f == "P" ? newton_P(static_cast<int>(n))
                               : newton_P_prime(static_cast<int>(n)));
    }
    if (f == "Palpha") {
        arity(1);
        Composition w = word_arg(arg(0), *e.args[0], f);
        check_bound(w.weight(), cfg, e.offset);
        return make_n(domain_guard([&] { return build_P(w); }));
    }
    if (f == "E") {
        arity(1);
        Composition w = word_arg(arg(0), *e.args[0], f);
        check_bound(w.weight(), cfg, e.offset);
        return make_q(domain_guard([&] { return build_E(w); }));
    }
    if (f == "h" || f == "e") {
        arity(1);
        long k = int_arg(arg(0), *e.args[0], f, 1, cfg.bound);
        return make_q(f == "h" ? q_complete(static_cast<int>(k))
                               : q_elementary(static_cast<int>(k)));
    }
    if (f == "L" || f == "N") {
        arity(2);
        long u = int_arg(arg(0), *e.args[0], f, 1, cfg.bound);
        long v = int_arg(arg(1), *e.args[1], f, 1, cfg.bound);
        check_bound(static_cast<int>(u + v), cfg, e.offset);
        return make_n(f == "L" ? commutator_entry(static_cast<int>(u),
                                                  static_cast<int>(v))
                               : additive_entry(static_cast<int>(u),
                                                static_cast<int>(v)));
    }
    if (f == "bracket") {
        arity(2);
        AlgebraElement a = need_n(arg(0), 0);
        AlgebraElement b = need_n(arg(1), 1);
        check_bound(max_weight(a) + max_weight(b), cfg, e.offset);
        return make_n(bracket(a, b));
    }
    if (f == "pair") {
        arity(2);
        AlgebraElement a = need_n(arg(0), 0);
        QElement b = need_q(arg(1), 1);
        return make_scalar(domain_guard([&] { return pairing(a, b); }));
    }
    if (f == "delta") {
        arity(1);
        Value v = arg(0);
        if (v.kind == Value::Kind::n_element) {
            Value out;
            out.kind = Value::Kind::n_tensor;
            out.nten = domain_guard([&] { return coproduct(v.nel); });
            return out;
        }
        if (v.kind == Value::Kind::q_element) {
            Value out;
            out.kind = Value::Kind::q_tensor;
            out.qten = cut_coproduct(v.qel);
            return out;
        }
        type_error(e.args[0]->offset, "delta expects an element");
    }
    if (f == "vN" || f == "fN" || f == "vQ" || f == "fQ") {
        arity(2);
        long n = int_arg(arg(0), *e.args[0], f, 1, cfg.bound);
        if (f == "vN") {
            AlgebraElement x = need_n(arg(1), 1);
            return make_n(verschiebung_N(static_cast<int>(n), x));
        }
        if (f == "fN") {
            AlgebraElement x = need_n(arg(1), 1);
            check_bound(static_cast<int>(n) * max_weight(x), cfg, e.offset);
            return make_n(
                domain_guard([&] { return frobenius_NQ(static_cast<int>(n), x); }));
        }
        if (f == "vQ") {
            QElement x = need_q(arg(1), 1);
            int w = q_max_weight(x);
            check_bound(w, cfg, e.offset);
            if (w > 10)
                throw ExprError("bound", e.offset,
                                "vQ inverts the generator basis; inputs of "
                                "weight above 10 are outside desk scale");
            return make_q(v_tau(static_cast<int>(n), x));
        }
        QElement x = need_q(arg(1), 1);
        check_bound(static_cast<int>(n) * q_max_weight(x), cfg, e.offset);
        return make_q(frobenius_q(static_cast<int>(n), x));
    }
    if (f == "pi") {
        arity(1);
        AlgebraElement x = need_n(arg(0), 0);
        return make_q(domain_guard([&] { return project_to_symm(x); }));
    }
    if (f == "osh" || f == "sh") {
        arity(2);
        QElement a = need_q(arg(0), 0);
        QElement b = need_q(arg(1), 1);
        check_bound(q_max_weight(a) + q_max_weight(b), cfg, e.offset);
        return make_q(f == "osh" ? osh_product(a, b) : shuffle_product(a, b));
    }
    throw ExprError("type", e.offset, "unknown function: " + f);
}

Value eval_mul(Value a, Value b, size_t off, const EvalConfig& cfg) {
    using K = Value::Kind;
    if (a.kind == K::scalar && b.kind == K::scalar)
        return make_scalar(a.scalar * b.scalar);
    if (a.kind == K::scalar || b.kind == K::scalar) {
        const Rat& s = a.kind == K::scalar ? a.scalar : b.scalar;
        Value& x = a.kind == K::scalar ? b : a;
        switch (x.kind) {
            case K::n_element: return make_n(scalar_multiply(s, x.nel));
            case K::q_element: return make_q(q_scalar_multiply(s, x.qel));
            case K::n_tensor: {
                Value out;
                out.kind = K::n_tensor;
                out.nten = tensor_scalar_multiply(s, x.nten);
                return out;
            }
            case K::q_tensor: {
                Value out;
                out.kind = K::q_tensor;
                for (const auto& [k, c] : x.qten.terms) {
                    Rat sc = s * c;
                    if (sc != 0) out.qten.terms[k] = sc;
                }
                return out;
            }
            default: break;
        }
    }
    if (a.kind == K::n_element && b.kind == K::n_element) {
        check_bound(max_weight(a.nel) + max_weight(b.nel), cfg, off);
        return make_n(concat_product(a.nel, b.nel));
    }
    if (a.kind == K::q_element && b.kind == K::q_element) {
        check_bound(q_max_weight(a.qel) + q_max_weight(b.qel), cfg, off);
        return make_q(osh_product(a.qel, b.qel));
    }
    if (a.kind == K::n_tensor && b.kind == K::n_tensor) {
        Value out;
        out.kind = K::n_tensor;
        out.nten = tensor_multiply(a.nten, b.nten);
        return out;
    }
    if (a.kind == K::q_tensor && b.kind == K::q_tensor)
        type_error(off, "no product is defined on quasisymmetric tensors");
    type_error(off, std::string("cannot multiply a ") + kind_name(a.kind) +
                        " by a " + kind_name(b.kind) +
                        "; the two algebras meet only at pair and pi");
}

Value eval_node(const Expr& e, const EvalConfig& cfg) {
    switch (e.op) {
        case Expr::Op::scalar:
            return make_scalar(e.value);
        case Expr::Op::word:
            check_bound(e.word.weight(), cfg, e.offset);
            return make_q(QElement::word(e.word));
        case Expr::Op::neg: {
            Value v = eval_node(*e.args[0], cfg);
            switch (v.kind) {
                case Value::Kind::scalar: v.scalar = -v.scalar; break;
                case Value::Kind::n_element: v.nel = negate(v.nel); break;
                case Value::Kind::q_element: v.qel = q_negate(v.qel); break;
                case Value::Kind::n_tensor:
                    v.nten = tensor_scalar_multiply(Rat(-1), v.nten);
                    break;
                case Value::Kind::q_tensor: {
                    QTensor t;
                    for (const auto& [k, c] : v.qten.terms) t.terms[k] = -c;
                    v.qten = std::move(t);
                    break;
                }
            }
            return v;
        }
        case Expr::Op::add:
        case Expr::Op::sub: {
            Value a = eval_node(*e.args[0], cfg);
            Value b = eval_node(*e.args[1], cfg);
            lift_pair(a, b, e.offset);
            bool add = e.op == Expr::Op::add;
            switch (a.kind) {
                case Value::Kind::scalar:
                    return make_scalar(add ? Rat(a.scalar + b.scalar)
                                           : Rat(a.scalar - b.scalar));
                case Value::Kind::n_element:
                    return finish(make_n(add ? nsq::add(a.nel, b.nel)
                                             : sub(a.nel, b.nel)),
                                  cfg, e.offset);
                case Value::Kind::q_element:
                    return finish(make_q(add ? q_add(a.qel, b.qel)
                                             : q_sub(a.qel, b.qel)),
                                  cfg, e.offset);
                case Value::Kind::n_tensor: {
                    Value out;
                    out.kind = Value::Kind::n_tensor;
                    out.nten = add ? tensor_add(a.nten, b.nten)
                                   : tensor_sub(a.nten, b.nten);
                    return out;
                }
                case Value::Kind::q_tensor: {
                    Value out;
                    out.kind = Value::Kind::q_tensor;
                    out.qten = add ? q_tensor_add(a.qten, b.qten)
                                   : q_tensor_sub(a.qten, b.qten);
                    return out;
                }
            }
            break;
        }
        case Expr::Op::mul:
            return finish(eval_mul(eval_node(*e.args[0], cfg),
                                   eval_node(*e.args[1], cfg), e.offset, cfg),
                          cfg, e.offset);
        case Expr::Op::osh:
        case Expr::Op::sh: {
            Value a = eval_node(*e.args[0], cfg);
            Value b = eval_node(*e.args[1], cfg);
            if (a.kind != Value::Kind::q_element ||
                b.kind != Value::Kind::q_element)
                type_error(e.offset,
                           "osh/sh products act on quasisymmetric elements");
            check_bound(q_max_weight(a.qel) + q_max_weight(b.qel), cfg,
                        e.offset);
            QElement r = e.op == Expr::Op::osh ? osh_product(a.qel, b.qel)
                                               : shuffle_product(a.qel, b.qel);
            return make_q(std::move(r));
        }
        case Expr::Op::call:
            return finish(eval_call(e, cfg), cfg, e.offset);
    }
    throw std::logic_error("evaluate: unhandled node");
}

} // namespace

Value evaluate(const Expr& e, const EvalConfig& config) {
    return eval_node(e, config);
}

const char* kind_name(Value::Kind k) {
    switch (k) {
        case Value::Kind::scalar: return "scalar";
        case Value::Kind::n_element: return "letter-word element";
        case Value::Kind::q_element: return "quasisymmetric element";
        case Value::Kind::n_tensor: return "letter-word tensor";
        case Value::Kind::q_tensor: return "quasisymmetric tensor";
    }
    return "value";
}

std::string print_value(const Value& v) {
    switch (v.kind) {
        case Value::Kind::scalar: return v.scalar.get_str();
        case Value::Kind::n_element: return to_string(v.nel);
        case Value::Kind::q_element: return to_string(v.qel);
        case Value::Kind::n_tensor: return to_string(v.nten);
        case Value::Kind::q_tensor: return to_string(v.qten);
    }
    return "";
}

} // namespace nsq
