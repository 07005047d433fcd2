#include "qcong/expr.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "qcong/qkit.hpp"

namespace qcong {

namespace {

struct Token {
    enum class Type { number, ident, op, end };
    Type type = Type::end;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.type = Token::Type::number;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t.text += s[i++];
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.type = Token::Type::ident;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) t.text += s[i++];
        } else {
            t.type = Token::Type::op;
            const std::string two = s.substr(i, 2);
            if (two == "==" || two == "!=" || two == "<=" || two == ">=") {
                t.text = two;
                i += 2;
            } else if (std::string("+-*/%^(),;<>=").find(c) != std::string::npos) {
                t.text = std::string(1, c);
                ++i;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_sum();
        if (peek().type != Token::Type::end) throw ParseError("trailing input '" + peek().text + "'", peek().pos);
        return e;
    }

    // Exposed for constraints: parse a sum and stop at a comparison operator.
    ExprPtr parse_sum() {
        ExprPtr lhs = parse_product();
        while (is_op("+") || is_op("-")) {
            const bool plus = next().text == "+";
            ExprPtr rhs = parse_product();
            lhs = make_binary(plus ? Expr::Kind::add : Expr::Kind::sub, lhs, rhs);
        }
        return lhs;
    }

    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    bool is_op(const char* s) const { return peek().type == Token::Type::op && peek().text == s; }

private:
    bool starts_atom() const {
        const auto& t = peek();
        return t.type == Token::Type::number || t.type == Token::Type::ident ||
               (t.type == Token::Type::op && t.text == "(");
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_unary();
        while (true) {
            if (is_op("*") || is_op("/") || is_op("%")) {
                const std::string op = next().text;
                ExprPtr rhs = parse_unary();
                const auto kind = op == "*" ? Expr::Kind::mul : op == "/" ? Expr::Kind::div : Expr::Kind::mod;
                lhs = make_binary(kind, lhs, rhs);
            } else if (starts_atom()) {
                lhs = make_binary(Expr::Kind::mul, lhs, parse_power());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        if (is_op("-")) {
            next();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::neg;
            e->args = {parse_unary()};
            return e;
        }
        if (is_op("+")) {
            next();
            return parse_unary();
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (is_op("^")) {
            next();
            return make_binary(Expr::Kind::pow, base, parse_unary());
        }
        return base;
    }

    ExprPtr parse_primary() {
        const Token& t = next();
        if (t.type == Token::Type::number) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::number;
            e->value = Integer(t.text);
            return e;
        }
        if (t.type == Token::Type::ident) {
            // Single-letter names are variables, so "k(k+1)" is a product.
            if (t.text.size() == 1 || !is_op("(")) return make_symbol(t.text);
            next();
            std::vector<ExprPtr> args;
            if (!is_op(")")) {
                args.push_back(parse_sum());
                while (is_op(",") || is_op(";")) {
                    next();
                    args.push_back(parse_sum());
                }
            }
            expect(")");
            return make_call(t.text, std::move(args));
        }
        if (t.type == Token::Type::op && t.text == "(") {
            ExprPtr e = parse_sum();
            expect(")");
            return e;
        }
        throw ParseError(t.type == Token::Type::end ? "unexpected end of expression" : "unexpected '" + t.text + "'",
                         t.pos);
    }

    void expect(const char* s) {
        if (!is_op(s)) throw ParseError(std::string("expected '") + s + "'", peek().pos);
        next();
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div:
        case Expr::Kind::mod: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 4;
        default: return 5;
    }
}

std::string wrap(const Expr& e, int min_prec) {
    std::string s = e.to_string();
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

long checked(const Integer& v, const char* what) {
    if (!v.fits_slong_p()) throw NonIntegral(std::string(what) + " overflows a machine integer");
    return v.get_si();
}

long floor_div(long a, long b) {
    if (b == 0) throw NonIntegral("division by zero");
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer eval_big(const Expr& e, const IntEnv& env);

Integer eval_call(const Expr& e, const IntEnv& env) {
    auto arg = [&](std::size_t i) { return eval_big(*e.args.at(i), env); };
    auto need = [&](std::size_t n) {
        if (e.args.size() != n)
            throw NonIntegral(e.name + "() expects " + std::to_string(n) + " arguments");
    };
    const std::string& f = e.name;
    if (f == "floor" || f == "ceil") {
        need(2);
        const long a = checked(arg(0), "floor/ceil"), b = checked(arg(1), "floor/ceil");
        if (b == 0) throw NonIntegral("division by zero in " + f);
        return f == "floor" ? floor_div(a, b) : -floor_div(-a, b);
    }
    if (f == "binom") {
        need(2);
        const Integer x = arg(0);
        const long c = checked(arg(1), "binom");
        if (c < 0) return 0;
        Integer num = 1, den = 1;
        for (long i = 0; i < c; ++i) {
            num *= x - i;
            den *= i + 1;
        }
        return num / den;
    }
    if (f == "gcd") {
        need(2);
        Integer g;
        mpz_gcd(g.get_mpz_t(), arg(0).get_mpz_t(), arg(1).get_mpz_t());
        return g;
    }
    if (f == "kron") {
        need(2);
        return kronecker(checked(arg(0), "kron"), checked(arg(1), "kron"));
    }
    if (f == "delta") {
        need(2);
        return arg(0) == arg(1) ? 1 : 0;
    }
    if (f == "lnr") {
        need(3);
        const Integer b = arg(1);
        if (b == 0) throw NonIntegral("lnr with zero denominator");
        return least_nonneg_residue(Rational(arg(0), b), checked(arg(2), "lnr"));
    }
    if (f == "min" || f == "max") {
        if (e.args.empty()) throw NonIntegral(f + "() needs arguments");
        Integer best = arg(0);
        for (std::size_t i = 1; i < e.args.size(); ++i) {
            Integer v = arg(i);
            if (f == "min" ? v < best : v > best) best = v;
        }
        return best;
    }
    if (f == "abs") {
        need(1);
        return abs(arg(0));
    }
    throw NonIntegral("function " + f + "() is not available in integer context");
}

Integer eval_big(const Expr& e, const IntEnv& env) {
    switch (e.kind) {
        case Expr::Kind::number: return e.value;
        case Expr::Kind::symbol: {
            auto it = env.find(e.name);
            if (it == env.end()) throw NonIntegral("unbound symbol '" + e.name + "'");
            return it->second;
        }
        case Expr::Kind::add: return eval_big(*e.args[0], env) + eval_big(*e.args[1], env);
        case Expr::Kind::sub: return eval_big(*e.args[0], env) - eval_big(*e.args[1], env);
        case Expr::Kind::mul: return eval_big(*e.args[0], env) * eval_big(*e.args[1], env);
        case Expr::Kind::neg: return -eval_big(*e.args[0], env);
        case Expr::Kind::div: {
            const Integer a = eval_big(*e.args[0], env), b = eval_big(*e.args[1], env);
            if (b == 0) throw NonIntegral("division by zero in " + e.to_string());
            if (a % b != 0)
                throw NonIntegral(e.to_string() + " = " + a.get_str() + "/" + b.get_str() + " is not an integer");
            return a / b;
        }
        case Expr::Kind::mod: {
            const Integer a = eval_big(*e.args[0], env), b = eval_big(*e.args[1], env);
            if (b == 0) throw NonIntegral("modulo zero in " + e.to_string());
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return r;
        }
        case Expr::Kind::pow: {
            const Integer b = eval_big(*e.args[0], env);
            const long x = checked(eval_big(*e.args[1], env), "exponent");
            if (x < 0) throw NonIntegral("negative exponent in integer context: " + e.to_string());
            Integer r;
            mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(x));
            return r;
        }
        case Expr::Kind::call: return eval_call(e, env);
    }
    throw NonIntegral("bad expression");
}

}  // namespace

std::string Expr::to_string() const {
    switch (kind) {
        case Kind::number: return value.get_str();
        case Kind::symbol: return name;
        case Kind::add: return wrap(*args[0], 1) + "+" + wrap(*args[1], 2);
        case Kind::sub: return wrap(*args[0], 1) + "-" + wrap(*args[1], 2);
        case Kind::mul: return wrap(*args[0], 2) + "*" + wrap(*args[1], 3);
        case Kind::div: return wrap(*args[0], 2) + "/" + wrap(*args[1], 3);
        case Kind::mod: return wrap(*args[0], 2) + "%" + wrap(*args[1], 3);
        case Kind::neg: return "-" + wrap(*args[0], 3);
        case Kind::pow: return wrap(*args[0], 5) + "^" + wrap(*args[1], 4);
        case Kind::call: {
            std::string s = name + "(";
            for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i]->to_string();
            return s + ")";
        }
    }
    return "?";
}

bool Expr::mentions(const std::string& symbol) const {
    if (kind == Kind::symbol) return name == symbol;
    for (const auto& a : args)
        if (a->mentions(symbol)) return true;
    return false;
}

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse_all(); }

ExprPtr make_number(long v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::number;
    e->value = v;
    return e;
}

ExprPtr make_symbol(const std::string& name) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::symbol;
    e->name = name;
    return e;
}

ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = {std::move(lhs), std::move(rhs)};
    return e;
}

ExprPtr make_call(const std::string& name, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::call;
    e->name = name;
    e->args = std::move(args);
    return e;
}

long eval_int(const Expr& e, const IntEnv& env) { return checked(eval_big(e, env), e.to_string().c_str()); }

long eval_int(const std::string& text, const IntEnv& env) { return eval_int(*parse_expr(text), env); }

Constraint Constraint::parse(const std::string& text) {
    Constraint c;
    c.text = text;
    std::string body = text;
    if (text == "odd") body = "n%2==1";
    if (text == "even") body = "n%2==0";
    Parser p(body);
    c.lhs = p.parse_sum();
    const Token& t = p.peek();
    static const char* ops[] = {"==", "=", "!=", "<=", ">=", "<", ">"};
    for (const char* op : ops) {
        if (t.type == Token::Type::op && t.text == op) {
            c.op = op == std::string("=") ? "==" : op;
            p.next();
            c.rhs = p.parse_sum();
            if (p.peek().type != Token::Type::end) throw ParseError("trailing input in constraint", p.peek().pos);
            return c;
        }
    }
    throw ParseError("constraint needs a comparison operator", t.pos);
}

bool Constraint::holds(const IntEnv& env) const {
    const Integer a = eval_big(*lhs, env), b = eval_big(*rhs, env);
    if (op == "==") return a == b;
    if (op == "!=") return a != b;
    if (op == "<=") return a <= b;
    if (op == ">=") return a >= b;
    if (op == "<") return a < b;
    return a > b;
}

}  // namespace qcong
