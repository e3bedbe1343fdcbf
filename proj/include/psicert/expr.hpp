#pragma once

// Small immutable expression trees in one variable x, evaluated with
// certified interval arithmetic. Used to state inequalities once and check
// them at many points.

#include "psicert/elementary.hpp"
#include "psicert/polygamma.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <variant>

namespace psicert {

enum class NamedConstant { euler_gamma, pi, batir_bstar, e };

enum class UnaryOp { neg, exp, ln, sinh, digamma, trigamma };

enum class BinaryOp { add, sub, mul, div };

class Expr;

namespace detail {

struct VarNode {};
struct ConstNode {
    Rational value;
};
struct NamedNode {
    NamedConstant which;
};
struct Node;

} // namespace detail

class Expr {
public:
    Expr(Rational value);
    Expr(long value) : Expr(Rational(value)) {}
    explicit Expr(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

    const detail::Node& node() const { return *node_; }
    const void* id() const { return node_.get(); }
    const std::shared_ptr<const detail::Node>& shared() const { return node_; }

private:
    std::shared_ptr<const detail::Node> node_;
};

namespace detail {

struct UnaryNode {
    UnaryOp op;
    Expr arg;
};
struct BinaryNode {
    BinaryOp op;
    Expr lhs, rhs;
};
struct PowNode {
    Expr base;
    long exponent;
};
struct Node {
    std::variant<VarNode, ConstNode, NamedNode, UnaryNode, BinaryNode, PowNode> value;
};

template <class T>
Expr make(T node)
{
    return Expr(std::make_shared<const Node>(Node{std::move(node)}));
}

} // namespace detail

inline Expr::Expr(Rational value) : node_(std::make_shared<const detail::Node>(detail::Node{detail::ConstNode{std::move(value)}})) {}

inline Expr var() { return detail::make(detail::VarNode{}); }
inline Expr constant(NamedConstant c) { return detail::make(detail::NamedNode{c}); }

inline Expr operator-(const Expr& a) { return detail::make(detail::UnaryNode{UnaryOp::neg, a}); }
inline Expr exp(const Expr& a) { return detail::make(detail::UnaryNode{UnaryOp::exp, a}); }
inline Expr ln(const Expr& a) { return detail::make(detail::UnaryNode{UnaryOp::ln, a}); }
inline Expr sinh(const Expr& a) { return detail::make(detail::UnaryNode{UnaryOp::sinh, a}); }
inline Expr digamma(const Expr& a) { return detail::make(detail::UnaryNode{UnaryOp::digamma, a}); }
inline Expr trigamma(const Expr& a) { return detail::make(detail::UnaryNode{UnaryOp::trigamma, a}); }
inline Expr pow(const Expr& a, long n) { return detail::make(detail::PowNode{a, n}); }

inline Expr operator+(const Expr& a, const Expr& b) { return detail::make(detail::BinaryNode{BinaryOp::add, a, b}); }
inline Expr operator-(const Expr& a, const Expr& b) { return detail::make(detail::BinaryNode{BinaryOp::sub, a, b}); }
inline Expr operator*(const Expr& a, const Expr& b) { return detail::make(detail::BinaryNode{BinaryOp::mul, a, b}); }
inline Expr operator/(const Expr& a, const Expr& b) { return detail::make(detail::BinaryNode{BinaryOp::div, a, b}); }

inline Expr operator+(const Expr& a, long b) { return a + Expr(b); }
inline Expr operator+(long a, const Expr& b) { return Expr(a) + b; }
inline Expr operator-(const Expr& a, long b) { return a - Expr(b); }
inline Expr operator-(long a, const Expr& b) { return Expr(a) - b; }
inline Expr operator*(const Expr& a, long b) { return a * Expr(b); }
inline Expr operator*(long a, const Expr& b) { return Expr(a) * b; }
inline Expr operator/(const Expr& a, long b) { return a / Expr(b); }
inline Expr operator/(long a, const Expr& b) { return Expr(a) / b; }

/// Precision knobs for one evaluation.
struct EvalContext {
    Rational shift_target = kDefaultShiftTarget;
    long work_precision = 64;
};

/// Evaluates expressions at one point; shared subtrees are computed once.
class Evaluator {
public:
    Evaluator(Rational x, EvalContext ctx) : x_(std::move(x)), ctx_(std::move(ctx)) {}

    Interval operator()(const Expr& e)
    {
        if (auto it = memo_.find(e.id()); it != memo_.end())
            return it->second.second;
        Interval v = std::visit([this](const auto& n) { return eval(n); }, e.node().value);
        // holding the node keeps its address from being reused by a later expression
        memo_.emplace(e.id(), std::pair{e.shared(), v});
        return v;
    }

private:
    Interval eval(const detail::VarNode&) { return Interval(x_); }
    Interval eval(const detail::ConstNode& c) { return Interval(c.value); }

    Interval eval(const detail::NamedNode& c)
    {
        switch (c.which) {
        case NamedConstant::euler_gamma: return euler_gamma_enclosure(ctx_.shift_target);
        case NamedConstant::pi: return iv_pi(ctx_.work_precision);
        case NamedConstant::batir_bstar: return batir_bstar_enclosure(ctx_.shift_target, ctx_.work_precision);
        case NamedConstant::e: return iv_exp(Interval(Rational(1)), ctx_.work_precision);
        }
        throw std::logic_error("unknown constant");
    }

    Interval eval(const detail::UnaryNode& u)
    {
        Interval a = (*this)(u.arg);
        const long p = ctx_.work_precision;
        switch (u.op) {
        case UnaryOp::neg: return -a;
        case UnaryOp::exp: return iv_exp(a, p);
        case UnaryOp::ln: return iv_ln(a, p);
        case UnaryOp::sinh: return iv_sinh(a, p);
        case UnaryOp::digamma: {
            // psi is increasing on (0, inf)
            if (a.is_point())
                return digamma_enclosure(a.lo(), ctx_.shift_target, p);
            return {digamma_enclosure(a.lo(), ctx_.shift_target, p).lo(),
                    digamma_enclosure(a.hi(), ctx_.shift_target, p).hi()};
        }
        case UnaryOp::trigamma: {
            // psi' is decreasing on (0, inf)
            if (a.is_point())
                return trigamma_enclosure(a.lo(), ctx_.shift_target);
            return {trigamma_enclosure(a.hi(), ctx_.shift_target).lo(),
                    trigamma_enclosure(a.lo(), ctx_.shift_target).hi()};
        }
        }
        throw std::logic_error("unknown unary op");
    }

    Interval eval(const detail::BinaryNode& b)
    {
        Interval l = (*this)(b.lhs), r = (*this)(b.rhs);
        switch (b.op) {
        case BinaryOp::add: return l + r;
        case BinaryOp::sub: return l - r;
        case BinaryOp::mul: return l * r;
        case BinaryOp::div: return l / r;
        }
        throw std::logic_error("unknown binary op");
    }

    Interval eval(const detail::PowNode& p) { return pow((*this)(p.base), p.exponent); }

    Rational x_;
    EvalContext ctx_;
    std::unordered_map<const void*, std::pair<std::shared_ptr<const detail::Node>, Interval>> memo_;
};

inline Interval evaluate(const Expr& e, const Rational& x, const EvalContext& ctx = {})
{
    return Evaluator(x, ctx)(e);
}

/// Infix rendering, e.g. "(x + 1/2)*exp(-2*psi(x + 1))".
inline std::string to_string(const Expr& e)
{
    struct Printer {
        std::string operator()(const detail::VarNode&) const { return "x"; }
        std::string operator()(const detail::ConstNode& c) const { return to_string(c.value); }
        std::string operator()(const detail::NamedNode& c) const
        {
            switch (c.which) {
            case NamedConstant::euler_gamma: return "gamma";
            case NamedConstant::pi: return "pi";
            case NamedConstant::batir_bstar: return "bstar";
            case NamedConstant::e: return "e";
            }
            return "?";
        }
        std::string operator()(const detail::UnaryNode& u) const
        {
            const std::string a = to_string(u.arg);
            switch (u.op) {
            case UnaryOp::neg: return "-(" + a + ")";
            case UnaryOp::exp: return "exp(" + a + ")";
            case UnaryOp::ln: return "ln(" + a + ")";
            case UnaryOp::sinh: return "sinh(" + a + ")";
            case UnaryOp::digamma: return "psi(" + a + ")";
            case UnaryOp::trigamma: return "psi'(" + a + ")";
            }
            return "?";
        }
        std::string operator()(const detail::BinaryNode& b) const
        {
            static constexpr const char* symbols[] = {" + ", " - ", "*", "/"};
            return "(" + to_string(b.lhs) + symbols[static_cast<int>(b.op)] + to_string(b.rhs) + ")";
        }
        std::string operator()(const detail::PowNode& p) const
        {
            return to_string(p.base) + "^" + std::to_string(p.exponent);
        }
    };
    return std::visit(Printer{}, e.node().value);
}

} // namespace psicert
