#include "mvlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

namespace mvl {

Formula Formula::bot() {
    static const auto n = std::make_shared<const Node>(Node{Kind::Bot, 0, nullptr, nullptr});
    return Formula(n);
}

Formula Formula::var(int index) {
    if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = index;
    return Formula(std::move(n));
}

Formula Formula::imp(Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Imp;
    n->lhs = lhs.node_;
    n->rhs = rhs.node_;
    return Formula(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Conj;
    n->lhs = lhs.node_;
    n->rhs = rhs.node_;
    return Formula(std::move(n));
}

Formula Formula::top() { return imp(bot(), bot()); }
Formula Formula::neg(Formula f) { return imp(std::move(f), bot()); }
Formula Formula::wedge(Formula a, Formula b) { return conj(a, imp(a, b)); }
Formula Formula::vee(Formula a, Formula b) {
    return wedge(imp(imp(a, b), b), imp(imp(b, a), a));
}
Formula Formula::iff(Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); }
Formula Formula::oplus(Formula a, Formula b) {
    return neg(conj(neg(std::move(a)), neg(std::move(b))));
}

Formula Formula::multiple(int n, Formula f) {
    if (n < 1) throw std::invalid_argument("multiple count must be >= 1");
    Formula acc = f;
    for (int i = 1; i < n; ++i) acc = oplus(acc, f);
    return acc;
}

Formula Formula::power(int n, Formula f) {
    if (n < 1) throw std::invalid_argument("power count must be >= 1");
    Formula acc = f;
    for (int i = 1; i < n; ++i) acc = conj(acc, f);
    return acc;
}

int Formula::depth() const {
    switch (kind()) {
    case Kind::Bot:
    case Kind::Var: return 0;
    default: return 1 + std::max(left().depth(), right().depth());
    }
}

std::set<int> Formula::free_variables() const {
    std::set<int> out;
    std::vector<const Node*> stack{node_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        switch (n->kind) {
        case Kind::Bot: break;
        case Kind::Var: out.insert(n->var); break;
        default:
            stack.push_back(n->lhs.get());
            stack.push_back(n->rhs.get());
        }
    }
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Formula::Kind::Bot: return true;
    case Formula::Kind::Var: return a.var_index() == b.var_index();
    default: return a.left() == b.left() && a.right() == b.right();
    }
}

bool operator<(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return false;
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind());
    switch (a.kind()) {
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Var: return a.var_index() < b.var_index();
    default:
        if (a.left() < b.left()) return true;
        if (b.left() < a.left()) return false;
        return a.right() < b.right();
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    enum class Tok { Var, Int, Bot, Top, Imp, Iff, Wedge, Vee, Oplus, Amp, Bang,
                     Caret, Star, LParen, RParen, End };

    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    Tok tok = Tok::End;
    long value = 0;       // for Var / Int
    std::size_t tok_pos = 0;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_pos = pos_;
        if (pos_ >= text_.size()) { tok = Tok::End; return; }
        const char c = text_[pos_];
        if (starts("(+)")) { tok = Tok::Oplus; pos_ += 3; return; }
        if (starts("->")) { tok = Tok::Imp; pos_ += 2; return; }
        if (starts("<->")) { tok = Tok::Iff; pos_ += 3; return; }
        if (starts("/\\")) { tok = Tok::Wedge; pos_ += 2; return; }
        if (starts("\\/")) { tok = Tok::Vee; pos_ += 2; return; }
        switch (c) {
        case '&': tok = Tok::Amp; ++pos_; return;
        case '!': tok = Tok::Bang; ++pos_; return;
        case '^': tok = Tok::Caret; ++pos_; return;
        case '*': tok = Tok::Star; ++pos_; return;
        case '(': tok = Tok::LParen; ++pos_; return;
        case ')': tok = Tok::RParen; ++pos_; return;
        default: break;
        }
        if (c == 'X' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            value = read_int();
            tok = Tok::Var;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            value = read_int();
            tok = Tok::Int;
            return;
        }
        if (keyword("bot")) { tok = Tok::Bot; return; }
        if (keyword("top")) { tok = Tok::Top; return; }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

private:
    bool starts(const char* s) const { return text_.compare(pos_, std::strlen(s), s) == 0; }
    bool keyword(const char* s) {
        const std::size_t len = std::strlen(s);
        if (text_.compare(pos_, len, s) != 0) return false;
        const std::size_t end = pos_ + len;
        if (end < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }
    long read_int() {
        long v = 0;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError(start, "integer too large");
            ++pos_;
        }
        return v;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lx_(text) {}

    Formula parse() {
        Formula f = parse_iff();
        if (lx_.tok != Lexer::Tok::End)
            throw ParseError(lx_.tok_pos, "trailing input");
        return f;
    }

private:
    using Tok = Lexer::Tok;

    Formula parse_iff() {
        Formula f = parse_imp();
        while (lx_.tok == Tok::Iff) {
            lx_.advance();
            f = Formula::iff(f, parse_imp());
        }
        return f;
    }
    Formula parse_imp() {
        Formula f = parse_vee();
        if (lx_.tok == Tok::Imp) {
            lx_.advance();
            return Formula::imp(f, parse_imp()); // right-assoc
        }
        return f;
    }
    Formula parse_vee() {
        Formula f = parse_wedge();
        while (lx_.tok == Tok::Vee) {
            lx_.advance();
            f = Formula::vee(f, parse_wedge());
        }
        return f;
    }
    Formula parse_wedge() {
        Formula f = parse_oplus();
        while (lx_.tok == Tok::Wedge) {
            lx_.advance();
            f = Formula::wedge(f, parse_oplus());
        }
        return f;
    }
    Formula parse_oplus() {
        Formula f = parse_conj();
        while (lx_.tok == Tok::Oplus) {
            lx_.advance();
            f = Formula::oplus(f, parse_conj());
        }
        return f;
    }
    Formula parse_conj() {
        Formula f = parse_mult();
        while (lx_.tok == Tok::Amp) {
            lx_.advance();
            f = Formula::conj(f, parse_mult());
        }
        return f;
    }
    Formula parse_mult() {
        if (lx_.tok == Tok::Int) {
            const long n = lx_.value;
            const std::size_t pos = lx_.tok_pos;
            lx_.advance();
            expect(Tok::Star, "'*' after multiple count");
            lx_.advance();
            if (n < 1) throw ParseError(pos, "multiple count must be >= 1");
            return Formula::multiple(static_cast<int>(n), parse_mult());
        }
        return parse_neg();
    }
    Formula parse_neg() {
        if (lx_.tok == Tok::Bang) {
            lx_.advance();
            return Formula::neg(parse_neg());
        }
        return parse_power();
    }
    Formula parse_power() {
        Formula f = parse_atom();
        while (lx_.tok == Tok::Caret) {
            lx_.advance();
            if (lx_.tok != Tok::Int)
                throw ParseError(lx_.tok_pos, "expected integer exponent");
            const long n = lx_.value;
            if (n < 1) throw ParseError(lx_.tok_pos, "power count must be >= 1");
            lx_.advance();
            f = Formula::power(static_cast<int>(n), f);
        }
        return f;
    }
    Formula parse_atom() {
        switch (lx_.tok) {
        case Tok::Bot: lx_.advance(); return Formula::bot();
        case Tok::Top: lx_.advance(); return Formula::top();
        case Tok::Var: {
            const long i = lx_.value;
            if (i < 1) throw ParseError(lx_.tok_pos, "variable index must be >= 1");
            lx_.advance();
            return Formula::var(static_cast<int>(i));
        }
        case Tok::LParen: {
            lx_.advance();
            Formula f = parse_iff();
            expect(Tok::RParen, "')'");
            lx_.advance();
            return f;
        }
        default:
            throw ParseError(lx_.tok_pos, "expected formula");
        }
    }

    void expect(Tok t, const char* what) {
        if (lx_.tok != t)
            throw ParseError(lx_.tok_pos, std::string("expected ") + what);
    }

    Lexer lx_;
};

} // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

std::string render_formula(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Bot: return "bot";
    case Formula::Kind::Var: return "X" + std::to_string(f.var_index());
    case Formula::Kind::Imp:
        return "(" + render_formula(f.left()) + " -> " + render_formula(f.right()) + ")";
    case Formula::Kind::Conj:
        return "(" + render_formula(f.left()) + " & " + render_formula(f.right()) + ")";
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Basic literals
// ---------------------------------------------------------------------------

BasicLiteral BasicLiteral::canonical() const {
    BasicLiteral out;
    out.var_index = var_index;
    for (const Step& s : steps) {
        if (s.count < 1) throw std::invalid_argument("literal step count must be >= 1");
        if (s.count == 1) continue;
        // min(1,b*min(1,a x)) = min(1,ab x) and the dual identity for powers,
        // so same-kind neighbours fuse multiplicatively.
        if (!out.steps.empty() && out.steps.back().kind == s.kind)
            out.steps.back().count *= s.count;
        else
            out.steps.push_back(s);
    }
    return out;
}

std::string BasicLiteral::str() const {
    const BasicLiteral c = canonical();
    std::string body;
    bool expect_mult = true;
    for (const Step& s : c.steps) {
        const bool is_mult = s.kind == StepKind::Mult;
        if (is_mult != expect_mult) {
            if (!body.empty()) body += ",";
            body += "1"; // pad to keep the Mult/Pow alternation
        }
        if (!body.empty()) body += ",";
        body += std::to_string(s.count);
        expect_mult = !is_mult;
    }
    if (body.empty()) body = "1";
    return "(" + body + ")X" + std::to_string(c.var_index);
}

Formula expand_basic_literal(const BasicLiteral& lit) {
    if (lit.var_index < 1) throw std::invalid_argument("variable index must be >= 1");
    Formula f = Formula::var(lit.var_index);
    for (const BasicLiteral::Step& s : lit.steps) {
        if (s.count < 1) throw std::invalid_argument("literal step count must be >= 1");
        f = s.kind == BasicLiteral::StepKind::Mult ? Formula::multiple(s.count, f)
                                                   : Formula::power(s.count, f);
    }
    return f;
}

} // namespace mvl
