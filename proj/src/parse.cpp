#include "bigrade/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bigrade {

namespace {

// Recursive-descent parser over a single line.
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := rational | variable | '(' expr ')'
class ExprParser {
public:
    ExprParser(const std::string& text, const RingDescriptor& ring, int line)
        : s_(text), ring_(ring), line_(line) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, (int)pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (!eat('^')) return base;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
            fail("expected a nonnegative integer exponent");
        long e = integer();
        Polynomial p = Polynomial::constant(ring_, Coeff::one(ring_.field));
        for (long i = 0; i < e; ++i) p = p * base;
        return p;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (pos_ == start) fail("expected an integer");
        if (pos_ - start > 18) fail("integer literal too long");
        return std::stol(s_.substr(start, pos_ - start));
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
                fail("expected a variable index");
            long i = integer();
            int n = c == 'x' ? ring_.nx : ring_.ny;
            if (i >= n)
                fail("variable " + std::string(1, c) + std::to_string(i) +
                     " outside the declared ring");
            Monomial m = c == 'x' ? Monomial::xvar(ring_, (int)i)
                                  : Monomial::yvar(ring_, (int)i);
            return Polynomial::monomial(ring_, m);
        }
        if (std::isdigit((unsigned char)c)) {
            mpq_class v(integer());
            if (eat('/')) v /= mpq_class(integer());
            return Polynomial::constant(ring_, Coeff(v, ring_.field));
        }
        fail("expected a coefficient, variable or '('");
    }

    const std::string& s_;
    const RingDescriptor& ring_;
    int line_;
    size_t pos_ = 0;
};

std::string strip(const std::string& raw) {
    std::string s = raw;
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingDescriptor& ring,
                            int line) {
    return ExprParser(text, ring, line).parse();
}

FieldSpec parse_field_spec(const std::string& text) {
    if (text == "qq") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        try {
            return prime_field(std::stoul(text.substr(3)));
        } catch (const std::logic_error&) {
            throw parse_error("bad prime in field spec '" + text + "'", 0, 0);
        }
    }
    throw parse_error("field must be 'qq' or 'fp:<prime>', got '" + text + "'", 0, 0);
}

IdealFile parse_ideal_stream(std::istream& in,
                             std::optional<FieldSpec> field_override,
                             BlockOrder order, bool allow_inhomogeneous) {
    std::string raw;
    int lineno = 0;
    auto next = [&]() -> std::optional<std::string> {
        while (std::getline(in, raw)) {
            ++lineno;
            std::string s = strip(raw);
            if (!s.empty()) return s;
        }
        return std::nullopt;
    };

    auto header = next();
    if (!header) throw parse_error("empty ideal file", lineno, 1);
    int nx = 0, ny = 0;
    {
        std::istringstream hs(*header);
        std::string kw, xw, yw;
        if (!(hs >> kw >> xw >> nx >> yw >> ny) || kw != "ring" || xw != "x" ||
            yw != "y" || nx < 2 || ny < 2 || (hs >> kw))
            throw parse_error("expected header 'ring x <nx> y <ny>' with both "
                              "counts at least 2", lineno, 1);
    }

    std::optional<FieldSpec> directive;
    auto line = next();
    if (line && line->rfind("field", 0) == 0) {
        std::istringstream fs(*line);
        std::string kw, val;
        if (!(fs >> kw >> val) || (fs >> kw))
            throw parse_error("expected 'field qq' or 'field fp:<prime>'", lineno, 1);
        try {
            directive = parse_field_spec(val);
        } catch (const parse_error& e) {
            throw parse_error(e.what(), lineno, 1);
        }
        line = next();
    }
    if (!line || *line != "gens")
        throw parse_error("expected 'gens' section", lineno, 1);

    FieldSpec field = field_override ? *field_override
                                     : directive.value_or(rationals());
    RingDescriptor ring(nx, ny, field, order);

    std::vector<Polynomial> gens;
    while ((line = next())) {
        Polynomial g = parse_polynomial(*line, ring, lineno);
        if (!allow_inhomogeneous && !g.is_bihomogeneous())
            throw parse_error("generator is not bihomogeneous", lineno, 1);
        gens.push_back(std::move(g));
    }
    return {Ideal(ring, std::move(gens)), directive};
}

IdealFile parse_ideal_file(const std::string& path,
                           std::optional<FieldSpec> field_override,
                           BlockOrder order, bool allow_inhomogeneous) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0, 0);
    return parse_ideal_stream(in, field_override, order, allow_inhomogeneous);
}

std::string print_ideal(const Ideal& I) {
    std::string s = "ring x " + std::to_string(I.ring.nx) + " y " +
                    std::to_string(I.ring.ny) + "\n";
    if (!I.ring.field.is_rational())
        s += "field fp:" + std::to_string(I.ring.field.p) + "\n";
    s += "gens\n";
    for (const auto& g : I.generators) s += g.str() + "\n";
    return s;
}

} // namespace bigrade
