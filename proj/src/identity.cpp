#include "theta/identity.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace theta {

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error("parse error at column " + std::to_string(column) + ": " + message),
      column_(column)
{}

std::string to_string(const Rational& value)
{
    std::string out = std::to_string(value.numerator());
    if (value.denominator() != 1)
        out += "/" + std::to_string(value.denominator());
    return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    explicit Parser(std::string_view text)
    {
        // Normalise to ASCII while remembering the code-point column of each byte.
        std::size_t column = 1;
        for (std::size_t k = 0; k < text.size();) {
            const auto c = static_cast<unsigned char>(text[k]);
            if (c < 0x80) {
                src_ += static_cast<char>(c);
                ++k;
            } else if (text.substr(k, 3) == "\xE2\x88\x92") {
                src_ += '-';
                k += 3;
            } else {
                src_ += '\x01';
                ++k;
                while (k < text.size() && (static_cast<unsigned char>(text[k]) & 0xC0) == 0x80)
                    ++k;
            }
            columns_.push_back(column++);
        }
        columns_.push_back(column);
    }

    Identity parse()
    {
        Identity out;
        skip_ws();
        if (at_end())
            fail("empty identity");
        out.lhs = expr();
        if (!match('='))
            fail(at_end() ? "expected '=' before end of input"
                          : std::string("expected '=' but found '") + describe() + "'");
        out.rhs = expr();
        skip_ws();
        if (!at_end()) {
            if (peek() == '=')
                fail("duplicate '='");
            fail(std::string("unexpected '") + describe() + "'");
        }
        out.variables = std::move(vars_);
        return out;
    }

private:
    std::string src_;
    std::vector<std::size_t> columns_;
    std::size_t pos_ = 0;
    std::vector<std::string> vars_;

    [[noreturn]] void fail(const std::string& message) const
    {
        throw ParseError(columns_[std::min(pos_, columns_.size() - 1)], message);
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    std::string describe() const
    {
        if (at_end())
            return "end of input";
        if (src_[pos_] == '\x01')
            return "non-ASCII character";
        return std::string(1, src_[pos_]);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool match(char c)
    {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* context)
    {
        if (!match(c))
            fail(std::string("expected '") + c + "' " + context + " but found '" + describe() +
                 "'");
    }

    // Matches a keyword not followed by an identifier character.
    bool match_word(std::string_view word)
    {
        skip_ws();
        if (src_.compare(pos_, word.size(), word) != 0)
            return false;
        const std::size_t end = pos_ + word.size();
        if (end < src_.size() && is_ident_char(src_[end]))
            return false;
        pos_ = end;
        return true;
    }

    std::int64_t integer()
    {
        skip_ws();
        if (!is_digit(peek()))
            fail("expected a number");
        const std::size_t start = pos_;
        std::int64_t value = 0;
        while (is_digit(peek())) {
            if (pos_ - start >= 18) {
                pos_ = start;
                fail("number too large");
            }
            value = value * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    Rational rational()
    {
        const std::int64_t num = integer();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_pos = pos_;
            const std::int64_t den = integer();
            if (den == 0) {
                pos_ = den_pos;
                fail("zero denominator");
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string identifier()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (is_ident_char(peek()))
            ++pos_;
        return src_.substr(start, pos_ - start);
    }

    void declare(const std::string& name)
    {
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
            vars_.push_back(name);
    }

    int sign()
    {
        skip_ws();
        if (peek() == '+') {
            ++pos_;
            return 1;
        }
        if (peek() == '-') {
            ++pos_;
            return -1;
        }
        return 0;
    }

    std::vector<Term> expr()
    {
        std::vector<Term> terms;
        int s = sign();
        terms.push_back(term(s < 0 ? -1 : 1));
        while (true) {
            s = sign();
            if (s == 0)
                break;
            terms.push_back(term(s));
        }
        return terms;
    }

    bool at_factor_start()
    {
        skip_ws();
        if (src_.compare(pos_, 3, "dt1") == 0)
            return true;
        return peek() == 't' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]);
    }

    Term term(int s)
    {
        Term t;
        t.coefficient = Rational(s);
        bool have_rational = false;
        bool have_pi = false;
        bool have_factor = false;
        do {
            skip_ws();
            if (is_digit(peek())) {
                if (have_factor || have_rational || have_pi)
                    fail("a numeric coefficient must come first in a term");
                t.coefficient *= rational();
                have_rational = true;
            } else if (match_word("pi")) {
                if (have_factor || have_pi)
                    fail("'pi' must precede the theta factors and appear once");
                t.pi_power = 1;
                have_pi = true;
            } else if (at_factor_start()) {
                t.factors.push_back(factor());
                have_factor = true;
            } else {
                fail(std::string("expected a theta factor, coefficient or 'pi' but found '") +
                     describe() + "'");
            }
        } while (match('*'));
        return t;
    }

    ThetaFactor factor()
    {
        ThetaFactor f;
        skip_ws();
        if (src_.compare(pos_, 3, "dt1") == 0) {
            pos_ += 3;
            expect('(', "after 'dt1'");
            skip_ws();
            if (peek() != '0')
                fail("only dt1(0) is supported");
            ++pos_;
            expect(')', "after 'dt1(0'");
            f.kind = ThetaFactor::Kind::DTheta1;
            f.index = 1;
            return f;
        }
        ++pos_;  // 't'
        const int digit = src_[pos_] - '0';
        if (digit < 1 || digit > 4)
            fail("unknown theta index 't" + std::to_string(digit) + "'; expected t1..t4");
        ++pos_;
        f.index = digit;
        expect('(', "after theta index");
        f.argument = linform();
        if (match('|')) {
            if (match_word("2tau"))
                f.tau_multiplier = 2;
            else if (match_word("tau"))
                f.tau_multiplier = 1;
            else
                fail("expected 'tau' or '2tau' after '|'");
        }
        expect(')', "to close theta factor");
        return f;
    }

    LinearForm linform()
    {
        LinearForm lf;
        int s = sign();
        if (s == 0)
            s = 1;
        while (true) {
            skip_ws();
            if (is_digit(peek())) {
                const std::size_t num_pos = pos_;
                const Rational r = rational();
                match('*');
                if (match_word("tau")) {
                    lf.tau_coeff += s * r;
                } else if (is_ident_start(peek())) {
                    if (r.denominator() != 1) {
                        pos_ = num_pos;
                        fail("variable coefficients must be integers");
                    }
                    const std::size_t name_pos = pos_;
                    const std::string name = identifier();
                    if (name == "pi") {
                        pos_ = name_pos;
                        fail("'pi' is not allowed in a theta argument");
                    }
                    declare(name);
                    lf.coeffs[name] += s * r.numerator();
                } else {
                    lf.constant += s * r;
                }
            } else if (match_word("tau")) {
                lf.tau_coeff += s;
            } else if (is_ident_start(peek())) {
                const std::size_t name_pos = pos_;
                const std::string name = identifier();
                if (name == "pi" || name == "2tau") {
                    pos_ = name_pos;
                    fail("'" + name + "' is not allowed as a variable");
                }
                declare(name);
                lf.coeffs[name] += s;
            } else {
                fail(std::string("expected a variable, number or 'tau' in argument but found '") +
                     describe() + "'");
            }
            s = sign();
            if (s == 0)
                break;
        }
        std::erase_if(lf.coeffs, [](const auto& kv) { return kv.second == 0; });
        return lf;
    }
};

std::string linform_to_string(const LinearForm& lf, const std::vector<std::string>& order)
{
    std::string out;
    auto append = [&out](bool negative, const std::string& body) {
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        out += body;
    };
    auto emit_var = [&](const std::string& name, std::int64_t c) {
        const std::int64_t a = c < 0 ? -c : c;
        append(c < 0, (a == 1 ? "" : std::to_string(a)) + name);
    };
    for (const auto& name : order) {
        auto it = lf.coeffs.find(name);
        if (it != lf.coeffs.end())
            emit_var(name, it->second);
    }
    // Variables missing from `order` still print, alphabetically.
    for (const auto& [name, c] : lf.coeffs)
        if (std::find(order.begin(), order.end(), name) == order.end())
            emit_var(name, c);
    if (lf.constant != Rational(0))
        append(lf.constant < 0, to_string(abs(lf.constant)));
    if (lf.tau_coeff != Rational(0)) {
        const Rational a = abs(lf.tau_coeff);
        append(lf.tau_coeff < 0, (a == Rational(1) ? std::string() : to_string(a)) + "tau");
    }
    return out.empty() ? "0" : out;
}

std::string term_body(const Term& t, const std::vector<std::string>& order)
{
    const Rational a = abs(t.coefficient);
    std::vector<std::string> parts;
    if (a != Rational(1) || (t.factors.empty() && t.pi_power == 0))
        parts.push_back(to_string(a));
    for (int k = 0; k < t.pi_power; ++k)
        parts.push_back("pi");
    for (const auto& f : t.factors)
        parts.push_back(to_dsl(f, order));
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k)
            out += '*';
        out += parts[k];
    }
    return out;
}

std::string side_to_string(const std::vector<Term>& terms, const std::vector<std::string>& order)
{
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const bool negative = terms[k].coefficient < 0;
        if (k == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += term_body(terms[k], order);
    }
    return out;
}

LinearForm substitute_form(const LinearForm& lf, const std::map<std::string, LinearForm>& subs)
{
    LinearForm out;
    out.constant = lf.constant;
    out.tau_coeff = lf.tau_coeff;
    for (const auto& [name, c] : lf.coeffs) {
        auto it = subs.find(name);
        if (it == subs.end()) {
            out.coeffs[name] += c;
            continue;
        }
        for (const auto& [inner, ic] : it->second.coeffs)
            out.coeffs[inner] += c * ic;
        out.constant += Rational(c) * it->second.constant;
        out.tau_coeff += Rational(c) * it->second.tau_coeff;
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

Identity parse_identity(std::string_view text) { return Parser(text).parse(); }

std::string to_dsl(const ThetaFactor& factor, const std::vector<std::string>& variable_order)
{
    if (factor.kind == ThetaFactor::Kind::DTheta1)
        return "dt1(0)";
    std::string out = "t" + std::to_string(factor.index) + "(" +
                      linform_to_string(factor.argument, variable_order);
    if (factor.tau_multiplier == 2)
        out += "|2tau";
    else if (factor.tau_multiplier != 1)
        throw std::invalid_argument("tau multiplier must be 1 or 2");
    return out + ")";
}

std::string to_dsl(const Identity& identity)
{
    return side_to_string(identity.lhs, identity.variables) + " = " +
           side_to_string(identity.rhs, identity.variables);
}

std::map<std::string, Rational> difference_terms(const Identity& identity)
{
    static const std::vector<std::string> kNoOrder;
    std::map<std::string, Rational> out;
    auto add = [&](const Term& t, int s) {
        std::vector<std::string> keys;
        for (const auto& f : t.factors)
            keys.push_back(to_dsl(f, kNoOrder));
        std::sort(keys.begin(), keys.end());
        std::string key = t.pi_power ? "pi^" + std::to_string(t.pi_power) : std::string();
        for (const auto& k : keys)
            key += (key.empty() ? "" : "*") + k;
        out[key] += s * t.coefficient;
    };
    for (const auto& t : identity.lhs)
        add(t, 1);
    for (const auto& t : identity.rhs)
        add(t, -1);
    std::erase_if(out, [](const auto& kv) { return kv.second == Rational(0); });
    return out;
}

bool equivalent(const Identity& a, const Identity& b)
{
    const auto da = difference_terms(a);
    auto db = difference_terms(b);
    if (da == db)
        return true;
    for (auto& [key, c] : db)
        c = -c;
    return da == db;
}

Identity substitute(const Identity& identity, const std::map<std::string, LinearForm>& subs)
{
    Identity out = identity;
    auto rewrite = [&](std::vector<Term>& side) {
        for (auto& t : side)
            for (auto& f : t.factors)
                f.argument = substitute_form(f.argument, subs);
    };
    rewrite(out.lhs);
    rewrite(out.rhs);

    out.variables.clear();
    auto note = [&](const std::string& name) {
        if (std::find(out.variables.begin(), out.variables.end(), name) == out.variables.end())
            out.variables.push_back(name);
    };
    for (const auto& name : identity.variables) {
        auto it = subs.find(name);
        if (it == subs.end()) {
            note(name);
            continue;
        }
        for (const auto& [inner, c] : it->second.coeffs)
            note(inner);
    }
    // Drop variables that cancelled everywhere.
    std::vector<std::string> used;
    for (const auto& name : out.variables) {
        bool present = false;
        for (const auto* side : {&out.lhs, &out.rhs})
            for (const auto& t : *side)
                for (const auto& f : t.factors)
                    present = present || f.argument.coeffs.count(name) > 0;
        if (present)
            used.push_back(name);
    }
    out.variables = std::move(used);
    return out;
}

Identity with_flipped_rhs_sign(const Identity& identity, std::size_t rhs_term)
{
    Identity out = identity;
    if (rhs_term >= out.rhs.size())
        throw std::out_of_range("rhs term index out of range");
    out.rhs[rhs_term].coefficient = -out.rhs[rhs_term].coefficient;
    out.id += "~flipped";
    return out;
}

}  // namespace theta
