#include <abmod/parse.hpp>
#include <abmod/errors.hpp>
#include <algorithm>
#include <sstream>

namespace abmod {

namespace {

struct Token {
    enum class Kind { integer, ident, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line0, int col0) : s_(s), line_(line0), col_(col0) {}

    Token next() {
        skip_ws();
        int l = line_, c = col_;
        if (pos_ >= s_.size()) return {Token::Kind::end, "", l, c};
        char ch = s_[pos_];
        if (isdigit(static_cast<unsigned char>(ch))) {
            std::string v;
            while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) v += advance();
            return {Token::Kind::integer, v, l, c};
        }
        if (isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string v;
            while (pos_ < s_.size() &&
                   (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                v += advance();
            return {Token::Kind::ident, v, l, c};
        }
        advance();
        switch (ch) {
            case '+': return {Token::Kind::plus, "+", l, c};
            case '-': return {Token::Kind::minus, "-", l, c};
            case '*': return {Token::Kind::star, "*", l, c};
            case '^': return {Token::Kind::caret, "^", l, c};
            case '(': return {Token::Kind::lparen, "(", l, c};
            case ')': return {Token::Kind::rparen, ")", l, c};
        }
        throw parse_error(std::string("unexpected character '") + ch + "'", l, c);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_, col_;

    char advance() {
        char ch = s_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }
    void skip_ws() {
        while (pos_ < s_.size() && isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
};

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars,
               const std::string& param, int line0, int col0)
        : lex_(text, line0, col0), vars_(vars), param_(param), n_((int)vars.size()) {
        cur_ = lex_.next();
    }

    MPoly parse() {
        MPoly p = expr();
        if (cur_.kind != Token::Kind::end)
            throw parse_error("unexpected token '" + cur_.text + "'", cur_.line, cur_.col);
        return p;
    }

private:
    Lexer lex_;
    Token cur_;
    const std::vector<std::string>& vars_;
    const std::string& param_;
    int n_;

    void eat() { cur_ = lex_.next(); }

    MPoly expr() {
        bool neg = false;
        if (cur_.kind == Token::Kind::minus) {
            neg = true;
            eat();
        }
        MPoly acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Kind::plus || cur_.kind == Token::Kind::minus) {
            bool minus = cur_.kind == Token::Kind::minus;
            eat();
            MPoly t = term();
            if (minus) acc -= t;
            else acc += t;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (cur_.kind == Token::Kind::star) {
            eat();
            acc = acc * factor();
        }
        return acc;
    }

    MPoly factor() {
        MPoly base = atom();
        if (cur_.kind == Token::Kind::caret) {
            eat();
            if (cur_.kind != Token::Kind::integer)
                throw parse_error("exponent must be a non-negative integer", cur_.line, cur_.col);
            long e = std::stol(cur_.text);
            eat();
            MPoly acc = MPoly::constant(n_, RatFunc(1));
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    MPoly atom() {
        switch (cur_.kind) {
            case Token::Kind::integer: {
                MPoly p = MPoly::constant(n_, RatFunc(Int(cur_.text)));
                eat();
                require_no_adjacent();
                return p;
            }
            case Token::Kind::ident: {
                std::string name = cur_.text;
                int l = cur_.line, c = cur_.col;
                eat();
                require_no_adjacent();
                if (name == param_) return MPoly::constant(n_, RatFunc::t());
                auto it = std::find(vars_.begin(), vars_.end(), name);
                if (it == vars_.end())
                    throw parse_error("unknown identifier '" + name + "'", l, c);
                return MPoly::variable(n_, (int)(it - vars_.begin()));
            }
            case Token::Kind::lparen: {
                eat();
                MPoly p = expr();
                if (cur_.kind != Token::Kind::rparen)
                    throw parse_error("expected ')'", cur_.line, cur_.col);
                eat();
                require_no_adjacent();
                return p;
            }
            default:
                throw parse_error("expected a number, identifier or '('", cur_.line, cur_.col);
        }
    }

    // implicit multiplication like "2x" or "x y" is not allowed
    void require_no_adjacent() {
        if (cur_.kind == Token::Kind::integer || cur_.kind == Token::Kind::ident ||
            cur_.kind == Token::Kind::lparen)
            throw parse_error("missing '*' before '" + cur_.text + "'", cur_.line, cur_.col);
    }
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

}  // namespace

MPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables,
                       const std::string& parameter, int line_offset, int col_offset) {
    PolyParser p(text, variables, parameter, line_offset, col_offset);
    return p.parse();
}

MPoly FamilySpec::parse_f() const {
    return parse_polynomial(f_text, variables, parameter);
}

MonomialOrder FamilySpec::monomial_order() const {
    int n = (int)variables.size();
    return order == "grlex" ? MonomialOrder::grlex(n) : MonomialOrder::grevlex(n);
}

FamilySpec parse_family(const std::string& text) {
    FamilySpec spec;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int f_line = 0, f_col = 0;
    bool have_variables = false, have_f = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value'", lineno, 1);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (seen.count(key)) throw parse_error("duplicate key '" + key + "'", lineno, 1);
        seen.insert(key);
        if (key == "variables") {
            auto vars = split_commas(value);
            if (vars.empty()) throw parse_error("empty variable list", lineno, 1);
            for (const auto& v : vars)
                if (!valid_identifier(v))
                    throw parse_error("invalid variable name '" + v + "'", lineno, 1);
            std::set<std::string> uniq(vars.begin(), vars.end());
            if (uniq.size() != vars.size())
                throw parse_error("repeated variable name", lineno, 1);
            spec.variables = vars;
            have_variables = true;
        } else if (key == "parameter") {
            if (!valid_identifier(value))
                throw parse_error("invalid parameter name '" + value + "'", lineno, 1);
            spec.parameter = value;
        } else if (key == "f") {
            spec.f_text = value;
            f_line = lineno;
            f_col = (int)(raw.find('=') + 2);
            have_f = true;
        } else if (key == "b_order") {
            try {
                spec.b_order = std::stoi(value);
            } catch (...) {
                throw parse_error("b_order must be an integer", lineno, 1);
            }
            if (spec.b_order < 2) throw parse_error("b_order must be at least 2", lineno, 1);
        } else if (key == "order") {
            if (value != "grevlex" && value != "grlex")
                throw parse_error("order must be grevlex or grlex", lineno, 1);
            spec.order = value;
        } else if (key == "samples") {
            for (const auto& s : split_commas(value)) {
                auto q = parse_rat(s);
                if (!q) throw parse_error("invalid rational sample '" + s + "'", lineno, 1);
                spec.samples.push_back(*q);
            }
        } else if (key == "checks") {
            spec.checks = split_commas(value);
            spec.checks_explicit = true;
            for (const auto& c : spec.checks) {
                bool ok = c == "mu" || c == "g-equals-e" || c == "quasihom" ||
                          c == "example3" || c == "extension-e2" ||
                          c.rfind("estim:", 0) == 0 || c.rfind("example1:", 0) == 0;
                if (!ok) throw parse_error("unknown check '" + c + "'", lineno, 1);
            }
        } else {
            throw parse_error("unknown key '" + key + "'", lineno, 1);
        }
    }
    if (!have_variables) throw parse_error("missing 'variables' key", lineno + 1, 1);
    if (!have_f) throw parse_error("missing 'f' key", lineno + 1, 1);
    for (const auto& v : spec.variables)
        if (v == spec.parameter)
            throw parse_error("parameter '" + spec.parameter + "' clashes with a variable", 1, 1);
    if (!spec.checks_explicit)
        spec.checks = {"quasihom", "g-equals-e", "mu", "estim:1"};
    // validate f now so errors carry the document position
    parse_polynomial(spec.f_text, spec.variables, spec.parameter, f_line, f_col);
    return spec;
}

std::string serialize(const FamilySpec& spec) {
    std::ostringstream os;
    os << "variables = ";
    for (size_t i = 0; i < spec.variables.size(); ++i)
        os << (i ? ", " : "") << spec.variables[i];
    os << "\n";
    os << "parameter = " << spec.parameter << "\n";
    os << "f = " << spec.f_text << "\n";
    os << "b_order = " << spec.b_order << "\n";
    os << "order = " << spec.order << "\n";
    if (!spec.samples.empty()) {
        os << "samples = ";
        for (size_t i = 0; i < spec.samples.size(); ++i)
            os << (i ? ", " : "") << rat_str(spec.samples[i]);
        os << "\n";
    }
    if (spec.checks_explicit) {
        os << "checks = ";
        for (size_t i = 0; i < spec.checks.size(); ++i) os << (i ? ", " : "") << spec.checks[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace abmod
