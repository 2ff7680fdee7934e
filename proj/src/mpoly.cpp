#include <abmod/mpoly.hpp>
#include <abmod/errors.hpp>
#include <numeric>
#include <sstream>

namespace abmod {

int total_degree(const Exponents& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_mul(const Exponents& a, const Exponents& b) {
    Exponents r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Exponents exp_div(const Exponents& a, const Exponents& b) {
    Exponents r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Rat weighted_degree(const Exponents& m, std::span<const Rat> w) {
    Rat acc(0);
    for (size_t i = 0; i < m.size(); ++i) acc += Rat(m[i]) * w[i];
    return acc;
}

MonomialOrder MonomialOrder::grevlex(int n) {
    MonomialOrder o;
    o.kind = Kind::grevlex;
    o.precedence.resize(n);
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::grlex(int n) {
    MonomialOrder o = grevlex(n);
    o.kind = Kind::grlex;
    return o;
}

MonomialOrder MonomialOrder::with_precedence(std::vector<int> prec) const {
    MonomialOrder o(*this);
    o.precedence = std::move(prec);
    return o;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    if (kind == Kind::grlex) {
        for (int v : precedence) {
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        return 0;
    }
    // grevlex: the rightmost (least significant) differing exponent decides,
    // with the smaller exponent the greater monomial
    for (auto it = precedence.rbegin(); it != precedence.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
}

std::string MonomialOrder::str() const {
    return kind == Kind::grevlex ? "grevlex" : "grlex";
}

MPoly MPoly::constant(int nvars, RatFunc c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), RatFunc(1));
}

MPoly MPoly::monomial(int nvars, Exponents e, RatFunc c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

RatFunc MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc() : it->second;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

void MPoly::add_term(const Exponents& e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::add_in_place(const MPoly& o, const RatFunc& scale) {
    if (scale.is_zero()) return;
    for (const auto& [e, c] : o.terms_) add_term(e, c * scale);
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r(*this);
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r(*this);
    r -= o;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(n_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exp_mul(e1, e2), c1 * c2);
    return r;
}

MPoly MPoly::scalar_mul(const RatFunc& c) const {
    MPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MPoly MPoly::scalar_div(const RatFunc& c) const {
    if (c.is_zero()) throw division_by_zero_error("polynomial division by zero scalar");
    return scalar_mul(c.inverse());
}

MPoly MPoly::mul_monomial(const Exponents& e, const RatFunc& c) const {
    MPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e1, c1] : terms_) r.terms_.emplace(exp_mul(e1, e), c1 * c);
    return r;
}

MPoly MPoly::partial_derivative(int i) const {
    MPoly r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d(e);
        d[i] -= 1;
        r.add_term(d, c * RatFunc(e[i]));
    }
    return r;
}

MPoly MPoly::t_derivative() const {
    MPoly r(n_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.derivative());
    return r;
}

MPoly MPoly::specialize_t(const Rat& t0) const {
    MPoly r(n_);
    for (const auto& [e, c] : terms_) {
        try {
            r.add_term(e, RatFunc(c.eval(t0)));
        } catch (const pole_error&) {
            throw pole_error("coefficient " + c.str() + " of monomial #" +
                             std::to_string(total_degree(e)) + " has a pole at t = " + rat_str(t0));
        }
    }
    return r;
}

std::pair<Exponents, RatFunc> MPoly::leading_term(const MonomialOrder& ord) const {
    if (is_zero()) throw internal_error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Exponents MPoly::leading_monomial(const MonomialOrder& ord) const {
    return leading_term(ord).first;
}

std::vector<std::string> default_var_names(int n) {
    static const char* xyz[] = {"x", "y", "z", "w"};
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i)
        v.push_back(n <= 4 ? xyz[i] : "x" + std::to_string(i + 1));
    return v;
}

std::string MPoly::str(const std::vector<std::string>& vars) const {
    if (is_zero()) return "0";
    // print in descending degree, then descending lex key, for readability
    std::vector<const std::pair<const Exponents, RatFunc>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        int da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [e, c] = *t;
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (neg) cs = cs.substr(1);
        bool multi = cs.find_first_of("+-", 1) != std::string::npos;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << (multi ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << mono;
        } else {
            os << (multi ? "(" + cs + ")" : cs) << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace abmod
