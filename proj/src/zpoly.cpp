#include <abmod/zpoly.hpp>
#include <abmod/errors.hpp>
#include <algorithm>
#include <sstream>

namespace abmod {

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::string num, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    } else {
        num = s;
    }
    auto is_int = [](const std::string& v) {
        if (v.empty()) return false;
        size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(v[i]))) return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    Rat q(Int(num), d);
    return q;
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::t_power(int k) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = 1;
    return from_coeffs(std::move(c));
}

ZPoly ZPoly::from_coeffs(std::vector<Int> coeffs) {
    ZPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

const Int& ZPoly::leading() const {
    static const Int zero(0);
    return c_.empty() ? zero : c_.back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return from_coeffs(std::move(c));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return from_coeffs(std::move(c));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return from_coeffs(std::move(c));
}

ZPoly ZPoly::operator*(const Int& k) const {
    if (k == 0) return ZPoly();
    ZPoly r(*this);
    for (auto& v : r.c_) v *= k;
    return r;
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return ZPoly();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(i);
    return from_coeffs(std::move(c));
}

Int ZPoly::content() const {
    Int g(0);
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return g < 0 ? Int(-g) : g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    Int g = content();
    ZPoly r(*this);
    for (auto& v : r.c_) v /= g;
    return r;
}

Rat ZPoly::eval(const Rat& t0) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + Rat(*it);
    return acc;
}

ZPoly ZPoly::divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw internal_error("ZPoly::divexact by zero");
    if (a.is_zero()) return ZPoly();
    // long division over Q, then check integrality and exactness
    int da = a.degree(), db = b.degree();
    if (da < db) throw internal_error("ZPoly::divexact: not exact (degree)");
    std::vector<Rat> rem(da + 1), q(da - db + 1, Rat(0));
    for (int i = 0; i <= da; ++i) rem[i] = Rat(a.coeff(i));
    Rat lb(b.leading());
    for (int k = da - db; k >= 0; --k) {
        Rat c = rem[k + db] / lb;
        q[k] = c;
        if (c != 0)
            for (int j = 0; j <= db; ++j) rem[k + j] -= c * Rat(b.coeff(j));
    }
    for (int i = 0; i < db; ++i)
        if (rem[i] != 0) throw internal_error("ZPoly::divexact: not exact (remainder)");
    std::vector<Int> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (boost::multiprecision::denominator(q[i]) != 1)
            throw internal_error("ZPoly::divexact: non-integer quotient");
        qi[i] = boost::multiprecision::numerator(q[i]);
    }
    return from_coeffs(std::move(qi));
}

namespace {
// pseudo-remainder; the caller takes primitive parts so the scaling factor is irrelevant
ZPoly prem(ZPoly a, const ZPoly& b) {
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        Int la = a.leading();
        ZPoly sb = (b * la) * ZPoly::t_power(shift);
        a = a * lb - sb;
    }
    return a;
}
}  // namespace

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        ZPoly r = a.leading() < 0 ? -a : a;
        return r;
    }
    Int cg = boost::multiprecision::gcd(a.content(), b.content());
    ZPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        ZPoly R = prem(A, B);
        A = B;
        B = R.is_zero() ? ZPoly() : R.primitive_part();
    }
    ZPoly g = A.primitive_part() * cg;
    if (g.leading() < 0) g = -g;
    return g;
}

ZPoly ZPoly::lcm(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    ZPoly g = gcd(a, b);
    ZPoly l = divexact(a * b, g);
    if (l.leading() < 0) l = -l;
    return l;
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Int c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        Int ac = c < 0 ? Int(-c) : c;
        if (i == 0) {
            os << ac.str();
        } else {
            if (ac != 1) os << ac.str() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {
// divisors of |v| when it fits the enumeration cap; empty result means "too big"
std::vector<Int> small_divisors(Int v) {
    if (v < 0) v = -v;
    std::vector<Int> out;
    const Int cap = Int("1000000000000");  // trial division up to 1e6
    if (v == 0 || v > cap) return out;
    unsigned long long n = v.convert_to<unsigned long long>();
    for (unsigned long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(Int(d));
            out.push_back(Int(n / d));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}
}  // namespace

std::vector<Rat> rational_roots(const ZPoly& p, bool& complete) {
    complete = true;
    std::vector<Rat> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    // strip t^k factor
    int k = 0;
    while (p.coeff(k) == 0) ++k;
    if (k > 0) roots.push_back(Rat(0));
    std::vector<Int> c;
    for (int i = k; i <= p.degree(); ++i) c.push_back(p.coeff(i));
    ZPoly q = ZPoly::from_coeffs(c);
    if (q.degree() == 0) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    auto nums = small_divisors(q.coeff(0));
    auto dens = small_divisors(q.leading());
    if (nums.empty() || dens.empty()) {
        complete = false;
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    for (const auto& a : nums)
        for (const auto& b : dens)
            for (int sign = -1; sign <= 1; sign += 2) {
                Rat cand(a * sign, b);
                if (q.eval(cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace abmod
