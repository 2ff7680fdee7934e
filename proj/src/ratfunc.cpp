#include <abmod/ratfunc.hpp>
#include <abmod/errors.hpp>

namespace abmod {

RatFunc::RatFunc(const Rat& q)
    : num_(Int(boost::multiprecision::numerator(q))),
      den_(Int(boost::multiprecision::denominator(q))) {
    canonicalize();
}

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero_error("zero denominator in Q(t)");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = ZPoly::gcd(num_, den_);
    if (!(g.degree() == 0 && g.leading() == 1)) {
        num_ = ZPoly::divexact(num_, g);
        den_ = ZPoly::divexact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw division_by_zero_error("division by zero in Q(t)");
    if (is_zero()) return RatFunc();
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of zero in Q(t)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative() const {
    if (is_zero()) return RatFunc();
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFunc::eval(const Rat& t0) const {
    Rat d = den_.eval(t0);
    if (d == 0) throw pole_error("pole of " + str() + " at t = " + rat_str(t0));
    return num_.eval(t0) / d;
}

std::optional<Rat> RatFunc::as_rational() const {
    if (!is_constant()) return std::nullopt;
    if (is_zero()) return Rat(0);
    return Rat(num_.leading(), den_.leading());
}

std::optional<int> RatFunc::t_monomial_degree() const {
    if (is_zero()) return std::nullopt;
    auto single = [](const ZPoly& p) -> std::optional<int> {
        int d = p.degree();
        for (int i = 0; i < d; ++i)
            if (p.coeff(i) != 0) return std::nullopt;
        return d;
    };
    auto dn = single(num_), dd = single(den_);
    if (!dn || !dd) return std::nullopt;
    return *dn - *dd;
}

std::string RatFunc::str() const {
    if (den_.degree() == 0 && den_.leading() == 1) return num_.str();
    std::string n = num_.str();
    bool n_multi = n.find_first_of("+-", 1) != std::string::npos;
    std::string d = den_.str();
    bool d_simple = d.find_first_of("+-*", 1) == std::string::npos && d[0] != '-';
    std::string out = n_multi ? "(" + n + ")" : n;
    out += "/";
    out += d_simple ? d : "(" + d + ")";
    return out;
}

}  // namespace abmod
