#pragma once
#include <abmod/zpoly.hpp>
#include <optional>

namespace abmod {

/// Element of the scalar field K = Q(t): a fraction of integer-coefficient
/// polynomials in t, kept in canonical form (gcd(num,den) = 1, den has
/// positive leading coefficient, zero is 0/1).
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}
    explicit RatFunc(const Int& v) : num_(v), den_(1) {}
    explicit RatFunc(const Rat& q);
    explicit RatFunc(ZPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(ZPoly num, ZPoly den);
    static RatFunc t() { return RatFunc(ZPoly::t()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.degree() == 0 && num_.leading() == 1 && den_.degree() == 0 && den_.leading() == 1; }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc&) const;
    RatFunc operator-(const RatFunc&) const;
    RatFunc operator*(const RatFunc&) const;
    RatFunc operator/(const RatFunc&) const;  // throws division_by_zero_error
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    bool operator==(const RatFunc&) const = default;

    RatFunc inverse() const;
    RatFunc derivative() const;  // d/dt
    Rat eval(const Rat& t0) const;  // throws pole_error
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    std::optional<Rat> as_rational() const;
    /// If this = lambda * t^d (d may be negative), returns d.
    std::optional<int> t_monomial_degree() const;

    std::string str() const;  // canonical "num/den"

private:
    ZPoly num_, den_;
    void canonicalize();
};

inline RatFunc operator*(long k, const RatFunc& f) { return RatFunc(k) * f; }

}  // namespace abmod
