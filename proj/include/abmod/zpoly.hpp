#pragma once
#include <abmod/numbers.hpp>
#include <vector>

namespace abmod {

/// Dense integer-coefficient polynomial in the parameter t.
/// coeff(i) is the coefficient of t^i; no stored trailing zeros, zero = empty.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long v) { if (v != 0) c_.push_back(Int(v)); }
    explicit ZPoly(const Int& v) { if (v != 0) c_.push_back(v); }
    static ZPoly t() { return from_coeffs({Int(0), Int(1)}); }
    static ZPoly t_power(int k);
    static ZPoly from_coeffs(std::vector<Int> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Int coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Int(0); }
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly&) const;
    ZPoly operator-(const ZPoly&) const;
    ZPoly operator*(const ZPoly&) const;
    ZPoly operator*(const Int&) const;
    bool operator==(const ZPoly&) const = default;

    ZPoly derivative() const;
    Int content() const;  // gcd of coefficients, >= 0
    ZPoly primitive_part() const;
    Rat eval(const Rat& t0) const;

    /// Exact quotient; throws internal_error if the division is not exact.
    static ZPoly divexact(const ZPoly& a, const ZPoly& b);
    static ZPoly gcd(ZPoly a, ZPoly b);  // normalized with positive leading coefficient
    static ZPoly lcm(const ZPoly& a, const ZPoly& b);

    std::string str() const;  // descending powers, e.g. "2*t^2-8"

private:
    std::vector<Int> c_;
    void trim();
};

/// Rational roots of p, found by divisor enumeration of the trailing/leading
/// coefficients. Sets `complete=false` when the coefficients are too large to
/// enumerate divisors (roots may then be missed).
std::vector<Rat> rational_roots(const ZPoly& p, bool& complete);

}  // namespace abmod
