#pragma once
#include <abmod/ratfunc.hpp>
#include <map>
#include <span>
#include <vector>

namespace abmod {

using Exponents = std::vector<int>;

int total_degree(const Exponents& a);
bool divides(const Exponents& a, const Exponents& b);  // a | b componentwise
Exponents exp_mul(const Exponents& a, const Exponents& b);
Exponents exp_div(const Exponents& a, const Exponents& b);  // assumes b | a
Exponents exp_lcm(const Exponents& a, const Exponents& b);
bool exp_coprime(const Exponents& a, const Exponents& b);
Rat weighted_degree(const Exponents& m, std::span<const Rat> w);

/// Total order on exponent vectors refining total degree.
struct MonomialOrder {
    enum class Kind { grevlex, grlex };
    Kind kind = Kind::grevlex;
    std::vector<int> precedence;  // variable indices, most significant first

    static MonomialOrder grevlex(int n);
    static MonomialOrder grlex(int n);
    MonomialOrder with_precedence(std::vector<int> prec) const;

    int compare(const Exponents& a, const Exponents& b) const;  // <0, 0, >0
    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }
    bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }
    std::string str() const;
};

/// Sparse multivariate polynomial in x_1..x_n with coefficients in Q(t).
/// Terms are stored under a fixed lexicographic key; order-dependent
/// operations take the active MonomialOrder explicitly.
class MPoly {
public:
    MPoly() : n_(0) {}
    explicit MPoly(int nvars) : n_(nvars) {}
    static MPoly constant(int nvars, RatFunc c);
    static MPoly variable(int nvars, int i);
    static MPoly monomial(int nvars, Exponents e, RatFunc c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::map<Exponents, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(const Exponents& e) const;
    int degree() const;  // total degree, -1 for zero

    MPoly operator-() const;
    MPoly operator+(const MPoly&) const;
    MPoly operator-(const MPoly&) const;
    MPoly operator*(const MPoly&) const;
    MPoly& operator+=(const MPoly& o) { add_in_place(o, RatFunc(1)); return *this; }
    MPoly& operator-=(const MPoly& o) { add_in_place(o, RatFunc(-1)); return *this; }
    bool operator==(const MPoly&) const = default;

    MPoly scalar_mul(const RatFunc& c) const;
    MPoly scalar_div(const RatFunc& c) const;  // throws division_by_zero_error
    MPoly mul_monomial(const Exponents& e, const RatFunc& c) const;
    void add_in_place(const MPoly& o, const RatFunc& scale);
    void add_term(const Exponents& e, const RatFunc& c);

    MPoly partial_derivative(int i) const;
    MPoly t_derivative() const;
    /// Evaluates every coefficient at t = t0; throws pole_error naming the
    /// offending coefficient.
    MPoly specialize_t(const Rat& t0) const;

    std::pair<Exponents, RatFunc> leading_term(const MonomialOrder& ord) const;
    Exponents leading_monomial(const MonomialOrder& ord) const;

    std::string str(const std::vector<std::string>& vars) const;

private:
    int n_;
    std::map<Exponents, RatFunc> terms_;
};

inline MPoly operator*(const RatFunc& c, const MPoly& p) { return p.scalar_mul(c); }
inline MPoly operator*(long k, const MPoly& p) { return p.scalar_mul(RatFunc(k)); }

std::vector<std::string> default_var_names(int n);

}  // namespace abmod
