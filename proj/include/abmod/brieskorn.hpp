#pragma once
#include <abmod/groebner.hpp>
#include <abmod/linalg.hpp>

namespace abmod {

/// Relative n-form g * dx_1 ^ ... ^ dx_n.
struct NForm {
    MPoly coefficient;
};

/// Element of the truncated Brieskorn module E: coordinates over the basis
/// {b^j * m_i} with m_i the staircase monomials and 0 <= j < N.
class BClass {
public:
    BClass() : mu_(0), N_(0) {}
    BClass(int mu, int N) : mu_(mu), N_(N), coords_(static_cast<size_t>(mu) * N) {}

    int mu() const { return mu_; }
    int truncation() const { return N_; }
    const RatFunc& at(int i, int j) const { return coords_[idx(i, j)]; }
    void set(int i, int j, RatFunc c) { coords_[idx(i, j)] = std::move(c); }
    void add(int i, int j, const RatFunc& c) { coords_[idx(i, j)] += c; }
    const KVec& coords() const { return coords_; }
    KVec& coords() { return coords_; }

    bool is_zero() const { return is_zero_vec(coords_); }
    bool b0_is_zero() const;
    bool operator==(const BClass&) const = default;
    /// Equality of all coordinates with b-power below `power`.
    bool equal_mod(const BClass& o, int power) const;

    BClass operator+(const BClass&) const;
    BClass operator-(const BClass&) const;
    BClass operator-() const;
    BClass scalar_mul(const RatFunc&) const;
    BClass shifted(int j) const;  // multiplication by b^j, truncating overflow
    BClass coeff_derivative() const;  // coordinate-wise d/dt

private:
    int mu_, N_;
    KVec coords_;
    size_t idx(int i, int j) const { return static_cast<size_t>(j) * mu_ + i; }
};

inline BClass operator*(const RatFunc& c, const BClass& x) { return x.scalar_mul(c); }
inline BClass operator*(long k, const BClass& x) { return x.scalar_mul(RatFunc(k)); }

/// One-parameter family f(x,t) with isolated relative singularity along the
/// origin section {x = 0}. All module data is local: when the affine critical
/// scheme has components away from the section, the Jacobian ideal is
/// inflated by a high power of m so that the working quotient is canonically
/// the local algebra at the section.
struct FamilyContext {
    MPoly f;
    int n = 0;
    int N = 8;  // b-adic truncation order
    MonomialOrder order;
    std::vector<MPoly> partials;  // d f / d x_i, all n of them (possibly zero)
    MPoly dfdt;
    Ideal jacobian;                   // the relative Jacobian ideal (nonzero partials)
    GroebnerBasis gb;                 // working basis: J, or J + m^inflation_degree
    size_t jacobian_gen_count = 0;    // leading origin generators that are partials
    std::vector<int> gen_variable;    // jacobian origin generator index -> variable index
    Staircase st;                     // local staircase
    int mu = 0;                       // local Milnor number over Q(t)
    int mu_global = 0;                // affine quotient dimension over Q(t)
    int local_exponent = 0;           // first A with m^A contained in J at the section
    int inflation_degree = 0;         // 0 when the global quotient is already local
    std::vector<BClass> nabla_mon;  // class of -df/dt * m_i
    std::vector<BClass> a_mon;      // class of f * m_i
    std::vector<Rat> bad_t;         // verified degenerate parameter values
    std::vector<ZPoly> unresolved_bad;  // candidate polynomials with no feasible root scan
    std::vector<std::string> var_names;
    long budget = 0;

    std::string monomial_str(int i) const;
};

/// Dimension of the local algebra k[x]_(x)/(I + nilpotent tail) at the origin,
/// found by stabilizing dim k[x]/(I + m^A); also reports the stabilization
/// exponent. Requires a finite affine quotient.
std::pair<long, int> local_quotient_dimension(const Ideal& I, const MonomialOrder& order,
                                              long budget, long affine_dim);

/// Groebner basis deciding membership in I * O_0 (localized at the origin):
/// the inflation I + m^M with dimension-stabilized M. Returns the plain basis
/// of I when inflate is false.
GroebnerBasis local_ideal_basis(const Ideal& I, const MonomialOrder& order, long budget,
                                bool inflate);

/// Builds the context: Jacobian Groebner basis, staircase, operator images of
/// the staircase monomials and the verified bad-t set. Throws
/// unsupported_family_error when the staircase is infinite or f is not in m.
FamilyContext make_family_context(MPoly f, int N, const MonomialOrder& order,
                                  long budget = default_spair_budget(),
                                  bool compute_bad_t = true,
                                  std::vector<std::string> var_names = {});

/// Class of g*dx in E mod b^N: repeatedly divides by the Jacobian basis and
/// converts the Jacobian part into a b-shifted divergence term.
BClass reduce(const FamilyContext& ctx, const MPoly& g);
inline BClass reduce(const FamilyContext& ctx, const NForm& w) { return reduce(ctx, w.coefficient); }

BClass monomial_class(const FamilyContext& ctx, int i);  // class of m_i
BClass zero_class(const FamilyContext& ctx);

BClass b_apply(const BClass& x);
BClass a_apply(const FamilyContext& ctx, const BClass& x);
/// The connection on E; K-additive, satisfies nabla(phi x) = phi nabla(x) + phi' b x.
BClass nabla(const FamilyContext& ctx, const BClass& x);
/// Partial inverse of b; throws not_in_image_error when the b^0 part is nonzero.
/// The result is meaningful mod b^{N-1} (its top block is set to zero).
BClass b_inverse(const BClass& x);
/// b^{-1} nabla on P; throws not_in_p_error when nabla(x) has nonzero b^0 part.
BClass b_inv_nabla(const FamilyContext& ctx, const BClass& x);

/// Multiplication by phi(b) = sum phi[l] b^l.
BClass mul_bpoly(const BClass& x, const std::vector<RatFunc>& phi);

enum class Op { a, nabla };
/// Coordinate matrix (rows out, columns in) of the K-linear part of the
/// operator on the basis {b^j m_i}; for nabla the phi' Leibniz term is the
/// caller's responsibility.
std::vector<KVec> operator_matrix(const FamilyContext& ctx, Op op);

/// Coefficient of d_/f ^ xi for xi = P dx + Q dy (n = 2).
MPoly wedge_df_n2(const FamilyContext& ctx, const MPoly& P, const MPoly& Q);
/// Coefficient of d_/xi for xi = P dx + Q dy (n = 2).
MPoly exterior_d_n2(const MPoly& P, const MPoly& Q);
/// Coefficient of d_/f ^ d_/eta, eta a function (n = 2).
MPoly wedge_df_deta_n2(const FamilyContext& ctx, const MPoly& eta);
/// Coefficient of d_/f ^ d_/eta, eta = e1 dx + e2 dy + e3 dz (n = 3).
MPoly wedge_df_deta_n3(const FamilyContext& ctx, const MPoly& e1, const MPoly& e2, const MPoly& e3);

std::string class_str(const FamilyContext& ctx, const BClass& x);

}  // namespace abmod
