#pragma once
#include <abmod/mpoly.hpp>
#include <optional>

namespace abmod {

struct Ideal {
    int n = 0;
    std::vector<MPoly> generators;  // nonzero
};

Ideal make_ideal(std::vector<MPoly> gens);
/// Ideal generated by all monomials of total degree k in n variables.
Ideal maximal_ideal_power(int n, int k);
Ideal product_ideal(const Ideal& a, const Ideal& b);

/// Monomials outside the leading-term ideal, sorted ascending in the order.
struct Staircase {
    std::vector<Exponents> monomials;
    std::map<Exponents, int> index;
    size_t size() const { return monomials.size(); }
    int max_degree() const;
};

struct DivisionResult {
    MPoly normal_form;
    std::vector<MPoly> cofactors;  // one per basis element
};

class GroebnerBasis {
public:
    int n = 0;
    MonomialOrder order;
    Ideal origin;
    std::vector<MPoly> basis;                // reduced: monic, interreduced, sorted by LM
    std::vector<std::vector<MPoly>> reps;    // basis[i] == sum_j reps[i][j] * origin.generators[j]
    std::vector<ZPoly> suspicious;           // primitive parts of inverted/denominator polynomials in t

    /// p == normal_form + sum_i cofactors[i] * basis[i]; lowest-index reducer wins ties.
    DivisionResult divide(const MPoly& p) const;
    MPoly normal_form(const MPoly& p) const { return divide(p).normal_form; }
    /// Cofactors of the division re-expressed against origin.generators.
    std::vector<MPoly> cofactors_to_origin(const DivisionResult& d) const;
};

long default_spair_budget();  // ABMOD_SPAIR_BUDGET or 20000

/// Buchberger with normal selection and both elimination criteria; cofactor
/// representations are always tracked. Throws budget_exceeded_error past the
/// S-pair budget.
GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order,
                       long budget = default_spair_budget());

struct MembershipResult {
    bool member = false;
    std::vector<MPoly> certificate;  // p == sum_j certificate[j] * generators[j] when member
};
MembershipResult membership(const MPoly& p, const GroebnerBasis& gb);

/// True iff every generator of A reduces to 0 modulo gbB.
bool ideal_inclusion(const Ideal& A, const GroebnerBasis& gbB);

std::optional<Staircase> staircase(const GroebnerBasis& gb);  // nullopt when infinite
std::optional<long> quotient_dimension(const GroebnerBasis& gb);

}  // namespace abmod
