#pragma once
#include <abmod/lattice.hpp>

namespace abmod {

/// Exact polynomial identity target == sum_i cofactors[i] * generators[i].
struct Certificate {
    std::string label;
    MPoly target;
    std::vector<MPoly> cofactors;
    std::vector<MPoly> generators;
    bool re_expands() const;
};

struct CriterionReport {
    std::string name;
    bool holds = false;
    std::vector<Certificate> certificates;
    std::vector<Rat> bad_t;  // candidate t-values where certificates may fail to specialize
    std::vector<std::pair<std::string, std::string>> details;

    void detail(std::string k, std::string v) { details.emplace_back(std::move(k), std::move(v)); }
};

/// Stability criterion: m^k df/dt inside m^{k+1} J_/(f); when it holds the
/// lattice M^k is checked to be b^{-1}nabla-stable.
CriterionReport estim_criterion(const FamilyContext& ctx, int k);

/// For f = P + tQ with t-free P, Q: tests the two hypotheses
/// m^{k+1} J(Q) in m^{k+1} J(P) and Q in m J(Q), and independently the
/// conclusion m^k df/dt in m^{k+1} J_/(f); holds = the implication.
CriterionReport example1_lemma(const MPoly& P, const MPoly& Q, int k,
                               const MonomialOrder& order,
                               long budget = default_spair_budget());

/// Membership df/dt in J_/(f) (equivalent to G = E); optionally cross-checks
/// the saturation result.
CriterionReport g_equals_e_test(const FamilyContext& ctx, bool crosscheck_saturation = false);

/// Generic Milnor number versus specialized fibers at the samples; samples in
/// bad_t (or at poles of f) are skipped with a note. Also validates that the
/// critical value vanishes along the family (f in rad J_/(f)).
CriterionReport mu_constancy_probe(const FamilyContext& ctx, const std::vector<Rat>& samples);

/// Rational weights (w_1..w_n, w_t) with W f = f, or nullopt.
std::optional<std::vector<Rat>> quasihomogeneous_detect(const MPoly& f);

/// Report wrapper: detection plus, for w_t = 0, the spectral identity
/// a(m) = (sum w_i (m_i + 1)) b(m) on every staircase monomial.
CriterionReport quasihomogeneous_report(const FamilyContext& ctx);

/// The displayed inclusions for f = x^p + y^q + z^r + t x y z over K.
CriterionReport example3_relations(const FamilyContext& ctx, int p, int q, int r);

}  // namespace abmod
