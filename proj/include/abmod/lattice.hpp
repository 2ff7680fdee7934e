#pragma once
#include <abmod/brieskorn.hpp>

namespace abmod {

/// Finitely generated sub-K[[b]]-module of truncated E, stored as the
/// canonical reduced row echelon form of a b-closed K-row space over the
/// coordinates (staircase monomial, b-power), columns ordered by b-power
/// ascending then staircase monomial.
struct Lattice {
    int mu = 0, N = 0;
    std::vector<KVec> rows;   // canonical RREF
    std::vector<int> pivots;  // pivot column per row
    bool includes_bN_tail = true;

    int rank() const { return (int)rows.size(); }
    bool contains(const KVec& v) const;
    bool contains(const BClass& x) const { return contains(x.coords()); }
    bool operator==(const Lattice& o) const { return mu == o.mu && N == o.N && rows == o.rows; }
};

/// Smallest b-closed K-row space containing the generators.
Lattice span_lattice(const FamilyContext& ctx, const std::vector<BClass>& gens);
Lattice full_lattice(const FamilyContext& ctx);
Lattice zero_lattice(const FamilyContext& ctx);
Lattice b_shift(const Lattice& L);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
bool is_b_closed(const Lattice& L);

/// P = {x : nabla(x) in b E}, the domain of the connection b^{-1} nabla.
Lattice compute_P(const FamilyContext& ctx);

/// True iff nabla(L) is contained in b L (checked on the echelon rows; the
/// Leibniz terms of arbitrary K-combinations land in b L automatically).
bool is_stable(const Lattice& L, const FamilyContext& ctx);

struct SaturationResult {
    Lattice G;
    int steps = 0;  // stabilization step k*
};
/// Iterates L_{k+1} = {x in L_k : nabla(x) in b L_k} from L_0 = E until stable.
SaturationResult saturate_G(const FamilyContext& ctx);

struct SaturationConfirmation {
    SaturationResult result;
    bool confirmed = false;  // low b-blocks agree with a run at truncation N+2
};
SaturationConfirmation saturate_G_confirmed(const FamilyContext& ctx);

/// M^k: image of m^k * Omega^n in E, generated by the reductions of all
/// monomial forms x^alpha dx with k <= |alpha| <= k + max staircase degree + 1.
Lattice mscript(const FamilyContext& ctx, int k);

struct KernelDirection {
    int monomial_index;
    RatFunc coefficient;  // b^{-1} nabla(m) = c(t) * m; horizontal multiples solve phi' + c phi = 0
};
/// Rank-1 nabla-invariant staircase directions inside G.
std::vector<KernelDirection> kernel_nabla_mod_b(const FamilyContext& ctx, const Lattice& G);

/// Ker(nabla) intersected with constant (rational) coordinate vectors: for
/// those the Leibniz term vanishes, so this is an exactly computable part of
/// the horizontal kernel.
std::vector<BClass> constant_kernel(const FamilyContext& ctx);

struct ExtensionCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct ExtensionReport {
    bool all_pass = false;
    std::vector<ExtensionCheck> items;
};
/// Adjoins eps = b^{-1}(x^2 y^2) to E for f = x^4 + y^4 + t x^2 y^2 and derives
/// the action of a and b^{-1} nabla on it by exact b^{-1} bookkeeping.
ExtensionReport verify_quartic_extension(const FamilyContext& ctx);

}  // namespace abmod
