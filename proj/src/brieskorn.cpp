#include <abmod/brieskorn.hpp>
#include <abmod/errors.hpp>
#include <sstream>

namespace abmod {

bool BClass::b0_is_zero() const {
    for (int i = 0; i < mu_; ++i)
        if (!at(i, 0).is_zero()) return false;
    return true;
}

bool BClass::equal_mod(const BClass& o, int power) const {
    for (int j = 0; j < std::min(power, N_); ++j)
        for (int i = 0; i < mu_; ++i)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

BClass BClass::operator+(const BClass& o) const {
    BClass r(*this);
    for (size_t k = 0; k < coords_.size(); ++k)
        if (!o.coords_[k].is_zero()) r.coords_[k] += o.coords_[k];
    return r;
}

BClass BClass::operator-(const BClass& o) const {
    BClass r(*this);
    for (size_t k = 0; k < coords_.size(); ++k)
        if (!o.coords_[k].is_zero()) r.coords_[k] -= o.coords_[k];
    return r;
}

BClass BClass::operator-() const { return scalar_mul(RatFunc(-1)); }

BClass BClass::scalar_mul(const RatFunc& c) const {
    BClass r(mu_, N_);
    if (c.is_zero()) return r;
    for (size_t k = 0; k < coords_.size(); ++k)
        if (!coords_[k].is_zero()) r.coords_[k] = coords_[k] * c;
    return r;
}

BClass BClass::shifted(int s) const {
    BClass r(mu_, N_);
    for (int j = 0; j + s < N_; ++j)
        for (int i = 0; i < mu_; ++i)
            if (!at(i, j).is_zero()) r.set(i, j + s, at(i, j));
    return r;
}

BClass BClass::coeff_derivative() const {
    BClass r(mu_, N_);
    for (size_t k = 0; k < coords_.size(); ++k)
        if (!coords_[k].is_zero()) r.coords_[k] = coords_[k].derivative();
    return r;
}

std::string FamilyContext::monomial_str(int i) const {
    const Exponents& e = st.monomials[i];
    if (total_degree(e) == 0) return "1";
    std::string s;
    for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_names[v];
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

namespace {

Ideal with_m_power(const Ideal& I, int A) {
    Ideal out = I;
    for (const auto& g : maximal_ideal_power(I.n, A).generators) out.generators.push_back(g);
    return out;
}

}  // namespace

std::pair<long, int> local_quotient_dimension(const Ideal& I, const MonomialOrder& order,
                                              long budget, long affine_dim) {
    long prev = -1;
    for (int A = 1; A <= affine_dim + 2; ++A) {
        auto gbA = groebner(with_m_power(I, A), order, budget);
        auto d = quotient_dimension(gbA);
        if (!d) throw internal_error("inflated quotient must be finite");
        if (*d == prev) return {prev, A - 1};
        prev = *d;
    }
    throw internal_error("local dimension failed to stabilize");
}

GroebnerBasis local_ideal_basis(const Ideal& I, const MonomialOrder& order, long budget,
                                bool inflate) {
    if (!inflate) return groebner(I, order, budget);
    long prev = -1;
    const int cap = 64;
    for (int A = 1; A <= cap; ++A) {
        auto gbA = groebner(with_m_power(I, A), order, budget);
        auto d = quotient_dimension(gbA);
        if (!d) throw internal_error("inflated quotient must be finite");
        if (*d == prev) return groebner(with_m_power(I, A - 1), order, budget);
        prev = *d;
    }
    throw unsupported_family_error("local quotient failed to stabilize: not supported");
}

namespace {

// local Milnor number of a specialized fiber; nullopt when not isolated at the
// origin (dimension exceeds the affine bound or the affine quotient is infinite)
std::optional<long> specialized_local_mu(const MPoly& f0, const MonomialOrder& order,
                                         long budget) {
    if (f0.is_zero()) return std::nullopt;
    std::vector<MPoly> parts;
    for (int i = 0; i < f0.nvars(); ++i) {
        MPoly p = f0.partial_derivative(i);
        if (!p.is_zero()) parts.push_back(p);
    }
    Ideal J = make_ideal(parts);
    if (J.generators.empty()) return std::nullopt;
    auto gb = groebner(J, order, budget);
    auto glob = quotient_dimension(gb);
    if (!glob) return std::nullopt;
    return local_quotient_dimension(J, order, budget, *glob).first;
}

// candidate bad values confirmed by specializing the family
std::vector<Rat> verify_bad_candidates(const FamilyContext& ctx, std::vector<Rat> candidates) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Rat> bad;
    for (const auto& r : candidates) {
        bool is_bad = false;
        try {
            MPoly fr = ctx.f.specialize_t(r);
            auto mu = specialized_local_mu(fr, ctx.order, ctx.budget);
            if (!mu || *mu != ctx.mu) is_bad = true;
        } catch (const pole_error&) {
            is_bad = true;
        }
        if (is_bad) bad.push_back(r);
    }
    return bad;
}

}  // namespace

FamilyContext make_family_context(MPoly f, int N, const MonomialOrder& order, long budget,
                                  bool compute_bad_t, std::vector<std::string> var_names) {
    FamilyContext ctx;
    ctx.f = std::move(f);
    ctx.n = ctx.f.nvars();
    ctx.N = N;
    ctx.order = order;
    ctx.budget = budget;
    ctx.var_names = var_names.empty() ? default_var_names(ctx.n) : std::move(var_names);
    if (ctx.f.is_zero()) throw unsupported_family_error("f is zero");
    if (N < 1) throw unsupported_family_error("truncation order must be at least 1");
    for (const auto& [e, c] : ctx.f.terms())
        if (total_degree(e) == 0)
            throw unsupported_family_error(
                "f has a term independent of x: the singular fiber does not pass through the origin");

    for (int i = 0; i < ctx.n; ++i) ctx.partials.push_back(ctx.f.partial_derivative(i));
    ctx.dfdt = ctx.f.t_derivative();

    std::vector<MPoly> gens;
    std::vector<int> gen_var;
    for (int i = 0; i < ctx.n; ++i) {
        if (ctx.partials[i].is_zero()) continue;
        gens.push_back(ctx.partials[i]);
        gen_var.push_back(i);
    }
    ctx.jacobian = make_ideal(gens);
    if (ctx.jacobian.generators.empty())
        throw unsupported_family_error("all relative partials vanish");
    ctx.jacobian.n = ctx.n;

    GroebnerBasis gb_global = groebner(ctx.jacobian, order, budget);
    auto st_global = staircase(gb_global);
    if (!st_global)
        throw unsupported_family_error(
            "infinite staircase: the relative critical scheme is not finite over Q(t)");
    ctx.mu_global = (int)st_global->size();

    auto [mu_loc, m0] = local_quotient_dimension(ctx.jacobian, order, budget, ctx.mu_global);
    ctx.mu = (int)mu_loc;
    ctx.local_exponent = m0;

    if (ctx.mu == ctx.mu_global) {
        ctx.gb = std::move(gb_global);
        ctx.st = std::move(*st_global);
        ctx.jacobian_gen_count = ctx.jacobian.generators.size();
        ctx.gen_variable = gen_var;
    } else {
        // inflate so that every dropped m^A tail of the b-reduction lies in b^N E:
        // one b-step costs at most m0+1 powers of m
        ctx.inflation_degree = N * (m0 + 1);
        ctx.gb = groebner(with_m_power(ctx.jacobian, ctx.inflation_degree), order, budget);
        auto st = staircase(ctx.gb);
        if (!st || (int)st->size() != ctx.mu)
            throw internal_error("inflated staircase does not match the local dimension");
        ctx.st = std::move(*st);
        ctx.jacobian_gen_count = ctx.jacobian.generators.size();
        ctx.gen_variable = gen_var;
    }

    for (int i = 0; i < ctx.mu; ++i) {
        MPoly m = MPoly::monomial(ctx.n, ctx.st.monomials[i], RatFunc(1));
        ctx.nabla_mon.push_back(reduce(ctx, -(ctx.dfdt * m)));
        ctx.a_mon.push_back(reduce(ctx, ctx.f * m));
    }

    if (compute_bad_t) {
        std::vector<Rat> candidates;
        auto add_roots = [&](const ZPoly& p) {
            bool complete = true;
            for (const auto& r : rational_roots(p, complete)) candidates.push_back(r);
            if (!complete) ctx.unresolved_bad.push_back(p);
        };
        for (const auto& p : ctx.gb.suspicious) add_roots(p);
        for (const auto& p : gb_global.suspicious) add_roots(p);
        for (const auto& [e, c] : ctx.f.terms()) {
            add_roots(c.den());
        }
        ctx.bad_t = verify_bad_candidates(ctx, std::move(candidates));
    }
    return ctx;
}

BClass zero_class(const FamilyContext& ctx) { return BClass(ctx.mu, ctx.N); }

BClass monomial_class(const FamilyContext& ctx, int i) {
    BClass r(ctx.mu, ctx.N);
    r.set(i, 0, RatFunc(1));
    return r;
}

BClass reduce(const FamilyContext& ctx, const MPoly& g) {
    BClass out(ctx.mu, ctx.N);
    MPoly cur = g;
    int depth = 0;
    while (!cur.is_zero()) {
        if (depth >= ctx.N) break;  // tail lies in b^N E
        if (depth > ctx.N + 2) throw internal_error("reduction recursion exceeded cap");
        DivisionResult d = ctx.gb.divide(cur);
        for (const auto& [e, c] : d.normal_form.terms()) {
            auto it = ctx.st.index.find(e);
            if (it == ctx.st.index.end())
                throw internal_error("normal form outside the staircase");
            out.add(it->second, depth, c);
        }
        std::vector<MPoly> h = ctx.gb.cofactors_to_origin(d);
        MPoly div(ctx.n);
        for (size_t k = 0; k < ctx.jacobian_gen_count; ++k)
            div += h[k].partial_derivative(ctx.gen_variable[k]);
        // cofactors of the inflation monomials span a class in m^(N(m0+1)) Omega,
        // which lies in b^N E and is dropped
        cur = std::move(div);
        ++depth;
    }
    return out;
}

BClass b_apply(const BClass& x) { return x.shifted(1); }

BClass a_apply(const FamilyContext& ctx, const BClass& x) {
    // a(b^j m) = b^j a(m) + j b^{j+1} m, from a b - b a = b^2
    BClass out(ctx.mu, ctx.N);
    for (int j = 0; j < x.truncation(); ++j)
        for (int i = 0; i < x.mu(); ++i) {
            const RatFunc& c = x.at(i, j);
            if (c.is_zero()) continue;
            out = out + ctx.a_mon[i].shifted(j).scalar_mul(c);
            if (j > 0 && j + 1 < x.truncation()) out.add(i, j + 1, c * RatFunc(j));
        }
    return out;
}

BClass nabla(const FamilyContext& ctx, const BClass& x) {
    // nabla(c b^j m) = c b^j nabla(m) + c' b^{j+1} m
    BClass out = b_apply(x.coeff_derivative());
    for (int j = 0; j < x.truncation(); ++j)
        for (int i = 0; i < x.mu(); ++i) {
            const RatFunc& c = x.at(i, j);
            if (c.is_zero()) continue;
            out = out + ctx.nabla_mon[i].shifted(j).scalar_mul(c);
        }
    return out;
}

BClass b_inverse(const BClass& x) {
    if (!x.b0_is_zero())
        throw not_in_image_error("class is not in the image of b (nonzero b^0 part)");
    BClass r(x.mu(), x.truncation());
    for (int j = 1; j < x.truncation(); ++j)
        for (int i = 0; i < x.mu(); ++i)
            if (!x.at(i, j).is_zero()) r.set(i, j - 1, x.at(i, j));
    return r;
}

BClass b_inv_nabla(const FamilyContext& ctx, const BClass& x) {
    BClass nx = nabla(ctx, x);
    if (!nx.b0_is_zero())
        throw not_in_p_error("class is not in P: nabla(x) has nonzero b^0 part");
    return b_inverse(nx);
}

BClass mul_bpoly(const BClass& x, const std::vector<RatFunc>& phi) {
    BClass out(x.mu(), x.truncation());
    for (size_t l = 0; l < phi.size(); ++l)
        if (!phi[l].is_zero()) out = out + x.shifted((int)l).scalar_mul(phi[l]);
    return out;
}

std::vector<KVec> operator_matrix(const FamilyContext& ctx, Op op) {
    const int dim = ctx.mu * ctx.N;
    std::vector<KVec> M(dim, KVec(dim));
    for (int j = 0; j < ctx.N; ++j)
        for (int i = 0; i < ctx.mu; ++i) {
            BClass e(ctx.mu, ctx.N);
            e.set(i, j, RatFunc(1));
            BClass img = (op == Op::a) ? a_apply(ctx, e) : nabla(ctx, e);
            int col = j * ctx.mu + i;
            for (int r = 0; r < dim; ++r) M[r][col] = img.coords()[r];
        }
    return M;
}

MPoly wedge_df_n2(const FamilyContext& ctx, const MPoly& P, const MPoly& Q) {
    return ctx.partials[0] * Q - ctx.partials[1] * P;
}

MPoly exterior_d_n2(const MPoly& P, const MPoly& Q) {
    return Q.partial_derivative(0) - P.partial_derivative(1);
}

MPoly wedge_df_deta_n2(const FamilyContext& ctx, const MPoly& eta) {
    return wedge_df_n2(ctx, eta.partial_derivative(0), eta.partial_derivative(1));
}

MPoly wedge_df_deta_n3(const FamilyContext& ctx, const MPoly& e1, const MPoly& e2,
                       const MPoly& e3) {
    auto d = [&](const MPoly& p, int v) { return p.partial_derivative(v); };
    return ctx.partials[0] * (d(e3, 1) - d(e2, 2)) - ctx.partials[1] * (d(e3, 0) - d(e1, 2)) +
           ctx.partials[2] * (d(e2, 0) - d(e1, 1));
}

std::string class_str(const FamilyContext& ctx, const BClass& x) {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < x.truncation(); ++j)
        for (int i = 0; i < x.mu(); ++i) {
            const RatFunc& c = x.at(i, j);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << c.str() << ")*[" << ctx.monomial_str(i) << "]";
            if (j > 0) os << "*b^" << j;
            first = false;
        }
    if (first) os << "0";
    return os.str();
}

}  // namespace abmod
