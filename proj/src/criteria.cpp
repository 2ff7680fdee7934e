#include <abmod/criteria.hpp>
#include <abmod/errors.hpp>
#include <sstream>

namespace abmod {

bool Certificate::re_expands() const {
    MPoly acc(target.nvars());
    for (size_t i = 0; i < cofactors.size(); ++i) acc += cofactors[i] * generators[i];
    return acc == target;
}

namespace {

void collect_cert_bad_t(const std::vector<Certificate>& certs, std::vector<Rat>& out) {
    for (const auto& c : certs)
        for (const auto& h : c.cofactors)
            for (const auto& [e, v] : h.terms()) {
                bool complete = true;
                for (const auto& r : rational_roots(v.den(), complete)) out.push_back(r);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

struct InclusionOutcome {
    bool holds = true;
    std::vector<Certificate> certs;
    std::vector<std::string> failing;
};

InclusionOutcome inclusion_with_certificates(const Ideal& A, const GroebnerBasis& gbB,
                                             const std::string& label,
                                             const std::vector<std::string>& vars) {
    InclusionOutcome out;
    int idx = 0;
    for (const auto& g : A.generators) {
        MembershipResult m = membership(g, gbB);
        if (!m.member) {
            out.holds = false;
            out.failing.push_back(g.str(vars));
        } else {
            Certificate c;
            c.label = label + "[" + std::to_string(idx) + "]";
            c.target = g;
            c.cofactors = m.certificate;
            c.generators = gbB.origin.generators;
            out.certs.push_back(std::move(c));
        }
        ++idx;
    }
    return out;
}

Ideal jacobian_ideal(const MPoly& f) {
    std::vector<MPoly> gens;
    for (int i = 0; i < f.nvars(); ++i) gens.push_back(f.partial_derivative(i));
    return make_ideal(std::move(gens));
}

}  // namespace

CriterionReport estim_criterion(const FamilyContext& ctx, int k) {
    if (k < 0) throw error("estim criterion requires k >= 0");
    CriterionReport rep;
    rep.name = "estim_k" + std::to_string(k);
    Ideal dfdt_ideal = make_ideal({ctx.dfdt});
    Ideal A = k == 0 ? dfdt_ideal : product_ideal(maximal_ideal_power(ctx.n, k), dfdt_ideal);
    Ideal J;
    J.n = ctx.n;
    J.generators = ctx.gb.origin.generators;
    Ideal B = product_ideal(maximal_ideal_power(ctx.n, k + 1), J);
    GroebnerBasis gbB = groebner(B, ctx.order, ctx.budget);
    auto inc = inclusion_with_certificates(A, gbB, "m^k*df/dt in m^(k+1)*J", ctx.var_names);
    rep.holds = inc.holds;
    rep.certificates = std::move(inc.certs);
    for (const auto& fgen : inc.failing) rep.detail("not_in_ideal", fgen);
    if (rep.holds) {
        bool stable = is_stable(mscript(ctx, k), ctx);
        rep.detail("mscript_stable", stable ? "true" : "false");
        rep.holds = rep.holds && stable;
    }
    collect_cert_bad_t(rep.certificates, rep.bad_t);
    return rep;
}

CriterionReport example1_lemma(const MPoly& P, const MPoly& Q, int k, const MonomialOrder& order,
                               long budget) {
    for (const auto* p : {&P, &Q})
        for (const auto& [e, c] : p->terms())
            if (!c.is_constant()) throw error("P and Q must be independent of t");
    CriterionReport rep;
    rep.name = "deformation_lemma_k" + std::to_string(k);
    const int n = P.nvars();
    auto vars = default_var_names(n);

    GroebnerBasis gbP = groebner(jacobian_ideal(P), order, budget);
    if (!staircase(gbP))
        throw unsupported_family_error("P does not have an isolated singularity");

    Ideal mk1 = maximal_ideal_power(n, k + 1);
    GroebnerBasis gb_mk1_JP = groebner(product_ideal(mk1, jacobian_ideal(P)), order, budget);
    Ideal JQ = jacobian_ideal(Q);
    bool hyp1 = true;
    {
        Ideal A = product_ideal(mk1, JQ);
        auto inc = inclusion_with_certificates(A, gb_mk1_JP, "m^(k+1)*J(Q) in m^(k+1)*J(P)", vars);
        hyp1 = inc.holds;
        for (auto& c : inc.certs) rep.certificates.push_back(std::move(c));
    }
    bool hyp2 = false;
    {
        Ideal mJQ = product_ideal(maximal_ideal_power(n, 1), JQ);
        if (!mJQ.generators.empty()) {
            GroebnerBasis gb_mJQ = groebner(mJQ, order, budget);
            MembershipResult m = membership(Q, gb_mJQ);
            hyp2 = m.member;
            if (m.member) {
                Certificate c;
                c.label = "Q in m*J(Q)";
                c.target = Q;
                c.cofactors = m.certificate;
                c.generators = mJQ.generators;
                rep.certificates.push_back(std::move(c));
            }
        }
    }
    // conclusion on the family f = P + t Q over K
    MPoly f = P + Q.scalar_mul(RatFunc::t());
    Ideal A = k == 0 ? make_ideal({Q}) : product_ideal(maximal_ideal_power(n, k), make_ideal({Q}));
    GroebnerBasis gbJf = groebner(product_ideal(mk1, jacobian_ideal(f)), order, budget);
    auto inc = inclusion_with_certificates(A, gbJf, "m^k*df/dt in m^(k+1)*J_/(f)", vars);
    bool conclusion = inc.holds;
    for (auto& c : inc.certs) rep.certificates.push_back(std::move(c));

    rep.detail("hypothesis_inclusion", hyp1 ? "true" : "false");
    rep.detail("hypothesis_Q_in_mJQ", hyp2 ? "true" : "false");
    rep.detail("conclusion", conclusion ? "true" : "false");
    rep.holds = !(hyp1 && hyp2) || conclusion;
    collect_cert_bad_t(rep.certificates, rep.bad_t);
    return rep;
}

CriterionReport g_equals_e_test(const FamilyContext& ctx, bool crosscheck_saturation) {
    CriterionReport rep;
    rep.name = "g_equals_e";
    MembershipResult m = membership(ctx.dfdt, ctx.gb);
    rep.holds = m.member;
    if (m.member) {
        Certificate c;
        c.label = "df/dt in J_/(f)";
        c.target = ctx.dfdt;
        c.cofactors = m.certificate;
        c.generators = ctx.gb.origin.generators;
        rep.certificates.push_back(std::move(c));
    }
    rep.detail("dfdt_in_jacobian", m.member ? "true" : "false");
    if (crosscheck_saturation) {
        SaturationResult sat = saturate_G(ctx);
        bool full = sat.G.rank() == ctx.mu * ctx.N;
        rep.detail("saturation_full_rank", full ? "true" : "false");
        if (full != m.member) rep.holds = false;
    }
    collect_cert_bad_t(rep.certificates, rep.bad_t);
    return rep;
}

namespace {

// f in rad(J) via one Rabinowitsch variable
bool critical_value_vanishes(const FamilyContext& ctx) {
    const int n = ctx.n;
    auto lift = [&](const MPoly& p) {
        MPoly q(n + 1);
        for (const auto& [e, c] : p.terms()) {
            Exponents e2 = e;
            e2.push_back(0);
            q.add_term(e2, c);
        }
        return q;
    };
    std::vector<MPoly> gens;
    for (const auto& g : ctx.gb.origin.generators) gens.push_back(lift(g));
    MPoly uf = lift(ctx.f) * MPoly::variable(n + 1, n);
    gens.push_back(MPoly::constant(n + 1, RatFunc(1)) - uf);
    MonomialOrder ord = ctx.order.kind == MonomialOrder::Kind::grevlex
                            ? MonomialOrder::grevlex(n + 1)
                            : MonomialOrder::grlex(n + 1);
    GroebnerBasis gb = groebner(make_ideal(gens), ord, ctx.budget);
    auto st = staircase(gb);
    return st && st->size() == 0;
}

}  // namespace

CriterionReport mu_constancy_probe(const FamilyContext& ctx, const std::vector<Rat>& samples) {
    CriterionReport rep;
    rep.name = "mu_constancy";
    rep.detail("mu_generic", std::to_string(ctx.mu));
    rep.bad_t = ctx.bad_t;

    if (!critical_value_vanishes(ctx)) {
        rep.holds = false;
        rep.detail("non_family", "critical value does not vanish along the family (f not in rad J_/(f))");
        return rep;
    }

    bool all_match = true;
    for (const auto& t0 : samples) {
        std::string key = "mu_at_" + rat_str(t0);
        if (std::find(ctx.bad_t.begin(), ctx.bad_t.end(), t0) != ctx.bad_t.end()) {
            rep.detail(key, "skipped (bad value)");
            continue;
        }
        MPoly fr;
        try {
            fr = ctx.f.specialize_t(t0);
        } catch (const pole_error&) {
            rep.detail(key, "skipped (pole of a coefficient)");
            continue;
        }
        std::vector<MPoly> parts;
        for (int i = 0; i < ctx.n; ++i) {
            MPoly p = fr.partial_derivative(i);
            if (!p.is_zero()) parts.push_back(p);
        }
        auto gbr = groebner(make_ideal(parts), ctx.order, ctx.budget);
        auto dim = quotient_dimension(gbr);
        if (!dim) {
            rep.detail(key, "infinite");
            all_match = false;
        } else {
            rep.detail(key, std::to_string(*dim));
            if (*dim != ctx.mu) all_match = false;
        }
    }
    rep.holds = all_match;
    return rep;
}

std::optional<std::vector<Rat>> quasihomogeneous_detect(const MPoly& f) {
    if (f.is_zero()) throw error("quasihomogeneous_detect requires nonzero f");
    const int n = f.nvars();
    const int cols = n + 2;  // w_1..w_n, w_t | rhs
    std::vector<KVec> rows;
    bool force_wt_zero = false;
    for (const auto& [e, c] : f.terms()) {
        auto d = c.t_monomial_degree();
        KVec row(cols);
        for (int i = 0; i < n; ++i) row[i] = RatFunc(e[i]);
        if (d) {
            row[n] = RatFunc(*d);
        } else {
            force_wt_zero = true;  // coefficient is not a t-monomial
        }
        row[n + 1] = RatFunc(1);
        rows.push_back(std::move(row));
    }
    if (force_wt_zero) {
        KVec row(cols);
        row[n] = RatFunc(1);
        rows.push_back(std::move(row));
    }
    std::vector<int> pivots = rref(rows);
    std::vector<Rat> w(n + 1, Rat(0));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (pivots[r] == n + 1) return std::nullopt;  // inconsistent
        // free unknowns are set to 0, so the pivot value is the rhs entry
        w[pivots[r]] = *rows[r][n + 1].as_rational();
    }
    // verify (free unknowns zero must still satisfy every equation)
    for (const auto& [e, c] : f.terms()) {
        auto d = c.t_monomial_degree();
        Rat acc(0);
        for (int i = 0; i < n; ++i) acc += Rat(e[i]) * w[i];
        if (d) acc += Rat(*d) * w[n];
        else if (w[n] != 0) return std::nullopt;
        if (acc != 1) return std::nullopt;
    }
    return w;
}

CriterionReport quasihomogeneous_report(const FamilyContext& ctx) {
    CriterionReport rep;
    rep.name = "quasihomogeneous";
    auto w = quasihomogeneous_detect(ctx.f);
    rep.holds = w.has_value();
    if (!w) {
        rep.detail("weights", "none");
        return rep;
    }
    std::ostringstream os;
    for (int i = 0; i < ctx.n; ++i) os << (i ? "," : "") << rat_str((*w)[i]);
    rep.detail("weights", os.str());
    rep.detail("weight_t", rat_str((*w)[ctx.n]));
    if ((*w)[ctx.n] == 0) {
        // spectral identity a(m) = (sum w_i (m_i + 1)) b(m) on the staircase
        bool ok = true;
        for (int i = 0; i < ctx.mu; ++i) {
            Rat lambda(0);
            for (int v = 0; v < ctx.n; ++v) lambda += Rat(ctx.st.monomials[i][v] + 1) * (*w)[v];
            BClass expect = monomial_class(ctx, i).shifted(1).scalar_mul(RatFunc(lambda));
            if (!(ctx.a_mon[i] == expect)) {
                ok = false;
                rep.detail("spectral_identity_fails_at", ctx.monomial_str(i));
            }
        }
        rep.detail("spectral_identity", ok ? "true" : "false");
        rep.holds = rep.holds && ok;
    }
    return rep;
}

CriterionReport example3_relations(const FamilyContext& ctx, int p, int q, int r) {
    if (ctx.n != 3) throw error("three-variable family required");
    if (p < 3 || q < 3 || r < 3) throw error("exponents must be at least 3");
    Rat rho = Rat(1, p) + Rat(1, q) + Rat(1, r);
    if (rho > 1) throw error("1/p + 1/q + 1/r must be at most 1");
    auto mono = [&](int a, int b, int c) {
        return MPoly::monomial(3, Exponents{a, b, c}, RatFunc(1));
    };
    MPoly alpha = mono(1, 1, 1);
    MPoly expected = mono(p, 0, 0) + mono(0, q, 0) + mono(0, 0, r) + alpha.scalar_mul(RatFunc::t());
    if (!(ctx.f == expected)) throw error("family is not x^p + y^q + z^r + t*x*y*z");

    CriterionReport rep;
    rep.name = "tpqr_relations_p" + std::to_string(p) + "q" + std::to_string(q) + "r" + std::to_string(r);
    rep.detail("rho", rat_str(rho));

    Ideal J;
    J.n = 3;
    J.generators = ctx.gb.origin.generators;
    GroebnerBasis gb_mJ = groebner(product_ideal(maximal_ideal_power(3, 1), J), ctx.order, ctx.budget);
    GroebnerBasis gb_m2J = groebner(product_ideal(maximal_ideal_power(3, 2), J), ctx.order, ctx.budget);

    bool all = true;
    auto member_cert = [&](const MPoly& target, const GroebnerBasis& gb, const std::string& label) {
        MembershipResult m = membership(target, gb);
        rep.detail(label, m.member ? "true" : "false");
        if (m.member) {
            Certificate c;
            c.label = label;
            c.target = target;
            c.cofactors = m.certificate;
            c.generators = gb.origin.generators;
            rep.certificates.push_back(std::move(c));
        }
        all = all && m.member;
    };

    MPoly t_alpha = alpha.scalar_mul(RatFunc::t());
    member_cert(mono(p, 0, 0).scalar_mul(RatFunc(p)) + t_alpha, gb_mJ, "p*x^p + t*xyz in m*J");
    member_cert(mono(0, q, 0).scalar_mul(RatFunc(q)) + t_alpha, gb_mJ, "q*y^q + t*xyz in m*J");
    member_cert(mono(0, 0, r).scalar_mul(RatFunc(r)) + t_alpha, gb_mJ, "r*z^r + t*xyz in m*J");
    member_cert(ctx.f - t_alpha.scalar_mul(RatFunc(Rat(1) - rho)), gb_mJ,
                "f - (1-rho)*t*xyz in m*J");

    {
        Ideal A = product_ideal(maximal_ideal_power(3, 1), make_ideal({ctx.dfdt}));
        auto inc = inclusion_with_certificates(A, gb_m2J, "m*df/dt in m^2*J", ctx.var_names);
        rep.detail("m*df/dt in m^2*J", inc.holds ? "true" : "false");
        for (auto& c : inc.certs) rep.certificates.push_back(std::move(c));
        all = all && inc.holds;
    }
    {
        Ideal A = product_ideal(maximal_ideal_power(3, 1), make_ideal({ctx.f}));
        auto inc = inclusion_with_certificates(A, gb_m2J, "m*f in m^2*J", ctx.var_names);
        rep.detail("m*f in m^2*J", inc.holds ? "true" : "false");
        for (auto& c : inc.certs) rep.certificates.push_back(std::move(c));
        all = all && inc.holds;
    }
    rep.holds = all;
    collect_cert_bad_t(rep.certificates, rep.bad_t);
    return rep;
}

}  // namespace abmod
