#include <abmod/fixtures.hpp>
#include <abmod/errors.hpp>
#include <sstream>

namespace abmod {

namespace {

MPoly mono2(int a, int b, RatFunc c = RatFunc(1)) {
    return MPoly::monomial(2, Exponents{a, b}, std::move(c));
}

MPoly mono3(int a, int b, int c, RatFunc k = RatFunc(1)) {
    return MPoly::monomial(3, Exponents{a, b, c}, std::move(k));
}

struct Runner {
    std::vector<FixtureRow> rows;
    void row(const std::string& id, const std::string& desc, bool pass, std::string detail = "") {
        rows.push_back({id, desc, pass, std::move(detail)});
    }
    void check(const std::string& id, const std::string& desc, bool pass) {
        row(id, desc, pass, pass ? "" : "mismatch");
    }
};

bool certs_re_expand(const CriterionReport& rep) {
    for (const auto& c : rep.certificates)
        if (!c.re_expands()) return false;
    return true;
}

std::string bools(std::initializer_list<bool> bs) {
    std::string s;
    for (bool b : bs) s += b ? "1" : "0";
    return s;
}

void quartic_fixtures(Runner& R, long budget) {
    FamilyContext ctx = quartic_context(8, budget);
    const RatFunc t = RatFunc::t();
    const RatFunc c4t2 = RatFunc(4) - t * t;  // 4 - t^2
    const MPoly& fx = ctx.partials[0];
    const MPoly& fy = ctx.partials[1];

    R.check("quartic.partial_x", "df/dx = 4x^3 + 2t*x*y^2",
            fx == mono2(3, 0, RatFunc(4)) + mono2(1, 2, RatFunc(2) * t));
    R.check("quartic.partial_t", "df/dt = x^2*y^2", ctx.dfdt == mono2(2, 2));
    R.check("quartic.mu", "mu = 9 over Q(t)", ctx.mu == 9);

    // cross-ratio degeneration values
    {
        std::vector<Rat> expect = {Rat(-2), Rat(2)};
        R.check("quartic.bad_t", "degenerate fibers exactly at t = -2, 2", ctx.bad_t == expect);
    }

    auto member = [&](const MPoly& p) {
        MembershipResult m = membership(p, ctx.gb);
        if (!m.member) return false;
        MPoly acc(2);
        for (size_t j = 0; j < m.certificate.size(); ++j)
            acc += m.certificate[j] * ctx.gb.origin.generators[j];
        return acc == p;
    };

    R.check("quartic.x3y.identity", "2(4-t^2) x^3*y = 2y df/dx - t*x df/dy",
            mono2(3, 1, RatFunc(2) * c4t2) == mono2(0, 1, RatFunc(2)) * fx - mono2(1, 0, t) * fy);
    R.check("quartic.x3y.membership", "x^3*y in J_/(f) with exact certificate",
            member(mono2(3, 1)));
    R.check("quartic.xy3.identity", "2(4-t^2) x*y^3 = 2x df/dy - t*y df/dx",
            mono2(1, 3, RatFunc(2) * c4t2) == mono2(1, 0, RatFunc(2)) * fy - mono2(0, 1, t) * fx);
    R.check("quartic.xy3.membership", "x*y^3 in J_/(f) with exact certificate",
            member(mono2(1, 3)));
    R.check("quartic.x5.identity", "4 x^5 = x^2 df/dx - 2t x^3*y^2",
            mono2(5, 0, RatFunc(4)) == mono2(2, 0) * fx - mono2(3, 2, RatFunc(2) * t));
    R.check("quartic.x5.membership", "x^5 in J_/(f)", member(mono2(5, 0)));
    R.check("quartic.y5.identity", "4 y^5 = y^2 df/dy - 2t x^2*y^3",
            mono2(0, 5, RatFunc(4)) == mono2(0, 2) * fy - mono2(2, 3, RatFunc(2) * t));
    R.check("quartic.y5.membership", "y^5 in J_/(f)", member(mono2(0, 5)));
    R.check("quartic.x4.identity", "4 x^4 = -2t x^2*y^2 + x df/dx",
            mono2(4, 0, RatFunc(4)) == mono2(2, 2, RatFunc(-2) * t) + mono2(1, 0) * fx);
    R.check("quartic.y4.identity", "4 y^4 = -2t x^2*y^2 + y df/dy",
            mono2(0, 4, RatFunc(4)) == mono2(2, 2, RatFunc(-2) * t) + mono2(0, 1) * fy);

    BClass one = reduce(ctx, mono2(0, 0));
    BClass x2y2 = reduce(ctx, mono2(2, 2));
    R.check("quartic.x4.class", "[x^4] = -(t/2)[x^2*y^2] + (1/4) b[1]",
            reduce(ctx, mono2(4, 0)) ==
                x2y2.scalar_mul(-(t / RatFunc(2))) + b_apply(one).scalar_mul(RatFunc(Rat(1, 4))));
    R.check("quartic.x4.normal_form", "NF(x^4) = -(t/2) NF(x^2*y^2)",
            ctx.gb.normal_form(mono2(4, 0)) ==
                ctx.gb.normal_form(mono2(2, 2)).scalar_mul(-(t / RatFunc(2))));

    {
        auto w = quasihomogeneous_detect(ctx.f);
        bool ok = w && (*w)[0] == Rat(1, 4) && (*w)[1] == Rat(1, 4) && (*w)[2] == 0;
        R.check("quartic.weights", "weights (1/4, 1/4), t-weight 0", ok);
    }

    // the nine reference monomials: a basis of E/bE and the spectral identity
    std::vector<Exponents> nine = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2},
                                   {1, 1}, {2, 1}, {1, 2}, {2, 2}};
    {
        std::vector<KVec> b0rows;
        for (const auto& e : nine) {
            BClass c = reduce(ctx, MPoly::monomial(2, e, RatFunc(1)));
            KVec v(ctx.mu);
            for (int i = 0; i < ctx.mu; ++i) v[i] = c.at(i, 0);
            b0rows.push_back(std::move(v));
        }
        rref(b0rows);
        R.check("quartic.basis_change", "the nine reference monomials are a basis of E/bE",
                (int)b0rows.size() == 9);
    }
    {
        bool ok = true;
        for (const auto& e : nine) {
            BClass c = reduce(ctx, MPoly::monomial(2, e, RatFunc(1)));
            RatFunc lambda = RatFunc(Rat(total_degree(e) + 2, 4));
            if (!(a_apply(ctx, c) == b_apply(c).scalar_mul(lambda))) ok = false;
        }
        R.check("quartic.spectral_action", "a[m] = ((deg m + 2)/4) b[m] for the nine monomials", ok);
    }
    {
        bool ok = true;
        for (const auto& e : nine) {
            BClass c = reduce(ctx, MPoly::monomial(2, e, RatFunc(1)));
            MPoly me = MPoly::monomial(2, e, RatFunc(1));
            if (!(nabla(ctx, c) == reduce(ctx, -(mono2(2, 2) * me)))) ok = false;
        }
        R.check("quartic.connection_action", "nabla[m] = [-x^2*y^2 m] for the nine monomials", ok);
    }

    R.check("quartic.x3y2.identity", "2(4-t^2) x^3*y^2 = 2y^2 df/dx - t*x*y df/dy",
            mono2(3, 2, RatFunc(2) * c4t2) ==
                mono2(0, 2, RatFunc(2)) * fx - mono2(1, 1, t) * fy);
    R.check("quartic.x3y2.wedge", "2(4-t^2) x^3*y^2 dx^dy = d_/f ^ (t*x*y dx + 2y^2 dy)",
            wedge_df_n2(ctx, mono2(1, 1, t), mono2(0, 2, RatFunc(2))) ==
                mono2(3, 2, RatFunc(2) * c4t2));

    {
        BClass x = reduce(ctx, mono2(1, 0));
        RatFunc coeff = t / (RatFunc(2) * c4t2);
        bool ok = b_inv_nabla(ctx, x).equal_mod(x.scalar_mul(coeff), ctx.N - 1);
        R.check("quartic.connection_on_x", "b^-1 nabla(x) = (t/(2(4-t^2))) x", ok);
    }
    {
        bool threw = false;
        try {
            b_inv_nabla(ctx, one);
        } catch (const not_in_p_error&) {
            threw = true;
        }
        R.check("quartic.one_outside_P", "nabla(1) = -x^2*y^2 is not in bE", threw);
    }

    R.check("quartic.x4y4.wedge", "2(4-t^2) x^4*y^4 dx^dy = d_/f ^ (t*x^2*y^3 dx + 2x*y^4 dy)",
            wedge_df_n2(ctx, mono2(2, 3, t), mono2(1, 4, RatFunc(2))) ==
                mono2(4, 4, RatFunc(2) * c4t2));

    {
        ExtensionReport ext = verify_quartic_extension(ctx);
        for (const auto& it : ext.items)
            R.row("quartic.ext." + it.name, it.detail, it.pass, it.pass ? "" : "failed");
    }

    // lattices
    {
        Lattice P = compute_P(ctx);
        BClass x = reduce(ctx, mono2(1, 0));
        bool b_in = true;
        for (int i = 0; i < ctx.mu; ++i)
            if (!P.contains(b_apply(monomial_class(ctx, i)))) b_in = false;
        R.check("quartic.P", "x in P, 1 not in P, bE in P",
                P.contains(x) && !P.contains(one) && b_in);
    }
    {
        SaturationResult sat = saturate_G(ctx);
        Lattice M = mscript(ctx, 1);
        R.check("quartic.G_equals_M", "saturation stabilizes at M (rank mu*N - 1)",
                sat.G == M && sat.G.rank() == ctx.mu * ctx.N - 1);
        R.check("quartic.one_outside_G", "1 is not in G", !sat.G.contains(one));
        R.check("quartic.M_stable", "M is b^-1 nabla stable", is_stable(M, ctx));
        R.check("quartic.E_not_stable", "E itself is not stable",
                !is_stable(full_lattice(ctx), ctx));
        auto dirs = kernel_nabla_mod_b(ctx, sat.G);
        RatFunc coeff = t / (RatFunc(2) * c4t2);
        int found = 0;
        for (const auto& d : dirs) {
            const Exponents& m = ctx.st.monomials[d.monomial_index];
            if ((m == Exponents{1, 0} || m == Exponents{0, 1}) && d.coefficient == coeff) ++found;
        }
        R.check("quartic.kernel_directions",
                "b^-1 nabla fixes the lines K.x and K.y with coefficient t/(2(4-t^2))", found == 2);
    }

    {
        CriterionReport est1 = estim_criterion(ctx, 1);
        R.row("quartic.estim_k1", "m*df/dt in m^2*J_/(f) and M stable", est1.holds && certs_re_expand(est1));
        CriterionReport est0 = estim_criterion(ctx, 0);
        R.check("quartic.estim_k0_fails", "df/dt is not in m*J_/(f)", !est0.holds);
        CriterionReport ge = g_equals_e_test(ctx);
        R.check("quartic.g_not_e", "df/dt not in J_/(f), so G != E", !ge.holds);
    }

    {
        CriterionReport probe = mu_constancy_probe(ctx, {Rat(0), Rat(1), Rat(3), Rat(2)});
        bool ok = probe.holds;
        int nines = 0;
        bool skipped2 = false;
        for (const auto& [k, v] : probe.details) {
            if (k.rfind("mu_at_", 0) == 0 && v == "9") ++nines;
            if (k == "mu_at_2" && v.rfind("skipped", 0) == 0) skipped2 = true;
        }
        R.check("quartic.mu_probe", "mu = 9 at t = 0, 1, 3; t = 2 skipped as bad",
                ok && nines == 3 && skipped2);
    }

    {
        auto ord = MonomialOrder::grevlex(2);
        CriterionReport lem = example1_lemma(mono2(4, 0) + mono2(0, 4), mono2(2, 2), 1, ord, budget);
        bool h1 = false, h2 = false, con = false;
        for (const auto& [k, v] : lem.details) {
            if (k == "hypothesis_inclusion") h1 = v == "true";
            if (k == "hypothesis_Q_in_mJQ") h2 = v == "true";
            if (k == "conclusion") con = v == "true";
        }
        R.row("quartic.deformation_lemma", "m^2 J(Q) in m^2 J(P), Q in m J(Q), conclusion",
              h1 && h2 && con && certs_re_expand(lem), bools({h1, h2, con}));
    }
}

void tpqr_fixtures(Runner& R, int p, int q, int r, int N, long budget) {
    std::string tag = "t" + std::to_string(p) + std::to_string(q) + std::to_string(r);
    FamilyContext ctx = tpqr_context(p, q, r, N, budget);
    const RatFunc t = RatFunc::t();

    R.check(tag + ".jacobian", "J_/(f) = (p x^(p-1) + t*y*z, q y^(q-1) + t*x*z, r z^(r-1) + t*x*y)",
            ctx.partials[0] == mono3(p - 1, 0, 0, RatFunc(p)) + mono3(0, 1, 1, t) &&
                ctx.partials[1] == mono3(0, q - 1, 0, RatFunc(q)) + mono3(1, 0, 1, t) &&
                ctx.partials[2] == mono3(0, 0, r - 1, RatFunc(r)) + mono3(1, 1, 0, t));
    R.check(tag + ".mu", "mu = p + q + r - 1 over Q(t)", ctx.mu == p + q + r - 1);

    CriterionReport rel = example3_relations(ctx, p, q, r);
    for (const auto& [k, v] : rel.details) {
        if (k == "rho") continue;
        R.check(tag + ".rel." + k, k, v == "true");
    }
    R.check(tag + ".certificates", "all certificates re-expand exactly", certs_re_expand(rel));

    R.check(tag + ".xpy.identity", "t x^p y = x^(p-1) df/dz - r x^(p-1) z^(r-1)",
            mono3(p, 1, 0, t) ==
                mono3(p - 1, 0, 0) * ctx.partials[2] - mono3(p - 1, 0, r - 1, RatFunc(r)));

    Ideal J;
    J.n = 3;
    J.generators = ctx.gb.origin.generators;
    GroebnerBasis gb_m2J =
        groebner(product_ideal(maximal_ideal_power(3, 2), J), ctx.order, ctx.budget);
    R.check(tag + ".t2xpy", "t^2 x^p y in m^2 J_/(f)",
            membership(mono3(p, 1, 0, t * t), gb_m2J).member);
    R.check(tag + ".mixed", "t^3 x*y*z^2 + pqr x^(p-2) y^(q-2) z^(r-1) in m^2 J_/(f)",
            membership(mono3(1, 1, 2, t * t * t) + mono3(p - 2, q - 2, r - 1, RatFunc(p * q * r)),
                       gb_m2J)
                .member);
    R.check(tag + ".pq_xy", "pq x^(p-1) y^(q-1) - t^2 x*y*z^2 in m^2 J_/(f)",
            membership(mono3(p - 1, q - 1, 0, RatFunc(p * q)) - mono3(1, 1, 2, t * t), gb_m2J)
                .member);
    R.check(tag + ".t_xy", "t x^(p-1) y^(q-1) + r x^(p-2) y^(q-2) z^(r-1) in m^2 J_/(f)",
            membership(mono3(p - 1, q - 1, 0, t) + mono3(p - 2, q - 2, r - 1, RatFunc(r)), gb_m2J)
                .member);

    {
        CriterionReport est = estim_criterion(ctx, 1);
        R.check(tag + ".estim_k1", "m*df/dt in m^2*J_/(f) and M stable", est.holds);
    }
    {
        auto w = quasihomogeneous_detect(ctx.f);
        Rat rho = Rat(1, p) + Rat(1, q) + Rat(1, r);
        bool ok = w && (*w)[0] == Rat(1, p) && (*w)[1] == Rat(1, q) && (*w)[2] == Rat(1, r) &&
                  (*w)[3] == Rat(1) - rho;
        R.check(tag + ".weights", "weights (1/p, 1/q, 1/r), t-weight 1 - rho", ok);
    }
    {
        SaturationResult sat = saturate_G(ctx);
        Lattice M = mscript(ctx, 1);
        R.check(tag + ".G_equals_mE", "G = M = m*E of rank mu*N - 1",
                sat.G == M && sat.G.rank() == ctx.mu * ctx.N - 1);
        BClass alpha = reduce(ctx, mono3(1, 1, 1));
        Lattice bM = b_shift(M);
        R.check(tag + ".a_alpha", "a(x*y*z) lies in b M", bM.contains(a_apply(ctx, alpha)));
        bool aM = true;
        for (const auto& row : M.rows) {
            BClass v(ctx.mu, ctx.N);
            v.coords() = row;
            if (!bM.contains(a_apply(ctx, v))) aM = false;
        }
        R.check(tag + ".aM_in_bM", "a(M) lies in b M (simple pole on M)", aM);
        R.check(tag + ".f_alpha", "f * x*y*z in m^2 J_/(f)",
                membership(ctx.f * mono3(1, 1, 1), gb_m2J).member);
    }
}

void boundary_333_fixtures(Runner& R, long budget) {
    FamilyContext ctx = tpqr_context(3, 3, 3, 4, budget);
    R.check("t333.mu", "mu = 8 over Q(t)", ctx.mu == 8);
    Ideal J;
    J.n = 3;
    J.generators = ctx.gb.origin.generators;
    GroebnerBasis gb_mJ =
        groebner(product_ideal(maximal_ideal_power(3, 1), J), ctx.order, ctx.budget);
    GroebnerBasis gb_m2J =
        groebner(product_ideal(maximal_ideal_power(3, 2), J), ctx.order, ctx.budget);
    R.check("t333.f_in_mJ", "rho = 1: f in m J_/(f)", membership(ctx.f, gb_mJ).member);
    bool mf = true;
    for (int v = 0; v < 3; ++v)
        if (!membership(MPoly::variable(3, v) * ctx.f, gb_m2J).member) mf = false;
    R.check("t333.mf_in_m2J", "m f in m^2 J_/(f)", mf);
    const RatFunc t = RatFunc::t();
    MPoly t_alpha = mono3(1, 1, 1, t);
    R.check("t333.cube_relations", "3x^3, 3y^3, 3z^3 = -t*xyz mod m J_/(f)",
            membership(mono3(3, 0, 0, RatFunc(3)) + t_alpha, gb_mJ).member &&
                membership(mono3(0, 3, 0, RatFunc(3)) + t_alpha, gb_mJ).member &&
                membership(mono3(0, 0, 3, RatFunc(3)) + t_alpha, gb_mJ).member);
}

void misc_fixtures(Runner& R, long budget) {
    auto ord2 = MonomialOrder::grevlex(2);
    {
        // f = (1+t)(x^2+y^2): df/dt = x^2+y^2 lies in J_/(f)
        MPoly f = (mono2(2, 0) + mono2(0, 2)).scalar_mul(RatFunc(1) + RatFunc::t());
        FamilyContext ctx = make_family_context(f, 4, ord2, budget);
        CriterionReport ge = g_equals_e_test(ctx, true);
        SaturationResult sat = saturate_G(ctx);
        R.check("scaled_cone.g_equals_e", "df/dt in J_/(f) and G = E",
                ge.holds && sat.G.rank() == ctx.mu * ctx.N);
    }
    {
        // t-free family: nabla = b d/dt only, G = E
        MPoly f = mono2(2, 0) + mono2(0, 2);
        FamilyContext ctx = make_family_context(f, 4, ord2, budget);
        SaturationResult sat = saturate_G(ctx);
        R.check("tfree.g_equals_e", "df/dt = 0: G = E",
                ctx.dfdt.is_zero() && sat.G.rank() == ctx.mu * ctx.N);
    }
    {
        // moving critical point: not a family through the zero fiber
        MPoly f = mono2(2, 0) + mono2(0, 2) + mono2(1, 0, RatFunc::t());
        FamilyContext ctx = make_family_context(f, 2, ord2, budget);
        CriterionReport probe = mu_constancy_probe(ctx, {Rat(1)});
        bool flagged = false;
        for (const auto& [k, v] : probe.details)
            if (k == "non_family") flagged = true;
        R.check("moving_center.non_family", "critical value does not vanish: non-family reported",
                !probe.holds && flagged);
    }
    {
        // negative control: coefficient 5 on y^4 breaks the extension identities
        MPoly f = mono2(4, 0) + mono2(0, 4, RatFunc(5)) + mono2(2, 2, RatFunc::t());
        FamilyContext ctx = make_family_context(f, 6, ord2, budget);
        ExtensionReport ext = verify_quartic_extension(ctx);
        R.check("perturbed_quartic.control", "at least one extension identity fails", !ext.all_pass);
    }
    {
        // cuspidal pair with quasi-homogeneous Q: implication at k = 0, 1, 2
        MPoly P = mono2(3, 0) + mono2(0, 3);
        MPoly Q = mono2(2, 1) + mono2(1, 2);
        for (int k = 0; k <= 2; ++k) {
            CriterionReport lem = example1_lemma(P, Q, k, ord2, budget);
            std::string flags;
            for (const auto& [key, v] : lem.details) flags += v == "true" ? "1" : "0";
            R.row("cusp_pair.lemma_k" + std::to_string(k),
                  "hypotheses imply the conclusion for P = x^3+y^3, Q = x^2*y + x*y^2",
                  lem.holds, flags);
        }
    }
    {
        // quasi-homogeneous Q has Q in m J(Q) by the Euler relation
        MPoly Q = mono2(2, 2);
        Ideal mJQ = product_ideal(maximal_ideal_power(2, 1),
                                  make_ideal({Q.partial_derivative(0), Q.partial_derivative(1)}));
        GroebnerBasis gb = groebner(mJQ, ord2, budget);
        R.check("euler.Q_in_mJQ", "quasi-homogeneous Q lies in m J(Q)", membership(Q, gb).member);
    }
}

}  // namespace

FamilyContext quartic_context(int N, long budget) {
    MPoly f = mono2(4, 0) + mono2(0, 4) + mono2(2, 2, RatFunc::t());
    return make_family_context(f, N, MonomialOrder::grevlex(2), budget);
}

FamilyContext tpqr_context(int p, int q, int r, int N, long budget) {
    MPoly f = mono3(p, 0, 0) + mono3(0, q, 0) + mono3(0, 0, r) + mono3(1, 1, 1, RatFunc::t());
    return make_family_context(f, N, MonomialOrder::grevlex(3), budget, /*compute_bad_t=*/false);
}

std::vector<FixtureRow> run_reference_fixtures(long budget) {
    Runner R;
    quartic_fixtures(R, budget);
    tpqr_fixtures(R, 3, 4, 5, 4, budget);
    tpqr_fixtures(R, 4, 4, 4, 4, budget);
    boundary_333_fixtures(R, budget);
    misc_fixtures(R, budget);
    return R.rows;
}

}  // namespace abmod
