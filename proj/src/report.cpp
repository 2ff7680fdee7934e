#include <abmod/report.hpp>
#include <abmod/errors.hpp>

namespace abmod {

using nlohmann::json;

json lattice_json(const FamilyContext& ctx, const Lattice& L) {
    json rows = json::array();
    for (const auto& r : L.rows) {
        json row = json::array();
        for (int j = 0; j < ctx.N; ++j)
            for (int i = 0; i < ctx.mu; ++i) {
                const RatFunc& c = r[(size_t)j * ctx.mu + i];
                if (c.is_zero()) continue;
                row.push_back({{"b", j}, {"m", ctx.monomial_str(i)}, {"c", c.str()}});
            }
        rows.push_back(std::move(row));
    }
    return {{"rank", L.rank()}, {"rows", std::move(rows)}};
}

json matrix_json(const FamilyContext& ctx, Op op) {
    auto M = operator_matrix(ctx, op);
    const int dim = ctx.mu * ctx.N;
    json entries = json::array();
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            if (!M[r][c].is_zero()) entries.push_back({r, c, M[r][c].str()});
    json blocks = json::array();
    for (int j = 0; j < ctx.N; ++j) blocks.push_back({{"b", j}, {"offset", j * ctx.mu}});
    return {{"op", op == Op::a ? "a" : "nabla"},
            {"dim", dim},
            {"mu", ctx.mu},
            {"b_order", ctx.N},
            {"blocks", std::move(blocks)},
            {"entries", std::move(entries)}};
}

json criterion_json(const CriterionReport& rep, const std::vector<std::string>& vars) {
    json details = json::array();
    for (const auto& [k, v] : rep.details) details.push_back({{"key", k}, {"value", v}});
    json certs = json::array();
    for (const auto& c : rep.certificates) {
        json cof = json::array(), gens = json::array();
        for (const auto& h : c.cofactors) cof.push_back(h.str(vars));
        for (const auto& g : c.generators) gens.push_back(g.str(vars));
        certs.push_back({{"label", c.label},
                         {"target", c.target.str(vars)},
                         {"cofactors", std::move(cof)},
                         {"generators", std::move(gens)}});
    }
    json bad = json::array();
    for (const auto& r : rep.bad_t) bad.push_back(rat_str(r));
    return {{"name", rep.name},
            {"holds", rep.holds},
            {"details", std::move(details)},
            {"certificates", std::move(certs)},
            {"bad_t", std::move(bad)}};
}

json family_json(const FamilySpec& spec) {
    json vars = json::array();
    for (const auto& v : spec.variables) vars.push_back(v);
    json samples = json::array();
    for (const auto& s : spec.samples) samples.push_back(rat_str(s));
    return {{"variables", std::move(vars)},
            {"parameter", spec.parameter},
            {"f", spec.f_text},
            {"b_order", spec.b_order},
            {"order", spec.order},
            {"samples", std::move(samples)}};
}

json staircase_json(const FamilyContext& ctx) {
    json st = json::array();
    for (int i = 0; i < ctx.mu; ++i) st.push_back(ctx.monomial_str(i));
    return st;
}

json fixtures_json(const std::vector<FixtureRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"id", r.id}, {"description", r.description}, {"pass", r.pass},
                       {"detail", r.detail}});
    return out;
}

json analyze_report(const FamilySpec& spec, long budget) {
    MPoly f = spec.parse_f();
    FamilyContext ctx = make_family_context(f, spec.b_order, spec.monomial_order(), budget,
                                            /*compute_bad_t=*/true, spec.variables);
    json rep;
    rep["family"] = family_json(spec);
    rep["staircase"] = staircase_json(ctx);
    rep["mu"] = ctx.mu;
    json bad = json::array();
    for (const auto& r : ctx.bad_t) bad.push_back(rat_str(r));
    rep["bad_t"] = std::move(bad);
    json unresolved = json::array();
    for (const auto& p : ctx.unresolved_bad) unresolved.push_back(p.str());
    rep["bad_t_unresolved"] = std::move(unresolved);
    rep["matrices"] = {{"a", matrix_json(ctx, Op::a)}, {"nabla", matrix_json(ctx, Op::nabla)}};
    rep["P"] = lattice_json(ctx, compute_P(ctx));

    SaturationConfirmation sat = saturate_G_confirmed(ctx);
    json g = lattice_json(ctx, sat.result.G);
    g["stabilization_step"] = sat.result.steps;
    g["low_blocks_confirmed"] = sat.confirmed;
    json dirs = json::array();
    for (const auto& d : kernel_nabla_mod_b(ctx, sat.result.G))
        dirs.push_back({{"monomial", ctx.monomial_str(d.monomial_index)},
                        {"coefficient", d.coefficient.str()},
                        {"horizontal_ode", "phi' + (" + d.coefficient.str() + ")*phi = 0"}});
    g["kernel_directions"] = std::move(dirs);
    rep["G"] = std::move(g);

    json criteria = json::array();
    for (const auto& check : spec.checks) {
        if (check == "mu") {
            criteria.push_back(criterion_json(mu_constancy_probe(ctx, spec.samples), spec.variables));
        } else if (check == "g-equals-e") {
            criteria.push_back(criterion_json(g_equals_e_test(ctx), spec.variables));
        } else if (check == "quasihom") {
            criteria.push_back(criterion_json(quasihomogeneous_report(ctx), spec.variables));
        } else if (check.rfind("estim:", 0) == 0) {
            int k = std::stoi(check.substr(6));
            criteria.push_back(criterion_json(estim_criterion(ctx, k), spec.variables));
        } else if (check.rfind("example1:", 0) == 0) {
            int k = std::stoi(check.substr(9));
            // f must split as P + t Q with t-free P and Q
            MPoly Q = ctx.dfdt;
            MPoly P = f - Q.scalar_mul(RatFunc::t());
            bool splits = f == P + Q.scalar_mul(RatFunc::t());
            for (const auto* part : {&P, &Q})
                for (const auto& [e, c] : part->terms())
                    if (!c.is_constant()) splits = false;
            if (!splits) throw error("family does not split as P + t*Q with t-free P, Q");
            criteria.push_back(
                criterion_json(example1_lemma(P, Q, k, ctx.order, budget), spec.variables));
        } else if (check == "example3") {
            // recover p, q, r from the pure powers
            int p = 0, q = 0, r = 0;
            for (const auto& [e, c] : f.terms()) {
                if (e.size() == 3 && e[0] > 0 && e[1] == 0 && e[2] == 0) p = e[0];
                if (e.size() == 3 && e[0] == 0 && e[1] > 0 && e[2] == 0) q = e[1];
                if (e.size() == 3 && e[0] == 0 && e[1] == 0 && e[2] > 0) r = e[2];
            }
            criteria.push_back(criterion_json(example3_relations(ctx, p, q, r), spec.variables));
        } else if (check == "extension-e2") {
            ExtensionReport ext = verify_quartic_extension(ctx);
            json items = json::array();
            for (const auto& it : ext.items)
                items.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
            criteria.push_back(
                {{"name", "quartic_extension"}, {"holds", ext.all_pass}, {"items", std::move(items)}});
        }
    }
    rep["criteria"] = std::move(criteria);
    rep["fixtures"] = json::array();
    return rep;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace abmod
