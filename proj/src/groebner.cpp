#include <abmod/groebner.hpp>
#include <abmod/errors.hpp>
#include <cstdlib>
#include <functional>
#include <set>

namespace abmod {

Ideal make_ideal(std::vector<MPoly> gens) {
    Ideal I;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (I.n == 0) I.n = g.nvars();
        I.generators.push_back(std::move(g));
    }
    if (I.n == 0 && !gens.empty()) I.n = gens.front().nvars();
    return I;
}

Ideal maximal_ideal_power(int n, int k) {
    Ideal I;
    I.n = n;
    // all exponent vectors of total degree k, lex ascending
    Exponents e(n, 0);
    std::vector<Exponents> out;
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n == 0) return I;
    rec(0, k);
    std::sort(out.begin(), out.end());
    for (auto& m : out) I.generators.push_back(MPoly::monomial(n, m, RatFunc(1)));
    return I;
}

Ideal product_ideal(const Ideal& a, const Ideal& b) {
    Ideal I;
    I.n = a.n;
    for (const auto& p : a.generators)
        for (const auto& q : b.generators) {
            MPoly r = p * q;
            if (!r.is_zero()) I.generators.push_back(std::move(r));
        }
    return I;
}

int Staircase::max_degree() const {
    int d = 0;
    for (const auto& m : monomials) d = std::max(d, total_degree(m));
    return d;
}

namespace {

struct MonoGreater {
    const MonomialOrder* ord;
    bool operator()(const Exponents& a, const Exponents& b) const {
        return ord->greater(a, b);
    }
};

DivisionResult divide_against(const MPoly& p, const std::vector<const MPoly*>& basis,
                              const MonomialOrder& ord) {
    DivisionResult res;
    res.normal_form = MPoly(p.nvars());
    res.cofactors.assign(basis.size(), MPoly(p.nvars()));
    if (p.is_zero()) return res;

    std::map<Exponents, RatFunc, MonoGreater> work{MonoGreater{&ord}};
    for (const auto& [e, c] : p.terms()) work.emplace(e, c);
    std::vector<Exponents> lms;
    lms.reserve(basis.size());
    for (auto* g : basis) lms.push_back(g->leading_monomial(ord));

    while (!work.empty()) {
        auto lead = work.begin();
        Exponents e = lead->first;
        RatFunc c = lead->second;
        work.erase(lead);
        if (c.is_zero()) continue;
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!divides(lms[i], e)) continue;
            Exponents q = exp_div(e, lms[i]);
            res.cofactors[i].add_term(q, c);  // basis elements are monic
            for (const auto& [be, bc] : basis[i]->terms()) {
                if (be == lms[i]) continue;  // cancels the lead exactly
                Exponents te = exp_mul(be, q);
                RatFunc tc = bc * c;
                auto [it, inserted] = work.emplace(te, -tc);
                if (!inserted) {
                    it->second -= tc;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
            reduced = true;
            break;
        }
        if (!reduced) res.normal_form.add_term(e, c);
    }
    return res;
}

}  // namespace

DivisionResult GroebnerBasis::divide(const MPoly& p) const {
    std::vector<const MPoly*> view;
    view.reserve(basis.size());
    for (const auto& g : basis) view.push_back(&g);
    return divide_against(p, view, order);
}

std::vector<MPoly> GroebnerBasis::cofactors_to_origin(const DivisionResult& d) const {
    std::vector<MPoly> h(origin.generators.size(), MPoly(n));
    for (size_t k = 0; k < basis.size(); ++k) {
        if (d.cofactors[k].is_zero()) continue;
        for (size_t j = 0; j < h.size(); ++j)
            h[j] += d.cofactors[k] * reps[k][j];
    }
    return h;
}

long default_spair_budget() {
    if (const char* env = std::getenv("ABMOD_SPAIR_BUDGET")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 20000;
}

namespace {

void record_suspicious(std::vector<ZPoly>& sink, const RatFunc& inverted) {
    auto push = [&](const ZPoly& p) {
        if (p.degree() < 1) return;
        ZPoly pp = p.primitive_part();
        if (pp.leading() < 0) pp = -pp;
        for (const auto& q : sink)
            if (q == pp) return;
        sink.push_back(pp);
    };
    push(inverted.num());
    push(inverted.den());
}

struct PairEntry {
    Exponents lcm;
    int i, j;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const PairEntry& a, const PairEntry& b) const {
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, long budget) {
    GroebnerBasis gb;
    gb.n = ideal.n;
    gb.order = order;
    gb.origin = ideal;

    const size_t ngen = ideal.generators.size();
    std::vector<MPoly> G;
    std::vector<std::vector<MPoly>> R;
    std::vector<Exponents> lm;

    auto normalize = [&](MPoly& g, std::vector<MPoly>& rep) {
        RatFunc lc = g.leading_term(order).second;
        if (!lc.is_one()) {
            record_suspicious(gb.suspicious, lc);
            g = g.scalar_div(lc);
            for (auto& r : rep) r = r.scalar_div(lc);
        }
    };

    std::set<PairEntry, PairLess> pairs{PairLess{&gb.order}};
    std::set<std::pair<int, int>> pending;
    auto add_pairs_for = [&](int jnew) {
        for (int i = 0; i < jnew; ++i) {
            // the S-polynomial of two monomials is identically zero
            if (G[i].num_terms() == 1 && G[jnew].num_terms() == 1) continue;
            pairs.insert({exp_lcm(lm[i], lm[jnew]), i, jnew});
            pending.insert({i, jnew});
        }
    };

    for (size_t j = 0; j < ngen; ++j) {
        const MPoly& g0 = ideal.generators[j];
        if (g0.is_zero()) continue;
        MPoly g = g0;
        std::vector<MPoly> rep(ngen, MPoly(gb.n));
        rep[j] = MPoly::constant(gb.n, RatFunc(1));
        normalize(g, rep);
        G.push_back(std::move(g));
        R.push_back(std::move(rep));
        lm.push_back(G.back().leading_monomial(order));
        add_pairs_for(static_cast<int>(G.size()) - 1);
    }

    long processed = 0;
    while (!pairs.empty()) {
        PairEntry pe = *pairs.begin();
        pairs.erase(pairs.begin());
        pending.erase({pe.i, pe.j});

        if (exp_coprime(lm[pe.i], lm[pe.j])) continue;  // product criterion
        bool chained = false;
        for (int k = 0; k < (int)G.size(); ++k) {  // chain criterion
            if (k == pe.i || k == pe.j) continue;
            if (!divides(lm[k], pe.lcm)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(pe.i, k)) && !pending.count(key(pe.j, k))) {
                chained = true;
                break;
            }
        }
        if (chained) continue;

        Exponents ui = exp_div(pe.lcm, lm[pe.i]);
        Exponents uj = exp_div(pe.lcm, lm[pe.j]);
        MPoly S = G[pe.i].mul_monomial(ui, RatFunc(1)) - G[pe.j].mul_monomial(uj, RatFunc(1));
        if (S.is_zero()) continue;

        if (++processed > budget)
            throw budget_exceeded_error("S-pair budget exceeded (" + std::to_string(budget) +
                                        "); set ABMOD_SPAIR_BUDGET to raise");

        std::vector<const MPoly*> view;
        for (const auto& g : G) view.push_back(&g);
        DivisionResult d = divide_against(S, view, order);
        if (d.normal_form.is_zero()) continue;

        std::vector<MPoly> rep(ngen, MPoly(gb.n));
        for (size_t j2 = 0; j2 < ngen; ++j2) {
            rep[j2] = R[pe.i][j2].mul_monomial(ui, RatFunc(1)) -
                      R[pe.j][j2].mul_monomial(uj, RatFunc(1));
            for (size_t k = 0; k < G.size(); ++k)
                if (!d.cofactors[k].is_zero()) rep[j2] -= d.cofactors[k] * R[k][j2];
        }
        MPoly g = std::move(d.normal_form);
        normalize(g, rep);
        G.push_back(std::move(g));
        R.push_back(std::move(rep));
        lm.push_back(G.back().leading_monomial(order));
        add_pairs_for(static_cast<int>(G.size()) - 1);
    }

    // minimalize: keep only elements whose leading monomial is not divisible by
    // another kept one; process by ascending leading monomial
    std::vector<int> idx(G.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int c = order.compare(lm[a], lm[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<int> kept;
    for (int i : idx) {
        bool dominated = false;
        for (int k : kept)
            if (divides(lm[k], lm[i])) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(i);
    }

    std::vector<MPoly> B;
    std::vector<std::vector<MPoly>> BR;
    for (int i : kept) {
        B.push_back(G[i]);
        BR.push_back(R[i]);
    }

    // tail-reduce to the reduced basis
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 100) {
        changed = false;
        for (size_t i = 0; i < B.size(); ++i) {
            std::vector<const MPoly*> others;
            std::vector<size_t> omap;
            for (size_t k = 0; k < B.size(); ++k)
                if (k != i) {
                    others.push_back(&B[k]);
                    omap.push_back(k);
                }
            DivisionResult d = divide_against(B[i], others, order);
            if (d.normal_form == B[i]) continue;
            changed = true;
            for (size_t k = 0; k < others.size(); ++k)
                if (!d.cofactors[k].is_zero())
                    for (size_t j2 = 0; j2 < ngen; ++j2)
                        BR[i][j2] -= d.cofactors[k] * BR[omap[k]][j2];
            B[i] = std::move(d.normal_form);
        }
    }
    if (guard >= 100) throw internal_error("interreduction failed to stabilize");

    gb.basis = std::move(B);
    gb.reps = std::move(BR);
    // record denominators of the final basis coefficients
    for (const auto& g : gb.basis)
        for (const auto& [e, c] : g.terms())
            record_suspicious(gb.suspicious, RatFunc(c.den()));
    return gb;
}

MembershipResult membership(const MPoly& p, const GroebnerBasis& gb) {
    MembershipResult r;
    DivisionResult d = gb.divide(p);
    r.member = d.normal_form.is_zero();
    if (r.member) r.certificate = gb.cofactors_to_origin(d);
    return r;
}

bool ideal_inclusion(const Ideal& A, const GroebnerBasis& gbB) {
    for (const auto& g : A.generators)
        if (!gbB.normal_form(g).is_zero()) return false;
    return true;
}

std::optional<Staircase> staircase(const GroebnerBasis& gb) {
    const int n = gb.n;
    std::vector<Exponents> lms;
    for (const auto& g : gb.basis) lms.push_back(g.leading_monomial(gb.order));
    for (const auto& m : lms)
        if (total_degree(m) == 0) return Staircase{};  // unit ideal
    if (lms.empty()) {
        if (n == 0) return Staircase{};
        return std::nullopt;  // zero ideal, infinite quotient
    }
    std::vector<int> bound(n, -1);
    for (const auto& m : lms) {
        for (int v = 0; v < n; ++v) {
            if (m[v] == total_degree(m) && m[v] > 0) {
                if (bound[v] < 0 || m[v] < bound[v]) bound[v] = m[v];
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (bound[v] < 0) return std::nullopt;

    Staircase st;
    Exponents e(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            for (const auto& m : lms)
                if (divides(m, e)) return;
            st.monomials.push_back(e);
            return;
        }
        for (int v = 0; v < bound[pos]; ++v) {
            e[pos] = v;
            rec(pos + 1);
        }
        e[pos] = 0;
    };
    rec(0);
    std::sort(st.monomials.begin(), st.monomials.end(),
              [&](const Exponents& a, const Exponents& b) { return gb.order.less(a, b); });
    for (size_t i = 0; i < st.monomials.size(); ++i) st.index[st.monomials[i]] = (int)i;
    return st;
}

std::optional<long> quotient_dimension(const GroebnerBasis& gb) {
    auto st = staircase(gb);
    if (!st) return std::nullopt;
    return (long)st->size();
}

}  // namespace abmod
