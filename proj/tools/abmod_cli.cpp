#include <abmod/report.hpp>
#include <abmod/errors.hpp>
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

namespace {

using namespace abmod;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw abmod::error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw abmod::error("cannot write " + out_path);
    out << text;
}

struct CommonOpts {
    std::string file;
    std::string out;
    int b_order = 0;         // 0 = keep document value
    std::string order;       // empty = keep document value
    std::string samples;     // comma list overriding the document
};

FamilySpec load_spec(const CommonOpts& o) {
    FamilySpec spec = parse_family(read_file(o.file));
    if (o.b_order > 0) spec.b_order = o.b_order;
    if (!o.order.empty()) spec.order = o.order;
    if (!o.samples.empty()) {
        spec.samples.clear();
        std::string cur;
        std::istringstream in(o.samples);
        while (std::getline(in, cur, ',')) {
            auto q = parse_rat(cur);
            if (!q) throw abmod::error("invalid sample '" + cur + "'");
            spec.samples.push_back(*q);
        }
    }
    return spec;
}

FamilyContext context_of(const FamilySpec& spec) {
    return make_family_context(spec.parse_f(), spec.b_order, spec.monomial_order(),
                               default_spair_budget(), true, spec.variables);
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_samples = true) {
    cmd->add_option("file", o.file, "family description file")->required();
    cmd->add_option("--out", o.out, "write the report to this path");
    cmd->add_option("--b-order", o.b_order, "override the b-adic truncation order");
    cmd->add_option("--order", o.order, "monomial order (grevlex or grlex)")
        ->check(CLI::IsMember({"grevlex", "grlex"}));
    if (with_samples) cmd->add_option("--samples", o.samples, "comma-separated t samples");
}

int run(int argc, char** argv) {
    CLI::App app{"exact (a,b)-module engine for one-parameter hypersurface families"};
    app.require_subcommand(1);

    CommonOpts analyze_o, basis_o, matrix_o, lattice_o, crit_o;
    std::string matrix_op = "a";
    int crit_k = 1;
    std::string verify_out;

    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report (JSON)");
    add_common(analyze_cmd, analyze_o);

    auto* basis_cmd = app.add_subcommand("basis", "staircase basis and Milnor number");
    add_common(basis_cmd, basis_o);

    auto* matrix_cmd = app.add_subcommand("matrix", "operator matrix on the b-adic basis");
    add_common(matrix_cmd, matrix_o);
    matrix_cmd->add_option("--op", matrix_op, "operator: a or nabla")
        ->check(CLI::IsMember({"a", "nabla"}));

    auto* lattice_cmd = app.add_subcommand("lattice-g", "P, the saturated lattice G and kernel directions");
    add_common(lattice_cmd, lattice_o);

    auto* crit_cmd = app.add_subcommand("check-criterion", "stability criterion for a given k");
    add_common(crit_cmd, crit_o);
    crit_cmd->add_option("--k", crit_k, "power of the maximal ideal");

    auto* verify_cmd =
        app.add_subcommand("verify-paper-examples", "re-derive the reference worked examples");
    verify_cmd->add_option("--out", verify_out, "write the fixture table as JSON");

    CLI11_PARSE(app, argc, argv);

    if (analyze_cmd->parsed()) {
        FamilySpec spec = load_spec(analyze_o);
        write_out(dump_report(analyze_report(spec)), analyze_o.out);
    } else if (basis_cmd->parsed()) {
        FamilySpec spec = load_spec(basis_o);
        FamilyContext ctx = context_of(spec);
        nlohmann::json j;
        j["family"] = family_json(spec);
        j["staircase"] = staircase_json(ctx);
        j["mu"] = ctx.mu;
        nlohmann::json bad = nlohmann::json::array();
        for (const auto& r : ctx.bad_t) bad.push_back(rat_str(r));
        j["bad_t"] = std::move(bad);
        nlohmann::json gbj = nlohmann::json::array();
        for (const auto& g : ctx.gb.basis) gbj.push_back(g.str(spec.variables));
        j["groebner_basis"] = std::move(gbj);
        write_out(dump_report(j), basis_o.out);
    } else if (matrix_cmd->parsed()) {
        FamilySpec spec = load_spec(matrix_o);
        FamilyContext ctx = context_of(spec);
        nlohmann::json j = matrix_json(ctx, matrix_op == "a" ? Op::a : Op::nabla);
        j["family"] = family_json(spec);
        write_out(dump_report(j), matrix_o.out);
    } else if (lattice_cmd->parsed()) {
        FamilySpec spec = load_spec(lattice_o);
        FamilyContext ctx = context_of(spec);
        nlohmann::json j;
        j["family"] = family_json(spec);
        j["P"] = lattice_json(ctx, compute_P(ctx));
        SaturationConfirmation sat = saturate_G_confirmed(ctx);
        nlohmann::json g = lattice_json(ctx, sat.result.G);
        g["stabilization_step"] = sat.result.steps;
        g["low_blocks_confirmed"] = sat.confirmed;
        nlohmann::json dirs = nlohmann::json::array();
        for (const auto& d : kernel_nabla_mod_b(ctx, sat.result.G))
            dirs.push_back({{"monomial", ctx.monomial_str(d.monomial_index)},
                            {"coefficient", d.coefficient.str()}});
        g["kernel_directions"] = std::move(dirs);
        j["G"] = std::move(g);
        write_out(dump_report(j), lattice_o.out);
    } else if (crit_cmd->parsed()) {
        FamilySpec spec = load_spec(crit_o);
        FamilyContext ctx = context_of(spec);
        nlohmann::json j = criterion_json(estim_criterion(ctx, crit_k), spec.variables);
        j["family"] = family_json(spec);
        write_out(dump_report(j), crit_o.out);
    } else if (verify_cmd->parsed()) {
        auto rows = run_reference_fixtures();
        bool all = true;
        size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.id.size());
        for (const auto& r : rows) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id
                      << std::string(width + 2 - r.id.size(), ' ') << r.description << "\n";
            all = all && r.pass;
        }
        std::cout << (all ? "all fixtures passed" : "FIXTURE FAILURES PRESENT") << " ("
                  << rows.size() << " rows)\n";
        if (!verify_out.empty()) {
            nlohmann::json j;
            j["fixtures"] = fixtures_json(rows);
            write_out(dump_report(j), verify_out);
        }
        if (!all) return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const abmod::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const abmod::unsupported_family_error& e) {
        std::cerr << "unsupported family: " << e.what() << "\n";
        return 2;
    } catch (const abmod::budget_exceeded_error& e) {
        std::cerr << "computation cap: " << e.what() << "\n";
        return 3;
    } catch (const abmod::internal_error& e) {
        std::cerr << "internal cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
