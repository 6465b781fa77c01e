// hofa: reproducible experiment runner for the finite-field higher-order
// Fourier analysis library and the local-code harness. One subcommand per
// invocation; every run writes a JSON report with its inputs, seed, outputs
// and the pass/fail of any asserted property. Exit codes: 0 pass, 1 property
// failure, 2 configuration or budget error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hofa/factors.hpp"
#include "hofa/nets.hpp"
#include "hofa/serialize.hpp"

namespace {

using namespace hofa;
using Json = nlohmann::json;

struct FieldOpts {
    int p = 2;
    int t = 1;
    std::vector<int> modulus;

    FieldPtr make() const {
        if (!modulus.empty()) return Field::make(p, t, modulus);
        return Field::make(p, t);
    }
};

void add_field_options(CLI::App* cmd, FieldOpts& opts) {
    cmd->add_option("--p", opts.p, "field characteristic (prime)");
    cmd->add_option("--t", opts.t, "extension degree");
    cmd->add_option("--modulus", opts.modulus, "modulus polynomial c_0..c_t (canonical if omitted)");
}

bool g_csv = false;

void flatten_csv(const Json& node, const std::string& prefix, std::ostream& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            flatten_csv(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            flatten_csv(node.at(i), prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << "," << node.dump() << "\n";
    }
}

int emit(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write report to " + out_path);
        out << text;
        if (g_csv) {
            std::ofstream csv(out_path + ".csv", std::ios::binary);
            csv << "key,value\n";
            flatten_csv(report.at("outputs"), "", csv);
        }
    }
    return report.at("pass").get<bool>() ? 0 : 1;
}

Json summary_stats(const std::vector<double>& xs) {
    if (xs.empty()) return Json{{"count", 0}};
    double mn = xs.front(), mx = xs.front(), sum = 0;
    for (double x : xs) {
        mn = std::min(mn, x);
        mx = std::max(mx, x);
        sum += x;
    }
    return Json{{"count", xs.size()}, {"min", mn}, {"max", mx}, {"mean", sum / static_cast<double>(xs.size())}};
}

DenseFn load_dense_fn(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    Json j;
    in >> j;
    return dense_fn_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field higher-order Fourier analysis & local-code harness"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML config file; flags override file values");

    unsigned threads = 0;
    app.add_option("--threads", threads, "cap worker threads (0 = hardware concurrency)");

    std::string out_path;
    app.add_option("--out,-o", out_path, "report path (stdout if omitted)");
    app.add_flag("--csv", g_csv, "also write <out>.csv with the flattened outputs");

    // ---- gowers-norm ----------------------------------------------------
    auto* gn = app.add_subcommand("gowers-norm", "exact or Monte-Carlo Gowers norm of a table");
    FieldOpts gn_field;
    add_field_options(gn, gn_field);
    int gn_n = 1, gn_r = 2;
    std::int64_t gn_budget = 0, gn_samples = 0;
    std::uint64_t gn_seed = 0;
    std::string gn_input, gn_source = "constant";
    double gn_const_re = 1.0, gn_const_im = 0.0;
    gn->add_option("--n", gn_n, "dimension");
    gn->add_option("--r", gn_r, "norm order");
    gn->add_option("--budget", gn_budget, "maximum exact term count")->required();
    gn->add_option("--fn", gn_source, "input source: constant | random | file")
        ->check(CLI::IsMember({"constant", "random", "file"}));
    gn->add_option("--const-re", gn_const_re, "constant real part");
    gn->add_option("--const-im", gn_const_im, "constant imaginary part");
    gn->add_option("--input", gn_input, "JSON table file (for --fn file)");
    gn->add_option("--samples", gn_samples, "Monte-Carlo samples (0 = exact)");
    gn->add_option("--seed", gn_seed, "seed (required for random input or Monte-Carlo)");

    // ---- von-neumann ----------------------------------------------------
    auto* vn = app.add_subcommand("von-neumann", "product-over-linear-forms bound check");
    FieldOpts vn_field;
    add_field_options(vn, vn_field);
    int vn_n = 1, vn_m = 2, vn_forms = 3;
    std::int64_t vn_budget = 0;
    std::uint64_t vn_seed = 0;
    vn->add_option("--n", vn_n, "dimension");
    vn->add_option("--m", vn_m, "variables per form");
    vn->add_option("--forms", vn_forms, "number of forms (k+1)");
    vn->add_option("--budget", vn_budget, "maximum exact term count")->required();
    vn->add_option("--seed", vn_seed, "seed for the random system and functions")->required();

    // ---- ncpoly-enum -----------------------------------------------------
    auto* ne = app.add_subcommand("ncpoly-enum", "enumerate degree-<r torus polynomials");
    FieldOpts ne_field;
    add_field_options(ne, ne_field);
    int ne_n = 1, ne_r = 2;
    std::int64_t ne_budget = 0;
    bool ne_certify = false;
    ne->add_option("--n", ne_n, "dimension");
    ne->add_option("--r", ne_r, "degree bound (exclusive)");
    ne->add_option("--budget", ne_budget, "maximum coefficient-space size")->required();
    ne->add_flag("--certify", ne_certify, "exhaustively certify each polynomial's degree");

    // ---- decompose -------------------------------------------------------
    auto* dc = app.add_subcommand("decompose", "energy-increment decomposition of a bounded table");
    FieldOpts dc_field;
    add_field_options(dc, dc_field);
    int dc_n = 2, dc_r = 2;
    double dc_eps = 0.3, dc_rho = 0.05;
    std::int64_t dc_budget = 0;
    std::uint64_t dc_seed = 0;
    std::string dc_input;
    dc->add_option("--n", dc_n, "dimension");
    dc->add_option("--r", dc_r, "norm order");
    dc->add_option("--eps", dc_eps, "residual target");
    dc->add_option("--rho-min", dc_rho, "correlation floor");
    dc->add_option("--budget", dc_budget, "maximum exact term count")->required();
    dc->add_option("--seed", dc_seed, "seed for the random bounded input")->required();
    dc->add_option("--input", dc_input, "JSON table file (overrides the random input)");

    // ---- net-build -------------------------------------------------------
    auto* nb = app.add_subcommand("net-build", "materialize the U^r net at complexity k");
    FieldOpts nb_field;
    add_field_options(nb, nb_field);
    int nb_n = 1, nb_r = 2, nb_k = 1;
    double nb_eps = 0.5;
    std::int64_t nb_budget = 0;
    std::string nb_dump;
    nb->add_option("--n", nb_n, "dimension");
    nb->add_option("--r", nb_r, "norm order");
    nb->add_option("--k", nb_k, "factor complexity");
    nb->add_option("--eps", nb_eps, "lattice spacing");
    nb->add_option("--budget", nb_budget, "maximum materialized elements")->required();
    nb->add_option("--dump-net", nb_dump, "also write the full net (polys + tau tables) here");

    // ---- net-cover -------------------------------------------------------
    auto* nc = app.add_subcommand("net-cover", "projection-distance covering check");
    FieldOpts nc_field;
    add_field_options(nc, nc_field);
    int nc_n = 1, nc_r = 2, nc_k = 1;
    double nc_eps = 0.4;
    std::int64_t nc_budget = 0, nc_trials = 200;
    std::uint64_t nc_seed = 0;
    nc->add_option("--n", nc_n, "dimension");
    nc->add_option("--r", nc_r, "norm order");
    nc->add_option("--k", nc_k, "factor complexity");
    nc->add_option("--eps", nc_eps, "lattice spacing");
    nc->add_option("--trials", nc_trials, "random bounded functions to project");
    nc->add_option("--budget", nc_budget, "maximum materialized elements")->required();
    nc->add_option("--seed", nc_seed, "seed")->required();

    // ---- rm-lcc-sim ------------------------------------------------------
    auto* rl = app.add_subcommand("rm-lcc-sim", "line-corrector success under iid corruption");
    FieldOpts rl_field{2, 2, {}};
    add_field_options(rl, rl_field);
    int rl_n = 2, rl_d = 2;
    double rl_delta = 0.05, rl_floor = -1.0;
    std::int64_t rl_trials = 10000;
    std::uint64_t rl_seed = 0;
    rl->add_option("--n", rl_n, "dimension");
    rl->add_option("--d", rl_d, "polynomial degree");
    rl->add_option("--delta", rl_delta, "corruption rate");
    rl->add_option("--trials", rl_trials, "Monte-Carlo trials");
    rl->add_option("--success-floor", rl_floor, "pass threshold (default 1 - 3.5*delta)");
    rl->add_option("--seed", rl_seed, "seed")->required();

    // ---- blr-ltc-sim -----------------------------------------------------
    auto* bl = app.add_subcommand("blr-ltc-sim", "exhaustive linearity-test acceptance");
    int bl_n = 3;
    std::int64_t bl_budget = 0;
    bl->add_option("--n", bl_n, "dimension");
    bl->add_option("--budget", bl_budget, "maximum enumerated triples")->required();

    // ---- gowers-separation -----------------------------------------------
    auto* gs = app.add_subcommand("gowers-separation", "pairwise max-coordinate U^r distances");
    FieldOpts gs_field;
    add_field_options(gs, gs_field);
    std::string gs_code = "hadamard";
    int gs_n = 2, gs_d = 1, gs_r = 2;
    std::int64_t gs_budget = 0;
    gs->add_option("--code", gs_code, "code family: hadamard | reed_muller")
        ->check(CLI::IsMember({"hadamard", "reed_muller"}));
    gs->add_option("--n", gs_n, "dimension");
    gs->add_option("--d", gs_d, "Reed-Muller degree");
    gs->add_option("--r", gs_r, "norm order");
    gs->add_option("--budget", gs_budget, "maximum exact term count")->required();

    // ---- distance-audit --------------------------------------------------
    auto* da = app.add_subcommand("distance-audit", "certify a line-corrected code, audit min distance");
    FieldOpts da_field{2, 2, {}};
    add_field_options(da, da_field);
    int da_n = 2, da_d = 2;
    double da_delta = 0.1, da_tau = 0.35;
    std::int64_t da_trials = 4000, da_budget = 0;
    std::uint64_t da_seed = 0;
    da->add_option("--n", da_n, "dimension");
    da->add_option("--d", da_d, "polynomial degree");
    da->add_option("--delta", da_delta, "corruption rate");
    da->add_option("--tau", da_tau, "failure budget (must be < 1/2)");
    da->add_option("--trials", da_trials, "certification trials");
    da->add_option("--budget", da_budget, "maximum pairwise scan size")->required();
    da->add_option("--seed", da_seed, "seed")->required();

    // ---- hybrid-ltc ------------------------------------------------------
    auto* hy = app.add_subcommand("hybrid-ltc", "random-midpoint tester experiment");
    int hy_n = 4;
    std::size_t hy_f = 1, hy_g = 2;
    std::int64_t hy_trials = 400, hy_affine = 16;
    std::uint64_t hy_seed = 0;
    hy->add_option("--n", hy_n, "dimension");
    hy->add_option("--f-index", hy_f, "first codeword index");
    hy->add_option("--g-index", hy_g, "second codeword index");
    hy->add_option("--trials", hy_trials, "sampled midpoint words");
    hy->add_option("--affine-samples", hy_affine, "affine maps per midpoint");
    hy->add_option("--seed", hy_seed, "seed")->required();

    // ---- validate-report --------------------------------------------------
    auto* vr = app.add_subcommand("validate-report", "check a report against the schema");
    std::string vr_input;
    vr->add_option("--input", vr_input, "report path")->required();

    for (CLI::App* sub : {gn, vn, ne, dc, nb, nc, rl, bl, gs, da, hy, vr}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // exit 2 on any config error, 0 for --help
    }
    set_max_threads(threads);

    try {
        if (gn->parsed()) {
            if ((gn_source == "random" || gn_samples > 0) && gn->count("--seed") == 0)
                throw std::runtime_error("--seed is required for random input or Monte-Carlo");
            PointSpace dom(gn_field.make(), gn_n);
            DenseFn f = DenseFn::constant(dom, {gn_const_re, gn_const_im});
            if (gn_source == "random") {
                Rng rng(gn_seed);
                f = random_bounded(dom, rng);
            } else if (gn_source == "file") {
                f = load_dense_fn(gn_input);
            }
            Json params{{"field", field_to_json(dom.field())},
                        {"n", gn_n},
                        {"r", gn_r},
                        {"fn", gn_source},
                        {"budget", gn_budget},
                        {"samples", gn_samples}};
            Json outputs;
            if (gn_samples > 0) {
                GowersEstimate est = gowers_norm_mc(f, gn_r, gn_samples, gn_seed);
                outputs = {{"norm", est.norm}, {"power", est.power}, {"power_stderr", est.power_stderr}};
            } else {
                outputs = {{"norm", gowers_norm_exact(f, gn_r, gn_budget)}};
            }
            return emit(make_report("gowers-norm", gn_seed, params, outputs, true), out_path);
        }

        if (vn->parsed()) {
            FieldPtr fld = vn_field.make();
            PointSpace dom(fld, vn_n);
            Rng rng(vn_seed);
            // grow the system form by form, rejecting zero or proportional draws
            std::vector<LinearForm> forms;
            int attempts = 0;
            while (static_cast<int>(forms.size()) < vn_forms) {
                if (++attempts > 100000) throw std::runtime_error("cannot draw a valid linear system");
                LinearForm form;
                for (int j = 0; j < vn_m; ++j)
                    form.weights.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(fld->q()))));
                if (form.is_zero()) continue;
                bool proportional = false;
                for (const auto& prev : forms)
                    for (int lambda = 1; lambda < fld->q() && !proportional; ++lambda) {
                        bool match = true;
                        for (int j = 0; j < vn_m && match; ++j)
                            match = prev.weights[static_cast<std::size_t>(j)] ==
                                    fld->mul(lambda, form.weights[static_cast<std::size_t>(j)]);
                        proportional = match;
                    }
                if (!proportional) forms.push_back(std::move(form));
            }
            LinearSystem system(fld, forms);
            std::vector<DenseFn> functions;
            for (int i = 0; i < vn_forms; ++i) functions.push_back(random_bounded(dom, rng));
            InequalityCheck res = von_neumann_check(system, functions, vn_budget);
            Json form_list = Json::array();
            for (const auto& form : system.forms()) form_list.push_back(form.weights);
            Json params{{"field", field_to_json(*fld)},
                        {"n", vn_n},
                        {"m", vn_m},
                        {"forms", form_list},
                        {"budget", vn_budget}};
            Json outputs{{"lhs", res.lhs}, {"bound", res.bound}, {"holds", res.holds}};
            return emit(make_report("von-neumann", vn_seed, params, outputs, res.holds), out_path);
        }

        if (ne->parsed()) {
            PointSpace dom(ne_field.make(), ne_n);
            auto polys = enumerate_ncpolys(dom, ne_r, ne_budget);
            double log_p_count = std::log(static_cast<double>(polys.size())) /
                                 std::log(static_cast<double>(dom.field().p()));
            std::int64_t bound_log_p = ncpoly_count_bound_log_p(ne_n, ne_field.t, ne_r);
            bool pass = log_p_count <= static_cast<double>(bound_log_p) + 1e-9;
            bool certified = true;
            if (ne_certify)
                for (const auto& poly : polys)
                    if (!degree_certify(poly, ne_r, ne_budget)) certified = false;
            pass = pass && certified;
            Json params{{"field", field_to_json(dom.field())},
                        {"n", ne_n},
                        {"r", ne_r},
                        {"budget", ne_budget},
                        {"certify", ne_certify}};
            Json outputs{{"count", polys.size()},
                         {"slot_count", ncpoly_slot_count(dom, ne_r)},
                         {"count_bound_log_p", bound_log_p},
                         {"all_certified", certified}};
            return emit(make_report("ncpoly-enum", 0, params, outputs, pass), out_path);
        }

        if (dc->parsed()) {
            PointSpace dom(dc_field.make(), dc_n);
            DenseFn f = DenseFn::zero(dom);
            if (!dc_input.empty()) {
                f = load_dense_fn(dc_input);
            } else {
                Rng rng(dc_seed);
                f = random_bounded(dom, rng);
            }
            DecompositionResult res = decompose(f, dc_r, dc_eps, dc_rho, dc_budget);
            bool pass = res.status == DecomposeStatus::Converged && res.residual_norm <= dc_eps + 1e-9;
            Json params{{"field", field_to_json(dom.field())},
                        {"n", dc_n},
                        {"r", dc_r},
                        {"eps", dc_eps},
                        {"rho_min", dc_rho},
                        {"budget", dc_budget}};
            Json outputs{
                {"status", res.status == DecomposeStatus::Converged ? "converged" : "oracle-exhausted"},
                {"iterations", res.iterations},
                {"residual_norm", res.residual_norm},
                {"complexity", res.factor.complexity()},
                {"correlation_trace", res.correlation_trace}};
            return emit(make_report("decompose", dc_seed, params, outputs, pass), out_path);
        }

        if (nb->parsed()) {
            PointSpace dom(nb_field.make(), nb_n);
            NetSizeBound bound = net_size_bound(nb_field.p, nb_field.t, nb_n, nb_r, nb_eps, nb_k);
            Json params{{"field", field_to_json(dom.field())}, {"n", nb_n}, {"r", nb_r},
                        {"eps", nb_eps},                       {"k", nb_k}, {"budget", nb_budget}};
            try {
                NetSpec net = build_net(dom, nb_r, nb_eps, nb_k, nb_budget);
                bool pass = std::log(static_cast<double>(net.elements.size())) <= bound.log_e + 1e-9;
                if (!nb_dump.empty()) {
                    std::ofstream dump(nb_dump, std::ios::binary);
                    if (!dump) throw std::runtime_error("cannot write net to " + nb_dump);
                    dump << net_to_json(net).dump(2) << '\n';
                }
                Json outputs{{"materialized", true},
                             {"net_size", net.elements.size()},
                             {"lattice_size", net.lattice.size()},
                             {"poly_count", net.polys.size()},
                             {"bound_log_e", bound.log_e},
                             {"bound_value", bound.value()}};
                return emit(make_report("net-build", 0, params, outputs, pass), out_path);
            } catch (const BudgetExceeded&) {
                // counts only: the bound arithmetic is still meaningful
                Json outputs{{"materialized", false},
                             {"bound_log_e", bound.log_e},
                             {"bound_value", bound.value()}};
                return emit(make_report("net-build", 0, params, outputs, true), out_path);
            }
        }

        if (nc->parsed()) {
            PointSpace dom(nc_field.make(), nc_n);
            NetSpec net = build_net(dom, nc_r, nc_eps, nc_k, nc_budget);
            CoverReport report = cover_check(net, nc_trials, nc_seed, nc_budget);
            Json params{{"field", field_to_json(dom.field())},
                        {"n", nc_n},
                        {"r", nc_r},
                        {"eps", nc_eps},
                        {"k", nc_k},
                        {"trials", nc_trials},
                        {"budget", nc_budget}};
            Json outputs{{"net_size", net.elements.size()},
                         {"max_distance", report.max_distance},
                         {"threshold", 3.0 * nc_eps},
                         {"chain_checked", report.chain_checked},
                         {"chain_ok", report.chain_ok}};
            return emit(make_report("net-cover", nc_seed, params, outputs, report.pass && report.chain_ok),
                        out_path);
        }

        if (rl->parsed()) {
            PointSpace dom(rl_field.make(), rl_n);
            CodeSpec code = reed_muller(dom, rl_d);
            code.lcc = rm_line_corrector(dom, rl_d);
            LccSimReport sim = lcc_simulate(code, rl_delta, rl_trials, rl_seed);
            double floor = rl_floor >= 0.0 ? rl_floor : 1.0 - 3.5 * rl_delta;
            bool pass = sim.success >= floor;
            Json params{{"field", field_to_json(dom.field())},
                        {"n", rl_n},
                        {"d", rl_d},
                        {"delta", rl_delta},
                        {"trials", rl_trials},
                        {"success_floor", floor}};
            Json outputs{{"success", sim.success},
                         {"ci_low", sim.ci_low},
                         {"ci_high", sim.ci_high},
                         {"codewords", code.codewords.size()}};
            return emit(make_report("rm-lcc-sim", rl_seed, params, outputs, pass), out_path);
        }

        if (bl->parsed()) {
            PointSpace dom(Field::make(2, 1), bl_n);
            checked_pow(dom.size(), 2, bl_budget, "blr-ltc-sim");
            CodeSpec code = hadamard_blr(dom);
            double min_acceptance = 1.0;
            for (const auto& cw : code.codewords)
                min_acceptance = std::min(min_acceptance, ltc_acceptance_exact(code, cw));
            // fixed far word: the product of the first two coordinates
            Eigen::ArrayXi syms(static_cast<Eigen::Index>(dom.size()));
            for (Point x = 0; x < dom.size(); ++x)
                syms[static_cast<Eigen::Index>(x)] =
                    (bl_n >= 2 ? (dom.component(x, 0) & dom.component(x, 1)) : 0) + 1;
            Word far(dom, 2, syms);
            double far_acc = ltc_acceptance_exact(code, far);
            double far_dist = 2.0;
            for (const auto& cw : code.codewords) far_dist = std::min(far_dist, hamming(far, cw));
            bool pass = min_acceptance == 1.0;
            Json params{{"n", bl_n}, {"budget", bl_budget}};
            Json outputs{{"codeword_min_acceptance", min_acceptance},
                         {"far_word_acceptance", far_acc},
                         {"far_word_distance", far_dist},
                         {"codewords", code.codewords.size()}};
            return emit(make_report("blr-ltc-sim", 0, params, outputs, pass), out_path);
        }

        if (gs->parsed()) {
            PointSpace dom(gs_field.make(), gs_n);
            CodeSpec code = gs_code == "hadamard" ? hadamard_blr(dom) : reed_muller(dom, gs_d);
            Eigen::MatrixXd sep = gowers_separation(code, gs_r, gs_budget);
            double min_sep = 2.0, max_sep = 0.0;
            for (Eigen::Index i = 0; i < sep.rows(); ++i)
                for (Eigen::Index j = i + 1; j < sep.cols(); ++j) {
                    min_sep = std::min(min_sep, sep(i, j));
                    max_sep = std::max(max_sep, sep(i, j));
                }
            bool pass = min_sep > 0.0;
            Json params{{"field", field_to_json(dom.field())}, {"code", gs_code}, {"n", gs_n},
                        {"d", gs_d},                           {"r", gs_r},       {"budget", gs_budget}};
            Json outputs{{"codewords", code.codewords.size()},
                         {"min_separation", min_sep},
                         {"max_separation", max_sep}};
            return emit(make_report("gowers-separation", 0, params, outputs, pass), out_path);
        }

        if (da->parsed()) {
            PointSpace dom(da_field.make(), da_n);
            CodeSpec code = reed_muller(dom, da_d);
            code.lcc = rm_line_corrector(dom, da_d);
            auto cert = certify_lcc(code, da_delta, da_tau, da_trials, da_seed);
            Json params{{"field", field_to_json(dom.field())},
                        {"n", da_n},
                        {"d", da_d},
                        {"delta", da_delta},
                        {"tau", da_tau},
                        {"trials", da_trials},
                        {"budget", da_budget}};
            if (!cert) {
                Json outputs{{"certified", false}};
                return emit(make_report("distance-audit", da_seed, params, outputs, false), out_path);
            }
            DistanceAudit audit = lcc_distance_audit(code, da_budget);
            Json outputs{{"certified", true},
                         {"measured_success", cert->measured_success},
                         {"ci_low", cert->ci_low},
                         {"ci_high", cert->ci_high},
                         {"min_distance", audit.min_dist},
                         {"threshold", 2.0 * da_delta},
                         {"passes", audit.passes}};
            return emit(make_report("distance-audit", da_seed, params, outputs, audit.passes), out_path);
        }

        if (hy->parsed()) {
            PointSpace dom(Field::make(2, 1), hy_n);
            CodeSpec code = hadamard_blr(dom);
            HybridReport rep = ltc_hybrid_experiment(code, hy_f, hy_g, hy_seed, hy_trials, hy_affine);
            double hhat_tol = 2.0 / std::sqrt(static_cast<double>(std::max<std::int64_t>(hy_trials, 1)));
            bool pass = rep.hhat_deviation <= hhat_tol;
            Json params{{"n", hy_n},
                        {"f_index", hy_f},
                        {"g_index", hy_g},
                        {"trials", hy_trials},
                        {"affine_samples", hy_affine}};
            Json outputs{{"acceptance", summary_stats(rep.acceptance)},
                         {"distance", summary_stats(rep.distance)},
                         {"mean_acceptance", rep.mean_acceptance},
                         {"mean_distance", rep.mean_distance},
                         {"hhat_deviation", rep.hhat_deviation},
                         {"hhat_tolerance", hhat_tol}};
            return emit(make_report("hybrid-ltc", hy_seed, params, outputs, pass), out_path);
        }

        if (vr->parsed()) {
            std::ifstream in(vr_input);
            if (!in) {
                std::cerr << "error: cannot open " << vr_input << "\n";
                return 2;
            }
            ReportValidation v = validate_report_file(vr_input);
            if (!v.ok) {
                std::cerr << "invalid report: " << v.diagnostic << "\n";
                return 1;
            }
            std::cout << "valid\n";
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
