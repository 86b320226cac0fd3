#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <random>
#include <stdexcept>
#include <sstream>

#include "dimer/asymptotics.hpp"
#include "dimer/errors.hpp"
#include "dimer/fms.hpp"
#include "dimer/kernel.hpp"

namespace dimer::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

void emit(const RunConfig& cfg, const std::vector<Json>& rows, std::ostream& out) {
    if (cfg.format == "csv") {
        if (rows.empty()) return;
        // Ordered union of keys: rows of mixed regimes stay column-aligned.
        std::vector<std::string> keys;
        for (const Json& r : rows)
            for (auto it = r.begin(); it != r.end(); ++it)
                if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
                    keys.push_back(it.key());
        bool first = true;
        for (const std::string& k : keys) {
            if (!first) out << ',';
            out << k;
            first = false;
        }
        out << '\n';
        for (const Json& r : rows) {
            first = true;
            for (const std::string& k : keys) {
                if (!first) out << ',';
                first = false;
                if (!r.contains(k)) continue;
                const auto& v = r.at(k);
                if (v.is_number_float())
                    out << fmt17(v.get<double>());
                else if (v.is_string())
                    out << v.get<std::string>();
                else
                    out << v.dump();
            }
            out << '\n';
        }
    } else {
        Json doc;
        doc["command"] = cfg.command;
        doc["rows"] = rows;
        out << doc.dump(1) << '\n';
    }
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
    std::vector<Json> rows;
    bool ok = true;
    for (double t : cfg.t_values) {
        const Parameters p = compute_parameters(t, cfg.eps_crit);
        for (int n : cfg.n_values) {
            Json row;
            row["t"] = t;
            row["n"] = n;
            const double k2t = toeplitz_k2(p, n, cfg.grid);
            const double k2f = fredholm_k2(p, n);
            double maxdiff = rel_diff(k2t, k2f);
            row["k2_toeplitz"] = k2t;
            row["k2_fredholm"] = k2f;
            if (n <= 16) {
                const double k2o = fms_k2(t, n);
                row["k2_fms"] = k2o;
                maxdiff = std::max({maxdiff, rel_diff(k2o, k2t), rel_diff(k2o, k2f)});
            }
            row["route_max_rel_diff"] = maxdiff;
            ok = ok && maxdiff < 1e-7;
            rows.push_back(std::move(row));
        }
    }
    emit(cfg, rows, out);
    return ok ? 0 : 3;
}

int cmd_oracle_compare(const RunConfig& cfg, std::ostream& out) {
    std::vector<Json> rows;
    bool ok = true;
    for (double t : cfg.t_values) {
        const Parameters p = compute_parameters(t, cfg.eps_crit);
        for (int n : cfg.n_values) {
            const double k2o = fms_k2(t, n);
            const double k2t = toeplitz_k2(p, n, cfg.grid);
            const double k2f = fredholm_k2(p, n);
            Json row;
            row["t"] = t;
            row["n"] = n;
            row["k2_fms"] = k2o;
            row["k2_toeplitz"] = k2t;
            row["k2_fredholm"] = k2f;
            row["fms_vs_toeplitz"] = rel_diff(k2o, k2t);
            row["toeplitz_vs_fredholm"] = rel_diff(k2t, k2f);
            row["fms_vs_fredholm"] = rel_diff(k2o, k2f);
            const double m = std::max(
                {rel_diff(k2o, k2t), rel_diff(k2t, k2f), rel_diff(k2o, k2f)});
            row["max_rel_diff"] = m;
            ok = ok && m < 1e-7;
            rows.push_back(std::move(row));
        }
    }
    emit(cfg, rows, out);
    return ok ? 0 : 3;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    std::vector<Json> rows;
    bool ok = true;
    for (double t : cfg.t_values) {
        const Parameters p = compute_parameters(t, cfg.eps_crit);
        const AsymptoticConstants c = constants(p);
        for (int n : cfg.n_values) {
            Json row;
            row["t"] = t;
            row["n"] = n;
            const double k2t = toeplitz_k2(p, n, cfg.grid);
            const double k2f = fredholm_k2(p, n);
            const double k2a = k2_asymptotic(c, p, n);
            row["k2_toeplitz"] = k2t;
            row["k2_fredholm"] = k2f;
            row["k2_asymptotic"] = k2a;
            row["toeplitz_vs_fredholm"] = rel_diff(k2t, k2f);
            row["asymptotic_rel_err"] = rel_diff(k2f, k2a);
            ok = ok && rel_diff(k2t, k2f) < 1e-7;
            rows.push_back(std::move(row));
        }
    }
    emit(cfg, rows, out);
    return ok ? 0 : 3;
}

Json constants_row(double t, const Parameters& p) {
    const AsymptoticConstants c = constants(p);
    Json row;
    row["t"] = t;
    row["regime"] = c.regime == Regime::Subcritical ? "subcritical" : "supercritical";
    row["k2_inf"] = c.k2_inf;
    row["xi"] = c.xi;
    row["C1"] = c.C1;
    row["C2"] = c.C2;
    if (c.regime == Regime::Supercritical) {
        row["omega"] = c.omega;
        row["phi1"] = c.phi1;
        row["phi2"] = c.phi2;
        row["C3"] = c.C3;
        row["C4"] = c.C4;
    }
    return row;
}

int cmd_asympt(const RunConfig& cfg, std::ostream& out) {
    std::vector<Json> rows;
    for (double t : cfg.t_values) {
        const Parameters p = compute_parameters(t, cfg.eps_crit);
        const AsymptoticConstants c = constants(p);
        for (int n : cfg.n_values) {
            Json row = constants_row(t, p);
            row["n"] = n;
            row["k2_asymptotic"] = k2_asymptotic(c, p, n);
            rows.push_back(std::move(row));
        }
    }
    emit(cfg, rows, out);
    return 0;
}

int cmd_constants(const RunConfig& cfg, std::ostream& out) {
    std::vector<Json> rows;
    if (cfg.limit) {
        const ReferenceTable t1 = reference_table_t1();
        Json row;
        row["t"] = 1.0;
        row["k2_inf"] = t1.k2_inf;
        row["xi"] = t1.xi;
        row["omega"] = t1.omega;
        row["c1_half"] = t1.c1_half;
        row["c2_half"] = t1.c2_half;
        row["c3_half"] = t1.c3_half;
        row["c4_half"] = t1.c4_half;
        row["phi1"] = t1.phi1;
        row["phi2"] = t1.phi2;
        rows.push_back(std::move(row));
    } else {
        for (double t : cfg.t_values)
            rows.push_back(constants_row(t, compute_parameters(t, cfg.eps_crit)));
    }
    emit(cfg, rows, out);
    return 0;
}

int cmd_factor_check(const RunConfig& cfg, std::ostream& out) {
    std::vector<Json> rows;
    bool ok = true;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uang(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> urad(0.5, 2.0);
    for (double t : cfg.t_values) {
        const Parameters p = compute_parameters(t, cfg.eps_crit);
        const Factorization fact(p);
        const auto res = fact.validate(cfg.grid);

        const StepwiseResult sw = stepwise_factorize_rho(p);
        const ElementaryFactors ef = fact.elementary();
        double p_err = 0.0;
        for (int j = 0; j < 4; ++j)
            p_err = std::max(p_err, std::abs(sw.p[static_cast<std::size_t>(j)] -
                                             ef.p[static_cast<std::size_t>(j)]) /
                                        std::abs(ef.p[static_cast<std::size_t>(j)]));

        const Mat2 c = liouville_constant(p);
        const double c_err = max_abs(c - Mat2::Identity());
        const double c2_err = max_abs(Mat2(c * c) - Mat2::Identity());

        // Random-point symmetry identities (seeded).
        double sym_err = 0.0;
        for (int i = 0; i < 64; ++i) {
            const Complex z = std::polar(urad(rng), uang(rng));
            const Mat2 pi_z = eval_pi(p, z);
            sym_err = std::max(sym_err, max_abs(eval_pi(p, 1.0 / z) - adjugate(pi_z)));
            const Complex zb = std::conj(z);
            if (std::abs(zb) <= 1.0) continue;
            const Mat2 lhs = fact.phi_minus(zb);
            const Mat2 rhs = sigma3() * fact.phi_minus(z).conjugate() * sigma3();
            sym_err = std::max(sym_err, max_abs(lhs - rhs));
        }

        Json row;
        row["t"] = t;
        row["grid"] = cfg.grid;
        row["residual_plus_minus"] = res.plus_minus;
        row["residual_minus_plus"] = res.minus_plus;
        row["sqrtf_jump"] = res.sqrtf_jump;
        row["sqrtf_jump_bound"] = res.sqrtf_jump_bound;
        row["stepwise_p_rel_err"] = p_err;
        row["liouville_c_minus_i"] = c_err;
        row["liouville_c_sq_minus_i"] = c2_err;
        row["random_symmetry_err"] = sym_err;
        ok = ok && res.plus_minus < 1e-10 && res.minus_plus < 1e-10 && p_err < 1e-10 &&
             c_err < 1e-10;
        rows.push_back(std::move(row));
    }
    emit(cfg, rows, out);
    return ok ? 0 : 3;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.command == "exact") return cmd_exact(cfg, out);
    if (cfg.command == "oracle-compare") return cmd_oracle_compare(cfg, out);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out);
    if (cfg.command == "asympt") return cmd_asympt(cfg, out);
    if (cfg.command == "constants") return cmd_constants(cfg, out);
    if (cfg.command == "factor-check") return cmd_factor_check(cfg, out);
    err << "unknown command: " << cfg.command << '\n';
    return 1;
}

namespace {

std::vector<double> parse_t_range(const std::string& text) {
    double a = 0.0, b = 0.0, step = 0.0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0.0)
        throw std::invalid_argument("--t-range expects a:b:step with positive step");
    std::vector<double> v;
    for (int i = 0;; ++i) {
        const double x = a + i * step;
        if (x > b + 1e-12) break;
        v.push_back(x);
    }
    return v;
}

std::vector<int> parse_n_range(const std::string& text) {
    int a = 0, b = 0;
    if (std::sscanf(text.c_str(), "%d:%d", &a, &b) != 2 || b < a)
        throw std::invalid_argument("--n-range expects a:b with b >= a");
    std::vector<int> v;
    for (int x = a; x <= b; ++x) v.push_back(x);
    return v;
}

}  // namespace

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"monomer-monomer correlation of the triangular-lattice dimer model"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<double> t_opt;
    std::vector<int> n_opt;
    std::string t_range, n_range;

    for (const char* name :
         {"exact", "asympt", "factor-check", "oracle-compare", "sweep", "constants"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--t", t_opt, "weight value(s)");
        sub->add_option("--t-range", t_range, "weight range a:b:step");
        sub->add_option("--n", n_opt, "separation value(s)");
        sub->add_option("--n-range", n_range, "separation range a:b");
        sub->add_option("--grid", cfg.grid, "unit-circle grid size (power of two)");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--eps-crit", cfg.eps_crit, "guard width around t = 1/2");
        sub->add_option("--seed", cfg.seed, "seed for random-point identity checks");
        sub->add_flag("--limit", cfg.limit, "t = 1 limiting constants table");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.t_values = t_opt;
    cfg.n_values = n_opt;
    try {
        if (!t_range.empty()) {
            const auto r = parse_t_range(t_range);
            cfg.t_values.insert(cfg.t_values.end(), r.begin(), r.end());
        }
        if (!n_range.empty()) {
            const auto r = parse_n_range(n_range);
            cfg.n_values.insert(cfg.n_values.end(), r.begin(), r.end());
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 1;
    }
    std::sort(cfg.t_values.begin(), cfg.t_values.end());
    std::sort(cfg.n_values.begin(), cfg.n_values.end());
    if (cfg.t_values.empty() && !(cfg.command == "constants" && cfg.limit)) {
        err << "no --t / --t-range given\n";
        return 1;
    }
    if (cfg.n_values.empty()) cfg.n_values = {8};
    if (cfg.grid < 64 || (cfg.grid & (cfg.grid - 1)) != 0) {
        err << "--grid must be a power of two, at least 64\n";
        return 1;
    }

    try {
        return run(cfg, out, err);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const CriticalPointError& e) {
        err << "critical point: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace dimer::cli
