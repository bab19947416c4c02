#include "config.hpp"
#include "output.hpp"

#include "lis/depoisson.hpp"
#include "lis/errors.hpp"
#include "lis/exact_lis.hpp"
#include "lis/expansions.hpp"
#include "lis/fform.hpp"
#include "lis/fredholm.hpp"
#include "lis/kernels.hpp"
#include "lis/moments.hpp"
#include "lis/specfun.hpp"
#include "lis/stirling.hpp"
#include "lis/tracy_widom.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace lis;
using cli::Cell;
using cli::Config;
using cli::Record;
using cli::Table;

struct Context {
    Config cfg;
    std::string out;  // per-command override of cfg.format
    const std::string& format() const { return out.empty() ? cfg.format : out; }
    int digits() const { return cfg.digits; }
    NystromOptions nystrom() const { return {cfg.quadrature_m, cfg.truncation}; }
};

std::string rat_num(const Rat& r) { return r.get_num().get_str(); }
std::string rat_den(const Rat& r) { return r.get_den().get_str(); }

const TWModel& model_for(const Context& c) {
    static std::optional<TWModel> custom;
    if (c.cfg.tw_npts == 240 && c.cfg.quadrature_m == 80 && c.cfg.truncation == 14.0) return tw_model();
    if (!custom) custom = build_tw_model(c.cfg.tw_npts, c.nystrom());
    return *custom;
}

// l range with t_l(r) = (l - 2 sqrt r) / r^{1/6} inside [lo, hi]; shift = 0.5 uses t_{l-1/2}
std::pair<int, int> l_range(double r, double lo, double hi, double shift = 0.0) {
    const double c = 2.0 * std::sqrt(r), w = std::pow(r, 1.0 / 6.0);
    int a = static_cast<int>(std::ceil(c + lo * w + shift));
    int b = static_cast<int>(std::floor(c + hi * w + shift));
    return {std::max(a, 1), b};
}

// ---- figures -------------------------------------------------------------

Table figure_hard2soft(const std::vector<int>& nus, int points) {
    Table t{{"nu", "t", "F3", "residual"}, {}};
    for (int nu : nus) {
        for (int i = 0; i < points; ++i) {
            const double x = -6.0 + 8.0 * i / (points - 1);
            t.add({static_cast<long long>(nu), x, coeff(Family::F, 3, x), hard_to_soft_residual(nu, x, 3)});
        }
    }
    return t;
}

Table figure_poissonized(const std::vector<int>& rs) {
    Table t{{"r", "l", "t", "F3P", "residual"}, {}};
    for (int r : rs) {
        auto [a, b] = l_range(r, -6.0, 2.0);
        for (int l = a; l <= b; ++l) {
            const double x = t_nu(l, r);
            t.add({static_cast<long long>(r), static_cast<long long>(l), x, coeff(Family::FP, 3, x),
                   poissonized_residual(r, l, 3)});
        }
    }
    return t;
}

Table figure_cdf(const std::vector<int>& ns) {
    Table t{{"n", "l", "t", "F", "m1", "m2", "m3", "F3D", "exact", "residual"}, {}};
    for (int n : ns) {
        std::optional<ExactDist> d;
        if (n <= 80) d = exact_dist(n);
        auto [a, b] = l_range(n, -6.0, 3.0);
        for (int l = a; l <= b; ++l) {
            const double x = t_nu(l, n);
            std::vector<Cell> row{static_cast<long long>(n), static_cast<long long>(l), x,        F(x),
                                  cdf_expansion(n, l, 1),   cdf_expansion(n, l, 2),   cdf_expansion(n, l, 3),
                                  coeff(Family::FD, 3, x)};
            if (d) {
                const double ex = d->cdf_double(l);
                row.push_back(ex);
                row.push_back(n * (ex - cdf_expansion(n, l, 2)));
            } else {
                row.push_back(Cell{});
                row.push_back(Cell{});
            }
            t.add(std::move(row));
        }
    }
    return t;
}

Table figure_pdf(const std::vector<int>& ns) {
    Table t{{"n", "l", "t", "F_prime", "m1", "m2", "m3", "F3star", "exact", "residual"}, {}};
    for (int n : ns) {
        std::optional<ExactDist> d;
        if (n <= 80) d = exact_dist(n);
        auto [a, b] = l_range(n, -6.0, 3.0, 0.5);
        for (int l = a; l <= b; ++l) {
            const double x = t_nu(l - 0.5, n);
            std::vector<Cell> row{static_cast<long long>(n),
                                  static_cast<long long>(l),
                                  x,
                                  std::pow(n, -1.0 / 6.0) * F(x, 1),
                                  pdf_expansion(n, l, 1),
                                  pdf_expansion(n, l, 2),
                                  pdf_expansion(n, l, 3),
                                  coeff(Family::Fstar, 3, x)};
            if (d) {
                const double ex = d->pdf_double(l);
                row.push_back(ex);
                row.push_back(std::pow(n, 7.0 / 6.0) * (ex - pdf_expansion(n, l, 2)));
            } else {
                row.push_back(Cell{});
                row.push_back(Cell{});
            }
            t.add(std::move(row));
        }
    }
    return t;
}

Table figure_stirling(const std::vector<int>& ns) {
    Table t{{"n", "l", "t", "S", "S_tilde", "F2S", "F2S_tilde", "exact", "residual", "residual_tilde"}, {}};
    for (int n : ns) {
        std::optional<ExactDist> d;
        if (n <= 80) d = exact_dist(n);
        auto [a, b] = l_range(n, -6.0, 3.0);
        for (int l = a; l <= b; ++l) {
            const double x = t_nu(l, n);
            const double f2 = coeff(Family::FS, 2, x), f2t = coeff(Family::FS_tilde, 2, x);
            auto guarded = [&](auto&& f) {
                // far left tail: P(r; l) underflows the determinant and the saddle is out of reach
                try {
                    return f().S;
                } catch (const SingularSystem&) {
                } catch (const NoConvergence&) {
                }
                return std::numeric_limits<double>::quiet_NaN();
            };
            const double S = guarded([&] { return stirling_S(n, l); });
            const double St = guarded([&] { return stirling_S_tilde(n, l); });
            auto cell = [](double v) { return std::isnan(v) ? Cell{} : Cell{v}; };
            std::vector<Cell> row{static_cast<long long>(n), static_cast<long long>(l), x, cell(S), cell(St), f2, f2t};
            if (d) {
                const double ex = d->cdf_double(l), s23 = std::pow(n, -2.0 / 3.0);
                row.push_back(ex);
                row.push_back(cell(n * (ex - S - f2 * s23)));
                row.push_back(cell(n * (ex - St - f2t * s23)));
            } else {
                for (int k = 0; k < 3; ++k) row.push_back(Cell{});
            }
            t.add(std::move(row));
        }
    }
    return t;
}

// ---- F-form output ---------------------------------------------------------

nlohmann::ordered_json fform_json(const FForm& f) {
    auto p = nlohmann::ordered_json::array();
    for (const auto& c : f.p) {
        auto cs = nlohmann::ordered_json::array();
        for (const auto& r : c.coeffs()) cs.push_back(to_string(r));
        p.push_back(cs);
    }
    return p;
}

void print_fform(const Context& c, const std::string& label, const LFormResult& res) {
    if (c.format() == "json") {
        nlohmann::ordered_json o;
        o["target"] = label;
        o["verdict"] = verdict_name(res.verdict);
        o["order"] = res.ok() ? res.form.order() : 0;
        o["rows"] = res.rows;
        o["cols"] = res.cols;
        o["form"] = res.ok() ? res.form.str() : "";
        o["p"] = res.ok() ? fform_json(res.form) : nlohmann::ordered_json::array();
        if (!res.ok()) o["detail"] = res.detail;
        std::cout << o.dump(2) << "\n";
        return;
    }
    std::cout << label << ": ";
    if (res.ok())
        std::cout << res.form.str() << "\n";
    else
        std::cout << "no linear F-form (" << verdict_name(res.verdict) << ": " << res.detail << ")\n";
}

// ---- selftest --------------------------------------------------------------

struct Check {
    std::string name;
    std::function<bool()> run;
};

int selftest(bool quick) {
    std::vector<Check> checks = {
        {"quad_fredholm: Gauss-Legendre integrates x^7 exactly",
         [] {
             auto r = gauss_legendre(5, 0.0, 2.0);
             double s = 0.0;
             for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 7);
             return std::fabs(s - 32.0) < 1e-12;
         }},
        {"quad_fredholm: zero kernel has determinant 1",
         [] {
             KernelSpec z;
             z.eval = [](double, double) { return 0.0; };
             z.diag = [](double) { return 0.0; };
             return std::fabs(fredholm_det(z, {0.0, 1.0}, 10) - 1.0) < 1e-15;
         }},
        {"specfun: Ai(0)", [] { return std::fabs(airy(0.0) - 0.355028053887817239) < 1e-14; }},
        {"specfun: J_1(0) = 0", [] { return bessel_j(1, 0.0) == 0.0; }},
        {"tracy_widom: saturation beyond the domain", [] { return F(7.0) == 1.0 && F(-11.0) == 0.0 && F(7.0, 2) == 0.0; }},
        {"tracy_widom: F(0) in (0.96, 0.97)", [] { return F(0.0) > 0.96 && F(0.0) < 0.97; }},
        {"kernels: phi_nu(nu, 0) = nu^2", [] { return std::fabs(phi_nu(50.0, 0.0) - 2500.0) < 1e-9; }},
        {"expansions: e2_hard(0, nu) = 1", [] { return e2_hard(0.0, 5) == 1.0; }},
        {"expansions: e2_hard monotone in s", [] { return e2_hard(1.0, 4) > e2_hard(10.0, 4); }},
        {"exact_lis: P(L_n <= n) = 1", [] { return exact_dist(12).cdf(12) == 1; }},
        {"exact_lis: exact equals brute force at n = 6",
         [] {
             auto a = exact_dist(6), b = brute_force_dist(6);
             return a.count == b.count;
         }},
        {"exact_lis: patience sorting on the identity", [] { return lis_length({0, 1, 2, 3, 4}) == 5; }},
        {"depoisson: b_0 = 1, b_1 = 0", [] { return charlier_b(0, Rat(7)) == 1 && charlier_b(1, Rat(7)) == 0; }},
        {"stirling: tau_1 = e / sqrt(2 pi)",
         [] { return std::fabs(tau_n(1) - std::numbers::e / std::sqrt(2.0 * std::numbers::pi)) < 1e-14; }},
        {"stirling: l >= n gives S = 1", [] { return std::fabs(stirling_S(20, 25).S - 1.0) < 1e-8; }},
        {"moments: mu_0 = M_1", [] { return coeff_mu(0) == moment_table().M[1]; }},
        {"fform_symbolic: d/ds (q'^2 - s q^2 - q^4) = -q^2",
         [] { return pii_diff(F_over_F(1)) == -(QQPoly::q() * QQPoly::q()); }},
        {"cli: config rejects unknown keys",
         [] {
             try {
                 cli::parse_config("bogus = 1\n");
             } catch (const cli::UsageError&) {
                 return true;
             }
             return false;
         }},
    };
    if (!quick) {
        checks.push_back({"moments: M_1 against its reference value",
                          [] { return std::fabs(moment_table().M[1] + 1.7710868074116016) < 1e-8; }});
        checks.push_back({"fform_symbolic: u_30 form", [] {
                              return st_u(3, 0).str() == "(7/12)*D + (1/3*s)*D^2 + (1/24)*D^4";
                          }});
        checks.push_back({"expansions: Poisson identity at r = 4, l = 4", [] {
                              return std::fabs(e2_hard(16.0, 4) - poisson_gf(4, 4.0).real()) < 1e-10;
                          }});
    }
    int failed = 0;
    for (const auto& c : checks) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "  exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS " : "FAIL ") << c.name << "\n";
        failed += ok ? 0 : 1;
    }
    std::cout << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

/// First "-x"/"--x" argument that no command on the parsed path defines.
std::optional<std::string> unknown_flag(CLI::App& app, int argc, char** argv) {
    std::vector<CLI::App*> path{&app};
    for (int i = 1; i < argc; ++i) {
        const std::string tok = argv[i];
        if (auto* sub = path.back()->get_subcommand_no_throw(tok)) {
            path.push_back(sub);
            continue;
        }
        if (tok.size() < 2 || tok[0] != '-' || std::isdigit(static_cast<unsigned char>(tok[1])) || tok[1] == '.')
            continue;
        const std::string name = tok.substr(0, tok.find('='));
        bool known = false;
        for (auto* a : path) known = known || a->get_option_no_throw(name) != nullptr;
        if (!known) return tok;
    }
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Length distribution of longest increasing subsequences: exact, asymptotic and symbolic tools"};
    app.require_subcommand(1);
    Context ctx;
    std::function<int()> action;

    std::optional<int> opt_threads, opt_digits, opt_m, opt_npts;
    std::optional<double> opt_trunc;
    app.add_option("--threads", opt_threads, "worker threads (default: hardware concurrency)")->check(CLI::PositiveNumber);
    app.add_option("--digits", opt_digits, "significant digits of floating output")->check(CLI::Range(1, 17));
    app.add_option("--quadrature-m", opt_m, "Gauss-Legendre nodes per Fredholm determinant")->check(CLI::PositiveNumber);
    app.add_option("--truncation", opt_trunc, "length L of the truncated semi-infinite interval")
        ->check(CLI::PositiveNumber);
    app.add_option("--tw-npts", opt_npts, "Chebyshev points of the Tracy-Widom model")->check(CLI::Range(120, 4000));

    auto out_option = [&](CLI::App* s) {
        s->add_option("--out", ctx.out, "output format")->check(CLI::IsMember({"csv", "json"}));
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* s = parent->add_subcommand(name, desc);
        out_option(s);
        return s;
    };

    // tw
    auto* tw = app.add_subcommand("tw", "Tracy-Widom distribution F(t) and its derivatives");
    tw->require_subcommand(1);
    double tw_t = 0.0, tw_a = -6.0, tw_b = 4.0;
    int tw_k = 0, tw_n = 41;
    {
        auto* s = leaf(tw, "eval", "F^{(k)}(t)");
        s->add_option("--t", tw_t, "argument")->required();
        s->add_option("--k", tw_k, "derivative order 0..7")->check(CLI::Range(0, 7));
        s->callback([&] {
            action = [&] {
                double v = tw_k == 0 && tw_t >= -12.0 && tw_t <= 12.0
                               ? Nystrom(airy_kernel().spec, {tw_t}, ctx.nystrom()).det()
                               : model_for(ctx).F(tw_t, tw_k);
                Record()("t", tw_t)("k", static_cast<long long>(tw_k))("value", v).write(std::cout, ctx.format(),
                                                                                        ctx.digits());
                return 0;
            };
        });
        auto* g = leaf(tw, "grid", "F^{(k)} on a uniform grid");
        g->add_option("--a", tw_a, "left end");
        g->add_option("--b", tw_b, "right end");
        g->add_option("--n", tw_n, "number of points")->check(CLI::Range(2, 100000));
        g->add_option("--k", tw_k, "derivative order 0..7")->check(CLI::Range(0, 7));
        g->callback([&] {
            action = [&] {
                if (!(tw_a < tw_b)) throw DomainError("tw grid: need a < b");
                Table t{{"t", "value"}, {}};
                const auto& m = model_for(ctx);
                for (int i = 0; i < tw_n; ++i) {
                    double x = tw_a + (tw_b - tw_a) * i / (tw_n - 1);
                    t.add({x, m.F(x, tw_k)});
                }
                t.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
    }

    // lis
    auto* lis_cmd = app.add_subcommand("lis", "exact and sampled distribution of L_n");
    lis_cmd->require_subcommand(1);
    int lis_n = 10;
    std::optional<int> lis_l;
    bool lis_pdf = false, lis_hist = false;
    long mc_samples = 1000;
    std::optional<std::uint64_t> mc_seed;
    {
        auto* s = leaf(lis_cmd, "exact", "P(L_n <= l) as exact rationals");
        s->add_option("--n", lis_n, "permutation size 0..80")->required()->check(CLI::Range(0, 80));
        s->add_option("--l", lis_l, "single length");
        s->add_flag("--pdf", lis_pdf, "emit P(L_n = l) instead of the CDF");
        s->callback([&] {
            action = [&] {
                auto d = exact_dist(lis_n, ctx.cfg.thread_count());
                Table t{{"n", "l", "numerator", "denominator"}, {}};
                int a = lis_l.value_or(0), b = lis_l.value_or(lis_n);
                if (a < 0) throw DomainError("lis exact: l must be nonnegative");
                for (int l = a; l <= b; ++l) {
                    Rat v = lis_pdf ? d.pdf(l) : d.cdf(l);
                    t.add({static_cast<long long>(lis_n), static_cast<long long>(l), rat_num(v), rat_den(v)});
                }
                t.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
        auto* m = leaf(lis_cmd, "mc", "Monte Carlo sample of L_n");
        m->add_option("--n", lis_n, "permutation size")->required()->check(CLI::PositiveNumber);
        m->add_option("--samples", mc_samples, "number of permutations")->check(CLI::PositiveNumber);
        m->add_option("--seed", mc_seed, "random seed");
        m->add_flag("--histogram", lis_hist, "emit the histogram instead of the summary");
        m->callback([&] {
            action = [&] {
                auto r = monte_carlo(lis_n, mc_samples, mc_seed.value_or(ctx.cfg.seed), ctx.cfg.thread_count());
                if (lis_hist) {
                    Table t{{"l", "count"}, {}};
                    for (auto [l, c] : r.histogram) t.add({static_cast<long long>(l), static_cast<long long>(c)});
                    t.write(std::cout, ctx.format(), ctx.digits());
                    return 0;
                }
                const std::string fmt = ctx.out.empty() ? "json" : ctx.out;
                Record()("n", static_cast<long long>(r.n))("samples", static_cast<long long>(r.samples))(
                    "seed", std::to_string(r.seed))("algorithm", r.algorithm)("mean", r.mean)("variance", r.variance)(
                    "std_error", std::sqrt(r.variance / r.samples))("expansion_mean_m1", expected_value(r.n, 1))
                    .write(std::cout, fmt, ctx.digits());
                return 0;
            };
        });
    }

    // poisson
    auto* poisson = app.add_subcommand("poisson", "Poissonized distribution P(r; l) = E2hard(4r; l)");
    poisson->require_subcommand(1);
    double p_r = 1.0;
    int p_l = 2;
    bool p_series = false;
    {
        auto* s = leaf(poisson, "eval", "P(r; l) as a Fredholm determinant");
        s->add_option("--r", p_r, "Poisson parameter")->required()->check(CLI::NonNegativeNumber);
        s->add_option("--l", p_l, "length bound")->required()->check(CLI::PositiveNumber);
        s->add_flag("--series", p_series, "also sum the exact Poisson series (r <= 25)");
        s->callback([&] {
            action = [&] {
                Record rec;
                const double P = e2_hard(4.0 * p_r, p_l, ctx.cfg.quadrature_m);
                rec("r", p_r)("l", static_cast<long long>(p_l))("P", P);
                if (p_series) {
                    const double ser = poisson_gf(p_l, p_r).real();
                    rec("series", ser)("difference", P - ser);
                }
                rec.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
    }

    // expansion
    auto* expansion = app.add_subcommand("expansion", "finite-size expansion coefficients and figure data");
    expansion->require_subcommand(1);
    int fig_which = 1, fig_points = 33, ex_j = 1, ex_n = 60, ex_l = 12, ex_m = 2;
    std::vector<int> fig_nu, fig_r, fig_n;
    std::string ex_family = "F";
    bool ex_symbolic = false;
    double ex_t = 0.0;
    {
        auto* f = leaf(expansion, "figure", "data behind the five validation figures");
        f->add_option("--which", fig_which, "1 hard-to-soft, 2 Poissonized, 3 CDF, 4 PDF, 5 Stirling")
            ->required()
            ->check(CLI::Range(1, 5));
        f->add_option("--nu", fig_nu, "Bessel orders (figure 1)")->delimiter(',');
        f->add_option("--r", fig_r, "Poisson parameters (figure 2)")->delimiter(',');
        f->add_option("--n", fig_n, "sizes (figures 3-5)")->delimiter(',');
        f->add_option("--points", fig_points, "t grid size (figure 1)")->check(CLI::Range(2, 10000));
        f->callback([&] {
            action = [&] {
                Table t;
                switch (fig_which) {
                    case 1: t = figure_hard2soft(fig_nu.empty() ? std::vector<int>{100, 800} : fig_nu, fig_points); break;
                    case 2: t = figure_poissonized(fig_r.empty() ? std::vector<int>{250, 2000} : fig_r); break;
                    case 3: t = figure_cdf(fig_n.empty() ? std::vector<int>{30, 60} : fig_n); break;
                    case 4: t = figure_pdf(fig_n.empty() ? std::vector<int>{30, 60} : fig_n); break;
                    default: t = figure_stirling(fig_n.empty() ? std::vector<int>{30, 60} : fig_n); break;
                }
                t.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
        auto* c = leaf(expansion, "coeff", "one coefficient function at t");
        c->add_option("--family", ex_family, "F, F_tilde, FP, FD, Fstar, FS, FS_tilde")->required();
        c->add_option("--j", ex_j, "order 0..3")->required();
        c->add_option("--t", ex_t, "argument")->required();
        c->add_flag("--symbolic", ex_symbolic, "also print the linear form");
        c->callback([&] {
            action = [&] {
                const Family fam = parse_family(ex_family);
                Record rec;
                rec("family", family_name(fam))("j", static_cast<long long>(ex_j))("t", ex_t)(
                    "value", coeff(fam, ex_j, ex_t));
                if (ex_symbolic && fam != Family::FS && fam != Family::FS_tilde)
                    rec("form", linear_form(fam, ex_j).str());
                rec.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
        auto* cdf = leaf(expansion, "cdf", "P(L_n <= l) from the expansion through n^{-m/3}");
        auto* pdf = leaf(expansion, "pdf", "P(L_n = l) from the expansion through n^{-m/3}");
        for (auto* s : {cdf, pdf}) {
            s->add_option("--n", ex_n, "size")->required()->check(CLI::PositiveNumber);
            s->add_option("--l", ex_l, "length")->required()->check(CLI::PositiveNumber);
            s->add_option("--m", ex_m, "order 0..3")->check(CLI::Range(0, 3));
        }
        auto run_dist = [&](bool is_pdf) {
            Record rec;
            const double v = is_pdf ? pdf_expansion(ex_n, ex_l, ex_m) : cdf_expansion(ex_n, ex_l, ex_m);
            rec("n", static_cast<long long>(ex_n))("l", static_cast<long long>(ex_l))(
                "t", t_nu(is_pdf ? ex_l - 0.5 : ex_l, ex_n))("m", static_cast<long long>(ex_m))("value", v);
            if (ex_n <= 80) {
                auto d = exact_dist(ex_n, ctx.cfg.thread_count());
                const double ex = is_pdf ? d.pdf_double(ex_l) : d.cdf_double(ex_l);
                rec("exact", ex)("error", v - ex);
            }
            rec.write(std::cout, ctx.format(), ctx.digits());
            return 0;
        };
        cdf->callback([&] { action = [&] { return run_dist(false); }; });
        pdf->callback([&] { action = [&] { return run_dist(true); }; });
        auto* rel = leaf(expansion, "relations", "identities among the coefficient families");
        rel->add_option("--t", ex_t, "argument in [-8, 4]")->required();
        rel->callback([&] {
            action = [&] {
                auto r = relation_checks(ex_t);
                Table t{{"identity", "mismatch"}, {}};
                for (std::size_t i = 0; i < r.names.size(); ++i) t.add({r.names[i], r.mismatch[i]});
                t.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
    }

    // stirling
    auto* stirling = app.add_subcommand("stirling", "Stirling-type formula for P(L_n <= l)");
    stirling->require_subcommand(1);
    int st_n = 60, st_l = 12;
    double st_r = 100.0;
    bool st_simplified = false, st_tau = false;
    {
        auto* s = leaf(stirling, "eval", "S_{n,l} with the saddle point r_n");
        s->add_option("--n", st_n, "size")->required()->check(CLI::PositiveNumber);
        s->add_option("--l", st_l, "length")->required()->check(CLI::PositiveNumber);
        s->add_flag("--simplified", st_simplified, "use the simplified formula at r = n");
        s->add_flag("--with-tau", st_tau, "multiply by the classical Stirling factor");
        s->callback([&] {
            action = [&] {
                auto r = st_simplified ? stirling_S_tilde(st_n, st_l, st_tau) : stirling_S(st_n, st_l, st_tau);
                const std::string fmt = ctx.out.empty() ? "json" : ctx.out;
                Record()("n", static_cast<long long>(st_n))("l", static_cast<long long>(st_l))("S", r.S)(
                    "r_n", r.r_n)("a", r.a)("b", r.b)
                    .write(std::cout, fmt, ctx.digits());
                return 0;
            };
        });
        auto* a = leaf(stirling, "aux", "auxiliary functions a(r), b(r)");
        a->add_option("--l", st_l, "length")->required()->check(CLI::PositiveNumber);
        a->add_option("--r", st_r, "radius")->required()->check(CLI::PositiveNumber);
        a->callback([&] {
            action = [&] {
                auto f = aux(st_l, st_r);
                Record()("l", static_cast<long long>(st_l))("r", st_r)("P", f.P)("dP", f.dP)("a", f.a)("b", f.b)
                    .write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
    }

    // depoisson
    auto* dep = app.add_subcommand("depoisson", "analytic de-Poissonization");
    dep->require_subcommand(1);
    int dp_n = 50, dp_l = 11, dp_M = 4, dp_j = 2, dp_thetas = 32;
    double dp_r = 16.0, dp_s = 1.0;
    {
        auto* j = leaf(dep, "jasz", "Jasz expansion of P(L_n <= l)");
        j->add_option("--n", dp_n, "size")->required()->check(CLI::Range(10, 100000));
        j->add_option("--l", dp_l, "length")->required()->check(CLI::PositiveNumber);
        j->add_option("--M", dp_M, "truncation order 0..8")->check(CLI::Range(0, 8));
        j->callback([&] {
            action = [&] {
                auto P = poisson_model(dp_n, dp_l);
                Record rec;
                rec("n", static_cast<long long>(dp_n))("l", static_cast<long long>(dp_l))(
                    "M", static_cast<long long>(dp_M))("P_n", P(dp_n))("jasz", jasz(P, dp_n, dp_M))(
                    "jasz_p4", jasz_p4(P, dp_n));
                if (dp_n <= 80) rec("exact", exact_dist(dp_n, ctx.cfg.thread_count()).cdf_double(dp_l));
                rec.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
        auto* h = leaf(dep, "hayman", "genus-zero bound on |f(r e^{i theta})|");
        h->add_option("--l", dp_l, "length")->required()->check(CLI::PositiveNumber);
        h->add_option("--r", dp_r, "radius, at most 25")->required();
        h->add_option("--thetas", dp_thetas, "number of angles in [0, pi]")->check(CLI::Range(2, 100000));
        h->callback([&] {
            action = [&] {
                std::vector<double> th(dp_thetas);
                for (int i = 0; i < dp_thetas; ++i) th[i] = std::numbers::pi * i / (dp_thetas - 1);
                auto rep = hayman_bound_check(dp_l, dp_r, th);
                Table t{{"theta", "lhs", "rhs", "pass"}, {}};
                for (const auto& row : rep.rows) t.add({row.theta, row.lhs, row.rhs, row.pass});
                t.write(std::cout, ctx.format(), ctx.digits());
                return rep.all_pass ? 0 : 1;
            };
        });
        auto* w = leaf(dep, "sandwich", "Johansson's sandwich bounds");
        w->add_option("--n", dp_n, "size 2..80")->required()->check(CLI::Range(2, 80));
        w->add_option("--l", dp_l, "length")->required()->check(CLI::PositiveNumber);
        w->add_option("--s", dp_s, "exponent s >= 1");
        w->callback([&] {
            action = [&] {
                auto r = johansson_sandwich(dp_n, dp_s, dp_l);
                Record()("n", static_cast<long long>(dp_n))("l", static_cast<long long>(dp_l))("s", dp_s)(
                    "lower", r.lower)("exact", r.exact)("upper", r.upper)("holds", r.holds)
                    .write(std::cout, ctx.format(), ctx.digits());
                return r.holds ? 0 : 1;
            };
        });
        auto* c = leaf(dep, "charlier", "diagonal Poisson-Charlier polynomial b_j(n)");
        c->add_option("--j", dp_j, "index 0..30")->required()->check(CLI::Range(0, 30));
        c->callback([&] {
            action = [&] {
                Record()("j", static_cast<long long>(dp_j))("b_j", charlier_b_poly(dp_j).str("n"))
                    .write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
    }

    // moments
    auto* moments = app.add_subcommand("moments", "Tracy-Widom moments and the mean/variance expansions");
    moments->require_subcommand(1);
    int mo_n = 60, mo_m = 3;
    {
        auto* s = leaf(moments, "table", "M_0..M_5, mu_0..mu_3, nu_0..nu_3");
        s->callback([&] {
            action = [&] {
                const auto& t = moment_table();
                Record rec;
                for (int j = 0; j < 6; ++j) rec("M" + std::to_string(j), t.M[j]);
                for (int j = 0; j < 4; ++j) rec("mu" + std::to_string(j), t.mu[j]);
                for (int j = 0; j < 4; ++j) rec("nu" + std::to_string(j), t.nu[j]);
                const std::string fmt = ctx.out.empty() ? "json" : ctx.out;
                rec.write(std::cout, fmt, ctx.digits());
                return 0;
            };
        });
        auto* e = leaf(moments, "expect", "E(L_n) and Var(L_n) expansions");
        e->add_option("--n", mo_n, "size")->required()->check(CLI::PositiveNumber);
        e->add_option("--m", mo_m, "order 0..3")->check(CLI::Range(0, 3));
        e->callback([&] {
            action = [&] {
                Record rec;
                rec("n", static_cast<long long>(mo_n))("m", static_cast<long long>(mo_m))(
                    "mean", expected_value(mo_n, mo_m))("variance", variance(mo_n, mo_m));
                if (mo_n <= 80) {
                    auto d = exact_dist(mo_n, ctx.cfg.thread_count());
                    rec("exact_mean", d.mean())("exact_variance", d.variance());
                }
                rec.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
    }

    // fform
    auto* fform = app.add_subcommand("fform", "linear F-forms in Q[s][q, q']");
    fform->require_subcommand(1);
    int ff_j = 3, ff_k = 0, ff_max = 8;
    std::vector<int> ff_rows, ff_cols;
    {
        auto* u = leaf(fform, "u", "F-form of u_jk");
        u->add_option("--j", ff_j, "row index")->required()->check(CLI::Range(0, 10));
        u->add_option("--k", ff_k, "column index")->required()->check(CLI::Range(0, 10));
        u->callback([&] {
            action = [&] {
                if (ff_j + ff_k > 10) throw DomainError("fform u: j + k must not exceed 10");
                auto res = lform_solve(st_u_prime(ff_j, ff_k), ff_j + ff_k + 1);
                print_fform(ctx, "u" + std::to_string(ff_j) + std::to_string(ff_k), res);
                return res.ok() ? 0 : 1;
            };
        });
        auto* m = leaf(fform, "minor", "F-form of a minor of (u_jk)");
        m->add_option("--rows", ff_rows, "row indices")->required()->delimiter(',');
        m->add_option("--cols", ff_cols, "column indices")->required()->delimiter(',');
        m->callback([&] {
            action = [&] {
                auto res = minor_fform(ff_rows, ff_cols);
                std::string label = "minor(";
                for (std::size_t i = 0; i < ff_rows.size(); ++i) label += (i ? "," : "") + std::to_string(ff_rows[i]);
                label += ";";
                for (std::size_t i = 0; i < ff_cols.size(); ++i) label += (i ? "," : "") + std::to_string(ff_cols[i]);
                print_fform(ctx, label + ")", res);
                return res.ok() ? 0 : 1;
            };
        });
        auto* t = leaf(fform, "table", "Shinault-Tracy table of u_jk");
        t->add_option("--max", ff_max, "largest j + k, at most 10")->check(CLI::Range(0, 10));
        t->callback([&] {
            action = [&] {
                auto tab = st_table(ff_max);
                if (ctx.format() == "json") {
                    auto arr = nlohmann::ordered_json::array();
                    for (const auto& [jk, f] : tab) {
                        nlohmann::ordered_json o;
                        o["j"] = jk.first;
                        o["k"] = jk.second;
                        o["order"] = f.order();
                        o["form"] = f.str();
                        o["p"] = fform_json(f);
                        arr.push_back(o);
                    }
                    std::cout << arr.dump(2) << "\n";
                } else {
                    Table out{{"j", "k", "order", "form"}, {}};
                    for (const auto& [jk, f] : tab)
                        out.add({static_cast<long long>(jk.first), static_cast<long long>(jk.second),
                                 static_cast<long long>(f.order()), f.str()});
                    out.write(std::cout, "csv", ctx.digits());
                }
                return 0;
            };
        });
    }

    // specfun
    auto* spec = app.add_subcommand("specfun", "Airy and Bessel functions, Olver polynomials");
    spec->require_subcommand(1);
    int sf_kmax = 3, sf_k = 0, sf_nu = 10, sf_m = 2;
    double sf_x = 0.0;
    {
        auto* o = leaf(spec, "olver", "Olver's A_k, B_k as exact polynomials");
        o->add_option("--kmax", sf_kmax, "largest k, 1..10")->check(CLI::Range(1, 10));
        o->callback([&] {
            action = [&] {
                auto tab = olver_tables(sf_kmax);
                for (int k = 0; k <= tab.kmax(); ++k) std::cout << "A_" << k << ": " << tab.A[k].str("t") << "\n";
                for (int k = 0; k <= tab.kmax(); ++k) std::cout << "B_" << k << ": " << tab.B[k].str("t") << "\n";
                return 0;
            };
        });
        auto* a = leaf(spec, "airy", "Ai^{(k)}(x)");
        a->add_option("--x", sf_x, "argument")->required();
        a->add_option("--k", sf_k, "derivative order 0..7")->check(CLI::Range(0, 7));
        a->callback([&] {
            action = [&] {
                Record()("x", sf_x)("k", static_cast<long long>(sf_k))("value", airy(sf_x, sf_k))
                    .write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
        auto* b = leaf(spec, "bessel", "J_nu(x)");
        b->add_option("--nu", sf_nu, "order")->required()->check(CLI::NonNegativeNumber);
        b->add_option("--x", sf_x, "argument")->required();
        b->callback([&] {
            action = [&] {
                Record()("nu", static_cast<long long>(sf_nu))("x", sf_x)("value", bessel_j(sf_nu, sf_x))
                    .write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
        auto* tr = leaf(spec, "transition", "uniform transition expansion of J_nu(nu + tau nu^{1/3})");
        tr->add_option("--nu", sf_nu, "order")->required()->check(CLI::PositiveNumber);
        tr->add_option("--tau", sf_x, "transition variable")->required();
        tr->add_option("--m", sf_m, "number of correction terms")->check(CLI::Range(0, 10));
        tr->callback([&] {
            action = [&] {
                Record()("nu", static_cast<long long>(sf_nu))("tau", sf_x)("m", static_cast<long long>(sf_m))(
                    "value", bessel_transition(sf_nu, sf_x, sf_m))
                    .write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
    }

    // kernels
    auto* kern = app.add_subcommand("kernels", "Bessel-to-Airy kernel expansion");
    kern->require_subcommand(1);
    int kr_nu = 100, kr_m = 2, kr_grid = 9;
    {
        auto* r = leaf(kern, "residual", "residual of the kernel expansion on a grid over [-4, 4]^2");
        r->add_option("--nu", kr_nu, "Bessel order")->required()->check(CLI::PositiveNumber);
        r->add_option("--m", kr_m, "order 0..2")->check(CLI::Range(0, 2));
        r->add_option("--grid", kr_grid, "grid points per axis")->check(CLI::Range(2, 1000));
        r->callback([&] {
            action = [&] {
                auto g = kernel_expansion_residual(kr_nu, kr_m, kr_grid);
                Table t{{"x", "y", "residual"}, {}};
                for (std::size_t i = 0; i < g.x.size(); ++i) t.add({g.x[i], g.y[i], g.residual[i]});
                t.write(std::cout, ctx.format(), ctx.digits());
                return 0;
            };
        });
    }

    // selftest
    bool quick = false;
    auto* st = app.add_subcommand("selftest", "run the built-in consistency checks");
    st->add_flag("--quick", quick, "skip the slower checks");
    st->callback([&] { action = [&] { return selftest(quick); }; });

    try {
        ctx.cfg = cli::load_config_from_env();
        app.parse(argc, argv);
        if (opt_threads) ctx.cfg.threads = *opt_threads;
        if (opt_digits) ctx.cfg.digits = *opt_digits;
        if (opt_m) ctx.cfg.quadrature_m = *opt_m;
        if (opt_trunc) ctx.cfg.truncation = *opt_trunc;
        if (opt_npts) ctx.cfg.tw_npts = *opt_npts;
        ctx.cfg.validate();
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::RequiredError& e) {
        // CLI11 reports missing options before unknown ones; name the unknown flag first
        if (auto bad = unknown_flag(app, argc, argv)) {
            std::cerr << "The following argument was not expected: " << *bad << "\nRun with --help for more information.\n";
            return 2;
        }
        app.exit(e);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (!action) {
        std::cerr << "usage error: no command given\n";
        return 2;
    }
    try {
        return action();
    } catch (const DomainError& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
