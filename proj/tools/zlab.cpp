// zlab: command-line front end for the zeta transform laboratory.
// Subcommands compute pointwise values, run identity verifications against
// the registry, fit moment coefficients and manage the sample grid cache.
// Output is CSV or JSON on stdout; diagnostics go to stderr.
// Exit codes: 0 success / verification pass, 1 computation failure or
// verification fail, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetalab/grid_cache.hpp"
#include "zetalab/laplace.hpp"
#include "zetalab/mellin.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/spectral.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using nlohmann::json;

namespace {

// one output row: ordered (field, value) pairs
using Row = std::vector<std::pair<std::string, json>>;

void emit(const std::vector<Row>& rows, const std::string& format) {
    if (rows.empty()) return;
    if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (const auto& [k, v] : row) obj[k] = v;
            arr.push_back(obj);
        }
        std::printf("%s\n", arr.dump(2).c_str());
        return;
    }
    std::string header;
    for (const auto& [k, v] : rows.front()) {
        if (!header.empty()) header += ',';
        header += k;
    }
    std::printf("%s\n", header.c_str());
    for (const auto& row : rows) {
        std::string line;
        for (const auto& [k, v] : row) {
            if (!line.empty()) line += ',';
            if (v.is_number_float()) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.12g", v.get<double>());
                line += buf;
            } else if (v.is_string()) {
                line += v.get<std::string>();
            } else {
                line += v.dump();
            }
        }
        std::printf("%s\n", line.c_str());
    }
}

Row report_row(const std::string& name, const IdentityReport& r) {
    return {{"identity", name},
            {"lhs_re", r.lhs.real()},
            {"lhs_im", r.lhs.imag()},
            {"rhs_re", r.rhs.real()},
            {"rhs_im", r.rhs.imag()},
            {"abs_err", r.abs_err},
            {"tol", r.tol},
            {"pass", r.pass}};
}

std::string divisor_cache_path(const RunConfig& cfg) {
    if (cfg.cache_dir.empty()) return {};
    return cfg.cache_dir + "/divisors.bin";
}

// ----------------------------------------------------------------------------
// verification registry

IdentityReport verify_kober(const RunConfig& cfg) {
    // the residual L_1(sigma') - kober_main(sigma') tends to the constant c_0
    // of the Kober expansion; its successive differences must shrink
    double sig_primes[4] = {0.1, 0.05, 0.02, 0.01};
    double resid[4];
    for (int i = 0; i < 4; ++i) {
        TransformValue l = laplace_transform(1, cplx(sig_primes[i]), cfg.tol);
        resid[i] = l.value.real() - kober_main(sig_primes[i]);
    }
    double d1 = std::abs(resid[1] - resid[0]);
    double d2 = std::abs(resid[2] - resid[1]);
    double d3 = std::abs(resid[3] - resid[2]);
    IdentityReport r;
    r.lhs = resid[3];  // best estimate of c_0
    r.rhs = resid[2];
    r.abs_err = d3;
    r.tol = 0.05;
    r.pass = d1 > d2 && d2 > d3 && d3 < r.tol;
    return r;
}

IdentityReport verify_atkinson(const RunConfig& cfg) {
    // lambda_1(s) = L_1(s) - explicit part is O(1) in the strip
    DivisorTable table = cfg.cache_dir.empty()
                             ? DivisorTable::build(40000)
                             : DivisorTable::load_or_build(divisor_cache_path(cfg), 40000);
    IdentityReport r;
    cplx s(0.4, 0.0);
    TransformValue l = laplace_transform(1, s, cfg.tol);
    cplx expl = atkinson_l1(s, 40000, table);
    r.lhs = l.value;
    r.rhs = expl;
    r.abs_err = std::abs(l.value - expl);
    r.tol = 1.0;  // |lambda_1| is O((|s|+1)^{-1}) with an unspecified constant
    r.pass = r.abs_err < r.tol;
    return r;
}

IdentityReport verify_bridge(const RunConfig& cfg) {
    // L_1(1/T) = (1/T) int_0^inf I_1(t) e^{-t/T} dt at T = 20
    double T = 20.0;
    TransformValue l = laplace_transform(1, cplx(1.0 / T), cfg.tol);
    double t_max = T * (std::log(1.0 / cfg.tol) + 20.0);
    CumulativeMoment cm(1, t_max, 1e-8);
    QuadOptions opt;
    // clamp: past t_max the e^{-t/T} weight is ~e^{-33}, the tail sampler
    // only probes the growth constant there
    auto f = [&](double t) -> cplx { return cm.value(std::min(t, t_max)); };
    QuadResult q = integrate_exp_tail(f, 0.0, 1.0 / T, cfg.tol, 1.1, opt);
    IdentityReport r;
    r.lhs = l.value;
    r.rhs = q.value / T;
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.tol = std::max(1e-3, l.err_est + q.err_est / T);
    r.pass = r.abs_err <= r.tol;
    return r;
}

IdentityReport verify_recurrence(const RunConfig& cfg) {
    ContourSpec spec{1.3, -80.0, 80.0, 1.0};
    TransformValue rhs = recurrence_rhs(2, 1, cplx(3.0), spec, 1e-3);
    TransformValue lhs = mellin_transform(2, cplx(3.0), cfg.tol);
    IdentityReport r;
    r.lhs = lhs.value;
    r.rhs = rhs.value;
    r.abs_err = std::abs(lhs.value - rhs.value);
    r.tol = 1e-2 * std::abs(lhs.value);
    r.pass = r.abs_err <= r.tol;
    return r;
}

IdentityReport verify_square(const RunConfig& cfg) {
    IdentityReport r = square_identity_report(1, cplx(4.0), 1e4, 1e-3, {});
    (void)cfg;
    IdentityReport g = square_identity_general([](double) { return cplx(1.0); }, 1.0, 2.0,
                                               cplx(3.0), 1e-10);
    bool exact = std::abs(g.lhs - cplx(9.0 / 64.0)) < 1e-12 &&
                 std::abs(g.rhs - cplx(9.0 / 64.0)) < 1e-12;
    r.pass = r.pass && exact;
    return r;
}

IdentityReport verify_principal(const RunConfig&) {
    const MomentPolynomial& poly = default_moment_poly(1);
    const ErrorTermTable& table = shared_error_table(1);
    double probes[3];
    double epss[3] = {0.2, 0.1, 0.05};
    for (int i = 0; i < 3; ++i) {
        TransformValue z = z1_continued(cplx(1.0 + epss[i]), poly, 1e-7, table);
        probes[i] = (epss[i] * epss[i] * z.value.real() - 1.0) / epss[i];
    }
    double richardson = 2.0 * probes[2] - probes[1];
    double target = 2.0 * kEulerGamma - std::log(kTwoPi);
    TransformValue z = z1_continued(cplx(1.05), poly, 1e-7, table);
    double second = 0.05 * 0.05 * z.value.real();
    IdentityReport r;
    r.lhs = richardson;
    r.rhs = target;
    r.abs_err = std::abs(richardson - target);
    r.tol = 0.25 * std::abs(target);
    r.pass = r.abs_err <= r.tol && second > 0.9 && second < 1.1;
    return r;
}

IdentityReport verify_pole5(const RunConfig&) {
    const MomentPolynomial& poly = default_moment_poly(2);
    const ErrorTermTable& table = shared_error_table(2);
    double a5 = 12.0 / (kPi * kPi);
    double probes[3], dev[3];
    double epss[3] = {0.3, 0.2, 0.1};
    for (int i = 0; i < 3; ++i) {
        TransformValue z = z2_continued(cplx(1.0 + epss[i]), poly, 1e-6, table);
        probes[i] = std::pow(epss[i], 5.0) * z.value.real();
        dev[i] = std::abs(probes[i] - a5);
    }
    IdentityReport r;
    r.lhs = probes[2];  // probe at eps = 0.1
    r.rhs = a5;
    r.abs_err = dev[2];
    // wide: the fitted lower-order coefficients put O(1) Laurent terms next
    // to the leading one, so desk-scale probes only bracket A_5
    r.tol = 0.5 * a5;
    r.pass = dev[0] <= r.tol && dev[1] <= r.tol && dev[2] <= r.tol;
    return r;
}

IdentityReport verify_smoothed(const RunConfig&) {
    return exp_smoothed_moment(1, 50.0, 1e-3);
}

IdentityReport run_verification(const std::string& name, const RunConfig& cfg) {
    if (name == "kober-2.1") return verify_kober(cfg);
    if (name == "atkinson-2.2") return verify_atkinson(cfg);
    if (name == "bridge-1.10") return verify_bridge(cfg);
    if (name == "recurrence-4.1") return verify_recurrence(cfg);
    if (name == "square-4.4") return verify_square(cfg);
    if (name == "principal-5.1") return verify_principal(cfg);
    if (name == "pole5-6.1") return verify_pole5(cfg);
    if (name == "smoothed-3.x") return verify_smoothed(cfg);
    throw BadParams("unknown identity '" + name +
                    "'; known: kober-2.1 atkinson-2.2 bridge-1.10 recurrence-4.1 "
                    "square-4.4 principal-5.1 pole5-6.1 smoothed-3.x");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zlab: numerical laboratory for Laplace/Mellin transforms of |zeta|^{2k}"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("ZLAB_CACHE_DIR")) cfg.cache_dir = env;
    std::string config_path;
    app.add_option("--config", config_path, "RunConfig file (key = value lines)");
    app.add_option("--tol", cfg.tol, "target tolerance");
    app.add_option("--cache-dir", cfg.cache_dir, "sample cache directory");
    app.add_option("--threads", cfg.threads, "worker threads for grid evaluation");
    app.add_option("--spectral", cfg.spectral_path, "spectral data file");
    app.add_option("--format", cfg.output_format, "output format: csv|json");

    auto* c_zeta = app.add_subcommand("zeta", "evaluate zeta(1/2+it)");
    double zt = 0.0;
    c_zeta->add_option("--t", zt, "ordinate t")->required();

    auto* c_moment = app.add_subcommand("moment", "moment integral I_k(T)");
    int mk = 1;
    double mt = 100.0;
    c_moment->add_option("--k", mk, "moment order k");
    c_moment->add_option("--t", mt, "upper limit T")->required();

    auto* c_laplace = app.add_subcommand("laplace", "Laplace transform L_k(s)");
    int lk = 1;
    double lsig = 0.1, ltau = 0.0;
    c_laplace->add_option("--k", lk, "order k");
    c_laplace->add_option("--sigma", lsig, "Re s")->required();
    c_laplace->add_option("--imag", ltau, "Im s");

    auto* c_mellin = app.add_subcommand("mellin", "modified Mellin transform Z_k(s)");
    int zk = 1;
    double zsig = 2.0, ztau = 0.0;
    bool zcont = false;
    c_mellin->add_option("--k", zk, "order k");
    c_mellin->add_option("--sigma", zsig, "Re s")->required();
    c_mellin->add_option("--imag", ztau, "Im s");
    c_mellin->add_flag("--continued", zcont, "use the analytic continuation (k = 1, 2)");

    auto* c_verify = app.add_subcommand("verify", "run a registered identity verification");
    std::string vname;
    c_verify->add_option("identity", vname, "identity name (e.g. square-4.4)")->required();

    auto* c_fit = app.add_subcommand("fit-coeffs", "fit main-term polynomial coefficients");
    int fk = 1;
    double ft_min = 500.0, ft_max = 3000.0;
    int fn = 6;
    c_fit->add_option("--k", fk, "moment order k");
    c_fit->add_option("--t-min", ft_min, "smallest sample T");
    c_fit->add_option("--t-max", ft_max, "largest sample T");
    c_fit->add_option("--n", fn, "number of samples");

    auto* c_spec = app.add_subcommand("spectral", "spectral-side evaluations");
    std::string sop;
    double sy = 10.0, ssig = 0.5, sT = 1000.0, sG = 100.0, sDelta = 100.0;
    double sK = 9.0, sKp = 14.0, st_par = 500.0;
    int sm = 3;
    c_spec->add_option("--op", sop, "big-r|sum-l2|itg-direct|itg-spectral|smsum|stdelta")
        ->required();
    c_spec->add_option("--y", sy, "argument of R(y)");
    c_spec->add_option("--sigma", ssig, "real s for sum-l2");
    c_spec->add_option("--T", sT, "T parameter");
    c_spec->add_option("--G", sG, "G parameter");
    c_spec->add_option("--delta", sDelta, "Delta parameter");
    c_spec->add_option("--K", sK, "dyadic lower edge K");
    c_spec->add_option("--K-prime", sKp, "dyadic upper edge K'");
    c_spec->add_option("--t", st_par, "t parameter of S_m");
    c_spec->add_option("--m", sm, "weight power m");

    auto* c_cache = app.add_subcommand("cache", "compute or fetch a sample grid");
    int ck = 1;
    double ct_lo = 0.0, ct_hi = 100.0, cstep = 0.5;
    c_cache->add_option("--k", ck, "power k");
    c_cache->add_option("--t-lo", ct_lo, "grid start");
    c_cache->add_option("--t-hi", ct_hi, "grid end")->required();
    c_cache->add_option("--step", cstep, "grid step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, any usage error exits 2
    }

    try {
        if (!config_path.empty()) {
            RunConfig file_cfg = load_run_config(config_path);
            // command-line flags win over the file
            for (auto* opt : app.get_options()) (void)opt;
            if (app.count("--tol") == 0) cfg.tol = file_cfg.tol;
            if (app.count("--cache-dir") == 0 && !file_cfg.cache_dir.empty())
                cfg.cache_dir = file_cfg.cache_dir;
            if (app.count("--threads") == 0) cfg.threads = file_cfg.threads;
            if (app.count("--spectral") == 0 && !file_cfg.spectral_path.empty())
                cfg.spectral_path = file_cfg.spectral_path;
            if (app.count("--format") == 0) cfg.output_format = file_cfg.output_format;
            cfg.t_ceiling = file_cfg.t_ceiling;
        }
        cfg.validate();

        std::vector<Row> rows;
        int exit_code = 0;

        if (c_zeta->parsed()) {
            cplx z = zeta_half_line(zt);
            rows.push_back({{"t", zt}, {"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}});
        } else if (c_moment->parsed()) {
            MomentSample s = moment_integral(mk, mt, cfg.tol);
            rows.push_back({{"k", mk}, {"t", s.t}, {"value", s.value}, {"err_est", s.err_est}});
        } else if (c_laplace->parsed()) {
            TransformValue v = laplace_transform(lk, cplx(lsig, ltau), cfg.tol);
            rows.push_back({{"k", lk},
                            {"sigma", lsig},
                            {"imag", ltau},
                            {"re", v.value.real()},
                            {"im", v.value.imag()},
                            {"err_est", v.err_est}});
        } else if (c_mellin->parsed()) {
            TransformValue v;
            if (zcont) {
                if (zk == 1)
                    v = z1_continued(cplx(zsig, ztau), default_moment_poly(1), cfg.tol,
                                     shared_error_table(1));
                else if (zk == 2)
                    v = z2_continued(cplx(zsig, ztau), default_moment_poly(2), cfg.tol,
                                     shared_error_table(2));
                else
                    throw BadParams("mellin --continued: k must be 1 or 2");
            } else {
                v = mellin_transform(zk, cplx(zsig, ztau), cfg.tol);
            }
            rows.push_back({{"k", zk},
                            {"sigma", zsig},
                            {"imag", ztau},
                            {"re", v.value.real()},
                            {"im", v.value.imag()},
                            {"err_est", v.err_est}});
        } else if (c_verify->parsed()) {
            IdentityReport r = run_verification(vname, cfg);
            rows.push_back(report_row(vname, r));
            exit_code = r.pass ? 0 : 1;
        } else if (c_fit->parsed()) {
            if (fn < 2) throw BadParams("fit-coeffs: need at least 2 samples");
            std::vector<MomentSample> samples;
            for (int i = 0; i < fn; ++i) {
                double t = ft_min + (ft_max - ft_min) * i / (fn - 1);
                samples.push_back(moment_integral(fk, t, cfg.tol));
            }
            std::map<int, double> pinned;
            if (fk == 1) pinned[1] = 1.0;
            if (fk == 2) pinned[4] = 1.0 / (2.0 * kPi * kPi);
            MomentPolynomial poly = fit_main_coeffs(fk, samples, pinned);
            for (size_t j = 0; j < poly.coeffs.size(); ++j)
                rows.push_back(
                    {{"k", fk},
                     {"index", static_cast<int>(j)},
                     {"coeff", poly.coeffs[j]},
                     {"provenance",
                      poly.provenance[j] == Provenance::pinned ? "pinned" : "fitted"}});
        } else if (c_spec->parsed()) {
            SpectralTable table;
            bool need_table = sop != "big-r" && sop != "itg-direct";
            if (need_table) {
                if (cfg.spectral_path.empty())
                    throw BadParams("spectral: --spectral <file> required for op " + sop);
                table = load_spectral_data(cfg.spectral_path);
            }
            if (sop == "big-r") {
                cplx r = big_r(sy);
                rows.push_back({{"y", sy}, {"re", r.real()}, {"im", r.imag()},
                                {"abs", std::abs(r)}});
            } else if (sop == "sum-l2") {
                cplx v = spectral_sum_l2(cplx(ssig), table);
                rows.push_back({{"sigma", ssig}, {"re", v.real()}, {"im", v.imag()}});
            } else if (sop == "itg-direct") {
                double v = i_tg_direct(sT, sG, cfg.tol);
                rows.push_back({{"T", sT}, {"G", sG}, {"value", v}});
            } else if (sop == "itg-spectral") {
                double v = i_tg_spectral(sT, sG, table);
                rows.push_back({{"T", sT}, {"G", sG}, {"value", v}});
            } else if (sop == "smsum") {
                double v = s_m_sum(sm, sK, sKp, st_par, table);
                rows.push_back(
                    {{"m", sm}, {"K", sK}, {"K_prime", sKp}, {"t", st_par}, {"value", v}});
            } else if (sop == "stdelta") {
                double excl = 0.0;
                double v = s_t_delta(sT, sDelta, table, cfg.tol, &excl);
                rows.push_back(
                    {{"T", sT}, {"delta", sDelta}, {"value", v}, {"excluded_bound", excl}});
            } else {
                throw BadParams("spectral: unknown op '" + sop + "'");
            }
        } else if (c_cache->parsed()) {
            GridSamples g = cache_get_or_compute(ck, ct_lo, ct_hi, cstep, cfg);
            rows.push_back({{"k", g.k},
                            {"n", static_cast<long>(g.t_values.size())},
                            {"evals", grid_cache_last_evals()},
                            {"first", g.values.front()},
                            {"last", g.values.back()}});
        }

        emit(rows, cfg.output_format);
        return exit_code;
    } catch (const BadParams& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
