#include "zetalab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zetalab/moments.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

void SpectralTable::validate() const {
    if (m < 1 || m > 3) throw ValidationError("SpectralTable: m must be 1, 2 or 3");
    double prev = 0.0;
    for (const auto& e : entries) {
        if (!(e.kappa > 0.0)) throw ValidationError("SpectralTable: kappa must be > 0");
        if (!std::isfinite(e.weight)) throw ValidationError("SpectralTable: non-finite weight");
        if (!(e.kappa > prev)) throw ValidationError("SpectralTable: duplicate kappa");
        prev = e.kappa;
    }
}

SpectralTable load_spectral_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_spectral_data: cannot open " + path);
    std::string line;
    SpectralTable table;
    bool have_header = false;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (!have_header) {
            std::istringstream ss(line);
            std::string tag, mkv;
            ss >> tag >> mkv;
            if (tag != "SPEC" || mkv.rfind("m=", 0) != 0)
                throw ParseError("load_spectral_data: bad header at line " +
                                 std::to_string(lineno));
            try {
                table.m = std::stoi(mkv.substr(2));
            } catch (const std::exception&) {
                throw ParseError("load_spectral_data: bad m value at line " +
                                 std::to_string(lineno));
            }
            have_header = true;
            continue;
        }
        std::istringstream ss(line);
        SpectralEntry e;
        if (!(ss >> e.kappa >> e.weight))
            throw ParseError("load_spectral_data: malformed entry at line " +
                             std::to_string(lineno));
        std::string extra;
        if (ss >> extra)
            throw ParseError("load_spectral_data: trailing tokens at line " +
                             std::to_string(lineno));
        table.entries.push_back(e);
    }
    if (!have_header) throw ParseError("load_spectral_data: missing SPEC header");
    std::sort(table.entries.begin(), table.entries.end(),
              [](const SpectralEntry& a, const SpectralEntry& b) { return a.kappa < b.kappa; });
    table.validate();
    return table;
}

cplx big_r(double y) {
    if (y == 0.0) throw PoleError("big_r: Gamma(2iy) pole at y = 0");
    const cplx i(0.0, 1.0);
    cplx half_iy(0.0, 0.5 * y);
    cplx lg = 0.5 * std::log(0.5 * kPi) +
              3.0 * (-i * y * std::log(2.0) + log_gamma(0.25 - half_iy) -
                     log_gamma(0.25 + half_iy)) +
              log_gamma(2.0 * i * y);
    // log cosh(pi y) without overflow
    double ay = std::abs(y);
    lg += kPi * ay + std::log1p(std::exp(-2.0 * kPi * ay)) - std::log(2.0);
    return require_finite(std::exp(lg), "big_r");
}

cplx spectral_sum_l2(cplx s, const SpectralTable& table) {
    table.validate();
    if (table.m != 3) throw WrongWeightPower("spectral_sum_l2: requires an m = 3 table");
    double r = std::abs(s);
    if (!(r > 0.0) || r > 1.0 + 1e-14)
        throw DomainError("spectral_sum_l2: requires 0 < |s| <= 1");
    if (!(std::abs(std::arg(s)) < kPi / 2.0))
        throw DomainError("spectral_sum_l2: requires |arg s| < pi/2");
    const cplx i(0.0, 1.0);
    cplx ls = std::log(s);
    cplx sum = 0.0;
    for (const auto& e : table.entries) {
        double k = e.kappa;
        cplx term = std::exp(-i * k * ls) * big_r(k) * gamma(cplx(0.5, k)) +
                    std::exp(i * k * ls) * big_r(-k) * gamma(cplx(0.5, -k));
        sum += e.weight * term;
    }
    return std::exp(-0.5 * ls) * sum;
}

double i_tg_direct(double T, double G, double tol, const EvalConfig& cfg) {
    if (!(T > 0.0) || !(G > 0.0)) throw DomainError("i_tg_direct: requires T > 0, G > 0");
    if (!(tol > 0)) throw BadParams("i_tg_direct: tol must be > 0");
    double u_max = G * std::sqrt(std::log(1.0 / tol) + 4.0);
    u_max = std::min(u_max, T - 1.0);  // keep the argument on t > 1
    QuadOptions opt;
    opt.freq_hint = [T](double u) { return zeta_freq(T + u); };
    auto f = [&](double u) -> cplx {
        return zeta_pow_modulus(T + u, 2, cfg) * std::exp(-(u / G) * (u / G));
    };
    QuadResult q = integrate_adaptive(f, -u_max, u_max, tol * kSqrtPi * G, opt);
    return q.value.real() / (kSqrtPi * G);
}

double i_tg_spectral(double T, double G, const SpectralTable& table) {
    table.validate();
    if (table.m != 3) throw WrongWeightPower("i_tg_spectral: requires an m = 3 table");
    if (!(T > 1.0)) throw DomainError("i_tg_spectral: requires T > 1");
    double lt = std::log(T);
    if (!(G >= std::sqrt(T) / lt) || !(G <= T / lt))
        throw DomainError("i_tg_spectral: G outside the validity window");
    double sum = 0.0;
    for (const auto& e : table.entries) {
        double k = e.kappa;
        double x = 0.5 * G * k / T;
        sum += e.weight / std::sqrt(k) * std::sin(k * std::log(k / (4.0 * std::exp(1.0) * T))) *
               std::exp(-x * x);
    }
    return kPi / std::sqrt(2.0 * T) * sum;
}

double s_m_sum(int m, double K, double K_prime, double t, const SpectralTable& table) {
    table.validate();
    if (table.m != m) throw WrongWeightPower("s_m_sum: table weight power mismatch");
    if (!(K >= 1.0) || !(K_prime > K) || !(K_prime <= 2.0 * K))
        throw BadParams("s_m_sum: requires 1 <= K < K' <= 2K");
    if (!(t > 0.0)) throw BadParams("s_m_sum: requires t > 0");
    double sum = 0.0;
    for (const auto& e : table.entries) {
        if (e.kappa <= K || e.kappa > K_prime) continue;
        sum += e.weight * std::cos(e.kappa * std::log(4.0 * std::exp(1.0) * t / e.kappa));
    }
    return sum;
}

double s_t_delta(double T, double Delta, const SpectralTable& table, double tol,
                 double* excluded_bound_out) {
    table.validate();
    if (table.m != 3) throw WrongWeightPower("s_t_delta: requires an m = 3 table");
    if (!(T > 1.0)) throw DomainError("s_t_delta: requires T > 1");
    if (!(Delta >= std::sqrt(T)) || !(Delta <= std::pow(T, 0.99)))
        throw DomainError("s_t_delta: Delta outside [sqrt(T), T^0.99]");
    if (!(tol > 0)) throw BadParams("s_t_delta: tol must be > 0");
    double cut = (T / Delta) * std::log(T);
    double pref = kPi * std::sqrt(0.5 * T);
    double sum = 0.0, excluded = 0.0;
    for (const auto& e : table.entries) {
        double k = e.kappa;
        double x = 0.5 * Delta * k / T;
        double mag = std::abs(e.weight) * std::pow(k, -1.5) * std::exp(-x * x);
        if (k > cut) {
            excluded += mag;
            continue;
        }
        sum += e.weight * std::pow(k, -1.5) *
               std::cos(k * std::log(k / (4.0 * std::exp(1.0) * T))) * std::exp(-x * x);
    }
    if (excluded_bound_out) *excluded_bound_out = pref * excluded;
    return pref * sum;
}

}  // namespace zetalab
