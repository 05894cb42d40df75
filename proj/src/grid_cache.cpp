#include "zetalab/grid_cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "zetalab/zeta.hpp"

namespace zetalab {
namespace {

thread_local long g_last_evals = 0;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const std::string& in, size_t& pos) {
    if (pos + 8 > in.size()) throw CacheCorrupt("grid cache: truncated record");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += 8;
    return v;
}

void put_f64(std::string& out, double d) {
    std::uint64_t v;
    static_assert(sizeof(v) == sizeof(d));
    std::memcpy(&v, &d, 8);
    put_u64(out, v);
}

double get_f64(const std::string& in, size_t& pos) {
    std::uint64_t v = get_u64(in, pos);
    double d;
    std::memcpy(&d, &v, 8);
    return d;
}

std::string key_string(int k, double t_lo, double t_hi, double step) {
    std::ostringstream ss;
    ss.precision(17);
    ss << k << '|' << t_lo << '|' << t_hi << '|' << step << '|' << kGridVersion;
    return ss.str();
}

std::string cache_path(const std::string& dir, const std::string& key) {
    char name[32];
    std::snprintf(name, sizeof(name), "%016llx.zgr",
                  static_cast<unsigned long long>(fnv1a(key)));
    return dir + "/" + name;
}

std::string encode(const GridSamples& g, double t_lo, double t_hi, double step) {
    std::string body;
    put_u64(body, static_cast<std::uint64_t>(g.k));
    put_f64(body, t_lo);
    put_f64(body, t_hi);
    put_f64(body, step);
    put_u64(body, g.version.size());
    body += g.version;
    put_u64(body, g.t_values.size());
    for (double t : g.t_values) put_f64(body, t);
    for (double v : g.values) put_f64(body, v);
    std::string out = "ZGR1";
    out += body;
    put_u64(out, fnv1a(body));
    return out;
}

// returns false on a clean key mismatch (treated as a miss)
bool decode(const std::string& raw, int k, double t_lo, double t_hi, double step,
            GridSamples& out) {
    if (raw.size() < 12 || raw.compare(0, 4, "ZGR1") != 0)
        throw CacheCorrupt("grid cache: bad magic");
    std::string body = raw.substr(4, raw.size() - 12);
    size_t cpos = raw.size() - 8;
    std::uint64_t want = get_u64(raw, cpos);
    if (fnv1a(body) != want) throw CacheCorrupt("grid cache: checksum mismatch");
    size_t pos = 0;
    GridSamples g;
    g.k = static_cast<int>(get_u64(body, pos));
    double lo = get_f64(body, pos), hi = get_f64(body, pos), st = get_f64(body, pos);
    std::uint64_t vlen = get_u64(body, pos);
    if (pos + vlen > body.size()) throw CacheCorrupt("grid cache: truncated version");
    g.version = body.substr(pos, vlen);
    pos += vlen;
    std::uint64_t n = get_u64(body, pos);
    if (body.size() - pos != 16 * n) throw CacheCorrupt("grid cache: length mismatch");
    if (g.k != k || lo != t_lo || hi != t_hi || st != step || g.version != kGridVersion)
        return false;
    g.t_values.resize(n);
    g.values.resize(n);
    for (auto& t : g.t_values) t = get_f64(body, pos);
    for (auto& v : g.values) v = get_f64(body, pos);
    out = std::move(g);
    return true;
}

}  // namespace

void RunConfig::validate() const {
    if (!(tol > 0)) throw BadParams("RunConfig: tol must be > 0");
    if (!(t_ceiling > 0) || t_ceiling > 1e6)
        throw BadParams("RunConfig: t_ceiling must be in (0, 1e6]");
    if (threads < 1) throw BadParams("RunConfig: threads must be >= 1");
    if (output_format != "csv" && output_format != "json")
        throw BadParams("RunConfig: output_format must be csv or json");
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_run_config: cannot open " + path);
    RunConfig cfg;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("load_run_config: expected key = value at line " +
                                 std::to_string(lineno));
            continue;
        }
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        try {
            if (key == "tol")
                cfg.tol = std::stod(val);
            else if (key == "t_ceiling")
                cfg.t_ceiling = std::stod(val);
            else if (key == "cache_dir")
                cfg.cache_dir = val;
            else if (key == "threads")
                cfg.threads = std::stoi(val);
            else if (key == "spectral_path")
                cfg.spectral_path = val;
            else if (key == "output_format")
                cfg.output_format = val;
            else
                throw ParseError("load_run_config: unknown key '" + key + "' at line " +
                                 std::to_string(lineno));
        } catch (const std::invalid_argument&) {
            throw ParseError("load_run_config: bad value at line " + std::to_string(lineno));
        }
    }
    cfg.validate();
    return cfg;
}

long grid_cache_last_evals() { return g_last_evals; }

GridSamples cache_get_or_compute(int k, double t_lo, double t_hi, double step,
                                 const RunConfig& cfg) {
    cfg.validate();
    if (!(t_lo < t_hi) || !(step > 0))
        throw BadParams("cache_get_or_compute: requires t_lo < t_hi and step > 0");
    if (t_hi > cfg.t_ceiling) throw BadParams("cache_get_or_compute: grid above t_ceiling");
    g_last_evals = 0;
    std::string key = key_string(k, t_lo, t_hi, step);
    std::string path;
    if (!cfg.cache_dir.empty()) {
        std::filesystem::create_directories(cfg.cache_dir);
        path = cache_path(cfg.cache_dir, key);
        std::ifstream in(path, std::ios::binary);
        if (in) {
            std::ostringstream raw;
            raw << in.rdbuf();
            try {
                GridSamples g;
                if (decode(raw.str(), k, t_lo, t_hi, step, g)) return g;
            } catch (const CacheCorrupt& e) {
                std::fprintf(stderr, "warning: %s; recomputing %s\n", e.what(), path.c_str());
            }
        }
    }

    GridSamples g;
    g.k = k;
    g.version = kGridVersion;
    for (double t = t_lo; t <= t_hi + step * 1e-9; t += step) g.t_values.push_back(t);
    size_t n = g.t_values.size();
    g.values.assign(n, 0.0);
    int workers = std::min<int>(cfg.threads, static_cast<int>(n));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) g.values[i] = zeta_pow_modulus(g.t_values[i], k);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (size_t i = w; i < n; i += workers)
                    g.values[i] = zeta_pow_modulus(g.t_values[i], k);
            });
        for (auto& th : pool) th.join();
    }
    g_last_evals = static_cast<long>(n);

    if (!path.empty()) {
        std::string blob = encode(g, t_lo, t_hi, step);
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
        }
        std::filesystem::rename(tmp, path);
    }
    return g;
}

}  // namespace zetalab
