#pragma once

// Run configuration and the on-disk cache of |zeta(1/2+it)|^{2k} sample
// grids ("ZGR1" binary records, one file per grid, exact-match lookup).

#include <string>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab {

struct RunConfig {
    double tol = 1e-6;
    double t_ceiling = 1e5;
    std::string cache_dir;  // empty: caching disabled
    int threads = 1;
    std::string spectral_path;
    std::string output_format = "csv";  // csv | json

    void validate() const;
};

// "key = value" per line; '#' comments.  Unknown keys are rejected.
RunConfig load_run_config(const std::string& path);

struct GridSamples {
    int k = 1;
    std::vector<double> t_values;  // ascending
    std::vector<double> values;    // |zeta(1/2+it)|^{2k}
    std::string version;
};

inline constexpr const char* kGridVersion = "zetalab-grid-1";

// Cached uniform grid t = t_lo, t_lo+step, ... (<= t_hi).  A hit requires the
// exact (k, t_lo, t_hi, step, version) key; corrupt files are recomputed with
// a warning on stderr.  Evaluation is split across cfg.threads workers with
// index-ordered (deterministic) assembly.
GridSamples cache_get_or_compute(int k, double t_lo, double t_hi, double step,
                                 const RunConfig& cfg);

// Number of zeta evaluations performed by the last cache_get_or_compute call
// in this thread (0 on a pure cache hit); exposed for cache tests.
long grid_cache_last_evals();

}  // namespace zetalab
