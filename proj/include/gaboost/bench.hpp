#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaboost/boost.hpp"
#include "gaboost/core.hpp"
#include "gaboost/genetic.hpp"

namespace gaboost {

enum class LearnerKind { Exhaustive, Genetic };

std::string_view learner_name(LearnerKind kind);

struct LearnerConfig {
    LearnerKind kind = LearnerKind::Genetic;
    GeneticConfig genetic;  // seed is replaced by the benchmark seed
};

/// One config per line: "exhaustive" or "genetic [S=..] [N=..] [Kmax=..] [Rc=..] [Rm=..]".
/// Omitted keys take the GeneticConfig defaults. '#' starts a comment.
std::vector<LearnerConfig> parse_bench_configs(std::istream& in);
std::vector<LearnerConfig> load_bench_configs(const std::filesystem::path& path);

struct BenchRow {
    LearnerConfig config;
    int rounds = 0;                 // rounds actually run
    double seconds_per_round = 0.0;
    double evals_per_round = 0.0;
    double accel_time = 0.0;        // NaN when there is no timed exhaustive row
    double accel_evals = 0.0;
    double train_error = 0.0;
    double test_error = 0.0;
    std::vector<RoundInfo> round_log;
};

struct BenchOptions {
    int rounds = 10;
    std::uint64_t seed = 0;
    bool parallel = false;  // timings are only comparable when false
};

using BenchProgress = std::function<void(std::size_t config_index, const RoundInfo&)>;

/// Trains one strong classifier per config (in order) and reports per-round cost
/// and errors. Acceleration is measured against the exhaustive row if one is
/// present, otherwise evaluation counts are compared with the counted (untimed)
/// exhaustive candidate total and accel_time is NaN. Per-round times exclude
/// integral-image precomputation.
std::vector<BenchRow> run_benchmark(const Dataset& train, const Dataset& test,
                                    std::span<const LearnerConfig> configs, const BenchOptions& opts,
                                    const BenchProgress& progress = {});

inline constexpr std::string_view kBenchCsvHeader =
    "learner,S,N,Kmax,Rc,Rm,rounds,sec_per_round,evals_per_round,accel_time,accel_evals,"
    "train_error,test_error";

/// Header line plus one line per row; reals with 6 significant digits.
std::string bench_csv(std::span<const BenchRow> rows);
void write_bench_csv(const std::filesystem::path& path, std::span<const BenchRow> rows);

}  // namespace gaboost
