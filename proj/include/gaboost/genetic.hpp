#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaboost/haar.hpp"
#include "gaboost/rng.hpp"
#include "gaboost/stump.hpp"
#include "gaboost/weak.hpp"

namespace gaboost {

/// Fixed-length bit string encoding (x, y, width, height), one big-endian
/// field of `bits` bits each, in that order.
class Chromosome {
public:
    Chromosome() = default;
    explicit Chromosome(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters.
    static Chromosome from_string(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool bit(std::size_t i) const { return bits_[i] != 0; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::string to_string() const;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
    friend auto operator<=>(const Chromosome&, const Chromosome&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Bits per field: smallest B with 2^B > max(window_w, window_h).
int field_bits(int window_w, int window_h);

Chromosome encode(const HaarGeometry& g, int bits);
HaarGeometry decode(const Chromosome& c, int bits);

/// 1-point crossover: bits at positions >= cut are swapped between the parents.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, std::size_t cut);

/// Copy of `c` with bit `index` flipped.
Chromosome mutate(const Chromosome& c, std::size_t index);

struct GeneticConfig {
    int population = 50;       // N
    int generations = 10;      // K_max
    double crossover_rate = 0.3;
    double mutation_rate = 0.1;
    int restarts = 1;          // S
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on an out-of-range field.
    void validate() const;

    int children_per_generation() const;   // ceil(N * R_c)
    int mutations_per_generation() const;  // ceil(N * R_m)

    /// N + K_max * (ceil(N R_c) + ceil(N R_m)).
    std::uint64_t max_evaluations_per_run() const;
};

/// Stump errors are floored here before inversion, so fitness stays finite.
inline constexpr double kMinError = 1e-10;

struct FitnessResult {
    double fitness = 0.0;
    double error = 1.0;       // weighted error of the best stump; 1 for invalid geometry
    bool valid = false;
    bool zero_error = false;  // exact zero training error
};

/// Fitness of chromosomes for one feature type on a fixed weighted dataset.
/// Invalid decodes score 0; otherwise 1 / max(E, kMinError) with E the optimal
/// stump error for that geometry.
class FitnessEvaluator {
public:
    FitnessEvaluator(const IntegralDataset& data, std::span<const double> weights, HaarType type);

    FitnessResult operator()(const Chromosome& c);

    int bits() const { return bits_; }
    HaarType type() const { return type_; }
    std::uint64_t evaluations() const { return evaluations_; }

private:
    const IntegralDataset& data_;
    std::span<const double> weights_;
    HaarType type_;
    int bits_;
    std::uint64_t evaluations_ = 0;
    std::vector<double> values_;
    StumpLearner stump_;
};

FitnessResult fitness(const Chromosome& c, HaarType type, const IntegralDataset& data,
                      std::span<const double> weights);

struct ScoredMember {
    Chromosome chromosome;
    double fitness = 0.0;
    bool zero_error = false;
};

/// Selection order: higher fitness first, then exact-zero error, then lexicographically smaller bits.
bool ranks_before(const ScoredMember& a, const ScoredMember& b);

struct EvolveResult {
    ScoredMember best;
    std::uint64_t evaluations = 0;
    int generations_run = 0;
    bool zero_error = false;
    /// best_fitness[0] is the initial population; entry k follows generation k.
    std::vector<double> best_fitness;
    /// Population size after each generation's selection step.
    std::vector<std::size_t> population_sizes;
};

/// One run of the genetic weak learner for a single feature type.
///
/// Each generation adds ceil(N R_c) crossover children from pairs of the best
/// members, flips one random bit in ceil(N R_m) random members other than the
/// current best, and keeps the N best. Children are scored when created and
/// mutated members are rescored, so each generation costs exactly
/// ceil(N R_c) + ceil(N R_m) evaluations. Stops early on a zero-error member.
EvolveResult evolve(HaarType type, const IntegralDataset& data, std::span<const double> weights,
                    const GeneticConfig& cfg, Engine& rng);

struct RunLog {
    HaarType type = HaarType::EdgeH;
    int run = 0;
    double fitness = 0.0;
    std::uint64_t evaluations = 0;
    bool zero_error = false;
};

struct GeneticLearnerResult {
    WeakClassifier weak;
    double error = 0.0;
    std::uint64_t evaluations = 0;
    bool zero_error = false;
    std::vector<RunLog> runs;  // type-major, run-minor order
};

/// Runs evolve S times for each of the five feature types, each run on its own
/// stream derived from (cfg.seed, type, run), and returns the best classifier
/// with polarity and threshold re-learned by the stump learner. Ties go to the
/// lower type index, then the lower run index. Results do not depend on
/// `parallel`.
GeneticLearnerResult genetic_weak_learner(const IntegralDataset& data,
                                          std::span<const double> weights,
                                          const GeneticConfig& cfg, bool parallel = false);

/// Adapter for the boosting driver. Round r uses a seed derived from (cfg.seed, r).
class GeneticLearner : public WeakLearner {
public:
    explicit GeneticLearner(GeneticConfig cfg, bool parallel = false);

    WeakLearnerResult learn(const IntegralDataset& data, std::span<const double> weights,
                            int round) override;

    const GeneticConfig& config() const { return cfg_; }
    const GeneticLearnerResult& last() const { return last_; }

private:
    GeneticConfig cfg_;
    bool parallel_;
    GeneticLearnerResult last_;
};

std::uint64_t round_seed(std::uint64_t seed, int round);

}  // namespace gaboost
