#include "gaboost/genetic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gaboost/parallel.hpp"

namespace gaboost {

Chromosome::Chromosome(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t& b : bits_) {
        if (b > 1) throw std::invalid_argument("chromosome bits must be 0 or 1");
    }
}

Chromosome Chromosome::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("chromosome string must be 0/1");
        bits.push_back(ch == '1' ? 1 : 0);
    }
    return Chromosome(std::move(bits));
}

std::string Chromosome::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (std::uint8_t b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

int field_bits(int window_w, int window_h) {
    const int largest = std::max(window_w, window_h);
    if (largest < 1) throw std::invalid_argument("window must be at least 1x1");
    return std::bit_width(static_cast<unsigned>(largest));
}

namespace {

void check_bits(int bits) {
    if (bits < 1 || bits > 30) throw std::invalid_argument("field width must be in [1, 30] bits");
}

void write_field(std::vector<std::uint8_t>& out, int value, int bits) {
    if (value < 0 || value > (1 << bits) - 1) {
        throw std::invalid_argument("field value " + std::to_string(value) + " does not fit in " +
                                    std::to_string(bits) + " bits");
    }
    for (int b = bits - 1; b >= 0; --b) out.push_back(static_cast<std::uint8_t>((value >> b) & 1));
}

int read_field(const Chromosome& c, std::size_t offset, int bits) {
    int value = 0;
    for (int b = 0; b < bits; ++b) value = (value << 1) | (c.bit(offset + b) ? 1 : 0);
    return value;
}

}  // namespace

Chromosome encode(const HaarGeometry& g, int bits) {
    check_bits(bits);
    std::vector<std::uint8_t> out;
    out.reserve(4 * static_cast<std::size_t>(bits));
    write_field(out, g.x, bits);
    write_field(out, g.y, bits);
    write_field(out, g.width, bits);
    write_field(out, g.height, bits);
    return Chromosome(std::move(out));
}

HaarGeometry decode(const Chromosome& c, int bits) {
    check_bits(bits);
    const auto b = static_cast<std::size_t>(bits);
    if (c.size() != 4 * b) {
        throw std::invalid_argument("chromosome has " + std::to_string(c.size()) +
                                    " bits, expected " + std::to_string(4 * b));
    }
    return {read_field(c, 0, bits), read_field(c, b, bits), read_field(c, 2 * b, bits),
            read_field(c, 3 * b, bits)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, std::size_t cut) {
    if (a.size() != b.size()) throw std::invalid_argument("crossover: parent lengths differ");
    if (cut < 1 || cut + 1 > a.size()) throw std::invalid_argument("crossover: cut out of range");
    std::vector<std::uint8_t> first(a.bits().begin(), a.bits().begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<std::uint8_t> second(b.bits().begin(), b.bits().begin() + static_cast<std::ptrdiff_t>(cut));
    first.insert(first.end(), b.bits().begin() + static_cast<std::ptrdiff_t>(cut), b.bits().end());
    second.insert(second.end(), a.bits().begin() + static_cast<std::ptrdiff_t>(cut), a.bits().end());
    return {Chromosome(std::move(first)), Chromosome(std::move(second))};
}

Chromosome mutate(const Chromosome& c, std::size_t index) {
    if (index >= c.size()) throw std::invalid_argument("mutate: bit index out of range");
    std::vector<std::uint8_t> bits = c.bits();
    bits[index] ^= 1;
    return Chromosome(std::move(bits));
}

void GeneticConfig::validate() const {
    if (population < 1) throw std::invalid_argument("population size must be > 0");
    if (generations < 1) throw std::invalid_argument("generation count must be > 0");
    if (!(crossover_rate > 0.0 && crossover_rate <= 1.0)) {
        throw std::invalid_argument("crossover rate must be in (0, 1]");
    }
    if (!(mutation_rate > 0.0 && mutation_rate <= 1.0)) {
        throw std::invalid_argument("mutation rate must be in (0, 1]");
    }
    if (restarts < 1) throw std::invalid_argument("restart count must be >= 1");
}

namespace {

// ceil(n * rate) without 0.3 * 50 = 15.000000000000002 rounding up to 16.
int ceil_count(int n, double rate) {
    const double raw = static_cast<double>(n) * rate;
    const double nearest = std::round(raw);
    if (std::abs(raw - nearest) <= 1e-9 * std::max(1.0, raw)) return static_cast<int>(nearest);
    return static_cast<int>(std::ceil(raw));
}

}  // namespace

int GeneticConfig::children_per_generation() const { return ceil_count(population, crossover_rate); }

int GeneticConfig::mutations_per_generation() const { return ceil_count(population, mutation_rate); }

std::uint64_t GeneticConfig::max_evaluations_per_run() const {
    return static_cast<std::uint64_t>(population) +
           static_cast<std::uint64_t>(generations) *
               static_cast<std::uint64_t>(children_per_generation() + mutations_per_generation());
}

FitnessEvaluator::FitnessEvaluator(const IntegralDataset& data, std::span<const double> weights,
                                   HaarType type)
    : data_(data),
      weights_(weights),
      type_(type),
      bits_(field_bits(data.window_w, data.window_h)) {
    if (weights.size() != data.size()) throw std::invalid_argument("fitness: weight count mismatch");
}

FitnessResult FitnessEvaluator::operator()(const Chromosome& c) {
    ++evaluations_;
    const HaarGeometry g = decode(c, bits_);
    if (!is_valid_geometry(g, type_, data_.window_w, data_.window_h)) return {};
    feature_values(data_, g, type_, values_);
    const StumpFit fit = stump_.fit(values_, data_.labels, weights_);
    FitnessResult r;
    r.valid = true;
    r.error = fit.error;
    r.zero_error = fit.error == 0.0;
    r.fitness = 1.0 / std::max(fit.error, kMinError);
    return r;
}

FitnessResult fitness(const Chromosome& c, HaarType type, const IntegralDataset& data,
                      std::span<const double> weights) {
    FitnessEvaluator eval(data, weights, type);
    return eval(c);
}

bool ranks_before(const ScoredMember& a, const ScoredMember& b) {
    if (a.fitness != b.fitness) return a.fitness > b.fitness;
    if (a.zero_error != b.zero_error) return a.zero_error;
    return a.chromosome < b.chromosome;
}

namespace {

Chromosome random_chromosome(std::size_t length, Engine& rng) {
    std::vector<std::uint8_t> bits(length);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (i % 64 == 0) word = rng();
        bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
    }
    return Chromosome(std::move(bits));
}

ScoredMember score(FitnessEvaluator& eval, Chromosome c) {
    const FitnessResult r = eval(c);
    return {std::move(c), r.fitness, r.zero_error};
}

}  // namespace

EvolveResult evolve(HaarType type, const IntegralDataset& data, std::span<const double> weights,
                    const GeneticConfig& cfg, Engine& rng) {
    cfg.validate();
    FitnessEvaluator eval(data, weights, type);
    const std::size_t length = 4 * static_cast<std::size_t>(eval.bits());
    const auto n = static_cast<std::size_t>(cfg.population);
    const auto n_children = static_cast<std::size_t>(cfg.children_per_generation());
    const auto n_mutations = static_cast<std::size_t>(cfg.mutations_per_generation());

    EvolveResult result;
    std::vector<ScoredMember> pool;
    pool.reserve(n + n_children);
    for (std::size_t i = 0; i < n; ++i) pool.push_back(score(eval, random_chromosome(length, rng)));
    std::sort(pool.begin(), pool.end(), ranks_before);
    result.best_fitness.push_back(pool.front().fitness);

    auto any_zero = [&] {
        return std::any_of(pool.begin(), pool.end(), [](const ScoredMember& m) { return m.zero_error; });
    };

    std::uniform_int_distribution<std::size_t> cut_dist(1, length - 1);
    std::uniform_int_distribution<std::size_t> bit_dist(0, length - 1);
    std::vector<std::size_t> candidates;

    bool stop = any_zero();
    for (int gen = 1; gen <= cfg.generations && !stop; ++gen) {
        // pool is sorted best-first here; pair (0,1), (2,3), ... cycling if needed
        const std::size_t parents = pool.size();
        std::vector<ScoredMember> children;
        children.reserve(n_children);
        for (std::size_t p = 0; children.size() < n_children; ++p) {
            const ScoredMember& a = pool[(2 * p) % parents];
            const ScoredMember& b = pool[(2 * p + 1) % parents];
            auto [c1, c2] = crossover(a.chromosome, b.chromosome, cut_dist(rng));
            children.push_back(score(eval, std::move(c1)));
            if (children.size() < n_children) children.push_back(score(eval, std::move(c2)));
        }
        pool.insert(pool.end(), std::make_move_iterator(children.begin()),
                    std::make_move_iterator(children.end()));

        const auto elite = static_cast<std::size_t>(
            std::min_element(pool.begin(), pool.end(), ranks_before) - pool.begin());
        candidates.clear();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (i != elite) candidates.push_back(i);
        }
        std::vector<std::size_t> targets;
        std::sample(candidates.begin(), candidates.end(), std::back_inserter(targets),
                    std::min(n_mutations, candidates.size()), rng);
        for (std::size_t idx : targets) {
            pool[idx] = score(eval, mutate(pool[idx].chromosome, bit_dist(rng)));
        }

        std::sort(pool.begin(), pool.end(), ranks_before);
        pool.resize(std::min(pool.size(), n));

        result.best_fitness.push_back(pool.front().fitness);
        result.population_sizes.push_back(pool.size());
        result.generations_run = gen;
        stop = any_zero();
    }

    result.best = pool.front();
    result.zero_error = result.best.zero_error;
    result.evaluations = eval.evaluations();
    return result;
}

GeneticLearnerResult genetic_weak_learner(const IntegralDataset& data,
                                          std::span<const double> weights,
                                          const GeneticConfig& cfg, bool parallel) {
    cfg.validate();
    const auto runs_per_type = static_cast<std::size_t>(cfg.restarts);
    const std::size_t total = kHaarTypeCount * runs_per_type;

    std::vector<EvolveResult> results(total);
    parallel_for(total, parallel ? default_thread_count() : 1, [&](std::size_t i) {
        const HaarType type = kAllHaarTypes[i / runs_per_type];
        const std::size_t run = i % runs_per_type;
        Engine rng = make_engine(derive_seed(cfg.seed, static_cast<std::uint64_t>(type_index(type)), run));
        results[i] = evolve(type, data, weights, cfg, rng);
    });

    GeneticLearnerResult out;
    std::size_t best = 0;
    for (std::size_t i = 0; i < total; ++i) {
        const EvolveResult& r = results[i];
        out.runs.push_back({kAllHaarTypes[i / runs_per_type], static_cast<int>(i % runs_per_type),
                            r.best.fitness, r.evaluations, r.zero_error});
        out.evaluations += r.evaluations;
        // strict > keeps the lowest (type, run) among equal fitness
        const bool better = r.best.fitness > results[best].best.fitness ||
                            (r.best.fitness == results[best].best.fitness && r.zero_error &&
                             !results[best].zero_error);
        if (better) best = i;
    }
    if (!(results[best].best.fitness > 0.0)) throw std::runtime_error("no valid classifier");

    const HaarType type = kAllHaarTypes[best / runs_per_type];
    const HaarGeometry g = decode(results[best].best.chromosome, field_bits(data.window_w, data.window_h));
    std::vector<double> values;
    feature_values(data, g, type, values);
    const StumpFit fit = learn_stump(values, data.labels, weights);

    out.weak = {g, type, fit.params.polarity, fit.params.threshold};
    out.error = fit.error;
    out.zero_error = fit.error == 0.0;
    return out;
}

std::uint64_t round_seed(std::uint64_t seed, int round) {
    return derive_seed(seed, 0x726f756e64ULL, static_cast<std::uint64_t>(round));
}

GeneticLearner::GeneticLearner(GeneticConfig cfg, bool parallel) : cfg_(cfg), parallel_(parallel) {
    cfg_.validate();
}

WeakLearnerResult GeneticLearner::learn(const IntegralDataset& data, std::span<const double> weights,
                                        int round) {
    GeneticConfig cfg = cfg_;
    cfg.seed = round_seed(cfg_.seed, round);
    last_ = genetic_weak_learner(data, weights, cfg, parallel_);
    return {last_.weak, last_.error, last_.evaluations};
}

}  // namespace gaboost
