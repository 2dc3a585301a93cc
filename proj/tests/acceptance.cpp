// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli_util.hpp"
#include "gaboost/bench.hpp"
#include "gaboost/boost.hpp"
#include "gaboost/dataset_io.hpp"
#include "gaboost/exhaustive.hpp"
#include "gaboost/genetic.hpp"
#include "oracles.hpp"

using namespace gaboost;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

std::vector<double> to_double(const std::vector<Label>& labels) {
    return {labels.begin(), labels.end()};
}

Check stump_vs_brute_force() {
    Check c;
    std::mt19937_64 rng(101);
    const auto t0 = Clock::now();
    for (int inst = 0; inst < 200 && c.ok; ++inst) {
        const int n = 2 + static_cast<int>(rng() % 60);
        std::uniform_int_distribution<int> val(-20, 20);  // small range forces ties
        std::vector<double> v(n);
        std::vector<Label> y(n);
        for (int i = 0; i < n; ++i) {
            v[i] = val(rng);
            y[i] = (rng() & 1) ? 1 : -1;
        }
        const auto w = oracle::random_weights(rng, n);
        const StumpFit got = learn_stump(v, y, w);
        const auto want = oracle::brute_stump(v, y, w);
        c.require(got.error == want.error, "error differs on instance " + std::to_string(inst));
        c.require(got.params.threshold == want.threshold && got.params.polarity == want.polarity,
                  "parameters differ on instance " + std::to_string(inst));
    }
    const double secs = seconds_since(t0);
    c.require(secs < 5.0, "took " + std::to_string(secs) + " s");
    return c;
}

Check exhaustive_vs_naive() {
    Check c;
    std::mt19937_64 rng(202);
    const auto t0 = Clock::now();
    for (int inst = 0; inst < 20 && c.ok; ++inst) {
        const Dataset data = oracle::random_dataset(rng, 6, 6, 50);
        const auto w = oracle::random_weights(rng, data.size());
        const auto got = exhaustive_weak_learner(integrate(data), w);
        const auto want = oracle::naive_search(data, w);
        const std::string tag = " on instance " + std::to_string(inst);
        c.require(got.candidates_evaluated == want.candidates, "candidate count differs" + tag);
        c.require(got.error == want.stump.error, "error differs" + tag);
        c.require(got.weak.type == want.type &&
                      got.weak.geometry == HaarGeometry{want.x, want.y, want.w, want.h},
                  "feature differs" + tag);
        c.require(got.weak.polarity == want.stump.polarity && got.weak.threshold == want.stump.threshold,
                  "stump differs" + tag);
    }
    const double secs = seconds_since(t0);
    c.require(secs < 60.0, "took " + std::to_string(secs) + " s");
    return c;
}

Check integral_rectangles() {
    Check c;
    std::mt19937_64 rng(303);
    const Sample s = oracle::random_sample(rng, 24, 24);
    const IntegralImage ii(s);
    std::uniform_int_distribution<int> coord(0, 24);
    for (int k = 0; k < 1000; ++k) {
        int x0 = coord(rng), x1 = coord(rng), y0 = coord(rng), y1 = coord(rng);
        if (x0 > x1) std::swap(x0, x1);
        if (y0 > y1) std::swap(y0, y1);
        c.require(ii.rect_sum(x0, y0, x1, y1) == oracle::naive_rect(s, x0, y0, x1, y1),
                  "rectangle " + std::to_string(k) + " differs");
    }
    return c;
}

Check evolve_invariants() {
    Check c;
    std::mt19937_64 rng(404);
    for (int run = 0; run < 50 && c.ok; ++run) {
        const Dataset data = oracle::random_dataset(rng, 10, 10, 40);
        const auto w = oracle::random_weights(rng, data.size());
        const IntegralDataset ii = integrate(data);
        GeneticConfig cfg;
        cfg.population = 10 + static_cast<int>(rng() % 41);
        cfg.generations = 1 + static_cast<int>(rng() % 12);
        cfg.seed = rng();
        const HaarType t = kAllHaarTypes[run % 5];
        Engine e1 = make_engine(cfg.seed);
        Engine e2 = make_engine(cfg.seed);
        const EvolveResult a = evolve(t, ii, w, cfg, e1);
        const EvolveResult b = evolve(t, ii, w, cfg, e2);
        const std::string tag = " in run " + std::to_string(run);
        for (std::size_t size : a.population_sizes)
            c.require(size == static_cast<std::size_t>(cfg.population), "population size changed" + tag);
        c.require(a.population_sizes.size() == static_cast<std::size_t>(a.generations_run),
                  "missing population sizes" + tag);
        for (std::size_t k = 1; k < a.best_fitness.size(); ++k)
            c.require(a.best_fitness[k] >= a.best_fitness[k - 1], "best fitness decreased" + tag);
        c.require(a.evaluations <= cfg.max_evaluations_per_run(), "evaluation bound exceeded" + tag);
        if (!a.zero_error)
            c.require(a.evaluations == cfg.max_evaluations_per_run(), "evaluation count inexact" + tag);
        c.require(a.best.chromosome == b.best.chromosome && a.best.fitness == b.best.fitness &&
                      a.evaluations == b.evaluations && a.best_fitness == b.best_fitness,
                  "not deterministic" + tag);
    }
    return c;
}

Check genetic_not_better_than_exhaustive() {
    Check c;
    std::mt19937_64 rng(505);
    for (int inst = 0; inst < 20 && c.ok; ++inst) {
        const Dataset data = oracle::random_dataset(rng, 8, 8, 60);
        const auto w = oracle::random_weights(rng, data.size());
        const IntegralDataset ii = integrate(data);
        GeneticConfig cfg;
        cfg.seed = rng();
        const auto gen = genetic_weak_learner(ii, w, cfg);
        const auto exh = exhaustive_weak_learner(ii, w);
        c.require(gen.error >= exh.error, "genetic beat exhaustive on instance " + std::to_string(inst));
        // the reported error is the classifier's actual weighted error
        const auto pred = weak_predict_all(gen.weak, ii);
        c.require(std::abs(weighted_error(pred, ii.labels, w) - gen.error) < 1e-12,
                  "reported error inconsistent on instance " + std::to_string(inst));
    }
    return c;
}

Check training_bound() {
    Check c;
    struct Run {
        Dataset data;
        bool genetic;
    };
    std::mt19937_64 rng(606);
    std::vector<Run> runs;
    for (double diff : {0.3, 0.6, 0.9, 1.0}) {
        runs.push_back({generate_synthetic({120, 10, rng(), diff}), false});
        runs.push_back({generate_synthetic({120, 10, rng(), diff}), true});
    }
    runs.push_back({oracle::random_dataset(rng, 8, 8, 80), false});
    runs.push_back({oracle::random_dataset(rng, 8, 8, 80), true});
    for (std::size_t r = 0; r < runs.size() && c.ok; ++r) {
        const IntegralDataset ii = integrate(runs[r].data);
        GeneticConfig cfg;
        cfg.seed = r;
        GeneticLearner gen(cfg);
        ExhaustiveLearner exh;
        WeakLearner& learner = runs[r].genetic ? static_cast<WeakLearner&>(gen) : exh;
        double bound = 1.0;
        const StrongClassifier model = adaboost_train(ii, learner, 12, [&](const RoundInfo& info) {
            bound *= 2.0 * std::sqrt(info.epsilon * (1.0 - info.epsilon));
        });
        const double err = classification_error(model, ii);
        c.require(err <= bound + 1e-12, "run " + std::to_string(r) + ": error " + std::to_string(err) +
                                            " above bound " + std::to_string(bound));
    }
    return c;
}

Check evaluation_acceleration() {
    Check c;
    std::mt19937_64 rng(707);
    // random labels keep every round away from zero error
    const Dataset train = oracle::random_dataset(rng, 24, 24, 120);
    const Dataset test = oracle::random_dataset(rng, 24, 24, 40);
    LearnerConfig gen;
    gen.genetic.restarts = 1;
    gen.genetic.population = 50;
    gen.genetic.generations = 10;
    gen.genetic.crossover_rate = 0.3;
    gen.genetic.mutation_rate = 0.1;
    const std::vector<LearnerConfig> cfgs{gen};
    const auto rows = run_benchmark(train, test, cfgs, {3, 7, false});

    std::uint64_t enumerated = 0;
    for (HaarType t : kAllHaarTypes) enumerated += enumerate_geometries(t, 24, 24).size();
    c.require(enumerated == 162336, "enumeration gives " + std::to_string(enumerated));
    c.require(candidate_count(24, 24) == enumerated, "candidate_count disagrees with enumeration");
    c.require(rows.size() == 1 && rows[0].rounds == 3, "unexpected benchmark rows");
    if (!c.ok) return c;
    c.require(rows[0].evals_per_round == 1250.0,
              "genetic evaluations per round " + std::to_string(rows[0].evals_per_round));
    c.require(rows[0].accel_evals == 162336.0 / 1250.0, "accel_evals " + std::to_string(rows[0].accel_evals));
    c.require(rows[0].accel_evals > 100.0, "acceleration not above 100");
    return c;
}

Check synthetic_quality() {
    Check c;
    const auto t0 = Clock::now();
    const Dataset all = generate_synthetic({1000, 16, 2024, 0.5});
    const Dataset train = all.slice(0, 500);
    const Dataset test = all.slice(500, 500);
    const std::vector<LearnerConfig> cfgs{{LearnerKind::Exhaustive, {}}, {LearnerKind::Genetic, {}}};
    const auto rows = run_benchmark(train, test, cfgs, {20, 2024, false});
    const BenchRow& exh = rows[0];
    const BenchRow& gen = rows[1];
    std::printf("       exhaustive train=%.4f test=%.4f; genetic train=%.4f test=%.4f; %.1f s\n", exh.train_error,
                exh.test_error, gen.train_error, gen.test_error, seconds_since(t0));
    c.require(gen.train_error <= 0.05, "genetic training error " + std::to_string(gen.train_error));
    c.require(gen.test_error <= exh.test_error + 0.05, "genetic test error " + std::to_string(gen.test_error));
    const double secs = seconds_since(t0);
    c.require(secs < 15 * 60.0, "took " + std::to_string(secs) + " s");
    return c;
}

Check best_of_runs() {
    Check c;
    std::mt19937_64 rng(909);
    for (int inst = 0; inst < 5 && c.ok; ++inst) {
        const Dataset data = oracle::random_dataset(rng, 12, 12, 60);
        const auto w = oracle::random_weights(rng, data.size());
        GeneticConfig cfg;
        cfg.restarts = 10;
        cfg.population = 10;
        cfg.seed = rng();
        const auto res = genetic_weak_learner(integrate(data), w, cfg);
        const double best = 1.0 / std::max(res.error, kMinError);
        c.require(res.runs.size() == 50, "expected 50 runs");
        double top = 0.0;
        for (const auto& r : res.runs) {
            c.require(best >= r.fitness, "a run beat the returned classifier");
            top = std::max(top, r.fitness);
        }
        c.require(best == top, "returned classifier is not the best run");
    }
    return c;
}

Check cli_reproducible() {
    Check c;
    const auto dir = cli::scratch("acceptance_cli");
    const auto gen = cli::run("gen-data --out " + (dir / "d").string() + " --count 80 --window 12 --seed 5");
    c.require(gen.exit_code == 0, "gen-data failed");
    if (!c.ok) return c;
    const std::string base = "train --data " + (dir / "d" / "manifest.txt").string() +
                             " --learner genetic --rounds 5 --seed 42 --model-out ";
    c.require(cli::run(base + (dir / "a.json").string()).exit_code == 0, "first train failed");
    c.require(cli::run(base + (dir / "b.json").string()).exit_code == 0, "second train failed");
    if (!c.ok) return c;
    const std::string a = cli::slurp(dir / "a.json");
    c.require(!a.empty() && a == cli::slurp(dir / "b.json"), "model files differ");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"stump learner matches brute force on 200 instances", stump_vs_brute_force},
        {"exhaustive learner matches naive search on 20 datasets", exhaustive_vs_naive},
        {"integral image matches direct sums on 1000 rectangles", integral_rectangles},
        {"evolve keeps size N, monotone best, bounded evaluations, determinism", evolve_invariants},
        {"genetic weighted error never below exhaustive on 20 instances", genetic_not_better_than_exhaustive},
        {"training error within the product bound", training_bound},
        {"24x24 evaluation acceleration above 100 and exact", evaluation_acceleration},
        {"synthetic 16x16 genetic accuracy close to exhaustive", synthetic_quality},
        {"best of S=10 runs is at least every run", best_of_runs},
        {"seeded CLI training is byte-identical", cli_reproducible},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.why = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %zu %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    c.ok ? "" : ": ", c.why.c_str());
        std::fflush(stdout);
        failed += !c.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
