// gaboost: synthetic data generation, AdaBoost training with exhaustive or
// genetic weak learners, model evaluation and learner benchmarking.

#include <cstdio>
#include <exception>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "gaboost/bench.hpp"
#include "gaboost/boost.hpp"
#include "gaboost/dataset_io.hpp"
#include "gaboost/exhaustive.hpp"
#include "gaboost/genetic.hpp"
#include "gaboost/model_io.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_round(const gaboost::RoundInfo& r) {
    std::printf("round %d: eps=%.6f alpha=%.6f evals=%llu ms=%.3f%s\n", r.round, r.epsilon, r.alpha,
                static_cast<unsigned long long>(r.evaluations), r.seconds * 1000.0,
                r.zero_error ? " (zero error, stopping)" : "");
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boosted haar-feature classifiers with exhaustive or genetic weak learners"};
    app.require_subcommand(1);

    // gen-data
    auto* gen = app.add_subcommand("gen-data", "Write a synthetic PGM dataset and its manifest");
    std::string gen_out;
    gaboost::SynthOptions synth;
    gen->add_option("--out", gen_out, "Output directory")->required();
    gen->add_option("--count", synth.count, "Number of images (balanced classes)")->capture_default_str();
    gen->add_option("--window", synth.window, "Window side in pixels")->capture_default_str();
    gen->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
    gen->add_option("--difficulty", synth.difficulty, "Noise level in [0, 1]")->capture_default_str();

    // train
    auto* train = app.add_subcommand("train", "Train a strong classifier");
    std::string train_data;
    std::string learner_kind = "genetic";
    std::string model_out;
    int rounds = 10;
    bool train_parallel = false;
    gaboost::GeneticConfig gcfg;
    train->add_option("--data", train_data, "Training manifest")->required();
    train->add_option("--learner", learner_kind, "Weak learner")
        ->check(CLI::IsMember({"genetic", "exhaustive"}))
        ->capture_default_str();
    train->add_option("--rounds", rounds, "Boosting rounds T")->capture_default_str();
    auto* pop = train->add_option("--pop", gcfg.population, "Population size N")->capture_default_str();
    auto* gens = train->add_option("--gens", gcfg.generations, "Generations K_max")->capture_default_str();
    auto* rc = train->add_option("--crossover-rate", gcfg.crossover_rate, "Crossover rate R_c")
                   ->capture_default_str();
    auto* rm = train->add_option("--mutation-rate", gcfg.mutation_rate, "Mutation rate R_m")
                   ->capture_default_str();
    auto* restarts = train->add_option("--restarts", gcfg.restarts, "Restarts S per feature type")
                         ->capture_default_str();
    train->add_option("--seed", gcfg.seed, "Random seed")->capture_default_str();
    train->add_option("--model-out", model_out, "Model file to write")->required();
    train->add_flag("--parallel", train_parallel, "Run learner work on all cores");

    // eval
    auto* eval = app.add_subcommand("eval", "Report a model's error on a dataset");
    std::string eval_model;
    std::string eval_data;
    eval->add_option("--model", eval_model, "Model file")->required();
    eval->add_option("--data", eval_data, "Manifest")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Compare weak learners and write a CSV report");
    std::string bench_train;
    std::string bench_test;
    std::string bench_configs;
    std::string bench_out;
    gaboost::BenchOptions bopts;
    bench->add_option("--train", bench_train, "Training manifest")->required();
    bench->add_option("--test", bench_test, "Test manifest")->required();
    bench->add_option("--rounds", bopts.rounds, "Boosting rounds T")->capture_default_str();
    bench->add_option("--seed", bopts.seed, "Random seed")->capture_default_str();
    bench->add_option("--configs", bench_configs, "Learner config file")->required();
    bench->add_option("--out", bench_out, "CSV output path")->required();
    bench->add_flag("--parallel", bopts.parallel, "Use all cores (timings become untrustworthy)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints the message; every parse failure is reported as a usage error
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            std::printf("%s\n", gaboost::gen_data(gen_out, synth).string().c_str());
        } else if (train->parsed()) {
            if (learner_kind == "exhaustive") {
                for (const CLI::Option* opt : {pop, gens, rc, rm, restarts}) {
                    if (opt->count() > 0) {
                        throw UsageError(opt->get_name() + " only applies to --learner genetic");
                    }
                }
            }
            const gaboost::Dataset data = gaboost::load_dataset(train_data);
            data.require_both_labels();
            const gaboost::IntegralDataset ii = gaboost::integrate(data);

            std::unique_ptr<gaboost::WeakLearner> learner;
            if (learner_kind == "exhaustive") {
                learner = std::make_unique<gaboost::ExhaustiveLearner>(train_parallel);
            } else {
                gcfg.validate();
                learner = std::make_unique<gaboost::GeneticLearner>(gcfg, train_parallel);
            }
            const gaboost::StrongClassifier model = gaboost::adaboost_train(ii, *learner, rounds, print_round);
            gaboost::save_model(model, model_out);
            std::printf("stages=%zu train_error=%.6f\n", model.stages.size(),
                        gaboost::classification_error(model, ii));
        } else if (eval->parsed()) {
            const gaboost::StrongClassifier model = gaboost::load_model(eval_model);
            const gaboost::Dataset data = gaboost::load_dataset(eval_data);
            std::printf("error=%.6f\n", gaboost::classification_error(model, data));
        } else if (bench->parsed()) {
            const auto configs = gaboost::load_bench_configs(bench_configs);
            const gaboost::Dataset train_set = gaboost::load_dataset(bench_train);
            const gaboost::Dataset test_set = gaboost::load_dataset(bench_test);
            const auto rows = gaboost::run_benchmark(
                train_set, test_set, configs, bopts, [&](std::size_t c, const gaboost::RoundInfo& r) {
                    std::fprintf(stderr, "[%zu/%zu %s] ", c + 1, configs.size(),
                                 std::string(gaboost::learner_name(configs[c].kind)).c_str());
                    std::fprintf(stderr, "round %d: eps=%.6f evals=%llu ms=%.3f\n", r.round, r.epsilon,
                                 static_cast<unsigned long long>(r.evaluations), r.seconds * 1000.0);
                });
            gaboost::write_bench_csv(bench_out, rows);
            std::fputs(gaboost::bench_csv(rows).c_str(), stdout);
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
