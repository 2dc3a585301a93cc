#include "gaboost/bench.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "gaboost/exhaustive.hpp"
#include "gaboost/haar.hpp"

namespace gaboost {

std::string_view learner_name(LearnerKind kind) {
    return kind == LearnerKind::Exhaustive ? "exhaustive" : "genetic";
}

namespace {

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
    std::istringstream in(text);
    T value{};
    if (!(in >> value) || !in.eof()) throw std::runtime_error(where + "bad number '" + text + "'");
    return value;
}

std::string real6(double v) {
    if (std::isnan(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::vector<LearnerConfig> parse_bench_configs(std::istream& in) {
    std::vector<LearnerConfig> out;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        const std::string where = "configs line " + std::to_string(line_no) + ": ";
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string kind;
        if (!(fields >> kind)) continue;

        LearnerConfig cfg;
        if (kind == "exhaustive") {
            cfg.kind = LearnerKind::Exhaustive;
            std::string extra;
            if (fields >> extra) throw std::runtime_error(where + "exhaustive takes no parameters");
            out.push_back(cfg);
            continue;
        }
        if (kind != "genetic") throw std::runtime_error(where + "unknown learner '" + kind + "'");

        cfg.kind = LearnerKind::Genetic;
        std::string kv;
        while (fields >> kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::runtime_error(where + "expected key=value, got '" + kv + "'");
            const std::string key = kv.substr(0, eq);
            const std::string value = kv.substr(eq + 1);
            if (key == "S") cfg.genetic.restarts = parse_number<int>(value, where);
            else if (key == "N") cfg.genetic.population = parse_number<int>(value, where);
            else if (key == "Kmax") cfg.genetic.generations = parse_number<int>(value, where);
            else if (key == "Rc") cfg.genetic.crossover_rate = parse_number<double>(value, where);
            else if (key == "Rm") cfg.genetic.mutation_rate = parse_number<double>(value, where);
            else throw std::runtime_error(where + "unknown key '" + key + "'");
        }
        try {
            cfg.genetic.validate();
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(where + e.what());
        }
        out.push_back(cfg);
    }
    if (out.empty()) throw std::runtime_error("no learner configs given");
    return out;
}

std::vector<LearnerConfig> load_bench_configs(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open configs " + path.string());
    return parse_bench_configs(in);
}

std::vector<BenchRow> run_benchmark(const Dataset& train, const Dataset& test,
                                    std::span<const LearnerConfig> configs, const BenchOptions& opts,
                                    const BenchProgress& progress) {
    if (configs.empty()) throw std::invalid_argument("no learner configs given");
    if (train.window_w() != test.window_w() || train.window_h() != test.window_h()) {
        throw std::invalid_argument("train and test windows differ");
    }
    train.require_both_labels();
    const IntegralDataset train_ii = integrate(train);
    const IntegralDataset test_ii = integrate(test);

    std::vector<BenchRow> rows;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        BenchRow row;
        row.config = configs[c];
        std::unique_ptr<WeakLearner> learner;
        if (row.config.kind == LearnerKind::Exhaustive) {
            learner = std::make_unique<ExhaustiveLearner>(opts.parallel);
        } else {
            row.config.genetic.seed = opts.seed;
            learner = std::make_unique<GeneticLearner>(row.config.genetic, opts.parallel);
        }

        const StrongClassifier model =
            adaboost_train(train_ii, *learner, opts.rounds, [&](const RoundInfo& info) {
                row.round_log.push_back(info);
                if (progress) progress(c, info);
            });

        double seconds = 0.0;
        double evals = 0.0;
        for (const RoundInfo& r : row.round_log) {
            seconds += r.seconds;
            evals += static_cast<double>(r.evaluations);
        }
        row.rounds = static_cast<int>(row.round_log.size());
        row.seconds_per_round = seconds / row.rounds;
        row.evals_per_round = evals / row.rounds;
        row.train_error = classification_error(model, train_ii);
        row.test_error = classification_error(model, test_ii);
        rows.push_back(std::move(row));
    }

    const BenchRow* baseline = nullptr;
    for (const BenchRow& r : rows) {
        if (r.config.kind == LearnerKind::Exhaustive) {
            baseline = &r;
            break;
        }
    }
    const double baseline_evals = baseline ? baseline->evals_per_round
                                           : static_cast<double>(candidate_count(train.window_w(), train.window_h()));
    for (BenchRow& r : rows) {
        r.accel_evals = baseline_evals / r.evals_per_round;
        r.accel_time = baseline ? baseline->seconds_per_round / r.seconds_per_round
                                : std::numeric_limits<double>::quiet_NaN();
    }
    return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
    std::ostringstream out;
    out << kBenchCsvHeader << '\n';
    for (const BenchRow& r : rows) {
        out << learner_name(r.config.kind) << ',';
        if (r.config.kind == LearnerKind::Genetic) {
            const GeneticConfig& g = r.config.genetic;
            out << g.restarts << ',' << g.population << ',' << g.generations << ','
                << real6(g.crossover_rate) << ',' << real6(g.mutation_rate) << ',';
        } else {
            out << ",,,,,";
        }
        out << r.rounds << ',' << real6(r.seconds_per_round) << ',' << real6(r.evals_per_round) << ','
            << real6(r.accel_time) << ',' << real6(r.accel_evals) << ',' << real6(r.train_error) << ','
            << real6(r.test_error) << '\n';
    }
    return out.str();
}

void write_bench_csv(const std::filesystem::path& path, std::span<const BenchRow> rows) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << bench_csv(rows);
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace gaboost
