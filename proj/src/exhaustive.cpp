#include "gaboost/exhaustive.hpp"

#include <stdexcept>
#include <vector>

#include "gaboost/parallel.hpp"
#include "gaboost/stump.hpp"

namespace gaboost {
namespace {

struct Candidate {
    HaarType type;
    HaarGeometry geometry;
};

struct Best {
    std::size_t index = 0;
    StumpFit fit{{+1, 0.0}, 2.0};
    bool found = false;
};

// (error, index) order; earlier index wins on equal error
bool improves(const Best& challenger, const Best& incumbent) {
    if (!incumbent.found) return challenger.found;
    if (!challenger.found) return false;
    if (challenger.fit.error != incumbent.fit.error) return challenger.fit.error < incumbent.fit.error;
    return challenger.index < incumbent.index;
}

}  // namespace

std::uint64_t candidate_count(int window_w, int window_h) {
    std::uint64_t total = 0;
    for (HaarType t : kAllHaarTypes) total += enumerate_geometries(t, window_w, window_h).size();
    return total;
}

ExhaustiveResult exhaustive_weak_learner(const IntegralDataset& data,
                                         std::span<const double> weights, bool parallel) {
    if (weights.size() != data.size()) throw std::invalid_argument("exhaustive: weight count mismatch");

    std::vector<Candidate> candidates;
    for (HaarType t : kAllHaarTypes) {
        for (const HaarGeometry& g : enumerate_geometries(t, data.window_w, data.window_h)) {
            candidates.push_back({t, g});
        }
    }
    if (candidates.empty()) {
        throw std::invalid_argument("window " + std::to_string(data.window_w) + "x" +
                                    std::to_string(data.window_h) + " admits no haar features");
    }

    const std::size_t threads = parallel ? default_thread_count() : 1;
    const std::size_t chunks = threads == 1 ? 1 : threads * 8;
    const std::size_t per_chunk = (candidates.size() + chunks - 1) / chunks;
    std::vector<Best> chunk_best(chunks);

    parallel_for(chunks, threads, [&](std::size_t c) {
        std::vector<double> values;
        StumpLearner stump;
        Best best;
        const std::size_t end = std::min(candidates.size(), (c + 1) * per_chunk);
        for (std::size_t i = c * per_chunk; i < end; ++i) {
            feature_values(data, candidates[i].geometry, candidates[i].type, values);
            Best here{i, stump.fit(values, data.labels, weights), true};
            if (improves(here, best)) best = here;
        }
        chunk_best[c] = best;
    });

    Best best;
    for (const Best& b : chunk_best) {
        if (improves(b, best)) best = b;
    }
    const Candidate& win = candidates[best.index];
    ExhaustiveResult out;
    out.weak = {win.geometry, win.type, best.fit.params.polarity, best.fit.params.threshold};
    out.error = best.fit.error;
    out.candidates_evaluated = candidates.size();
    return out;
}

WeakLearnerResult ExhaustiveLearner::learn(const IntegralDataset& data, std::span<const double> weights,
                                           int /*round*/) {
    const ExhaustiveResult r = exhaustive_weak_learner(data, weights, parallel_);
    return {r.weak, r.error, r.candidates_evaluated};
}

}  // namespace gaboost
