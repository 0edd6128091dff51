#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace menagerie {

using Vec = std::vector<double>;

/// Box-bounded continuous search space. lower[i] < upper[i] for all i.
struct SearchSpace {
    Vec lower;
    Vec upper;

    SearchSpace(Vec lo, Vec hi);

    /// Cube [lo, hi]^dims.
    static SearchSpace box(std::size_t dims, double lo, double hi);

    std::size_t dims() const { return lower.size(); }
    /// Mean edge length, the scale most operators size their moves against.
    double mean_range() const;
};

/// Coordinate-wise projection onto the space. In-bounds points come back unchanged.
Vec clamp(std::span<const double> position, const SearchSpace& space);

/// A position plus its objective value (unset until evaluated).
struct Candidate {
    Vec position;
    std::optional<double> value;

    Candidate() = default;
    explicit Candidate(Vec pos) : position(std::move(pos)) {}

    bool evaluated() const { return value.has_value(); }
    /// Value access; throws if the candidate was never evaluated.
    double val() const;
};

/// Ordered population with an elitist best-ever archive and an evaluation counter.
struct Population {
    std::vector<Candidate> members;
    Candidate best_ever;
    std::uint64_t evals_used = 0;

    std::size_t size() const { return members.size(); }
    /// Index of the best (lowest-value) member; ties go to the lower index.
    std::size_t best_index() const;
    /// Index of the worst (highest-value) member; ties go to the lower index.
    std::size_t worst_index() const;
    std::vector<double> values() const;
    double mean_value() const;
    /// Population standard deviation of member values.
    double value_spread() const;
    /// Mean Euclidean distance of members to their position centroid.
    double spatial_spread() const;
};

/// Deterministic seeded random stream (xoshiro256++ seeded via splitmix64).
///
/// Identical seed + identical call sequence gives an identical output sequence;
/// the generator and all derived draws are implemented here rather than with
/// <random> distributions, whose output is implementation-defined.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform01();
    /// Uniform on [a, b).
    double uniform(double a, double b);
    /// Strictly positive uniform on (0, 1].
    double uniform_pos();
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n);
    /// Uniform index in [0, n) excluding `skip` (requires n >= 2).
    std::size_t index_excluding(std::size_t n, std::size_t skip);
    bool chance(double p) { return uniform01() < p; }

    Vec normal_vec(std::size_t dims);
    /// Uniform unit direction (normalized Gaussian vector).
    Vec unit_vec(std::size_t dims);
    /// Deterministic Fisher-Yates shuffle (std::shuffle is not portable).
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t state_[4];
    std::uint64_t seed_;
};

/// Objective function; minimized everywhere in this library.
using Objective = std::function<double(std::span<const double>)>;

struct TraceRecord {
    std::uint64_t iteration;
    std::uint64_t evals;
    double best;
    double mean;
    double spread;
};

/// Per-iteration run record. Best column is non-increasing, evals non-decreasing.
struct RunTrace {
    std::vector<TraceRecord> records;

    double final_best() const;
    std::uint64_t total_evals() const;
};

/// Budgeted evaluation context handed to algorithm steps.
///
/// Every objective evaluation goes through evaluate(), which clamps the
/// position into the space, refuses once the budget is exhausted and keeps
/// evals_used / best_ever consistent. Steps must treat a false return as
/// "stop evaluating and leave the rest of the population untouched".
class RunContext {
public:
    RunContext(const Objective& objective, const SearchSpace& space, Population& pop,
               std::uint64_t budget);

    /// Clamp + evaluate, or return false when the budget is spent.
    bool evaluate(Candidate& c);
    std::uint64_t remaining() const;
    /// Fraction of the budget consumed, in [0, 1]. Schedules key off this.
    double progress() const;

    Population& pop() { return *pop_; }
    const Population& pop() const { return *pop_; }
    const SearchSpace& space() const { return *space_; }
    std::uint64_t budget() const { return budget_; }

private:
    const Objective* objective_;
    const SearchSpace* space_;
    Population* pop_;
    std::uint64_t budget_;
};

/// n candidates sampled uniformly from the space, all evaluated; evals_used = n.
Population init_population(const SearchSpace& space, std::size_t n, const Objective& objective,
                           RngStream& rng);

/// Common optional per-run state. Algorithms that the roster says carry
/// velocities or historical bests expose them here; everything else stays unset.
struct AlgorithmState {
    std::uint64_t iteration = 0;
    std::optional<std::vector<Vec>> velocities;
    std::optional<std::vector<Candidate>> historical_bests;
};

/// One algorithm bound to its parameters and per-run mutable state.
///
/// The run loop is: init_population, init_state, then step() until the budget
/// is exhausted or terminated() reports true (ICA only). A step performs one
/// synchronous iteration; member updates read the pre-step snapshot unless the
/// algorithm's contract is inherently sequential.
class AlgorithmInstance {
public:
    virtual ~AlgorithmInstance() = default;

    virtual std::size_t population_size() const = 0;
    virtual void init_state(RunContext& ctx, RngStream& rng) { (void)ctx, (void)rng; }
    virtual void step(RunContext& ctx, RngStream& rng) = 0;
    virtual bool terminated() const { return false; }
    virtual const AlgorithmState& state() const = 0;
};

/// Synchronous run loop shared by every algorithm.
///
/// Consumes the rng in a fixed order (population init, then per-iteration in
/// member order), records one trace row after initialization and one per step,
/// and never lets evaluations exceed the budget.
RunTrace run(AlgorithmInstance& instance, const Objective& objective, const SearchSpace& space,
             std::uint64_t budget, RngStream& rng);

}  // namespace menagerie
