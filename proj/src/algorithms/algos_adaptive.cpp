#include "common.hpp"

// Counter- and direction-driven family: trial budgets, stagnation counters,
// directional runs and bounded-angle scanning.

namespace menagerie::detail {

namespace {

// Fitness-apportioned trial moves toward random partners with greedy
// acceptance and a shrinking move-size schedule; members stuck past the
// stagnation limit restart at a fresh uniform point.
class AbcInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream&) override {
        stagnation_.assign(ctx.pop().size(), 0);
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t n = pop.size();
        const double scale = sched(
            ops::DecaySchedule::exponential(param("move_size_start"), param("move_size_end")),
            ctx);
        // the per-step cap stays below the stagnation limit so a single step
        // from a fresh state can never trigger a restart
        const auto trials = apportion(ops::fitness_weights(pop.values()), n, iparam("trial_cap"));

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t = 0; t < trials[i]; ++t) {
                const std::size_t j = rng.index_excluding(n, i);
                Candidate cand;
                cand.position =
                    ops::move_toward(pop.members[i].position, pop.members[j].position,
                                     scale * rng.uniform01(), 0.0, rng);
                if (!ctx.evaluate(cand)) return;
                if (cand.val() < pop.members[i].val()) {
                    pop.members[i] = cand;
                    stagnation_[i] = 0;
                } else {
                    ++stagnation_[i];
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (stagnation_[i] <= iparam("stagnation_limit")) continue;
            Candidate fresh = ops::restart(ctx.space(), rng);
            if (!ctx.evaluate(fresh)) return;
            pop.members[i] = fresh;
            stagnation_[i] = 0;
        }
        ++state_.iteration;
    }

private:
    std::vector<std::uint32_t> stagnation_;
};

// Directional runs: keep stepping along the same unit direction while the
// crowding-adjusted value improves, tumble to a random direction otherwise.
// Steps shrink after repeated failures, and the worst members are periodically
// re-seeded at the best members' positions.
class BfoInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream& rng) override {
        const std::size_t n = ctx.pop().size();
        const double step0 = param("step_fraction") * ctx.space().mean_range();
        directions_.clear();
        for (std::size_t i = 0; i < n; ++i) directions_.push_back(rng.unit_vec(ctx.space().dims()));
        step_.assign(n, step0);
        fails_.assign(n, 0);
        keep_direction_.assign(n, 0);
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const auto snap = snapshot(pop);
        const double vstd = pop.value_spread();
        const double d0 = param("crowd_scale") * ctx.space().mean_range();
        auto crowd = [&](std::span<const double> x) {
            double sum = 0.0;
            for (const auto& m : snap) {
                const double d = dist(x, m.position);
                const double d2 = d * d;
                sum += -param("crowd_attract") * vstd * std::exp(-d2 / (d0 * d0)) +
                       param("crowd_repel") * vstd * std::exp(-d2 / (0.25 * d0 * d0));
            }
            return sum;
        };

        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (!keep_direction_[i]) directions_[i] = rng.unit_vec(ctx.space().dims());
            Candidate cand;
            cand.position = pop.members[i].position;
            for (std::size_t d = 0; d < cand.position.size(); ++d)
                cand.position[d] += step_[i] * directions_[i][d];
            if (!ctx.evaluate(cand)) return;

            const double g_old = pop.members[i].val() + crowd(pop.members[i].position);
            const double g_new = cand.val() + crowd(cand.position);
            if (g_new < g_old) {
                keep_direction_[i] = 1;
                fails_[i] = 0;
            } else {
                keep_direction_[i] = 0;
                if (++fails_[i] >= 2) {
                    step_[i] = std::max(step_[i] * param("step_shrink"),
                                        1e-9 * ctx.space().mean_range());
                    fails_[i] = 0;
                }
            }
            pop.members[i] = cand;  // the move itself is unconditional
        }

        if (state_.iteration > 0 && state_.iteration % iparam("reassign_period") == 0) {
            const std::size_t k = std::max<std::size_t>(
                1,
                static_cast<std::size_t>(param("reassign_fraction") *
                                         static_cast<double>(pop.size())));
            const auto order = ops::truncation_select(pop, pop.size());
            for (std::size_t r = 0; r < k; ++r) {
                const std::size_t src = order[r % k];
                const std::size_t dst = order[pop.size() - 1 - r];
                pop.members[dst] = pop.members[src];  // same position, no re-evaluation
                keep_direction_[dst] = 0;
            }
        }
        ++state_.iteration;
    }

private:
    std::vector<Vec> directions_;
    std::vector<double> step_;
    std::vector<std::uint32_t> fails_;
    std::vector<std::uint8_t> keep_direction_;
};

// Local Gaussian search until a member stagnates, then a disruptive
// recombination with a random partner; worsening moves are accepted with a
// probability that shrinks with each accepted worsening.
class CroInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream&) override {
        stagnation_.assign(ctx.pop().size(), 0);
        worse_accepts_.assign(ctx.pop().size(), 0);
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const double spread = pop.spatial_spread() + 1e-12 * ctx.space().mean_range();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            Candidate cand;
            if (stagnation_[i] < iparam("stagnation_threshold")) {
                cand.position =
                    ops::gaussian_sample(pop.members[i].position, param("local_sigma") * spread, rng);
            } else {
                const std::size_t j = rng.index_excluding(pop.size(), i);
                cand.position =
                    ops::recombine(pop.members[i].position, pop.members[j].position, rng);
                cand.position = ops::gaussian_sample(cand.position,
                                                     param("disrupt_jitter") * spread, rng);
                stagnation_[i] = 0;
            }
            if (!ctx.evaluate(cand)) return;

            const double p = param("accept_start") *
                             std::pow(param("accept_decay"), worse_accepts_[i]);
            const double old_val = pop.members[i].val();
            Candidate chosen = ops::probabilistic_accept(pop.members[i], cand, p, rng);
            if (chosen.val() > old_val) ++worse_accepts_[i];
            if (cand.val() < old_val) stagnation_[i] = 0;
            else ++stagnation_[i];
            pop.members[i] = std::move(chosen);
        }
        ++state_.iteration;
    }

private:
    std::vector<std::uint32_t> stagnation_;
    std::vector<std::uint32_t> worse_accepts_;
};

// A couple of producers scan within a bounded turn angle of their heading,
// most members chase the producers, and the rest diversify with random walks.
class GsoInstance final : public InstanceBase {
public:
    explicit GsoInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("producers") >= rp_.population_size)
            throw std::invalid_argument("GSO producers must be below the population size");
    }

    void init_state(RunContext& ctx, RngStream& rng) override {
        headings_.clear();
        for (std::size_t i = 0; i < ctx.pop().size(); ++i)
            headings_.push_back(rng.unit_vec(ctx.space().dims()));
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t dims = ctx.space().dims();
        const double spread = pop.spatial_spread() + 1e-12 * ctx.space().mean_range();
        const auto order = ops::truncation_select(pop, pop.size());
        const std::size_t producers = iparam("producers");
        const std::size_t scroungers = static_cast<std::size_t>(
            param("scrounger_fraction") * static_cast<double>(pop.size()));

        for (std::size_t r = 0; r < producers; ++r) {
            const std::size_t i = order[r];
            const double radius = param("producer_radius") * spread;
            Candidate best_sample;
            Vec best_dir = headings_[i];
            for (std::size_t s = 0; s < iparam("cone_samples"); ++s) {
                const Vec dir = turn_within_cone(headings_[i], param("max_turn"), dims, rng);
                Candidate cand;
                cand.position = pop.members[i].position;
                const double hop = radius * rng.uniform01();
                for (std::size_t d = 0; d < dims; ++d) cand.position[d] += hop * dir[d];
                if (!ctx.evaluate(cand)) return;
                if (!best_sample.evaluated() || cand.val() < best_sample.val()) {
                    best_sample = cand;
                    best_dir = dir;
                }
            }
            if (best_sample.val() < pop.members[i].val()) {
                pop.members[i] = best_sample;
                headings_[i] = best_dir;
            } else {
                headings_[i] = rng.unit_vec(dims);  // scan elsewhere next time
            }
        }

        for (std::size_t r = producers; r < producers + scroungers && r < pop.size(); ++r) {
            const std::size_t i = order[r];
            const std::size_t p = order[rng.index(producers)];
            Candidate cand;
            cand.position = ops::move_toward(pop.members[i].position, pop.members[p].position,
                                             rng.uniform(0.0, 0.9), 0.05 * spread, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }

        const double sigma = param("ranger_sigma") * spread;
        for (std::size_t r = producers + scroungers; r < pop.size(); ++r) {
            const std::size_t i = order[r];
            auto sampler = [&](RngStream& rg) {
                Vec step(dims);
                for (auto& s : step) s = sigma * rg.normal();
                return step;
            };
            const auto path = ops::random_walk(pop.members[i].position, iparam("ranger_steps"),
                                               ctx.space(), sampler, rng);
            Candidate cand;
            cand.position = path.back();
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }

private:
    static Vec turn_within_cone(const Vec& heading, double max_turn, std::size_t dims,
                                RngStream& rng) {
        if (dims == 1) return rng.chance(0.5) ? heading : Vec{-heading[0]};
        // random direction orthogonalized against the heading, then a rotation
        // by an angle drawn within the cone
        Vec ortho = rng.unit_vec(dims);
        double proj = 0.0;
        for (std::size_t d = 0; d < dims; ++d) proj += ortho[d] * heading[d];
        double norm = 0.0;
        for (std::size_t d = 0; d < dims; ++d) {
            ortho[d] -= proj * heading[d];
            norm += ortho[d] * ortho[d];
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) return heading;
        const double angle = rng.uniform(0.0, max_turn);
        Vec out(dims);
        for (std::size_t d = 0; d < dims; ++d)
            out[d] = std::cos(angle) * heading[d] + std::sin(angle) * ortho[d] / norm;
        return out;
    }

    std::vector<Vec> headings_;
};

}  // namespace

std::unique_ptr<AlgorithmInstance> make_abc(ResolvedParams rp) {
    return std::make_unique<AbcInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_bfo(ResolvedParams rp) {
    return std::make_unique<BfoInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_cro(ResolvedParams rp) {
    return std::make_unique<CroInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_gso(ResolvedParams rp) {
    return std::make_unique<GsoInstance>(std::move(rp));
}

}  // namespace menagerie::detail
