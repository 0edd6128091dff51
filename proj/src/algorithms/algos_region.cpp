#include "common.hpp"

// Region-sampling family: the next point comes from a region shaped by
// existing points (balls, cubes, Gaussians, spirals) rather than from vector
// arithmetic between members.

namespace menagerie::detail {

namespace {

// Worst members restart inside shrinking balls around elites and then walk a
// few ball-bounded steps.
class AloInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t k = std::max<std::size_t>(
            1, static_cast<std::size_t>(param("elite_fraction") * static_cast<double>(pop.size())));
        const auto elites = ops::truncation_select(pop, std::min(k, pop.size() - 1));
        std::vector<bool> is_elite(pop.size(), false);
        for (std::size_t idx : elites) is_elite[idx] = true;

        const double radius =
            sched(ops::DecaySchedule::exponential(param("radius_start"), param("radius_end")),
                  ctx) *
            ctx.space().mean_range();
        const double step_sigma = param("walk_step_fraction") * radius;
        const std::size_t steps = iparam("walk_steps");

        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (is_elite[i]) continue;
            const Vec& center = pop.members[elites[rng.index(elites.size())]].position;
            Vec p = ops::hypersphere_sample(center, radius, rng);
            for (std::size_t s = 0; s < steps; ++s) {
                p = ops::gaussian_sample(p, step_sigma, rng);
                p = ops::clamp_to_ball(p, center, radius);
            }
            Candidate cand;
            cand.position = std::move(p);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }
};

// Recruits sample shrinking balls around elites, scouts try fresh uniform
// points; every change passes through greedy acceptance.
class BeaInstance final : public InstanceBase {
public:
    explicit BeaInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("elite_count") >= rp_.population_size)
            throw std::invalid_argument("BeA elite_count must be below the population size");
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t e = iparam("elite_count");
        const auto elites = ops::truncation_select(pop, e);
        std::vector<bool> is_elite(pop.size(), false);
        for (std::size_t idx : elites) is_elite[idx] = true;

        const double radius =
            sched(ops::DecaySchedule::exponential(param("radius_start"), param("radius_end")),
                  ctx) *
            ctx.space().mean_range();
        const std::size_t scouts = static_cast<std::size_t>(
            param("scout_fraction") * static_cast<double>(pop.size()));

        std::size_t seen = 0;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (is_elite[i]) continue;
            Candidate cand;
            if (seen + scouts >= pop.size() - e) {
                cand = ops::restart(ctx.space(), rng);
            } else {
                const Vec& center = pop.members[elites[seen % e]].position;
                cand.position = ops::hypersphere_sample(center, radius, rng);
            }
            ++seen;
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = ops::greedy_accept(pop.members[i], cand);
        }
        ++state_.iteration;
    }
};

// The whole next population is a Gaussian cloud around the fitness-weighted
// centroid, with the width on a decay schedule.
class BbbcInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const Vec center = ops::weighted_centroid(pop);
        const double sigma =
            sched(ops::DecaySchedule::exponential(param("sigma_start"), param("sigma_end")), ctx) *
            ctx.space().mean_range();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            Candidate cand;
            cand.position = ops::gaussian_sample(center, sigma, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }
};

// Sample around each member and keep the best, then cluster and pull every
// non-winning cluster toward the cluster with the best mean value.
class CoaInstance final : public InstanceBase {
public:
    explicit CoaInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("clusters") > rp_.population_size)
            throw std::invalid_argument("COA clusters must not exceed the population size");
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const double radius =
            param("sample_radius") * pop.spatial_spread() + 1e-9 * ctx.space().mean_range();
        const std::size_t samples = iparam("samples_per_member");
        for (std::size_t i = 0; i < pop.size(); ++i) {
            for (std::size_t s = 0; s < samples; ++s) {
                Candidate cand;
                cand.position = ops::hypersphere_sample(pop.members[i].position, radius, rng);
                if (!ctx.evaluate(cand)) return;
                pop.members[i] = ops::greedy_accept(pop.members[i], cand);
            }
        }

        std::vector<Vec> points;
        points.reserve(pop.size());
        for (const auto& m : pop.members) points.push_back(m.position);
        const auto clusters = ops::kmeans(points, iparam("clusters"), rng);

        std::size_t winner = 0;
        double best_mean = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            if (clusters[c].members.empty()) continue;
            double mean = 0.0;
            for (std::size_t idx : clusters[c].members) mean += pop.members[idx].val();
            mean /= static_cast<double>(clusters[c].members.size());
            if (mean < best_mean) {
                best_mean = mean;
                winner = c;
            }
        }
        const Vec target = clusters[winner].centroid;
        const double jitter = param("move_jitter") * pop.spatial_spread();
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            if (c == winner) continue;
            for (std::size_t idx : clusters[c].members) {
                Candidate cand;
                cand.position = ops::move_toward(
                    pop.members[idx].position, target,
                    rng.uniform(0.0, param("move_fraction")), jitter, rng);
                if (!ctx.evaluate(cand)) return;
                pop.members[idx] = cand;
            }
        }
        ++state_.iteration;
    }
};

// Gaussian sparks around elites with greedy acceptance. The width scale
// follows the best member's objective value (capped at half the space), so
// intensification tracks solution quality rather than population geometry;
// per elite it widens with the elite's value gap to the best.
class FwaInstance final : public InstanceBase {
public:
    explicit FwaInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("elite_count") > rp_.population_size)
            throw std::invalid_argument("FWA elite_count must not exceed the population size");
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t e = iparam("elite_count");
        const auto elites = ops::truncation_select(pop, e);
        const double fbest = pop.members[elites.front()].val();
        const double fworst = pop.members[pop.worst_index()].val();
        const double width = std::min(std::abs(fbest), 0.5 * ctx.space().mean_range());

        std::vector<double> sigma(e);
        std::vector<Vec> centers(e);  // pre-step elite positions
        for (std::size_t r = 0; r < e; ++r) {
            const double rel = 1.0 - goodness(pop.members[elites[r]].val(), fbest, fworst);
            sigma[r] = width * (param("amplitude_floor") + param("amplitude") * rel);
            centers[r] = pop.members[elites[r]].position;
        }
        for (std::size_t i = 0; i < pop.size(); ++i) {
            const std::size_t r = rng.index(e);
            Candidate cand;
            cand.position = ops::gaussian_sample(centers[r], sigma[r], rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = ops::greedy_accept(pop.members[i], cand);
        }
        ++state_.iteration;
    }
};

// Targets are random points of the simplex spanned by the three best members;
// each member resamples on the surface of a shrinking cube around its target.
class GwoInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const auto leader_idx = ops::truncation_select(pop, 3);
        // pre-step snapshot: leaders stay fixed while the population moves
        const Vec leaders[3] = {pop.members[leader_idx[0]].position,
                                pop.members[leader_idx[1]].position,
                                pop.members[leader_idx[2]].position};
        const double hw =
            sched(ops::DecaySchedule::linear(param("halfwidth_start"), param("halfwidth_end")),
                  ctx) *
            0.5 * ctx.space().mean_range();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            double w[3] = {rng.uniform01(), rng.uniform01(), rng.uniform01()};
            const double total = w[0] + w[1] + w[2];
            Vec target(ctx.space().dims(), 0.0);
            for (int l = 0; l < 3; ++l)
                for (std::size_t d = 0; d < target.size(); ++d)
                    target[d] += w[l] / total * leaders[l][d];
            Candidate cand;
            cand.position = ops::hypercube_sample(target, hw, rng, /*edge_only=*/true);
            cand.position = ops::gaussian_sample(cand.position, param("jitter_scale") * hw, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }
};

// Fitter members scatter more offspring; offspring are Gaussian samples whose
// width decays on a power schedule; the population is truncated to a cap.
class IwoInstance final : public InstanceBase {
public:
    explicit IwoInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("population_cap") < rp_.population_size)
            throw std::invalid_argument("IWO population_cap must cover the initial population");
        if (iparam("seeds_min") > iparam("seeds_max"))
            throw std::invalid_argument("IWO seeds_min must not exceed seeds_max");
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const double sigma = sched(ops::DecaySchedule::power(param("sigma_start"),
                                                             param("sigma_end"),
                                                             param("sigma_exponent")),
                                   ctx) *
                             ctx.space().mean_range();
        const double smin = param("seeds_min"), smax = param("seeds_max");
        const double fbest = pop.members[pop.best_index()].val();
        const double fworst = pop.members[pop.worst_index()].val();

        const std::size_t parents = pop.size();
        for (std::size_t i = 0; i < parents; ++i) {
            const double rel = goodness(pop.members[i].val(), fbest, fworst);
            const std::size_t count = static_cast<std::size_t>(smin + rel * (smax - smin) + 0.5);
            for (std::size_t s = 0; s < count; ++s) {
                Candidate cand;
                cand.position = ops::gaussian_sample(pop.members[i].position, sigma, rng);
                if (!ctx.evaluate(cand)) {
                    truncate(pop);
                    return;
                }
                pop.members.push_back(std::move(cand));
            }
        }
        truncate(pop);
        ++state_.iteration;
    }

private:
    void truncate(Population& pop) {
        const std::size_t cap = iparam("population_cap");
        if (pop.size() <= cap) return;
        auto keep = ops::truncation_select(pop, cap);
        std::sort(keep.begin(), keep.end());
        std::vector<Candidate> next;
        next.reserve(cap);
        for (std::size_t idx : keep) next.push_back(std::move(pop.members[idx]));
        pop.members = std::move(next);
    }
};

// Members ranked by value spiral toward a sorted archive of historical bests;
// the number of distinct flames followed shrinks to one over the run.
class MfoInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream&) override {
        state_.historical_bests = ctx.pop().members;
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        auto& hbest = *state_.historical_bests;
        const std::size_t n = pop.size();
        const auto flames_snapshot = hbest;  // targets stay fixed within a step

        std::vector<std::size_t> flame_order(n), member_order(n);
        std::iota(flame_order.begin(), flame_order.end(), 0);
        std::iota(member_order.begin(), member_order.end(), 0);
        std::stable_sort(flame_order.begin(), flame_order.end(), [&](std::size_t a, std::size_t b) {
            return flames_snapshot[a].val() < flames_snapshot[b].val();
        });
        std::stable_sort(member_order.begin(), member_order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return pop.members[a].val() < pop.members[b].val();
                         });

        const double fcount = static_cast<double>(n) -
                              ctx.progress() * (static_cast<double>(n) - 1.0);
        const std::size_t flames =
            std::max<std::size_t>(1, static_cast<std::size_t>(fcount + 0.5));

        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t i = member_order[r];
            const Vec& target = flames_snapshot[flame_order[std::min(r, flames - 1)]].position;
            Candidate cand;
            cand.position =
                ops::spiral_move(pop.members[i].position, target, param("turns"), rng.uniform01());
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
            if (cand.val() < hbest[i].val()) hbest[i] = cand;
        }
        ++state_.iteration;
    }
};

// Coin flip between sampling inside a shrinking cube around a target and a
// spiral move toward it; targets are random members early and the population
// best late.
class WoaInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const auto snap = snapshot(pop);
        const Vec best = snap[pop.best_index()].position;
        const double p_random = sched(
            ops::DecaySchedule::linear(param("random_target_start"), param("random_target_end")),
            ctx);
        const double shrink = sched(
            ops::DecaySchedule::linear(param("shrink_start"), param("shrink_end")), ctx);

        for (std::size_t i = 0; i < pop.size(); ++i) {
            const Vec& target =
                rng.chance(p_random) ? snap[rng.index(snap.size())].position : best;
            Candidate cand;
            if (rng.chance(param("spiral_prob"))) {
                cand.position = ops::spiral_move(pop.members[i].position, target, param("turns"),
                                                 rng.uniform01());
            } else {
                const double hw = shrink * dist(pop.members[i].position, target);
                cand.position = ops::hypercube_sample(target, hw, rng);
            }
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }
};

}  // namespace

std::unique_ptr<AlgorithmInstance> make_alo(ResolvedParams rp) {
    return std::make_unique<AloInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_bea(ResolvedParams rp) {
    return std::make_unique<BeaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_bbbc(ResolvedParams rp) {
    return std::make_unique<BbbcInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_coa(ResolvedParams rp) {
    return std::make_unique<CoaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_fwa(ResolvedParams rp) {
    return std::make_unique<FwaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_gwo(ResolvedParams rp) {
    return std::make_unique<GwoInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_iwo(ResolvedParams rp) {
    return std::make_unique<IwoInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_mfo(ResolvedParams rp) {
    return std::make_unique<MfoInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_woa(ResolvedParams rp) {
    return std::make_unique<WoaInstance>(std::move(rp));
}

}  // namespace menagerie::detail
