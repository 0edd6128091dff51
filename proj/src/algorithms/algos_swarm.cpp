#include "common.hpp"

// Vector-move family: members steer toward other members' current (or
// remembered) positions, with move sizes set by coefficients, distances, or
// population spread rather than schedules unless noted.

namespace menagerie::detail {

namespace {

class PsoInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream& rng) override {
        const auto& pop = ctx.pop();
        const std::size_t dims = ctx.space().dims();
        const double vscale = param("velocity_init") * ctx.space().mean_range();
        std::vector<Vec> vel(pop.size(), Vec(dims));
        for (auto& v : vel)
            for (auto& c : v) c = rng.uniform(-vscale, vscale);
        state_.velocities = std::move(vel);
        state_.historical_bests = pop.members;
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        auto& vel = *state_.velocities;
        auto& pbest = *state_.historical_bests;
        // global-best informant topology, read from the pre-step snapshot
        std::size_t g = 0;
        for (std::size_t i = 1; i < pbest.size(); ++i)
            if (pbest[i].val() < pbest[g].val()) g = i;
        const Vec informant = pbest[g].position;

        const double w = param("inertia"), c1 = param("cognitive"), c2 = param("social");
        for (std::size_t i = 0; i < pop.size(); ++i) {
            vel[i] = ops::velocity_update(vel[i], pop.members[i].position, pbest[i].position,
                                          informant, w, c1, c2, rng);
            Candidate cand;
            cand.position = pop.members[i].position;
            for (std::size_t d = 0; d < cand.position.size(); ++d) cand.position[d] += vel[i][d];
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
            if (cand.val() < pbest[i].val()) pbest[i] = cand;
        }
        ++state_.iteration;
    }
};

// Moves toward the population best at a randomized magnitude; local jumps near
// the best become rarer (and acceptance of non-improving moves more likely)
// as a member accumulates improvements.
class BaInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream&) override {
        improvements_.assign(ctx.pop().size(), 0);
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const Vec best = pop.members[pop.best_index()].position;
        const double range = ctx.space().mean_range();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            const double shrink = std::pow(param("jump_decay"), improvements_[i]);
            Candidate cand;
            cand.position = ops::move_toward(pop.members[i].position, best,
                                             rng.uniform(0.0, param("move_fraction_max")), 0.0, rng);
            if (rng.chance(param("jump_prob") * shrink))
                cand.position = ops::gaussian_sample(best, param("jump_sigma") * range * shrink, rng);
            if (!ctx.evaluate(cand)) return;
            const double loudness =
                (1.0 - param("accept_start")) * std::pow(param("loudness_decay"), improvements_[i]);
            const bool improving = cand.val() < pop.members[i].val();
            pop.members[i] = ops::probabilistic_accept(pop.members[i], cand, 1.0 - loudness, rng);
            if (improving) ++improvements_[i];
        }
        ++state_.iteration;
    }

private:
    std::vector<std::uint32_t> improvements_;
};

// Each cat either samples a few points nearby and keeps the best, or traces
// toward the population best.
class CsoInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const Vec best = pop.members[pop.best_index()].position;
        const double radius =
            param("seek_radius") * pop.spatial_spread() + 1e-9 * ctx.space().mean_range();
        const std::size_t samples = iparam("seek_samples");
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (rng.chance(param("trace_prob"))) {
                Candidate cand;
                cand.position = ops::move_toward(
                    pop.members[i].position, best,
                    rng.uniform(0.0, param("trace_fraction_max")), 0.0, rng);
                if (!ctx.evaluate(cand)) return;
                pop.members[i] = cand;
            } else {
                Candidate kept;
                for (std::size_t s = 0; s < samples; ++s) {
                    Candidate cand;
                    cand.position = ops::gaussian_sample(pop.members[i].position, radius, rng);
                    if (!ctx.evaluate(cand)) return;
                    if (!kept.evaluated() || cand.val() < kept.val()) kept = cand;
                }
                pop.members[i] = kept;
            }
        }
        ++state_.iteration;
    }
};

// Attraction pull toward the strictly better members, inverse-square weighted
// and normalized. Under minimization the value weighting zeroes out targets no
// better than the mover, so the incumbent best holds still.
Vec better_only_pull(const std::vector<Candidate>& snap, std::size_t i) {
    std::vector<Candidate> better;
    for (std::size_t j = 0; j < snap.size(); ++j)
        if (j != i && snap[j].val() < snap[i].val()) better.push_back(snap[j]);
    Vec pull(snap[i].position.size(), 0.0);
    if (better.empty()) return pull;
    const auto w = ops::inverse_square_weights(snap[i].position, better);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (total <= 0.0) return pull;
    for (std::size_t j = 0; j < better.size(); ++j)
        for (std::size_t d = 0; d < pull.size(); ++d)
            pull[d] += w[j] / total * (better[j].position[d] - snap[i].position[d]);
    return pull;
}

// Velocity-bearing inverse-square attraction; attraction strengthens and
// velocity memory fades over the run, and the pre-step best survives every
// iteration.
class CssInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream&) override {
        state_.velocities.emplace(ctx.pop().size(), Vec(ctx.space().dims(), 0.0));
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        auto& vel = *state_.velocities;
        const auto snap = snapshot(pop);
        const Candidate prev_best = snap[pop.best_index()];
        const double kv = sched(ops::DecaySchedule::linear(param("velocity_coef_start"),
                                                           param("velocity_coef_end")),
                                ctx);
        const double ka = sched(ops::DecaySchedule::linear(param("attract_coef_start"),
                                                           param("attract_coef_end")),
                                ctx);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            const Vec pull = better_only_pull(snap, i);
            const double r1 = rng.uniform01(), r2 = rng.uniform01();
            Candidate cand;
            cand.position = pop.members[i].position;
            for (std::size_t d = 0; d < pull.size(); ++d) {
                vel[i][d] = kv * r1 * vel[i][d] + ka * r2 * pull[d];
                cand.position[d] += vel[i][d];
            }
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        if (pop.members[pop.best_index()].val() > prev_best.val())
            pop.members[pop.worst_index()] = prev_best;
        ++state_.iteration;
    }
};

// Every member moves toward the others, weighted by fitness over squared
// distance, plus a spread-scaled jitter.
class FaInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const auto snap = snapshot(pop);
        const double jitter = param("jitter_scale") * pop.spatial_spread();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            const Vec pull = better_only_pull(snap, i);
            const double beta = param("attraction") * rng.uniform01();
            Candidate cand;
            cand.position = pop.members[i].position;
            for (std::size_t d = 0; d < cand.position.size(); ++d)
                cand.position[d] += beta * pull[d];
            if (jitter > 0.0)
                for (auto& c : cand.position) c += jitter * rng.uniform(-1.0, 1.0);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }
};

// Deliberately minimal: everyone takes a jittered move toward the population
// best. The jitter rides the population spread so the swarm can keep refining.
class FoaInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const Vec best = pop.members[pop.best_index()].position;
        const double jitter = param("jitter_scale") * pop.spatial_spread();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            Candidate cand;
            cand.position =
                ops::move_toward(pop.members[i].position, best, rng.uniform01(), jitter, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }
};

// Coin flip per member: a heavy-tailed hop toward the population best, or a
// plain move toward a random member. Improving moves stick.
class FpaInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const auto snap = snapshot(pop);
        const Vec best = snap[pop.best_index()].position;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            Candidate cand;
            if (rng.chance(param("p_global"))) {
                const double frac =
                    std::abs(ops::levy_step(param("levy_scale"), param("levy_tail"), 1, rng)[0]);
                cand.position = ops::move_toward(pop.members[i].position, best, frac, 0.0, rng);
            } else {
                const std::size_t j = rng.index_excluding(snap.size(), i);
                cand.position = ops::move_toward(pop.members[i].position, snap[j].position,
                                                 rng.uniform01(), 0.0, rng);
            }
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = ops::greedy_accept(pop.members[i], cand);
        }
        ++state_.iteration;
    }
};

// Velocity-bearing all-pairs attraction, like CSS but with fixed coefficients
// and no elite preservation.
class GsaInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream&) override {
        state_.velocities.emplace(ctx.pop().size(), Vec(ctx.space().dims(), 0.0));
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        auto& vel = *state_.velocities;
        const auto snap = snapshot(pop);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            const Vec pull = better_only_pull(snap, i);
            const double r1 = rng.uniform01(), r2 = rng.uniform01();
            Candidate cand;
            cand.position = pop.members[i].position;
            for (std::size_t d = 0; d < pull.size(); ++d) {
                vel[i][d] = r1 * vel[i][d] + r2 * param("grav") * pull[d];
                cand.position[d] += vel[i][d];
            }
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }
};

// Each member keeps a progress score that rises on improvement and decays
// otherwise, picks progress-weighted targets inside a personal radius, and the
// radius shrinks when the neighbourhood is crowded. Moves stick only when they
// improve the mover.
class GwsoInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream&) override {
        progress_.assign(ctx.pop().size(), 0.0);
        improved_.assign(ctx.pop().size(), 0);
        radius_.assign(ctx.pop().size(), param("radius_init") * ctx.space().mean_range());
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const auto snap = snapshot(pop);
        const double range = ctx.space().mean_range();
        const double spread = pop.spatial_spread();
        const double target_n = param("neighbor_target");
        for (std::size_t i = 0; i < pop.size(); ++i)
            progress_[i] = param("progress_decay") * progress_[i] +
                           (improved_[i] ? param("progress_gain") : 0.0);

        for (std::size_t i = 0; i < pop.size(); ++i) {
            std::vector<std::size_t> nbrs;
            for (std::size_t j = 0; j < snap.size(); ++j)
                if (j != i && dist(snap[i].position, snap[j].position) < radius_[i])
                    nbrs.push_back(j);

            const double jit = param("jitter_scale") * std::min(radius_[i], spread);
            Candidate cand;
            if (nbrs.empty()) {
                cand.position = ops::gaussian_sample(pop.members[i].position,
                                                     std::max(jit, 1e-12 * range), rng);
            } else {
                double total = 0.0;
                for (std::size_t j : nbrs) total += progress_[j] + 1e-9;
                double u = rng.uniform01() * total;
                std::size_t pick = nbrs.back();
                for (std::size_t j : nbrs) {
                    u -= progress_[j] + 1e-9;
                    if (u < 0.0) {
                        pick = j;
                        break;
                    }
                }
                cand.position =
                    ops::move_toward(pop.members[i].position, snap[pick].position,
                                     param("move_fraction") * rng.uniform01(), jit, rng);
            }
            if (!ctx.evaluate(cand)) return;
            improved_[i] = cand.val() < pop.members[i].val() ? 1 : 0;
            pop.members[i] = ops::greedy_accept(pop.members[i], cand);

            const double adjust =
                param("radius_step") * range * (1.0 - static_cast<double>(nbrs.size()) / target_n);
            radius_[i] = std::clamp(radius_[i] + adjust, param("radius_min") * range,
                                    param("radius_max") * range);
        }
        ++state_.iteration;
    }

private:
    std::vector<double> progress_;
    std::vector<std::uint8_t> improved_;
    std::vector<double> radius_;
};

// Blended move toward the population best, the member's own historical best,
// the fitness-weighted centroid, and signed neighbour attraction, plus a
// random component that fades over the run; a recombine+jitter pass touches a
// fixed fraction of the population each iteration.
class KhInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void init_state(RunContext& ctx, RngStream&) override {
        state_.historical_bests = ctx.pop().members;
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        auto& hbest = *state_.historical_bests;
        const auto snap = snapshot(pop);
        const Vec best = snap[pop.best_index()].position;
        const Vec centroid = ops::weighted_centroid(pop);
        const double spread = pop.spatial_spread();
        const double radius = param("neighbor_radius") * spread + 1e-12;
        const double wrand =
            sched(ops::DecaySchedule::linear(param("random_start"), param("random_end")), ctx);

        for (std::size_t i = 0; i < pop.size(); ++i) {
            const Vec& x = pop.members[i].position;
            Vec move(x.size(), 0.0);
            auto add_pull = [&](const Vec& target, double w, double u) {
                for (std::size_t d = 0; d < move.size(); ++d)
                    move[d] += w * u * (target[d] - x[d]);
            };
            add_pull(best, param("w_best"), rng.uniform01());
            add_pull(hbest[i].position, param("w_historical"), rng.uniform01());
            add_pull(centroid, param("w_centroid"), rng.uniform01());

            Vec nbr(x.size(), 0.0);
            std::size_t count = 0;
            for (std::size_t j = 0; j < snap.size(); ++j) {
                if (j == i) continue;
                const double d_ij = dist(x, snap[j].position);
                if (d_ij >= radius || d_ij == 0.0) continue;
                const double sign = snap[j].val() < snap[i].val() ? 1.0 : -1.0;
                for (std::size_t d = 0; d < nbr.size(); ++d)
                    nbr[d] += sign * (snap[j].position[d] - x[d]) / d_ij;
                ++count;
            }
            if (count > 0) {
                const double u = rng.uniform01();
                for (std::size_t d = 0; d < move.size(); ++d)
                    move[d] += param("w_neighbor") * u * spread * nbr[d] /
                               static_cast<double>(count);
            }
            for (auto& m : move) m += wrand * spread * rng.uniform(-1.0, 1.0);

            Candidate cand;
            cand.position = x;
            for (std::size_t d = 0; d < move.size(); ++d)
                cand.position[d] += param("step_scale") * move[d];
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
            if (cand.val() < hbest[i].val()) hbest[i] = cand;
        }

        const std::size_t passes = static_cast<std::size_t>(
            std::ceil(param("recombine_fraction") * static_cast<double>(pop.size())));
        for (std::size_t p = 0; p < passes; ++p) {
            const std::size_t i = rng.index(pop.size());
            const std::size_t j = rng.index_excluding(pop.size(), i);
            Candidate cand;
            cand.position =
                ops::recombine(pop.members[i].position, pop.members[j].position, rng);
            cand.position = ops::gaussian_sample(cand.position,
                                                 param("recombine_jitter") * spread, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
            if (cand.val() < hbest[i].val()) hbest[i] = cand;
        }
        ++state_.iteration;
    }
};

// Teacher phase shifts everyone by a random fraction of (best - mean), then a
// learner phase moves toward better partners and away from worse ones. Both
// phases keep only improvements.
class TlboInstance final : public InstanceBase {
public:
    using InstanceBase::InstanceBase;

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t dims = ctx.space().dims();
        Vec mean(dims, 0.0);
        for (const auto& m : pop.members)
            for (std::size_t d = 0; d < dims; ++d) mean[d] += m.position[d];
        for (auto& c : mean) c /= static_cast<double>(pop.size());
        const Vec best = pop.members[pop.best_index()].position;

        for (std::size_t i = 0; i < pop.size(); ++i) {
            Vec target = pop.members[i].position;
            for (std::size_t d = 0; d < dims; ++d) target[d] += best[d] - mean[d];
            Candidate cand;
            cand.position =
                ops::move_toward(pop.members[i].position, target, rng.uniform01(), 0.0, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = ops::greedy_accept(pop.members[i], cand);
        }

        for (std::size_t i = 0; i < pop.size(); ++i) {
            const std::size_t j = rng.index_excluding(pop.size(), i);
            const Vec& x = pop.members[i].position;
            const Vec& other = pop.members[j].position;
            Vec target(x.size());
            if (pop.members[j].val() < pop.members[i].val()) {
                target = other;
            } else {
                // mirror of the partner through the member: a move away
                for (std::size_t d = 0; d < x.size(); ++d) target[d] = 2.0 * x[d] - other[d];
            }
            Candidate cand;
            cand.position = ops::move_toward(x, target, rng.uniform01(), 0.0, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = ops::greedy_accept(pop.members[i], cand);
        }
        ++state_.iteration;
    }
};

// A few elites chase the best; every other member chases a fitness-
// proportionally assigned elite; occasional jitter moves keep diversity.
class WcaInstance final : public InstanceBase {
public:
    explicit WcaInstance(ResolvedParams rp) : InstanceBase(std::move(rp)) {
        if (iparam("elite_count") >= rp_.population_size)
            throw std::invalid_argument("WCA elite_count must be below the population size");
    }

    void step(RunContext& ctx, RngStream& rng) override {
        auto& pop = ctx.pop();
        const std::size_t e = iparam("elite_count");
        const auto elites = ops::truncation_select(pop, e);
        const Vec best = pop.members[elites[0]].position;
        const double fmax = param("move_fraction_max");
        const double spread = pop.spatial_spread();

        std::vector<double> elite_values;
        std::vector<Vec> elite_targets;  // pre-step elite positions
        for (std::size_t idx : elites) {
            elite_values.push_back(pop.members[idx].val());
            elite_targets.push_back(pop.members[idx].position);
        }
        const auto weights = ops::fitness_weights(elite_values);
        std::vector<bool> is_elite(pop.size(), false);
        for (std::size_t idx : elites) is_elite[idx] = true;

        for (std::size_t r = 1; r < elites.size(); ++r) {
            Candidate cand;
            cand.position = ops::move_toward(pop.members[elites[r]].position, best,
                                             rng.uniform(0.0, fmax), 0.0, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[elites[r]] = cand;
        }
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (is_elite[i]) continue;
            double u = rng.uniform01() * std::accumulate(weights.begin(), weights.end(), 0.0);
            std::size_t pick = e - 1;
            for (std::size_t r = 0; r < elites.size(); ++r) {
                u -= weights[r];
                if (u < 0.0) {
                    pick = r;
                    break;
                }
            }
            Candidate cand;
            cand.position = ops::move_toward(pop.members[i].position, elite_targets[pick],
                                             rng.uniform(0.0, fmax), 0.0, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (is_elite[i] || !rng.chance(param("jitter_prob"))) continue;
            Candidate cand;
            cand.position = ops::gaussian_sample(pop.members[i].position,
                                                 param("jitter_sigma") * spread, rng);
            if (!ctx.evaluate(cand)) return;
            pop.members[i] = cand;
        }
        ++state_.iteration;
    }
};

}  // namespace

std::unique_ptr<AlgorithmInstance> make_pso(ResolvedParams rp) {
    return std::make_unique<PsoInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_ba(ResolvedParams rp) {
    return std::make_unique<BaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_cso(ResolvedParams rp) {
    return std::make_unique<CsoInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_css(ResolvedParams rp) {
    return std::make_unique<CssInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_fa(ResolvedParams rp) {
    return std::make_unique<FaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_foa(ResolvedParams rp) {
    return std::make_unique<FoaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_fpa(ResolvedParams rp) {
    return std::make_unique<FpaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_gsa(ResolvedParams rp) {
    return std::make_unique<GsaInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_gwso(ResolvedParams rp) {
    return std::make_unique<GwsoInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_kh(ResolvedParams rp) {
    return std::make_unique<KhInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_tlbo(ResolvedParams rp) {
    return std::make_unique<TlboInstance>(std::move(rp));
}
std::unique_ptr<AlgorithmInstance> make_wca(ResolvedParams rp) {
    return std::make_unique<WcaInstance>(std::move(rp));
}

}  // namespace menagerie::detail
