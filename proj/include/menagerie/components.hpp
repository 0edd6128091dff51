#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "menagerie/core.hpp"

namespace menagerie::ops {

/// Deterministic parameter decay over a run. value(0) = start, value(T) = end,
/// monotone in between.
struct DecaySchedule {
    enum class Kind { linear, exponential, power };
    Kind kind;
    double start;
    double end;
    double exponent = 2.0;  // power kind only

    static DecaySchedule linear(double start, double end);
    /// Geometric interpolation; start and end must be nonzero with equal sign.
    static DecaySchedule exponential(double start, double end);
    static DecaySchedule power(double start, double end, double exponent);
};

/// Schedule value at time t of horizon T (0 <= t <= T, T >= 1).
double schedule_value(const DecaySchedule& s, double t, double horizon);

/// Shared minimization fitness transform: w_i = (worst - v_i) + eps, with
/// eps = 1e-12 * value range (or 1 when the range is zero, which makes all
/// weights equal). Every proportional operator uses this same transform.
std::vector<double> fitness_weights(std::span<const double> values);

/// Indices of the k lowest-value members, best first; ties go to the lower index.
std::vector<std::size_t> truncation_select(const Population& pop, std::size_t k);

/// Index drawn with probability proportional to fitness_weights of the values.
std::size_t proportional_select(const Population& pop, RngStream& rng);

/// x + fraction * (target - x) + jitter * u, u uniform in [-1, 1] per coordinate.
/// jitter = 0 draws nothing and returns the exact line point.
Vec move_toward(std::span<const double> x, std::span<const double> target, double fraction,
                double jitter, RngStream& rng);

/// Fitness-weighted mean position (shared transform; better value, larger weight).
Vec weighted_centroid(const Population& pop);

/// center + sigma * z, z standard normal per coordinate. sigma = 0 returns center.
Vec gaussian_sample(std::span<const double> center, double sigma, RngStream& rng);

/// Volume-uniform sample in the ball: uniform direction scaled by radius * u^(1/dims).
Vec hypersphere_sample(std::span<const double> center, double radius, RngStream& rng);

/// Uniform sample in the axis-aligned cube of the given half width; with
/// edge_only one coordinate is pinned to +-half_width, putting the point on
/// the cube surface.
Vec hypercube_sample(std::span<const double> center, double half_width, RngStream& rng,
                     bool edge_only = false);

/// Logarithmic-spiral interpolation from x to target: the offset is rotated by
/// 2*pi*turns*t in the first coordinate plane and contracted by (1-t)*exp(-t),
/// so distance to target shrinks strictly monotonically to 0 at t = 1.
Vec spiral_move(std::span<const double> x, std::span<const double> target, double turns, double t);

/// Heavy-tailed random step (Mantegna construction): uniform direction times
/// scale * |u| / |v|^(1/tail_index), u ~ N(0, sigma_u^2), v ~ N(0, 1).
/// tail_index must lie in (0, 2).
Vec levy_step(double scale, double tail_index, std::size_t dims, RngStream& rng);

/// Cumulative walk from start; each step is sampled, added, and clamped to the
/// space. Returns n_steps + 1 positions including the (clamped) start.
std::vector<Vec> random_walk(std::span<const double> start, std::size_t n_steps,
                             const SearchSpace& space,
                             const std::function<Vec(RngStream&)>& step_sampler, RngStream& rng);

/// Projection of p onto the closed ball around center.
Vec clamp_to_ball(std::span<const double> p, std::span<const double> center, double radius);

/// Attraction weight per other: fitness(other) / (squared distance + 1e-9),
/// fitness via the shared transform over the others' values.
std::vector<double> inverse_square_weights(std::span<const double> x,
                                           std::span<const Candidate> others);

/// Lower value wins; a tie keeps the incumbent.
Candidate greedy_accept(const Candidate& incumbent, const Candidate& challenger);

/// Improving challengers always win; non-improving ones win with probability
/// accept_param. accept_param = 0 reproduces greedy_accept.
Candidate probabilistic_accept(const Candidate& incumbent, const Candidate& challenger,
                               double accept_param, RngStream& rng);

/// Uniform crossover: each coordinate from a or b with equal probability.
Vec recombine(std::span<const double> a, std::span<const double> b, RngStream& rng);

/// Fresh uniform sample from the space; the caller evaluates it.
Candidate restart(const SearchSpace& space, RngStream& rng);

/// inertia*v + c1*r1.*(personal_best - x) + c2*r2.*(informant_best - x),
/// r1 then r2 drawn uniform [0,1) per coordinate.
Vec velocity_update(std::span<const double> v, std::span<const double> x,
                    std::span<const double> personal_best, std::span<const double> informant_best,
                    double inertia, double c1, double c2, RngStream& rng);

struct Cluster {
    std::vector<std::size_t> members;
    Vec centroid;
};

/// Lloyd's k-means with D^2-weighted member seeding, best of a few restarts,
/// a 100-iteration cap with early exit on an unchanged assignment, and empty
/// clusters repaired by reseeding from the farthest point. Deterministic given
/// the rng. Clusters partition [0, points.size()).
std::vector<Cluster> kmeans(std::span<const Vec> points, std::size_t k, RngStream& rng);

/// Within-cluster sum of squared distances to centroids.
double wcss(std::span<const Vec> points, std::span<const Cluster> clusters);

}  // namespace menagerie::ops
