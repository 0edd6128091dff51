#include "menagerie/components.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace menagerie::ops {

namespace {
void check_same_length(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector lengths differ");
}

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}
}  // namespace

DecaySchedule DecaySchedule::linear(double start, double end) {
    return DecaySchedule{Kind::linear, start, end};
}

DecaySchedule DecaySchedule::exponential(double start, double end) {
    if (start == 0.0 || end == 0.0 || (start > 0.0) != (end > 0.0))
        throw std::invalid_argument("exponential schedule needs nonzero endpoints of equal sign");
    return DecaySchedule{Kind::exponential, start, end};
}

DecaySchedule DecaySchedule::power(double start, double end, double exponent) {
    if (!(exponent > 0.0)) throw std::invalid_argument("power schedule exponent must be positive");
    return DecaySchedule{Kind::power, start, end, exponent};
}

double schedule_value(const DecaySchedule& s, double t, double horizon) {
    if (horizon < 1.0) throw std::invalid_argument("schedule horizon must be at least 1");
    if (t < 0.0 || t > horizon) throw std::invalid_argument("schedule time outside [0, horizon]");
    if (t == 0.0) return s.start;
    if (t == horizon) return s.end;
    const double frac = t / horizon;
    switch (s.kind) {
        case DecaySchedule::Kind::linear:
            return s.start + (s.end - s.start) * frac;
        case DecaySchedule::Kind::exponential:
            return s.start * std::pow(s.end / s.start, frac);
        case DecaySchedule::Kind::power:
            return s.start + (s.end - s.start) * std::pow(frac, s.exponent);
    }
    throw std::logic_error("unreachable schedule kind");
}

std::vector<double> fitness_weights(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("fitness_weights needs at least one value");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double range = *hi - *lo;
    const double eps = range == 0.0 ? 1.0 : 1e-12 * range;
    std::vector<double> w(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) w[i] = (*hi - values[i]) + eps;
    return w;
}

std::vector<std::size_t> truncation_select(const Population& pop, std::size_t k) {
    if (k == 0 || k > pop.size())
        throw std::invalid_argument("truncation_select requires 1 <= k <= population size");
    std::vector<std::size_t> idx(pop.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pop.members[a].val() < pop.members[b].val();
    });
    idx.resize(k);
    return idx;
}

std::size_t proportional_select(const Population& pop, RngStream& rng) {
    if (pop.size() == 0) throw std::invalid_argument("proportional_select on empty population");
    const auto w = fitness_weights(pop.values());
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    const double u = rng.uniform01() * total;
    double cum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        cum += w[i];
        if (u < cum) return i;
    }
    return w.size() - 1;
}

Vec move_toward(std::span<const double> x, std::span<const double> target, double fraction,
                double jitter, RngStream& rng) {
    check_same_length(x, target);
    if (fraction < 0.0) throw std::invalid_argument("move fraction must be non-negative");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + fraction * (target[i] - x[i]);
    if (jitter != 0.0)
        for (auto& c : out) c += jitter * rng.uniform(-1.0, 1.0);
    return out;
}

Vec weighted_centroid(const Population& pop) {
    if (pop.size() == 0) throw std::invalid_argument("weighted_centroid on empty population");
    const auto w = fitness_weights(pop.values());
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    Vec out(pop.members.front().position.size(), 0.0);
    for (std::size_t i = 0; i < pop.size(); ++i)
        for (std::size_t d = 0; d < out.size(); ++d) out[d] += w[i] * pop.members[i].position[d];
    for (auto& c : out) c /= total;
    return out;
}

Vec gaussian_sample(std::span<const double> center, double sigma, RngStream& rng) {
    if (sigma < 0.0) throw std::invalid_argument("sigma must be non-negative");
    Vec out(center.begin(), center.end());
    if (sigma == 0.0) return out;
    for (auto& c : out) c += sigma * rng.normal();
    return out;
}

Vec hypersphere_sample(std::span<const double> center, double radius, RngStream& rng) {
    if (radius < 0.0) throw std::invalid_argument("radius must be non-negative");
    Vec out(center.begin(), center.end());
    if (radius == 0.0) return out;
    const Vec dir = rng.unit_vec(center.size());
    const double r =
        radius * std::pow(rng.uniform01(), 1.0 / static_cast<double>(center.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += r * dir[i];
    return out;
}

Vec hypercube_sample(std::span<const double> center, double half_width, RngStream& rng,
                     bool edge_only) {
    if (half_width < 0.0) throw std::invalid_argument("half width must be non-negative");
    Vec out(center.begin(), center.end());
    if (half_width == 0.0) return out;
    for (auto& c : out) c += rng.uniform(-half_width, half_width);
    if (edge_only) {
        const std::size_t axis = rng.index(center.size());
        const double sign = rng.chance(0.5) ? -1.0 : 1.0;
        out[axis] = center[axis] + sign * half_width;
    }
    return out;
}

Vec spiral_move(std::span<const double> x, std::span<const double> target, double turns, double t) {
    check_same_length(x, target);
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("spiral parameter t must lie in [0, 1]");
    if (t == 1.0) return Vec(target.begin(), target.end());
    Vec offset(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) offset[i] = x[i] - target[i];
    // Rotation in the first coordinate plane is orthogonal, so the offset norm
    // is controlled solely by the strictly decreasing envelope (1-t)e^{-t}.
    if (offset.size() >= 2) {
        const double theta = 2.0 * std::numbers::pi * turns * t;
        const double c = std::cos(theta), s = std::sin(theta);
        const double o0 = offset[0], o1 = offset[1];
        offset[0] = c * o0 - s * o1;
        offset[1] = s * o0 + c * o1;
    }
    const double envelope = (1.0 - t) * std::exp(-t);
    Vec out(target.begin(), target.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += envelope * offset[i];
    return out;
}

Vec levy_step(double scale, double tail_index, std::size_t dims, RngStream& rng) {
    if (!(scale > 0.0)) throw std::invalid_argument("levy scale must be positive");
    if (!(tail_index > 0.0) || !(tail_index < 2.0))
        throw std::invalid_argument("levy tail index must lie in (0, 2)");
    const double a = tail_index;
    const double sigma_u = std::pow(
        std::tgamma(1.0 + a) * std::sin(std::numbers::pi * a / 2.0) /
            (std::tgamma((1.0 + a) / 2.0) * a * std::pow(2.0, (a - 1.0) / 2.0)),
        1.0 / a);
    const Vec dir = rng.unit_vec(dims);
    const double u = sigma_u * rng.normal();
    double v = rng.normal();
    while (v == 0.0) v = rng.normal();
    const double length = scale * std::abs(u) / std::pow(std::abs(v), 1.0 / a);
    Vec out(dims);
    for (std::size_t i = 0; i < dims; ++i) out[i] = length * dir[i];
    return out;
}

std::vector<Vec> random_walk(std::span<const double> start, std::size_t n_steps,
                             const SearchSpace& space,
                             const std::function<Vec(RngStream&)>& step_sampler, RngStream& rng) {
    std::vector<Vec> path;
    path.reserve(n_steps + 1);
    path.push_back(clamp(start, space));
    for (std::size_t s = 0; s < n_steps; ++s) {
        const Vec step = step_sampler(rng);
        if (step.size() != start.size())
            throw std::invalid_argument("walk step length does not match start");
        Vec next = path.back();
        for (std::size_t i = 0; i < next.size(); ++i) next[i] += step[i];
        path.push_back(clamp(next, space));
    }
    return path;
}

Vec clamp_to_ball(std::span<const double> p, std::span<const double> center, double radius) {
    check_same_length(p, center);
    if (radius < 0.0) throw std::invalid_argument("radius must be non-negative");
    const double dist = std::sqrt(sq_dist(p, center));
    Vec out(p.begin(), p.end());
    if (dist <= radius || dist == 0.0) return out;
    const double f = radius / dist;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = center[i] + f * (out[i] - center[i]);
    return out;
}

std::vector<double> inverse_square_weights(std::span<const double> x,
                                           std::span<const Candidate> others) {
    if (others.empty()) throw std::invalid_argument("inverse_square_weights needs others");
    std::vector<double> values;
    values.reserve(others.size());
    for (const auto& o : others) values.push_back(o.val());
    const auto fit = fitness_weights(values);
    constexpr double kDistEps = 1e-9;
    std::vector<double> w(others.size());
    for (std::size_t j = 0; j < others.size(); ++j)
        w[j] = fit[j] / (sq_dist(x, others[j].position) + kDistEps);
    return w;
}

Candidate greedy_accept(const Candidate& incumbent, const Candidate& challenger) {
    if (!incumbent.evaluated() || !challenger.evaluated())
        throw std::invalid_argument("greedy_accept requires evaluated candidates");
    return challenger.val() < incumbent.val() ? challenger : incumbent;
}

Candidate probabilistic_accept(const Candidate& incumbent, const Candidate& challenger,
                               double accept_param, RngStream& rng) {
    if (accept_param < 0.0 || accept_param > 1.0)
        throw std::invalid_argument("acceptance parameter must lie in [0, 1]");
    if (!incumbent.evaluated() || !challenger.evaluated())
        throw std::invalid_argument("probabilistic_accept requires evaluated candidates");
    if (challenger.val() < incumbent.val()) return challenger;
    return rng.uniform01() < accept_param ? challenger : incumbent;
}

Vec recombine(std::span<const double> a, std::span<const double> b, RngStream& rng) {
    check_same_length(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = rng.chance(0.5) ? a[i] : b[i];
    return out;
}

Candidate restart(const SearchSpace& space, RngStream& rng) {
    Candidate c;
    c.position.resize(space.dims());
    for (std::size_t d = 0; d < space.dims(); ++d)
        c.position[d] = rng.uniform(space.lower[d], space.upper[d]);
    return c;
}

Vec velocity_update(std::span<const double> v, std::span<const double> x,
                    std::span<const double> personal_best, std::span<const double> informant_best,
                    double inertia, double c1, double c2, RngStream& rng) {
    check_same_length(v, x);
    check_same_length(x, personal_best);
    check_same_length(x, informant_best);
    if (inertia < 0.0 || c1 < 0.0 || c2 < 0.0)
        throw std::invalid_argument("velocity coefficients must be non-negative");
    const std::size_t n = v.size();
    Vec r1(n), r2(n);
    for (auto& r : r1) r = rng.uniform01();
    for (auto& r : r2) r = rng.uniform01();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = inertia * v[i] + c1 * r1[i] * (personal_best[i] - x[i]) +
                 c2 * r2[i] * (informant_best[i] - x[i]);
    return out;
}

namespace {
struct Assignment {
    std::vector<std::size_t> label;
    std::vector<Vec> centroids;
    double cost = std::numeric_limits<double>::infinity();
};

std::size_t nearest_centroid(const Vec& p, const std::vector<Vec>& centroids) {
    std::size_t best = 0;
    double best_d = sq_dist(p, centroids[0]);
    for (std::size_t c = 1; c < centroids.size(); ++c) {
        const double d = sq_dist(p, centroids[c]);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

// D^2-weighted seeding over member points. Coincident picks are possible for
// degenerate inputs and get repaired as empty clusters inside Lloyd.
std::vector<std::size_t> seed_centers(std::span<const Vec> points, std::size_t k,
                                      RngStream& rng) {
    std::vector<std::size_t> centers;
    centers.push_back(rng.index(points.size()));
    std::vector<double> d2(points.size());
    while (centers.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t c : centers) best = std::min(best, sq_dist(points[i], points[c]));
            d2[i] = best;
            total += best;
        }
        std::size_t pick;
        if (total == 0.0) {
            // all remaining points coincide with a center; take the first unused index
            pick = 0;
            while (std::find(centers.begin(), centers.end(), pick) != centers.end()) ++pick;
        } else {
            const double u = rng.uniform01() * total;
            double cum = 0.0;
            pick = points.size() - 1;
            for (std::size_t i = 0; i < points.size(); ++i) {
                cum += d2[i];
                if (u < cum) {
                    pick = i;
                    break;
                }
            }
        }
        centers.push_back(pick);
    }
    return centers;
}

void recompute_cost(std::span<const Vec> points, Assignment& a) {
    a.cost = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        a.cost += sq_dist(points[i], a.centroids[a.label[i]]);
}

// Lloyd iterations from the current centroids; 100-iteration cap with early
// exit on an unchanged assignment, empty clusters reseeded from the farthest
// point.
void lloyd(std::span<const Vec> points, std::size_t k, Assignment& a) {
    constexpr int kMaxIter = 100;
    const std::size_t dims = points.front().size();
    for (int it = 0; it < kMaxIter; ++it) {
        bool changed = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::size_t c = nearest_centroid(points[i], a.centroids);
            if (c != a.label[i]) {
                a.label[i] = c;
                changed = true;
            }
        }
        if (!changed) break;

        std::vector<Vec> sums(k, Vec(dims, 0.0));
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            ++counts[a.label[i]];
            for (std::size_t d = 0; d < dims; ++d) sums[a.label[i]][d] += points[i][d];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) {
                // reseed the empty cluster from the point farthest from its centroid
                std::size_t far = 0;
                double far_d = -1.0;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    const double d = sq_dist(points[i], a.centroids[a.label[i]]);
                    if (d > far_d) {
                        far_d = d;
                        far = i;
                    }
                }
                a.centroids[c] = points[far];
                a.label[far] = c;
            } else {
                for (std::size_t d = 0; d < dims; ++d)
                    a.centroids[c][d] = sums[c][d] / static_cast<double>(counts[c]);
            }
        }
    }
    recompute_cost(points, a);
}

// Single-point reassignment polish (Hartigan-style exact deltas). Escapes the
// coarse local optima Lloyd settles into on small inputs; emptying moves are
// skipped so the partition keeps k non-empty clusters.
bool hartigan_polish(std::span<const Vec> points, std::size_t k, Assignment& a) {
    const std::size_t dims = points.front().size();
    std::vector<std::size_t> counts(k, 0);
    std::vector<Vec> sums(k, Vec(dims, 0.0));
    for (std::size_t i = 0; i < points.size(); ++i) {
        ++counts[a.label[i]];
        for (std::size_t d = 0; d < dims; ++d) sums[a.label[i]][d] += points[i][d];
    }
    auto centroid_dist2 = [&](std::size_t c, const Vec& p) {
        double s = 0.0;
        for (std::size_t d = 0; d < dims; ++d) {
            const double diff = p[d] - sums[c][d] / static_cast<double>(counts[c]);
            s += diff * diff;
        }
        return s;
    };

    bool any_improvement = false;
    for (int pass = 0; pass < 50; ++pass) {
        bool improved = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::size_t from = a.label[i];
            if (counts[from] <= 1) continue;
            const double nf = static_cast<double>(counts[from]);
            const double gain = nf / (nf - 1.0) * centroid_dist2(from, points[i]);
            std::size_t best_to = from;
            double best_delta = -1e-12;
            for (std::size_t to = 0; to < k; ++to) {
                if (to == from) continue;
                const double nt = static_cast<double>(counts[to]);
                const double cost = nt / (nt + 1.0) * centroid_dist2(to, points[i]);
                const double delta = cost - gain;
                if (delta < best_delta) {
                    best_delta = delta;
                    best_to = to;
                }
            }
            if (best_to != from) {
                for (std::size_t d = 0; d < dims; ++d) {
                    sums[from][d] -= points[i][d];
                    sums[best_to][d] += points[i][d];
                }
                --counts[from];
                ++counts[best_to];
                a.label[i] = best_to;
                improved = true;
                any_improvement = true;
            }
        }
        if (!improved) break;
    }
    if (any_improvement) {
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t d = 0; d < dims; ++d)
                a.centroids[c][d] = sums[c][d] / static_cast<double>(counts[c]);
        recompute_cost(points, a);
    }
    return any_improvement;
}
}  // namespace

std::vector<Cluster> kmeans(std::span<const Vec> points, std::size_t k, RngStream& rng) {
    if (k == 0 || k > points.size())
        throw std::invalid_argument("kmeans requires 1 <= k <= number of points");
    // small inputs have coarse basins and cheap restarts, so they get more
    const int restarts = points.size() <= 16 ? 16 : 6;
    Assignment best;
    for (int r = 0; r < restarts; ++r) {
        Assignment a;
        for (std::size_t c : seed_centers(points, k, rng)) a.centroids.push_back(points[c]);
        a.label.assign(points.size(), k);  // k = unassigned sentinel
        lloyd(points, k, a);
        // alternate single-point polish and Lloyd reconvergence; WCSS only falls
        for (int round = 0; round < 3; ++round) {
            if (!hartigan_polish(points, k, a)) break;
            lloyd(points, k, a);
        }
        if (a.cost < best.cost) best = std::move(a);
    }

    std::vector<Cluster> clusters(k);
    const std::size_t dims = points.front().size();
    for (auto& c : clusters) c.centroid.assign(dims, 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        clusters[best.label[i]].members.push_back(i);
        for (std::size_t d = 0; d < dims; ++d) clusters[best.label[i]].centroid[d] += points[i][d];
    }
    for (auto& c : clusters)
        if (!c.members.empty())
            for (auto& x : c.centroid) x /= static_cast<double>(c.members.size());
    return clusters;
}

double wcss(std::span<const Vec> points, std::span<const Cluster> clusters) {
    double total = 0.0;
    for (const auto& c : clusters)
        for (std::size_t i : c.members) total += sq_dist(points[i], c.centroid);
    return total;
}

}  // namespace menagerie::ops
