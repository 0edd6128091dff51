#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "menagerie/components.hpp"
#include "oracles.hpp"

using namespace menagerie;
using namespace menagerie::ops;

namespace {
Population pop_of(const std::vector<double>& values) {
    Population pop;
    for (double v : values) {
        Candidate c(Vec{v, 0.0});
        c.value = v;
        pop.members.push_back(std::move(c));
    }
    return pop;
}

Population pop_at(const std::vector<Vec>& positions, const std::vector<double>& values) {
    Population pop;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        Candidate c(positions[i]);
        c.value = values[i];
        pop.members.push_back(std::move(c));
    }
    return pop;
}

double norm(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}
}  // namespace

TEST_SUITE_BEGIN("components");

TEST_CASE("truncation_select picks the k best with index tie-breaks") {
    CHECK(truncation_select(pop_of({3, 1, 2}), 1) == std::vector<std::size_t>{1});
    CHECK(truncation_select(pop_of({1, 1, 2}), 1) == std::vector<std::size_t>{0});
    CHECK(truncation_select(pop_of({5, 4, 3, 2, 1}), 2) == std::vector<std::size_t>{4, 3});
    CHECK_THROWS_AS(truncation_select(pop_of({1, 2}), 3), std::invalid_argument);
    CHECK_THROWS_AS(truncation_select(pop_of({1, 2}), 0), std::invalid_argument);
}

TEST_CASE("proportional_select singleton and symmetry") {
    RngStream rng(1);
    CHECK(proportional_select(pop_of({4.2}), rng) == 0);

    const auto pop = pop_of({1.0, 1.0});
    int first = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i)
        if (proportional_select(pop, rng) == 0) ++first;
    CHECK(std::abs(first / static_cast<double>(n) - 0.5) < 0.02);
}

TEST_CASE("proportional_select matches transform probabilities") {
    // values (1,3): expected pick frequencies computed from the transform
    const auto w = test_oracles::transform_weights({1.0, 3.0});
    const double p0 = w[0] / (w[0] + w[1]);
    const auto pop = pop_of({1.0, 3.0});
    RngStream rng(2);
    const int n = 10000;
    int first = 0;
    for (int i = 0; i < n; ++i)
        if (proportional_select(pop, rng) == 0) ++first;
    const double se = std::sqrt(p0 * (1.0 - p0) / n) + 1e-9;
    CHECK(std::abs(first / static_cast<double>(n) - p0) < 3.0 * se + 1e-3);
}

TEST_CASE("move_toward endpoints and midpoint") {
    RngStream rng(3);
    const Vec x{0.0, 0.0}, target{2.0, 2.0};
    CHECK(move_toward(x, target, 0.0, 0.0, rng) == x);
    CHECK(move_toward(x, target, 1.0, 0.0, rng) == target);
    CHECK(move_toward(x, target, 0.5, 0.0, rng) == Vec{1.0, 1.0});
    CHECK_THROWS_AS(move_toward(x, Vec{1.0}, 0.5, 0.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(move_toward(x, target, -0.1, 0.0, rng), std::invalid_argument);
}

TEST_CASE("weighted_centroid") {
    SUBCASE("equal values give the arithmetic mean") {
        const auto pop = pop_at({{0.0, 0.0}, {4.0, 2.0}}, {1.0, 1.0});
        const auto c = weighted_centroid(pop);
        CHECK(c[0] == doctest::Approx(2.0));
        CHECK(c[1] == doctest::Approx(1.0));
    }
    SUBCASE("singleton returns its position") {
        const auto pop = pop_at({{3.0, -1.0}}, {7.0});
        CHECK(weighted_centroid(pop) == Vec{3.0, -1.0});
    }
    SUBCASE("weights follow the shared transform (hand-computed case)") {
        // values (0,2,3): transform weights approach (3,1,0), putting the
        // centroid of positions (0,0),(4,0),(9,9) at (1,0)
        const auto pop = pop_at({{0.0, 0.0}, {4.0, 0.0}, {9.0, 9.0}}, {0.0, 2.0, 3.0});
        const auto w = test_oracles::transform_weights({0.0, 2.0, 3.0});
        const double expect_x = (w[0] * 0.0 + w[1] * 4.0 + w[2] * 9.0) / (w[0] + w[1] + w[2]);
        const auto c = weighted_centroid(pop);
        CHECK(c[0] == doctest::Approx(expect_x).epsilon(1e-12));
        CHECK(c[0] == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(c[1] == doctest::Approx(0.0).epsilon(1e-6));
    }
    SUBCASE("empty population is rejected") {
        Population empty;
        CHECK_THROWS_AS(weighted_centroid(empty), std::invalid_argument);
    }
}

TEST_CASE("gaussian_sample degenerate and moment checks") {
    RngStream rng(5);
    const Vec center{1.0, -2.0};
    CHECK(gaussian_sample(center, 0.0, rng) == center);
    CHECK_THROWS_AS(gaussian_sample(center, -1.0, rng), std::invalid_argument);

    const int n = 100000;
    double sum = 0.0, sum_sq = 0.0, sum_sq2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = gaussian_sample(Vec{0.0}, 1.0, rng)[0];
        sum += x;
        sum_sq += x * x;
        const double y = gaussian_sample(Vec{0.0}, 2.0, rng)[0];
        sum_sq2 += y * y;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / n));
    CHECK(sum_sq2 / sum_sq == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("hypersphere_sample containment and volume uniformity") {
    RngStream rng(6);
    const Vec center{0.5, -0.5};
    CHECK(hypersphere_sample(center, 0.0, rng) == center);
    CHECK_THROWS_AS(hypersphere_sample(center, -0.1, rng), std::invalid_argument);

    const int n = 100000;
    int inside_half = 0;
    for (int i = 0; i < n; ++i) {
        const auto p = hypersphere_sample(center, 1.0, rng);
        const double r = norm(sub(p, center));
        CHECK(r <= 1.0 + 1e-12);
        if (r <= 0.5) ++inside_half;
    }
    // disk area ratio: (1/2)^2
    const double frac = inside_half / static_cast<double>(n);
    CHECK(std::abs(frac - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / n) + 1e-3);
}

TEST_CASE("hypercube_sample containment and edge pinning") {
    RngStream rng(7);
    const Vec center{1.0, 2.0, 3.0};
    CHECK(hypercube_sample(center, 0.0, rng) == center);
    CHECK_THROWS_AS(hypercube_sample(center, -0.1, rng), std::invalid_argument);

    for (int i = 0; i < 2000; ++i) {
        const auto p = hypercube_sample(center, 0.7, rng);
        double max_dev = 0.0;
        for (std::size_t d = 0; d < 3; ++d)
            max_dev = std::max(max_dev, std::abs(p[d] - center[d]));
        CHECK(max_dev <= 0.7 + 1e-12);

        // edge pinning: some coordinate is stored as exactly center +- hw,
        // and no coordinate deviates beyond hw (up to the float round trip)
        const auto q = hypercube_sample(center, 0.7, rng, /*edge_only=*/true);
        bool pinned = false;
        double edge_dev = 0.0;
        for (std::size_t d = 0; d < 3; ++d) {
            pinned = pinned || q[d] == center[d] + 0.7 || q[d] == center[d] - 0.7;
            edge_dev = std::max(edge_dev, std::abs(q[d] - center[d]));
        }
        CHECK(pinned);
        CHECK(edge_dev == doctest::Approx(0.7).epsilon(1e-12));
    }
}

TEST_CASE("spiral_move terminus, fixed point, and monotone contraction") {
    const Vec x{3.0, -1.0, 2.0}, target{0.5, 0.5, 0.5};
    CHECK(spiral_move(x, target, 3.0, 1.0) == target);
    CHECK(spiral_move(target, target, 3.0, 0.3) == target);
    CHECK_THROWS_AS(spiral_move(x, Vec{1.0}, 3.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(spiral_move(x, target, 3.0, 1.5), std::invalid_argument);

    RngStream rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        Vec a(3), b(3);
        for (auto& c : a) c = rng.uniform(-5.0, 5.0);
        for (auto& c : b) c = rng.uniform(-5.0, 5.0);
        const double t1 = rng.uniform(0.0, 0.98);
        const double t2 = rng.uniform(t1 + 0.01, 1.0);
        const double d1 = norm(sub(spiral_move(a, b, 4.0, t1), b));
        const double d2 = norm(sub(spiral_move(a, b, 4.0, t2), b));
        CHECK(d2 < d1 + 1e-12);
    }
}

TEST_CASE("the tail-slope oracle recovers a known Pareto exponent") {
    // inverse-CDF Pareto sample with survival exponent exactly -1.5; the
    // regression helper itself must land close before it judges levy_step
    RngStream rng(77);
    std::vector<double> lengths;
    for (int i = 0; i < 100000; ++i)
        lengths.push_back(std::pow(rng.uniform_pos(), -1.0 / 1.5));
    CHECK(test_oracles::tail_slope(lengths) == doctest::Approx(-1.5).epsilon(0.05));
}

TEST_CASE("levy_step scaling, isotropy, and tail exponent") {
    RngStream guard(1);
    CHECK_THROWS_AS(levy_step(1.0, 2.0, 2, guard), std::invalid_argument);
    CHECK_THROWS_AS(levy_step(1.0, 0.0, 2, guard), std::invalid_argument);
    CHECK_THROWS_AS(levy_step(0.0, 1.5, 2, guard), std::invalid_argument);

    const int n = 100000;
    RngStream rng(9);
    std::vector<double> len1, len2;
    double dir_x = 0.0, dir_y = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto s = levy_step(1.0, 1.5, 2, rng);
        const double l = norm(s);
        len1.push_back(l);
        dir_x += s[0] / l;
        dir_y += s[1] / l;
        len2.push_back(norm(levy_step(2.0, 1.5, 2, rng)));
    }
    // doubling the scale doubles the step lengths stochastically
    CHECK(test_oracles::median_of(len2) / test_oracles::median_of(len1) ==
          doctest::Approx(2.0).epsilon(0.05));
    // directions are isotropic
    CHECK(std::abs(dir_x / n) < 0.01);
    CHECK(std::abs(dir_y / n) < 0.01);
    // survival slope over the tail decade matches -tail_index
    CHECK(test_oracles::tail_slope(len1) == doctest::Approx(-1.5).epsilon(0.2));
}

TEST_CASE("random_walk basics and diffusion scaling") {
    const auto space = SearchSpace::box(2, -1e6, 1e6);
    RngStream rng(10);
    const Vec start{0.0, 0.0};

    const auto trivial = random_walk(start, 0, space, [](RngStream&) { return Vec{1.0, 1.0}; }, rng);
    CHECK(trivial == std::vector<Vec>{start});

    const auto constant =
        random_walk(start, 5, space, [](RngStream&) { return Vec{0.0, 0.0}; }, rng);
    CHECK(constant.size() == 6);
    for (const auto& p : constant) CHECK(p == start);

    const int walks = 200, steps = 400;
    double sq_disp = 0.0, mean_x = 0.0;
    auto gauss = [](RngStream& r) { return Vec{r.normal(), r.normal()}; };
    for (int w = 0; w < walks; ++w) {
        const auto path = random_walk(start, steps, space, gauss, rng);
        CHECK(path.size() == steps + 1);
        sq_disp += norm(path.back()) * norm(path.back());
        mean_x += path.back()[0];
    }
    // RMS displacement of a zero-mean walk grows like sqrt(steps * dims)
    const double rms = std::sqrt(sq_disp / walks);
    CHECK(rms == doctest::Approx(std::sqrt(2.0 * steps)).epsilon(0.15));
    CHECK(std::abs(mean_x / walks) < 3.0 * std::sqrt(static_cast<double>(steps) / walks));
}

TEST_CASE("clamp_to_ball") {
    const Vec center{0.0, 0.0};
    CHECK(clamp_to_ball(Vec{0.3, 0.4}, center, 1.0) == Vec{0.3, 0.4});
    const auto p = clamp_to_ball(Vec{3.0, 4.0}, center, 1.0);
    CHECK(norm(p) == doctest::Approx(1.0));
    CHECK(p[0] == doctest::Approx(0.6));
    CHECK(p[1] == doctest::Approx(0.8));
}

TEST_CASE("inverse_square_weights laws and invariances") {
    auto others_at = [](const std::vector<Vec>& pos, const std::vector<double>& val) {
        std::vector<Candidate> out;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            Candidate c(pos[i]);
            c.value = val[i];
            out.push_back(std::move(c));
        }
        return out;
    };
    const Vec x{0.0, 0.0};

    SUBCASE("equal distance and value give equal weights") {
        const auto w = inverse_square_weights(x, others_at({{1.0, 0.0}, {0.0, 1.0}}, {2.0, 2.0}));
        CHECK(w[0] == doctest::Approx(w[1]));
    }
    SUBCASE("doubling a distance divides that weight by about four") {
        const auto w =
            inverse_square_weights(x, others_at({{1.0, 0.0}, {2.0, 0.0}}, {2.0, 2.0}));
        CHECK(w[0] / w[1] == doctest::Approx(4.0).epsilon(1e-6));
    }
    SUBCASE("coincident points stay finite via the epsilon guard") {
        const auto w = inverse_square_weights(x, others_at({{0.0, 0.0}}, {5.0}));
        CHECK(std::isfinite(w[0]));
        CHECK(w[0] == doctest::Approx(1.0 / 1e-9));  // fitness 1 (zero range) over eps
    }
    SUBCASE("permutation invariance and translation equivariance") {
        const std::vector<Vec> pos{{1.0, 0.5}, {-2.0, 1.0}, {0.3, -0.7}};
        const std::vector<double> val{3.0, 1.0, 2.0};
        const auto w = inverse_square_weights(x, others_at(pos, val));
        const auto w_perm = inverse_square_weights(
            x, others_at({pos[2], pos[0], pos[1]}, {val[2], val[0], val[1]}));
        CHECK(w[0] == doctest::Approx(w_perm[1]));
        CHECK(w[1] == doctest::Approx(w_perm[2]));
        CHECK(w[2] == doctest::Approx(w_perm[0]));

        const Vec shift{10.0, -3.0};
        std::vector<Vec> moved;
        for (const auto& p : pos) moved.push_back(Vec{p[0] + shift[0], p[1] + shift[1]});
        const auto w_shift =
            inverse_square_weights(Vec{shift[0], shift[1]}, others_at(moved, val));
        for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == doctest::Approx(w_shift[i]));
    }
    SUBCASE("empty others rejected") {
        CHECK_THROWS_AS(inverse_square_weights(x, std::vector<Candidate>{}),
                        std::invalid_argument);
    }
}

TEST_CASE("schedule_value endpoints, midpoints, and validation") {
    const auto lin = DecaySchedule::linear(1.0, 0.0);
    CHECK(schedule_value(lin, 0.0, 10.0) == 1.0);
    CHECK(schedule_value(lin, 5.0, 10.0) == doctest::Approx(0.5));
    CHECK(schedule_value(lin, 10.0, 10.0) == 0.0);

    const auto expo = DecaySchedule::exponential(1.0, 0.01);
    CHECK(schedule_value(expo, 0.0, 4.0) == 1.0);
    CHECK(schedule_value(expo, 4.0, 4.0) == 0.01);
    CHECK(schedule_value(expo, 2.0, 4.0) == doctest::Approx(0.1));
    CHECK_THROWS_AS(DecaySchedule::exponential(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DecaySchedule::exponential(-1.0, 1.0), std::invalid_argument);

    const auto pow3 = DecaySchedule::power(2.0, 0.0, 3.0);
    CHECK(schedule_value(pow3, 0.0, 1.0) == 2.0);
    CHECK(schedule_value(pow3, 1.0, 1.0) == 0.0);
    double prev = schedule_value(pow3, 0.0, 1.0);
    for (double t = 0.1; t <= 1.0; t += 0.1) {
        const double v = schedule_value(pow3, t, 1.0);
        CHECK(v <= prev);
        prev = v;
    }
    CHECK_THROWS_AS(schedule_value(lin, 11.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(schedule_value(lin, -1.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(DecaySchedule::power(1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("kmeans structure, trivial cases, and separated blobs") {
    RngStream rng(11);
    SUBCASE("k equals point count: singleton clusters") {
        const std::vector<Vec> pts{{0.0, 0.0}, {5.0, 5.0}, {-3.0, 2.0}};
        const auto clusters = kmeans(pts, 3, rng);
        CHECK(wcss(pts, clusters) == doctest::Approx(0.0));
        std::size_t total = 0;
        for (const auto& c : clusters) total += c.members.size();
        CHECK(total == 3);
    }
    SUBCASE("k = 1: centroid is the global mean") {
        const std::vector<Vec> pts{{0.0, 0.0}, {2.0, 4.0}, {4.0, 2.0}};
        const auto clusters = kmeans(pts, 1, rng);
        CHECK(clusters.size() == 1);
        CHECK(clusters[0].centroid[0] == doctest::Approx(2.0));
        CHECK(clusters[0].centroid[1] == doctest::Approx(2.0));
    }
    SUBCASE("two well-separated blobs split cleanly") {
        std::vector<Vec> pts;
        for (int i = 0; i < 12; ++i)
            pts.push_back(Vec{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
        for (int i = 0; i < 12; ++i)
            pts.push_back(Vec{20.0 + rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
        const auto clusters = kmeans(pts, 2, rng);
        for (const auto& c : clusters) {
            REQUIRE(!c.members.empty());
            const bool left = pts[c.members.front()][0] < 10.0;
            for (std::size_t idx : c.members) CHECK((pts[idx][0] < 10.0) == left);
        }
    }
    SUBCASE("points sit with their nearest centroid at convergence") {
        std::vector<Vec> pts;
        for (int i = 0; i < 20; ++i) pts.push_back(Vec{rng.uniform(-5, 5), rng.uniform(-5, 5)});
        const auto clusters = kmeans(pts, 4, rng);
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            for (std::size_t idx : clusters[c].members) {
                const double own = norm(sub(pts[idx], clusters[c].centroid));
                for (const auto& other : clusters)
                    if (!other.members.empty())
                        CHECK(own <= norm(sub(pts[idx], other.centroid)) + 1e-9);
            }
        }
    }
    SUBCASE("invalid k rejected") {
        const std::vector<Vec> pts{{0.0, 0.0}};
        CHECK_THROWS_AS(kmeans(pts, 2, rng), std::invalid_argument);
        CHECK_THROWS_AS(kmeans(pts, 0, rng), std::invalid_argument);
    }
}

TEST_CASE("kmeans reaches the brute-force optimum within 5 percent") {
    RngStream rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5 + rng.index(3);  // 5..7 points
        const std::size_t k = 2 + rng.index(2);  // 2..3 clusters
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back(Vec{rng.uniform(-5, 5), rng.uniform(-5, 5)});
        const double got = wcss(pts, kmeans(pts, k, rng));
        const double opt = test_oracles::brute_force_wcss(pts, k);
        CHECK(got <= 1.05 * opt + 1e-9);
    }
}

TEST_CASE("greedy_accept keeps the better candidate, incumbent on ties") {
    Candidate old_c(Vec{0.0});
    old_c.value = 3.0;
    Candidate new_c(Vec{1.0});
    new_c.value = 2.0;
    CHECK(greedy_accept(old_c, new_c).val() == 2.0);
    old_c.value = 2.0;
    new_c.value = 3.0;
    CHECK(greedy_accept(old_c, new_c).position == Vec{0.0});
    new_c.value = 2.0;
    CHECK(greedy_accept(old_c, new_c).position == Vec{0.0});
    Candidate raw(Vec{0.0});
    CHECK_THROWS_AS(greedy_accept(old_c, raw), std::invalid_argument);
}

TEST_CASE("probabilistic_accept degenerate params and Bernoulli frequency") {
    RngStream rng(13);
    Candidate old_c(Vec{0.0});
    old_c.value = 1.0;
    Candidate worse(Vec{1.0});
    worse.value = 2.0;
    Candidate better(Vec{2.0});
    better.value = 0.5;

    for (int i = 0; i < 200; ++i) {
        CHECK(probabilistic_accept(old_c, worse, 0.0, rng).val() == 1.0);
        CHECK(probabilistic_accept(old_c, worse, 1.0, rng).val() == 2.0);
        CHECK(probabilistic_accept(old_c, better, 0.0, rng).val() == 0.5);
    }
    int accepted = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i)
        if (probabilistic_accept(old_c, worse, 0.3, rng).val() == 2.0) ++accepted;
    CHECK(std::abs(accepted / static_cast<double>(n) - 0.3) < 0.02);
    CHECK_THROWS_AS(probabilistic_accept(old_c, worse, 1.5, rng), std::invalid_argument);
    CHECK_THROWS_AS(probabilistic_accept(old_c, worse, -0.1, rng), std::invalid_argument);
}

TEST_CASE("probabilistic_accept at 0 equals greedy_accept on any sequence") {
    RngStream rng(14);
    for (int i = 0; i < 500; ++i) {
        Candidate a(Vec{rng.uniform(-1, 1)});
        a.value = rng.uniform(-10, 10);
        Candidate b(Vec{rng.uniform(-1, 1)});
        b.value = rng.uniform(-10, 10);
        const auto greedy = greedy_accept(a, b);
        const auto prob = probabilistic_accept(a, b, 0.0, rng);
        CHECK(greedy.val() == prob.val());
        CHECK(greedy.position == prob.position);
    }
}

TEST_CASE("recombine containment, identical parents, and mask frequency") {
    RngStream rng(15);
    const Vec a{1.0, 2.0, 3.0}, b{-1.0, -2.0, -3.0};
    CHECK(recombine(a, a, rng) == a);
    CHECK_THROWS_AS(recombine(a, Vec{1.0}, rng), std::invalid_argument);

    int from_a = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const auto child = recombine(a, b, rng);
        for (std::size_t d = 0; d < a.size(); ++d)
            CHECK((child[d] == a[d] || child[d] == b[d]));
        if (child[0] == a[0]) ++from_a;
    }
    CHECK(std::abs(from_a / static_cast<double>(n) - 0.5) < 0.02);
}

TEST_CASE("restart determinism and uniformity") {
    const auto space = SearchSpace::box(3, -2.0, 6.0);
    RngStream r1(16), r2(16);
    const auto c1 = restart(space, r1);
    const auto c2 = restart(space, r2);
    CHECK(c1.position == c2.position);
    CHECK_FALSE(c1.evaluated());

    RngStream rng(17);
    const int n = 20000;
    Vec mean(3, 0.0);
    for (int i = 0; i < n; ++i) {
        const auto c = restart(space, rng);
        for (std::size_t d = 0; d < 3; ++d) {
            CHECK(c.position[d] >= -2.0);
            CHECK(c.position[d] <= 6.0);
            mean[d] += c.position[d];
        }
    }
    const double tol = 3.0 * (8.0 / std::sqrt(12.0)) / std::sqrt(static_cast<double>(n));
    for (std::size_t d = 0; d < 3; ++d) CHECK(std::abs(mean[d] / n - 2.0) < tol);
}

TEST_CASE("velocity_update identities and hand-unrolled oracle") {
    RngStream rng(18);
    const Vec v{0.5, -0.5}, x{1.0, 1.0};

    CHECK(velocity_update(v, x, x, x, 1.0, 1.4, 1.4, rng) == v);
    CHECK(velocity_update(v, x, x, x, 0.0, 0.0, 0.0, rng) == Vec{0.0, 0.0});
    CHECK_THROWS_AS(velocity_update(v, Vec{1.0}, x, x, 1.0, 1.0, 1.0, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(velocity_update(v, x, x, x, -1.0, 1.0, 1.0, rng), std::invalid_argument);

    // replay the documented draw order (r1 vector then r2 vector) by hand
    const Vec pbest{2.0, 0.0}, ibest{0.0, 3.0};
    RngStream hand(99);
    Vec r1{hand.uniform01(), hand.uniform01()};
    Vec r2{hand.uniform01(), hand.uniform01()};
    Vec expected(2);
    for (std::size_t d = 0; d < 2; ++d)
        expected[d] = 0.7 * v[d] + 1.4 * r1[d] * (pbest[d] - x[d]) +
                      1.4 * r2[d] * (ibest[d] - x[d]);
    RngStream fresh(99);
    CHECK(velocity_update(v, x, pbest, ibest, 0.7, 1.4, 1.4, fresh) == expected);
}

TEST_CASE("fitness_weights favor better values and handle flat populations") {
    const auto w = fitness_weights(std::vector<double>{1.0, 3.0, 2.0});
    CHECK(w[0] > w[2]);
    CHECK(w[2] > w[1]);
    for (double x : w) CHECK(x > 0.0);
    const auto flat = fitness_weights(std::vector<double>{2.0, 2.0});
    CHECK(flat[0] == flat[1]);
}

TEST_SUITE_END();
