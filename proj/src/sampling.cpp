#include "hg/sampling.hpp"

#include <cmath>
#include <list>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "hg/rng.hpp"

namespace hg {

namespace {

// Korányi norm of a raw coordinate block (x.., y.., t) without allocating.
double norm_of(const std::vector<double>& c, int n) {
    double zz = 0.0;
    for (int j = 0; j < 2 * n; ++j) zz += c[j] * c[j];
    return std::pow(zz * zz + c[2 * n] * c[2 * n], 0.25);
}

std::vector<WeightedNode> unit_ball_nodes_mc(int n, int draws, std::uint64_t seed,
                                             std::uint64_t ball_index) {
    // Rejection from [-1,1]^{2n} x [-1,1]; box volume 2^{2n+1}.
    const double box_vol = std::pow(2.0, 2 * n + 1);
    const double w = box_vol / draws;
    std::vector<WeightedNode> out;
    out.reserve(static_cast<std::size_t>(draws * 0.35));
    std::vector<double> c(2 * n + 1);
    for (int i = 0; i < draws; ++i) {
        Rng rng = Rng::stream(seed, ball_index, static_cast<std::uint64_t>(i));
        for (auto& a : c) a = rng.uniform(-1.0, 1.0);
        if (norm_of(c, n) < 1.0) {
            WeightedNode node;
            node.point.c = c;
            node.weight = w;
            out.push_back(std::move(node));
        }
    }
    return out;
}

std::vector<WeightedNode> unit_ball_nodes_grid(int n, int per_axis) {
    // Cell-center indicator with 4x subdivision of boundary cells.
    const int d = 2 * n + 1;
    const double h = 2.0 / per_axis;
    const double cell_vol = std::pow(h, d);
    std::vector<WeightedNode> out;
    std::vector<int> idx(d, 0);
    std::vector<double> c(d), corner(d);
    const int sub = 4;
    std::vector<int> sidx(d, 0);
    for (;;) {
        for (int k = 0; k < d; ++k) c[k] = -1.0 + (idx[k] + 0.5) * h;
        // Classify cell by corners: all-in, all-out, or boundary.
        int corners_in = 0;
        const int ncorner = 1 << d;
        for (int m = 0; m < ncorner; ++m) {
            for (int k = 0; k < d; ++k) corner[k] = c[k] + (((m >> k) & 1) ? 0.5 : -0.5) * h;
            if (norm_of(corner, n) < 1.0) ++corners_in;
        }
        if (corners_in == ncorner) {
            WeightedNode node;
            node.point.c = c;
            node.weight = cell_vol;
            out.push_back(std::move(node));
        } else if (corners_in > 0) {
            // Boundary cell: weight by the fraction of sub-cell centers inside,
            // and place the node at their centroid so it stays in the ball.
            const double hs = h / sub;
            int inside = 0;
            std::vector<double> centroid(d, 0.0);
            std::fill(sidx.begin(), sidx.end(), 0);
            for (;;) {
                for (int k = 0; k < d; ++k) corner[k] = c[k] - 0.5 * h + (sidx[k] + 0.5) * hs;
                if (norm_of(corner, n) < 1.0) {
                    ++inside;
                    for (int k = 0; k < d; ++k) centroid[k] += corner[k];
                }
                int k = 0;
                while (k < d && ++sidx[k] == sub) sidx[k++] = 0;
                if (k == d) break;
            }
            if (inside > 0) {
                for (auto& a : centroid) a /= inside;
                WeightedNode node;
                node.point.c = centroid;
                node.weight = cell_vol * inside / std::pow(sub, d);
                out.push_back(std::move(node));
            }
        }
        int k = 0;
        while (k < d && ++idx[k] == per_axis) idx[k++] = 0;
        if (k == d) break;
    }
    return out;
}

}  // namespace

namespace {

// Unit-ball node sets are deterministic in (method, resolution, seed, ball
// index), and callers like the critical-radius solver reuse one set across
// hundreds of radii. Small keyed cache, cleared wholesale when it grows.
const std::vector<WeightedNode>& unit_ball_nodes_cached(int n, const QuadratureSpec& spec,
                                                        std::uint64_t ball_index) {
    using Key = std::tuple<int, int, int, std::uint64_t, std::uint64_t>;
    static std::map<Key, std::vector<WeightedNode>> cache;
    static std::mutex mtx;
    Key key{n, static_cast<int>(spec.method), spec.resolution, spec.seed, ball_index};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (cache.size() > 64) cache.clear();
        auto nodes = spec.method == QuadratureSpec::Method::MonteCarlo
                         ? unit_ball_nodes_mc(n, spec.resolution, spec.seed, ball_index)
                         : unit_ball_nodes_grid(n, spec.resolution);
        it = cache.emplace(key, std::move(nodes)).first;
    }
    return it->second;
}

}  // namespace

std::vector<WeightedNode> sample_ball(const Ball& b, const QuadratureSpec& spec,
                                      std::uint64_t ball_index) {
    const int n = b.center.dim_n();
    if (!(b.radius > 0.0)) throw std::invalid_argument("sample_ball: degenerate radius");
    if (spec.resolution < 2) throw std::invalid_argument("sample_ball: resolution too small");

    std::vector<WeightedNode> nodes = unit_ball_nodes_cached(n, spec, ball_index);

    const double rq = std::pow(b.radius, 2 * n + 2);
    for (auto& node : nodes) {
        node.point = multiply(b.center, dilate(b.radius, node.point));
        node.weight *= rq;
    }
    return nodes;
}

std::pair<double, double> unit_ball_volume_mc(const GroupParams& p, std::int64_t draws,
                                              std::uint64_t seed) {
    const int n = p.n;
    const double box_vol = std::pow(2.0, 2 * n + 1);
    std::int64_t hits = 0;
    std::vector<double> c(2 * n + 1);
    Rng rng = Rng::stream(seed, 0xba11, 0);
    for (std::int64_t i = 0; i < draws; ++i) {
        for (auto& a : c) a = rng.uniform(-1.0, 1.0);
        if (norm_of(c, n) < 1.0) ++hits;
    }
    const double phat = static_cast<double>(hits) / draws;
    const double se = box_vol * std::sqrt(phat * (1.0 - phat) / draws);
    return {box_vol * phat, se};
}

}  // namespace hg
