#pragma once

#include <cstdint>
#include <vector>

#include "hofer/hamiltonian.hpp"
#include "hofer/phase.hpp"

namespace hofer {

struct ExtremizerConfig {
    int grid = 201;          // per-axis resolution of the fallback grid
    int refine_steps = 20;   // coordinate-descent iterations after the grid pass
    int candidates = 8;      // grid cells kept for refinement
    std::uint64_t seed = 12345;

    void validate() const {
        if (grid < 3) throw std::invalid_argument("ExtremizerConfig: grid < 3");
        if (refine_steps < 0) throw std::invalid_argument("ExtremizerConfig: refine_steps < 0");
    }
};

struct ExtremumResult {
    double value = 0.0;
    PhasePoint arg;
};

namespace detail {

template <typename Fn>
ExtremumResult refine_coordinate_descent(Fn&& f, const EllipsoidModel& model, PhasePoint p,
                                         double v0, double step0, bool maximize, int iters) {
    double best = v0;
    double step = step0;
    const std::size_t m = p.c.size();
    for (int it = 0; it < iters; ++it) {
        bool improved = false;
        for (std::size_t i = 0; i < m; ++i) {
            for (double sgn : {+1.0, -1.0}) {
                PhasePoint q = p;
                q.c[i] += sgn * step;
                if (!model.contains(q)) continue;
                double v = f(q);
                if (maximize ? v > best : v < best) {
                    best = v;
                    p = q;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.6;
    }
    return {best, p};
}

}  // namespace detail

// Uniform grid over the model's bounding box (inside the closed domain),
// keeping the best cells, then coordinate descent around each.
template <typename Fn>
ExtremumResult grid_extremize(Fn&& f, const EllipsoidModel& model, bool maximize,
                              const ExtremizerConfig& cfg) {
    cfg.validate();
    const std::size_t dims = 2 * model.n();
    const std::size_t G = static_cast<std::size_t>(cfg.grid);
    double total = 1.0;
    for (std::size_t d = 0; d < dims; ++d) total *= double(G);
    if (total > 5e7)
        throw std::invalid_argument(
            "grid_extremize: grid too large for this dimension; lower --grid or use a "
            "structured generator");

    std::vector<double> radius(model.n());
    for (std::size_t j = 0; j < model.n(); ++j) radius[j] = model.coord_radius(j);

    struct Cand {
        double v;
        PhasePoint p;
    };
    std::vector<Cand> cands;

    std::vector<std::size_t> idx(dims, 0);
    PhasePoint p(model.n());
    const double sign = maximize ? 1.0 : -1.0;
    bool done = false;
    while (!done) {
        for (std::size_t d = 0; d < dims; ++d) {
            double r = radius[d / 2];
            p.c[d] = -r + 2.0 * r * double(idx[d]) / double(G - 1);
        }
        if (model.contains(p)) {
            double v = f(p);
            if (!std::isfinite(v)) throw std::runtime_error("grid_extremize: non-finite value");
            if (cands.size() < static_cast<std::size_t>(cfg.candidates)) {
                cands.push_back({v, p});
            } else {
                std::size_t worst = 0;
                for (std::size_t i = 1; i < cands.size(); ++i)
                    if (sign * cands[i].v < sign * cands[worst].v) worst = i;
                if (sign * v > sign * cands[worst].v) cands[worst] = {v, p};
            }
        }
        // odometer
        std::size_t d = 0;
        while (d < dims && ++idx[d] == G) {
            idx[d] = 0;
            ++d;
        }
        done = (d == dims);
    }
    if (cands.empty()) throw std::runtime_error("grid_extremize: empty domain");

    double cell = 0.0;
    for (std::size_t j = 0; j < model.n(); ++j)
        cell = std::max(cell, 2.0 * radius[j] / double(G - 1));

    ExtremumResult best{cands[0].v, cands[0].p};
    for (const auto& c : cands) {
        auto r = detail::refine_coordinate_descent(f, model, c.p, c.v, cell, maximize,
                                                   cfg.refine_steps);
        if (maximize ? r.value > best.value : r.value < best.value) best = r;
    }
    return best;
}

// Extremum of H(t, .) over the closed model domain: structured closed form
// when the generator provides one, grid + refinement otherwise.
inline double extremize(const Hamiltonian& H, double t, const EllipsoidModel& model,
                        bool maximize, const ExtremizerConfig& cfg) {
    if (auto v = H.extremum(t, model, maximize, cfg)) return *v;
    return grid_extremize([&](const PhasePoint& p) { return H.value(t, p); }, model, maximize,
                          cfg)
        .value;
}

}  // namespace hofer
