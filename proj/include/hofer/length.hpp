#pragma once

#include <functional>

#include "hofer/extremize.hpp"
#include "hofer/hamiltonian.hpp"

namespace hofer {

// Composite Simpson over [0,1]; nodes must be odd (even panel count).
template <typename Fn>
double simpson01(Fn&& f, int nodes) {
    if (nodes < 3 || nodes % 2 == 0)
        throw std::invalid_argument("simpson01: node count must be odd and >= 3");
    const int m = nodes - 1;
    const double h = 1.0 / m;
    double acc = f(0.0) + f(1.0);
    for (int i = 1; i < m; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// A loop in the Hamiltonian group presented by its generator on [0,1],
// measured over a model domain.  `chain_at` optionally realizes the loop's
// time-t map as a chain of primitives, when the construction provides one.
struct LoopGenerator {
    HamPtr generator;
    EllipsoidModel domain;
    std::function<SymplecticMapChain(double)> chain_at;
    std::string label;
};

struct HoferReport {
    double ell_plus = 0.0;
    double ell_minus = 0.0;
    double total = 0.0;
    double quad_error = 0.0;
};

// Hofer length over the model domain.  The compact-manifold normalization
// (mean zero) is undefined here, so both parts are measured against the
// fixed reference h_ref = sup of the undeformed momentum map over the
// closed domain (= h_max):
//   ell_plus  = int ( sup_D H_t - h_ref ) dt
//   ell_minus = int ( h_ref - inf_D H_t ) dt
// so total = int (sup - inf) dt, and differences of ell_plus between a
// deformed loop and the original action are reference-independent (every
// deformation built here agrees with the momentum map off a compact set).
inline HoferReport hofer_length(const LoopGenerator& loop, int t_nodes,
                                const ExtremizerConfig& cfg = {}) {
    if (t_nodes < 3 || t_nodes % 2 == 0)
        throw std::invalid_argument("hofer_length: tNodes must be odd and >= 3");
    const double h_ref = loop.domain.h_max;

    const int fine = 2 * t_nodes - 1;
    std::vector<double> maxs(fine), mins(fine);
    for (int i = 0; i < fine; ++i) {
        double t = double(i) / (fine - 1);
        maxs[i] = extremize(*loop.generator, t, loop.domain, true, cfg);
        mins[i] = extremize(*loop.generator, t, loop.domain, false, cfg);
        if (!std::isfinite(maxs[i]) || !std::isfinite(mins[i]))
            throw std::runtime_error("hofer_length: extremizer returned non-finite value");
    }
    auto simpson_of = [](const std::vector<double>& v, int stride) {
        const int m = (int(v.size()) - 1) / stride;
        const double h = 1.0 / m;
        double acc = v.front() + v.back();
        for (int i = 1; i < m; ++i) acc += v[i * stride] * (i % 2 ? 4.0 : 2.0);
        return acc * h / 3.0;
    };
    double plus_fine = simpson_of(maxs, 1) - h_ref;
    double plus_coarse = simpson_of(maxs, 2) - h_ref;
    double minus_fine = h_ref - simpson_of(mins, 1);
    double minus_coarse = h_ref - simpson_of(mins, 2);

    HoferReport r;
    r.ell_plus = plus_fine;
    r.ell_minus = minus_fine;
    r.total = r.ell_plus + r.ell_minus;
    r.quad_error = (std::abs(plus_fine - plus_coarse) + std::abs(minus_fine - minus_coarse)) / 15.0;
    return r;
}

// Max over random domain samples of |p - (time-1 flow of the generator)(p)|.
inline double verify_loop_closure(const LoopGenerator& loop, int samples, int steps,
                                  std::uint64_t seed = 12345) {
    std::mt19937_64 rng(seed);
    FlowConfig cfg(steps);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        PhasePoint p = sample_in_model(loop.domain, rng);
        PhasePoint q = integrate_flow(*loop.generator, 0.0, 1.0, p, cfg);
        worst = std::max(worst, distance(p, q));
    }
    return worst;
}

// Same check through the loop's chain realization (exact where the chain is
// exact; integrator-limited otherwise).
inline double chain_closure_residual(const LoopGenerator& loop, int samples,
                                     std::uint64_t seed = 12345) {
    if (!loop.chain_at) throw std::logic_error("chain_closure_residual: no chain realization");
    std::mt19937_64 rng(seed);
    SymplecticMapChain time1 = loop.chain_at(1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        PhasePoint p = sample_in_model(loop.domain, rng);
        worst = std::max(worst, distance(p, time1.apply(p)));
    }
    return worst;
}

}  // namespace hofer
