#pragma once

#include "hofer/variants.hpp"

namespace hofer {

// Generator of the conjugated isotopy b psi_t b^{-1}: H_t o b^{-1}.
// Exact chains with quadratic-affine H stay in closed form.
inline HamPtr conjugate(HamPtr H, const SymplecticMapChain& b) {
    return std::make_shared<PullbackHam>(std::move(H), b.inverse());
}

// Generator of { psi^K_t o psi^F_t }: K_t + F_t o (psi^K_t)^{-1}.
// `flow_of_K(t)` must be the time-t flow of K.
inline HamPtr compose_generators(HamPtr K, HamPtr F,
                                 std::function<SymplecticMapChain(double)> flow_of_K) {
    auto pulled = std::make_shared<TimeChainPullbackHam>(
        std::move(F),
        [fn = std::move(flow_of_K)](double t) { return fn(t).inverse(); });
    return std::make_shared<SumHam>(std::vector<HamPtr>{std::move(K), pulled});
}

// Generator of the reparametrized isotopy psi_{t(tau)}: H_{t(tau)} * dt/dtau.
inline HamPtr reparametrize(HamPtr H, std::function<double(double)> time_map,
                            std::function<double(double)> time_map_derivative) {
    return std::make_shared<ReparamHam>(std::move(H), std::move(time_map),
                                        std::move(time_map_derivative));
}

}  // namespace hofer
