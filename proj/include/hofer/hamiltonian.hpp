#pragma once

#include <memory>
#include <optional>
#include <stdexcept>

#include "hofer/phase.hpp"

namespace hofer {

struct QuadSlice;          // quadratic.hpp
struct EllipsoidModel;     // phase.hpp
struct ExtremizerConfig;   // extremize.hpp

// A time-dependent Hamiltonian H(t, z) on C^n.  Structured subclasses
// override field/quad_slice/extremum to unlock closed-form paths; the
// defaults fall back to finite differences and grid search.
class Hamiltonian {
  public:
    virtual ~Hamiltonian() = default;

    virtual double value(double t, const PhasePoint& p) const = 0;

    // Hamiltonian vector field for omega_0 = sum dx^dy under the convention
    // dH = -i(X)omega, anchored so that H = -pi|z|^2 flows as z -> e^{-2 pi i t} z:
    //   xdot_j = -dH/dy_j,   ydot_j = +dH/dx_j.
    // Default: central differences of value().
    virtual void field(double t, const PhasePoint& p, std::vector<double>& out) const {
        fd_field(t, p, out);
    }

    // Closed-form coefficient slice at time t, when the Hamiltonian is
    // quadratic-affine in z (diagonal quadratic part).
    virtual std::optional<QuadSlice> quad_slice(double /*t*/) const { return std::nullopt; }

    // Closed-form / cached extremum of H(t, .) over the closed model domain.
    virtual std::optional<double> extremum(double /*t*/, const EllipsoidModel& /*model*/,
                                           bool /*maximize*/,
                                           const ExtremizerConfig& /*cfg*/) const {
        return std::nullopt;
    }

    void fd_field(double t, const PhasePoint& p, std::vector<double>& out,
                  double h_rel = 1e-6) const {
        const std::size_t n = p.n();
        out.assign(2 * n, 0.0);
        PhasePoint q = p;
        for (std::size_t j = 0; j < n; ++j) {
            for (int comp = 0; comp < 2; ++comp) {
                std::size_t idx = 2 * j + comp;
                double h = h_rel * std::max(1.0, std::abs(p.c[idx]));
                double saved = q.c[idx];
                q.c[idx] = saved + h;
                double fp = value(t, q);
                q.c[idx] = saved - h;
                double fm = value(t, q);
                q.c[idx] = saved;
                double d = (fp - fm) / (2.0 * h);
                if (!std::isfinite(d))
                    throw std::runtime_error("Hamiltonian: non-finite derivative");
                if (comp == 0)
                    out[2 * j + 1] += d;   // ydot += dH/dx
                else
                    out[2 * j] -= d;       // xdot -= dH/dy
            }
        }
    }
};

using HamPtr = std::shared_ptr<const Hamiltonian>;

// Free-function form of the vector field (module-level operation).
inline std::vector<double> hamiltonian_vector_field(const Hamiltonian& H, double t,
                                                    const PhasePoint& p) {
    std::vector<double> out;
    H.field(t, p, out);
    for (double v : out)
        if (!std::isfinite(v))
            throw std::runtime_error("hamiltonian_vector_field: non-finite derivative");
    return out;
}

struct FlowConfig {
    enum class Method { RK4, ImplicitMidpoint };
    Method method = Method::RK4;
    int steps = 1000;
    double symplectic_tol = 1e-5;

    FlowConfig() = default;
    FlowConfig(Method m, int s) : method(m), steps(s) { validate(); }
    explicit FlowConfig(int s) : steps(s) { validate(); }
    void validate() const {
        if (steps < 1) throw std::invalid_argument("FlowConfig: steps must be >= 1");
        if (!(symplectic_tol > 0)) throw std::invalid_argument("FlowConfig: tolerance <= 0");
    }
};

struct FlowBlowup : std::runtime_error {
    double t_fail;
    explicit FlowBlowup(double t)
        : std::runtime_error("integrate_flow: non-finite state at t = " + std::to_string(t)),
          t_fail(t) {}
};

namespace detail {

inline void rk4_step(const Hamiltonian& H, double t, double h, PhasePoint& p,
                     std::vector<double>& k1, std::vector<double>& k2,
                     std::vector<double>& k3, std::vector<double>& k4,
                     PhasePoint& tmp) {
    const std::size_t m = p.c.size();
    H.field(t, p, k1);
    tmp.c.resize(m);
    for (std::size_t i = 0; i < m; ++i) tmp.c[i] = p.c[i] + 0.5 * h * k1[i];
    H.field(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < m; ++i) tmp.c[i] = p.c[i] + 0.5 * h * k2[i];
    H.field(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < m; ++i) tmp.c[i] = p.c[i] + h * k3[i];
    H.field(t + h, tmp, k4);
    for (std::size_t i = 0; i < m; ++i)
        p.c[i] += (h / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
}

inline void midpoint_step(const Hamiltonian& H, double t, double h, PhasePoint& p,
                          std::vector<double>& k, PhasePoint& mid) {
    const std::size_t m = p.c.size();
    mid = p;
    PhasePoint next = p;
    for (int iter = 0; iter < 12; ++iter) {
        for (std::size_t i = 0; i < m; ++i) mid.c[i] = 0.5 * (p.c[i] + next.c[i]);
        H.field(t + 0.5 * h, mid, k);
        double delta = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double v = p.c[i] + h * k[i];
            delta = std::max(delta, std::abs(v - next.c[i]));
            next.c[i] = v;
        }
        if (delta < 1e-14) break;
    }
    p = next;
}

}  // namespace detail

// Time-t1 image of p under the flow of H started at t0.  Fixed step;
// h < 0 (t1 < t0) integrates backwards.
inline PhasePoint integrate_flow(const Hamiltonian& H, double t0, double t1,
                                 const PhasePoint& p0, const FlowConfig& cfg = {}) {
    cfg.validate();
    PhasePoint p = p0;
    if (t0 == t1) return p;
    const double h = (t1 - t0) / cfg.steps;
    std::vector<double> k1, k2, k3, k4;
    PhasePoint tmp;
    for (int s = 0; s < cfg.steps; ++s) {
        double t = t0 + s * h;
        if (cfg.method == FlowConfig::Method::RK4)
            detail::rk4_step(H, t, h, p, k1, k2, k3, k4, tmp);
        else
            detail::midpoint_step(H, t, h, p, k1, tmp);
        if (!p.finite()) throw FlowBlowup(t + h);
    }
    return p;
}

}  // namespace hofer
