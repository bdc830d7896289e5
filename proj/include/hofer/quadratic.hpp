#pragma once

#include <functional>
#include <optional>

#include "hofer/chain.hpp"
#include "hofer/phase.hpp"

namespace hofer {

// Coefficients of a quadratic-affine function of z at a fixed time:
//   value(z) = c + sum_j q_j * pi * |z_j|^2 + sum_j 2 Re(conj(l_j) * z_j).
// The quadratic part is a real diagonal form; this family is closed under
// pullback by rotations and translations, which is what makes the explicit
// loop computations finish in closed form.
struct QuadSlice {
    double c = 0.0;
    std::vector<double> q;
    std::vector<Complex> l;

    QuadSlice() = default;
    explicit QuadSlice(std::size_t n) : q(n, 0.0), l(n, Complex{0, 0}) {}
    std::size_t n() const { return q.size(); }

    double value(const PhasePoint& p) const {
        if (p.n() != n()) throw std::invalid_argument("QuadSlice: dimension mismatch");
        double v = c;
        for (std::size_t j = 0; j < n(); ++j) {
            v += q[j] * p.action(j);
            v += 2.0 * (l[j].real() * p.x(j) + l[j].imag() * p.y(j));
        }
        return v;
    }

    QuadSlice& operator+=(const QuadSlice& o) {
        if (o.n() != n()) throw std::invalid_argument("QuadSlice: dimension mismatch");
        c += o.c;
        for (std::size_t j = 0; j < n(); ++j) {
            q[j] += o.q[j];
            l[j] += o.l[j];
        }
        return *this;
    }
    QuadSlice scaled(double s) const {
        QuadSlice r = *this;
        r.c *= s;
        for (auto& v : r.q) v *= s;
        for (auto& v : r.l) v *= s;
        return r;
    }
};

// Slice of value(chain(.)) for an exact chain (rotations/translations only).
// Composition order: for a chain [P1, ..., Pm] applied left-to-right,
// value(chain(z)) pulls through Pm first.
inline QuadSlice pull_through_exact(QuadSlice s, const SymplecticMapChain& chain) {
    const auto& prims = chain.primitives();
    for (auto it = prims.rbegin(); it != prims.rend(); ++it) {
        if (const auto* r = std::get_if<Rotation>(&*it)) {
            if (r->coord >= s.n()) throw std::invalid_argument("pull_through: coord range");
            double th = kTwoPi * r->speed * r->time;
            // map z -> e^{-i th} z: new l = l * e^{+i th}.
            s.l[r->coord] *= Complex{std::cos(th), std::sin(th)};
        } else if (const auto* tr = std::get_if<Translation>(&*it)) {
            if (tr->coord >= s.n()) throw std::invalid_argument("pull_through: coord range");
            std::size_t j = tr->coord;
            const Complex lam = tr->offset;
            s.c += s.q[j] * kPi * std::norm(lam) +
                   2.0 * (s.l[j].real() * lam.real() + s.l[j].imag() * lam.imag());
            s.l[j] += s.q[j] * kPi * lam;
        } else {
            throw std::logic_error("pull_through_exact: chain has integrated flows");
        }
    }
    return s;
}

// Interior critical point of the slice (all q_j != 0): z_j* = -l_j / (q_j pi).
inline PhasePoint quad_critical_point(const QuadSlice& s) {
    PhasePoint p(s.n());
    for (std::size_t j = 0; j < s.n(); ++j) {
        if (s.q[j] == 0.0)
            throw std::invalid_argument("quad_critical_point: degenerate coordinate");
        p.set_z(j, -s.l[j] / (s.q[j] * kPi));
    }
    return p;
}

namespace detail {

// max over the closed model of the slice when all q_j < 0 (strictly concave):
// interior critical point if feasible, otherwise KKT with a single multiplier
// found by bisection.
inline std::optional<double> quad_max_concave(const QuadSlice& s, const EllipsoidModel& model) {
    for (double qj : s.q)
        if (!(qj < 0.0)) return std::nullopt;
    PhasePoint crit = quad_critical_point(s);
    if (model.weighted_norm(crit) <= model.alpha) return s.value(crit);

    const auto& k = model.weights.k;
    // z_j(mu) = l_j / ((mu k_j - q_j) pi); constraint g(mu) decreasing in mu.
    auto g = [&](double mu) {
        double acc = 0.0;
        for (std::size_t j = 0; j < s.n(); ++j) {
            double denom = (mu * k[j] - s.q[j]) * kPi;
            acc += k[j] * kPi * std::norm(s.l[j] / denom);
        }
        return acc;
    };
    double lo = 0.0, hi = 1.0;
    while (g(hi) > model.alpha) {
        hi *= 2.0;
        if (hi > 1e18) return std::nullopt;
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (g(mid) > model.alpha ? lo : hi) = mid;
    }
    double mu = 0.5 * (lo + hi);
    PhasePoint p(s.n());
    for (std::size_t j = 0; j < s.n(); ++j)
        p.set_z(j, s.l[j] / ((mu * k[j] - s.q[j]) * kPi));
    return s.value(p);
}

// Pure quadratic (all l_j = 0): extremum of a linear function of the action
// variables over the simplex { sum k_j u_j <= alpha, u >= 0 }.
inline std::optional<double> quad_extremum_pure(const QuadSlice& s, const EllipsoidModel& model,
                                                bool maximize) {
    for (const Complex& lj : s.l)
        if (std::norm(lj) != 0.0) return std::nullopt;
    double best = 0.0;
    for (std::size_t j = 0; j < s.n(); ++j) {
        double v = s.q[j] * model.alpha / model.weights.k[j];
        best = maximize ? std::max(best, v) : std::min(best, v);
    }
    return s.c + best;
}

// One complex coordinate: reduce to the action variable u = pi|z|^2 with the
// phase chosen extremal, then scan + refine the 1-D profile on [0, alpha/k].
inline double quad_extremum_1d(const QuadSlice& s, const EllipsoidModel& model, bool maximize) {
    const double umax = model.alpha / model.weights.k[0];
    const double a = std::abs(s.l[0]);
    auto profile = [&](double u) {
        double lin = 2.0 * a * std::sqrt(u / kPi);
        return s.c + s.q[0] * u + (maximize ? lin : -lin);
    };
    const int G = 2048;
    double bestu = 0.0, bestv = profile(0.0);
    for (int i = 1; i <= G; ++i) {
        double u = umax * i / G;
        double v = profile(u);
        if (maximize ? v > bestv : v < bestv) {
            bestv = v;
            bestu = u;
        }
    }
    double step = umax / G;
    for (int it = 0; it < 60; ++it) {
        for (double cand : {bestu - step, bestu + step}) {
            if (cand < 0.0 || cand > umax) continue;
            double v = profile(cand);
            if (maximize ? v > bestv : v < bestv) {
                bestv = v;
                bestu = cand;
            }
        }
        step *= 0.6;
    }
    return bestv;
}

}  // namespace detail

// Closed-form extremum of a quadratic-affine slice over the closed model
// domain, where the structure allows it.  Returns nullopt when the caller
// should fall back to the generic grid extremizer.
inline std::optional<double> quad_extremum(const QuadSlice& s, const EllipsoidModel& model,
                                           bool maximize) {
    if (s.n() != model.n()) throw std::invalid_argument("quad_extremum: dimension mismatch");
    if (auto v = detail::quad_extremum_pure(s, model, maximize)) return v;
    if (s.n() == 1) return detail::quad_extremum_1d(s, model, maximize);
    if (maximize) return detail::quad_max_concave(s, model);
    return std::nullopt;
}

// Quadratic-affine Hamiltonian with time-dependent coefficients.
class QuadraticAffineHam : public Hamiltonian {
  public:
    using SliceFn = std::function<QuadSlice(double)>;

    explicit QuadraticAffineHam(QuadSlice constant)
        : fn_([s = std::move(constant)](double) { return s; }) {}
    explicit QuadraticAffineHam(SliceFn fn) : fn_(std::move(fn)) {}

    double value(double t, const PhasePoint& p) const override {
        return fn_(t).value(p);
    }

    void field(double t, const PhasePoint& p, std::vector<double>& out) const override {
        QuadSlice s = fn_(t);
        if (p.n() != s.n()) throw std::invalid_argument("QuadraticAffineHam: dimension");
        out.assign(2 * p.n(), 0.0);
        for (std::size_t j = 0; j < p.n(); ++j) {
            double Hx = 2.0 * s.q[j] * kPi * p.x(j) + 2.0 * s.l[j].real();
            double Hy = 2.0 * s.q[j] * kPi * p.y(j) + 2.0 * s.l[j].imag();
            out[2 * j] = -Hy;
            out[2 * j + 1] = Hx;
        }
    }

    std::optional<QuadSlice> quad_slice(double t) const override { return fn_(t); }

    std::optional<double> extremum(double t, const EllipsoidModel& model, bool maximize,
                                   const ExtremizerConfig&) const override {
        return quad_extremum(fn_(t), model, maximize);
    }

  private:
    SliceFn fn_;
};

// Momentum map of the model circle action as a Hamiltonian:
// H(z) = h_max - pi sum k_j |z_j|^2.
inline HamPtr circle_action_generator(const EllipsoidModel& model) {
    QuadSlice s(model.n());
    s.c = model.h_max;
    for (std::size_t j = 0; j < model.n(); ++j) s.q[j] = -double(model.weights.k[j]);
    return std::make_shared<QuadraticAffineHam>(s);
}

// Flow of the model circle action at time t (exact rotations).
inline SymplecticMapChain circle_action_flow(const EllipsoidModel& model, double t) {
    std::vector<Primitive> prims;
    for (std::size_t j = 0; j < model.n(); ++j)
        prims.push_back(Rotation{j, double(model.weights.k[j]), t});
    return SymplecticMapChain(std::move(prims));
}

}  // namespace hofer
