#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hofer {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

using Complex = std::complex<double>;

// A point of C^n stored as 2n interleaved reals (x_0, y_0, x_1, y_1, ...).
// The symplectic form is sum dx_j ^ dy_j, so pi*|z_j|^2 is the area of the
// disc of radius |z_j| in coordinate j (an action variable).
struct PhasePoint {
    std::vector<double> c;

    PhasePoint() = default;
    explicit PhasePoint(std::size_t n) : c(2 * n, 0.0) {}
    explicit PhasePoint(std::vector<double> flat) : c(std::move(flat)) {
        if (c.size() % 2 != 0)
            throw std::invalid_argument("PhasePoint: odd coordinate count");
    }
    static PhasePoint from_complex(const std::vector<Complex>& zs) {
        PhasePoint p(zs.size());
        for (std::size_t j = 0; j < zs.size(); ++j) p.set_z(j, zs[j]);
        return p;
    }

    std::size_t n() const { return c.size() / 2; }
    double x(std::size_t j) const { return c[2 * j]; }
    double y(std::size_t j) const { return c[2 * j + 1]; }
    Complex z(std::size_t j) const { return {c[2 * j], c[2 * j + 1]}; }
    void set_z(std::size_t j, Complex v) {
        c[2 * j] = v.real();
        c[2 * j + 1] = v.imag();
    }
    // Action of coordinate j: pi*|z_j|^2.
    double action(std::size_t j) const {
        return kPi * (x(j) * x(j) + y(j) * y(j));
    }
    bool finite() const {
        for (double v : c)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline double distance(const PhasePoint& a, const PhasePoint& b) {
    if (a.c.size() != b.c.size())
        throw std::invalid_argument("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        double d = a.c[i] - b.c[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Absolute values of the isotropy weights at the maximum; all >= 1.
struct WeightVector {
    std::vector<int> k;

    WeightVector() = default;
    WeightVector(std::initializer_list<int> init) : k(init) { validate(); }
    explicit WeightVector(std::vector<int> v) : k(std::move(v)) { validate(); }

    void validate() const {
        if (k.empty()) throw std::invalid_argument("WeightVector: empty");
        for (int w : k)
            if (w < 1)
                throw std::invalid_argument("WeightVector: weights must be >= 1");
    }
    std::size_t n() const { return k.size(); }
    int max_weight() const {
        int m = k[0];
        for (int w : k) m = std::max(m, w);
        return m;
    }
};

// The standard Darboux model around an isolated maximum: the open ellipsoid
// { z | pi * sum k_j |z_j|^2 < alpha } carrying the momentum map
// H(z) = h_max - pi * sum k_j |z_j|^2.
struct EllipsoidModel {
    WeightVector weights;
    double alpha = 1.0;
    double h_max = 0.0;

    EllipsoidModel() = default;
    EllipsoidModel(WeightVector w, double a, double h = 0.0)
        : weights(std::move(w)), alpha(a), h_max(h) {
        if (!(alpha > 0.0))
            throw std::invalid_argument("EllipsoidModel: alpha must be > 0");
    }

    std::size_t n() const { return weights.n(); }

    // N(z) = pi * sum k_j |z_j|^2.
    double weighted_norm(const PhasePoint& p) const {
        check_dim(p);
        double s = 0.0;
        for (std::size_t j = 0; j < n(); ++j) s += weights.k[j] * p.action(j);
        return s;
    }
    bool contains(const PhasePoint& p, bool closed = true) const {
        double v = weighted_norm(p);
        return closed ? v <= alpha : v < alpha;
    }
    // Radius of the bounding box in coordinate j (|z_j| at N = alpha).
    double coord_radius(std::size_t j) const {
        return std::sqrt(alpha / (kPi * weights.k[j]));
    }
    void check_dim(const PhasePoint& p) const {
        if (p.n() != n())
            throw std::invalid_argument("EllipsoidModel: dimension mismatch (point has " +
                                        std::to_string(p.n()) + " coords, model has " +
                                        std::to_string(n()) + ")");
    }
};

// Momentum map of the model circle action: h_max - N(z).
inline double momentum(const EllipsoidModel& model, const PhasePoint& p) {
    return model.h_max - model.weighted_norm(p);
}

// Uniform sample from the closed model domain (rejection from the box).
inline PhasePoint sample_in_model(const EllipsoidModel& model, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PhasePoint p(model.n());
    for (int tries = 0; tries < 10000; ++tries) {
        for (std::size_t j = 0; j < model.n(); ++j) {
            double r = model.coord_radius(j);
            p.set_z(j, {r * u(rng), r * u(rng)});
        }
        if (model.contains(p)) return p;
    }
    throw std::runtime_error("sample_in_model: rejection sampling failed");
}

}  // namespace hofer
