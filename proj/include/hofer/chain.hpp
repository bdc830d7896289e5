#pragma once

#include <variant>
#include <vector>

#include "hofer/hamiltonian.hpp"
#include "hofer/phase.hpp"

namespace hofer {

// Primitive maps.  Sign convention (fixed globally): positive rotation speed
// s turns clockwise, z_j -> e^{-2 pi i s t} z_j, matching the flow of the
// momentum map -s*pi*|z_j|^2.
struct Rotation {
    std::size_t coord = 0;
    double speed = 1.0;
    double time = 1.0;
};

struct Translation {
    std::size_t coord = 0;
    Complex offset{0.0, 0.0};
};

struct IntegratedFlow {
    HamPtr generator;
    double t0 = 0.0;
    double t1 = 1.0;
    FlowConfig config{};
};

using Primitive = std::variant<Rotation, Translation, IntegratedFlow>;

struct ChainApplyError : std::runtime_error {
    std::size_t primitive_index;
    ChainApplyError(std::size_t idx, const std::string& what)
        : std::runtime_error("chain primitive " + std::to_string(idx) + ": " + what),
          primitive_index(idx) {}
};

// A finite composition of primitive symplectic maps, applied left-to-right
// in stored order.  Immutable after construction; composition returns a new
// chain.
class SymplecticMapChain {
  public:
    SymplecticMapChain() = default;
    explicit SymplecticMapChain(std::vector<Primitive> prims)
        : prims_(std::move(prims)) {}

    const std::vector<Primitive>& primitives() const { return prims_; }
    bool empty() const { return prims_.empty(); }
    std::size_t size() const { return prims_.size(); }

    // True when the chain consists only of exact (rotation/translation)
    // primitives.
    bool exact_only() const {
        for (const auto& pr : prims_)
            if (std::holds_alternative<IntegratedFlow>(pr)) return false;
        return true;
    }

    PhasePoint apply(const PhasePoint& p0) const {
        PhasePoint p = p0;
        for (std::size_t i = 0; i < prims_.size(); ++i) {
            try {
                apply_one(prims_[i], p);
            } catch (const FlowBlowup& e) {
                throw ChainApplyError(i, e.what());
            }
            if (!p.finite())
                throw ChainApplyError(i, "non-finite intermediate state");
        }
        return p;
    }

    SymplecticMapChain inverse() const {
        std::vector<Primitive> inv;
        inv.reserve(prims_.size());
        for (auto it = prims_.rbegin(); it != prims_.rend(); ++it) {
            if (const auto* r = std::get_if<Rotation>(&*it)) {
                inv.push_back(Rotation{r->coord, r->speed, -r->time});
            } else if (const auto* tr = std::get_if<Translation>(&*it)) {
                inv.push_back(Translation{tr->coord, -tr->offset});
            } else {
                const auto& f = std::get<IntegratedFlow>(*it);
                inv.push_back(IntegratedFlow{f.generator, f.t1, f.t0, f.config});
            }
        }
        return SymplecticMapChain(std::move(inv));
    }

    // this, then other.
    SymplecticMapChain then(const SymplecticMapChain& other) const {
        std::vector<Primitive> all = prims_;
        all.insert(all.end(), other.prims_.begin(), other.prims_.end());
        return SymplecticMapChain(std::move(all));
    }

    // Analytic Jacobian for exact-only chains (block 2x2 per coordinate).
    // Row-major (2n x 2n) in the interleaved (x_0, y_0, x_1, y_1, ...) basis.
    std::vector<double> exact_jacobian(std::size_t n) const {
        if (!exact_only())
            throw std::logic_error("exact_jacobian: chain has integrated flows");
        const std::size_t m = 2 * n;
        std::vector<double> J(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i) J[i * m + i] = 1.0;
        for (const auto& pr : prims_) {
            if (const auto* r = std::get_if<Rotation>(&pr)) {
                double th = kTwoPi * r->speed * r->time;
                double c = std::cos(th), s = std::sin(th);
                // z -> e^{-i th} z : x' = c x + s y, y' = -s x + c y.
                std::size_t a = 2 * r->coord, b = a + 1;
                for (std::size_t col = 0; col < m; ++col) {
                    double ja = J[a * m + col], jb = J[b * m + col];
                    J[a * m + col] = c * ja + s * jb;
                    J[b * m + col] = -s * ja + c * jb;
                }
            }
            // Translation: identity Jacobian.
        }
        return J;
    }

  private:
    static void apply_one(const Primitive& pr, PhasePoint& p) {
        if (const auto* r = std::get_if<Rotation>(&pr)) {
            if (r->coord >= p.n())
                throw std::invalid_argument("rotation coordinate out of range");
            double th = kTwoPi * r->speed * r->time;
            p.set_z(r->coord, p.z(r->coord) * Complex{std::cos(th), -std::sin(th)});
        } else if (const auto* tr = std::get_if<Translation>(&pr)) {
            if (tr->coord >= p.n())
                throw std::invalid_argument("translation coordinate out of range");
            p.set_z(tr->coord, p.z(tr->coord) + tr->offset);
        } else {
            const auto& f = std::get<IntegratedFlow>(pr);
            p = integrate_flow(*f.generator, f.t0, f.t1, p, f.config);
        }
    }

    std::vector<Primitive> prims_;
};

inline PhasePoint apply_chain(const SymplecticMapChain& chain, const PhasePoint& p) {
    return chain.apply(p);
}

inline SymplecticMapChain invert_chain(const SymplecticMapChain& chain) {
    return chain.inverse();
}

// || J^T J0 J - J0 ||_inf for a row-major (m x m) Jacobian.
inline double symplectic_defect(const std::vector<double>& J, std::size_t m) {
    // (J0 J)(row) = J(row+1) for even rows, -J(row-1) for odd rows.
    std::vector<double> J0J(m * m);
    for (std::size_t r = 0; r < m; r += 2)
        for (std::size_t cidx = 0; cidx < m; ++cidx) {
            J0J[r * m + cidx] = J[(r + 1) * m + cidx];
            J0J[(r + 1) * m + cidx] = -J[r * m + cidx];
        }
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < m; ++r) s += J[r * m + i] * J0J[r * m + j];
            // Subtract J0: J0[i][j] = +1 if j=i+1 (i even), -1 if j=i-1 (i odd).
            if (i % 2 == 0 && j == i + 1) s -= 1.0;
            if (i % 2 == 1 && j + 1 == i) s += 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

// max over samples of || J^T J0 J - J0 ||_inf, Jacobians by central
// differences of the supplied map.  J0 is the standard symplectic matrix in
// the interleaved basis.
template <typename MapFn>
double audit_symplectic_map(MapFn&& map, const std::vector<PhasePoint>& samples,
                            double fd_step = 1e-6) {
    double worst = 0.0;
    for (const auto& p : samples) {
        const std::size_t m = p.c.size();
        std::vector<double> J(m * m);
        PhasePoint q = p;
        for (std::size_t col = 0; col < m; ++col) {
            double saved = q.c[col];
            q.c[col] = saved + fd_step;
            PhasePoint fp = map(q);
            q.c[col] = saved - fd_step;
            PhasePoint fm = map(q);
            q.c[col] = saved;
            for (std::size_t row = 0; row < m; ++row)
                J[row * m + col] = (fp.c[row] - fm.c[row]) / (2.0 * fd_step);
        }
        worst = std::max(worst, symplectic_defect(J, m));
    }
    return worst;
}

inline double audit_symplectic(const SymplecticMapChain& chain,
                               const std::vector<PhasePoint>& samples,
                               double fd_step = 1e-6) {
    return audit_symplectic_map([&](const PhasePoint& p) { return chain.apply(p); },
                                samples, fd_step);
}

}  // namespace hofer
