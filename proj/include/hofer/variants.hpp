#pragma once

#include <functional>
#include <vector>

#include "hofer/quadratic.hpp"

namespace hofer {

class SumHam : public Hamiltonian {
  public:
    explicit SumHam(std::vector<HamPtr> children) : children_(std::move(children)) {}

    double value(double t, const PhasePoint& p) const override {
        double v = 0.0;
        for (const auto& h : children_) v += h->value(t, p);
        return v;
    }
    void field(double t, const PhasePoint& p, std::vector<double>& out) const override {
        out.assign(p.c.size(), 0.0);
        std::vector<double> tmp;
        for (const auto& h : children_) {
            h->field(t, p, tmp);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += tmp[i];
        }
    }
    std::optional<QuadSlice> quad_slice(double t) const override {
        std::optional<QuadSlice> acc;
        for (const auto& h : children_) {
            auto s = h->quad_slice(t);
            if (!s) return std::nullopt;
            if (!acc)
                acc = *s;
            else
                *acc += *s;
        }
        return acc;
    }
    std::optional<double> extremum(double t, const EllipsoidModel& model, bool maximize,
                                   const ExtremizerConfig&) const override {
        if (auto s = quad_slice(t)) return quad_extremum(*s, model, maximize);
        return std::nullopt;
    }

  private:
    std::vector<HamPtr> children_;
};

// H composed with a fixed chain: value(t, z) = child(t, chain(z)).
class PullbackHam : public Hamiltonian {
  public:
    PullbackHam(HamPtr child, SymplecticMapChain chain)
        : child_(std::move(child)), chain_(std::move(chain)) {}

    double value(double t, const PhasePoint& p) const override {
        return child_->value(t, chain_.apply(p));
    }
    std::optional<QuadSlice> quad_slice(double t) const override {
        if (!chain_.exact_only()) return std::nullopt;
        auto s = child_->quad_slice(t);
        if (!s) return std::nullopt;
        return pull_through_exact(*s, chain_);
    }
    void field(double t, const PhasePoint& p, std::vector<double>& out) const override {
        if (auto s = quad_slice(t)) {
            QuadraticAffineHam(*s).field(t, p, out);
            return;
        }
        fd_field(t, p, out);
    }
    std::optional<double> extremum(double t, const EllipsoidModel& model, bool maximize,
                                   const ExtremizerConfig&) const override {
        if (auto s = quad_slice(t)) return quad_extremum(*s, model, maximize);
        return std::nullopt;
    }
    const SymplecticMapChain& chain() const { return chain_; }

  private:
    HamPtr child_;
    SymplecticMapChain chain_;
};

// H composed with a time-dependent chain: value(t, z) = child(t, chain(t)(z)).
class TimeChainPullbackHam : public Hamiltonian {
  public:
    using ChainFn = std::function<SymplecticMapChain(double)>;

    TimeChainPullbackHam(HamPtr child, ChainFn fn)
        : child_(std::move(child)), fn_(std::move(fn)) {}

    double value(double t, const PhasePoint& p) const override {
        return child_->value(t, fn_(t).apply(p));
    }
    std::optional<QuadSlice> quad_slice(double t) const override {
        SymplecticMapChain chain = fn_(t);
        if (!chain.exact_only()) return std::nullopt;
        auto s = child_->quad_slice(t);
        if (!s) return std::nullopt;
        return pull_through_exact(*s, chain);
    }
    void field(double t, const PhasePoint& p, std::vector<double>& out) const override {
        if (auto s = quad_slice(t)) {
            QuadraticAffineHam(*s).field(t, p, out);
            return;
        }
        fd_field(t, p, out);
    }
    std::optional<double> extremum(double t, const EllipsoidModel& model, bool maximize,
                                   const ExtremizerConfig&) const override {
        if (auto s = quad_slice(t)) return quad_extremum(*s, model, maximize);
        return std::nullopt;
    }

  private:
    HamPtr child_;
    ChainFn fn_;
};

// Reparametrized generator: value(tau, z) = child(tmap(tau), z) * dtmap(tau).
class ReparamHam : public Hamiltonian {
  public:
    using TimeMap = std::function<double(double)>;

    ReparamHam(HamPtr child, TimeMap tmap, TimeMap dtmap)
        : child_(std::move(child)), tmap_(std::move(tmap)), dtmap_(std::move(dtmap)) {}

    double value(double tau, const PhasePoint& p) const override {
        return child_->value(tmap_(tau), p) * dtmap_(tau);
    }
    void field(double tau, const PhasePoint& p, std::vector<double>& out) const override {
        child_->field(tmap_(tau), p, out);
        double s = dtmap_(tau);
        for (double& v : out) v *= s;
    }
    std::optional<QuadSlice> quad_slice(double tau) const override {
        auto s = child_->quad_slice(tmap_(tau));
        if (!s) return std::nullopt;
        return s->scaled(dtmap_(tau));
    }
    std::optional<double> extremum(double tau, const EllipsoidModel& model, bool maximize,
                                   const ExtremizerConfig& cfg) const override {
        double s = dtmap_(tau);
        // Monotone non-negative time maps keep max/min roles.
        if (s >= 0.0) {
            auto v = child_->extremum(tmap_(tau), model, maximize, cfg);
            if (v) return *v * s;
            return std::nullopt;
        }
        auto v = child_->extremum(tmap_(tau), model, !maximize, cfg);
        if (v) return *v * s;
        return std::nullopt;
    }

  private:
    HamPtr child_;
    TimeMap tmap_, dtmap_;
};

class ZeroHam : public Hamiltonian {
  public:
    double value(double, const PhasePoint&) const override { return 0.0; }
    void field(double, const PhasePoint& p, std::vector<double>& out) const override {
        out.assign(p.c.size(), 0.0);
    }
    std::optional<double> extremum(double, const EllipsoidModel&, bool,
                                   const ExtremizerConfig&) const override {
        return 0.0;
    }
};

}  // namespace hofer
