#include "sakiadis/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "sakiadis/errors.hpp"

namespace sakiadis {

namespace {

using State = std::array<double, 3>;

// F''' from the transformed equation; regular on the solution manifold but
// written with a g^2 denominator, hence the offset start.
State transformed_rhs(double g, const State& s) {
    const double fppp = (s[1] * (s[0] - 1.0) + g * s[2] * (s[0] - 3.0)) / (g * g);
    return {s[1], s[2], fppp};
}

State original_rhs(const State& s) { return {s[1], s[2], -0.5 * s[0] * s[2]}; }

template <class Rhs>
State rk4_step(const Rhs& rhs, double t, const State& s, double h) {
    const State k1 = rhs(t, s);
    const State s2{s[0] + h / 2 * k1[0], s[1] + h / 2 * k1[1], s[2] + h / 2 * k1[2]};
    const State k2 = rhs(t + h / 2, s2);
    const State s3{s[0] + h / 2 * k2[0], s[1] + h / 2 * k2[1], s[2] + h / 2 * k2[2]};
    const State k3 = rhs(t + h / 2, s3);
    const State s4{s[0] + h * k3[0], s[1] + h * k3[1], s[2] + h * k3[2]};
    const State k4 = rhs(t + h, s4);
    return {s[0] + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
            s[1] + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]),
            s[2] + h / 6 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])};
}

constexpr double kStartOffset = 1e-6;

State seed_state(double g) {
    // four-term series about g = 0: A_0..A_3 = 1, 1, 1/4, 5/72
    const double f = 1.0 + g + g * g / 4.0 + 5.0 / 72.0 * g * g * g;
    const double fp = 1.0 + g / 2.0 + 5.0 / 24.0 * g * g;
    const double fpp = 0.5 + 5.0 / 12.0 * g;
    return {f, fp, fpp};
}

// Integrate from a known sample down to g_target with steps of at most
// `step`; used to evaluate F between stored grid points during bisection.
double f_between(const OracleResult::Sample& from, double g_target, double step) {
    double g = from.t;
    State s = from.state;
    while (g > g_target + 1e-18) {
        const double h = -std::min(step, g - g_target);
        s = rk4_step(transformed_rhs, g, s, h);
        g += h;
    }
    return s[0];
}

}  // namespace

OracleResult integrate_transformed_ivp(double step, double g_min) {
    if (!(step > 0)) throw std::invalid_argument("step must be positive");
    if (!(g_min <= -1.5)) throw std::invalid_argument("g_min must be <= -1.5 to bracket the root");

    OracleResult out;
    out.method = OracleResult::Method::transformed_rk4;
    out.step = step;

    double g = -kStartOffset;
    State s = seed_state(g);
    out.samples.push_back({g, s});
    while (g > g_min + 1e-15) {
        const double h = -std::min(step, g - g_min);
        const State next = rk4_step(transformed_rhs, g, s, h);
        if (std::abs(next[0] - s[0]) > 0.1 * std::max(1.0, std::abs(s[0]))) {
            throw StepTooLarge("adjacent samples differ by more than 10% in F");
        }
        s = next;
        g += h;
        out.samples.push_back({g, s});
    }

    // locate the sign change of F; samples run from -eps downward
    std::size_t hit = out.samples.size();
    for (std::size_t i = 0; i + 1 < out.samples.size(); ++i) {
        if (out.samples[i].state[0] > 0.0 && out.samples[i + 1].state[0] <= 0.0) {
            hit = i;
            break;
        }
    }
    if (hit == out.samples.size()) throw NoCrossing("F never changed sign over the range");

    const OracleResult::Sample& anchor = out.samples[hit];
    double hi = anchor.t;                    // F(hi) > 0
    double lo = out.samples[hit + 1].t;      // F(lo) <= 0
    for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f_between(anchor, mid, step) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out.estimate = 0.5 * (lo + hi);
    return out;
}

namespace {

double shoot_endpoint(double curvature_guess, double eta_max, double step,
                      std::vector<OracleResult::Sample>* trace = nullptr) {
    double eta = 0.0;
    State s{0.0, 1.0, curvature_guess};
    if (trace) trace->push_back({eta, s});
    const auto rhs = [](double, const State& st) { return original_rhs(st); };
    constexpr double kBlowup = 1e6;  // wrong guesses diverge; bail with the sign intact
    while (eta < eta_max - 1e-12) {
        const double h = std::min(step, eta_max - eta);
        const State next = rk4_step(rhs, eta, s, h);
        if (!std::isfinite(next[1])) {
            return s[2] < 0.0 ? -kBlowup : kBlowup;
        }
        if (std::abs(next[1]) > kBlowup) {
            return next[1] < 0.0 ? -kBlowup : kBlowup;
        }
        s = next;
        eta += h;
        if (trace) trace->push_back({eta, s});
    }
    return s[1];
}

}  // namespace

OracleResult shoot_original_bvp(double eta_max, double tol, double step) {
    if (!(eta_max >= 15.0)) throw std::invalid_argument("eta_max must be >= 15");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (!(step > 0)) throw std::invalid_argument("step must be positive");

    double lo = -1.0, hi = 0.0;
    const double r_lo = shoot_endpoint(lo, eta_max, step);
    const double r_hi = shoot_endpoint(hi, eta_max, step);
    if (!(r_lo < 0.0) || !(r_hi > 0.0)) {
        throw BracketFailure("endpoint residuals at curvature -1 and 0 do not straddle zero");
    }

    constexpr int kMaxIterations = 200;
    double mid = 0.5 * (lo + hi);
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
        mid = 0.5 * (lo + hi);
        const double r = shoot_endpoint(mid, eta_max, step);
        if (std::abs(r) < tol) {
            converged = true;
            break;
        }
        if (r > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if (!converged) throw NoConvergence("shooting residual never met the tolerance");

    OracleResult out;
    out.method = OracleResult::Method::shooting;
    out.step = step;
    out.estimate = mid;
    shoot_endpoint(mid, eta_max, step, &out.samples);
    return out;
}

}  // namespace sakiadis
