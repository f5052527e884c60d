#pragma once

#include <array>
#include <vector>

namespace sakiadis {

/// Outcome of an independent numerical check. Samples are strictly ordered
/// in the independent variable; `estimate` is the quantity the run was
/// after (the F-crossing location for the transformed integration, the
/// converged wall-shear guess for shooting). Double precision throughout:
/// these validate to ~1e-8, extended precision is the series' job.
struct OracleResult {
    enum class Method { transformed_rk4, shooting };

    struct Sample {
        double t;                      // g or eta
        std::array<double, 3> state;   // (F, F', F'') or (f, f', f'')
    };

    std::vector<Sample> samples;
    double estimate = 0.0;
    Method method = Method::transformed_rk4;
    double step = 0.0;
};

/// Classical fixed-step RK4 on the transformed system
///   g^2 F''' + 3 g F'' + F' - F g F'' - F F' = 0,
/// integrated from g = -1e-6 toward g_min. The F''' coefficient vanishes
/// at g = 0, so the run starts a small offset away with the initial state
/// seeded from the four-term series about g = 0. The estimate is the root
/// of F located by bisection between the sign-change samples.
///
/// Preconditions: step > 0, g_min <= -1.5 (the crossing must be bracketed).
/// Throws NoCrossing if F never changes sign, StepTooLarge if adjacent
/// samples jump by more than 10%.
OracleResult integrate_transformed_ivp(double step, double g_min);

/// Shooting solver for the original problem 2 f''' + f f'' = 0 with
/// f(0) = 0, f'(0) = 1: bisects the initial curvature guess in [-1, 0]
/// until |f'(eta_max)| < tol. Fixed-step RK4 with the given step.
///
/// Preconditions: eta_max >= 15, tol > 0. Throws BracketFailure if the
/// endpoint residuals do not straddle zero, NoConvergence after the
/// iteration cap.
OracleResult shoot_original_bvp(double eta_max, double tol, double step = 1e-3);

}  // namespace sakiadis
