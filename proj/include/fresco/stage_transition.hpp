#pragma once

#include <cstdint>

#include "fresco/mixed_grid.hpp"
#include "fresco/noise_field.hpp"

namespace fresco {

enum class RenoiseKind { unified, independent };

// Re-noise update at a stage boundary: z <- beta * z + alpha * eps, rolling
// the grid back from time t_start to the re-entry time t_end >= t_start.
//
// Coefficients follow the linear-interpolation marginal x_t = (1-t)x0 + t*eps:
//   beta = (1 - t_end) / (1 - t_start)          signal coefficient ratio
//   unified:     alpha = t_end - beta * t_start  (same eps completes the path)
//   independent: alpha = sqrt(max(0, t_end^2 - beta^2 * t_start^2))
//                (fresh eps restores the marginal variance)
// The independent alpha is the injected noise strength b.
struct TransitionSpec {
    double t_start = 0.0;  // time before the transition
    double t_end = 0.0;    // re-entry time, >= t_start
    RenoiseKind kind = RenoiseKind::unified;

    double beta() const;
    double alpha() const;

    static TransitionSpec unified(double t_start, double t_end);
    static TransitionSpec independent(double t_start, double t_end);
};

// Unified form: every token's eps is the field's block value at the token's
// own coord, so a token sitting on the linear path z = (1-t)x + t*eps(coord)
// lands exactly on the t_end path state. Sets grid time to t_end and clears
// token histories (the variance gate restarts after a noise-level change).
void unified_renoise(MixedGrid& grid, const TransitionSpec& spec, const NoiseField& field);

// Independent form: eps is fresh iid N(0,1) from a counter stream seeded by
// rng_seed, unrelated to the unified field. Same bookkeeping otherwise.
void independent_renoise(MixedGrid& grid, const TransitionSpec& spec, std::uint64_t rng_seed);

// Canvas variants used by the whole-grid resampling baseline.
void unified_renoise_canvas(Canvas& canvas, int level, const TransitionSpec& spec,
                            const NoiseField& field);
void independent_renoise_canvas(Canvas& canvas, const TransitionSpec& spec,
                                std::uint64_t rng_seed);

}  // namespace fresco
