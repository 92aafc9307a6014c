#pragma once

#include <cstdint>
#include <vector>

#include "fresco/canvas.hpp"

namespace fresco {

// Stationary Gaussian random field prior on the grid, with a separable
// squared-exponential kernel of unit marginal variance:
//   K((y,x),(y',x')) = exp(-(y-y')^2 / (2 l^2)) * exp(-(x-x')^2 / (2 l^2))
// Channels are independent and share the kernel. correlation_length 0 means
// the exact white prior (identity covariance).
//
// The covariance is held as per-axis eigendecompositions, so exact sampling
// and the closed-form Gaussian posterior mean are diagonal operations in the
// eigenbasis.
class GrfPrior {
public:
    int height() const { return height_; }
    int width() const { return width_; }
    int channels() const { return channels_; }
    bool is_white() const { return white_; }
    const Canvas& mean() const { return mean_; }

    // Covariance between two cells of the same channel.
    double kernel(int y1, int x1, int y2, int x2) const;

    // Exact posterior mean E[x0 | x_t] under x_t = (1-t) x0 + t eps:
    //   mu + (1-t) K ((1-t)^2 K + t^2 I)^{-1} (x_t - (1-t) mu)
    // evaluated channel-wise in the eigenbasis. t = 0 returns x_t unchanged;
    // t = 1 returns the mean.
    Canvas posterior_mean(const Canvas& x_t, double t) const;

    // Exact draw from the prior; a pure function of the seed.
    Canvas sample(std::uint64_t seed) const;

    // Prior of the variance-preserving downsampled field
    // (block mean * 2^level per axis pair). Downsampling white stays white.
    GrfPrior downsampled(int level) const;

    friend GrfPrior make_grf_prior(int height, int width, int channels,
                                   double correlation_length, double mean_value);

private:
    GrfPrior() = default;
    void decompose();  // eigendecompose the axis kernels; validates PSD

    int height_ = 0;
    int width_ = 0;
    int channels_ = 0;
    bool white_ = false;
    Canvas mean_;
    // axis covariance matrices, row-major
    std::vector<double> kernel_y_, kernel_x_;
    // eigenbasis per axis: kernel = basis * diag(eig) * basis^T
    std::vector<double> basis_y_, basis_x_;
    std::vector<double> eig_y_, eig_x_;
};

// Builds the prior. Throws std::invalid_argument for bad dims or negative
// correlation length, std::runtime_error when the kernel eigenvalues fall
// below -1e-8 (numerically non-PSD); small negatives are clamped to zero.
GrfPrior make_grf_prior(int height, int width, int channels, double correlation_length,
                        double mean_value = 0.0);

}  // namespace fresco
