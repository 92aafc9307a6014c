#include "fresco/grf_prior.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "fresco/rng.hpp"

namespace fresco {

namespace {

using Matrix = Eigen::MatrixXd;

Matrix to_matrix(const std::vector<double>& data, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = data[static_cast<std::size_t>(i) * n + j];
        }
    }
    return m;
}

std::vector<double> from_matrix(const Matrix& m) {
    std::vector<double> data(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            data[static_cast<std::size_t>(i) * m.cols() + j] = m(i, j);
        }
    }
    return data;
}

void eig_axis(const std::vector<double>& kernel, int n, std::vector<double>& basis,
              std::vector<double>& eig) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(to_matrix(kernel, n));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("GrfPrior: axis eigendecomposition failed");
    }
    Eigen::VectorXd values = solver.eigenvalues();
    for (int i = 0; i < n; ++i) {
        if (values(i) < -1e-8) {
            throw std::runtime_error("GrfPrior: kernel is not positive semidefinite");
        }
        if (values(i) < 0.0) {
            values(i) = 0.0;
        }
    }
    basis = from_matrix(solver.eigenvectors());
    eig.assign(values.data(), values.data() + n);
}

// coarse = 2^level * M K M^T with M the 1-D block-mean operator
std::vector<double> downsample_axis_kernel(const std::vector<double>& kernel, int n, int level) {
    const int side = 1 << level;
    const int m = n / side;
    const Matrix fine = to_matrix(kernel, n);
    Matrix blockmean = Matrix::Zero(m, n);
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k < side; ++k) {
            blockmean(r, r * side + k) = 1.0 / side;
        }
    }
    const Matrix coarse = static_cast<double>(side) * blockmean * fine * blockmean.transpose();
    return from_matrix(coarse);
}

}  // namespace

GrfPrior make_grf_prior(int height, int width, int channels, double correlation_length,
                        double mean_value) {
    if (height <= 0 || width <= 0 || channels <= 0) {
        throw std::invalid_argument("make_grf_prior: dimensions must be positive");
    }
    if (correlation_length < 0.0 || !std::isfinite(correlation_length)) {
        throw std::invalid_argument("make_grf_prior: correlation length must be >= 0");
    }
    GrfPrior prior;
    prior.height_ = height;
    prior.width_ = width;
    prior.channels_ = channels;
    prior.white_ = correlation_length == 0.0;
    prior.mean_ = Canvas(height, width, channels);
    for (double& v : prior.mean_.data) {
        v = mean_value;
    }

    auto axis_kernel = [&](int n) {
        std::vector<double> k(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (prior.white_) {
                    k[static_cast<std::size_t>(i) * n + j] = i == j ? 1.0 : 0.0;
                } else {
                    const double delta = i - j;
                    k[static_cast<std::size_t>(i) * n + j] =
                        std::exp(-delta * delta /
                                 (2.0 * correlation_length * correlation_length));
                }
            }
        }
        return k;
    };
    prior.kernel_y_ = axis_kernel(height);
    prior.kernel_x_ = axis_kernel(width);
    prior.decompose();
    return prior;
}

void GrfPrior::decompose() {
    if (white_) {
        // identity kernel: basis = I, eigenvalues = 1
        basis_y_ = kernel_y_;
        basis_x_ = kernel_x_;
        eig_y_.assign(height_, 1.0);
        eig_x_.assign(width_, 1.0);
        return;
    }
    eig_axis(kernel_y_, height_, basis_y_, eig_y_);
    eig_axis(kernel_x_, width_, basis_x_, eig_x_);
}

double GrfPrior::kernel(int y1, int x1, int y2, int x2) const {
    return kernel_y_[static_cast<std::size_t>(y1) * height_ + y2] *
           kernel_x_[static_cast<std::size_t>(x1) * width_ + x2];
}

Canvas GrfPrior::posterior_mean(const Canvas& x_t, double t) const {
    if (!x_t.same_shape(mean_)) {
        throw std::invalid_argument("GrfPrior::posterior_mean: shape mismatch");
    }
    if (t < 0.0 || t > 1.0) {
        throw std::invalid_argument("GrfPrior::posterior_mean: t outside [0, 1]");
    }
    if (t == 0.0) {
        return x_t;
    }
    const double signal = 1.0 - t;
    Canvas out(height_, width_, channels_);

    if (white_) {
        const double gain = signal / (signal * signal + t * t);
        for (std::size_t i = 0; i < out.data.size(); ++i) {
            out.data[i] = mean_.data[i] + gain * (x_t.data[i] - signal * mean_.data[i]);
        }
        return out;
    }

    const Matrix basis_y = to_matrix(basis_y_, height_);
    const Matrix basis_x = to_matrix(basis_x_, width_);
    for (int d = 0; d < channels_; ++d) {
        Matrix centered(height_, width_);
        for (int y = 0; y < height_; ++y) {
            for (int x = 0; x < width_; ++x) {
                centered(y, x) = x_t.at(y, x, d) - signal * mean_.at(y, x, d);
            }
        }
        Matrix coeff = basis_y.transpose() * centered * basis_x;
        for (int i = 0; i < height_; ++i) {
            for (int j = 0; j < width_; ++j) {
                const double lambda = eig_y_[i] * eig_x_[j];
                coeff(i, j) *= signal * lambda / (signal * signal * lambda + t * t);
            }
        }
        const Matrix result = basis_y * coeff * basis_x.transpose();
        for (int y = 0; y < height_; ++y) {
            for (int x = 0; x < width_; ++x) {
                out.at(y, x, d) = result(y, x) + mean_.at(y, x, d);
            }
        }
    }
    return out;
}

Canvas GrfPrior::sample(std::uint64_t seed) const {
    Canvas out(height_, width_, channels_);
    if (white_) {
        for (int d = 0; d < channels_; ++d) {
            GaussianStream stream(derive_seed(seed, static_cast<std::uint64_t>(d)));
            for (int y = 0; y < height_; ++y) {
                for (int x = 0; x < width_; ++x) {
                    out.at(y, x, d) = mean_.at(y, x, d) + stream.next();
                }
            }
        }
        return out;
    }
    const Matrix basis_y = to_matrix(basis_y_, height_);
    const Matrix basis_x = to_matrix(basis_x_, width_);
    for (int d = 0; d < channels_; ++d) {
        GaussianStream stream(derive_seed(seed, static_cast<std::uint64_t>(d)));
        Matrix coeff(height_, width_);
        for (int i = 0; i < height_; ++i) {
            for (int j = 0; j < width_; ++j) {
                coeff(i, j) = std::sqrt(eig_y_[i] * eig_x_[j]) * stream.next();
            }
        }
        const Matrix field = basis_y * coeff * basis_x.transpose();
        for (int y = 0; y < height_; ++y) {
            for (int x = 0; x < width_; ++x) {
                out.at(y, x, d) = field(y, x) + mean_.at(y, x, d);
            }
        }
    }
    return out;
}

GrfPrior GrfPrior::downsampled(int level) const {
    if (level < 0) {
        throw std::invalid_argument("GrfPrior::downsampled: negative level");
    }
    if (level == 0) {
        return *this;
    }
    const int side = 1 << level;
    if (height_ % side != 0 || width_ % side != 0) {
        throw std::invalid_argument("GrfPrior::downsampled: dims not divisible by 2^level");
    }
    GrfPrior coarse;
    coarse.height_ = height_ / side;
    coarse.width_ = width_ / side;
    coarse.channels_ = channels_;
    coarse.white_ = white_;
    coarse.mean_ = Canvas(coarse.height_, coarse.width_, channels_);
    for (int r = 0; r < coarse.height_; ++r) {
        for (int c = 0; c < coarse.width_; ++c) {
            for (int d = 0; d < channels_; ++d) {
                double sum = 0.0;
                for (int y = r * side; y < (r + 1) * side; ++y) {
                    for (int x = c * side; x < (c + 1) * side; ++x) {
                        sum += mean_.at(y, x, d);
                    }
                }
                coarse.mean_.at(r, c, d) = sum / side;  // block mean * 2^level
            }
        }
    }
    coarse.kernel_y_ = downsample_axis_kernel(kernel_y_, height_, level);
    coarse.kernel_x_ = downsample_axis_kernel(kernel_x_, width_, level);
    if (coarse.white_) {
        // exact identity survives block averaging; rebuild to avoid drift
        for (int i = 0; i < coarse.height_; ++i) {
            for (int j = 0; j < coarse.height_; ++j) {
                coarse.kernel_y_[static_cast<std::size_t>(i) * coarse.height_ + j] =
                    i == j ? 1.0 : 0.0;
            }
        }
        for (int i = 0; i < coarse.width_; ++i) {
            for (int j = 0; j < coarse.width_; ++j) {
                coarse.kernel_x_[static_cast<std::size_t>(i) * coarse.width_ + j] =
                    i == j ? 1.0 : 0.0;
            }
        }
    }
    coarse.decompose();
    return coarse;
}

}  // namespace fresco
