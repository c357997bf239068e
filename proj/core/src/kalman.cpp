#include <mptrack/kalman.hpp>

#include <algorithm>
#include <stdexcept>

namespace mptrack {

namespace {

using Vector4d = Eigen::Vector4d;
using Matrix48 = Eigen::Matrix<double, 4, 8>;

Vector4d to_measurement(const BBox& b) {
    if (!b.valid()) throw std::invalid_argument("kalman: invalid measurement box");
    return Vector4d(b.cx(), b.cy(), b.w / b.h, b.h);
}

Matrix8d transition_matrix() {
    Matrix8d f = Matrix8d::Identity();
    for (int i = 0; i < 4; ++i) f(i, i + 4) = 1.0;
    return f;
}

Matrix48 measurement_matrix() {
    Matrix48 h = Matrix48::Zero();
    for (int i = 0; i < 4; ++i) h(i, i) = 1.0;
    return h;
}

Matrix8d process_covariance(const KalmanParams& kp) {
    const double h = kp.state(3);
    const double sp = kp.noise.process_pos * h;
    const double sv = kp.noise.process_vel * h;
    const double sa = kp.noise.process_aspect;
    Vector8d d;
    d << sp * sp, sp * sp, sa * sa, sp * sp, sv * sv, sv * sv, sa * sa * 1e-2, sv * sv;
    return d.asDiagonal();
}

Eigen::Matrix4d measurement_covariance(const KalmanParams& kp) {
    const double h = kp.state(3);
    const double sp = kp.noise.measure_pos * h;
    const double sa = kp.noise.measure_aspect;
    Eigen::Vector4d d(sp * sp, sp * sp, sa * sa, sp * sp);
    return d.asDiagonal();
}

void check_psd(const Matrix8d& cov) {
    if (!cov.allFinite()) throw std::runtime_error("kalman: non-finite covariance");
    Eigen::SelfAdjointEigenSolver<Matrix8d> es(cov);
    if (es.eigenvalues().minCoeff() < -1e-8) {
        throw std::runtime_error("kalman: covariance not positive semi-definite");
    }
}

}  // namespace

KalmanParams kalman_init(const BBox& measurement, const KalmanNoise& noise) {
    KalmanParams kp;
    kp.noise = noise;
    const Vector4d z = to_measurement(measurement);
    kp.state.head<4>() = z;
    kp.state.tail<4>().setZero();

    // Floors keep the innovation covariance invertible when both noise
    // scales are configured to zero.
    const double h = z(3);
    const double sp2 = std::max(4.0 * noise.measure_pos * noise.measure_pos * h * h, 1.0);
    const double sv2 = std::max(100.0 * noise.process_vel * noise.process_vel * h * h, 1.0);
    Vector8d d;
    d << sp2, sp2, 1e-2, sp2, sv2, sv2, 1e-5, sv2;
    kp.covariance = d.asDiagonal();
    return kp;
}

void kalman_predict(KalmanParams& kp) {
    check_psd(kp.covariance);
    const Matrix8d f = transition_matrix();
    kp.state = f * kp.state;
    kp.covariance = f * kp.covariance * f.transpose() + process_covariance(kp);
}

void kalman_update(KalmanParams& kp, const BBox& measurement) {
    check_psd(kp.covariance);
    const Matrix48 h = measurement_matrix();
    const Vector4d z = to_measurement(measurement);

    const Eigen::Matrix4d s = h * kp.covariance * h.transpose() + measurement_covariance(kp);
    const Eigen::Matrix<double, 8, 4> k =
        kp.covariance * h.transpose() * s.ldlt().solve(Eigen::Matrix4d::Identity());
    kp.state += k * (z - h * kp.state);
    kp.covariance = (Matrix8d::Identity() - k * h) * kp.covariance;
    // Symmetrize to keep round-off from accumulating.
    kp.covariance = 0.5 * (kp.covariance + kp.covariance.transpose()).eval();
}

BBox kalman_bbox(const KalmanParams& kp) {
    const double cx = kp.state(0);
    const double cy = kp.state(1);
    const double a = kp.state(2);
    const double h = kp.state(3);
    const double w = a * h;
    return BBox{cx - 0.5 * w, cy - 0.5 * h, w, h};
}

}  // namespace mptrack
