#pragma once

#include <Eigen/Dense>

#include <mptrack/geometry.hpp>

namespace mptrack {

using Vector8d = Eigen::Matrix<double, 8, 1>;
using Matrix8d = Eigen::Matrix<double, 8, 8>;

// Noise magnitudes for the constant-velocity box filter. Position and
// velocity standard deviations scale with the box height, mirroring the
// usual tracking-by-detection setup; aspect noise is absolute.
struct KalmanNoise {
    double process_pos = 1.0 / 20.0;
    double process_vel = 1.0 / 160.0;
    double process_aspect = 1e-2;
    double measure_pos = 1.0 / 20.0;
    double measure_aspect = 1e-1;
};

// State layout: (cx, cy, aspect, h, vx, vy, va, vh).
struct KalmanParams {
    Vector8d state = Vector8d::Zero();
    Matrix8d covariance = Matrix8d::Identity();
    KalmanNoise noise;
};

KalmanParams kalman_init(const BBox& measurement, const KalmanNoise& noise = {});
void kalman_predict(KalmanParams& kp);
void kalman_update(KalmanParams& kp, const BBox& measurement);

BBox kalman_bbox(const KalmanParams& kp);

}  // namespace mptrack
