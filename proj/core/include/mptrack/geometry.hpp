#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace mptrack {

// Axis-aligned box in pixel coordinates, top-left origin.
struct BBox {
    double x = 0.0;  // left
    double y = 0.0;  // top
    double w = 0.0;
    double h = 0.0;

    double right() const { return x + w; }
    double bottom() const { return y + h; }
    double cx() const { return x + 0.5 * w; }
    double cy() const { return y + 0.5 * h; }
    double area() const { return w * h; }

    bool valid() const {
        return w > 0.0 && h > 0.0 && std::isfinite(x) && std::isfinite(y) &&
               std::isfinite(w) && std::isfinite(h);
    }

    bool operator==(const BBox&) const = default;
};

double iou(const BBox& a, const BBox& b);

// Pixel amounts clipped off each side of a desired crop rectangle; the
// consumer fills them with zeros when extracting the region.
struct ZeroPad {
    double left = 0.0;
    double top = 0.0;
    double right = 0.0;
    double bottom = 0.0;

    bool operator==(const ZeroPad&) const = default;
};

struct CropPad {
    BBox crop;     // clipped to the frame
    ZeroPad pad;   // amounts lost on each side
};

// Expands `b` by pad_frac*w horizontally and pad_frac*h vertically on each
// side, clips the result to the frame and reports the clipped amounts.
// Throws std::invalid_argument when the box lies fully outside the frame.
CropPad crop_pad_rect(const BBox& b, double frame_w, double frame_h, double pad_frac);

// Row-major 2x3 affine transform mapping points of the previous frame into
// the current one.
struct Affine23 {
    std::array<std::array<double, 3>, 2> m{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};

    static Affine23 identity() { return Affine23{}; }
    static Affine23 translation(double tx, double ty);

    std::array<double, 2> apply(double px, double py) const {
        return {m[0][0] * px + m[0][1] * py + m[0][2],
                m[1][0] * px + m[1][1] * py + m[1][2]};
    }
    // Linear part only, for direction-like quantities.
    std::array<double, 2> apply_vector(double vx, double vy) const {
        return {m[0][0] * vx + m[0][1] * vy, m[1][0] * vx + m[1][1] * vy};
    }
    BBox apply_bbox(const BBox& b) const;

    bool finite() const;
};

}  // namespace mptrack
