#include <mptrack/geometry.hpp>

#include <algorithm>

namespace mptrack {

double iou(const BBox& a, const BBox& b) {
    const double ix = std::max(a.x, b.x);
    const double iy = std::max(a.y, b.y);
    const double ix2 = std::min(a.right(), b.right());
    const double iy2 = std::min(a.bottom(), b.bottom());
    const double iw = std::max(0.0, ix2 - ix);
    const double ih = std::max(0.0, iy2 - iy);
    const double inter = iw * ih;
    const double uni = a.area() + b.area() - inter;
    if (uni <= 0.0) return 0.0;
    return inter / uni;
}

CropPad crop_pad_rect(const BBox& b, double frame_w, double frame_h, double pad_frac) {
    if (!b.valid() || !std::isfinite(pad_frac) || pad_frac < 0.0) {
        throw std::invalid_argument("crop_pad_rect: invalid box or pad fraction");
    }
    const BBox frame{0.0, 0.0, frame_w, frame_h};
    if (iou(b, frame) == 0.0 &&
        (b.right() <= 0.0 || b.bottom() <= 0.0 || b.x >= frame_w || b.y >= frame_h)) {
        throw std::invalid_argument("crop_pad_rect: detection outside frame");
    }

    const double dx = pad_frac * b.w;
    const double dy = pad_frac * b.h;
    const double want_x0 = b.x - dx;
    const double want_y0 = b.y - dy;
    const double want_x1 = b.right() + dx;
    const double want_y1 = b.bottom() + dy;

    const double cx0 = std::max(want_x0, 0.0);
    const double cy0 = std::max(want_y0, 0.0);
    const double cx1 = std::min(want_x1, frame_w);
    const double cy1 = std::min(want_y1, frame_h);

    CropPad result;
    result.crop = BBox{cx0, cy0, cx1 - cx0, cy1 - cy0};
    result.pad = ZeroPad{cx0 - want_x0, cy0 - want_y0, want_x1 - cx1, want_y1 - cy1};
    return result;
}

Affine23 Affine23::translation(double tx, double ty) {
    Affine23 t;
    t.m[0][2] = tx;
    t.m[1][2] = ty;
    return t;
}

BBox Affine23::apply_bbox(const BBox& b) const {
    const auto tl = apply(b.x, b.y);
    const auto br = apply(b.right(), b.bottom());
    const double x0 = std::min(tl[0], br[0]);
    const double y0 = std::min(tl[1], br[1]);
    const double x1 = std::max(tl[0], br[0]);
    const double y1 = std::max(tl[1], br[1]);
    return BBox{x0, y0, x1 - x0, y1 - y0};
}

bool Affine23::finite() const {
    for (const auto& row : m) {
        for (double v : row) {
            if (!std::isfinite(v)) return false;
        }
    }
    return true;
}

}  // namespace mptrack
