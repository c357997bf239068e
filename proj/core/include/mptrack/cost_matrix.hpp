#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

namespace mptrack {

// Sentinel for forbidden (track, detection) pairings.
inline constexpr double kGate = std::numeric_limits<double>::infinity();

inline bool is_gate(double v) { return v == kGate; }

// Dense tracks x detections matrix of association costs in [0, 1], with
// kGate marking pairs the solver must never select.
class CostMatrix {
  public:
    CostMatrix() = default;
    CostMatrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), values_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("CostMatrix: negative shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double at(int r, int c) const { return values_[index(r, c)]; }
    void set(int r, int c, double v) { values_[index(r, c)] = v; }

    bool same_shape(const CostMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    // Every non-gate value finite and within [0, 1].
    bool values_in_unit_range() const;

  private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
            throw std::out_of_range("CostMatrix: index out of range");
        }
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> values_;
};

}  // namespace mptrack
