#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <mptrack/types.hpp>

namespace mptrack {

// Q holds one query row per direction hypothesis, K one key row per box
// feature, V the direction prior aligned with K.
struct AttentionInputs {
    Eigen::MatrixXd q;  // n_q x d
    Eigen::MatrixXd k;  // n_k x d
    Eigen::MatrixXd v;  // n_k x d_v
};

// Scaled dot-product attention with the softmax normalized across keys.
// Output is n_q x d_v; every row is a convex combination of V's rows.
Eigen::MatrixXd attention(const AttentionInputs& in);

// Linear operator head: weights encode the per-category operator prior.
struct OperatorHead {
    Eigen::MatrixXd w;  // 4 x (d_v + 7)
    Eigen::VectorXd b;  // 4
};

Eigen::VectorXd operator_logits(const Eigen::VectorXd& direction_feature,
                                const Eigen::VectorXd& class_onehot,
                                const OperatorHead& head);

struct LossGrad {
    double loss = 0.0;
    double grad = 0.0;
};

// Sigmoid cross-entropy with a positive-class weight; gradient w.r.t. the
// logit. Loss logs are floored at 1e-12.
LossGrad weighted_bce(int y, double y_hat, double w);

// Margin loss: d^2 for positives, squared hinge max(m-d,0)^2 for negatives;
// gradient w.r.t. the pair distance d.
LossGrad contrastive_loss(double d, int y, double margin);

enum class DistanceMetric { Euclidean, Cosine };

double embedding_distance(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                          DistanceMetric metric);

// Time interval selector for the consistency metric: a fixed lag k or the
// first frame of each track.
struct KSpec {
    bool from_start = false;
    long k = 1;

    static KSpec parse(const std::string& text);
};

// track id -> (frame, direction vector) series, frames ascending.
using EmbeddingTimelines =
    std::map<long, std::vector<std::pair<long, Eigen::VectorXd>>>;

// Fraction of same-track (t, t-k) embedding pairs closer than `threshold`.
// Throws when no pair exists.
double consistency_accuracy(const EmbeddingTimelines& timelines, const KSpec& k,
                            double threshold,
                            DistanceMetric metric = DistanceMetric::Euclidean);

enum class PairType { Positive, Negative };

struct SoftAug {
    enum class Kind : int { Scale = 0, Perspective = 1, Rotate = 2, Mixed = 3 };
    Kind kind = Kind::Scale;
    double angle_deg = 0.0;  // < 10 when rotation participates
};

struct RotateAug {
    double angle_deg = 0.0;  // in [80,100] or [170,190]
};

struct CrossTool {};

// One contrastive training pair to synthesize from a frame. Negatives come
// from tool-vs-tool opposition or a hard rotation of a lone tool; positives
// from a soft augmentation of the same tool.
struct PairPlan {
    PairType pair_type = PairType::Positive;
    std::variant<SoftAug, RotateAug, CrossTool> augmentation;
    int source_det = 0;
    int partner_det = -1;  // second member for cross-tool pairs
};

std::vector<PairPlan> plan_pairs(const std::vector<Detection>& frame_dets,
                                 std::uint64_t rng_seed);

}  // namespace mptrack
