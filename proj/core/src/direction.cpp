#include <mptrack/direction.hpp>

#include <algorithm>
#include <cmath>

#include <mptrack/rng.hpp>

namespace mptrack {

Eigen::MatrixXd attention(const AttentionInputs& in) {
    const auto& q = in.q;
    const auto& k = in.k;
    const auto& v = in.v;
    if (q.cols() < 1 || q.rows() < 1 || k.rows() < 1) {
        throw std::invalid_argument("attention: empty inputs");
    }
    if (k.cols() != q.cols()) {
        throw std::invalid_argument("attention: query/key dimension mismatch");
    }
    if (v.rows() != k.rows()) {
        throw std::invalid_argument("attention: key/value row mismatch");
    }
    if (!q.allFinite() || !k.allFinite() || !v.allFinite()) {
        throw std::invalid_argument("attention: non-finite input");
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(q.cols()));
    // Alignment between every query row and every key row; the softmax
    // normalizes across keys, so each output row is a convex combination
    // of the value rows.
    Eigen::MatrixXd align = (q * k.transpose()) * scale;  // n_q x n_k
    for (Eigen::Index r = 0; r < align.rows(); ++r) {
        const double mx = align.row(r).maxCoeff();
        Eigen::ArrayXd e = (align.row(r).array() - mx).exp();
        align.row(r) = (e / e.sum()).matrix();
    }
    return align * v;  // n_q x d_v
}

Eigen::VectorXd operator_logits(const Eigen::VectorXd& direction_feature,
                                const Eigen::VectorXd& class_onehot,
                                const OperatorHead& head) {
    if (head.w.rows() != 4 || head.b.size() != 4) {
        throw std::invalid_argument("operator_logits: head must produce 4 logits");
    }
    if (head.w.cols() != direction_feature.size() + class_onehot.size()) {
        throw std::invalid_argument("operator_logits: weight width mismatch");
    }
    Eigen::VectorXd input(direction_feature.size() + class_onehot.size());
    input << direction_feature, class_onehot;
    return head.w * input + head.b;
}

LossGrad weighted_bce(int y, double y_hat, double w) {
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw std::invalid_argument("weighted_bce: weight must be finite positive");
    }
    if (y != 0 && y != 1) throw std::invalid_argument("weighted_bce: label must be 0 or 1");
    const double s = 1.0 / (1.0 + std::exp(-y_hat));
    const double floor = 1e-12;
    const double loss = -(y * std::log(std::max(s, floor)) * w +
                          (1 - y) * std::log(std::max(1.0 - s, floor)));
    const double grad = -y * w * (1.0 - s) + (1 - y) * s;
    return LossGrad{loss, grad};
}

LossGrad contrastive_loss(double d, int y, double margin) {
    if (d < 0.0 || !std::isfinite(d)) {
        throw std::invalid_argument("contrastive_loss: distance must be finite non-negative");
    }
    if (!(margin > 0.0)) throw std::invalid_argument("contrastive_loss: margin must be positive");
    if (y != 0 && y != 1) throw std::invalid_argument("contrastive_loss: label must be 0 or 1");
    const double hinge = std::max(margin - d, 0.0);
    const double loss = d * d * y + hinge * hinge * (1 - y);
    const double grad = 2.0 * d * y - 2.0 * hinge * (1 - y);
    return LossGrad{loss, grad};
}

double embedding_distance(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                          DistanceMetric metric) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("embedding_distance: dimension mismatch");
    }
    switch (metric) {
        case DistanceMetric::Euclidean:
            return (u - v).norm();
        case DistanceMetric::Cosine: {
            const double nu = u.norm();
            const double nv = v.norm();
            if (nu < 1e-12 || nv < 1e-12) {
                throw std::invalid_argument("embedding_distance: zero vector under cosine");
            }
            return 1.0 - u.dot(v) / (nu * nv);
        }
    }
    throw std::invalid_argument("embedding_distance: unknown metric");
}

double consistency_accuracy(const EmbeddingTimelines& timelines, const KSpec& k,
                            double threshold, DistanceMetric metric) {
    long pairs = 0;
    long hits = 0;
    for (const auto& [track_id, series] : timelines) {
        (void)track_id;
        if (series.size() < 2) continue;
        for (std::size_t i = 0; i < series.size(); ++i) {
            const Eigen::VectorXd* past = nullptr;
            if (k.from_start) {
                if (i == 0) continue;
                past = &series.front().second;
            } else {
                const long want = series[i].first - k.k;
                // Series are sparse in general; look for the exact frame.
                for (std::size_t j = 0; j < i; ++j) {
                    if (series[j].first == want) {
                        past = &series[j].second;
                        break;
                    }
                }
                if (past == nullptr) continue;
            }
            ++pairs;
            if (embedding_distance(series[i].second, *past, metric) < threshold) ++hits;
        }
    }
    if (pairs == 0) throw std::runtime_error("consistency_accuracy: no pairs");
    return static_cast<double>(hits) / static_cast<double>(pairs);
}

KSpec KSpec::parse(const std::string& text) {
    if (text == "start") return KSpec{true, 0};
    const long v = std::stol(text);
    if (v <= 0) throw ConfigError("consistency interval must be positive or 'start'");
    return KSpec{false, v};
}

std::vector<PairPlan> plan_pairs(const std::vector<Detection>& frame_dets,
                                 std::uint64_t rng_seed) {
    std::vector<PairPlan> plans;
    if (frame_dets.empty()) return plans;
    Rng rng(rng_seed);

    auto soft_positive = [&rng](int det) {
        PairPlan p;
        p.pair_type = PairType::Positive;
        p.source_det = det;
        SoftAug aug;
        const int kind = static_cast<int>(rng.uniform_u64(4));
        aug.kind = static_cast<SoftAug::Kind>(kind);
        aug.angle_deg = aug.kind == SoftAug::Kind::Rotate || aug.kind == SoftAug::Kind::Mixed
                            ? rng.uniform(0.0, 10.0)
                            : 0.0;
        p.augmentation = aug;
        return p;
    };

    if (frame_dets.size() >= 2) {
        // Multi-tool frame: every unordered tool pair opposes, plus one
        // soft positive per tool.
        for (std::size_t i = 0; i < frame_dets.size(); ++i) {
            for (std::size_t j = i + 1; j < frame_dets.size(); ++j) {
                PairPlan p;
                p.pair_type = PairType::Negative;
                p.source_det = static_cast<int>(i);
                p.partner_det = static_cast<int>(j);
                p.augmentation = CrossTool{};
                plans.push_back(std::move(p));
            }
        }
        for (std::size_t i = 0; i < frame_dets.size(); ++i) {
            plans.push_back(soft_positive(static_cast<int>(i)));
        }
        return plans;
    }

    // Single tool: rotation flips the direction, making a negative of the
    // tool against itself.
    PairPlan neg;
    neg.pair_type = PairType::Negative;
    neg.source_det = 0;
    RotateAug rot;
    const bool near_quarter = rng.uniform_u64(2) == 0;
    rot.angle_deg = near_quarter ? rng.uniform(80.0, 100.0) : rng.uniform(170.0, 190.0);
    neg.augmentation = rot;
    plans.push_back(std::move(neg));
    plans.push_back(soft_positive(0));
    return plans;
}

}  // namespace mptrack
