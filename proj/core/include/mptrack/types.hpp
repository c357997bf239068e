#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <mptrack/geometry.hpp>

namespace mptrack {

// Error raised for invalid configuration; everything else surfaces as
// std::runtime_error / std::invalid_argument.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kNumClasses = 7;

// Tool categories, ids 0..6.
enum class ToolClass : int {
    Grasper = 0,
    Bipolar = 1,
    Hook = 2,
    Scissors = 3,
    Clipper = 4,
    Irrigator = 5,
    SpecimenBag = 6,
};

const char* class_name(int class_id);
int class_id_from_name(const std::string& name);

inline bool valid_class_id(int id) { return id >= 0 && id < kNumClasses; }

// Tool operators: surgeon hands plus the null operator.
enum class OperatorId : int {
    MSLH = 0,  // main surgeon left hand
    MSRH = 1,  // main surgeon right hand
    ASRH = 2,  // assistant surgeon right hand
    Null = 3,
};

const char* operator_name(OperatorId op);
OperatorId operator_from_name(const std::string& name);

// Per-frame visual conditions used for stratified evaluation.
enum class ConditionFlag : int {
    Bleeding = 0,
    Blur,
    Smoke,
    Crowded,
    Occluded,
    Reflection,
    FoulLens,
    Trocar,
};

const char* condition_name(ConditionFlag flag);
ConditionFlag condition_from_name(const std::string& name);

using ConditionSet = std::set<ConditionFlag>;

// Optional per-detection embedding vectors. The direction vector is
// unit-normalized at ingestion; appearance/similarity are kept as provided.
struct EmbeddingSet {
    std::optional<Eigen::VectorXd> direction;
    std::optional<Eigen::VectorXd> appearance;
    std::optional<Eigen::VectorXd> similarity;
};

struct Detection {
    long frame = 0;
    int det_index = 0;  // unique within the frame
    BBox bbox;
    double score = 0.0;  // confidence in [0, 1]
    int class_id = 0;
    EmbeddingSet embeddings;
    std::optional<OperatorId> operator_gt;
};

// One identity per trajectory perspective. Visibility lives within a
// continuous camera-view presence, intracorporeal within one in-body cycle,
// intraoperative for the whole procedure.
struct PerspectiveIds {
    long visibility_id = 0;
    long intracorporeal_id = 0;
    long intraoperative_id = 0;

    bool operator==(const PerspectiveIds&) const = default;
};

enum class Perspective : int {
    Visibility = 0,
    Intracorporeal = 1,
    Intraoperative = 2,
};

const char* perspective_name(Perspective p);
Perspective perspective_from_name(const std::string& name);

struct FrameObservations {
    long frame = 0;
    std::vector<Detection> detections;
    std::optional<Affine23> cmc_transform;  // maps previous frame into this one
    ConditionSet condition_flags;
};

// Normalizes a direction vector to unit L2 norm; throws on zero/non-finite.
Eigen::VectorXd normalize_direction(const Eigen::VectorXd& v);

}  // namespace mptrack
