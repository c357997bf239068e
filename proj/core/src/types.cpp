#include <mptrack/types.hpp>

namespace mptrack {

namespace {
constexpr const char* kClassNames[kNumClasses] = {
    "grasper", "bipolar", "hook", "scissors", "clipper", "irrigator", "specimen_bag",
};
constexpr const char* kOperatorNames[4] = {"MSLH", "MSRH", "ASRH", "NULL"};
constexpr const char* kConditionNames[8] = {
    "bleeding", "blur", "smoke", "crowded", "occluded", "reflection", "foul_lens", "trocar",
};
constexpr const char* kPerspectiveNames[3] = {"visibility", "intracorporeal", "intraoperative"};
}  // namespace

const char* class_name(int class_id) {
    if (!valid_class_id(class_id)) throw std::invalid_argument("unknown class id");
    return kClassNames[class_id];
}

int class_id_from_name(const std::string& name) {
    for (int i = 0; i < kNumClasses; ++i) {
        if (name == kClassNames[i]) return i;
    }
    throw std::invalid_argument("unknown class name: " + name);
}

const char* operator_name(OperatorId op) { return kOperatorNames[static_cast<int>(op)]; }

OperatorId operator_from_name(const std::string& name) {
    for (int i = 0; i < 4; ++i) {
        if (name == kOperatorNames[i]) return static_cast<OperatorId>(i);
    }
    throw std::invalid_argument("unknown operator name: " + name);
}

const char* condition_name(ConditionFlag flag) {
    return kConditionNames[static_cast<int>(flag)];
}

ConditionFlag condition_from_name(const std::string& name) {
    for (int i = 0; i < 8; ++i) {
        if (name == kConditionNames[i]) return static_cast<ConditionFlag>(i);
    }
    throw std::invalid_argument("unknown condition flag: " + name);
}

const char* perspective_name(Perspective p) { return kPerspectiveNames[static_cast<int>(p)]; }

Perspective perspective_from_name(const std::string& name) {
    for (int i = 0; i < 3; ++i) {
        if (name == kPerspectiveNames[i]) return static_cast<Perspective>(i);
    }
    // CLI short forms.
    if (name == "vis") return Perspective::Visibility;
    if (name == "body") return Perspective::Intracorporeal;
    if (name == "op") return Perspective::Intraoperative;
    throw std::invalid_argument("unknown perspective: " + name);
}

Eigen::VectorXd normalize_direction(const Eigen::VectorXd& v) {
    if (!v.allFinite()) throw std::invalid_argument("direction vector must be finite");
    const double n = v.norm();
    if (n < 1e-12) throw std::invalid_argument("direction vector must be nonzero");
    return v / n;
}

}  // namespace mptrack
