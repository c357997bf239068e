#pragma once

#include <deque>
#include <optional>

#include <mptrack/kalman.hpp>
#include <mptrack/types.hpp>

namespace mptrack {

enum class TrackStateKind : int {
    Tracked = 0,
    Lost = 1,
    OOCV = 2,  // out of camera view, still in body
    OOB = 3,   // out of body
    Retired = 4,
};

const char* track_state_name(TrackStateKind s);

struct TrackState {
    TrackStateKind kind = TrackStateKind::Tracked;
    long frames_since_seen = 0;
};

// Frame-count horizons driving state escalation while a track stays
// unmatched, at the 25 ticks/s base rate:
//   Lost     while frames_since_seen <= t_lost, or up to t_oocv away
//            from the frame border;
//   OOCV     from t_lost (border exits) or t_oocv (elsewhere) up to t_oob;
//   OOB      up to t_retire;
//   Retired  beyond t_retire.
struct LifecycleConfig {
    long t_lost = 3;
    long t_oocv = 25;
    long t_oob = 250;
    long t_retire = 5000;
    double border_margin = 0.10;  // fraction of each frame dimension
    double frame_w = 1920.0;
    double frame_h = 1080.0;

    void validate() const;
};

// Hands out strictly increasing identities per perspective.
struct IdAllocator {
    long next_visibility = 1;
    long next_intracorporeal = 1;
    long next_intraoperative = 1;

    long fresh_visibility() { return next_visibility++; }
    long fresh_intracorporeal() { return next_intracorporeal++; }
    long fresh_intraoperative() { return next_intraoperative++; }
    PerspectiveIds fresh_all() {
        return PerspectiveIds{fresh_visibility(), fresh_intracorporeal(),
                              fresh_intraoperative()};
    }
};

struct Track {
    PerspectiveIds ids;
    int class_id = 0;
    TrackState state;
    BBox last_bbox;
    KalmanParams kalman;
    std::optional<Eigen::VectorXd> direction_centroid;  // unit norm when set
    std::deque<EmbeddingSet> embedding_history;         // length <= history cap
    long born_frame = 0;
    long last_frame = 0;
    double last_score = 0.0;

    bool near_border(const LifecycleConfig& cfg) const;
};

Track make_track(const Detection& det, long frame, IdAllocator& ids,
                 const KalmanNoise& noise);

// Advances the lifecycle one tick. Matched tracks become Tracked with the
// perspective identities rolled according to the state they return from:
// Lost keeps all three, OOCV takes a fresh visibility id, OOB takes fresh
// visibility and intracorporeal ids. Unmatched tracks escalate along
// Tracked -> Lost -> OOCV -> OOB -> Retired. Throws on Retired reuse.
Track transition(Track track, bool matched, long frame, const LifecycleConfig& cfg,
                 IdAllocator& ids);

// EMA update of the direction centroid (old_weight on the previous value),
// renormalized to unit length.
void update_direction_centroid(Track& track, const Eigen::VectorXd& direction,
                               double old_weight = 0.9);

void push_embedding_history(Track& track, const EmbeddingSet& e, std::size_t cap);

}  // namespace mptrack
