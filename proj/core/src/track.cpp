#include <mptrack/track.hpp>

#include <algorithm>

namespace mptrack {

const char* track_state_name(TrackStateKind s) {
    switch (s) {
        case TrackStateKind::Tracked: return "tracked";
        case TrackStateKind::Lost: return "lost";
        case TrackStateKind::OOCV: return "oocv";
        case TrackStateKind::OOB: return "oob";
        case TrackStateKind::Retired: return "retired";
    }
    return "?";
}

void LifecycleConfig::validate() const {
    if (!(t_lost > 0 && t_lost < t_oocv && t_oocv < t_oob && t_oob < t_retire)) {
        throw ConfigError("lifecycle timers must satisfy 0 < t_lost < t_oocv < t_oob < t_retire");
    }
    if (border_margin < 0.0 || border_margin >= 0.5) {
        throw ConfigError("border_margin must lie in [0, 0.5)");
    }
    if (frame_w <= 0.0 || frame_h <= 0.0) {
        throw ConfigError("frame dimensions must be positive");
    }
}

bool Track::near_border(const LifecycleConfig& cfg) const {
    const double mx = cfg.border_margin * cfg.frame_w;
    const double my = cfg.border_margin * cfg.frame_h;
    const double cx = last_bbox.cx();
    const double cy = last_bbox.cy();
    return cx <= mx || cx >= cfg.frame_w - mx || cy <= my || cy >= cfg.frame_h - my;
}

Track make_track(const Detection& det, long frame, IdAllocator& ids,
                 const KalmanNoise& noise) {
    Track t;
    t.ids = ids.fresh_all();
    t.class_id = det.class_id;
    t.state = TrackState{TrackStateKind::Tracked, 0};
    t.last_bbox = det.bbox;
    t.kalman = kalman_init(det.bbox, noise);
    if (det.embeddings.direction) {
        t.direction_centroid = normalize_direction(*det.embeddings.direction);
    }
    t.born_frame = frame;
    t.last_frame = frame;
    t.last_score = det.score;
    return t;
}

namespace {

TrackStateKind escalated_kind(const Track& t, const LifecycleConfig& cfg) {
    const long fss = t.state.frames_since_seen;
    if (fss > cfg.t_retire) return TrackStateKind::Retired;
    if (fss > cfg.t_oob) return TrackStateKind::OOB;
    if (fss > cfg.t_oocv) return TrackStateKind::OOCV;
    if (fss > cfg.t_lost) {
        // Border exits are the physical out-of-view signature and escalate
        // early; elsewhere the track lingers as Lost until t_oocv.
        return t.near_border(cfg) ? TrackStateKind::OOCV : TrackStateKind::Lost;
    }
    return TrackStateKind::Lost;
}

}  // namespace

Track transition(Track track, bool matched, long frame, const LifecycleConfig& cfg,
                 IdAllocator& ids) {
    if (track.state.kind == TrackStateKind::Retired) {
        throw std::runtime_error("retired track reuse");
    }
    if (matched) {
        switch (track.state.kind) {
            case TrackStateKind::Tracked:
            case TrackStateKind::Lost:
                break;  // identity persists across short occlusions
            case TrackStateKind::OOCV:
                track.ids.visibility_id = ids.fresh_visibility();
                break;
            case TrackStateKind::OOB:
                track.ids.visibility_id = ids.fresh_visibility();
                track.ids.intracorporeal_id = ids.fresh_intracorporeal();
                break;
            case TrackStateKind::Retired:
                break;  // unreachable
        }
        track.state = TrackState{TrackStateKind::Tracked, 0};
        track.last_frame = frame;
        return track;
    }

    track.state.frames_since_seen += 1;
    const TrackStateKind next = escalated_kind(track, cfg);
    // States only escalate while unmatched.
    if (static_cast<int>(next) > static_cast<int>(track.state.kind)) {
        track.state.kind = next;
    } else if (track.state.kind == TrackStateKind::Tracked) {
        track.state.kind = TrackStateKind::Lost;
    }
    return track;
}

void update_direction_centroid(Track& track, const Eigen::VectorXd& direction,
                               double old_weight) {
    const Eigen::VectorXd d = normalize_direction(direction);
    if (!track.direction_centroid) {
        track.direction_centroid = d;
        return;
    }
    Eigen::VectorXd mixed = old_weight * (*track.direction_centroid) + (1.0 - old_weight) * d;
    const double n = mixed.norm();
    if (n < 1e-12) {
        // Antipodal cancellation; fall back to the newest direction.
        track.direction_centroid = d;
        return;
    }
    track.direction_centroid = mixed / n;
}

void push_embedding_history(Track& track, const EmbeddingSet& e, std::size_t cap) {
    track.embedding_history.push_back(e);
    while (track.embedding_history.size() > cap) {
        track.embedding_history.pop_front();
    }
}

}  // namespace mptrack
