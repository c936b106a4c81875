#include "core/segmentation.hpp"

#include <cmath>

namespace inksyn {

DerivativeMode derivative_mode_from_string(const std::string& name) {
  if (name == "unit_step") return DerivativeMode::unit_step;
  if (name == "timestamped") return DerivativeMode::timestamped;
  raise(Errc::config_error, "unknown derivative mode '" + name + "'");
}

const char* to_string(DerivativeMode mode) {
  return mode == DerivativeMode::unit_step ? "unit_step" : "timestamped";
}

SegmentationMode segmentation_mode_from_string(const std::string& name) {
  if (name == "none") return SegmentationMode::none;
  if (name == "velocity") return SegmentationMode::velocity;
  raise(Errc::config_error, "unknown segmentation mode '" + name + "'");
}

const char* to_string(SegmentationMode mode) {
  return mode == SegmentationMode::none ? "none" : "velocity";
}

PlacementMode placement_mode_from_string(const std::string& name) {
  if (name == "absolute") return PlacementMode::absolute;
  if (name == "chained") return PlacementMode::chained;
  raise(Errc::config_error, "unknown placement mode '" + name + "'");
}

const char* to_string(PlacementMode mode) {
  return mode == PlacementMode::absolute ? "absolute" : "chained";
}

const char* to_string(BoundaryCause cause) {
  switch (cause) {
    case BoundaryCause::sequence_start: return "sequence_start";
    case BoundaryCause::threshold_crossing_1: return "threshold_crossing_1";
    case BoundaryCause::threshold_crossing_2: return "threshold_crossing_2";
    case BoundaryCause::threshold_crossing_3: return "threshold_crossing_3";
    case BoundaryCause::pen_up: return "pen_up";
    case BoundaryCause::length_split: return "length_split";
    case BoundaryCause::sequence_end: return "sequence_end";
  }
  return "unknown";
}

void SegmentationPolicy::validate() const {
  if (min_len < 2) raise(Errc::config_error, "min_len must be >= 2");
  if (max_len > kMaxModelRows) raise(Errc::config_error, "max_len must be <= 300");
  if (!(min_len < max_len)) raise(Errc::config_error, "min_len must be < max_len");
}

VelocityProfile velocity_profile(const InkSequence& ink, DerivativeMode mode) {
  const std::size_t n = ink.samples.size();
  if (n < 2) raise(Errc::empty_sequence, "velocity profile needs at least 2 samples");
  if (mode == DerivativeMode::timestamped && !ink.has_timestamps())
    raise(Errc::missing_timestamps, "timestamped derivative requested but timestamps are absent");

  VelocityProfile vp;
  vp.v.assign(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto& a = ink.samples[i - 1];
    const auto& b = ink.samples[i];
    double speed = std::hypot(b.x - a.x, b.y - a.y);
    if (mode == DerivativeMode::timestamped) {
      double dt = *b.t - *a.t;
      if (dt == 0.0)
        raise(Errc::zero_dt, "equal consecutive timestamps at sample " + std::to_string(i));
      speed /= dt;
    }
    vp.v[i] = speed;
  }
  double sum = 0.0;
  for (double v : vp.v) sum += v;
  vp.mu = sum / static_cast<double>(n);
  double acc = 0.0;
  for (double v : vp.v) acc += (v - vp.mu) * (v - vp.mu);
  vp.sigma = std::sqrt(acc / static_cast<double>(n));
  return vp;
}

namespace {

struct ProtoSegment {
  std::size_t start, end;
  BoundaryCause cause;
};

void split_long(const ProtoSegment& seg, std::size_t max_len, std::vector<ProtoSegment>& out) {
  std::size_t len = seg.end - seg.start + 1;
  if (len <= max_len) {
    out.push_back(seg);
    return;
  }
  std::size_t mid = seg.start + len / 2;
  split_long({seg.start, mid - 1, seg.cause}, max_len, out);
  split_long({mid, seg.end, BoundaryCause::length_split}, max_len, out);
}

void fill_placement(const InkSequence& ink, std::vector<Segment>& segs) {
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& first = ink.samples[segs[k].start_idx];
    segs[k].placement.origin_x = first.x;
    segs[k].placement.origin_y = first.y;
    segs[k].placement.scale = 1.0;
    segs[k].start_pen_down = first.pen_down;
    if (k > 0) {
      const auto& prev_last = ink.samples[segs[k - 1].end_idx];
      segs[k].gap_dx = first.x - prev_last.x;
      segs[k].gap_dy = first.y - prev_last.y;
    }
  }
}

}  // namespace

std::vector<Segment> segment(const InkSequence& ink, const SegmentationPolicy& policy) {
  policy.validate();
  const std::size_t n = ink.samples.size();
  if (n < 2) raise(Errc::empty_sequence, "segmentation needs at least 2 samples");

  std::vector<ProtoSegment> protos;
  if (policy.mode == SegmentationMode::none) {
    protos.push_back({0, n - 1, BoundaryCause::sequence_start});
  } else {
    VelocityProfile vp = velocity_profile(ink, policy.derivative);
    auto thr = vp.thresholds();
    std::vector<std::pair<std::size_t, BoundaryCause>> bounds;
    for (std::size_t i = 1; i < n; ++i) {
      BoundaryCause cause = BoundaryCause::sequence_start;
      bool hit = false;
      for (int k = 0; k < 3 && !hit; ++k) {
        // exact equality belongs to the lower region
        bool above_prev = vp.v[i - 1] > thr[static_cast<std::size_t>(k)];
        bool above_cur = vp.v[i] > thr[static_cast<std::size_t>(k)];
        if (above_prev != above_cur) {
          cause = static_cast<BoundaryCause>(static_cast<int>(BoundaryCause::threshold_crossing_1) + k);
          hit = true;
        }
      }
      if (ink.samples[i - 1].pen_down && !ink.samples[i].pen_down) {
        cause = BoundaryCause::pen_up;
        hit = true;
      }
      if (hit) bounds.emplace_back(i, cause);
    }
    std::size_t start = 0;
    BoundaryCause cause = BoundaryCause::sequence_start;
    for (const auto& [idx, c] : bounds) {
      protos.push_back({start, idx - 1, cause});
      start = idx;
      cause = c;
    }
    protos.push_back({start, n - 1, cause});

    // merge short segments into their left neighbour; the first one merges right
    bool changed = true;
    while (changed && protos.size() > 1) {
      changed = false;
      for (std::size_t i = 0; i < protos.size(); ++i) {
        if (protos[i].end - protos[i].start + 1 >= policy.min_len) continue;
        if (i > 0) {
          protos[i - 1].end = protos[i].end;
          protos.erase(protos.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          protos[1].start = protos[0].start;
          protos[1].cause = protos[0].cause;
          protos.erase(protos.begin());
        }
        changed = true;
        break;
      }
    }
  }

  std::vector<ProtoSegment> split;
  for (const auto& p : protos) split_long(p, policy.max_len, split);

  std::vector<Segment> out;
  out.reserve(split.size());
  for (const auto& p : split) {
    Segment s;
    s.start_idx = p.start;
    s.end_idx = p.end;
    s.cause = p.cause;
    out.push_back(s);
  }
  fill_placement(ink, out);
  return out;
}

InkSequence slice(const InkSequence& ink, const Segment& seg) {
  if (seg.end_idx >= ink.samples.size() || seg.start_idx > seg.end_idx)
    raise(Errc::shape_mismatch, "segment indices out of range");
  InkSequence out;
  out.label = ink.label;
  out.metadata = ink.metadata;
  out.samples.assign(ink.samples.begin() + static_cast<std::ptrdiff_t>(seg.start_idx),
                     ink.samples.begin() + static_cast<std::ptrdiff_t>(seg.end_idx) + 1);
  return out;
}

InkSequence reassemble(const std::vector<Segment>& segments,
                       const std::vector<InkSequence>& synthetic, PlacementMode mode) {
  if (segments.size() != synthetic.size())
    raise(Errc::count_mismatch, "got " + std::to_string(synthetic.size()) + " synthetic sequences for " +
                                    std::to_string(segments.size()) + " segments");
  if (segments.empty()) raise(Errc::count_mismatch, "no segments to reassemble");

  InkSequence out;
  out.label = synthetic.front().label;
  out.metadata = synthetic.front().metadata;
  double last_x = 0.0, last_y = 0.0;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const auto& piece = synthetic[k];
    if (piece.samples.empty()) raise(Errc::empty_sequence, "synthetic segment " + std::to_string(k) + " is empty");
    double ax, ay;
    if (mode == PlacementMode::absolute || k == 0) {
      ax = segments[k].placement.origin_x;
      ay = segments[k].placement.origin_y;
    } else {
      ax = last_x + segments[k].gap_dx;
      ay = last_y + segments[k].gap_dy;
    }
    double shift_x = ax - piece.samples.front().x;
    double shift_y = ay - piece.samples.front().y;
    for (std::size_t j = 0; j < piece.samples.size(); ++j) {
      InkSample s;
      s.x = piece.samples[j].x + shift_x;
      s.y = piece.samples[j].y + shift_y;
      s.pen_down = (j == 0) ? segments[k].start_pen_down : piece.samples[j].pen_down;
      out.samples.push_back(s);
    }
    last_x = out.samples.back().x;
    last_y = out.samples.back().y;
  }
  return out;
}

}  // namespace inksyn
