#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/ink.hpp"

namespace inksyn {

enum class DerivativeMode { unit_step, timestamped };

DerivativeMode derivative_mode_from_string(const std::string& name);
const char* to_string(DerivativeMode mode);

struct VelocityProfile {
  std::vector<double> v;  // length N, v[0] = 0
  double mu = 0.0;
  double sigma = 0.0;  // population standard deviation

  // {mu - sigma, mu, mu + sigma}
  std::array<double, 3> thresholds() const { return {mu - sigma, mu, mu + sigma}; }
};

enum class BoundaryCause {
  sequence_start,
  threshold_crossing_1,  // mu - sigma
  threshold_crossing_2,  // mu
  threshold_crossing_3,  // mu + sigma
  pen_up,
  length_split,  // midpoint split of a segment above max_len
  sequence_end,
};

const char* to_string(BoundaryCause cause);

struct Segment {
  std::size_t start_idx = 0;  // inclusive indices into the parent sequence
  std::size_t end_idx = 0;
  BoundaryCause cause = BoundaryCause::sequence_start;  // why this segment starts here
  NormalizationRecord placement;                        // origin = original start coordinates
  // displacement from the previous segment's last point to this segment's
  // first point (zero for the first segment); used by chained reassembly
  double gap_dx = 0.0;
  double gap_dy = 0.0;
  bool start_pen_down = true;

  std::size_t length() const { return end_idx - start_idx + 1; }
};

enum class SegmentationMode { none, velocity };

SegmentationMode segmentation_mode_from_string(const std::string& name);
const char* to_string(SegmentationMode mode);

struct SegmentationPolicy {
  SegmentationMode mode = SegmentationMode::velocity;
  std::size_t min_len = 5;
  std::size_t max_len = 250;  // safety margin under the 300-row model limit
  DerivativeMode derivative = DerivativeMode::unit_step;

  void validate() const;
};

// v[n] = sqrt(dx^2 + dy^2) of consecutive samples (divided by dt in
// timestamped mode); v[0] = 0 so |v| = N and no crossing can occur before
// index 1. mu/sigma are taken over all N entries.
VelocityProfile velocity_profile(const InkSequence& ink, DerivativeMode mode);

// Boundaries at every strict sign change of v - T against the three profile
// thresholds and at every pen-down -> pen-up transition. Segments shorter
// than min_len merge into their left neighbour (the first segment merges
// right); segments longer than max_len split at their midpoint recursively.
// A value exactly on a threshold belongs to the lower region.
std::vector<Segment> segment(const InkSequence& ink, const SegmentationPolicy& policy);

// The raw sub-sequence a segment covers, metadata/label inherited.
InkSequence slice(const InkSequence& ink, const Segment& seg);

enum class PlacementMode { absolute, chained };

PlacementMode placement_mode_from_string(const std::string& name);
const char* to_string(PlacementMode mode);

// Stitch one synthetic sequence per segment back into a whole trajectory, in
// the original segment order. absolute: each piece is translated so its first
// point lands on the original segment's start. chained: each piece continues
// from the previous piece's last point, preserving the original inter-segment
// displacement. The first sample of each piece takes the original boundary's
// pen state.
InkSequence reassemble(const std::vector<Segment>& segments,
                       const std::vector<InkSequence>& synthetic, PlacementMode mode);

}  // namespace inksyn
