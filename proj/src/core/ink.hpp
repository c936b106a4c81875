#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace inksyn {

struct InkSample {
  double x = 0.0;
  double y = 0.0;
  std::optional<double> t;  // seconds; absent when the device gave none
  bool pen_down = true;     // whether the move into this sample was drawn
};

struct InkSequence {
  std::vector<InkSample> samples;
  std::string label;  // digit class or subject id
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return samples.size(); }
  bool has_timestamps() const;
};

// Offset row with a 3-way one-hot pen state attached to the destination point:
// p1 = the move into the destination was drawn (pen on surface, stroke
// continues), p2 = the pen lifted after the previous point so the move was
// made in the air, p3 = end of sequence. The final row of every sequence has
// p3 = 1 and is the only row with p3 = 1.
struct Stroke5Row {
  double dx = 0.0;
  double dy = 0.0;
  int p1 = 0;
  int p2 = 0;
  int p3 = 0;
};

struct Stroke5Sequence {
  std::vector<Stroke5Row> rows;
  double origin_x = 0.0;
  double origin_y = 0.0;
  double scale = 1.0;  // multiply offsets by this to recover input units

  std::size_t size() const { return rows.size(); }
};

struct NormalizationRecord {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double scale = 1.0;
};

// Hard input-length ceiling of the sequence model.
inline constexpr std::size_t kMaxModelRows = 300;

// Raises MalformedRows unless every row is a valid one-hot and exactly the
// last row carries p3.
void validate_stroke5(const Stroke5Sequence& s5);

// Offset encoding. Requires >= 2 samples (EmptySequence otherwise). Pen bits
// describe the state after arriving at each destination sample; the sequence
// convention is pen-down at the first sample and a drawn move into the last
// one (the terminal row carries p3 regardless).
Stroke5Sequence to_stroke5(const InkSequence& ink);

// Inverse of to_stroke5: cumulative sum of scaled offsets from the origin.
// Raises MalformedRows when the one-hot invariant is violated.
InkSequence from_stroke5(const Stroke5Sequence& s5);

// Pooled population standard deviation of all dx and dy values.
double offset_std(const Stroke5Sequence& seq);
double offset_std(const std::vector<Stroke5Sequence>& corpus);

struct NormalizeResult {
  Stroke5Sequence seq;
  NormalizationRecord record;
  bool degenerate = false;  // scale was 0 or non-finite; fell back to 1
};

// Divide offsets by `scale` (a corpus-level statistic, or anything the caller
// chose). A zero/non-finite scale is signalled via `degenerate` and replaced
// by 1 so the result is always usable.
NormalizeResult normalize(const Stroke5Sequence& s5, double scale);

// Same, with the scale computed from this segment's own offsets.
NormalizeResult normalize_per_segment(const Stroke5Sequence& s5);

Stroke5Sequence denormalize(const Stroke5Sequence& s5, const NormalizationRecord& record);

}  // namespace inksyn
