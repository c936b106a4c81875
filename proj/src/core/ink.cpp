#include "core/ink.hpp"

#include <cmath>

namespace inksyn {

bool InkSequence::has_timestamps() const {
  if (samples.empty()) return false;
  for (const auto& s : samples)
    if (!s.t.has_value()) return false;
  return true;
}

void validate_stroke5(const Stroke5Sequence& s5) {
  if (s5.rows.empty()) raise(Errc::malformed_rows, "stroke-5 sequence has no rows");
  for (std::size_t i = 0; i < s5.rows.size(); ++i) {
    const auto& r = s5.rows[i];
    int bits[3] = {r.p1, r.p2, r.p3};
    int ones = 0;
    for (int b : bits) {
      if (b != 0 && b != 1) raise(Errc::malformed_rows, "pen bit outside {0,1} at row " + std::to_string(i));
      ones += b;
    }
    if (ones != 1) raise(Errc::malformed_rows, "pen bits not one-hot at row " + std::to_string(i));
    bool last = (i + 1 == s5.rows.size());
    if (r.p3 != (last ? 1 : 0))
      raise(Errc::malformed_rows, "p3 must mark exactly the final row (row " + std::to_string(i) + ")");
    if (!std::isfinite(r.dx) || !std::isfinite(r.dy))
      raise(Errc::malformed_rows, "non-finite offset at row " + std::to_string(i));
  }
}

Stroke5Sequence to_stroke5(const InkSequence& ink) {
  if (ink.samples.size() < 2)
    raise(Errc::empty_sequence, "need at least 2 samples, got " + std::to_string(ink.samples.size()));
  Stroke5Sequence out;
  out.origin_x = ink.samples.front().x;
  out.origin_y = ink.samples.front().y;
  out.scale = 1.0;
  out.rows.reserve(ink.samples.size() - 1);
  for (std::size_t i = 0; i + 1 < ink.samples.size(); ++i) {
    const auto& a = ink.samples[i];
    const auto& b = ink.samples[i + 1];
    Stroke5Row row;
    row.dx = b.x - a.x;
    row.dy = b.y - a.y;
    if (i + 2 == ink.samples.size())
      row.p3 = 1;
    else if (b.pen_down)
      row.p1 = 1;
    else
      row.p2 = 1;
    out.rows.push_back(row);
  }
  return out;
}

InkSequence from_stroke5(const Stroke5Sequence& s5) {
  validate_stroke5(s5);
  InkSequence out;
  out.samples.reserve(s5.rows.size() + 1);
  InkSample first;
  first.x = s5.origin_x;
  first.y = s5.origin_y;
  first.pen_down = true;
  out.samples.push_back(first);
  double x = s5.origin_x;
  double y = s5.origin_y;
  for (const auto& r : s5.rows) {
    x += r.dx * s5.scale;
    y += r.dy * s5.scale;
    InkSample s;
    s.x = x;
    s.y = y;
    s.pen_down = r.p2 ? false : true;  // terminal rows count as drawn moves
    out.samples.push_back(s);
  }
  return out;
}

double offset_std(const Stroke5Sequence& seq) {
  double sum = 0.0, sum2 = 0.0;
  std::size_t n = 0;
  for (const auto& r : seq.rows) {
    sum += r.dx + r.dy;
    sum2 += r.dx * r.dx + r.dy * r.dy;
    n += 2;
  }
  if (n == 0) return 0.0;
  double mean = sum / static_cast<double>(n);
  double var = sum2 / static_cast<double>(n) - mean * mean;
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

double offset_std(const std::vector<Stroke5Sequence>& corpus) {
  double sum = 0.0, sum2 = 0.0;
  std::size_t n = 0;
  for (const auto& seq : corpus) {
    for (const auto& r : seq.rows) {
      sum += r.dx + r.dy;
      sum2 += r.dx * r.dx + r.dy * r.dy;
      n += 2;
    }
  }
  if (n == 0) return 0.0;
  double mean = sum / static_cast<double>(n);
  double var = sum2 / static_cast<double>(n) - mean * mean;
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

NormalizeResult normalize(const Stroke5Sequence& s5, double scale) {
  if (s5.rows.empty()) raise(Errc::empty_sequence, "cannot normalize an empty sequence");
  NormalizeResult out;
  out.degenerate = !(std::isfinite(scale) && scale > 0.0);
  double s = out.degenerate ? 1.0 : scale;
  out.seq = s5;
  for (auto& r : out.seq.rows) {
    r.dx /= s;
    r.dy /= s;
  }
  out.seq.scale = s5.scale * s;
  out.record.origin_x = s5.origin_x;
  out.record.origin_y = s5.origin_y;
  out.record.scale = s;
  return out;
}

NormalizeResult normalize_per_segment(const Stroke5Sequence& s5) {
  if (s5.rows.empty()) raise(Errc::empty_sequence, "cannot normalize an empty sequence");
  return normalize(s5, offset_std(s5));
}

Stroke5Sequence denormalize(const Stroke5Sequence& s5, const NormalizationRecord& record) {
  Stroke5Sequence out = s5;
  for (auto& r : out.rows) {
    r.dx *= record.scale;
    r.dy *= record.scale;
  }
  out.scale = s5.scale / record.scale;
  out.origin_x = record.origin_x;
  out.origin_y = record.origin_y;
  return out;
}

}  // namespace inksyn
