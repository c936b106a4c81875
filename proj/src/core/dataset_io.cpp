#include "core/dataset_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace inksyn {

using nlohmann::json;

InkFormat ink_format_from_string(const std::string& name) {
  if (name == "jsonl") return InkFormat::jsonl;
  if (name == "svc") return InkFormat::svc;
  raise(Errc::unsupported_format, "unknown ink format '" + name + "'");
}

const char* to_string(InkFormat fmt) { return fmt == InkFormat::jsonl ? "jsonl" : "svc"; }

namespace {

[[noreturn]] void parse_fail(const std::string& name, std::size_t line, const std::string& what) {
  raise(Errc::parse_error, name + ":" + std::to_string(line) + ": " + what);
}

void check_sequence(const InkSequence& seq, const std::string& name, std::size_t line) {
  if (seq.samples.size() < 2)
    parse_fail(name, line, "sequence has " + std::to_string(seq.samples.size()) +
                               " samples; at least 2 required");
  for (std::size_t i = 0; i < seq.samples.size(); ++i) {
    const auto& s = seq.samples[i];
    if (!std::isfinite(s.x) || !std::isfinite(s.y))
      parse_fail(name, line, "non-finite coordinate at sample " + std::to_string(i));
  }
  if (seq.has_timestamps()) {
    for (std::size_t i = 1; i < seq.samples.size(); ++i)
      if (*seq.samples[i].t < *seq.samples[i - 1].t)
        parse_fail(name, line, "timestamps decrease at sample " + std::to_string(i));
  }
}

std::vector<InkSequence> read_jsonl(std::istream& in, const std::string& name) {
  std::vector<InkSequence> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      parse_fail(name, lineno, e.what());
    }
    if (!rec.is_object()) parse_fail(name, lineno, "record is not an object");
    if (!rec.contains("x") || !rec.contains("y")) parse_fail(name, lineno, "missing x/y arrays");
    InkSequence seq;
    try {
      auto xs = rec.at("x").get<std::vector<double>>();
      auto ys = rec.at("y").get<std::vector<double>>();
      std::vector<double> ts;
      if (rec.contains("t") && !rec.at("t").is_null()) ts = rec.at("t").get<std::vector<double>>();
      std::vector<int> pen;
      if (rec.contains("pen") && !rec.at("pen").is_null()) pen = rec.at("pen").get<std::vector<int>>();
      if (ys.size() != xs.size()) parse_fail(name, lineno, "x and y lengths differ");
      if (!ts.empty() && ts.size() != xs.size()) parse_fail(name, lineno, "t length differs from x");
      if (!pen.empty() && pen.size() != xs.size()) parse_fail(name, lineno, "pen length differs from x");
      seq.samples.resize(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        seq.samples[i].x = xs[i];
        seq.samples[i].y = ys[i];
        if (!ts.empty()) seq.samples[i].t = ts[i];
        seq.samples[i].pen_down = pen.empty() ? true : (pen[i] != 0);
      }
      if (rec.contains("label")) seq.label = rec.at("label").get<std::string>();
      if (rec.contains("metadata") && rec.at("metadata").is_object())
        for (const auto& [k, v] : rec.at("metadata").items())
          seq.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    } catch (const json::exception& e) {
      parse_fail(name, lineno, e.what());
    }
    check_sequence(seq, name, lineno);
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<InkSequence> read_svc(std::istream& in, const ColumnMap& columns,
                                  const std::string& name) {
  std::vector<InkSequence> out;
  std::string line;
  std::size_t lineno = 0;
  std::string stem = std::filesystem::path(name).stem().string();
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream head(line);
    long count = -1;
    if (!(head >> count)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;  // blank line between blocks
      parse_fail(name, lineno, "expected a point-count line");
    }
    if (count < 2) parse_fail(name, lineno, "point count " + std::to_string(count) + " < 2");
    InkSequence seq;
    seq.label = stem;
    seq.metadata["source"] = name;
    seq.metadata["block"] = std::to_string(out.size());
    std::size_t header_line = lineno;
    seq.samples.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      if (!std::getline(in, line))
        parse_fail(name, lineno, "unexpected end of file inside block started at line " +
                                     std::to_string(header_line));
      ++lineno;
      std::istringstream row(line);
      std::vector<double> cols;
      double v;
      while (row >> v) cols.push_back(v);
      int needed = std::max(columns.x, columns.y);
      if (columns.t >= 0) needed = std::max(needed, columns.t);
      if (columns.pen >= 0) needed = std::max(needed, columns.pen);
      if (columns.x < 0 || columns.y < 0)
        parse_fail(name, lineno, "column map must provide x and y");
      if (static_cast<int>(cols.size()) <= needed)
        parse_fail(name, lineno, "sample line has " + std::to_string(cols.size()) + " columns");
      InkSample s;
      s.x = cols[static_cast<std::size_t>(columns.x)];
      s.y = cols[static_cast<std::size_t>(columns.y)];
      if (columns.t >= 0) s.t = cols[static_cast<std::size_t>(columns.t)];
      s.pen_down = columns.pen >= 0 ? cols[static_cast<std::size_t>(columns.pen)] != 0.0 : true;
      seq.samples.push_back(s);
    }
    check_sequence(seq, name, header_line);
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace

std::string to_jsonl_record(const InkSequence& seq) {
  json rec;
  rec["label"] = seq.label;
  json xs = json::array(), ys = json::array(), pen = json::array();
  for (const auto& s : seq.samples) {
    xs.push_back(s.x);
    ys.push_back(s.y);
    pen.push_back(s.pen_down ? 1 : 0);
  }
  rec["x"] = std::move(xs);
  rec["y"] = std::move(ys);
  rec["pen"] = std::move(pen);
  if (seq.has_timestamps()) {
    json ts = json::array();
    for (const auto& s : seq.samples) ts.push_back(*s.t);
    rec["t"] = std::move(ts);
  }
  if (!seq.metadata.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : seq.metadata) meta[k] = v;
    rec["metadata"] = std::move(meta);
  }
  return rec.dump();
}

std::vector<InkSequence> read_dataset(std::istream& in, InkFormat fmt, const ColumnMap& columns,
                                      const std::string& stream_name) {
  return fmt == InkFormat::jsonl ? read_jsonl(in, stream_name) : read_svc(in, columns, stream_name);
}

std::vector<InkSequence> read_dataset(const std::string& path, InkFormat fmt,
                                      const ColumnMap& columns) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open " + path);
  return read_dataset(in, fmt, columns, path);
}

void write_dataset(const std::vector<InkSequence>& seqs, std::ostream& out, InkFormat fmt) {
  if (fmt == InkFormat::jsonl) {
    for (const auto& seq : seqs) out << to_jsonl_record(seq) << '\n';
    return;
  }
  // svc: count line then "x y t pen" rows; timestamps default to the sample
  // index when absent so the block stays parseable
  for (const auto& seq : seqs) {
    out << seq.samples.size() << '\n';
    for (std::size_t i = 0; i < seq.samples.size(); ++i) {
      const auto& s = seq.samples[i];
      json x = s.x, y = s.y, t = s.t.has_value() ? json(*s.t) : json(static_cast<double>(i));
      out << x.dump() << ' ' << y.dump() << ' ' << t.dump() << ' ' << (s.pen_down ? 1 : 0) << '\n';
    }
  }
}

void write_dataset(const std::vector<InkSequence>& seqs, const std::string& path, InkFormat fmt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot open " + path + " for writing");
  write_dataset(seqs, out, fmt);
  if (!out) raise(Errc::io_error, "short write to " + path);
}

}  // namespace inksyn
