#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "core/ink.hpp"

namespace inksyn {

enum class InkFormat { jsonl, svc };

InkFormat ink_format_from_string(const std::string& name);
const char* to_string(InkFormat fmt);

// Column indices for the SVC text format; -1 means the column is absent.
// Defaults follow the common layout: x y timestamp button-state.
struct ColumnMap {
  int x = 0;
  int y = 1;
  int t = 2;
  int pen = 3;
};

// One InkSequence per record. jsonl: one JSON object per line with fields
// x[], y[], optional t[], pen[], label, metadata. svc: repeated blocks of a
// point-count line followed by that many whitespace-separated sample lines;
// the label is the file stem. Sequences with fewer than 2 samples are
// rejected (ParseError) rather than padded.
std::vector<InkSequence> read_dataset(const std::string& path, InkFormat fmt,
                                      const ColumnMap& columns = {});
std::vector<InkSequence> read_dataset(std::istream& in, InkFormat fmt, const ColumnMap& columns,
                                      const std::string& stream_name);

void write_dataset(const std::vector<InkSequence>& seqs, const std::string& path, InkFormat fmt);
void write_dataset(const std::vector<InkSequence>& seqs, std::ostream& out, InkFormat fmt);

// Canonical JSONL encoding of a single sequence (no trailing newline).
std::string to_jsonl_record(const InkSequence& seq);

}  // namespace inksyn
