#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textcx/tokenizer.hpp"

namespace textcx {

enum class TextClass { english, spanish, artificial, other };

std::string to_string(TextClass c);
TextClass parse_class(std::string_view s);
std::optional<TextClass> try_parse_class(std::string_view s);

// One analyzed text, shaped like a row of the published per-text tables.
// Fields that a degenerate profile cannot support (g over a single rank, a
// one-point tail, ...) are left empty rather than invented.
struct TextRecord {
  std::string name;
  TextClass class_label = TextClass::other;
  TextMode mode = TextMode::natural;
  std::uint64_t L = 0;
  std::uint64_t D = 0;
  std::optional<std::size_t> theta;
  double d = 0, h = 0, e = 0, s = 0, c = 0;
  std::optional<double> g;
  std::optional<double> g_tail;
  std::optional<double> J_1D;
  std::optional<double> J_thetaD;
  std::optional<std::uint64_t> L_tail;  // L_{theta,D}
  std::string source_path;
  std::string content_digest;

  bool operator==(const TextRecord&) const = default;
};

// Throws Error describing the first violated invariant
// (d = D/L, e = h, s = 1 - h, c = 4h(1 - h), 1 <= theta <= D, h in [0, 1]).
void check_invariants(const TextRecord& r, double tol = 1e-12);

// Numeric column by its CSV name (L, D, theta, d, h, e, s, c, g, g_tail, J_1D,
// J_thetaD, L_tail). Empty when the record has no value; Error on unknown name.
std::optional<double> record_column(const TextRecord& r, std::string_view column);

// name,class,L,D,theta,d,h,e,s,c,g,g_tail,J_1D,J_thetaD
extern const std::vector<std::string> kRecordCsvColumns;
void write_records_csv(std::ostream& out, std::span<const TextRecord> records);
std::vector<TextRecord> read_records_csv(std::istream& in);

// A row of the transcribed appendix tables, values exactly as printed.
struct AppendixRow {
  TextClass class_label;
  std::string name;
  std::uint64_t L;
  std::uint64_t D;
  double d;
  double h;
  double g;
  double J_1D;
  double J_thetaD;
};

// Columns class,name,L,D,d,h,g,J_1D,J_thetaD; lines starting with '#' skipped.
std::vector<AppendixRow> read_appendix_csv(std::istream& in);
std::vector<AppendixRow> load_appendix_csv(const std::string& path);

// d recomputed as D/L; e, s, c derived from the printed h; theta, g_tail and
// L_tail unknown.
TextRecord to_record(const AppendixRow& row);

}  // namespace textcx
