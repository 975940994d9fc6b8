#include "textcx/record.hpp"

#include <cmath>
#include <fstream>

#include "textcx/csv.hpp"
#include "textcx/error.hpp"
#include "textcx/metrics.hpp"

namespace textcx {

const std::vector<std::string> kRecordCsvColumns = {"name", "class", "L",   "D",      "theta", "d",    "h",
                                                    "e",    "s",     "c",   "g",      "g_tail", "J_1D", "J_thetaD"};

std::string to_string(TextClass c) {
  switch (c) {
    case TextClass::english:
      return "english";
    case TextClass::spanish:
      return "spanish";
    case TextClass::artificial:
      return "artificial";
    default:
      return "other";
  }
}

std::optional<TextClass> try_parse_class(std::string_view s) {
  if (s == "english") return TextClass::english;
  if (s == "spanish") return TextClass::spanish;
  if (s == "artificial") return TextClass::artificial;
  if (s == "other") return TextClass::other;
  return std::nullopt;
}

TextClass parse_class(std::string_view s) {
  if (auto c = try_parse_class(s)) return *c;
  throw Error("unknown class '" + std::string(s) + "' (expected english|spanish|artificial|other)");
}

void check_invariants(const TextRecord& r, double tol) {
  auto fail = [&](const std::string& what) { throw Error("record '" + r.name + "': " + what); };
  if (r.L < 1) fail("L must be >= 1");
  if (r.D < 1 || r.D > r.L) fail("D must lie in [1, L]");
  if (std::abs(r.d - static_cast<double>(r.D) / static_cast<double>(r.L)) > tol) fail("d != D/L");
  if (r.h < 0 || r.h > 1) fail("h outside [0, 1]");
  if (std::abs(r.e - r.h) > tol) fail("e != h");
  if (std::abs(r.s - (1 - r.h)) > tol) fail("s != 1 - h");
  if (std::abs(r.c - 4 * r.h * (1 - r.h)) > tol) fail("c != 4h(1 - h)");
  if (r.theta && (*r.theta < 1 || *r.theta > r.D)) fail("theta outside [1, D]");
}

std::optional<double> record_column(const TextRecord& r, std::string_view column) {
  if (column == "L") return static_cast<double>(r.L);
  if (column == "D") return static_cast<double>(r.D);
  if (column == "theta") return r.theta ? std::optional<double>(static_cast<double>(*r.theta)) : std::nullopt;
  if (column == "d") return r.d;
  if (column == "h") return r.h;
  if (column == "e") return r.e;
  if (column == "s") return r.s;
  if (column == "c") return r.c;
  if (column == "g") return r.g;
  if (column == "g_tail") return r.g_tail;
  if (column == "J_1D") return r.J_1D;
  if (column == "J_thetaD") return r.J_thetaD;
  if (column == "L_tail") return r.L_tail ? std::optional<double>(static_cast<double>(*r.L_tail)) : std::nullopt;
  throw Error("unknown record column '" + std::string(column) + "'");
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? csv::format_double(*v) : std::string(); }

std::optional<double> parse_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return csv::parse_double(s);
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const TextRecord> records) {
  out << csv::join(kRecordCsvColumns) << '\n';
  for (const auto& r : records) {
    out << csv::join({r.name, to_string(r.class_label), std::to_string(r.L), std::to_string(r.D),
                      r.theta ? std::to_string(*r.theta) : std::string(), csv::format_double(r.d),
                      csv::format_double(r.h), csv::format_double(r.e), csv::format_double(r.s),
                      csv::format_double(r.c), opt(r.g), opt(r.g_tail), opt(r.J_1D), opt(r.J_thetaD)})
        << '\n';
  }
}

std::vector<TextRecord> read_records_csv(std::istream& in) {
  auto header = csv::read_record(in);
  if (!header || *header != kRecordCsvColumns) throw IoError("records CSV: unexpected header");
  std::vector<TextRecord> out;
  while (auto rec = csv::read_record(in)) {
    if (rec->size() == 1 && (*rec)[0].empty()) continue;
    if (rec->size() != kRecordCsvColumns.size()) throw IoError("records CSV: wrong field count");
    const auto& f = *rec;
    TextRecord r;
    r.name = f[0];
    r.class_label = parse_class(f[1]);
    r.mode = r.class_label == TextClass::artificial ? TextMode::artificial : TextMode::natural;
    r.L = static_cast<std::uint64_t>(csv::parse_integer(f[2]));
    r.D = static_cast<std::uint64_t>(csv::parse_integer(f[3]));
    if (!f[4].empty()) r.theta = static_cast<std::size_t>(csv::parse_integer(f[4]));
    r.d = csv::parse_double(f[5]);
    r.h = csv::parse_double(f[6]);
    r.e = csv::parse_double(f[7]);
    r.s = csv::parse_double(f[8]);
    r.c = csv::parse_double(f[9]);
    r.g = parse_opt(f[10]);
    r.g_tail = parse_opt(f[11]);
    r.J_1D = parse_opt(f[12]);
    r.J_thetaD = parse_opt(f[13]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<AppendixRow> read_appendix_csv(std::istream& in) {
  static const std::vector<std::string> kHeader = {"class", "name", "L", "D", "d", "h", "g", "J_1D", "J_thetaD"};
  std::vector<AppendixRow> rows;
  bool header_seen = false;
  while (true) {
    const auto c = in.peek();
    if (c == std::char_traits<char>::eof()) break;
    if (c == '#') {
      std::string skip;
      std::getline(in, skip);
      continue;
    }
    auto rec = csv::read_record(in);
    if (!rec) break;
    if (rec->size() == 1 && (*rec)[0].empty()) continue;
    if (!header_seen) {
      if (*rec != kHeader) throw IoError("appendix CSV: unexpected header");
      header_seen = true;
      continue;
    }
    if (rec->size() != kHeader.size()) throw IoError("appendix CSV: wrong field count");
    const auto& f = *rec;
    rows.push_back({parse_class(f[0]), f[1], static_cast<std::uint64_t>(csv::parse_integer(f[2])),
                    static_cast<std::uint64_t>(csv::parse_integer(f[3])), csv::parse_double(f[4]),
                    csv::parse_double(f[5]), csv::parse_double(f[6]), csv::parse_double(f[7]),
                    csv::parse_double(f[8])});
  }
  if (!header_seen) throw IoError("appendix CSV: missing header");
  return rows;
}

std::vector<AppendixRow> load_appendix_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return read_appendix_csv(in);
}

TextRecord to_record(const AppendixRow& row) {
  TextRecord r;
  r.name = row.name;
  r.class_label = row.class_label;
  r.mode = row.class_label == TextClass::artificial ? TextMode::artificial : TextMode::natural;
  r.L = row.L;
  r.D = row.D;
  const auto m = measures_from(static_cast<double>(row.D) / static_cast<double>(row.L), row.h);
  r.d = m.d;
  r.h = m.h;
  r.e = m.e;
  r.s = m.s;
  r.c = m.c;
  r.g = row.g;
  r.J_1D = row.J_1D;
  r.J_thetaD = row.J_thetaD;
  return r;
}

}  // namespace textcx
