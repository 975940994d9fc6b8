#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textcx/dialect.hpp"
#include "textcx/models.hpp"
#include "textcx/profile.hpp"
#include "textcx/record.hpp"
#include "textcx/stats.hpp"
#include "textcx/tokenizer.hpp"

namespace textcx {

struct AnalysisOptions {
  TextMode mode = TextMode::natural;
  Language lang = Language::other;
  const CodeDialect* dialect = nullptr;  // required for artificial mode
  TextClass class_label = TextClass::other;
  std::string name;
  std::string source_path;
};

// tokenize -> profile -> metrics -> Zipf fits. Throws Error("empty text") when
// tokenization yields nothing; Zipf failures leave the fields empty.
TextRecord analyze_text(std::string_view source, const AnalysisOptions& options, Diagnostics* diag = nullptr,
                        FrequencyProfile* profile_out = nullptr);
TextRecord analyze_tokens(const TokenStream& tokens, const AnalysisOptions& options,
                          FrequencyProfile* profile_out = nullptr);

// Hex SHA-256 of the tokens joined by '\n'.
std::string token_digest(const TokenStream& tokens);

struct LabelFits {
  std::optional<HeapsFit> heaps;
  std::optional<AlphaFit> alpha;
};

// Persistent collection of analyzed texts. Record names are unique.
struct Library {
  std::vector<TextRecord> records;
  std::map<std::string, LabelFits> fits;
  std::map<std::string, FrequencyProfile> profiles;  // optional, by record name
  std::map<std::string, std::string> config;         // echo of how it was built
  std::optional<std::string> created;
  std::optional<std::string> updated;

  // Throws Error on a duplicate name.
  void add(TextRecord record);
  const TextRecord* find(std::string_view name) const;
  void sort_by_name();
};

struct IngestConfig {
  DialectTable dialects = DialectTable::builtin();
  std::map<std::string, TextMode> mode_by_extension;  // ".txt" -> natural, ...
  TextClass default_class = TextClass::other;
  unsigned jobs = 0;  // 0: hardware concurrency
  bool keep_profiles = false;
};

// Walks `root` recursively. The class of a file comes from manifest.json at
// the root when it lists the file, otherwise from its first directory
// component (english/, spanish/, artificial/, other/), otherwise the default.
// Unreadable or undecodable files are reported in `diag` and skipped.
// Records come back sorted by name whatever the degree of parallelism.
Library ingest_directory(const std::filesystem::path& root, const IngestConfig& config,
                         Diagnostics* diag = nullptr);

// Records matching `label`: a class name, or several joined with '+'
// ("english+spanish").
std::vector<const TextRecord*> select(const Library& lib, std::string_view label);

// Heaps and alpha fits for every class with enough data.
void fit_library(Library& lib);

struct GroupSummary {
  std::string label;
  std::size_t n = 0;
  std::optional<Descriptive> J1D;
  std::optional<Descriptive> JthetaD;
  std::optional<double> corr_J1D_L;
  std::optional<double> corr_JthetaD_Ltail;
  // True when some record lacked L_{theta,D} and L was used instead.
  bool tail_length_is_L = false;
};

// Throws InsufficientDataError with fewer than two matching records.
GroupSummary group_summary(const Library& lib, std::string_view label);

std::vector<double> column_values(std::span<const TextRecord* const> records, std::string_view column);
TTestResult compare_groups(const Library& lib, std::string_view label_a, std::string_view label_b,
                           std::string_view column, TTestKind kind = TTestKind::welch);

struct MergedRow {
  std::size_t rank;
  std::string symbol;
  double use_percent;
};

struct MergedTable {
  std::vector<MergedRow> rows;
  FrequencyProfile profile;
};

MergedTable merged_language_profile(std::span<const FrequencyProfile* const> profiles);
// Uses lib.profiles; throws Error if no record of `label` has a stored profile.
MergedTable merged_language_profile(const Library& lib, std::string_view label);

enum class RecordFormat { csv, json };

void export_records(const Library& lib, RecordFormat format, const std::filesystem::path& destination);
std::vector<TextRecord> import_records(const std::filesystem::path& source);

std::string library_to_json(const Library& lib);
Library library_from_json(std::string_view text);
void save_library(const Library& lib, const std::filesystem::path& path);
// Accepts a library JSON, a records CSV, or the appendix fixture CSV. Names
// repeated in the fixture get " [2]", " [3]", ... appended.
Library load_library(const std::filesystem::path& path);

std::string records_to_json(std::span<const TextRecord> records);

}  // namespace textcx
