#include "textcx/corpus.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "textcx/csv.hpp"
#include "textcx/error.hpp"
#include "textcx/metrics.hpp"
#include "textcx/zipf.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace textcx {

// ---------------------------------------------------------------------------
// Single text

std::string token_digest(const TokenStream& tokens) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw Error("SHA-256 unavailable");
  for (std::size_t i = 0; i < tokens.tokens.size(); ++i) {
    if (i) EVP_DigestUpdate(ctx.get(), "\n", 1);
    EVP_DigestUpdate(ctx.get(), tokens.tokens[i].data(), tokens.tokens[i].size());
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

TextRecord analyze_tokens(const TokenStream& tokens, const AnalysisOptions& options, FrequencyProfile* profile_out) {
  if (tokens.empty()) throw Error("empty text" + (options.name.empty() ? std::string() : ": " + options.name));
  auto profile = build_profile(tokens);
  const auto m = complexity_measures(profile);

  TextRecord r;
  r.name = options.name;
  r.class_label = options.class_label;
  r.mode = tokens.mode;
  r.L = profile.length();
  r.D = profile.diversity();
  r.theta = profile.tail_start();
  r.d = m.d;
  r.h = m.h;
  r.e = m.e;
  r.s = m.s;
  r.c = m.c;
  const std::size_t D = profile.diversity();
  const std::size_t theta = profile.tail_start();
  r.L_tail = segment_count(profile, theta, D);
  if (D >= 2) {
    const auto whole = fit_segment(profile, 1, D);
    r.g = whole.g;
    r.J_1D = whole.deviation;
    if (theta < D) {
      const auto tail = fit_segment(profile, theta, D);
      r.g_tail = tail.g;
      r.J_thetaD = tail.deviation;
    }
  }
  r.source_path = options.source_path;
  r.content_digest = token_digest(tokens);
  if (profile_out) *profile_out = std::move(profile);
  return r;
}

TextRecord analyze_text(std::string_view source, const AnalysisOptions& options, Diagnostics* diag,
                        FrequencyProfile* profile_out) {
  TokenStream tokens;
  if (options.mode == TextMode::natural) {
    tokens = tokenize_natural(source, options.lang, options.name);
  } else {
    if (!options.dialect) throw Error("artificial-mode analysis needs a dialect");
    tokens = tokenize_artificial(source, *options.dialect, diag, options.name);
  }
  return analyze_tokens(tokens, options, profile_out);
}

// ---------------------------------------------------------------------------
// Library

void Library::add(TextRecord record) {
  if (find(record.name)) throw Error("duplicate record name '" + record.name + "'");
  records.push_back(std::move(record));
}

const TextRecord* Library::find(std::string_view name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

void Library::sort_by_name() {
  std::sort(records.begin(), records.end(), [](const TextRecord& a, const TextRecord& b) { return a.name < b.name; });
}

namespace {

struct FileSpec {
  fs::path path;
  std::string name;
  TextClass class_label;
  std::optional<TextMode> mode;
  std::optional<Language> lang;
  std::optional<std::string> dialect;
};

struct FileOutcome {
  std::optional<TextRecord> record;
  std::optional<FrequencyProfile> profile;
  Diagnostics messages;
};

Language language_for(TextClass c) {
  switch (c) {
    case TextClass::english:
      return Language::english;
    case TextClass::spanish:
      return Language::spanish;
    default:
      return Language::other;
  }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + p.string());
  return ss.str();
}

FileOutcome analyze_file(const FileSpec& spec, const IngestConfig& config) {
  FileOutcome out;
  try {
    const auto text = read_file(spec.path);
    const auto ext = spec.path.extension().string();
    const CodeDialect* dialect = spec.dialect ? &config.dialects.by_name(*spec.dialect)
                                              : &config.dialects.for_extension(ext);
    TextMode mode = TextMode::natural;
    if (spec.mode) {
      mode = *spec.mode;
    } else if (auto it = config.mode_by_extension.find(ext); it != config.mode_by_extension.end()) {
      mode = it->second;
    } else if (config.dialects.knows_extension(ext) || spec.class_label == TextClass::artificial) {
      mode = TextMode::artificial;
    }
    AnalysisOptions opt;
    opt.mode = mode;
    opt.lang = spec.lang.value_or(language_for(spec.class_label));
    opt.dialect = dialect;
    opt.class_label = spec.class_label;
    opt.name = spec.name;
    opt.source_path = spec.path.generic_string();
    Diagnostics local;
    FrequencyProfile profile;
    out.record = analyze_text(text, opt, &local, &profile);
    for (auto& m : local) out.messages.push_back(spec.name + ": " + m);
    if (config.keep_profiles) out.profile = std::move(profile);
  } catch (const Error& e) {
    out.messages.push_back("skipped " + spec.path.string() + ": " + e.what());
  }
  return out;
}

std::vector<FileSpec> collect_files(const fs::path& root, const IngestConfig& config) {
  json manifest;
  const auto manifest_path = root / "manifest.json";
  if (fs::exists(manifest_path)) {
    try {
      manifest = json::parse(read_file(manifest_path));
    } catch (const json::exception& e) {
      throw IoError(manifest_path.string() + ": " + e.what());
    }
  }
  const json files = manifest.is_object() ? manifest.value("files", json::object()) : json::object();
  const TextClass fallback = manifest.is_object() && manifest.contains("default_class")
                                 ? parse_class(manifest["default_class"].get<std::string>())
                                 : config.default_class;

  std::vector<FileSpec> specs;
  std::error_code ec;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw IoError("cannot read directory " + root.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), root).generic_string();
    const auto filename = entry.path().filename().string();
    if (filename.empty() || filename[0] == '.' || rel == "manifest.json") continue;

    FileSpec spec{entry.path(), rel, fallback, std::nullopt, std::nullopt, std::nullopt};
    const auto first = fs::path(rel).begin()->string();
    if (rel.find('/') != std::string::npos)
      if (auto c = try_parse_class(first)) spec.class_label = *c;
    if (files.contains(rel)) {
      const auto& m = files[rel];
      if (m.contains("class")) spec.class_label = parse_class(m["class"].get<std::string>());
      if (m.contains("mode")) spec.mode = parse_mode(m["mode"].get<std::string>());
      if (m.contains("lang")) spec.lang = parse_language(m["lang"].get<std::string>());
      if (m.contains("dialect")) spec.dialect = m["dialect"].get<std::string>();
      if (m.contains("name")) spec.name = m["name"].get<std::string>();
    }
    specs.push_back(std::move(spec));
  }
  std::sort(specs.begin(), specs.end(), [](const FileSpec& a, const FileSpec& b) { return a.name < b.name; });
  return specs;
}

}  // namespace

Library ingest_directory(const fs::path& root, const IngestConfig& config, Diagnostics* diag) {
  if (!fs::is_directory(root)) throw IoError("not a readable directory: " + root.string());
  const auto specs = collect_files(root, config);

  std::vector<FileOutcome> outcomes(specs.size());
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(specs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) outcomes[i] = analyze_file(specs[i], config);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  Library lib;
  lib.config["root"] = root.generic_string();
  lib.config["keep_profiles"] = config.keep_profiles ? "true" : "false";
  lib.config["default_class"] = to_string(config.default_class);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto& o = outcomes[i];
    if (diag) diag->insert(diag->end(), o.messages.begin(), o.messages.end());
    if (!o.record) continue;
    if (lib.find(o.record->name)) {
      if (diag) diag->push_back("skipped duplicate name " + o.record->name);
      continue;
    }
    if (o.profile) lib.profiles.emplace(o.record->name, std::move(*o.profile));
    lib.records.push_back(std::move(*o.record));
  }
  lib.sort_by_name();
  return lib;
}

std::vector<const TextRecord*> select(const Library& lib, std::string_view label) {
  std::vector<TextClass> classes;
  std::size_t start = 0;
  while (start <= label.size()) {
    const auto plus = label.find('+', start);
    const auto part = label.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    classes.push_back(parse_class(part));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  std::vector<const TextRecord*> out;
  for (const auto& r : lib.records)
    if (std::find(classes.begin(), classes.end(), r.class_label) != classes.end()) out.push_back(&r);
  return out;
}

void fit_library(Library& lib) {
  lib.fits.clear();
  for (auto cls : {TextClass::english, TextClass::spanish, TextClass::artificial, TextClass::other}) {
    const auto label = to_string(cls);
    const auto recs = select(lib, label);
    if (recs.empty()) continue;
    std::vector<HeapsPoint> hp;
    std::vector<EntropyPoint> ep;
    for (const auto* r : recs) {
      hp.push_back({static_cast<double>(r->L), static_cast<double>(r->D)});
      ep.push_back({r->d, r->h});
    }
    LabelFits fits;
    try {
      fits.heaps = fit_heaps(hp);
    } catch (const Error&) {
    }
    try {
      fits.alpha = fit_alpha(ep);
    } catch (const Error&) {
    }
    if (fits.heaps || fits.alpha) lib.fits[label] = fits;
  }
}

std::vector<double> column_values(std::span<const TextRecord* const> records, std::string_view column) {
  std::vector<double> out;
  for (const auto* r : records)
    if (auto v = record_column(*r, column)) out.push_back(*v);
  return out;
}

namespace {

template <typename F>
std::optional<double> try_correlation(F&& f) {
  try {
    return f();
  } catch (const InsufficientDataError&) {
    return std::nullopt;
  }
}

}  // namespace

GroupSummary group_summary(const Library& lib, std::string_view label) {
  const auto recs = select(lib, label);
  if (recs.size() < 2)
    throw InsufficientDataError("group '" + std::string(label) + "' has " + std::to_string(recs.size()) +
                                " records; at least 2 needed");
  GroupSummary gs;
  gs.label = std::string(label);
  gs.n = recs.size();

  std::vector<double> j1, l1, jt, lt;
  for (const auto* r : recs) {
    if (r->J_1D) {
      j1.push_back(*r->J_1D);
      l1.push_back(static_cast<double>(r->L));
    }
    if (r->J_thetaD) {
      jt.push_back(*r->J_thetaD);
      if (r->L_tail) {
        lt.push_back(static_cast<double>(*r->L_tail));
      } else {
        lt.push_back(static_cast<double>(r->L));
        gs.tail_length_is_L = true;
      }
    }
  }
  if (j1.size() >= 2) {
    gs.J1D = descriptive_stats(j1);
    gs.corr_J1D_L = try_correlation([&] { return pearson_correlation(j1, l1); });
  }
  if (jt.size() >= 2) {
    gs.JthetaD = descriptive_stats(jt);
    gs.corr_JthetaD_Ltail = try_correlation([&] { return pearson_correlation(jt, lt); });
  }
  return gs;
}

TTestResult compare_groups(const Library& lib, std::string_view label_a, std::string_view label_b,
                           std::string_view column, TTestKind kind) {
  const auto a = select(lib, label_a);
  const auto b = select(lib, label_b);
  return t_test(column_values(a, column), column_values(b, column), kind);
}

MergedTable merged_language_profile(std::span<const FrequencyProfile* const> profiles) {
  if (profiles.empty()) throw Error("merged profile needs at least one profile");
  std::map<std::string, std::uint64_t> counts;
  for (const auto* p : profiles)
    for (const auto& e : p->entries()) counts[e.symbol] += e.frequency;
  MergedTable t;
  t.profile = FrequencyProfile::from_counts(counts);
  const auto total = static_cast<double>(t.profile.length());
  t.rows.reserve(t.profile.diversity());
  for (std::size_t r = 1; r <= t.profile.diversity(); ++r) {
    const auto& e = t.profile.entries()[r - 1];
    t.rows.push_back({r, e.symbol, 100.0 * static_cast<double>(e.frequency) / total});
  }
  return t;
}

MergedTable merged_language_profile(const Library& lib, std::string_view label) {
  std::vector<const FrequencyProfile*> ps;
  for (const auto* r : select(lib, label))
    if (auto it = lib.profiles.find(r->name); it != lib.profiles.end()) ps.push_back(&it->second);
  if (ps.empty()) throw Error("no stored profiles for label '" + std::string(label) + "'");
  return merged_language_profile(ps);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_double(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<double>();
}

json record_json(const TextRecord& r) {
  json j;
  j["name"] = r.name;
  j["class"] = to_string(r.class_label);
  j["mode"] = to_string(r.mode);
  j["L"] = r.L;
  j["D"] = r.D;
  j["theta"] = r.theta ? json(*r.theta) : json(nullptr);
  j["d"] = r.d;
  j["h"] = r.h;
  j["e"] = r.e;
  j["s"] = r.s;
  j["c"] = r.c;
  j["g"] = opt_json(r.g);
  j["g_tail"] = opt_json(r.g_tail);
  j["J_1D"] = opt_json(r.J_1D);
  j["J_thetaD"] = opt_json(r.J_thetaD);
  j["L_tail"] = r.L_tail ? json(*r.L_tail) : json(nullptr);
  j["source_path"] = r.source_path;
  j["content_digest"] = r.content_digest;
  return j;
}

TextRecord record_from_json(const json& j) {
  TextRecord r;
  r.name = j.at("name").get<std::string>();
  r.class_label = parse_class(j.at("class").get<std::string>());
  r.mode = parse_mode(j.value("mode", std::string(r.class_label == TextClass::artificial ? "artificial" : "natural")));
  r.L = j.at("L").get<std::uint64_t>();
  r.D = j.at("D").get<std::uint64_t>();
  if (j.contains("theta") && !j["theta"].is_null()) r.theta = j["theta"].get<std::size_t>();
  r.d = j.at("d").get<double>();
  r.h = j.at("h").get<double>();
  r.e = j.at("e").get<double>();
  r.s = j.at("s").get<double>();
  r.c = j.at("c").get<double>();
  r.g = opt_double(j, "g");
  r.g_tail = opt_double(j, "g_tail");
  r.J_1D = opt_double(j, "J_1D");
  r.J_thetaD = opt_double(j, "J_thetaD");
  if (j.contains("L_tail") && !j["L_tail"].is_null()) r.L_tail = j["L_tail"].get<std::uint64_t>();
  r.source_path = j.value("source_path", std::string());
  r.content_digest = j.value("content_digest", std::string());
  return r;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace

std::string records_to_json(std::span<const TextRecord> records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return arr.dump(2) + "\n";
}

void export_records(const Library& lib, RecordFormat format, const fs::path& destination) {
  if (format == RecordFormat::json) {
    write_text(destination, records_to_json(lib.records));
    return;
  }
  std::ostringstream ss;
  write_records_csv(ss, lib.records);
  write_text(destination, ss.str());
}

std::vector<TextRecord> import_records(const fs::path& source) {
  const auto text = read_file(source);
  if (source.extension() == ".json") {
    std::vector<TextRecord> out;
    try {
      for (const auto& j : json::parse(text)) out.push_back(record_from_json(j));
    } catch (const json::exception& e) {
      throw IoError(source.string() + ": " + e.what());
    }
    return out;
  }
  std::istringstream in(text);
  return read_records_csv(in);
}

std::string library_to_json(const Library& lib) {
  json j;
  j["format"] = "textcx-library";
  j["version"] = 1;
  j["created"] = lib.created ? json(*lib.created) : json(nullptr);
  j["updated"] = lib.updated ? json(*lib.updated) : json(nullptr);
  j["config"] = lib.config;
  json recs = json::array();
  for (const auto& r : lib.records) recs.push_back(record_json(r));
  j["records"] = recs;
  json fits = json::object();
  for (const auto& [label, f] : lib.fits) {
    json fj;
    fj["label"] = label;
    if (f.heaps)
      fj["heaps"] = {{"k", f.heaps->k},
                     {"beta", f.heaps->beta},
                     {"rms_log_error", f.heaps->rms_log_error},
                     {"n_points", f.heaps->n_points}};
    if (f.alpha)
      fj["alpha"] = {{"alpha", f.alpha->alpha}, {"q", f.alpha->q}, {"sse", f.alpha->sse}, {"n_points", f.alpha->n_points}};
    fits[label] = fj;
  }
  j["fits"] = fits;
  if (!lib.profiles.empty()) {
    json profiles = json::object();
    for (const auto& [name, p] : lib.profiles) {
      json entries = json::array();
      for (const auto& e : p.entries()) entries.push_back(json::array({e.symbol, e.frequency}));
      profiles[name] = entries;
    }
    j["profiles"] = profiles;
  }
  return j.dump(2) + "\n";
}

Library library_from_json(std::string_view text) {
  Library lib;
  try {
    const auto j = json::parse(text);
    if (j.value("format", std::string()) != "textcx-library") throw IoError("not a library file");
    if (!j["created"].is_null()) lib.created = j["created"].get<std::string>();
    if (!j["updated"].is_null()) lib.updated = j["updated"].get<std::string>();
    lib.config = j.value("config", std::map<std::string, std::string>{});
    for (const auto& r : j.at("records")) lib.add(record_from_json(r));
    const json fit_map = j.value("fits", json::object());
    for (const auto& [label, fj] : fit_map.items()) {
      LabelFits f;
      if (fj.contains("heaps")) {
        const auto& h = fj["heaps"];
        f.heaps = HeapsFit{h.at("k").get<double>(), h.at("beta").get<double>(), h.at("rms_log_error").get<double>(),
                           h.at("n_points").get<std::size_t>()};
      }
      if (fj.contains("alpha")) {
        const auto& a = fj["alpha"];
        f.alpha = AlphaFit{a.at("alpha").get<double>(), a.at("q").get<double>(), a.at("sse").get<double>(),
                           a.at("n_points").get<std::size_t>()};
      }
      lib.fits[label] = f;
    }
    if (j.contains("profiles")) {
      for (const auto& [name, entries] : j["profiles"].items()) {
        std::map<std::string, std::uint64_t> counts;
        for (const auto& e : entries) counts[e.at(0).get<std::string>()] += e.at(1).get<std::uint64_t>();
        lib.profiles.emplace(name, FrequencyProfile::from_counts(counts));
      }
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("library JSON: ") + e.what());
  }
  return lib;
}

void save_library(const Library& lib, const fs::path& path) { write_text(path, library_to_json(lib)); }

Library load_library(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("no such file: " + path.string());
  const auto text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return library_from_json(text);
    } catch (const IoError& e) {
      throw IoError(path.string() + ": " + e.what());
    }
  }
  std::istringstream in(text);
  Library lib;
  if (text.rfind("name,class,", 0) == 0) {
    for (auto& r : read_records_csv(in)) lib.add(std::move(r));
  } else {
    std::map<std::string, int> seen;
    for (const auto& row : read_appendix_csv(in)) {
      auto r = to_record(row);
      const int k = ++seen[r.name];
      if (k > 1) r.name += " [" + std::to_string(k) + "]";
      lib.add(std::move(r));
    }
    lib.config["source"] = "appendix fixture";
  }
  fit_library(lib);
  return lib;
}

}  // namespace textcx
