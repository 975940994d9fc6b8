#include "textcx/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "textcx/corpus.hpp"
#include "textcx/csv.hpp"
#include "textcx/error.hpp"
#include "textcx/models.hpp"
#include "textcx/plot.hpp"
#include "textcx/zipf.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace textcx {

namespace {

constexpr const char* kDialectEnv = "TEXTCX_DIALECTS";

std::string fixed4(double x) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << x;
  return ss.str();
}

std::string fixed4(const std::optional<double>& x) { return x ? fixed4(*x) : std::string("-"); }

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path);
  f << data;
  if (!f) throw IoError("cannot write " + path);
}

std::string now_utc() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

// Options shared by commands that read a single text.
struct TextInput {
  std::string file;
  std::string mode;
  std::string lang = "other";
  std::string dialect;
  std::string dialects_path;
  std::string class_label;

  void attach(CLI::App* cmd, bool with_class) {
    cmd->add_option("file", file, "Input text or source file")->required();
    cmd->add_option("--mode", mode, "natural|artificial (default: by extension)")
        ->check(CLI::IsMember({"natural", "artificial"}));
    cmd->add_option("--lang", lang, "english|spanish|other")->check(CLI::IsMember({"english", "spanish", "other"}));
    cmd->add_option("--dialect", dialect, "Dialect name for artificial mode (default: by extension)");
    cmd->add_option("--dialects", dialects_path, std::string("Dialect table JSON (default: $") + kDialectEnv + ")");
    if (with_class)
      cmd->add_option("--class", class_label, "english|spanish|artificial|other")
          ->check(CLI::IsMember({"english", "spanish", "artificial", "other"}));
  }

  DialectTable table() const {
    if (!dialects_path.empty()) return DialectTable::load(dialects_path);
    if (const char* env = std::getenv(kDialectEnv); env && *env) return DialectTable::load(env);
    return DialectTable::builtin();
  }

  TextMode resolved_mode(const DialectTable& t) const {
    if (!mode.empty()) return parse_mode(mode);
    if (!dialect.empty()) return TextMode::artificial;
    return t.knows_extension(fs::path(file).extension().string()) ? TextMode::artificial : TextMode::natural;
  }

  AnalysisOptions options(const DialectTable& t) const {
    AnalysisOptions o;
    o.mode = resolved_mode(t);
    o.lang = parse_language(lang);
    o.dialect = dialect.empty() ? &t.for_extension(fs::path(file).extension().string()) : &t.by_name(dialect);
    o.class_label = !class_label.empty() ? parse_class(class_label)
                    : o.mode == TextMode::artificial ? TextClass::artificial
                    : o.lang == Language::english    ? TextClass::english
                    : o.lang == Language::spanish    ? TextClass::spanish
                                                     : TextClass::other;
    o.name = fs::path(file).filename().string();
    o.source_path = file;
    return o;
  }
};

std::string record_table(const TextRecord& r) {
  std::ostringstream ss;
  ss << "name      " << r.name << '\n'
     << "class     " << to_string(r.class_label) << '\n'
     << "mode      " << to_string(r.mode) << '\n'
     << "L         " << r.L << '\n'
     << "D         " << r.D << '\n'
     << "theta     " << (r.theta ? std::to_string(*r.theta) : "-") << '\n'
     << "L_tail    " << (r.L_tail ? std::to_string(*r.L_tail) : "-") << '\n'
     << "d         " << fixed4(r.d) << '\n'
     << "h         " << fixed4(r.h) << '\n'
     << "e         " << fixed4(r.e) << '\n'
     << "s         " << fixed4(r.s) << '\n'
     << "c         " << fixed4(r.c) << '\n'
     << "g         " << fixed4(r.g) << '\n'
     << "g_tail    " << fixed4(r.g_tail) << '\n'
     << "J_1D      " << fixed4(r.J_1D) << '\n'
     << "J_thetaD  " << fixed4(r.J_thetaD) << '\n'
     << "digest    " << r.content_digest << '\n';
  return ss.str();
}

std::pair<std::size_t, std::size_t> parse_segment(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--segment", "expected a:b");
  long long a = 0, b = 0;
  try {
    a = csv::parse_integer(spec.substr(0, colon));
    b = csv::parse_integer(spec.substr(colon + 1));
  } catch (const Error&) {
    throw CLI::ValidationError("--segment", "expected integers a:b");
  }
  if (a < 1 || b < a) throw CLI::ValidationError("--segment", "need 1 <= a <= b");
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

std::string summary_table(const GroupSummary& g) {
  std::ostringstream ss;
  auto desc = [](const std::optional<Descriptive>& d, bool mean) {
    return d ? fixed4(mean ? d->mean : d->stddev) : std::string("-");
  };
  ss << g.label << "\tn=" << g.n << "\tJ_1D mean=" << desc(g.J1D, true) << "\tstd=" << desc(g.J1D, false)
     << "\tcorr(J_1D,L)=" << fixed4(g.corr_J1D_L) << "\tJ_thetaD mean=" << desc(g.JthetaD, true)
     << "\tstd=" << desc(g.JthetaD, false) << "\tcorr(J_thetaD," << (g.tail_length_is_L ? "L" : "L_tail")
     << ")=" << fixed4(g.corr_JthetaD_Ltail) << '\n';
  return ss.str();
}

json summary_json(const GroupSummary& g) {
  auto desc = [](const std::optional<Descriptive>& d) {
    return d ? json{{"n", d->n}, {"mean", d->mean}, {"stddev", d->stddev}} : json(nullptr);
  };
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return {{"label", g.label},
          {"n", g.n},
          {"J_1D", desc(g.J1D)},
          {"J_thetaD", desc(g.JthetaD)},
          {"corr_J1D_L", opt(g.corr_J1D_L)},
          {"corr_JthetaD_Ltail", opt(g.corr_JthetaD_Ltail)},
          {"tail_length_is_L", g.tail_length_is_L}};
}

std::string scientific(double p) {
  std::ostringstream ss;
  ss << std::scientific << std::setprecision(2) << p;
  return ss.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"textcx: diversity, entropy, Zipf and Heaps statistics of natural and source-code texts", "textcx"};
  app.require_subcommand(1);

  // tokenize
  TextInput tok_in;
  auto* tok = app.add_subcommand("tokenize", "Print the symbol sequence, one token per line");
  tok_in.attach(tok, false);

  // analyze
  TextInput an_in;
  std::string an_format = "table", an_out;
  auto* an = app.add_subcommand("analyze", "Analyze one text and print its record");
  an_in.attach(an, true);
  an->add_option("--format", an_format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
  an->add_option("--out", an_out, "Write to file instead of stdout");

  // corpus
  std::string co_dir, co_out, co_records, co_default_class = "other", co_dialects;
  std::vector<std::string> co_mode_ext;
  unsigned co_jobs = 0;
  bool co_keep = false, co_stamp = false;
  auto* co = app.add_subcommand("corpus", "Ingest a directory into a library");
  co->add_option("dir", co_dir, "Corpus root")->required();
  co->add_option("--out", co_out, "Library JSON to write");
  co->add_option("--records", co_records, "Also export records (.csv or .json)");
  co->add_option("--jobs", co_jobs, "Worker threads (0 = all cores)");
  co->add_option("--default-class", co_default_class, "Class for files outside class directories")
      ->check(CLI::IsMember({"english", "spanish", "artificial", "other"}));
  co->add_option("--mode-ext", co_mode_ext, "Extension mode override, e.g. .txt=natural");
  co->add_option("--dialects", co_dialects, "Dialect table JSON");
  co->add_flag("--keep-profiles", co_keep, "Store frequency profiles in the library");
  co->add_flag("--stamp", co_stamp, "Record creation time in the library");

  // fit
  std::string fit_kind, fit_lib, fit_label, fit_format = "table";
  auto* fit = app.add_subcommand("fit", "Fit Heaps' law or the entropy model for one label");
  fit->add_option("kind", fit_kind, "heaps|alpha")->required()->check(CLI::IsMember({"heaps", "alpha"}));
  fit->add_option("library", fit_lib, "Library JSON, records CSV or appendix CSV")->required();
  fit->add_option("--label", fit_label, "Class label (a+b for unions)")->required();
  fit->add_option("--format", fit_format, "table|json")->check(CLI::IsMember({"table", "json"}));

  // compare
  std::string cmp_lib, cmp_groups, cmp_column = "J_1D", cmp_format = "table";
  bool cmp_pooled = false;
  auto* cmp = app.add_subcommand("compare", "Group summaries and a two-sample t-test");
  cmp->add_option("library", cmp_lib, "Library JSON, records CSV or appendix CSV")->required();
  cmp->add_option("--groups", cmp_groups, "Two labels, e.g. english,spanish or english+spanish,artificial")
      ->required();
  cmp->add_option("--column", cmp_column, "Record column to test");
  cmp->add_flag("--pooled", cmp_pooled, "Pooled-variance Student test instead of Welch");
  cmp->add_option("--format", cmp_format, "table|json")->check(CLI::IsMember({"table", "json"}));

  // profile
  TextInput pr_in;
  std::string pr_merged, pr_segment, pr_format = "table";
  auto* pr = app.add_subcommand("profile", "Ranked frequency table, CDF and head/tail split");
  pr_in.attach(pr, false);
  pr->add_option("--merged", pr_merged, "Treat input as a library or directory and merge all texts of a label");
  pr->add_option("--segment", pr_segment, "Zipf fit over rank segment a:b");
  pr->add_option("--format", pr_format, "table|csv")->check(CLI::IsMember({"table", "csv"}));

  // plot
  std::string pl_lib, pl_figure, pl_out;
  auto* pl = app.add_subcommand("plot", "Emit tab-separated plot series");
  pl->add_option("library", pl_lib, "Library JSON, records CSV or appendix CSV")->required();
  pl->add_option("--figure", pl_figure, "fig2..fig11")->required()->check(CLI::IsMember(plot_figures()));
  pl->add_option("--out", pl_out, "Write to file instead of stdout");

  // export
  std::string ex_lib, ex_format = "csv", ex_out;
  auto* ex = app.add_subcommand("export", "Export library records");
  ex->add_option("library", ex_lib, "Library JSON, records CSV or appendix CSV")->required();
  ex->add_option("--format", ex_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  ex->add_option("--out", ex_out, "Destination (default stdout)");

  // classify
  TextInput cl_in;
  std::string cl_models;
  auto* cl = app.add_subcommand("classify", "Nearest entropy-model curve for one text");
  cl_in.attach(cl, false);
  cl->add_option("--models", cl_models, "Library whose alpha fits act as models")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_name() != "CallForHelp") err << app.help();
    return kExitUsage;
  }

  try {
    if (*tok) {
      const auto table = tok_in.table();
      const auto opt = tok_in.options(table);
      const auto text = read_input(tok_in.file);
      Diagnostics diag;
      const auto ts = opt.mode == TextMode::natural ? tokenize_natural(text, opt.lang, opt.name)
                                                    : tokenize_artificial(text, *opt.dialect, &diag, opt.name);
      for (const auto& d : diag) err << "warning: " << d << '\n';
      for (const auto& t : ts.tokens) out << t << '\n';
    } else if (*an) {
      const auto table = an_in.table();
      const auto opt = an_in.options(table);
      const auto text = read_input(an_in.file);
      Diagnostics diag;
      const auto rec = analyze_text(text, opt, &diag);
      for (const auto& d : diag) err << "warning: " << d << '\n';
      std::string data;
      if (an_format == "json") {
        data = json::parse(records_to_json(std::vector<TextRecord>{rec})).at(0).dump(2) + "\n";
      } else if (an_format == "csv") {
        std::ostringstream ss;
        write_records_csv(ss, std::vector<TextRecord>{rec});
        data = ss.str();
      } else {
        data = record_table(rec);
      }
      write_output(an_out, data, out);
    } else if (*co) {
      IngestConfig cfg;
      if (!co_dialects.empty())
        cfg.dialects = DialectTable::load(co_dialects);
      else if (const char* env = std::getenv(kDialectEnv); env && *env)
        cfg.dialects = DialectTable::load(env);
      cfg.default_class = parse_class(co_default_class);
      cfg.jobs = co_jobs;
      cfg.keep_profiles = co_keep;
      for (const auto& m : co_mode_ext) {
        const auto eq = m.find('=');
        if (eq == std::string::npos) {
          err << "error: --mode-ext expects .ext=mode, got '" << m << "'\n";
          return kExitUsage;
        }
        cfg.mode_by_extension[m.substr(0, eq)] = parse_mode(m.substr(eq + 1));
      }
      Diagnostics diag;
      auto lib = ingest_directory(co_dir, cfg, &diag);
      for (const auto& d : diag) err << "warning: " << d << '\n';
      fit_library(lib);
      if (co_stamp) lib.created = lib.updated = now_utc();
      if (!co_records.empty())
        export_records(lib, fs::path(co_records).extension() == ".json" ? RecordFormat::json : RecordFormat::csv,
                       co_records);
      if (co_out.empty()) {
        out << library_to_json(lib);
      } else {
        save_library(lib, co_out);
      }
      err << "ingested " << lib.records.size() << " records\n";
    } else if (*fit) {
      const auto lib = load_library(fit_lib);
      const auto recs = select(lib, fit_label);
      json j;
      std::ostringstream table;
      if (fit_kind == "heaps") {
        std::vector<HeapsPoint> pts;
        for (const auto* r : recs) pts.push_back({static_cast<double>(r->L), static_cast<double>(r->D)});
        const auto f = fit_heaps(pts);
        j = {{"label", fit_label}, {"k", f.k}, {"beta", f.beta}, {"rms_log_error", f.rms_log_error},
             {"n_points", f.n_points}};
        table << fit_label << ": D = " << fixed4(f.k) << " * L^" << fixed4(f.beta) << "  (n=" << f.n_points
              << ", rms log error " << fixed4(f.rms_log_error) << ")\n";
      } else {
        std::vector<EntropyPoint> pts;
        for (const auto* r : recs) pts.push_back({r->d, r->h});
        const auto f = fit_alpha(pts);
        j = {{"label", fit_label}, {"alpha", f.alpha}, {"q", f.q}, {"sse", f.sse}, {"n_points", f.n_points}};
        table << fit_label << ": h = d^" << fixed4(f.q) << "  alpha=" << fixed4(f.alpha) << "  (n=" << f.n_points
              << ", sse " << fixed4(f.sse) << ")\n";
      }
      out << (fit_format == "json" ? j.dump(2) + "\n" : table.str());
    } else if (*cmp) {
      const auto comma = cmp_groups.find(',');
      if (comma == std::string::npos || cmp_groups.find(',', comma + 1) != std::string::npos) {
        err << "error: --groups expects exactly two labels separated by a comma\n";
        return kExitUsage;
      }
      const auto ga = cmp_groups.substr(0, comma), gb = cmp_groups.substr(comma + 1);
      const auto lib = load_library(cmp_lib);
      const auto sa = group_summary(lib, ga), sb = group_summary(lib, gb);
      const auto kind = cmp_pooled ? TTestKind::pooled : TTestKind::welch;
      const auto t = compare_groups(lib, ga, gb, cmp_column, kind);
      if (cmp_format == "json") {
        json j = {{"groups", {summary_json(sa), summary_json(sb)}},
                  {"t_test",
                   {{"column", cmp_column},
                    {"kind", cmp_pooled ? "pooled" : "welch"},
                    {"t", t.t},
                    {"df", t.df},
                    {"p", t.p},
                    {"n1", t.n1},
                    {"n2", t.n2}}}};
        out << j.dump(2) << '\n';
      } else {
        out << summary_table(sa) << summary_table(sb);
        out << "t-test (" << (cmp_pooled ? "pooled" : "welch") << ") on " << cmp_column << ": " << ga << " - " << gb
            << "\tn1-n2=" << t.n1 << "-" << t.n2 << "\tt=" << fixed4(t.t) << "\tdf=" << fixed4(t.df)
            << "\tp-value=" << scientific(t.p) << '\n';
      }
    } else if (*pr) {
      FrequencyProfile p;
      if (!pr_merged.empty()) {
        Library lib;
        if (fs::is_directory(pr_in.file)) {
          IngestConfig cfg;
          cfg.dialects = pr_in.table();
          cfg.keep_profiles = true;
          Diagnostics diag;
          lib = ingest_directory(pr_in.file, cfg, &diag);
          for (const auto& d : diag) err << "warning: " << d << '\n';
        } else {
          lib = load_library(pr_in.file);
        }
        p = merged_language_profile(lib, pr_merged).profile;
      } else {
        const auto table = pr_in.table();
        const auto opt = pr_in.options(table);
        const auto text = read_input(pr_in.file);
        Diagnostics diag;
        const auto ts = opt.mode == TextMode::natural ? tokenize_natural(text, opt.lang, opt.name)
                                                      : tokenize_artificial(text, *opt.dialect, &diag, opt.name);
        for (const auto& d : diag) err << "warning: " << d << '\n';
        p = build_profile(ts);
      }
      if (p.empty()) throw DomainError("empty text: no tokens to profile");
      std::optional<ZipfFit> seg;
      if (!pr_segment.empty()) {
        const auto [a, b] = parse_segment(pr_segment);
        seg = fit_segment(p, a, b);
      }
      if (pr_format == "csv") {
        write_profile_csv(out, p);
      } else {
        const auto c = cdf(p);
        out << "# L=" << p.length() << " D=" << p.diversity() << " theta=" << p.tail_start()
            << " L_tail=" << segment_count(p, p.tail_start(), p.diversity()) << '\n';
        out << "rank\tsymbol\tfrequency\tcdf\tpart\n";
        for (std::size_t r = 1; r <= p.diversity(); ++r)
          out << r << '\t' << p.entries()[r - 1].symbol << '\t' << p.entries()[r - 1].frequency << '\t'
              << fixed4(c.points[r - 1].fraction) << '\t' << (r < p.tail_start() ? "head" : "tail") << '\n';
      }
      if (seg)
        err << "segment [" << seg->a << "," << seg->b << "]: g=" << fixed4(seg->g) << " Z=" << fixed4(seg->reference)
            << " L=" << fixed4(seg->observed) << " J=" << fixed4(seg->deviation) << '\n';
    } else if (*pl) {
      const auto lib = load_library(pl_lib);
      write_output(pl_out, plot_data(lib, pl_figure), out);
    } else if (*ex) {
      const auto lib = load_library(ex_lib);
      const auto fmt = ex_format == "json" ? RecordFormat::json : RecordFormat::csv;
      if (ex_out.empty() || ex_out == "-") {
        if (fmt == RecordFormat::json) {
          out << records_to_json(lib.records);
        } else {
          write_records_csv(out, lib.records);
        }
      } else {
        export_records(lib, fmt, ex_out);
      }
    } else if (*cl) {
      const auto models_lib = load_library(cl_models);
      std::map<std::string, AlphaFit> models;
      for (const auto& [label, f] : models_lib.fits)
        if (f.alpha) models[label] = *f.alpha;
      const auto table = cl_in.table();
      const auto opt = cl_in.options(table);
      const auto rec = analyze_text(read_input(cl_in.file), opt);
      const auto c = classify_language(measures_from(rec.d, rec.h), models);
      out << "label\t" << c.label << '\n';
      for (const auto& [label, r] : c.residuals) out << "residual." << label << '\t' << fixed4(r) << '\n';
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace textcx
