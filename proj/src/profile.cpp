#include "textcx/profile.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <unordered_map>

#include "textcx/csv.hpp"
#include "textcx/error.hpp"

namespace textcx {

FrequencyProfile FrequencyProfile::from_counts(const std::map<std::string, std::uint64_t>& counts) {
  FrequencyProfile p;
  p.entries_.reserve(counts.size());
  for (const auto& [symbol, f] : counts) {
    if (f == 0) continue;
    p.entries_.push_back({symbol, f});
    p.length_ += f;
  }
  // map iteration is already symbol-ordered, so a stable sort keeps ties lexicographic
  std::stable_sort(p.entries_.begin(), p.entries_.end(),
                   [](const ProfileEntry& x, const ProfileEntry& y) { return x.frequency > y.frequency; });
  if (!p.entries_.empty()) p.tail_start_ = find_tail_start(p);
  return p;
}

FrequencyProfile FrequencyProfile::from_frequencies(std::span<const std::uint64_t> frequencies) {
  std::map<std::string, std::uint64_t> counts;
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "#%06zu", i + 1);
    counts.emplace(name, frequencies[i]);
  }
  return from_counts(counts);
}

std::uint64_t FrequencyProfile::frequency(std::size_t rank) const {
  if (rank < 1 || rank > entries_.size())
    throw BoundsError("rank " + std::to_string(rank) + " outside [1, " + std::to_string(entries_.size()) + "]");
  return entries_[rank - 1].frequency;
}

std::vector<double> FrequencyProfile::frequencies() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(static_cast<double>(e.frequency));
  return out;
}

std::map<std::string, std::uint64_t> FrequencyProfile::counts() const {
  std::map<std::string, std::uint64_t> out;
  for (const auto& e : entries_) out.emplace(e.symbol, e.frequency);
  return out;
}

FrequencyProfile build_profile(const std::vector<std::string>& tokens) {
  std::unordered_map<std::string, std::uint64_t> hashed;
  hashed.reserve(tokens.size() / 2 + 1);
  for (const auto& t : tokens) ++hashed[t];
  return FrequencyProfile::from_counts(std::map<std::string, std::uint64_t>(hashed.begin(), hashed.end()));
}

FrequencyProfile build_profile(const TokenStream& tokens) { return build_profile(tokens.tokens); }

std::uint64_t segment_count(const FrequencyProfile& p, std::size_t a, std::size_t b) {
  if (a < 1 || a > b || b > p.diversity())
    throw BoundsError("rank segment [" + std::to_string(a) + ", " + std::to_string(b) +
                      "] outside [1, " + std::to_string(p.diversity()) + "]");
  std::uint64_t sum = 0;
  for (std::size_t r = a; r <= b; ++r) sum += p.entries()[r - 1].frequency;
  return sum;
}

std::size_t find_tail_start(std::span<const std::uint64_t> ranked_frequencies) {
  if (ranked_frequencies.empty()) throw DomainError("tail start of an empty profile");
  std::unordered_map<std::uint64_t, std::size_t> multiplicity;
  for (auto f : ranked_frequencies) ++multiplicity[f];
  for (std::size_t r = ranked_frequencies.size(); r >= 1; --r)
    if (multiplicity[ranked_frequencies[r - 1]] == 1) return r;
  return 1;
}

std::size_t find_tail_start(const FrequencyProfile& p) {
  std::vector<std::uint64_t> f;
  f.reserve(p.diversity());
  for (const auto& e : p.entries()) f.push_back(e.frequency);
  return find_tail_start(f);
}

FrequencyProfile merge_profiles(const FrequencyProfile& a, const FrequencyProfile& b) {
  auto counts = a.counts();
  for (const auto& e : b.entries()) counts[e.symbol] += e.frequency;
  return FrequencyProfile::from_counts(counts);
}

CdfSeries cdf(const FrequencyProfile& p) {
  if (p.empty()) throw DomainError("CDF of an empty profile");
  CdfSeries out;
  out.points.reserve(p.diversity());
  const auto L = static_cast<double>(p.length());
  std::uint64_t cum = 0;
  for (std::size_t r = 1; r <= p.diversity(); ++r) {
    cum += p.entries()[r - 1].frequency;
    out.points.push_back({r, static_cast<double>(cum) / L});
  }
  return out;
}

void write_profile_csv(std::ostream& out, const FrequencyProfile& p) {
  out << "# L=" << p.length() << " D=" << p.diversity() << " theta=" << p.tail_start() << '\n';
  out << "rank,symbol,frequency\n";
  for (std::size_t r = 1; r <= p.diversity(); ++r) {
    const auto& e = p.entries()[r - 1];
    out << r << ',' << csv::escape(e.symbol) << ',' << e.frequency << '\n';
  }
}

FrequencyProfile read_profile_csv(std::istream& in) {
  std::string first;
  if (!std::getline(in, first) || first.rfind("# ", 0) != 0) throw IoError("profile CSV: missing '# L=.. D=.. theta=..' line");
  auto header = csv::read_record(in);
  if (!header || *header != std::vector<std::string>{"rank", "symbol", "frequency"})
    throw IoError("profile CSV: expected header rank,symbol,frequency");
  std::map<std::string, std::uint64_t> counts;
  while (auto rec = csv::read_record(in)) {
    if (rec->size() == 1 && (*rec)[0].empty()) continue;
    if (rec->size() != 3) throw IoError("profile CSV: expected 3 fields per row");
    counts[(*rec)[1]] += static_cast<std::uint64_t>(csv::parse_integer((*rec)[2]));
  }
  return FrequencyProfile::from_counts(counts);
}

}  // namespace textcx
