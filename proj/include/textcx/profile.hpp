#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "textcx/tokenizer.hpp"

namespace textcx {

struct ProfileEntry {
  std::string symbol;
  std::uint64_t frequency;
};

// Ranked symbol-frequency distribution of a text. Entries are sorted by
// descending frequency, ties by symbol text (byte order). Rank r is 1-based:
// entries()[r - 1]. Immutable once built.
class FrequencyProfile {
 public:
  FrequencyProfile() = default;

  static FrequencyProfile from_counts(const std::map<std::string, std::uint64_t>& counts);
  // Synthetic symbols "#000001", "#000002", ... keep the given order when the
  // input is already non-increasing. Zero counts are dropped.
  static FrequencyProfile from_frequencies(std::span<const std::uint64_t> frequencies);

  const std::vector<ProfileEntry>& entries() const noexcept { return entries_; }
  std::uint64_t length() const noexcept { return length_; }        // L
  std::size_t diversity() const noexcept { return entries_.size(); }  // D
  // Tail-start rank theta; 0 only for the empty profile.
  std::size_t tail_start() const noexcept { return tail_start_; }
  bool empty() const noexcept { return entries_.empty(); }

  std::uint64_t frequency(std::size_t rank) const;
  std::vector<double> frequencies() const;
  std::map<std::string, std::uint64_t> counts() const;

 private:
  std::vector<ProfileEntry> entries_;
  std::uint64_t length_ = 0;
  std::size_t tail_start_ = 0;
};

FrequencyProfile build_profile(const TokenStream& tokens);
FrequencyProfile build_profile(const std::vector<std::string>& tokens);

// Number of tokens in ranks [a, b]; throws BoundsError unless 1 <= a <= b <= D.
std::uint64_t segment_count(const FrequencyProfile& p, std::size_t a, std::size_t b);

// Largest rank whose frequency value no other rank shares; 1 if every value
// is shared. The tail is [theta, D]. Throws DomainError on an empty profile.
std::size_t find_tail_start(const FrequencyProfile& p);
std::size_t find_tail_start(std::span<const std::uint64_t> ranked_frequencies);

FrequencyProfile merge_profiles(const FrequencyProfile& a, const FrequencyProfile& b);

struct CdfPoint {
  std::size_t rank;
  double fraction;
};

struct CdfSeries {
  std::vector<CdfPoint> points;
};

// Point k is (k, L_{1,k} / L). Throws DomainError on an empty profile.
CdfSeries cdf(const FrequencyProfile& p);

// "# L=<L> D=<D> theta=<theta>" then "rank,symbol,frequency" rows.
void write_profile_csv(std::ostream& out, const FrequencyProfile& p);
FrequencyProfile read_profile_csv(std::istream& in);

}  // namespace textcx
