#pragma once

// Enumeration of sorted weight vectors of a given length up to a degree
// bound, filtered by transversality or the IP property.

#include "cymirror/exact.hpp"
#include "cymirror/wps.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cymirror {

enum class CensusFilter { transverse, ip, all };

std::optional<CensusFilter> parse_census_filter(std::string_view text);
std::string_view to_string(CensusFilter filter);

struct CensusRecord {
  std::uint64_t degree = 0;
  std::vector<std::uint64_t> weights;
  bool transverse = false;
  bool ip = false;
  bool gorenstein = false;
  Rational chi_orb_formula;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusOptions {
  std::size_t dim = 3;
  std::uint64_t max_degree = 100;
  CensusFilter filter = CensusFilter::transverse;
  unsigned jobs = 1;
};

/// Bounds used when none is given: 60 for d = 2, 100 for d = 3, 4000 for d = 4.
std::uint64_t default_max_degree(std::size_t dim);

/// Records ordered by (degree, weights), independent of the job count.
/// Throws DomainError for dimensions other than 2, 3, 4.
std::vector<CensusRecord> census(const CensusOptions& options);

/// Same records, handed to `sink` in order as each degree completes.
void census(const CensusOptions& options, const std::function<void(const CensusRecord&)>& sink);

/// Sorted weight vectors of the given length and degree in which every
/// weight divides the degree or satisfies w_i | (w - w_j) for some j != i,
/// the one-variable case of the transversality criterion.
std::vector<std::vector<std::uint64_t>> pointer_candidates(std::size_t length, std::uint64_t degree);

std::string census_header(const CensusOptions& options);
std::string to_tsv(const CensusRecord& record);
/// Inverse of to_tsv. Throws ParseError.
CensusRecord parse_tsv(std::string_view line);

}  // namespace cymirror
