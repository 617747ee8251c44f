#pragma once

#include <iosfwd>
#include <string>

#include "salem/enumeration.hpp"

namespace salem {

/// File name `census_m{m}_H{H}.jsonl`; a non-integer bound renders its
/// slash as '_' (H = 11/10 -> "census_m1_H11_10.jsonl").
std::string census_file_name(int m, const Rat& H);

/// cache_dir + "/" + census_file_name(m, H).
std::string census_cache_path(const std::string& cache_dir, int m, const Rat& H);

/// JSON-lines serialization: one header object {m, H, tool_version,
/// class_count, reducible_count}, then one object per record with fields
/// exactly (m, coeffs, trace_coeffs, alpha_lo, alpha_hi, angles).  Doubles
/// use shortest round-trip form, so reload is bit-exact.
void write_census_jsonl(const CensusSummary& summary, std::ostream& os);
void save_census(const CensusSummary& summary, const std::string& path);

CensusSummary read_census_jsonl(std::istream& is);
CensusSummary load_census(const std::string& path);

/// CSV form of the record list (lists joined with ';' inside a cell).
void write_census_csv(const CensusSummary& summary, std::ostream& os);

/// Cache-aware census: empty cache_dir enumerates directly; otherwise load
/// the cache file if present, else enumerate and persist it.
CensusSummary load_or_build_census(int m, const Rat& H, const std::string& cache_dir,
                                   const CensusConfig& cfg = {});

} // namespace salem
