#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sts/census.hpp"

namespace sts {

// Census file format (text, line-oriented, 1-based labels):
//
//   #sts-census v1 n=<n>
//   <sigma images, comma-separated>|<tau images>|<alpha or "-">|<flags>
//
// Flags use the characters R(educed) P(rimitive) N(ormal) H(olonomy)
// V(isibility) S(ymmetry) C(haracteristic) U(nit saddle), always emitted in
// that order; an absent character means the flag is not set. Records are
// sorted by the sigma-then-tau integer sequence (the canonical key order),
// and parse/serialize round-trips byte-identically.

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string serialize_census(const std::vector<CensusRecord>& records, int n);

struct ParsedCensus {
  int n = 0;
  std::vector<CensusRecord> records;
};
ParsedCensus parse_census(std::string_view text);

void write_census_file(const std::string& path,
                       const std::vector<CensusRecord>& records, int n);
ParsedCensus read_census_file(const std::string& path);

// Inline surface syntax: "<sigma>|<tau>", each side either cycle notation
// "(1,2,3)(4)" or one-line images "2,3,1,4". Throws ParseError on malformed
// or non-bijective input; the pair must be connected.
Origami parse_origami_text(std::string_view text);

std::string flags_string(const CensusRecord& r);

}  // namespace sts
