#pragma once

#include <iosfwd>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpn/errors.hpp"
#include "lpn/oracle.hpp"
#include "lpn/planner.hpp"
#include "lpn/solver.hpp"

namespace lpn {

/// Malformed instance, key or document text.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Instance files ("LPN1"):
//
//   LPN1
//   n <dimension>
//   eps <num>/<den>
//   samples <count>
//   seed <u64>            optional
//   key <hex>             optional planted key
//   data
//   <hex> <0|1>           one line per sample
//
// Vectors are ceil(n/8) bytes of lowercase hex, byte 0 first, coordinate j at
// bit (j mod 8) of byte (j div 8).
void write_instance(std::ostream& out, const LpnInstance& instance);
std::string instance_to_text(const LpnInstance& instance);
LpnInstance read_instance(std::istream& in);
LpnInstance instance_from_text(std::string_view text);

// Side file holding a planted key:
//
//   LPN1-KEY
//   n <dimension>
//   key <hex>
std::string key_to_text(const BitVec& key);
BitVec key_from_text(std::string_view text);

/// Flat "key = value" document, one entry per line.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
std::string format_key_values(const KeyValues& entries);
/// Parses "key = value" lines; "[section]" headers and blank lines are skipped.
std::map<std::string, std::string> parse_key_values(std::string_view text);

KeyValues plan_entries(const Plan& plan);
std::string plan_to_text(const Plan& plan);
Plan plan_from_text(std::string_view text);

struct ResultDocOptions {
  bool include_timings = true;
};

/// Plan entries, then the result, then a "[stage_report]" block.
/// `exact_match` is written when the planted key is known.
std::string result_to_text(const Plan& plan, const SolveResult& result, std::optional<bool> exact_match = {},
                           const ResultDocOptions& options = {});

/// Table of planner rows in column order
/// log N, w, b, w', b', |r| log N, log C_LC, log C_HT.
std::string format_table(const std::vector<TableRow>& rows);

/// Fixed-point with `decimals` digits, dropping the fraction when it is all zeros.
std::string format_trimmed(double value, int decimals);

}  // namespace lpn
