#include "lpn/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace lpn {
namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

double parse_double(std::string_view text, std::string_view what) {
  std::string s(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid " + std::string(what) + ": '" + s + "'");
  }
  if (used != s.size()) throw ParseError("invalid " + std::string(what) + ": '" + s + "'");
  return value;
}

bool parse_bool(std::string_view text, std::string_view what) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++number_;
    return line;
  }

  std::string expect(std::string_view what) {
    auto line = next();
    if (!line) throw ParseError("unexpected end of file, expected " + std::string(what));
    return *line;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

// Splits "name value" into its two words; throws unless the name matches.
std::string field(const std::string& line, std::string_view name) {
  const auto space = line.find(' ');
  if (space == std::string::npos || std::string_view(line).substr(0, space) != name) {
    throw ParseError("expected '" + std::string(name) + " <value>', got '" + line + "'");
  }
  return line.substr(space + 1);
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

}  // namespace

void write_instance(std::ostream& out, const LpnInstance& instance) {
  validate(instance);
  out << "LPN1\n";
  out << "n " << instance.n << '\n';
  out << "eps " << format_fraction(instance.eps) << '\n';
  out << "samples " << instance.samples.size() << '\n';
  if (instance.seed) out << "seed " << *instance.seed << '\n';
  if (instance.key) out << "key " << instance.key->to_hex() << '\n';
  out << "data\n";
  for (const auto& s : instance.samples) {
    out << s.coeffs.to_hex() << ' ' << (s.rhs ? '1' : '0') << '\n';
  }
}

std::string instance_to_text(const LpnInstance& instance) {
  std::ostringstream os;
  write_instance(os, instance);
  return os.str();
}

LpnInstance read_instance(std::istream& in) {
  LineReader reader(in);
  if (reader.expect("magic") != "LPN1") throw ParseError("missing LPN1 magic line");

  LpnInstance inst;
  inst.n = parse_u64(field(reader.expect("n"), "n"), "n");
  if (inst.n == 0) throw ParseError("dimension n must be positive");
  try {
    inst.eps = parse_fraction(field(reader.expect("eps"), "eps"));
    require_bias(inst.eps);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  const std::uint64_t count = parse_u64(field(reader.expect("samples"), "samples"), "sample count");

  std::string line = reader.expect("data");
  if (line.rfind("seed ", 0) == 0) {
    inst.seed = parse_u64(field(line, "seed"), "seed");
    line = reader.expect("data");
  }
  if (line.rfind("key ", 0) == 0) {
    try {
      inst.key = BitVec::from_hex(field(line, "key"), inst.n);
    } catch (const InvalidInput& e) {
      throw ParseError(std::string("key: ") + e.what());
    }
    line = reader.expect("data");
  }
  if (line != "data") throw ParseError("expected 'data', got '" + line + "'");

  const std::size_t hex_len = 2 * ((inst.n + 7) / 8);
  inst.samples.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1U << 24)));
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto rec = reader.next();
    if (!rec) {
      throw ParseError("truncated file: expected " + std::to_string(count) + " records, got " + std::to_string(i));
    }
    if (rec->size() != hex_len + 2 || (*rec)[hex_len] != ' ' || ((*rec)[hex_len + 1] != '0' && (*rec)[hex_len + 1] != '1')) {
      throw ParseError("malformed record at line " + std::to_string(reader.number()));
    }
    Sample s;
    try {
      s.coeffs = BitVec::from_hex(std::string_view(*rec).substr(0, hex_len), inst.n);
    } catch (const InvalidInput& e) {
      throw ParseError("line " + std::to_string(reader.number()) + ": " + e.what());
    }
    s.rhs = (*rec)[hex_len + 1] == '1';
    inst.samples.push_back(std::move(s));
  }
  if (const auto extra = reader.next(); extra) throw ParseError("trailing data after the last record");
  return inst;
}

LpnInstance instance_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_instance(is);
}

std::string key_to_text(const BitVec& key) {
  return "LPN1-KEY\nn " + std::to_string(key.size()) + "\nkey " + key.to_hex() + "\n";
}

BitVec key_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  LineReader reader(is);
  if (reader.expect("magic") != "LPN1-KEY") throw ParseError("missing LPN1-KEY magic line");
  const auto n = parse_u64(field(reader.expect("n"), "n"), "n");
  try {
    return BitVec::from_hex(field(reader.expect("key"), "key"), n);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("key: ") + e.what());
  }
}

std::string format_key_values(const KeyValues& entries) {
  std::string out;
  for (const auto& [k, v] : entries) {
    if (k.empty()) {
      out += v + "\n";  // section header
    } else {
      out += k + " = " + v + "\n";
    }
  }
  return out;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw ParseError("expected 'key = value', got '" + line + "'");
    out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

KeyValues plan_entries(const Plan& plan) {
  return {
      {"n", std::to_string(plan.n)},
      {"eps_num", plan.eps.numerator().str()},
      {"eps_den", plan.eps.denominator().str()},
      {"log_n_samples", fmt::format("{}", plan.log_n_samples)},
      {"w_real", fmt::format("{}", plan.w_real)},
      {"b_real", fmt::format("{}", plan.b_real)},
      {"t", fmt::format("{}", plan.t)},
      {"w_int", std::to_string(plan.w_int)},
      {"b_int", std::to_string(plan.b_int)},
      {"r", fmt::format("{}", plan.r)},
      {"l_prime", std::to_string(plan.l_prime)},
      {"log_c_lc", fmt::format("{}", plan.log_c_lc)},
      {"log_c_ht", fmt::format("{}", plan.log_c_ht)},
      {"feasible", bool_text(plan.feasible)},
  };
}

std::string plan_to_text(const Plan& plan) {
  auto entries = plan_entries(plan);
  std::string text = format_key_values(entries);
  if (!plan.feasible) text += "reason = " + plan.reason + "\n";
  return text;
}

Plan plan_from_text(std::string_view text) {
  const auto kv = parse_key_values(text);
  const auto get = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("plan document is missing '" + key + "'");
    return it->second;
  };
  Plan plan;
  plan.n = parse_u64(get("n"), "n");
  plan.eps = Rational(BigInt(get("eps_num")), BigInt(get("eps_den")));
  plan.log_n_samples = parse_double(get("log_n_samples"), "log_n_samples");
  plan.w_real = parse_double(get("w_real"), "w_real");
  plan.b_real = parse_double(get("b_real"), "b_real");
  plan.t = parse_double(get("t"), "t");
  plan.w_int = static_cast<unsigned>(parse_u64(get("w_int"), "w_int"));
  plan.b_int = parse_u64(get("b_int"), "b_int");
  plan.r = parse_double(get("r"), "r");
  plan.l_prime = parse_u64(get("l_prime"), "l_prime");
  plan.log_c_lc = parse_double(get("log_c_lc"), "log_c_lc");
  plan.log_c_ht = parse_double(get("log_c_ht"), "log_c_ht");
  plan.feasible = parse_bool(get("feasible"), "feasible");
  if (const auto it = kv.find("reason"); it != kv.end()) plan.reason = it->second;
  return plan;
}

std::string result_to_text(const Plan& plan, const SolveResult& result, std::optional<bool> exact_match,
                           const ResultDocOptions& options) {
  KeyValues entries = plan_entries(plan);
  entries.emplace_back("key_hat", result.key_hat.to_hex());
  entries.emplace_back("agreement", fmt::format("{}", result.agreement));
  entries.emplace_back("success", bool_text(result.success));
  if (exact_match) entries.emplace_back("exact_match", bool_text(*exact_match));

  const auto& r = result.report;
  entries.emplace_back("", "[stage_report]");
  entries.emplace_back("samples_used", std::to_string(r.samples_used));
  entries.emplace_back("retained", std::to_string(r.retained));
  entries.emplace_back("retained_expected", fmt::format("{}", r.retained_expected));
  entries.emplace_back("halves", std::to_string(r.halves));
  entries.emplace_back("equations", std::to_string(r.equations));
  entries.emplace_back("eq_expected", fmt::format("{}", r.eq_expected));
  entries.emplace_back("eq_threshold", fmt::format("{}", r.eq_threshold));
  entries.emplace_back("spectrum_dim", std::to_string(r.spectrum_dim));
  entries.emplace_back("recursion_depth", std::to_string(r.recursion_depth));
  entries.emplace_back("candidates_tried", std::to_string(r.candidates_tried));
  if (options.include_timings) {
    entries.emplace_back("decimate_ms", fmt::format("{:.3f}", r.decimate_ms));
    entries.emplace_back("combine_ms", fmt::format("{:.3f}", r.combine_ms));
    entries.emplace_back("walsh_ms", fmt::format("{:.3f}", r.walsh_ms));
    entries.emplace_back("suffix_ms", fmt::format("{:.3f}", r.suffix_ms));
    entries.emplace_back("decimated_bits_ms", fmt::format("{:.3f}", r.decimated_bits_ms));
    entries.emplace_back("verify_ms", fmt::format("{:.3f}", r.verify_ms));
    entries.emplace_back("total_ms", fmt::format("{:.3f}", r.total_ms));
  }
  for (std::size_t i = 0; i < r.warnings.size(); ++i) {
    entries.emplace_back("warning_" + std::to_string(i), r.warnings[i]);
  }
  return format_key_values(entries);
}

std::string format_trimmed(double value, int decimals) {
  std::string s = fmt::format("{:.{}f}", value, decimals);
  const auto dot = s.find('.');
  if (dot != std::string::npos && s.find_first_not_of('0', dot + 1) == std::string::npos) s.erase(dot);
  if (s == "-0") s = "0";
  return s;
}

std::string format_table(const std::vector<TableRow>& rows) {
  static constexpr std::array<const char*, 8> kHeader = {"log N", "w", "b", "w'", "b'", "|r| log N", "log C_LC", "log C_HT"};
  std::vector<std::array<std::string, 8>> cells;
  cells.push_back({});
  for (std::size_t c = 0; c < kHeader.size(); ++c) cells.back()[c] = kHeader[c];

  std::vector<std::string> errors(rows.size() + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    std::array<std::string, 8> line;
    line[0] = format_trimmed(row.log_n_samples, 2);
    if (row.error) {
      errors[i + 1] = "infeasible: " + *row.error;
    } else {
      line[1] = format_trimmed(row.w, 2);
      line[2] = format_trimmed(row.b, 2);
      line[3] = std::to_string(row.w_int);
      line[4] = std::to_string(row.b_int);
      line[5] = format_trimmed(row.r_log_n, 1);
      line[6] = format_trimmed(row.log_c_lc, 2);
      line[7] = fmt::format("{:.2f}", row.log_c_ht);
    }
    cells.push_back(line);
  }

  std::array<std::size_t, 8> width{};
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string text;
    if (!errors[i].empty()) {
      text = fmt::format("{:<{}}  {}", cells[i][0], width[0], errors[i]);
    } else {
      for (std::size_t c = 0; c < cells[i].size(); ++c) {
        text += c + 1 < cells[i].size() ? fmt::format("{:<{}}  ", cells[i][c], width[c]) : cells[i][c];
      }
    }
    out += text + "\n";
  }
  return out;
}

}  // namespace lpn
