#include "blowup/sporadic.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <string>

#include "blowup/errors.hpp"
#include "modular.hpp"

namespace blowup {
namespace {

using detail::inverse_mod;
using detail::mod;

[[noreturn]] void fail(std::size_t line_no, const std::string& why, const std::string& line) {
  throw DataError("line " + std::to_string(line_no) + ": " + why + ": '" + line + "'");
}

std::vector<std::int64_t> split_integers(const std::string& line, std::size_t line_no,
                                         bool strict) {
  std::vector<std::int64_t> values;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r' || (!strict && c == ',')) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (line[j] == '-' || line[j] == '+') ++j;
    while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
    std::int64_t v = 0;
    const char* first = line.data() + i + (line[i] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, line.data() + j, v);
    if (ec != std::errc() || ptr != line.data() + j) fail(line_no, "not an integer list", line);
    values.push_back(v);
    i = j;
  }
  return values;
}

}  // namespace

std::vector<SporadicRecord> parse_dataset(std::istream& in, ParseOptions options) {
  std::vector<SporadicRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto values = split_integers(line, line_no, options.strict);
    if (values.size() != 6) fail(line_no, "expected V followed by 5 residues", line);
    SporadicRecord r;
    r.volume = values[0];
    if (r.volume < 1) fail(line_no, "volume must be positive", line);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      const std::int64_t b = values[i + 1];
      if (options.strict && (b < 0 || b >= r.volume)) {
        fail(line_no, "strict mode needs residues in [0, V-1]", line);
      }
      r.residues[i] = mod(b, r.volume);
      sum = (sum + r.residues[i]) % r.volume;
    }
    if (sum != 0) fail(line_no, "residues do not sum to 0 mod V", line);
    out.push_back(r);
  }
  return out;
}

std::vector<SporadicRecord> parse_dataset(const std::filesystem::path& path, ParseOptions options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset " + path.string());
  return parse_dataset(in, options);
}

std::vector<ApexBlowup> blowups_from_record(const SporadicRecord& r) {
  std::vector<ApexBlowup> out;
  const std::int64_t V = r.volume;
  for (int apex = 1; apex <= 5; ++apex) {
    const auto l = static_cast<std::size_t>(apex - 1);
    auto inv = inverse_mod(r.residues[l], V);
    if (!inv) continue;
    const std::int64_t unit = mod(-*inv, V);
    std::vector<std::int64_t> w;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      if (i == l) continue;
      w.push_back(static_cast<std::int64_t>(static_cast<__int128>(r.residues[i]) * unit % V));
      sum += w.back();
    }
    if (sum != V + 1) continue;
    if (std::find(w.begin(), w.end(), 0) != w.end() || gcd_of(w) != 1) continue;
    out.push_back({apex, WeightVector(std::move(w))});
  }
  return out;
}

SporadicRecord record_from_weights(const WeightVector& n) {
  if (n.dim() != 4) throw InvalidArgument("sporadic records describe 4-dimensional blowups");
  n.require_positive();
  SporadicRecord r;
  r.volume = n.index();
  for (std::size_t i = 0; i < 4; ++i) r.residues[i] = n[i] % r.volume;
  r.residues[4] = r.volume - 1;
  return r;
}

Histogram sporadic_histogram(std::span<const SporadicRecord> records) {
  Histogram h;
  for (const auto& r : records) {
    for (const auto& b : blowups_from_record(r)) h.add(b.weights.min_weight());
  }
  return h;
}

SporadicReport sporadic_report(std::span<const SporadicRecord> records) {
  SporadicReport rep;
  rep.records = records.size();
  std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> seen;
  for (const auto& r : records) {
    for (const auto& b : blowups_from_record(r)) {
      const std::int64_t n_min = b.weights.min_weight();
      rep.histogram.add(n_min);
      const WeightVector sorted = b.weights.sorted();
      seen.emplace(r.volume, std::vector<std::int64_t>(sorted.weights().begin(), sorted.weights().end()));
      if (!rep.argmax_weights || n_min > rep.argmax_weights->min_weight()) {
        rep.argmax_record = r;
        rep.argmax_weights = b.weights;
      }
    }
  }
  rep.distinct = seen.size();
  return rep;
}

std::span<const SporadicRecord> embedded_fixtures() {
  static const std::array<SporadicRecord, 3> fixtures = {
      SporadicRecord{245, {32, 41, 71, 102, 244}},
      SporadicRecord{419, {20, 57, 133, 210, 418}},
      SporadicRecord{37, {6, 10, 15, 7, 36}},
  };
  return fixtures;
}

}  // namespace blowup
