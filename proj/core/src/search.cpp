#include "blowup/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "blowup/errors.hpp"

namespace blowup {
namespace {

struct Block {
  std::int64_t index;
  std::int64_t first;
};

struct BlockResult {
  Histogram histogram;
  std::vector<WeightVector> hits;
  std::uint64_t candidates = 0;
};

// Fills positions [pos, d) with a nondecreasing tail >= min_value summing to
// `remaining`, tracking the running gcd so imprimitive vectors are dropped.
void extend(std::vector<std::int64_t>& v, std::size_t pos, std::int64_t remaining,
            std::int64_t min_value, std::int64_t g,
            const std::function<void(std::span<const std::int64_t>)>& visit) {
  const std::size_t d = v.size();
  if (pos + 1 == d) {
    if (remaining >= min_value && std::gcd(g, remaining) == 1) {
      v[pos] = remaining;
      visit(v);
    }
    return;
  }
  const auto slots = static_cast<std::int64_t>(d - pos);
  for (std::int64_t x = min_value; x * slots <= remaining; ++x) {
    v[pos] = x;
    extend(v, pos + 1, remaining - x, x, std::gcd(g, x), visit);
  }
}

void validate(const CensusQuery& q) {
  if (q.dim < 2) throw InvalidArgument("census dimension must be at least 2");
  if (q.v_min < 1 || q.v_max < q.v_min) {
    throw InvalidArgument("census index range must be a nonempty subrange of [1, inf)");
  }
  if (q.eps <= Rat(0) || q.eps > Rat(1)) {
    throw InvalidArgument("epsilon must lie in (0,1], got " + q.eps.to_string());
  }
  if (q.min_weight && *q.min_weight < 1) throw InvalidArgument("min-weight filter must be >= 1");
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Terminal: return "terminal";
    case Verdict::Canonical: return "canonical";
    case Verdict::EpsLogTerminal: return "eps-lt";
    case Verdict::EpsLogCanonical: return "eps-lc";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  for (auto v : {Verdict::Terminal, Verdict::Canonical, Verdict::EpsLogTerminal,
                 Verdict::EpsLogCanonical}) {
    if (to_string(v) == text) return v;
  }
  throw InvalidArgument("unknown verdict filter '" + std::string(text) +
                        "' (expected terminal, canonical, eps-lt or eps-lc)");
}

void for_each_blowup(std::size_t d, std::int64_t V, std::int64_t first,
                     const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (d < 2 || V < 1 || first < 1) return;
  const std::int64_t total = V + 1;
  if (first * static_cast<std::int64_t>(d) > total) return;
  std::vector<std::int64_t> v(d);
  v[0] = first;
  extend(v, 1, total - first, first, first, visit);
}

std::vector<WeightVector> enumerate_blowups(std::size_t d, std::int64_t V) {
  std::vector<WeightVector> out;
  if (d < 2 || V < 1) return out;
  for (std::int64_t first = 1; first * static_cast<std::int64_t>(d) <= V + 1; ++first) {
    for_each_blowup(d, V, first, [&](std::span<const std::int64_t> n) {
      out.emplace_back(std::vector<std::int64_t>(n.begin(), n.end()));
    });
  }
  return out;
}

std::uint64_t projected_candidates(std::size_t d, std::int64_t v_min, std::int64_t v_max,
                                   std::uint64_t stop_above) {
  if (d < 1 || v_max < v_min) return 0;
  // p(m, j) = p(m - 1, j - 1) + p(m - j, j): partitions of m into exactly j
  // parts. Rows are kept in a ring of d + 1 entries since p(m - j, .) with
  // j <= d reaches back at most d rows.
  const std::size_t ring = d + 1;
  std::vector<std::vector<std::uint64_t>> p(ring, std::vector<std::uint64_t>(d + 1, 0));
  auto sat_add = [](std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
  };
  p[0][0] = 1;
  std::uint64_t sum = 0;
  for (std::int64_t m = 1; m <= v_max + 1; ++m) {
    auto& row = p[static_cast<std::size_t>(m) % ring];
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t j = 1; j <= d; ++j) {
      std::uint64_t a = p[static_cast<std::size_t>(m - 1) % ring][j - 1];
      std::uint64_t b = m >= static_cast<std::int64_t>(j)
                            ? p[static_cast<std::size_t>(m - static_cast<std::int64_t>(j)) % ring][j]
                            : 0;
      row[j] = sat_add(a, b);
    }
    if (m - 1 >= v_min) {
      sum = sat_add(sum, row[d]);
      if (sum > stop_above) return stop_above + 1;
    }
  }
  return sum;
}

bool passes(const WeightVector& n, Verdict verdict, const Rat& eps) {
  switch (verdict) {
    case Verdict::Terminal: return is_terminal_fast(n);
    case Verdict::Canonical: return is_canonical_fast(n);
    case Verdict::EpsLogTerminal: return classify(n, eps).eps_log_terminal;
    case Verdict::EpsLogCanonical: return classify(n, eps).eps_log_canonical;
  }
  return false;
}

CensusResult run_census(const CensusQuery& query, const CensusOptions& options) {
  validate(query);
  const std::uint64_t projected =
      projected_candidates(query.dim, query.v_min, query.v_max, options.budget);
  if (projected > options.budget) {
    throw BudgetExceeded("census would examine more than " + std::to_string(options.budget) +
                             " candidates; raise the budget or shrink the range",
                         projected);
  }

  std::vector<Block> blocks;
  const auto d = static_cast<std::int64_t>(query.dim);
  for (std::int64_t V = query.v_min; V <= query.v_max; ++V) {
    for (std::int64_t first = 1; first * d <= V + 1; ++first) blocks.push_back({V, first});
  }

  std::vector<BlockResult> results(blocks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < blocks.size(); b = next++) {
      BlockResult& r = results[b];
      for_each_blowup(query.dim, blocks[b].index, blocks[b].first,
                      [&](std::span<const std::int64_t> raw) {
                        ++r.candidates;
                        WeightVector n(std::vector<std::int64_t>(raw.begin(), raw.end()));
                        if (!passes(n, query.verdict, query.eps)) return;
                        const std::int64_t n_min = raw.front();
                        r.histogram.add(n_min);
                        if (!query.min_weight || n_min >= *query.min_weight) {
                          r.hits.push_back(std::move(n));
                        }
                      });
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, blocks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CensusResult out;
  for (auto& r : results) {
    out.histogram.merge(r.histogram);
    out.candidates += r.candidates;
    std::move(r.hits.begin(), r.hits.end(), std::back_inserter(out.hits));
  }
  return out;
}

std::vector<FamilyCheck> verify_family(std::span<const std::optional<std::int64_t>> pattern,
                                       std::int64_t lo, std::int64_t hi, const Rat& eps) {
  const auto free_slots = std::count(pattern.begin(), pattern.end(), std::nullopt);
  if (free_slots != 1) throw InvalidArgument("family template needs exactly one free slot");
  if (lo < 1 || hi < lo) throw InvalidArgument("slot values must be a nonempty range of positive integers");
  for (const auto& w : pattern) {
    if (w && *w < 1) throw InvalidArgument("family template weights must be positive");
  }

  std::vector<FamilyCheck> out;
  for (std::int64_t value = lo; value <= hi; ++value) {
    std::vector<std::int64_t> filled;
    for (const auto& w : pattern) filled.push_back(w ? *w : value);
    FamilyCheck check;
    check.value = value;
    check.n_min = *std::min_element(filled.begin(), filled.end());
    if (gcd_of(filled) == 1) {
      check.weights.emplace(std::move(filled));
      check.verdict = classify(*check.weights, eps);
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace blowup
