#include "blowup/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "blowup/classifier.hpp"
#include "blowup/errors.hpp"

namespace blowup {
namespace {

using Tuple = std::array<std::int64_t, 5>;

std::array<Rat, 5> rats(Tuple t) {
  std::array<Rat, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = Rat(t[i]);
  return out;
}

struct RatioEntry {
  const char* id;
  int apex;
  Rat bound;
};

// Rows of the ratio table: the q1 : -q3 column is apex 3, the -q5 : q2 column
// is apex 2.
const std::vector<RatioEntry> kRatioTable = {
    {"Q2", 3, Rat(9)},       {"Q6", 2, Rat(8)},   {"Q7", 3, Rat(12)},  {"Q9", 3, Rat(12)},
    {"Q11", 3, Rat(15, 2)},  {"Q11", 2, Rat(9)},  {"Q15", 2, Rat(7)},  {"Q16", 3, Rat(14)},
    {"Q18", 2, Rat(8)},      {"Q19", 3, Rat(15)}, {"Q20", 3, Rat(15, 2)}, {"Q21", 2, Rat(9)},
    {"Q23", 3, Rat(18)},     {"Q24", 2, Rat(10)}, {"Q25", 2, Rat(10)}, {"Q27", 3, Rat(20)},
    {"Q28", 2, Rat(12)},     {"Q29", 2, Rat(15)}, {"N5", 3, Rat(8)},
};

TEST(Table, ShapeAndOrdering) {
  const auto rows = quintuple_table();
  ASSERT_EQ(rows.size(), 46u);
  std::set<std::string_view> ids;
  for (const auto& q : rows) {
    ids.insert(q.id);
    EXPECT_EQ(std::accumulate(q.base.begin(), q.base.end(), std::int64_t{0}), 0) << q.id;
    const auto& b = q.base;
    EXPECT_TRUE(b[0] > b[1] && b[1] > 0 && 0 > b[2] && b[2] >= b[3] && b[3] >= b[4]) << q.id;
    Rat msum(0);
    for (const auto& r : q.modifier) msum += r;
    if (q.id[0] == 'Q') {
      EXPECT_TRUE(q.primitive()) << q.id;
      EXPECT_EQ(q.modifier_denominator(), 1);
    } else {
      EXPECT_FALSE(q.primitive()) << q.id;
      EXPECT_TRUE(msum == Rat(1) || msum == Rat(-1)) << q.id;
      const auto m = q.modifier_denominator();
      EXPECT_TRUE(m == 2 || m == 3 || m == 4 || m == 6) << q.id;
    }
  }
  EXPECT_EQ(ids.size(), 46u);
}

TEST(Table, Rows) {
  EXPECT_EQ(find_quintuple("Q29").base, (Tuple{30, 1, -6, -10, -15}));
  EXPECT_EQ(find_quintuple("Q11").base, (Tuple{15, 1, -2, -5, -9}));
  EXPECT_EQ(find_quintuple("Q1").base, (Tuple{9, 1, -2, -3, -5}));
  const auto& n5 = find_quintuple("N5");
  EXPECT_EQ(n5.base, (Tuple{8, 3, -1, -4, -6}));
  EXPECT_EQ(n5.modifier, (std::array<Rat, 5>{Rat(0), Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)}));
  EXPECT_THROW(find_quintuple("Q30"), InvalidArgument);
}

TEST(Instantiate, Examples) {
  EXPECT_EQ(instantiate(find_quintuple("Q29"), 37), rats({30, 1, -6, -10, -15}));
  EXPECT_EQ(instantiate(find_quintuple("Q29"), 1000), rats({30, 1, -6, -10, -15}));
  EXPECT_EQ(instantiate(find_quintuple("N5"), 10), rats({8, 3, -1, 1, -1}));
  EXPECT_EQ(instantiate(find_quintuple("N1"), 4), rats({8, 1, -2, 0, -3}));
  EXPECT_EQ(instantiate(find_quintuple("N7"), 6, Sign::Minus), rats({3, 1, -3, -5, -2}));
  EXPECT_EQ(instantiate(find_quintuple("N7"), 6, Sign::Plus), rats({3, 1, 1, 3, -2}));
  EXPECT_THROW(instantiate(find_quintuple("N5"), 9), InvalidArgument);
  EXPECT_THROW(instantiate(find_quintuple("N17"), 8), InvalidArgument);
}

TEST(Instantiate, SumIsAMultipleOfV) {
  for (const auto& q : quintuple_table()) {
    const auto m = q.modifier_denominator();
    for (std::int64_t V = m; V <= 60; V += m) {
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        const auto a = instantiate(q, V, sign);
        Rat s(0);
        for (const auto& x : a) {
          EXPECT_TRUE(x.is_integer());
          s += x;
        }
        EXPECT_EQ(s.num() % V, 0) << q.id << " V=" << V;
      }
    }
  }
}

TEST(Recipe, Examples) {
  const auto& q29 = find_quintuple("Q29");
  EXPECT_EQ(blowup_from_quintuple(q29, 2, 37), WeightVector({7, 6, 10, 15}));
  // V = 36 is not coprime with 30, yet the apex entry 1 is a unit and the
  // residues (6, 6, 10, 15) happen to sum to 37 and be primitive.
  const auto v36 = blowup_from_quintuple(q29, 2, 36);
  ASSERT_TRUE(v36);
  EXPECT_EQ(*v36, WeightVector({6, 6, 10, 15}));
  EXPECT_FALSE(classify(*v36, Rat(1)).eps_log_terminal);
  // gcd(30, 37) = 1: the unit step succeeds, the sum test decides.
  const auto l1 = blowup_from_quintuple(q29, 1, 37);
  if (l1) {
    EXPECT_EQ(l1->index(), 37);
    EXPECT_TRUE(classify(*l1, Rat(1)).eps_log_canonical);
  }
  // Apex entry not a unit mod V.
  EXPECT_FALSE(blowup_from_quintuple(q29, 1, 36));
  EXPECT_THROW(blowup_from_quintuple(q29, 0, 37), InvalidArgument);
  EXPECT_THROW(blowup_from_quintuple(q29, 6, 37), InvalidArgument);
}

TEST(Recipe, SixTenFifteenFamilyForEveryVolumeCoprimeToThirty) {
  const auto& q29 = find_quintuple("Q29");
  for (std::int64_t V = 31; V <= 300; ++V) {
    if (std::gcd(V, std::int64_t{30}) != 1) continue;
    const auto n = blowup_from_quintuple(q29, 2, V);
    ASSERT_TRUE(n) << V;
    EXPECT_EQ(*n, WeightVector({V - 30, 6, 10, 15}));
    EXPECT_TRUE(is_terminal_fast(*n)) << V;
  }
}

TEST(Recipe, OutputSatisfiesTheInstanceInvariants) {
  for (const auto& q : quintuple_table()) {
    const auto m = q.modifier_denominator();
    for (std::int64_t V = m; V <= 120; V += m) {
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        const auto a = instantiate(q, V, sign);
        for (int l = 1; l <= 5; ++l) {
          const auto n = blowup_from_quintuple(q, l, V, sign);
          if (!n) continue;
          EXPECT_EQ(n->index(), V);
          EXPECT_TRUE(n->all_positive());
          // Round trip: n is the instance with entry l dropped, times the
          // unit u with u a_l = -1 mod V.
          const std::int64_t al = ((a[l - 1].num() % V) + V) % V;
          std::int64_t u = 0;
          for (std::int64_t c = 1; c < V || (V == 1 && c == 1); ++c) {
            if ((c * al) % V == (V - 1) % V) {
              u = c;
              break;
            }
          }
          std::size_t j = 0;
          for (int i = 1; i <= 5; ++i) {
            if (i == l) continue;
            const std::int64_t ai = ((a[i - 1].num() % V) + V) % V;
            EXPECT_EQ((*n)[j++] % V, (u * ai) % V) << q.id << " l=" << l << " V=" << V;
          }
        }
      }
    }
  }
}

TEST(BoundDim1, Examples) {
  EXPECT_EQ(bound_dim1(find_quintuple("Q29"), 2), Rat(15));
  EXPECT_EQ(bound_dim1(find_quintuple("Q2"), 3), Rat(9));
  EXPECT_EQ(bound_dim1(find_quintuple("Q1"), 1), Rat(5, 9));
  const Tuple t{2, 0, -1, -1, 0};
  EXPECT_THROW(bound_dim1(std::span<const std::int64_t, 5>(t), 2), InvalidArgument);
}

TEST(BoundDim1, ReproducesTheRatioTable) {
  for (const auto& e : kRatioTable) {
    EXPECT_EQ(bound_dim1(find_quintuple(e.id), e.apex), e.bound) << e.id << " l=" << e.apex;
  }
}

TEST(RatioCheck, FailsExactlyOnTheTabulatedRows) {
  std::set<std::string_view> tabulated;
  for (const auto& e : kRatioTable) tabulated.insert(e.id);
  EXPECT_EQ(tabulated.size(), 18u);
  for (const auto& q : quintuple_table()) {
    EXPECT_EQ(check_ratio_lemma(q), !tabulated.count(q.id)) << q.id;
  }
  EXPECT_TRUE(check_ratio_lemma(find_quintuple("Q1")));
  EXPECT_FALSE(check_ratio_lemma(find_quintuple("Q2")));
  EXPECT_FALSE(check_ratio_lemma(find_quintuple("Q29")));
}

TEST(BoundSubset, Examples) {
  const std::int64_t V = 41;
  const std::vector<Rat> q11{Rat(15, V), Rat(1, V), Rat(-5, V), Rat(-9, V)};
  const std::vector<std::size_t> j14{0, 3};
  EXPECT_EQ(bound_subset(q11, j14, 3), 3);
  EXPECT_FALSE(bound_subset(q11, j14, 2));

  const std::vector<Rat> q20{Rat(15, V), Rat(4, V), Rat(-5, V), Rat(-12, V)};
  const std::vector<std::size_t> j13{0, 2};
  EXPECT_EQ(bound_subset(q20, j13, 5), 5);

  // N5 with apex 3 at V = 2W: p = (8, 3, W - 4, W - 6) / V.
  for (std::int64_t W = 8; W <= 40; ++W) {
    const std::int64_t v = 2 * W;
    const std::vector<Rat> n5{Rat(8, v), Rat(3, v), Rat(W - 4, v), Rat(W - 6, v)};
    const std::vector<std::size_t> j2{1};
    EXPECT_EQ(bound_subset(n5, j2, 3), 3) << v;
  }

  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_THROW(bound_subset(q11, all, 3), InvalidArgument);
  const std::vector<std::size_t> none;
  EXPECT_THROW(bound_subset(q11, none, 3), InvalidArgument);
}

// Whenever the recipe yields a terminal blowup, its smallest weight obeys the
// line bound of the apex.
TEST(BoundDim1, BoundsEveryTerminalInstance) {
  for (const auto& q : quintuple_table()) {
    const auto m = q.modifier_denominator();
    for (std::int64_t V = m; V <= 150; V += m) {
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        for (int l = 1; l <= 5; ++l) {
          const auto n = blowup_from_quintuple(q, l, V, sign);
          if (!n || !is_terminal_fast(*n)) continue;
          EXPECT_LE(Rat(n->min_weight()), bound_dim1(q, l)) << q.id << " l=" << l << " V=" << V;
        }
      }
    }
  }
}

TEST(Csv, HeaderAndRows) {
  const auto csv = quintuple_table_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,q1,q2,q3,q4,q5,r1,r2,r3,r4,r5,r_den,plus_minus");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 47);
  EXPECT_NE(csv.find("N5,8,3,-1,-4,-6,0,0,0,1,1,2,0\n"), std::string::npos);
  EXPECT_NE(csv.find("N17,3,1,-1,-1,-2,0,1,0,1,4,6,1\n"), std::string::npos);
}

}  // namespace
}  // namespace blowup

namespace blowup {
namespace {

// Every family member is a hollow simplex, so every blowup the recipe emits
// is at least canonical, whichever sign is chosen.
TEST(Recipe, EveryInstanceIsCanonical) {
  std::size_t instances = 0;
  for (const auto& q : quintuple_table()) {
    const auto m = q.modifier_denominator();
    for (std::int64_t V = m; V <= 300; V += m) {
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        if (sign == Sign::Minus && !q.has_sign) continue;
        for (int l = 1; l <= 5; ++l) {
          const auto n = blowup_from_quintuple(q, l, V, sign);
          if (!n) continue;
          ++instances;
          EXPECT_TRUE(is_canonical_fast(*n)) << q.id << " l=" << l << " V=" << V;
          if (is_terminal_fast(*n)) EXPECT_LE(n->min_weight(), 6) << q.id << " V=" << V;
        }
      }
    }
  }
  EXPECT_GT(instances, 10000u);
}

// With apex 3 the N5 members are (8, 3, V/2 - 4, V/2 - 6): the subset bound
// s = 3 on n_2 is attained by terminal members, so it cannot be sharpened to 2.
TEST(BoundSubset, N5BoundIsAttained) {
  const auto& n5 = find_quintuple("N5");
  const auto n = blowup_from_quintuple(n5, 3, 22);
  ASSERT_TRUE(n);
  EXPECT_EQ(*n, WeightVector({8, 3, 7, 5}));
  EXPECT_TRUE(classify(*n, Rat(1)).eps_log_terminal);
  std::vector<Rat> p;
  for (auto w : n->weights()) p.push_back(Rat(w, 22));
  const std::vector<std::size_t> j2{1};
  EXPECT_EQ(bound_subset(p, j2, 3), 3);
}

}  // namespace
}  // namespace blowup
