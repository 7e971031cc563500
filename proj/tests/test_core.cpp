#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "hrs/rng.hpp"
#include "hrs/set_io.hpp"

using namespace hrs;
using namespace tst;

TEST_SUITE_BEGIN("core");

TEST_CASE("parse_kmer maps digits, alphabets, and rejects bad symbols") {
  CHECK(parse_kmer("02", H23).symbols == std::vector<int>{0, 2});

  HammingInstance amino(8, 20, std::string("arndcqeghilkmfpstwyv"));
  CHECK(parse_kmer("aaaraaaa", amino).symbols ==
        std::vector<int>{0, 0, 0, 1, 0, 0, 0, 0});

  CHECK_THROWS_AS(parse_kmer("03", H23), UnknownSymbol);
  CHECK_THROWS_AS(parse_kmer("021", H23), LengthMismatch);
  CHECK_THROWS_AS(parse_kmer("0", H23), LengthMismatch);
}

TEST_CASE("parse then render is the identity") {
  for (const char* t : {"00", "01", "02", "10", "11", "12", "20", "21", "22"})
    CHECK(render_kmer(parse_kmer(t, H23)) == t);

  HammingInstance amino(8, 20, std::string("arndcqeghilkmfpstwyv"));
  CHECK(render_kmer(parse_kmer("ccchhhhh", amino)) == "ccchhhhh");

  // a > 10 without an alphabet: comma-separated integers.
  HammingInstance wide(3, 12);
  Kmer v = parse_kmer("0,11,7", wide);
  CHECK(v.symbols == std::vector<int>{0, 11, 7});
  CHECK(render_kmer(v) == "0,11,7");
}

TEST_CASE("hamming_distance basics") {
  CHECK(hamming_distance(parse_kmer("02", H23), parse_kmer("11", H23)) == 2);
  for (const char* t : {"00", "12", "21"}) {
    Kmer v = parse_kmer(t, H23);
    CHECK(hamming_distance(v, v) == 0);
  }
  CHECK(hamming_distance(parse_kmer("00", H23), parse_kmer("22", H23)) == 2);

  // The unresolved pairs of R_0 share distances to both its elements.
  for (auto [s, t] : std::vector<std::pair<const char*, const char*>>{
           {"12", "01"}, {"21", "10"}, {"00", "22"}}) {
    Kmer x = parse_kmer(s, H23), y = parse_kmer(t, H23);
    for (const Kmer& r : r0())
      CHECK(hamming_distance(x, r) == hamming_distance(y, r));
  }

  Kmer other = parse_kmer("00", H22);
  CHECK_THROWS_AS(hamming_distance(parse_kmer("00", H23), other), InstanceMismatch);
}

TEST_CASE("one_hot_vec produces column-major one-hot blocks") {
  CHECK(one_hot_vec(parse_kmer("02", H23)) ==
        std::vector<std::int8_t>{1, 0, 0, 0, 0, 1});
  CHECK(one_hot_vec(parse_kmer("11", H23)) ==
        std::vector<std::int8_t>{0, 1, 0, 0, 1, 0});
  CHECK(one_hot_vec(parse_kmer("22", H23)) ==
        std::vector<std::int8_t>{0, 0, 1, 0, 0, 1});
}

TEST_CASE("build_A matches the 2x6 matrix for {02,11}") {
  ModelMatrix A0 = build_A(r0());
  REQUIRE(A0.n() == 2);
  REQUIRE(A0.cols() == 6);
  CHECK(A0.rows[0] == std::vector<std::int8_t>{1, 0, 0, 0, 0, 1});
  CHECK(A0.rows[1] == std::vector<std::int8_t>{0, 1, 0, 0, 1, 0});

  ModelMatrix single = build_A(set_of(H12, {"0"}));
  CHECK(single.rows == std::vector<std::vector<std::int8_t>>{{1, 0}});

  CHECK_THROWS_AS(build_A({}), EmptySet);
}

TEST_CASE("build_A drops duplicates and every row is blockwise one-hot") {
  auto dup = set_of(H23, {"02", "11", "02"});
  ModelMatrix A = build_A(dup, /*warn=*/false);
  CHECK(A.n() == 2);

  for (const auto& row : A.rows) {
    for (int b = 0; b < A.instance.k; ++b) {
      int ones = 0;
      for (int j = 0; j < A.instance.a; ++j)
        ones += row[static_cast<std::size_t>(b * A.instance.a + j)];
      CHECK(ones == 1);
    }
  }
}

static void check_lemma21(const Kmer& u, const Kmer& v) {
  const int k = u.instance.k;
  auto U = one_hot_vec(u), V = one_hot_vec(v);
  int dot = 0, flipdot = 0;
  for (std::size_t j = 0; j < U.size(); ++j) {
    dot += U[j] * V[j];
    flipdot += U[j] * (1 - V[j]);
  }
  const int d = hamming_distance(u, v);
  CHECK(d == k - dot);
  CHECK(d == flipdot);
}

TEST_CASE("distance identities d = k - <U,V> and d = <U, flip V>") {
  // Exhaustive over all pairs when a^k <= 1000.
  for (HammingInstance inst : {H12, H22, H23, HammingInstance(3, 3),
                               HammingInstance(2, 5), HammingInstance(5, 2)}) {
    const std::uint64_t n = inst.vertex_count_capped(1000);
    REQUIRE(n <= 1000);
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = i; j < n; ++j)
        check_lemma21(kmer_from_index(i, inst), kmer_from_index(j, inst));
  }

  // Random pairs on a large instance.
  HammingInstance big(8, 20);
  Rng rng(2024);
  const std::uint64_t n = 25600000000ULL;  // 20^8
  for (int t = 0; t < 100000; ++t)
    check_lemma21(kmer_from_index(rng.below(n), big), kmer_from_index(rng.below(n), big));
}

TEST_CASE("difference_to_pair decodes blockwise canonical differences") {
  auto p = difference_to_pair({-1, 1, 0, 0, -1, 1}, H23);
  REQUIRE(p.has_value());
  CHECK(render_kmer(p->first) == "12");
  CHECK(render_kmer(p->second) == "01");

  // Zero block: both sides get symbol 0 there.
  auto q = difference_to_pair({0, 0, 0, 1, -1, 0}, H23);
  REQUIRE(q.has_value());
  CHECK(render_kmer(q->first) == "00");
  CHECK(render_kmer(q->second) == "01");

  CHECK_FALSE(difference_to_pair({0, 0, 0, 0, 0, 0}, H23).has_value());
  CHECK_FALSE(difference_to_pair({1, 1, -1, 0, 0, 0}, H23).has_value());
  CHECK_FALSE(difference_to_pair({1, 0, 0, 0, 0, 0}, H23).has_value());
}

TEST_CASE("vertex index round-trip") {
  for (std::uint64_t i = 0; i < 9; ++i)
    CHECK(kmer_to_index(kmer_from_index(i, H23)) == i);
  HammingInstance big(8, 20);
  CHECK(kmer_to_index(kmer_from_index(123456789, big)) == 123456789);
}

TEST_CASE("hrs-set v1 read/write round-trip") {
  std::string text =
      "# comment line\n"
      "k=2 a=3\n"
      "02\n"
      "# another comment\n"
      "11\n"
      "22\n";
  std::istringstream in(text);
  VertexSet set = read_set(in);
  CHECK(set.instance.k == 2);
  CHECK(set.instance.a == 3);
  REQUIRE(set.kmers.size() == 3);
  CHECK(render_kmer(set.kmers[0]) == "02");

  std::ostringstream out;
  write_set(out, set);
  std::istringstream back(out.str());
  VertexSet again = read_set(back);
  CHECK(again.kmers == set.kmers);
}

TEST_CASE("hrs-set v1 alphabet header") {
  std::string text = "k=8 a=20 alphabet=arndcqeghilkmfpstwyv\naaaraaaa\n";
  std::istringstream in(text);
  VertexSet set = read_set(in);
  REQUIRE(set.kmers.size() == 1);
  CHECK(set.kmers[0].symbols == std::vector<int>{0, 0, 0, 1, 0, 0, 0, 0});
  std::ostringstream out;
  write_set(out, set);
  CHECK(out.str().find("alphabet=arndcqeghilkmfpstwyv") != std::string::npos);
  CHECK(out.str().find("aaaraaaa") != std::string::npos);
}

TEST_CASE("hrs-set v1 rejects malformed input") {
  std::istringstream bad1("no header here\n");
  CHECK_THROWS_AS(read_set(bad1), ParseError);
  std::istringstream bad2("k=2 a=3\n0x\n");
  CHECK_THROWS(read_set(bad2));
}

TEST_SUITE_END();
