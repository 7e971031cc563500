#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hrs/oracle.hpp"
#include "hrs/rng.hpp"

using namespace hrs;
using namespace tst;

namespace {

std::vector<Kmer> random_binary_set(int k, int size, Rng& rng) {
  HammingInstance inst(k, 2);
  std::set<std::uint64_t> chosen;
  const std::uint64_t n = inst.vertex_count_capped(1u << 20);
  while (static_cast<int>(chosen.size()) < size) chosen.insert(rng.below(n));
  std::vector<Kmer> out;
  for (std::uint64_t v : chosen) out.push_back(kmer_from_index(v, inst));
  return out;
}

// Naive all-pairs collision check, the reference for the sorted-table scan.
Status naive_verify(const std::vector<Kmer>& R) {
  const HammingInstance inst = R.front().instance;
  const std::uint64_t n = inst.vertex_count_capped(1u << 20);
  std::vector<std::vector<int>> phi;
  for (std::uint64_t i = 0; i < n; ++i) {
    Kmer v = kmer_from_index(i, inst);
    std::vector<int> row;
    for (const Kmer& r : R) row.push_back(hamming_distance(v, r));
    phi.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = i + 1; j < phi.size(); ++j)
      if (phi[i] == phi[j]) return Status::NotResolving;
  return Status::Resolving;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("brute force on the worked H_{2,3} sets") {
  Verdict v0 = brute_force_verify(r0());
  REQUIRE(v0.status == Status::NotResolving);
  REQUIRE(v0.witness.has_value());
  CHECK(witness_checks_out(*v0.witness, r0()));
  std::set<std::set<std::string>> allowed = {
      {"12", "01"}, {"21", "10"}, {"00", "22"}};
  CHECK(allowed.count({render_kmer(v0.witness->first), render_kmer(v0.witness->second)}) == 1);

  CHECK(brute_force_verify(r1()).status == Status::Resolving);

  std::vector<Kmer> full;
  for (std::uint64_t i = 0; i < 9; ++i) full.push_back(kmer_from_index(i, H23));
  CHECK(brute_force_verify(full).status == Status::Resolving);
}

TEST_CASE("vertex cap is enforced") {
  CHECK_THROWS_AS(brute_force_verify(set_of(H23, {"00"}), /*vertex_cap=*/4),
                  InstanceTooLarge);
}

TEST_CASE("all_unresolved_pairs lists exactly the three published pairs") {
  UnresolvedReport rep = all_unresolved_pairs(r0());
  CHECK_FALSE(rep.truncated);
  REQUIRE(rep.pairs.size() == 3);
  std::set<std::set<std::string>> got;
  for (const auto& [x, y] : rep.pairs) got.insert({render_kmer(x), render_kmer(y)});
  CHECK(got == std::set<std::set<std::string>>{{"12", "01"}, {"21", "10"}, {"00", "22"}});

  CHECK(all_unresolved_pairs(r1()).pairs.empty());

  UnresolvedReport lim = all_unresolved_pairs(r0(), 1);
  CHECK(lim.pairs.size() == 1);
  CHECK(lim.truncated);
}

TEST_CASE("exhaustive metric dimension at tiny scale") {
  CHECK(metric_dimension_exhaustive(HammingInstance(1, 3)).first == 2);
  CHECK(metric_dimension_exhaustive(H12).first == 1);
  auto [beta, witness] = metric_dimension_exhaustive(H23);
  CHECK(beta == 3);
  CHECK(brute_force_verify(witness).status == Status::Resolving);
  for (int a = 2; a <= 6; ++a)
    CHECK(metric_dimension_exhaustive(HammingInstance(1, a)).first == a - 1);
}

TEST_CASE("hypercube forms on hand-checked sets") {
  HammingInstance h22(2, 2);
  auto c_ok = set_of(h22, {"11", "10"});
  CHECK(hypercube_verify(c_ok, HypercubeForm::C).status == Status::Resolving);

  Verdict single = hypercube_verify(set_of(h22, {"11"}), HypercubeForm::C);
  REQUIRE(single.status == Status::NotResolving);
  REQUIRE(single.witness.has_value());
  CHECK(witness_checks_out(*single.witness, set_of(h22, {"11"})));

  CHECK(hypercube_verify(set_of(H12, {"1"}), HypercubeForm::C).status ==
        Status::Resolving);

  CHECK_THROWS_AS(hypercube_verify(r0(), HypercubeForm::B), NotBinary);
  CHECK_THROWS_AS(hypercube_verify(set_of(h22, {"01", "10"}), HypercubeForm::C),
                  MissingAllOnes);
}

TEST_CASE("normalize_to_ones flips to contain the all-ones word") {
  HammingInstance h22(2, 2);
  auto flipped = normalize_to_ones(set_of(h22, {"00", "01"}));
  CHECK(render_kmer(flipped[0]) == "11");
  CHECK(render_kmer(flipped[1]) == "10");

  auto same = normalize_to_ones(set_of(h22, {"11", "01"}));
  CHECK(render_kmer(same[0]) == "11");
  CHECK(render_kmer(same[1]) == "01");

  // Distances are preserved.
  auto orig = set_of(h22, {"00", "01"});
  CHECK(hamming_distance(orig[0], orig[1]) == hamming_distance(flipped[0], flipped[1]));

  CHECK_THROWS_AS(normalize_to_ones(r0()), NotBinary);
}

TEST_CASE("hypercube B and C forms agree with brute force on random sets") {
  Rng rng(808);
  for (int k = 2; k <= 8; ++k) {
    const std::uint64_t n = HammingInstance(k, 2).vertex_count_capped(1u << 20);
    for (int t = 0; t < 50; ++t) {
      int size = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(n, 2 * k)));
      auto R = random_binary_set(k, size, rng);
      Status truth = brute_force_verify(R).status;
      Verdict b = hypercube_verify(R, HypercubeForm::B);
      Verdict c = hypercube_verify(normalize_to_ones(R), HypercubeForm::C);
      CHECK(b.status == truth);
      CHECK(c.status == b.status);
      if (b.status == Status::NotResolving && b.witness)
        CHECK(witness_checks_out(*b.witness, R));
    }
  }
}

TEST_CASE("sorted-table collision scan equals naive all-pairs comparison") {
  Rng rng(4242);
  for (HammingInstance inst : {H22, H23, HammingInstance(3, 3), HammingInstance(4, 2),
                               HammingInstance(2, 5), HammingInstance(3, 4)}) {
    REQUIRE(inst.vertex_count_capped(512) <= 512);
    const std::uint64_t n = inst.vertex_count_capped(512);
    for (int t = 0; t < 8; ++t) {
      int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(inst.k * 2)));
      std::set<std::uint64_t> chosen;
      while (static_cast<int>(chosen.size()) < size) chosen.insert(rng.below(n));
      std::vector<Kmer> R;
      for (std::uint64_t v : chosen) R.push_back(kmer_from_index(v, inst));
      CHECK(brute_force_verify(R).status == naive_verify(R));
    }
  }
}

TEST_SUITE_END();
