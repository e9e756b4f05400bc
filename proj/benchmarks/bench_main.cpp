#include <benchmark/benchmark.h>

#include <mcq/affine.hpp>
#include <mcq/alexander.hpp>
#include <mcq/mcq.hpp>
#include <mcq/quandle.hpp>

using namespace mcq;

namespace {

// S_3 as permutation composition, same convention as the test suites.
FiniteGroup s3() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  GroupCandidate c;
  c.order = 6;
  c.cayley.assign(6, std::vector<Index>(6));
  for (Index p = 0; p < 6; ++p)
    for (Index q = 0; q < 6; ++q) {
      int composed[3];
      for (int i = 0; i < 3; ++i) composed[i] = perms[q][perms[p][i]];
      for (Index k = 0; k < 6; ++k)
        if (perms[k][0] == composed[0] && perms[k][1] == composed[1] &&
            perms[k][2] == composed[2])
          c.cayley[p][q] = k;
    }
  return *check_group(c).group;
}

GFamily r3_family() { return z_family_from_quandle(dihedral_quandle(3)); }

SixTuple transported_tuple() {
  const FiniteMcq m = associated_mcq(r3_family());
  const FiniteRing r = ring_zn(5);
  SixTuple t = trivial_tuple(m, r, module_self(r));
  return transport_six_tuple(t, random_witness(t, 12345));
}

void BM_verify_mcq_conj_s3(benchmark::State& state) {
  const McqCandidate candidate = as_candidate(mcq_from_group(s3()));
  for (auto _ : state) benchmark::DoNotOptimize(verify_mcq(candidate).pass);
}
BENCHMARK(BM_verify_mcq_conj_s3);

void BM_quandle_type(benchmark::State& state) {
  const FiniteQuandle q = alexander_quandle_zn(101, 2);
  for (auto _ : state) benchmark::DoNotOptimize(quandle_type(q));
}
BENCHMARK(BM_quandle_type);

void BM_enumerate_pairs_z3(benchmark::State& state) {
  const FiniteMcq m = mcq_from_group(cyclic_group(2));
  const FiniteRing r = ring_zn(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairs(m, r).size());
}
BENCHMARK(BM_enumerate_pairs_z3);

void BM_verify_six_tuple(benchmark::State& state) {
  const SixTuple t = transported_tuple();
  for (auto _ : state) benchmark::DoNotOptimize(verify_six_tuple(t).pass);
}
BENCHMARK(BM_verify_six_tuple);

void BM_certify_reduction(benchmark::State& state) {
  const SixTuple t = transported_tuple();
  for (auto _ : state) benchmark::DoNotOptimize(certify_reduction(t).ok);
}
BENCHMARK(BM_certify_reduction);

void BM_iso_search_self(benchmark::State& state) {
  const FiniteMcq m = associated_mcq(r3_family());
  for (auto _ : state) benchmark::DoNotOptimize(mcq_iso_search(m, m).has_value());
}
BENCHMARK(BM_iso_search_self);

}  // namespace

BENCHMARK_MAIN();
