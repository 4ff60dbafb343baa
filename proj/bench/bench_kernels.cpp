// Serial reference loops against the OpenMP loops on the table kernels.

#include <benchmark/benchmark.h>

#include "lazard/catalog.hpp"

using namespace lazard;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }
void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

const LieRingSC& filiform() {
  static const LieRingSC L = filiformLie(7, 4);
  return L;
}

const PostLieRing& postLie() {
  static const PostLieRing P = scaledBracket(filiformLie(5, 4), -1);
  return P;
}

void BM_ToTable(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(toTable(filiform(), mode(st)));
  label(st);
}

void BM_Laz(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(laz(filiform(), mode(st)));
  label(st);
}

void BM_LazInv(benchmark::State& st) {
  const FinGroup G = laz(filiform());
  for (auto _ : st) benchmark::DoNotOptimize(lazInv(G, mode(st)));
  label(st);
}

void BM_ConstructS(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(constructS(postLie(), mode(st)));
  label(st);
}

void BM_VerifySkewBrace(benchmark::State& st) {
  const SkewBrace B = constructS(postLie());
  for (auto _ : st) benchmark::DoNotOptimize(verifySkewBrace(B, mode(st)));
  label(st);
}

void BM_ConstructL(benchmark::State& st) {
  const SkewBrace B = constructS(postLie());
  for (auto _ : st) benchmark::DoNotOptimize(constructL(B, nullptr, mode(st)));
  label(st);
}

void BM_EnumerateBracesLambda(benchmark::State& st) {
  const FinGroup A = abelianGroup(PShape(5, {1, 1}));
  for (auto _ : st) benchmark::DoNotOptimize(enumerateBracesLambda(A, false, mode(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_ToTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Laz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LazInv)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstructS)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySkewBrace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstructL)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateBracesLambda)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
