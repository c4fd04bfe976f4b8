// Serial reference vs parallel kernels. Build target `vecdef_bench`; not
// part of the test suite.

#include <benchmark/benchmark.h>

#include <vector>

#include "vecdef/defenses.hpp"
#include "vecdef/kernels.hpp"
#include "vecdef/model.hpp"
#include "vecdef/rasterizer.hpp"
#include "vecdef/rng.hpp"

using namespace vecdef;

namespace {

std::vector<float> random_vec(size_t n, uint64_t seed) {
  Rng rng(seed);
  std::vector<float> v(n);
  for (auto& x : v) x = rng.uniform();
  return v;
}

const kernels::ConvShape kConv2 = nn::conv2_shape();

void BM_conv2_forward_ref(benchmark::State& state) {
  auto x = random_vec(size_t(kConv2.in_c) * kConv2.in_h * kConv2.in_w, 1);
  auto w = random_vec(size_t(kConv2.out_c) * kConv2.in_c * kConv2.k * kConv2.k, 2);
  auto b = random_vec(size_t(kConv2.out_c), 3);
  std::vector<float> y(size_t(kConv2.out_c) * kConv2.out_h() * kConv2.out_w());
  for (auto _ : state) {
    kernels::conv_forward_ref(x.data(), w.data(), b.data(), kConv2, y.data());
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_conv2_forward_ref)->Unit(benchmark::kMillisecond);

void BM_conv2_forward(benchmark::State& state) {
  auto x = random_vec(size_t(kConv2.in_c) * kConv2.in_h * kConv2.in_w, 1);
  auto w = random_vec(size_t(kConv2.out_c) * kConv2.in_c * kConv2.k * kConv2.k, 2);
  auto b = random_vec(size_t(kConv2.out_c), 3);
  std::vector<float> y(size_t(kConv2.out_c) * kConv2.out_h() * kConv2.out_w());
  std::vector<float> col(size_t(kConv2.col_size()));
  for (auto _ : state) {
    kernels::conv_forward(x.data(), w.data(), b.data(), kConv2, y.data(), col.data());
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_conv2_forward)->Unit(benchmark::kMillisecond);

void BM_gemm_ref(benchmark::State& state) {
  const int m = 64, k = 400, n = 256;
  auto a = random_vec(size_t(m) * k, 4);
  auto b = random_vec(size_t(k) * n, 5);
  std::vector<float> c(size_t(m) * n);
  for (auto _ : state) {
    kernels::gemm_ref(false, false, m, n, k, 1.0f, a.data(), k, b.data(), n, 0.0f, c.data(), n);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_gemm_ref)->Unit(benchmark::kMillisecond);

void BM_gemm(benchmark::State& state) {
  const int m = 64, k = 400, n = 256;
  auto a = random_vec(size_t(m) * k, 4);
  auto b = random_vec(size_t(k) * n, 5);
  std::vector<float> c(size_t(m) * n);
  for (auto _ : state) {
    kernels::gemm(false, false, m, n, k, 1.0f, a.data(), k, b.data(), n, 0.0f, c.data(), n);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_gemm)->Unit(benchmark::kMillisecond);

void BM_gemm_par(benchmark::State& state) {
  const int m = 128, k = 25600, n = 128;
  auto a = random_vec(size_t(m) * k, 4);
  auto b = random_vec(size_t(n) * k, 5);
  std::vector<float> c(size_t(m) * n);
  kernels::set_threads(int(state.range(0)));
  for (auto _ : state) {
    kernels::gemm_par(false, true, m, n, k, 1.0f, a.data(), k, b.data(), k, 0.0f, c.data(), n);
    benchmark::DoNotOptimize(c.data());
  }
  kernels::set_threads(0);
}
BENCHMARK(BM_gemm_par)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_knn_ref(benchmark::State& state) {
  const int n = 50000, dim = 16, nq = 49, K = 10;
  auto db = random_vec(size_t(n) * dim, 6);
  auto q = random_vec(size_t(nq) * dim, 7);
  std::vector<int> idx(size_t(nq) * K);
  for (auto _ : state) {
    kernels::knn_patches_ref(db.data(), n, dim, q.data(), nq, K, idx.data());
    benchmark::DoNotOptimize(idx.data());
  }
}
BENCHMARK(BM_knn_ref)->Unit(benchmark::kMillisecond);

void BM_knn_parallel(benchmark::State& state) {
  const int n = 50000, dim = 16, nq = 49, K = 10;
  auto db = random_vec(size_t(n) * dim, 6);
  auto q = random_vec(size_t(nq) * dim, 7);
  std::vector<int> idx(size_t(nq) * K);
  for (auto _ : state) {
    kernels::knn_patches(db.data(), n, dim, q.data(), nq, K, idx.data());
    benchmark::DoNotOptimize(idx.data());
  }
}
BENCHMARK(BM_knn_parallel)->Unit(benchmark::kMillisecond);

void BM_vector_defense(benchmark::State& state) {
  Rng rng(8);
  GrayImage img(28, 28);
  for (int y = 8; y < 20; ++y)
    for (int x = 8; x < 20; ++x) img.at(x, y) = rng.uniform(0.6f, 1.0f);
  for (auto _ : state) {
    GrayImage out = defense::vector_defense(img);
    benchmark::DoNotOptimize(out.pix.data());
  }
}
BENCHMARK(BM_vector_defense)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
