#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lvelab/errors.hpp"
#include "lvelab/oracles.hpp"
#include "lvelab/parallel.hpp"
#include "lvelab/rng.hpp"

namespace lvelab {

namespace {

constexpr int kChains = 8;
constexpr int kBatchesPerChain = 8;

/* The three invariant observables per state: o1 = Tr MM†, o2 = (Tr MM†)^2,
   o3 = Tr(MM†MM†).  o1 and o3 are part of the action, so they are cached
   with the state and rejections cost nothing. */
struct Observables {
  double o1 = 0.0;
  double o3 = 0.0;
};

Observables evaluate(const Eigen::MatrixXcd& m) {
  Observables obs;
  obs.o1 = m.squaredNorm();
  Eigen::MatrixXcd p = m * m.adjoint();
  obs.o3 = p.squaredNorm();
  return obs;
}

double action_of(const Observables& obs, int N, double lambda) {
  return obs.o1 + lambda / (2.0 * N) * obs.o3;
}

struct ChainLayout {
  long long burn = 0;
  long long batch_len = 0;
};

ChainLayout chain_layout(long long steps) {
  long long per_chain = steps / kChains;
  ChainLayout layout;
  layout.burn = per_chain / 10;
  layout.batch_len = (per_chain - layout.burn) / kBatchesPerChain;
  return layout;
}

/* One Metropolis chain with full-matrix Gaussian proposals.  The step size
   is tuned during burn-in towards an acceptance rate in [0.23, 0.5] and
   then frozen.  Batch means of (o1, o2, o3) land in the caller's slots. */
void run_chain(int N, double lambda, const ChainLayout& layout, Rng rng,
               double* bo1, double* bo2, double* bo3) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
  Eigen::MatrixXcd proposal(N, N);
  Observables obs = evaluate(m);
  double action = action_of(obs, N, lambda);

  double step = 0.5;
  int window_accepted = 0;
  int window_size = 0;
  long long total = layout.burn + kBatchesPerChain * layout.batch_len;

  for (long long s = 0; s < total; ++s) {
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c)
        proposal(r, c) = m(r, c) + step * rng.complex_gaussian();
    Observables next = evaluate(proposal);
    double next_action = action_of(next, N, lambda);
    if (rng.uniform() < std::exp(action - next_action)) {
      m = proposal;
      obs = next;
      action = next_action;
      ++window_accepted;
    }
    ++window_size;

    if (s < layout.burn) {
      if (window_size == 200) {
        double rate = window_accepted / 200.0;
        if (rate > 0.5)
          step *= 1.25;
        else if (rate < 0.23)
          step /= 1.25;
        step = std::clamp(step, 1e-3, 10.0);
        window_accepted = 0;
        window_size = 0;
      }
      continue;
    }

    long long b = (s - layout.burn) / layout.batch_len;
    bo1[b] += obs.o1;
    bo2[b] += obs.o1 * obs.o1;
    bo3[b] += obs.o3;
  }

  for (int b = 0; b < kBatchesPerChain; ++b) {
    bo1[b] /= layout.batch_len;
    bo2[b] /= layout.batch_len;
    bo3[b] /= layout.batch_len;
  }
}

struct BatchMeans {
  std::vector<double> o1;
  std::vector<double> o2;
  std::vector<double> o3;
  long long samples = 0;
};

BatchMeans collect_batches(int N, double lambda, long long steps,
                           std::uint64_t seed) {
  if (N < 1) throw domain_error("mc_matrix: N must be positive");
  if (N > 8) throw capacity_error("mc_matrix: capped at N <= 8");
  if (lambda < 0.0)
    throw domain_error("mc_matrix: negative coupling is a sign-problem regime");
  ChainLayout layout = chain_layout(steps);
  if (layout.batch_len < 10)
    throw domain_error("mc_matrix: too few steps for the fixed chain layout");

  int total_batches = kChains * kBatchesPerChain;
  BatchMeans batches;
  batches.o1.assign(total_batches, 0.0);
  batches.o2.assign(total_batches, 0.0);
  batches.o3.assign(total_batches, 0.0);
  batches.samples =
      static_cast<long long>(kChains) * kBatchesPerChain * layout.batch_len;

  run_chunks(kChains, resolve_workers(0), [&](int chain) {
    int at = chain * kBatchesPerChain;
    run_chain(N, lambda, layout, Rng::for_chunk(seed, chain),
              batches.o1.data() + at, batches.o2.data() + at,
              batches.o3.data() + at);
  });
  return batches;
}

double mean_of(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / v.size();
}

double stderr_of(const std::vector<double>& v, double mean) {
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  std::size_t b = v.size();
  return std::sqrt(ss / (static_cast<double>(b) * (b - 1)));
}

/* Solve the extraction system
     s_a = 2(N^2+1) K11 + 4N K2,   s_b = 4N K11 + 2(N^2+1) K2
   where s_a, s_b are the connected combinations of the observable means. */
std::pair<double, double> extract_k2(double m1, double m2, double m3, int N) {
  double sa = m2 - m1 * m1 - m1 * m1 / (static_cast<double>(N) * N);
  double sb = m3 - 2.0 * m1 * m1 / N;
  double diag = 2.0 * (static_cast<double>(N) * N + 1);
  double off = 4.0 * N;
  double det = diag * diag - off * off;
  double k11 = (diag * sa - off * sb) / det;
  double k2 = (diag * sb - off * sa) / det;
  return {k2, k11};
}

}  // namespace

McEstimate mc_matrix_cumulant_k1(int N, double lambda, long long steps,
                                 std::uint64_t seed) {
  BatchMeans batches = collect_batches(N, lambda, steps, seed);
  std::vector<double> k(batches.o1.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = batches.o1[i] / N;
  double mean = mean_of(k);
  McEstimate est;
  est.mean = mean;
  est.stderror = stderr_of(k, mean);
  est.samples = batches.samples;
  est.seed = seed;
  return est;
}

K2Estimates mc_matrix_cumulant_k2(int N, double lambda, long long steps,
                                  std::uint64_t seed) {
  if (N < 2)
    throw domain_error("mc_matrix: the k = 2 extraction is singular at N = 1");
  BatchMeans batches = collect_batches(N, lambda, steps, seed);
  int b = static_cast<int>(batches.o1.size());
  double m1 = mean_of(batches.o1);
  double m2 = mean_of(batches.o2);
  double m3 = mean_of(batches.o3);
  auto [k2_point, k11_point] = extract_k2(m1, m2, m3, N);

  /* Jackknife over batches: the estimator is nonlinear in the observable
     means, so leave-one-out replicates capture the propagated error. */
  std::vector<double> rep_k2(b), rep_k11(b);
  for (int i = 0; i < b; ++i) {
    double j1 = (b * m1 - batches.o1[i]) / (b - 1);
    double j2 = (b * m2 - batches.o2[i]) / (b - 1);
    double j3 = (b * m3 - batches.o3[i]) / (b - 1);
    auto [k2_i, k11_i] = extract_k2(j1, j2, j3, N);
    rep_k2[i] = k2_i;
    rep_k11[i] = k11_i;
  }
  double bar_k2 = mean_of(rep_k2);
  double bar_k11 = mean_of(rep_k11);
  double var_k2 = 0.0, var_k11 = 0.0;
  for (int i = 0; i < b; ++i) {
    var_k2 += (rep_k2[i] - bar_k2) * (rep_k2[i] - bar_k2);
    var_k11 += (rep_k11[i] - bar_k11) * (rep_k11[i] - bar_k11);
  }
  double scale = static_cast<double>(b - 1) / b;

  K2Estimates out;
  out.k2.mean = k2_point;
  out.k2.stderror = std::sqrt(scale * var_k2);
  out.k2.samples = batches.samples;
  out.k2.seed = seed;
  out.k11.mean = k11_point;
  out.k11.stderror = std::sqrt(scale * var_k11);
  out.k11.samples = batches.samples;
  out.k11.seed = seed;
  out.condition = (static_cast<double>(N) + 1) * (N + 1) /
                  (static_cast<double>(N - 1) * (N - 1));
  return out;
}

}  // namespace lvelab
