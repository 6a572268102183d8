#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lvelab/errors.hpp"
#include "lvelab/oracles.hpp"
#include "lvelab/parallel.hpp"
#include "lvelab/rng.hpp"

namespace lvelab {

namespace {

constexpr int kChunks = 64;

/* Weakened covariance of the vertex fields: entry (i, j) is the infimum of
   the weakening parameters along the spanning-tree path between i and j.
   Same walk as tree_covariance, restricted to the distinguished tree. */
std::vector<std::vector<double>> weakened_covariance(
    const LveGraph& g, const std::vector<double>& t) {
  int v = g.map().vertex_count();
  std::vector<std::vector<std::pair<int, double>>> adj(v);
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto [a, b] = g.map().pairs()[g.tree_edges()[i]];
    int u = g.map().vertex_of(a), w = g.map().vertex_of(b);
    adj[u].push_back({w, t[i]});
    adj[w].push_back({u, t[i]});
  }
  std::vector<std::vector<double>> c(v, std::vector<double>(v, 0.0));
  for (int s = 0; s < v; ++s) {
    c[s][s] = 1.0;
    std::vector<std::pair<int, double>> stack{{s, 1.0}};
    std::vector<char> vis(v, 0);
    vis[s] = 1;
    while (!stack.empty()) {
      auto [u, m] = stack.back();
      stack.pop_back();
      for (auto [w, tw] : adj[u]) {
        if (vis[w]) continue;
        vis[w] = 1;
        double mm = std::min(m, tw);
        c[s][w] = mm;
        stack.push_back({w, mm});
      }
    }
  }
  return c;
}

/* Square root of a positive semidefinite matrix through its spectral
   decomposition; tiny negative eigenvalues from roundoff are clamped. */
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& cov) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  Eigen::VectorXd scaled = es.eigenvalues();
  for (int i = 0; i < scaled.size(); ++i)
    scaled(i) = scaled(i) > 1e-14 ? std::sqrt(scaled(i)) : 0.0;
  return es.eigenvectors() * scaled.asDiagonal();
}

/* A dart contributes the resolvent of its vertex; a cilium dart inserts the
   source bilinear right after its resolvent. */
struct Corner {
  int vertex;
  bool with_source;
};

double factorial_of(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::complex<double> face_product(
    const std::vector<std::vector<Corner>>& program,
    const std::vector<Eigen::MatrixXcd>& resolvents,
    const Eigen::MatrixXcd& jj, int N) {
  std::complex<double> value = 1.0;
  for (const auto& face : program) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(N, N);
    for (const Corner& corner : face) {
      acc = acc * resolvents[corner.vertex];
      if (corner.with_source) acc = acc * jj;
    }
    value *= acc.trace();
  }
  return value;
}

}  // namespace

SourceProduct SourceProduct::from_matrix(const Eigen::MatrixXcd& jj) {
  if (jj.rows() != jj.cols() || jj.rows() == 0)
    throw domain_error("SourceProduct: matrix must be square");
  double scale = 1.0 + jj.norm();
  if ((jj - jj.adjoint()).norm() > 1e-10 * scale)
    throw domain_error("SourceProduct: matrix must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jj,
                                                     Eigen::EigenvaluesOnly);
  double lo = es.eigenvalues().minCoeff();
  if (lo < -1e-10 * scale)
    throw domain_error("SourceProduct: matrix must be positive semidefinite");
  return SourceProduct(jj, std::max(0.0, es.eigenvalues().maxCoeff()));
}

SourceProduct SourceProduct::from_source(const Eigen::MatrixXcd& j) {
  if (j.rows() == 0) throw domain_error("SourceProduct: empty source");
  return from_matrix(j * j.adjoint());
}

McEstimate mc_lve_amplitude(const LveGraph& g, const ComplexCoupling& lambda,
                            int N, const SourceProduct& jj, long long samples,
                            std::uint64_t seed) {
  const RibbonMap& map = g.map();
  int v = map.vertex_count();
  int e = map.edge_count();
  int loops = g.loop_count();
  int tree_edges = e - loops;
  if (v > 4) throw capacity_error("mc_lve_amplitude: capped at 4 vertices");
  if (N < 1) throw domain_error("mc_lve_amplitude: N must be positive");
  if (N > 8) throw capacity_error("mc_lve_amplitude: capped at N <= 8");
  if (jj.size() != N)
    throw domain_error("mc_lve_amplitude: source size must match N");
  if (samples < 1) throw domain_error("mc_lve_amplitude: need samples >= 1");

  std::complex<double> lam = lambda.value();
  std::complex<double> prefactor = 1.0;
  for (int i = 0; i < e; ++i) prefactor *= -lam;
  prefactor *= std::pow(static_cast<double>(N), v - e);
  prefactor /= factorial_of(v) * factorial_of(loops);

  FaceStructure faces = map.faces();
  std::vector<std::vector<Corner>> program;
  for (const auto& face : faces.faces) {
    std::vector<Corner> corners;
    for (int d : face) corners.push_back({map.vertex_of(d), map.is_cilium(d)});
    program.push_back(std::move(corners));
  }

  McEstimate est;
  est.samples = samples;
  est.seed = seed;

  /* With no edges there is nothing to integrate: the lone vertex carries no
     field and the face product is deterministic. */
  if (e == 0) {
    std::vector<Eigen::MatrixXcd> identity{Eigen::MatrixXcd::Identity(N, N)};
    est.mean = prefactor * face_product(program, identity, jj.matrix(), N);
    est.stderror = 0.0;
    return est;
  }

  std::vector<std::pair<int, int>> loop_ends;
  for (int idx : g.loop_order()) {
    auto [a, b] = map.pairs()[idx];
    loop_ends.push_back({map.vertex_of(a), map.vertex_of(b)});
  }

  std::complex<double> ic = std::complex<double>(0.0, 1.0) *
                            std::sqrt(lam / static_cast<double>(N));
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(N, N);

  std::vector<std::complex<double>> chunk_sum(kChunks, 0.0);
  std::vector<double> chunk_sumsq(kChunks, 0.0);
  long long base = samples / kChunks;
  long long rem = samples % kChunks;

  run_chunks(kChunks, resolve_workers(0), [&](int chunk) {
    Rng rng = Rng::for_chunk(seed, chunk);
    long long n = base + (chunk < rem ? 1 : 0);
    std::vector<double> t(tree_edges);
    std::vector<double> s(loops);
    std::vector<Eigen::MatrixXcd> herm(v, Eigen::MatrixXcd(N, N));
    std::vector<Eigen::MatrixXcd> resolvents(v);
    std::complex<double> sum = 0.0;
    double sumsq = 0.0;
    for (long long it = 0; it < n; ++it) {
      for (double& x : t) x = rng.uniform();
      auto cov = weakened_covariance(g, t);

      double weight = 1.0;
      for (auto [a, b] : loop_ends) weight *= cov[a][b];

      double s_min = 1.0;
      if (loops > 0) {
        for (double& x : s) x = rng.uniform();
        std::sort(s.begin(), s.end(), std::greater<double>());
        s_min = s.back();
      }

      Eigen::MatrixXd scaled(v, v);
      for (int i = 0; i < v; ++i)
        for (int k = 0; k < v; ++k) scaled(i, k) = s_min * cov[i][k];
      Eigen::MatrixXd mix = psd_sqrt(scaled);

      for (int k = 0; k < v; ++k) {
        for (int r = 0; r < N; ++r) {
          herm[k](r, r) = rng.gaussian();
          for (int c = r + 1; c < N; ++c) {
            std::complex<double> z = rng.complex_gaussian();
            herm[k](r, c) = z;
            herm[k](c, r) = std::conj(z);
          }
        }
      }
      for (int i = 0; i < v; ++i) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(N, N);
        for (int k = 0; k < v; ++k)
          if (mix(i, k) != 0.0) a += mix(i, k) * herm[k];
        resolvents[i] = (id - ic * a).partialPivLu().solve(id);
      }

      std::complex<double> value =
          weight * face_product(program, resolvents, jj.matrix(), N);
      sum += value;
      sumsq += std::norm(value);
    }
    chunk_sum[chunk] = sum;
    chunk_sumsq[chunk] = sumsq;
  });

  std::complex<double> sum = 0.0;
  double sumsq = 0.0;
  for (int c = 0; c < kChunks; ++c) {
    sum += chunk_sum[c];
    sumsq += chunk_sumsq[c];
  }
  std::complex<double> raw_mean = sum / static_cast<double>(samples);
  double var = 0.0;
  if (samples > 1)
    var = std::max(0.0, (sumsq - samples * std::norm(raw_mean)) / (samples - 1));
  est.mean = prefactor * raw_mean;
  est.stderror = std::abs(prefactor) * std::sqrt(var / samples);
  return est;
}

}  // namespace lvelab
