#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lvelab/borel.hpp"
#include "lvelab/bounds.hpp"
#include "lvelab/census.hpp"
#include "lvelab/cli.hpp"
#include "lvelab/coefficients.hpp"
#include "lvelab/errors.hpp"
#include "lvelab/lve_graph.hpp"
#include "lvelab/oracles.hpp"
#include "lvelab/planar_sde.hpp"
#include "lvelab/version.hpp"

namespace lvelab {

namespace {

using nlohmann::json;

std::string hash_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string double_str(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

json header_json(const std::string& config, std::uint64_t seed) {
  return json{{"version", kVersion},
              {"config_hash", hash_hex(config)},
              {"seed", seed}};
}

std::string header_csv(const std::string& config, std::uint64_t seed) {
  std::ostringstream out;
  out << "# version " << kVersion << "\n"
      << "# config_hash " << hash_hex(config) << "\n"
      << "# seed " << seed << "\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw domain_error("cannot open output file " + path);
  out << content;
  if (!out) throw domain_error("failed writing output file " + path);
  std::cout << "wrote " << path << "\n";
}

IntegerPartition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw domain_error("partition parts must be integers");
    }
  }
  if (parts.empty()) throw domain_error("empty partition");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return IntegerPartition(parts);
}

int run_census(int nmax, int kmax, int workers, const std::string& out) {
  std::ostringstream config;
  config << "census nmax=" << nmax << " kmax=" << kmax;
  if (nmax < 0 || kmax < 0) throw domain_error("census table sizes are >= 0");
  if (nmax > 6) throw capacity_error("census capped at n <= 6");
  std::vector<CensusRow> rows;
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= std::min(kmax, n + 1); ++k) {
      auto part = census_table(n, k, workers);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  write_file(out, header_csv(config.str(), 0) + census_csv(rows));
  return 0;
}

int run_coeffs(const std::string& partition, int nmax, int workers,
               const std::string& out) {
  std::ostringstream config;
  config << "coeffs partition=" << partition << " nmax=" << nmax;
  IntegerPartition pi = parse_partition(partition);
  CoefficientTable table = perturbative_coefficients(pi, nmax, workers);
  json doc;
  doc["header"] = header_json(config.str(), 0);
  doc["partition"] = pi.parts;
  json orders = json::array();
  for (int n = 0; n <= table.n_max(); ++n) {
    orders.push_back(json{{"n", n},
                          {"laurent", json::parse(table.orders[n].to_json())},
                          {"str", table.orders[n].str()}});
  }
  doc["orders"] = orders;
  write_file(out, doc.dump(2) + "\n");
  return 0;
}

int run_planar(int nmax, double lambda, bool have_lambda,
               const std::string& out) {
  std::ostringstream config;
  config << "planar nmax=" << nmax;
  if (have_lambda) config << " lambda=" << double_str(lambda);
  std::string body = planar_csv(nmax);
  if (have_lambda) {
    body += "# closed_form " + double_str(lambda) + " " +
            double_str(planar_closed_form(lambda)) + "\n";
  }
  write_file(out, header_csv(config.str(), 0) + body);
  return 0;
}

int run_bounds(double rho, double theta, const std::string& domain,
               double radius, int grid, double rho_max,
               const std::string& out) {
  std::ostringstream config;
  config << "bounds lambda=" << double_str(rho)
         << " theta=" << double_str(theta);
  if (!domain.empty()) config << " domain=" << domain;
  if (radius > 0.0) config << " radius=" << double_str(radius);
  if (grid > 0)
    config << " grid=" << grid << " rho_max=" << double_str(rho_max);

  if (grid > 0) {
    std::ostringstream body;
    body << "rho,theta,in_C,in_Ctilde,in_Cprime\n";
    for (int i = 0; i < grid; ++i) {
      double r = rho_max * (i + 1) / grid;
      ComplexCoupling lambda(r, theta);
      body << double_str(r) << "," << double_str(theta) << ","
           << in_domain(lambda, Domain::C) << ","
           << in_domain(lambda, Domain::CTilde) << ","
           << in_domain(lambda, Domain::CPrime) << "\n";
    }
    write_file(out, header_csv(config.str(), 0) + body.str());
    return 0;
  }

  ComplexCoupling lambda(rho, theta);
  json doc;
  doc["header"] = header_json(config.str(), 0);
  if (domain.empty()) {
    doc["in_C"] = in_domain(lambda, Domain::C);
    doc["in_Ctilde"] = in_domain(lambda, Domain::CTilde);
    doc["in_Cprime"] = in_domain(lambda, Domain::CPrime);
    if (radius > 0.0)
      doc["in_DiscR"] = in_domain(lambda, Domain::DiscR, radius);
    doc["source_norm_threshold"] = source_norm_threshold(lambda);
  } else if (domain == "C") {
    doc["in_C"] = in_domain(lambda, Domain::C);
  } else if (domain == "Ctilde") {
    doc["in_Ctilde"] = in_domain(lambda, Domain::CTilde);
  } else if (domain == "Cprime") {
    doc["in_Cprime"] = in_domain(lambda, Domain::CPrime);
  } else if (domain == "DiscR") {
    doc["in_DiscR"] = in_domain(lambda, Domain::DiscR, radius);
  } else {
    throw domain_error("unknown domain " + domain);
  }
  write_file(out, doc.dump(2) + "\n");
  return 0;
}

std::vector<double> borel_coefficients(const std::string& series,
                                       const std::string& file, int ncoeffs) {
  if (!series.empty() && !file.empty())
    throw domain_error("choose either --series or --coeffs-file");
  std::vector<double> coeffs;
  if (series == "geometric") {
    coeffs.assign(ncoeffs, 1.0);
  } else if (series == "stieltjes") {
    double factorial = 1.0;
    for (int n = 0; n < ncoeffs; ++n) {
      coeffs.push_back((n % 2 == 0 ? 1.0 : -1.0) * factorial);
      factorial *= n + 1;
    }
  } else if (series == "planar") {
    for (int n = 0; n < ncoeffs; ++n)
      coeffs.push_back(static_cast<double>(planar_count(n)));
  } else if (!series.empty()) {
    throw domain_error("unknown series " + series);
  } else if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw domain_error("cannot read coefficient file " + file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      try {
        coeffs.push_back(std::stod(line));
      } catch (const std::exception&) {
        throw domain_error("coefficient files hold one number per line");
      }
    }
  } else {
    throw domain_error("choose a coefficient source");
  }
  return coeffs;
}

int run_borel(const std::string& series, const std::string& file, int ncoeffs,
              double lambda, int nodes, int pade_l, int pade_m,
              double disc_radius, const std::string& out) {
  std::ostringstream config;
  config << "borel lambda=" << double_str(lambda) << " ncoeffs=" << ncoeffs
         << " nodes=" << nodes << " pade_l=" << pade_l
         << " pade_m=" << pade_m;
  if (!series.empty()) config << " series=" << series;
  if (!file.empty()) config << " coeffs_file=" << file;

  std::vector<double> coeffs = borel_coefficients(series, file, ncoeffs);
  BorelConfig cfg;
  cfg.quadrature_nodes = nodes;
  cfg.disc_radius = disc_radius;
  if (pade_l >= 0 || pade_m >= 0) {
    cfg.pade_numerator_degree = pade_l;
    cfg.pade_denominator_degree = pade_m;
  } else if (series == "planar") {
    // the positive-coefficient planar series resums best as a pure
    // polynomial transform
    cfg.pade_numerator_degree = static_cast<int>(coeffs.size()) - 1;
    cfg.pade_denominator_degree = 0;
  }
  double sum = borel_sum(coeffs, lambda, cfg);

  json doc;
  doc["header"] = header_json(config.str(), 0);
  doc["lambda"] = lambda;
  doc["coefficients"] = coeffs.size();
  doc["pade_numerator_degree"] = cfg.pade_numerator_degree;
  doc["pade_denominator_degree"] = cfg.pade_denominator_degree;
  doc["sum"] = sum;
  write_file(out, doc.dump(2) + "\n");
  return 0;
}

json mc_block(const McEstimate& est, const CoefficientTable& table,
              double lambda, double n_size, int order, double remainder) {
  double partial = evaluate_series(table, lambda, n_size, order).real();
  double gap = std::abs(est.mean.real() - partial);
  return json{{"estimate", est.mean.real()},
              {"stderr", est.stderror},
              {"samples", est.samples},
              {"series_partial", partial},
              {"series_order", order},
              {"remainder_bound", remainder},
              {"within_3sigma", gap <= 3.0 * est.stderror},
              {"within_remainder", gap <= remainder + 3.0 * est.stderror}};
}

int run_mc_check(int n, double lambda, long long steps, std::uint64_t seed,
                 int k, int order, const std::string& out) {
  std::ostringstream config;
  config << "mc-check N=" << n << " lambda=" << double_str(lambda)
         << " steps=" << steps << " k=" << k << " order=" << order
         << " seed=" << seed;
  if (k != 1 && k != 2) throw domain_error("mc-check supports k = 1 or 2");
  if (lambda <= 0.0)
    throw domain_error("mc-check compares against bounds at real lambda > 0");
  ComplexCoupling coupling(lambda, 0.0);

  json doc;
  doc["header"] = header_json(config.str(), seed);
  doc["N"] = n;
  doc["lambda"] = lambda;
  if (k == 1) {
    McEstimate est = mc_matrix_cumulant_k1(n, lambda, steps, seed);
    CoefficientTable table = perturbative_coefficients(IntegerPartition({1}), order);
    double remainder = perturbative_remainder_bound(order, 1, 1, coupling, n);
    doc["k1"] = mc_block(est, table, lambda, n, order, remainder);
  } else {
    K2Estimates est = mc_matrix_cumulant_k2(n, lambda, steps, seed);
    CoefficientTable two = perturbative_coefficients(IntegerPartition({2}), order);
    CoefficientTable pair =
        perturbative_coefficients(IntegerPartition({1, 1}), order);
    doc["k2"] = mc_block(est.k2, two, lambda, n, order,
                         perturbative_remainder_bound(order, 2, 1, coupling, n));
    doc["k11"] = mc_block(est.k11, pair, lambda, n, order,
                          perturbative_remainder_bound(order, 2, 2, coupling, n));
    doc["condition"] = est.condition;
  }
  write_file(out, doc.dump(2) + "\n");
  return 0;
}

int run_vector(int n, double lambda, double j, int nodes,
               const std::string& out) {
  std::ostringstream config;
  config << "vector N=" << n << " lambda=" << double_str(lambda)
         << " j=" << double_str(j) << " nodes=" << nodes;
  std::complex<double> logz = vector_logz(n, {lambda, 0.0}, {j, 0.0}, nodes);
  json doc;
  doc["header"] = header_json(config.str(), 0);
  doc["N"] = n;
  doc["lambda"] = lambda;
  doc["j"] = j;
  doc["logz_re"] = logz.real();
  doc["logz_im"] = logz.imag();
  write_file(out, doc.dump(2) + "\n");
  return 0;
}

int run_bkar(int n, const std::string& out) {
  std::ostringstream config;
  config << "bkar n=" << n;
  if (n != 2 && n != 3) throw domain_error("bkar residuals cover n = 2 or 3");
  using Poly = std::map<std::vector<int>, BigRat>;
  int nvars = n * (n - 1) / 2;
  auto mono = [nvars](std::vector<std::pair<int, int>> powers, BigRat c) {
    std::vector<int> e(nvars, 0);
    for (auto [v, p] : powers) e[v % std::max(nvars, 1)] += p;
    return Poly{{e, c}};
  };
  std::vector<Poly> suite = {
      mono({}, BigRat(1)),
      mono({{0, 1}}, BigRat(2)),
      mono({{0, 2}}, BigRat(1)),
      mono({{0, 1}, {1, 1}}, BigRat(3, 2)),
      mono({{0, 3}}, BigRat(-1)),
      mono({{0, 2}, {1, 2}}, BigRat(5)),
      mono({{1, 1}}, BigRat(-7, 3)),
      mono({{0, 1}, {1, 1}, {2, 1}}, BigRat(1)),
      mono({{2, 4}}, BigRat(2, 7)),
      mono({{0, 2}, {2, 1}}, BigRat(-4)),
  };
  // merge two of the monomials so the suite also exercises mixed sums
  for (const auto& [e, c] : suite[3]) suite[9][e] += c;

  std::ostringstream body;
  body << "index,residual\n";
  for (std::size_t i = 0; i < suite.size(); ++i)
    body << i << "," << rat_str(bkar_verify(n, suite[i])) << "\n";
  write_file(out, header_csv(config.str(), 0) + body.str());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"lvelab: constructive objects of the quartic matrix model"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "worker threads (0 = LVELAB_WORKERS or 1)");

  auto* census = app.add_subcommand("census", "ciliated map census tables");
  int census_nmax = 3, census_kmax = 1;
  std::string census_out = "lvelab_census.csv";
  census->add_option("--nmax", census_nmax, "largest edge count");
  census->add_option("--kmax", census_kmax, "largest cilium count");
  census->add_option("--out", census_out, "output file");

  auto* coeffs = app.add_subcommand("coeffs", "perturbative cumulant coefficients");
  std::string coeffs_partition = "1";
  int coeffs_nmax = 3;
  std::string coeffs_out = "lvelab_coeffs.json";
  coeffs->add_option("--partition", coeffs_partition, "comma separated parts");
  coeffs->add_option("--nmax", coeffs_nmax, "largest order");
  coeffs->add_option("--out", coeffs_out, "output file");

  auto* planar = app.add_subcommand("planar", "planar SDE series and counts");
  int planar_nmax = 5;
  double planar_lambda = 0.0;
  std::string planar_out = "lvelab_planar.csv";
  planar->add_option("--nmax", planar_nmax, "largest order");
  auto* planar_lambda_opt =
      planar->add_option("--lambda", planar_lambda, "evaluate the closed form");
  planar->add_option("--out", planar_out, "output file");

  auto* bounds = app.add_subcommand("bounds", "domain membership and bounds");
  double bounds_rho = 0.1, bounds_theta = 0.0, bounds_radius = 0.0;
  double bounds_rho_max = 0.3;
  int bounds_grid = 0;
  std::string bounds_domain;
  std::string bounds_out = "lvelab_bounds.json";
  bounds->add_option("--lambda", bounds_rho, "coupling modulus");
  bounds->add_option("--theta", bounds_theta, "coupling argument");
  bounds->add_option("--domain", bounds_domain, "C, Ctilde, Cprime or DiscR");
  bounds->add_option("--radius", bounds_radius, "disc radius for DiscR");
  bounds->add_option("--grid", bounds_grid, "emit a CSV grid with this many rows");
  bounds->add_option("--rho-max", bounds_rho_max, "largest grid modulus");
  bounds->add_option("--out", bounds_out, "output file");

  auto* borel = app.add_subcommand("borel", "Borel-Laplace resummation");
  std::string borel_series, borel_file;
  int borel_ncoeffs = 41, borel_nodes = 64, borel_l = -1, borel_m = -1;
  double borel_lambda = 0.1, borel_disc = 0.0;
  std::string borel_out = "lvelab_borel.json";
  borel->add_option("--series", borel_series, "geometric, stieltjes or planar");
  borel->add_option("--coeffs-file", borel_file, "file with one coefficient per line");
  borel->add_option("--ncoeffs", borel_ncoeffs, "number of series coefficients");
  borel->add_option("--lambda", borel_lambda, "evaluation point");
  borel->add_option("--nodes", borel_nodes, "Gauss-Laguerre nodes");
  borel->add_option("--pade-l", borel_l, "Pade numerator degree");
  borel->add_option("--pade-m", borel_m, "Pade denominator degree");
  borel->add_option("--disc-radius", borel_disc, "analyticity disc to respect");
  borel->add_option("--out", borel_out, "output file");

  auto* mc = app.add_subcommand("mc-check", "Monte Carlo vs series vs bounds");
  int mc_n = 3, mc_k = 1, mc_order = 3;
  double mc_lambda = 0.05;
  long long mc_steps = 1000000;
  std::uint64_t mc_seed = 1;
  std::string mc_out = "lvelab_mc_check.json";
  mc->add_option("--N", mc_n, "matrix size");
  mc->add_option("--lambda", mc_lambda, "real coupling");
  mc->add_option("--steps", mc_steps, "Metropolis steps across all chains");
  mc->add_option("--seed", mc_seed, "RNG seed")->required();
  mc->add_option("--k", mc_k, "cumulant sector, 1 or 2");
  mc->add_option("--order", mc_order, "series truncation order");
  mc->add_option("--out", mc_out, "output file");

  auto* vector = app.add_subcommand("vector", "vector model quadrature");
  int vector_n = 5, vector_nodes = 96;
  double vector_lambda = 0.05, vector_j = 0.01;
  std::string vector_out = "lvelab_vector.json";
  vector->add_option("--N", vector_n, "vector size");
  vector->add_option("--lambda", vector_lambda, "real coupling");
  vector->add_option("--j", vector_j, "source strength");
  vector->add_option("--nodes", vector_nodes, "Gauss-Hermite nodes");
  vector->add_option("--out", vector_out, "output file");

  auto* bkar = app.add_subcommand("bkar", "forest formula residuals");
  int bkar_n = 3;
  std::string bkar_out = "lvelab_bkar.csv";
  bkar->add_option("--n", bkar_n, "number of points, 2 or 3");
  bkar->add_option("--out", bkar_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 64;
  }

  if (workers > 0)
    setenv("LVELAB_WORKERS", std::to_string(workers).c_str(), 1);

  try {
    if (census->parsed())
      return run_census(census_nmax, census_kmax, workers, census_out);
    if (coeffs->parsed())
      return run_coeffs(coeffs_partition, coeffs_nmax, workers, coeffs_out);
    if (planar->parsed())
      return run_planar(planar_nmax, planar_lambda,
                        planar_lambda_opt->count() > 0, planar_out);
    if (bounds->parsed())
      return run_bounds(bounds_rho, bounds_theta, bounds_domain, bounds_radius,
                        bounds_grid, bounds_rho_max, bounds_out);
    if (borel->parsed())
      return run_borel(borel_series, borel_file, borel_ncoeffs, borel_lambda,
                       borel_nodes, borel_l, borel_m, borel_disc, borel_out);
    if (mc->parsed())
      return run_mc_check(mc_n, mc_lambda, mc_steps, mc_seed, mc_k, mc_order,
                          mc_out);
    if (vector->parsed())
      return run_vector(vector_n, vector_lambda, vector_j, vector_nodes,
                        vector_out);
    if (bkar->parsed()) return run_bkar(bkar_n, bkar_out);
    std::cerr << app.help();
    return 64;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const resummation_error& e) {
    std::cerr << "resummation error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace lvelab
