// Copyright 2026 The disqla Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "disqla/baseline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sys/utsname.h>

#include "disqla/errors.hpp"
#include "disqla/hopping.hpp"

namespace disqla {

namespace {

// y = a * (h x) - b * z over the rows of h, nonzeros in storage order.
void recurrence_step(const SparseMatrix& h, const std::vector<Complex>& x,
                     const std::vector<Complex>& z, double a, double b,
                     std::vector<Complex>& y) {
  for (Eigen::Index r = 0; r < h.outerSize(); ++r) {
    Complex acc{};
    for (SparseMatrix::InnerIterator it(h, r); it; ++it) {
      acc += it.value() * x[static_cast<std::size_t>(it.index())];
    }
    y[static_cast<std::size_t>(r)] = a * acc - b * z[static_cast<std::size_t>(r)];
  }
}

Complex chebyshev_element(const SparseMatrix& hs, const ChebyshevExpansion& p,
                          std::size_t i, std::size_t j) {
  const auto n = static_cast<std::size_t>(hs.rows());
  std::vector<Complex> prev(n), cur(n), next(n);
  cur[j] = 1.0;
  Complex sum = p.coefficients[0] * cur[i];
  if (p.degree() == 0) return sum;
  recurrence_step(hs, cur, prev, 1.0, 0.0, next);
  std::swap(prev, cur);
  std::swap(cur, next);
  sum += p.coefficients[1] * cur[i];
  for (int k = 2; k <= p.degree(); ++k) {
    recurrence_step(hs, cur, prev, 2.0, 1.0, next);
    std::swap(prev, cur);
    std::swap(cur, next);
    sum += p.coefficients[static_cast<std::size_t>(k)] * cur[i];
  }
  return sum;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

EigenDecomposition exact_diagonalize(const Matrix& h, std::uint64_t cap) {
  if (h.rows() != h.cols()) throw ContractViolation("exact_diagonalize: matrix is not square");
  if (static_cast<std::uint64_t>(h.rows()) > cap) {
    throw SizeError("exact diagonalization of " + std::to_string(h.rows()) +
                    " rows exceeds the dense cap of " + std::to_string(cap));
  }
  if (h.size() > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ContractViolation("exact_diagonalize: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw PrecisionError("eigensolver did not converge");
  EigenDecomposition out;
  out.eigenvalues = es.eigenvalues();
  out.vectors = es.eigenvectors();
  if (h.size() > 0) {
    const Matrix hv = h * out.vectors;
    const Matrix vl = out.vectors * out.eigenvalues.cast<Complex>().asDiagonal();
    out.residual = (hv - vl).cwiseAbs().maxCoeff();
    out.unitarity_defect =
        (out.vectors.adjoint() * out.vectors - Matrix::Identity(h.rows(), h.cols()))
            .cwiseAbs()
            .maxCoeff();
  }
  return out;
}

EigenDecomposition exact_diagonalize(const SparseMatrix& h, std::uint64_t cap) {
  if (static_cast<std::uint64_t>(h.rows()) > cap) {
    throw SizeError("exact diagonalization of " + std::to_string(h.rows()) +
                    " rows exceeds the dense cap of " + std::to_string(cap));
  }
  return exact_diagonalize(Matrix(h), cap);
}

Matrix matrix_function(const EigenDecomposition& eig, const std::function<Complex(double)>& f) {
  Vector fl(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < fl.size(); ++k) fl(k) = f(eig.eigenvalues(k));
  return eig.vectors * fl.asDiagonal() * eig.vectors.adjoint();
}

std::vector<std::uint64_t> light_cone(const SparseMatrix& h, std::uint64_t j, int depth) {
  if (j >= static_cast<std::uint64_t>(h.rows())) throw DomainError("light_cone: site out of range");
  std::vector<std::uint64_t> cone{j};
  std::vector<std::uint64_t> frontier{j};
  std::vector<std::uint64_t> seen{j};
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t c : frontier) {
      for (SparseMatrix::InnerIterator it(h, static_cast<Eigen::Index>(c)); it; ++it) {
        const auto r = static_cast<std::uint64_t>(it.index());
        if (it.value() == Complex{}) continue;
        next.push_back(r);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::uint64_t> fresh;
    std::set_difference(next.begin(), next.end(), seen.begin(), seen.end(),
                        std::back_inserter(fresh));
    std::vector<std::uint64_t> merged;
    std::merge(seen.begin(), seen.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    seen = std::move(merged);
    frontier = std::move(fresh);
  }
  return seen;
}

KpmElement kpm_lightcone_element(const SparseMatrix& h, double alpha,
                                 const ChebyshevExpansion& p, std::uint64_t i,
                                 std::uint64_t j, ConeMode mode) {
  const auto n = static_cast<std::uint64_t>(h.rows());
  if (i >= n || j >= n) throw DomainError("kpm element index out of range");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (p.coefficients.empty()) throw ContractViolation("empty Chebyshev expansion");
  KpmElement out;
  out.degree = p.degree();
  const std::vector<std::uint64_t> cone = light_cone(h, j, out.degree);
  out.touched_sites = cone.size();
  const auto local_i = std::lower_bound(cone.begin(), cone.end(), i);
  if (local_i == cone.end() || *local_i != i) return out;  // outside the cone: exactly 0

  if (mode == ConeMode::full_lattice) {
    const SparseMatrix hs = h / alpha;
    out.value = chebyshev_element(hs, p, i, j);
    return out;
  }
  // Cone submatrix in the original row and column order.
  std::vector<Eigen::Triplet<Complex>> trip;
  for (std::size_t r = 0; r < cone.size(); ++r) {
    for (SparseMatrix::InnerIterator it(h, static_cast<Eigen::Index>(cone[r])); it; ++it) {
      const auto col = std::lower_bound(cone.begin(), cone.end(),
                                        static_cast<std::uint64_t>(it.index()));
      if (col == cone.end() || *col != static_cast<std::uint64_t>(it.index())) continue;
      trip.emplace_back(static_cast<int>(r), static_cast<int>(col - cone.begin()),
                        it.value() / alpha);
    }
  }
  SparseMatrix sub(static_cast<Eigen::Index>(cone.size()), static_cast<Eigen::Index>(cone.size()));
  sub.setFromTriplets(trip.begin(), trip.end());
  const auto li = static_cast<std::size_t>(local_i - cone.begin());
  const auto lj = static_cast<std::size_t>(std::lower_bound(cone.begin(), cone.end(), j) - cone.begin());
  out.value = chebyshev_element(sub, p, li, lj);
  return out;
}

int default_benchmark_extent(int dimension) {
  switch (dimension) {
    case 1: return 1024;
    case 2: return 256;
    case 3: return 64;
    default: throw DomainError("benchmark dimension must be 1, 2 or 3");
  }
}

std::vector<int> default_benchmark_degrees(int dimension) {
  switch (dimension) {
    case 1: return {8, 16, 32, 64, 128, 256};
    case 2: return {8, 12, 16, 24, 32, 48, 64};
    case 3: return {8, 12, 16, 20, 24, 31};
    default: throw DomainError("benchmark dimension must be 1, 2 or 3");
  }
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope fit needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingTable benchmark_lightcone_scaling(int dimension, const std::vector<int>& degrees,
                                         int extent, int repetitions) {
  if (extent == 0) extent = default_benchmark_extent(dimension);
  if (repetitions < 1) throw DomainError("repetitions must be positive");
  ScalingTable table;
  table.dimension = dimension;
  table.extents.assign(static_cast<std::size_t>(dimension), extent);

  LatticeSpec lattice;
  lattice.dimension = dimension;
  lattice.extents = table.extents;
  lattice.boundary = Boundary::open;
  lattice.cutoff = 1.0;
  DisorderSpec disorder;
  disorder.kind = DisorderKind::none;
  const HoppingMatrix hm = assemble_hopping_matrix(lattice, disorder);
  const Lattice geometry(lattice);
  IntVec centre{0, 0, 0};
  for (int a = 0; a < dimension; ++a) centre[static_cast<std::size_t>(a)] = extent / 2;
  const std::uint64_t j = geometry.index(centre);
  // Largest degree whose cone stays strictly inside the open lattice.
  const int reach = std::min(extent / 2, extent - 1 - extent / 2) - 1;

  std::vector<double> xs, touched, times;
  for (int d : degrees) {
    if (d < 1) throw DomainError("benchmark degrees must be positive");
    if (d > reach) {
      table.warnings.push_back("degree " + std::to_string(d) + " would reach the boundary of a " +
                               std::to_string(extent) + "-site axis; dropped");
      continue;
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) coeffs[static_cast<std::size_t>(k)] = 1.0 / (1.0 + k);
    ChebyshevExpansion p;
    p.coefficients = std::move(coeffs);
    KpmElement last = kpm_lightcone_element(hm.matrix, hm.alpha, p, j, j);  // warm-up
    std::vector<double> samples;
    for (int r = 0; r < repetitions; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      last = kpm_lightcone_element(hm.matrix, hm.alpha, p, j, j);
      const auto t1 = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    ScalingRow row{d, last.touched_sites, median(samples)};
    table.rows.push_back(row);
    xs.push_back(d);
    touched.push_back(static_cast<double>(row.touched_sites));
    times.push_back(std::max(row.median_seconds, 1e-9));
  }
  if (xs.size() >= 2) {
    table.touched_exponent = log_log_slope(xs, touched);
    table.time_exponent = log_log_slope(xs, times);
  } else {
    table.warnings.push_back("fewer than two usable degrees; no exponent fitted");
  }
  return table;
}

void write_scaling_csv(std::ostream& out, const ScalingTable& t) {
  utsname u{};
  uname(&u);
  out << "# machine: " << u.sysname << ' ' << u.release << ' ' << u.machine << '\n';
  out << "# dimension: " << t.dimension << '\n';
  out << "# extents:";
  for (int e : t.extents) out << ' ' << e;
  out << '\n';
  out << "# touched_exponent: " << std::setprecision(6) << t.touched_exponent << '\n';
  out << "# time_exponent: " << t.time_exponent << '\n';
  for (const auto& w : t.warnings) out << "# warning: " << w << '\n';
  out << "degree,touched_sites,median_seconds\n";
  out << std::setprecision(9);
  for (const ScalingRow& r : t.rows) {
    out << r.degree << ',' << r.touched_sites << ',' << r.median_seconds << '\n';
  }
}

}  // namespace disqla
