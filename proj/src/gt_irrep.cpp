// Copyright 2026 The tdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdesign/gt_irrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "tdesign/errors.hpp"

namespace tdesign {

namespace {

using cd = std::complex<double>;

void fill_patterns(std::vector<std::vector<int>>& rows, int row,
                   std::vector<GTPattern>& out) {
  if (row < 0) {
    out.push_back(GTPattern{rows});
    return;
  }
  const std::vector<int>& above = rows[row + 1];
  std::vector<int>& cur = rows[row];
  // Odometer over the interlacing boxes, each entry from its upper bound
  // down to its lower bound.
  std::size_t n = cur.size();
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = above[i];
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) cur[i] = v[i];
    fill_patterns(rows, row - 1, out);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] > above[i + 1]) {
        --v[i];
        for (std::size_t j = i + 1; j < n; ++j) v[j] = above[j];
        break;
      }
      if (i == 0) return;
    }
  }
}

int row_sum(const GTPattern& p, int n) {
  // Sum of the row with n entries; zero when n == 0.
  if (n == 0) return 0;
  int s = 0;
  for (int e : p.rows[n - 1]) s += e;
  return s;
}

bool pattern_valid(const GTPattern& p) {
  for (std::size_t n = 0; n + 1 < p.rows.size(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      if (p.rows[n + 1][i] < p.rows[n][i]) return false;
      if (p.rows[n][i] < p.rows[n + 1][i + 1]) return false;
    }
  }
  return true;
}

// Raising coefficient for incrementing entry j (1-based) of the row with n
// entries, evaluated on the source pattern. Uses the shifted entries
// l_{i,r} = m_{i,r} - i.
double raising_coefficient(const GTPattern& p, int n, int j) {
  auto l = [&p](int i, int r) {
    return static_cast<double>(p.rows[r - 1][i - 1] - i);
  };
  const double ljn = l(j, n);
  double num = 1.0;
  for (int i = 1; i <= n + 1; ++i) num *= l(i, n + 1) - ljn;
  for (int i = 1; i <= n - 1; ++i) num *= l(i, n - 1) - ljn - 1.0;
  double den = 1.0;
  for (int i = 1; i <= n; ++i) {
    if (i == j) continue;
    den *= (l(i, n) - ljn) * (l(i, n) - ljn - 1.0);
  }
  return std::sqrt(std::abs(num / den));
}

}  // namespace

std::vector<GTPattern> enumerate_patterns(const Weight& w) {
  const int d = w.rank();
  std::vector<std::vector<int>> rows(d);
  for (int n = 0; n < d; ++n) rows[n].resize(n + 1);
  rows[d - 1] = w.entries();
  std::vector<GTPattern> out;
  if (d == 1) {
    out.push_back(GTPattern{rows});
    return out;
  }
  fill_patterns(rows, d - 2, out);
  return out;
}

AlgebraRep AlgebraRep::build(const Weight& w, std::int64_t dim_cap) {
  const std::int64_t dim = weyl_dimension(w);
  if (dim > dim_cap) {
    throw ResourceError("representation dimension " + std::to_string(dim) +
                        " exceeds the cap " + std::to_string(dim_cap));
  }
  auto patterns = enumerate_patterns(w);
  if (static_cast<std::int64_t>(patterns.size()) != dim) {
    throw std::logic_error("pattern count disagrees with the dimension");
  }
  const int d = w.rank();
  const Eigen::Index m = static_cast<Eigen::Index>(patterns.size());

  std::map<std::vector<std::vector<int>>, Eigen::Index> index;
  for (Eigen::Index i = 0; i < m; ++i) index[patterns[i].rows] = i;

  AlgebraRep rep(w, d);
  rep.gen_.assign(static_cast<std::size_t>(d) * d, Eigen::MatrixXd::Zero(m, m));
  auto gen = [&rep, d](int j, int k) -> Eigen::MatrixXd& {
    return rep.gen_[static_cast<std::size_t>(j) * d + k];
  };

  for (int n = 1; n <= d; ++n) {
    Eigen::MatrixXd& g = gen(n - 1, n - 1);
    for (Eigen::Index i = 0; i < m; ++i) {
      g(i, i) = row_sum(patterns[i], n) - row_sum(patterns[i], n - 1);
    }
  }

  for (int n = 1; n <= d - 1; ++n) {
    Eigen::MatrixXd& g = gen(n - 1, n);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (int j = 1; j <= n; ++j) {
        GTPattern moved = patterns[i];
        moved.rows[n - 1][j - 1] += 1;
        if (!pattern_valid(moved)) continue;
        auto it = index.find(moved.rows);
        if (it == index.end()) continue;
        g(it->second, i) = raising_coefficient(patterns[i], n, j);
      }
    }
    gen(n, n - 1) = g.transpose();
  }

  for (int gap = 2; gap <= d - 1; ++gap) {
    for (int j = 0; j + gap < d; ++j) {
      const int k = j + gap;
      const Eigen::MatrixXd& a = gen(j, j + 1);
      const Eigen::MatrixXd& b = gen(j + 1, k);
      gen(j, k) = a * b - b * a;
      gen(k, j) = gen(j, k).transpose();
    }
  }
  return rep;
}

const Eigen::MatrixXd& AlgebraRep::generator(int j, int k) const {
  if (j < 0 || k < 0 || j >= rank_ || k >= rank_) {
    throw ArgumentError("generator index out of range");
  }
  return gen_[static_cast<std::size_t>(j) * rank_ + k];
}

Eigen::MatrixXcd AlgebraRep::algebra_image(const Eigen::MatrixXcd& a) const {
  if (a.rows() != rank_ || a.cols() != rank_) {
    throw ArgumentError("algebra element has the wrong size");
  }
  const Eigen::Index m = dim();
  Eigen::MatrixXd re = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < rank_; ++j) {
    for (int k = 0; k < rank_; ++k) {
      const cd c = a(j, k);
      const Eigen::MatrixXd& g = generator(j, k);
      if (c.real() != 0.0) re += c.real() * g;
      if (c.imag() != 0.0) im += c.imag() * g;
    }
  }
  Eigen::MatrixXcd out(m, m);
  out.real() = re;
  out.imag() = im;
  return out;
}

Eigen::MatrixXcd evaluate_irrep(const AlgebraRep& rep,
                                const Eigen::MatrixXcd& u) {
  const int d = rep.rank();
  if (u.rows() != d || u.cols() != d) {
    throw ArgumentError("unitary has the wrong size");
  }
  const double defect =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).norm();
  if (defect > 1e-10 * d) {
    throw ArgumentError("matrix is not unitary within tolerance");
  }

  // u = Q T Q* with T essentially diagonal (u is normal), so a Hermitian
  // phase matrix h with u = exp(i h) is Q diag(arg T_jj) Q*.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u, true);
  Eigen::VectorXd phases(d);
  for (int j = 0; j < d; ++j) phases(j) = std::arg(schur.matrixT()(j, j));
  const Eigen::MatrixXcd& q = schur.matrixU();
  Eigen::MatrixXcd h = q * phases.asDiagonal() * q.adjoint();
  h = 0.5 * (h + h.adjoint().eval());

  Eigen::MatrixXcd image = rep.algebra_image(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(image);
  const Eigen::Index m = rep.dim();
  Eigen::VectorXcd ph(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    ph(i) = std::polar(1.0, es.eigenvalues()(i));
  }
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

cd character_alternant(const Weight& w, const std::vector<double>& phases) {
  const int d = w.rank();
  Eigen::MatrixXcd num(d, d);
  for (int i = 0; i < d; ++i) {
    const double l = static_cast<double>(w.entries()[i] + d - 1 - i);
    for (int j = 0; j < d; ++j) num(i, j) = std::polar(1.0, l * phases[j]);
  }
  cd den(1.0, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      den *= std::polar(1.0, phases[i]) - std::polar(1.0, phases[j]);
    }
  }
  return num.determinant() / den;
}

double min_point_gap(const std::vector<double>& phases) {
  double g = 2.0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    for (std::size_t j = i + 1; j < phases.size(); ++j) {
      g = std::min(g, std::abs(std::polar(1.0, phases[i]) -
                               std::polar(1.0, phases[j])));
    }
  }
  return g;
}

}  // namespace

std::complex<double> weyl_character(const Weight& w,
                                    const std::vector<double>& phases) {
  const int d = w.rank();
  if (static_cast<int>(phases.size()) != d) {
    throw ArgumentError("phase count must match the weight rank");
  }
  bool all_equal = true;
  for (int j = 1; j < d; ++j) all_equal = all_equal && phases[j] == phases[0];
  if (all_equal) {
    // Central element: the character is the dimension times a phase that is
    // trivial because the weight sums to zero.
    return cd(static_cast<double>(weyl_dimension(w)), 0.0);
  }
  if (min_point_gap(phases) >= 1e-3) return character_alternant(w, phases);

  // Nearly coinciding points: evaluate at three perturbed point sets and
  // extrapolate the perturbation to zero (Richardson, two levels).  An
  // existing gap can cancel against the step pattern and re-collide two
  // points, so shrink the step by an irrational factor until all three
  // evaluation sets stay well separated.
  double h = 1e-5;
  const auto perturbed = [&](double step) {
    std::vector<double> p(phases);
    for (int j = 0; j < d; ++j) p[j] += step * (j + 1);
    return p;
  };
  const auto separated = [&](double step) {
    return min_point_gap(perturbed(step)) > step * 1e-3;
  };
  for (int attempt = 0; attempt < 200; ++attempt) {
    if (separated(h) && separated(h / 2) && separated(h / 4)) break;
    h *= 0.6180339887498949;
  }
  auto eval = [&](double step) { return character_alternant(w, perturbed(step)); };
  const cd c1 = eval(h);
  const cd c2 = eval(h / 2);
  const cd c3 = eval(h / 4);
  const cd r1 = 2.0 * c2 - c1;
  const cd r2 = 2.0 * c3 - c2;
  return (4.0 * r2 - r1) / 3.0;
}

}  // namespace tdesign
