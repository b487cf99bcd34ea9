#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

#include "biscount/bigraph.hpp"
#include "biscount/error.hpp"
#include "biscount/vertex_set.hpp"

namespace biscount {

/// Eigendecomposition of the Laplacian L = dI - A in vertex coordinates
/// (X as 0..n-1, Y as n..2n-1).
struct SpectralBasis {
  std::size_t n = 0;
  std::size_t d = 0;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column i belongs to eigenvalues[i]
  /// Number of Laplacian eigenvalues at most d/2 (adjacency eigenvalues >= d/2).
  std::size_t threshold_rank = 0;
  double tolerance = 0;  // absolute, already scaled by d
  double max_residual = 0;

  /// Orthonormal basis of the low-eigenvalue subspace U, one column per vector.
  auto low_subspace() const { return eigenvectors.leftCols(static_cast<Eigen::Index>(threshold_rank)); }
};

inline Eigen::MatrixXd laplacian(const BipartiteGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(2 * n, 2 * n) * static_cast<double>(g.d());
  for (const auto& [x, y] : g.edges()) {
    const auto u = static_cast<Eigen::Index>(x), v = n + static_cast<Eigen::Index>(y);
    lap(u, v) -= 1.0;
    lap(v, u) -= 1.0;
  }
  return lap;
}

/// Full symmetric eigendecomposition of the Laplacian. `tol` is relative to d
/// and is used both for the threshold-rank comparison (ties at d/2 count) and
/// for the residual check.
inline SpectralBasis decompose(const BipartiteGraph& g, double tol = 1e-9) {
  if (!(tol > 0)) throw InputError("decompose: tolerance must be positive");
  const Eigen::MatrixXd lap = laplacian(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw NumericalError("decompose: eigensolver did not converge");

  SpectralBasis basis;
  basis.n = g.n();
  basis.d = g.d();
  basis.eigenvalues = solver.eigenvalues();
  basis.eigenvectors = solver.eigenvectors();
  const double d = static_cast<double>(g.d());
  basis.tolerance = tol * d;

  const Eigen::MatrixXd resid = lap * basis.eigenvectors - basis.eigenvectors * basis.eigenvalues.asDiagonal();
  basis.max_residual = resid.colwise().norm().maxCoeff();
  const double lap_norm = basis.eigenvalues.cwiseAbs().maxCoeff();
  if (basis.max_residual > tol * std::max(lap_norm, 1.0))
    throw NumericalError("decompose: eigen-residual " + std::to_string(basis.max_residual) +
                         " exceeds tolerance " + std::to_string(tol * lap_norm));

  std::size_t k = 0;
  while (k < static_cast<std::size_t>(basis.eigenvalues.size()) &&
         basis.eigenvalues[static_cast<Eigen::Index>(k)] <= d / 2 + basis.tolerance)
    ++k;
  basis.threshold_rank = k;
  return basis;
}

struct NetConfig {
  double eps = std::sqrt(2.0);
  std::optional<double> norm_bound;  // defaults to sqrt(n)
  std::uint64_t budget = 10'000'000;
};

/// One emitted lattice point: integer multiples of eps/sqrt(k) per basis
/// vector, and the point itself in vertex coordinates.
struct NetPoint {
  std::span<const long long> multiples;
  const Eigen::VectorXd& vector;
};

/// (2 sqrt(nk)/eps)^k, the classical size estimate for the net.
inline double net_size_estimate(std::size_t n, std::size_t k, double eps) {
  return std::pow(2.0 * std::sqrt(static_cast<double>(n * k)) / eps, static_cast<double>(k));
}

/// (2 sqrt(nk)/eps + 1)^k: a box-counting bound that holds for every k, n.
inline double net_size_bound(std::size_t n, std::size_t k, double eps) {
  return std::pow(2.0 * std::sqrt(static_cast<double>(n * k)) / eps + 1.0, static_cast<double>(k));
}

/// Streams every point p = sum_i x_i e_i over the low subspace with each x_i
/// an integer multiple of eps/sqrt(k) and ||p|| <= normBound. Coordinates are
/// enumerated depth first with running-norm pruning. Returns the number of
/// points emitted; throws BudgetExceeded past cfg.budget.
template <class Visitor>
std::uint64_t epsilon_net(const SpectralBasis& basis, const NetConfig& cfg, Visitor&& visit) {
  const std::size_t k = basis.threshold_rank;
  if (k == 0) throw InputError("epsilon_net: threshold rank is zero");
  if (!(cfg.eps > 0)) throw InputError("epsilon_net: eps must be positive");
  const double radius = cfg.norm_bound.value_or(std::sqrt(static_cast<double>(basis.n)));
  if (radius < 0) throw InputError("epsilon_net: negative norm bound");

  const double step = cfg.eps / std::sqrt(static_cast<double>(k));
  // ||p||^2 = step^2 * sum j_i^2, so the ball is an integer constraint on sum j_i^2.
  const double ratio = (radius * radius) / (step * step);
  const auto max_sq = static_cast<long long>(std::floor(ratio * (1 + 1e-12) + 1e-12));

  const auto dim = basis.eigenvectors.rows();
  std::vector<Eigen::VectorXd> partial(k + 1, Eigen::VectorXd::Zero(dim));
  std::vector<long long> mult(k, 0);
  std::uint64_t emitted = 0;

  auto recurse = [&](auto&& self, std::size_t depth, long long used) -> void {
    if (depth == k) {
      if (++emitted > cfg.budget)
        throw BudgetExceeded("epsilon_net: net exceeds budget of " + std::to_string(cfg.budget) +
                             " points (k=" + std::to_string(k) + ", estimate " +
                             std::to_string(net_size_estimate(basis.n, k, cfg.eps)) + ")");
      visit(NetPoint{mult, partial[k]});
      return;
    }
    const auto reach = static_cast<long long>(std::sqrt(static_cast<double>(max_sq - used)));
    long long lim = reach;
    while ((lim + 1) * (lim + 1) <= max_sq - used) ++lim;
    while (lim * lim > max_sq - used) --lim;
    const auto col = basis.eigenvectors.col(static_cast<Eigen::Index>(depth));
    for (long long j = -lim; j <= lim; ++j) {
      mult[depth] = j;
      partial[depth + 1] = partial[depth] + (step * static_cast<double>(j)) * col;
      self(self, depth + 1, used + j * j);
    }
  };
  recurse(recurse, 0, 0);
  return emitted;
}

/// Nearest 0/1 vector, ties at exactly 1/2 rounding up, as a subset of V.
inline VertexSet round_to_cut(const Eigen::VectorXd& p) {
  const auto size = static_cast<std::size_t>(p.size());
  if (size % 2) throw InputError("round_to_cut: vector length must be even (2n)");
  VertexSet c(Part::V, size);
  for (std::size_t i = 0; i < size; ++i)
    if (p[static_cast<Eigen::Index>(i)] >= 0.5) c.insert(i);
  return c;
}

/// Deduplicated, canonically ordered candidate cuts.
struct CutFamily {
  std::vector<VertexSet> cuts;
  double eps = std::sqrt(2.0);
  double norm_bound = 0;
  std::uint64_t net_points = 0;
  std::size_t threshold_rank = 0;

  std::size_t size() const noexcept { return cuts.size(); }
};

inline CutFamily build_cut_family(const BipartiteGraph& g, const SpectralBasis& basis, const NetConfig& cfg = {}) {
  if (basis.n != g.n() || basis.d != g.d()) throw InputError("build_cut_family: basis does not belong to graph");
  CutFamily family;
  family.eps = cfg.eps;
  family.norm_bound = cfg.norm_bound.value_or(std::sqrt(static_cast<double>(g.n())));
  family.threshold_rank = basis.threshold_rank;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  family.net_points = epsilon_net(basis, cfg, [&](const NetPoint& p) {
    VertexSet c = round_to_cut(p.vector);
    if (seen.insert(c).second) family.cuts.push_back(std::move(c));
  });
  std::sort(family.cuts.begin(), family.cuts.end(), CanonicalLess{});
  return family;
}

/// Index of the first cut with |S △ C| <= 32t and value <= 33td, if any.
inline std::optional<std::size_t> find_covering_cut(const BipartiteGraph& g, const CutFamily& family,
                                                    const VertexSet& s, std::size_t t) {
  for (std::size_t i = 0; i < family.cuts.size(); ++i) {
    const VertexSet& c = family.cuts[i];
    if (symmetric_difference_size(s, c) <= 32 * t && cut_value(g, c) <= 33 * t * g.d()) return i;
  }
  return std::nullopt;
}

/// ||s - P_U s||^2 for the indicator s of a subset of V.
inline double orthogonal_residual_sq(const SpectralBasis& basis, const VertexSet& s) {
  Eigen::VectorXd ind = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * basis.n));
  s.for_each([&](std::size_t i) { ind[static_cast<Eigen::Index>(i)] = 1.0; });
  const Eigen::MatrixXd u = basis.low_subspace();
  const Eigen::VectorXd proj = u * (u.transpose() * ind);
  return (ind - proj).squaredNorm();
}

inline void write_cut_family(const CutFamily& family, std::ostream& out) {
  for (const VertexSet& c : family.cuts) {
    bool first = true;
    c.for_each([&](std::size_t i) {
      out << (first ? "" : " ") << i;
      first = false;
    });
    out << '\n';
  }
}

}  // namespace biscount
