// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/repn.hpp"

#include "entangle/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace entangle {

SpinLabel::SpinLabel(int twice_spin) : two_s(twice_spin) {
  if (twice_spin < 0) throw ValidationError("spin label: two_s must be nonnegative");
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

double trace_square(const CMatrix& x) { return (x * x).trace().real(); }

// One scale per simple factor, fixed by the factor's first generator whose
// trace square is nonzero; the remaining generators of the factor are then
// checked against it by `diagnose`.
std::vector<double> per_factor_scale(const std::vector<CMatrix>& gens,
                                     const std::vector<int>& factor_of,
                                     const std::vector<double>& reference) {
  std::map<int, double> scale;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (scale.count(factor_of[i])) continue;
    const double t = trace_square(gens[i]);
    if (t > 1e-300) scale[factor_of[i]] = reference[i] / t;
  }
  std::vector<double> out(gens.size(), 0.0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto it = scale.find(factor_of[i]);
    if (it != scale.end()) out[i] = it->second;
  }
  return out;
}

std::size_t checked_product(std::span<const int> dims, std::size_t cap) {
  std::size_t total = 1;
  for (int d : dims) {
    total *= static_cast<std::size_t>(d);
    if (total > cap) {
      std::ostringstream msg;
      msg << "dimension cap exceeded: tensor product dimension > " << cap;
      throw ValidationError(msg.str());
    }
  }
  return total;
}

}  // namespace

OperatorBasis spin_generators(SpinLabel label) {
  const int n = label.dim();
  const double s = label.spin();
  // Basis order |s>, |s-1>, ..., |-s>.
  CMatrix jz = CMatrix::Zero(n, n);
  CMatrix jp = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = s - k;
    jz(k, k) = m;
    if (k > 0) jp(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const CMatrix jm = jp.adjoint();
  const CMatrix jx = 0.5 * (jp + jm);
  const CMatrix jy = (jp - jm) / (2.0 * kI);

  OperatorBasis basis;
  basis.dim = n;
  basis.generators = {jx, jy, jz};
  basis.factor_of = {0, 0, 0};
  basis.factor_dims = {n};
  basis.label = "spin:" + std::to_string(label.two_s);
  basis.two_s = label.two_s;
  basis.form_scale = per_factor_scale(basis.generators, basis.factor_of, {1.0, 1.0, 1.0});
  return basis;
}

std::vector<CMatrix> su_generators(int d) {
  if (d < 1) throw ValidationError("su(d): d must be positive");
  std::vector<CMatrix> out;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMatrix x = CMatrix::Zero(d, d);
      x(j, k) = 0.5;
      x(k, j) = 0.5;
      out.push_back(x);
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMatrix y = CMatrix::Zero(d, d);
      y(j, k) = -0.5 * kI;
      y(k, j) = 0.5 * kI;
      out.push_back(y);
    }
  }
  for (int l = 1; l < d; ++l) {
    CMatrix h = CMatrix::Zero(d, d);
    const double c = 0.5 * std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) h(j, j) = c;
    h(l, l) = -l * c;
    out.push_back(h);
  }
  return out;
}

CMatrix embed_local(const CMatrix& op, std::span<const int> dims, int factor) {
  if (factor < 0 || factor >= static_cast<int>(dims.size()))
    throw ValidationError("embed_local: factor index out of range");
  if (op.rows() != dims[factor] || op.cols() != dims[factor])
    throw ValidationError("embed_local: operator does not match factor dimension");
  Eigen::Index left = 1;
  Eigen::Index right = 1;
  for (int k = 0; k < factor; ++k) left *= dims[k];
  for (std::size_t k = factor + 1; k < dims.size(); ++k) right *= dims[k];
  const Eigen::Index d = dims[factor];
  const Eigen::Index total = left * d * right;
  CMatrix out = CMatrix::Zero(total, total);
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        const cplx v = op(a, b);
        if (v == cplx(0.0)) continue;
        for (Eigen::Index r = 0; r < right; ++r) {
          out((l * d + a) * right + r, (l * d + b) * right + r) = v;
        }
      }
    }
  }
  return out;
}

OperatorBasis local_algebra(std::span<const int> dims, std::size_t dimension_cap) {
  if (dims.empty()) throw ValidationError("local_algebra: at least one factor required");
  for (int d : dims) {
    if (d < 2) throw ValidationError("local_algebra: every factor dimension must be >= 2");
  }
  const std::size_t total = checked_product(dims, dimension_cap);

  OperatorBasis basis;
  basis.dim = static_cast<int>(total);
  basis.factor_dims.assign(dims.begin(), dims.end());
  std::ostringstream label;
  label << "local:";
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) label << 'x';
    label << dims[k];
    for (const CMatrix& x : su_generators(dims[k])) {
      basis.generators.push_back(embed_local(x, dims, static_cast<int>(k)));
      basis.factor_of.push_back(static_cast<int>(k));
    }
  }
  basis.label = label.str();
  basis.form_scale = per_factor_scale(basis.generators, basis.factor_of,
                                      std::vector<double>(basis.generators.size(), 1.0));
  return basis;
}

std::vector<std::vector<int>> power_multi_indices(int d, int n, PowerKind kind) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(n, 0);
  if (kind == PowerKind::antisymmetric) {
    if (n > d) return out;
    std::iota(idx.begin(), idx.end(), 0);
  }
  if (n == 0) return {{}};
  while (true) {
    out.push_back(idx);
    // Advance to the next sorted tuple in lexicographic order.
    int pos = n - 1;
    while (pos >= 0) {
      const int limit = kind == PowerKind::symmetric ? d - 1 : d - n + pos;
      if (idx[pos] < limit) break;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < n; ++q)
      idx[q] = kind == PowerKind::symmetric ? idx[pos] : idx[q - 1] + 1;
  }
  return out;
}

CMatrix power_subspace_isometry(int d, int n, PowerKind kind) {
  const auto indices = power_multi_indices(d, n, kind);
  Eigen::Index full = 1;
  for (int i = 0; i < n; ++i) full *= d;
  CMatrix v = CMatrix::Zero(full, static_cast<Eigen::Index>(indices.size()));
  for (std::size_t c = 0; c < indices.size(); ++c) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sign = 1;
      if (kind == PowerKind::antisymmetric) {
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (perm[a] > perm[b]) sign = -sign;
      }
      Eigen::Index flat = 0;
      for (int a = 0; a < n; ++a) flat = flat * d + indices[c][perm[a]];
      v(flat, static_cast<Eigen::Index>(c)) += static_cast<double>(sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    v.col(static_cast<Eigen::Index>(c)).normalize();
  }
  return v;
}

namespace {

// Second-quantized form of the derivation: X -> sum_ab X_ab a_a^dagger a_b.
CMatrix induced_symmetric(const CMatrix& x, const std::vector<std::vector<int>>& indices,
                          const std::map<std::vector<int>, Eigen::Index>& position, int d) {
  const auto size = static_cast<Eigen::Index>(indices.size());
  CMatrix out = CMatrix::Zero(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    std::vector<int> occ(d, 0);
    for (int i : indices[col]) ++occ[i];
    for (int b = 0; b < d; ++b) {
      if (occ[b] == 0) continue;
      for (int a = 0; a < d; ++a) {
        const cplx v = x(a, b);
        if (v == cplx(0.0)) continue;
        std::vector<int> next = occ;
        --next[b];
        ++next[a];
        const double amp = std::sqrt(static_cast<double>(occ[b]) * next[a]);
        std::vector<int> key;
        for (int i = 0; i < d; ++i) key.insert(key.end(), next[i], i);
        out(position.at(key), col) += v * amp;
      }
    }
  }
  return out;
}

CMatrix induced_antisymmetric(const CMatrix& x, const std::vector<std::vector<int>>& indices,
                              const std::map<std::vector<int>, Eigen::Index>& position, int d) {
  const auto size = static_cast<Eigen::Index>(indices.size());
  CMatrix out = CMatrix::Zero(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    const std::vector<int>& occupied = indices[col];
    for (std::size_t pb = 0; pb < occupied.size(); ++pb) {
      const int b = occupied[pb];
      std::vector<int> rest = occupied;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pb));
      const int sign_b = (pb % 2 == 0) ? 1 : -1;
      for (int a = 0; a < d; ++a) {
        const cplx v = x(a, b);
        if (v == cplx(0.0)) continue;
        if (std::find(rest.begin(), rest.end(), a) != rest.end()) continue;
        const auto insert_at = std::lower_bound(rest.begin(), rest.end(), a);
        const auto pa = insert_at - rest.begin();
        const int sign_a = (pa % 2 == 0) ? 1 : -1;
        std::vector<int> key = rest;
        key.insert(key.begin() + pa, a);
        out(position.at(key), col) += v * static_cast<double>(sign_a * sign_b);
      }
    }
  }
  return out;
}

}  // namespace

OperatorBasis power_algebra(const OperatorBasis& base, int n, PowerKind kind,
                            std::size_t dimension_cap) {
  if (n < 1) throw ValidationError("power_algebra: power must be positive");
  const int d = base.dim;
  if (kind == PowerKind::antisymmetric && n > d)
    throw ValidationError("power_algebra: antisymmetric power exceeds base dimension (zero space)");
  const long long out_dim = kind == PowerKind::symmetric ? binomial(d + n - 1, n) : binomial(d, n);
  if (out_dim <= 0 || static_cast<std::size_t>(out_dim) > dimension_cap)
    throw ValidationError("dimension cap exceeded: power subspace dimension " +
                          std::to_string(out_dim));
  if (n == 1) return base;

  const auto indices = power_multi_indices(d, n, kind);
  std::map<std::vector<int>, Eigen::Index> position;
  for (std::size_t i = 0; i < indices.size(); ++i)
    position[indices[i]] = static_cast<Eigen::Index>(i);

  OperatorBasis out;
  out.dim = static_cast<int>(out_dim);
  out.factor_dims = {out.dim};
  out.factor_of = base.factor_of;
  out.label = std::string(kind == PowerKind::symmetric ? "sym(" : "wedge(") + base.label + ")^" +
              std::to_string(n);
  std::vector<double> reference(base.size(), 0.0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const CMatrix& x = base.generators[i];
    out.generators.push_back(kind == PowerKind::symmetric
                                 ? induced_symmetric(x, indices, position, d)
                                 : induced_antisymmetric(x, indices, position, d));
    // B is representation independent: carry the base value B(X_i, X_i).
    reference[i] = base.form_scale[i] * trace_square(x);
  }
  out.form_scale = per_factor_scale(out.generators, out.factor_of, reference);
  return out;
}

CMatrix casimir(const OperatorBasis& basis) {
  CMatrix c = CMatrix::Zero(basis.dim, basis.dim);
  for (const CMatrix& x : basis.generators) c.noalias() += x * x;
  return c;
}

double invariant_form(const OperatorBasis& basis, std::size_t i, std::size_t j) {
  if (i >= basis.size() || j >= basis.size())
    throw ValidationError("invariant_form: generator index out of range");
  if (basis.factor_of[i] != basis.factor_of[j]) return 0.0;
  const double t = (basis.generators[i] * basis.generators[j]).trace().real();
  return std::sqrt(basis.form_scale[i] * basis.form_scale[j]) * t;
}

BasisDiagnostics diagnose(const OperatorBasis& basis) {
  BasisDiagnostics diag;
  const std::size_t n = basis.size();
  for (const CMatrix& x : basis.generators) {
    diag.hermiticity = std::max(diag.hermiticity, (x - x.adjoint()).cwiseAbs().maxCoeff());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      diag.orthonormality =
          std::max(diag.orthonormality, std::abs(invariant_form(basis, i, j) - target));
    }
  }
  if (n == 0) return diag;

  // Hermitian matrices as real vectors (Re, Im of every entry).
  const Eigen::Index m = static_cast<Eigen::Index>(basis.dim) * basis.dim;
  RMatrix span(2 * m, static_cast<Eigen::Index>(n));
  auto flatten = [m](const CMatrix& x) {
    RVector v(2 * m);
    for (Eigen::Index k = 0; k < m; ++k) {
      v[k] = x.data()[k].real();
      v[m + k] = x.data()[k].imag();
    }
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) span.col(static_cast<Eigen::Index>(i)) = flatten(basis.generators[i]);
  Eigen::ColPivHouseholderQR<RMatrix> qr(span);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const CMatrix& xa = basis.generators[a];
      const CMatrix& xb = basis.generators[b];
      const CMatrix bracket = kI * (xa * xb - xb * xa);
      const RVector target = flatten(bracket);
      const RVector coeff = qr.solve(target);
      diag.closure = std::max(diag.closure, (span * coeff - target).norm());
    }
  }
  return diag;
}

}  // namespace entangle
