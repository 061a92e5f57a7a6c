#include "orbitnorm/matrix_oracle.hpp"

#include "orbitnorm/errors.hpp"

namespace orbitnorm {
namespace {

int alternating_sign(int i) { return i % 2 == 1 ? 1 : -1; }  // (-1)^(i+1)

// Lays out one self-dual block of size m at `offset`.
void place_single_block(NilpotentModel& model, std::size_t offset, int m) {
  for (int i = 1; i <= m; ++i) {
    const std::size_t row = offset + static_cast<std::size_t>(i - 1);
    const std::size_t col = offset + static_cast<std::size_t>(m - i);
    model.gram(row, col) = alternating_sign(i);
    if (i < m) model.nilpotent(row + 1, row) = 1;
  }
}

// Lays out a hyperbolic block carrying two Jordan blocks of size m.
void place_paired_block(NilpotentModel& model, std::size_t offset, int m) {
  const std::size_t e = offset;
  const std::size_t f = offset + static_cast<std::size_t>(m);
  const int eps = sign(model.eps);
  for (int i = 1; i <= m; ++i) {
    const std::size_t ei = e + static_cast<std::size_t>(i - 1);
    const std::size_t fj = f + static_cast<std::size_t>(m - i);
    model.gram(ei, fj) = alternating_sign(i);
    model.gram(fj, ei) = eps * alternating_sign(i);
    if (i < m) {
      model.nilpotent(ei + 1, ei) = 1;
      model.nilpotent(f + static_cast<std::size_t>(i),
                      f + static_cast<std::size_t>(i - 1)) = 1;
    }
  }
}

}  // namespace

NilpotentModel build_nilpotent_model(const Partition& lambda, FormType eps,
                                     int bound) {
  if (auto why = eps_violation(lambda, eps)) {
    throw ContractError("[" + lambda.to_string() + "] is not a " +
                        to_string(eps) + "-diagram: " + *why);
  }
  if (lambda.size() > bound) {
    throw CapacityError("nilpotent model", lambda.size(), bound);
  }
  const auto n = static_cast<std::size_t>(lambda.size());
  NilpotentModel model{lambda.size(), eps, RationalMatrix(n, n),
                       RationalMatrix(n, n)};
  const int paired_parity = eps == FormType::Orthogonal ? 0 : 1;
  const auto& parts = lambda.parts();
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int m = parts[k];
    if (m % 2 == paired_parity) {
      // Multiplicity is even, so parts[k + 1] == m.
      place_paired_block(model, offset, m);
      offset += 2 * static_cast<std::size_t>(m);
      ++k;
    } else {
      place_single_block(model, offset, m);
      offset += static_cast<std::size_t>(m);
    }
  }
  return model;
}

std::vector<std::string> model_violations(const NilpotentModel& m) {
  std::vector<std::string> out;
  const auto n = static_cast<std::size_t>(m.dim);
  if (m.gram.rows() != n || m.gram.cols() != n || m.nilpotent.rows() != n ||
      m.nilpotent.cols() != n) {
    out.emplace_back("matrix shapes do not match dimension");
    return out;
  }
  if (rank(m.gram) != n) out.emplace_back("Gram matrix is singular");
  if (!(m.gram.transpose() == Rational(sign(m.eps)) * m.gram)) {
    out.emplace_back("Gram matrix is not of type " + to_string(m.eps));
  }
  if (!(m.nilpotent.transpose() * m.gram + m.gram * m.nilpotent).is_zero()) {
    out.emplace_back("D does not preserve the form");
  }
  if (!power(m.nilpotent, m.dim).is_zero()) {
    out.emplace_back("D is not nilpotent");
  }
  return out;
}

Partition jordan_type(const RationalMatrix& m) {
  if (!m.is_square()) throw ContractError("Jordan type of a non-square matrix");
  const std::size_t n = m.rows();
  // columns[k] = rank(M^k) - rank(M^(k+1)) = number of blocks of size > k.
  std::vector<int> columns;
  RationalMatrix pw = RationalMatrix::identity(n);
  std::size_t previous = n;
  for (std::size_t k = 0; k < n && previous > 0; ++k) {
    pw = pw * m;
    const std::size_t r = rank(pw);
    columns.push_back(static_cast<int>(previous - r));
    previous = r;
  }
  if (previous != 0) throw ContractError("matrix is not nilpotent");
  std::erase(columns, 0);
  return dual(Partition(std::move(columns)));
}

int algebra_dim(int n, FormType eps) {
  if (n < 0) throw ContractError("negative dimension");
  if (eps == FormType::Symplectic && n % 2 != 0) {
    throw ContractError("symplectic spaces have even dimension, got " +
                        std::to_string(n));
  }
  return n * (n - sign(eps)) / 2;
}

int centralizer_dim(const NilpotentModel& m) {
  const auto n = static_cast<std::size_t>(m.dim);
  const RationalMatrix& gram = m.gram;
  const RationalMatrix& d = m.nilpotent;
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };

  SparseRowReducer system;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (Y^T J + J Y)_{ij} = sum_k Y_{ki} J_{kj} + J_{ik} Y_{kj}
      SparseRowReducer::SparseRow form_row;
      // (Y D - D Y)_{ij} = sum_k Y_{ik} D_{kj} - D_{ik} Y_{kj}
      SparseRowReducer::SparseRow commute_row;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(gram(k, j)) != 0) form_row.emplace_back(var(k, i), gram(k, j));
        if (sgn(gram(i, k)) != 0) form_row.emplace_back(var(k, j), gram(i, k));
        if (sgn(d(k, j)) != 0) commute_row.emplace_back(var(i, k), d(k, j));
        if (sgn(d(i, k)) != 0) commute_row.emplace_back(var(k, j), -d(i, k));
      }
      system.add_row(std::move(form_row));
      system.add_row(std::move(commute_row));
    }
  }
  return static_cast<int>(n * n - system.rank());
}

int orbit_dim(const Partition& lambda, FormType eps, int bound) {
  const NilpotentModel model = build_nilpotent_model(lambda, eps, bound);
  return algebra_dim(model.dim, eps) - centralizer_dim(model);
}

int codim_oracle(const DegenPair& pair, int bound) {
  if (pair.is_trivial()) return 0;
  return orbit_dim(pair.top(), pair.eps(), bound) -
         orbit_dim(pair.bottom(), pair.eps(), bound);
}

NilpotentModel restrict_to_image(const NilpotentModel& m) {
  if (m.nilpotent.is_zero()) {
    throw ContractError("restriction to the image of D = 0 is empty");
  }
  const RationalMatrix& d = m.nilpotent;
  const auto n = static_cast<std::size_t>(m.dim);
  // Basis u_k = D x_k of U, with x_k the standard vectors at pivot columns.
  const std::vector<std::size_t> pivots = pivot_columns(d);
  const std::size_t dim_u = pivots.size();
  RationalMatrix basis(n, dim_u);
  for (std::size_t k = 0; k < dim_u; ++k) {
    for (std::size_t i = 0; i < n; ++i) basis(i, k) = d(i, pivots[k]);
  }

  NilpotentModel out;
  out.dim = static_cast<int>(dim_u);
  out.eps = flip(m.eps);
  // |u_k, u_l| = (x_l, D x_k) = (J D)_{x_l, x_k}.
  const RationalMatrix jd = m.gram * d;
  out.gram = RationalMatrix(dim_u, dim_u);
  for (std::size_t k = 0; k < dim_u; ++k) {
    for (std::size_t l = 0; l < dim_u; ++l) {
      out.gram(k, l) = jd(pivots[l], pivots[k]);
    }
  }
  // D u_k expressed in the basis u.
  out.nilpotent = solve(basis, d * basis);
  return out;
}

}  // namespace orbitnorm
