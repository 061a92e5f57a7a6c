#pragma once

#include <string>
#include <vector>

#include "orbitnorm/degeneration.hpp"
#include "orbitnorm/partition.hpp"
#include "orbitnorm/rational_matrix.hpp"

namespace orbitnorm {

// Exact matrix models of nilpotent elements of so(V) and sp(V), used as an
// independent check on the combinatorics. Everything here works over the
// rationals (characteristic 0); orbit dimensions and the degeneration order
// are the same in every odd characteristic, which is all that is checked.

inline constexpr int kDefaultOracleBound = 24;

/// A quadratic space V = Q^dim with Gram matrix `gram` of type eps
/// (gram^T = eps * gram) and a nilpotent `nilpotent` in g(V), i.e.
/// nilpotent^T * gram + gram * nilpotent = 0.
struct NilpotentModel {
  int dim = 0;
  FormType eps = FormType::Orthogonal;
  RationalMatrix gram;
  RationalMatrix nilpotent;
};

/// Block-diagonal model of Jordan type `lambda`.
///
/// A part m that may stand alone (m odd for orthogonal, m even for
/// symplectic) gets a single block with basis e_1..e_m, D e_i = e_{i+1},
/// and (e_i, e_j) = (-1)^(i+1) when i + j = m + 1. Other parts come in equal
/// pairs and share a hyperbolic block e_1..e_m, f_1..f_m on which D shifts
/// both strings and (e_i, f_j) = (-1)^(i+1) when i + j = m + 1.
///
/// Throws ContractError for an invalid diagram, CapacityError when
/// |lambda| > bound.
NilpotentModel build_nilpotent_model(const Partition& lambda, FormType eps,
                                     int bound = kDefaultOracleBound);

/// Empty when the model satisfies every invariant, otherwise a description
/// of each failure.
std::vector<std::string> model_violations(const NilpotentModel& m);

/// Jordan type from the rank sequence of powers of `m`. Throws
/// ContractError if `m` is not square or not nilpotent.
Partition jordan_type(const RationalMatrix& m);

/// dim so_N = N(N-1)/2, dim sp_N = N(N+1)/2.
int algebra_dim(int n, FormType eps);

/// Dimension of {Y : Y^T J + J Y = 0, Y D = D Y}, by exact elimination over
/// all N^2 entries of Y.
int centralizer_dim(const NilpotentModel& m);

int orbit_dim(const Partition& lambda, FormType eps,
              int bound = kDefaultOracleBound);

/// orbit_dim(top) - orbit_dim(bottom).
int codim_oracle(const DegenPair& pair, int bound = kDefaultOracleBound);

/// The model induced on U = Im D: the form |Dx, Dy| = (y, Dx), which has type
/// -eps, and D restricted to U. Its Jordan type is the input's with the first
/// column erased. Throws ContractError when D = 0.
NilpotentModel restrict_to_image(const NilpotentModel& m);

}  // namespace orbitnorm
