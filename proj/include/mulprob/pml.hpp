#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mulprob/dist.hpp"
#include "mulprob/value.hpp"

namespace mulprob {

// A multiset whose elements are distributions, Psi = sum_i n_i |omega_i>.
// Distributions equal as functions share one multiplicity.
using MultisetOfDists = Multiset;

MultisetOfDists multiset_of_dists(std::vector<std::pair<Dist, std::size_t>> entries);

// Throws DomainError unless every element of `psi` is a distribution.
void require_dists(const Multiset& psi);

// Sum over K-tuples of the ordered product of the omega_i^{n_i}, pushed
// through acc. The factor order is the canonical order on distributions.
// Cost |X|^K; kept as an oracle.
Dist pml_def1(const MultisetOfDists& psi);

// D(+) applied to the tensor of the multinomials mn[n_i](omega_i).
Dist pml_def2(const MultisetOfDists& psi);

// alpha . M D(eta), with alpha the algebra of the commutative monoid
// D(M(X)) under rho + sigma = D(+)(rho (x) sigma).
Dist pml_def4(const MultisetOfDists& psi);

// Canonical entry point (the def-2 route). pml of the empty multiset is
// 1|[]>.
Dist pml(const MultisetOfDists& psi);

// The defining triangle evaluated at one tuple of states:
// pml(acc(states)) == D(acc)(big_tensor(states)).
bool pml_def3_check(std::span<const Dist> states);

// Eilenberg-Moore algebra of the multiset monad on D(M(X)): the monoid
// D(M(X)) with unit 1|[]> and sum D(+)(rho (x) sigma), extended to
// multisets of its elements.
class MultisetSumAlgebra {
 public:
  static Dist unit();
  static Dist plus(const Dist& rho, const Dist& sigma);
  // alpha(sum_i n_i |rho_i>): the n_i-fold monoid sum of each rho_i.
  static Dist apply(const Multiset& rhos);
};

// pml as a channel on a finite space of multisets of distributions.
Channel pml_channel(const FiniteSpace& multisets_of_dists);

// The lifted functor M[K](f) = pml . M[K](f) on M[K](dom f).
Channel lifted_map(const Channel& f, std::size_t k);
// The same on an explicit domain of multisets over dom f.
Channel lifted_map(const Channel& f, const FiniteSpace& multisets);

}  // namespace mulprob
