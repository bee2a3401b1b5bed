#pragma once

#include <cstddef>

#include "mulprob/dist.hpp"
#include "mulprob/value.hpp"

namespace mulprob {

// arr(phi): uniform over the distinct sequences accumulating to phi.
Dist arrange(const Multiset& phi);

// mn[K](omega) = sum_phi coeff(phi) * prod_x omega(x)^phi(x) |phi>, over
// M[K](supp omega). Computed from the coefficient formula, not by
// enumerating tuples.
Dist multinomial(const Dist& omega, std::size_t k);

// hg[K](psi) over the size-K sub-multisets of the urn psi. Throws
// DomainError when K exceeds the urn size.
Dist hypergeometric(const Multiset& psi, std::size_t k);

// DD(psi): remove one element x with probability Flrn(psi)(x). Throws
// DomainError on the empty urn.
Dist draw_delete(const Multiset& psi);

// Probabilistic projection: uniform mixture of the single-position
// deletions of a non-empty tuple.
Dist ppr(const Value& tuple);

// Positionwise pairing of two equal-length tuples.
Value zip(const Value& xs, const Value& ys);

// Multizip: zip uniformly chosen arrangements of phi and psi, then
// accumulate. Cost is coeff(phi) * coeff(psi). Throws DomainError when the
// sizes differ.
Dist mzip(const Multiset& phi, const Multiset& psi);

// Sum of multisets computed as acc . (++) . (arr (x) arr); throws
// std::logic_error should the composite fail to be deterministic.
Dist msum_channel(const Multiset& phi, const Multiset& psi);

// Channel wrappers over explicit finite domains. Multiset-valued domains
// come from `multiset_space`, tuple domains from `power`, pair domains from
// `product`.
Channel arr_channel(const FiniteSpace& multisets);
Channel acc_channel(const FiniteSpace& tuples);
Channel mn_channel(const FiniteSpace& states, std::size_t k);
Channel iid_channel(const FiniteSpace& states, std::size_t k);
Channel hg_channel(const FiniteSpace& urns, std::size_t k);
Channel dd_channel(const FiniteSpace& urns);
Channel dd_power_channel(const FiniteSpace& urns, std::size_t times);
Channel flrn_channel(const FiniteSpace& multisets);
Channel ppr_channel(const FiniteSpace& tuples);
Channel zip_channel(const FiniteSpace& tuple_pairs);
Channel mzip_channel(const FiniteSpace& multiset_pairs);
// (+) on pairs of multisets, deterministic.
Channel sum_channel(const FiniteSpace& multiset_pairs);
// Big tensor on tuples of distributions.
Channel big_tensor_channel(const FiniteSpace& state_tuples);
// Power functor (-)^K lifted along the big tensor: (x1..xK) |-> (x) f(xi).
Channel power_map(const Channel& f, const FiniteSpace& tuples);

}  // namespace mulprob
