#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mulprob/combinatorics.hpp"
#include "mulprob/value.hpp"

namespace mulprob {

// Pointwise sum; the multiset monoid operation.
Multiset add(const Multiset& phi, const Multiset& psi);

// phi - 1|x>. Throws DomainError when x is not in the support.
Multiset sub(const Multiset& phi, const Value& x);

// Pointwise order phi <= psi.
bool leq(const Multiset& phi, const Multiset& psi);

// (phi (x) psi)(x, y) = phi(x) * psi(y), over pairs.
Multiset tensor(const Multiset& phi, const Multiset& psi);

// Pushforward M(f); multiplicities of identified elements merge.
Multiset map_elements(const std::function<Value(const Value&)>& f, const Multiset& phi);

// Multiplication of the multiset monad: entries of `nested` must be multisets.
Multiset flatten_multiset(const Multiset& nested);

// Number of sequences accumulating to phi: |phi|! / prod_x phi(x)!.
Natural coefficient(const Multiset& phi);

// Counts occurrences: acc(a,a,b,a) = 3|a> + 1|b>.
Multiset acc(std::span<const Value> xs);
// Accumulates the items of a tuple value.
Multiset acc(const Value& tuple);

// Every size-K multiset over `space`, each once, ordered by descending
// multiplicity vector ({a,b}, 3: 3a, 2a+1b, 1a+2b, 3b). Throws DomainError
// for an empty space with K > 0.
std::vector<Multiset> enumerate_multisets(const FiniteSpace& space, std::size_t k);

// M[K](space) as a finite space.
FiniteSpace multiset_space(const FiniteSpace& space, std::size_t k);

// Every distinct sequence (as a tuple value) accumulating to phi, in
// lexicographic order. Never materializes duplicate permutations.
std::vector<Value> enumerate_arrangements(const Multiset& phi);

// Sub-multisets chi <= phi with |chi| = k, in enumeration order.
std::vector<Multiset> enumerate_submultisets(const Multiset& phi, std::size_t k);

}  // namespace mulprob
