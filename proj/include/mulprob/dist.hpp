#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mulprob/combinatorics.hpp"
#include "mulprob/value.hpp"

namespace mulprob {

// A Kleisli map X ~> Y of the distribution monad, over an explicit finite
// domain. Kernels must be pure: results are memoized per input and channels
// may be shared across threads.
class Channel {
 public:
  using Kernel = std::function<Dist(const Value&)>;

  Channel(FiniteSpace domain, Kernel kernel);

  // eta . f for a plain function f.
  static Channel deterministic(FiniteSpace domain, std::function<Value(const Value&)> f);
  static Channel identity(FiniteSpace domain);

  const FiniteSpace& domain() const;

  // Throws DomainError for inputs outside the domain.
  Dist operator()(const Value& x) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// First input on which two channels disagree, with both outputs.
struct ChannelMismatch {
  Value input;
  std::optional<Dist> lhs;
  std::optional<Dist> rhs;
};

// Evaluates both channels on every element of lhs's domain. Domains must
// agree; a domain mismatch is reported with empty outputs.
std::optional<ChannelMismatch> first_difference(const Channel& lhs, const Channel& rhs);

// eta(x) = 1|x>.
Dist unit(const Value& x);

// Kleisli extension (f >> omega)(y) = sum_x omega(x) f(x)(y). Rejects omega
// whose support escapes f's domain.
Dist push(const Channel& f, const Dist& omega);

// (g . f)(x) = g >> f(x). The domain condition on f's outputs is checked
// lazily, when an escaping output is pushed through g.
Channel compose(const Channel& g, const Channel& f);
// compose(fs[n-1], ..., fs[0]) for a pipeline written first-to-last.
Channel pipeline(std::initializer_list<Channel> stages);

// Multiplication of the distribution monad; entries must be distributions.
Dist flatten(const Dist& nested);

// D(f): pushforward along a function.
Dist map_dist(const std::function<Value(const Value&)>& f, const Dist& omega);

// Product state over pairs.
Dist dtensor(const Dist& omega, const Dist& rho);

// (f (x) g)(x, y) = f(x) (x) g(y) on the product domain.
Channel ctensor(const Channel& f, const Channel& g);

// Product over K-tuples; the empty product is the point mass on ().
Dist big_tensor(std::span<const Dist> states);

// omega^K over K-tuples.
Dist iid(const Dist& omega, std::size_t k);

// Normalization of a non-empty multiset.
Dist flrn(const Multiset& phi);

// omega |= p. The predicate must be defined on supp(omega).
Rational validity(const Dist& omega, const Predicate& p);

// omega|_p. Throws DomainError on zero validity.
Dist update(const Dist& omega, const Predicate& p);

// p-bar(phi) = prod_x p(x)^phi(x).
Rational pred_extend_at(const Predicate& p, const Multiset& phi);

// p-bar restricted to the finite space M[K](domain of p).
Predicate pred_extend(const Predicate& p, std::size_t k);

// Pointwise product p & q on the common domain.
Predicate conjunction(const Predicate& p, const Predicate& q);

// Exact equality of supports and weights.
bool dist_equal(const Dist& omega, const Dist& rho);

// Convex combination sum_i w_i * omega_i; weights must sum to 1.
Dist mix(std::span<const std::pair<Rational, Dist>> parts);

}  // namespace mulprob
