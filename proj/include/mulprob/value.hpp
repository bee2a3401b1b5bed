#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mulprob/combinatorics.hpp"

namespace mulprob {

class Multiset;
class Dist;

// An immutable element of some finite space: an identifier, a tuple (pairs
// are 2-tuples, X^K holds K-tuples), a multiset or a distribution. Copies
// share the underlying node.
//
// Total order: atoms < tuples < multisets < distributions. Atoms compare as
// strings, tuples lexicographically (shorter prefix first), distributions
// lexicographically on their sorted (element, weight) entries. Multisets
// compare colexicographically: multiplicities are compared starting from the
// largest element, fewer copies first. Over {a,b} this lists 3a, 2a+1b,
// 1a+2b, 3b.
class Value {
 public:
  enum class Kind { atom, tuple, multiset, dist };

  // The empty tuple.
  Value();
  explicit Value(Multiset m);
  explicit Value(Dist d);

  static Value atom(std::string name);
  static Value tuple(std::vector<Value> items);
  static Value pair(Value first, Value second);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::atom; }
  bool is_tuple() const { return kind() == Kind::tuple; }
  bool is_multiset() const { return kind() == Kind::multiset; }
  bool is_dist() const { return kind() == Kind::dist; }

  // Accessors throw DomainError on a kind mismatch.
  const std::string& name() const;
  std::span<const Value> items() const;
  const Value& first() const;
  const Value& second() const;
  const Multiset& multiset() const;
  const Dist& dist() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Sorted, duplicate-free list of elements.
class FiniteSpace {
 public:
  FiniteSpace() = default;
  FiniteSpace(std::initializer_list<Value> elements);
  explicit FiniteSpace(std::vector<Value> elements);

  // Atoms with the given names.
  static FiniteSpace atoms(std::initializer_list<const char*> names);

  std::span<const Value> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Value& x) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<Value> elements_;
};

// All pairs (x, y), x from `a`, y from `b`.
FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b);
// All K-tuples over `space` (MULPROB_MAX_CELLS guarded).
FiniteSpace power(const FiniteSpace& space, std::size_t k);

// Finite multiset with natural multiplicities. Entries are sorted by element
// and zero multiplicities are never stored, so structural equality is
// semantic equality.
class Multiset {
 public:
  using Entry = std::pair<Value, std::size_t>;

  Multiset() = default;
  Multiset(std::initializer_list<Entry> entries);
  // Merges repeated elements and drops zeros.
  explicit Multiset(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t count(const Value& x) const;
  // Total multiplicity.
  std::size_t size() const { return size_; }
  bool empty() const { return entries_.empty(); }
  FiniteSpace support() const;

  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);
  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::size_t size_ = 0;
};

// Finite distribution with exact weights. Construction checks that every
// weight is in [0,1] and that the weights sum to exactly 1; zero weights are
// dropped and entries are sorted by element.
class Dist {
 public:
  using Entry = std::pair<Value, Rational>;

  explicit Dist(std::vector<Entry> entries);
  Dist(std::initializer_list<Entry> entries);

  static Dist point(Value x);

  std::span<const Entry> entries() const { return entries_; }
  // Zero outside the support.
  Rational weight(const Value& x) const;
  FiniteSpace support() const;
  std::size_t support_size() const { return entries_.size(); }

  friend std::strong_ordering operator<=>(const Dist& a, const Dist& b);
  friend bool operator==(const Dist& a, const Dist& b);

 private:
  std::vector<Entry> entries_;
};

// Accumulates weighted outcomes and builds a checked Dist.
class DistBuilder {
 public:
  void add(const Value& x, const Rational& weight);
  Dist build() const;

 private:
  std::map<Value, Rational> weights_;
};

// Fuzzy predicate: a [0,1]-valued function on a declared finite domain.
class Predicate {
 public:
  using Entry = std::pair<Value, Rational>;

  Predicate() = default;
  explicit Predicate(std::vector<Entry> entries);
  Predicate(std::initializer_list<Entry> entries);

  static Predicate constant(const FiniteSpace& domain, const Rational& value);

  std::span<const Entry> entries() const { return entries_; }
  FiniteSpace domain() const;
  bool defined_at(const Value& x) const;
  // Throws DomainError outside the domain.
  const Rational& operator()(const Value& x) const;

  friend bool operator==(const Predicate& a, const Predicate& b);

 private:
  std::vector<Entry> entries_;
};

// Shorthand used throughout the tests and laws.
inline Value atom(const char* name) { return Value::atom(name); }

}  // namespace mulprob
