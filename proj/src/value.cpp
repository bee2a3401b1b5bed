#include "mulprob/value.hpp"

#include <algorithm>
#include <variant>

#include "mulprob/errors.hpp"

namespace mulprob {

struct Value::Node {
  std::variant<std::string, std::vector<Value>, Multiset, Dist> data;
};

namespace {

std::strong_ordering compare_rationals(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Value& empty_tuple() {
  static const Value instance = Value::tuple({});
  return instance;
}

}  // namespace

// ---------------------------------------------------------------- Value

Value::Value() : node_(empty_tuple().node_) {}

Value::Value(Multiset m)
    : node_(std::make_shared<const Node>(Node{std::move(m)})) {}

Value::Value(Dist d) : node_(std::make_shared<const Node>(Node{std::move(d)})) {}

Value Value::atom(std::string name) {
  return Value(std::make_shared<const Node>(Node{std::move(name)}));
}

Value Value::tuple(std::vector<Value> items) {
  return Value(std::make_shared<const Node>(Node{std::move(items)}));
}

Value Value::pair(Value first, Value second) {
  return tuple({std::move(first), std::move(second)});
}

Value::Kind Value::kind() const { return static_cast<Kind>(node_->data.index()); }

const std::string& Value::name() const {
  if (const auto* s = std::get_if<std::string>(&node_->data)) return *s;
  throw DomainError("value is not an atom");
}

std::span<const Value> Value::items() const {
  if (const auto* v = std::get_if<std::vector<Value>>(&node_->data)) return *v;
  throw DomainError("value is not a tuple");
}

const Value& Value::first() const {
  const auto xs = items();
  if (xs.size() != 2) throw DomainError("value is not a pair");
  return xs[0];
}

const Value& Value::second() const {
  const auto xs = items();
  if (xs.size() != 2) throw DomainError("value is not a pair");
  return xs[1];
}

const Multiset& Value::multiset() const {
  if (const auto* m = std::get_if<Multiset>(&node_->data)) return *m;
  throw DomainError("value is not a multiset");
}

const Dist& Value::dist() const {
  if (const auto* d = std::get_if<Dist>(&node_->data)) return *d;
  throw DomainError("value is not a distribution");
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = a.node_->data;
  const auto& y = b.node_->data;
  if (x.index() != y.index()) return x.index() <=> y.index();
  switch (x.index()) {
    case 0:
      return std::get<0>(x).compare(std::get<0>(y)) <=> 0;
    case 1: {
      const auto& u = std::get<1>(x);
      const auto& v = std::get<1>(y);
      return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(),
                                                    v.end());
    }
    case 2:
      return std::get<2>(x) <=> std::get<2>(y);
    default:
      return std::get<3>(x) <=> std::get<3>(y);
  }
}

// ---------------------------------------------------------- FiniteSpace

FiniteSpace::FiniteSpace(std::initializer_list<Value> elements)
    : FiniteSpace(std::vector<Value>(elements)) {}

FiniteSpace::FiniteSpace(std::vector<Value> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteSpace FiniteSpace::atoms(std::initializer_list<const char*> names) {
  std::vector<Value> xs;
  for (const char* n : names) xs.push_back(Value::atom(n));
  return FiniteSpace(std::move(xs));
}

bool FiniteSpace::contains(const Value& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b) {
  check_cells(Natural(std::to_string(a.size())) * Natural(std::to_string(b.size())),
              "product space");
  std::vector<Value> xs;
  xs.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) xs.push_back(Value::pair(x, y));
  }
  return FiniteSpace(std::move(xs));
}

FiniteSpace power(const FiniteSpace& space, std::size_t k) {
  Natural cells;
  mpz_ui_pow_ui(cells.get_mpz_t(), space.size(), k);
  check_cells(cells, "tuple space");
  std::vector<std::vector<Value>> partial{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<Value>> next;
    next.reserve(partial.size() * space.size());
    for (const auto& prefix : partial) {
      for (const auto& x : space) {
        auto t = prefix;
        t.push_back(x);
        next.push_back(std::move(t));
      }
    }
    partial = std::move(next);
  }
  std::vector<Value> xs;
  xs.reserve(partial.size());
  for (auto& t : partial) xs.push_back(Value::tuple(std::move(t)));
  return FiniteSpace(std::move(xs));
}

// ------------------------------------------------------------- Multiset

Multiset::Multiset(std::initializer_list<Entry> entries)
    : Multiset(std::vector<Entry>(entries)) {}

Multiset::Multiset(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& p, const Entry& q) { return p.first < q.first; });
  for (auto& [x, n] : entries) {
    if (n == 0) continue;
    size_ += n;
    if (!entries_.empty() && entries_.back().first == x) {
      entries_.back().second += n;
    } else {
      entries_.emplace_back(std::move(x), n);
    }
  }
}

std::size_t Multiset::count(const Value& x) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const Entry& e, const Value& v) { return e.first < v; });
  return it != entries_.end() && it->first == x ? it->second : 0;
}

FiniteSpace Multiset::support() const {
  std::vector<Value> xs;
  xs.reserve(entries_.size());
  for (const auto& e : entries_) xs.push_back(e.first);
  return FiniteSpace(std::move(xs));
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
  // Colexicographic: walk both supports from the largest element down.
  auto i = a.entries_.rbegin();
  auto j = b.entries_.rbegin();
  while (i != a.entries_.rend() && j != b.entries_.rend()) {
    const auto c = i->first <=> j->first;
    if (c == 0) {
      if (i->second != j->second) return i->second <=> j->second;
      ++i;
      ++j;
    } else {
      // The larger element is missing (count 0) on the other side.
      return c;
    }
  }
  if (i != a.entries_.rend()) return std::strong_ordering::greater;
  if (j != b.entries_.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ----------------------------------------------------------------- Dist

Dist::Dist(std::initializer_list<Entry> entries) : Dist(std::vector<Entry>(entries)) {}

Dist::Dist(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& p, const Entry& q) { return p.first < q.first; });
  Rational total = 0;
  for (auto& [x, w] : entries) {
    if (sgn(w) < 0) throw DomainError("negative weight " + to_string(w));
    total += w;
    if (!entries_.empty() && entries_.back().first == x) {
      entries_.back().second += w;
    } else {
      entries_.emplace_back(std::move(x), std::move(w));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return sgn(e.second) == 0; });
  if (total != 1) throw DomainError("weights sum to " + to_string(total));
}

Dist Dist::point(Value x) { return Dist({{std::move(x), Rational(1)}}); }

Rational Dist::weight(const Value& x) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const Entry& e, const Value& v) { return e.first < v; });
  return it != entries_.end() && it->first == x ? it->second : Rational(0);
}

FiniteSpace Dist::support() const {
  std::vector<Value> xs;
  xs.reserve(entries_.size());
  for (const auto& e : entries_) xs.push_back(e.first);
  return FiniteSpace(std::move(xs));
}

std::strong_ordering operator<=>(const Dist& a, const Dist& b) {
  const auto n = std::min(a.entries_.size(), b.entries_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.entries_[i].first <=> b.entries_[i].first; c != 0) return c;
    if (auto c = compare_rationals(a.entries_[i].second, b.entries_[i].second); c != 0) {
      return c;
    }
  }
  return a.entries_.size() <=> b.entries_.size();
}

bool operator==(const Dist& a, const Dist& b) { return a.entries_ == b.entries_; }

void DistBuilder::add(const Value& x, const Rational& weight) {
  if (sgn(weight) == 0) return;
  auto [it, inserted] = weights_.try_emplace(x, weight);
  if (!inserted) it->second += weight;
}

Dist DistBuilder::build() const {
  std::vector<Dist::Entry> entries(weights_.begin(), weights_.end());
  return Dist(std::move(entries));
}

// ------------------------------------------------------------ Predicate

Predicate::Predicate(std::initializer_list<Entry> entries)
    : Predicate(std::vector<Entry>(entries)) {}

Predicate::Predicate(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& p, const Entry& q) { return p.first < q.first; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& v = entries_[i].second;
    if (sgn(v) < 0 || v > 1) {
      throw DomainError("predicate value " + to_string(v) + " outside [0,1]");
    }
    if (i > 0 && entries_[i - 1].first == entries_[i].first) {
      throw DomainError("predicate defined twice on the same element");
    }
  }
}

Predicate Predicate::constant(const FiniteSpace& domain, const Rational& value) {
  std::vector<Entry> entries;
  for (const auto& x : domain) entries.emplace_back(x, value);
  return Predicate(std::move(entries));
}

FiniteSpace Predicate::domain() const {
  std::vector<Value> xs;
  for (const auto& e : entries_) xs.push_back(e.first);
  return FiniteSpace(std::move(xs));
}

bool Predicate::defined_at(const Value& x) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const Entry& e, const Value& v) { return e.first < v; });
  return it != entries_.end() && it->first == x;
}

const Rational& Predicate::operator()(const Value& x) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const Entry& e, const Value& v) { return e.first < v; });
  if (it == entries_.end() || !(it->first == x)) {
    throw DomainError("predicate undefined at element");
  }
  return it->second;
}

bool operator==(const Predicate& a, const Predicate& b) { return a.entries_ == b.entries_; }

}  // namespace mulprob
