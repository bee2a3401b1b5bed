#include "mulprob/combinatorics.hpp"

#include <cstdlib>
#include <mutex>
#include <vector>

#include "mulprob/errors.hpp"

namespace mulprob {

namespace {

constexpr std::size_t kDefaultMemoCap = 64;
constexpr std::size_t kDefaultMaxCells = 50'000'000;

class FactorialTable {
 public:
  Natural factorial(std::size_t n) {
    {
      std::lock_guard lock(mutex_);
      if (n <= cap_) {
        extend(n);
        return table_[n];
      }
    }
    Natural result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
  }

  Natural binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    {
      std::lock_guard lock(mutex_);
      if (n <= cap_) {
        extend(n);
        Natural result = table_[n] / table_[k];
        return result / table_[n - k];
      }
    }
    Natural result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
  }

  std::size_t cap() {
    std::lock_guard lock(mutex_);
    return cap_;
  }

  void set_cap(std::size_t cap) {
    std::lock_guard lock(mutex_);
    cap_ = cap;
    if (table_.size() > cap_ + 1) table_.resize(cap_ + 1);
  }

 private:
  // Requires the lock.
  void extend(std::size_t n) {
    if (table_.empty()) table_.push_back(1);
    while (table_.size() <= n) {
      table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
    }
  }

  std::mutex mutex_;
  std::size_t cap_ = kDefaultMemoCap;
  std::vector<Natural> table_;
};

FactorialTable& table() {
  static FactorialTable instance;
  return instance;
}

}  // namespace

Rational make_rational(long numerator, unsigned long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational make_rational(const Natural& numerator, const Natural& denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& r, std::size_t e) {
  Natural num;
  Natural den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime.
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Natural& n) { return n.get_str(); }

Natural factorial(std::size_t n) { return table().factorial(n); }

Natural binomial(std::size_t n, std::size_t k) { return table().binomial(n, k); }

Natural multichoose(std::size_t n, std::size_t k) {
  if (n == 0) {
    if (k > 0) throw DomainError("no multisets of positive size over the empty set");
    return 1;
  }
  return binomial(n + k - 1, k);
}

std::size_t memo_cap() { return table().cap(); }

void set_memo_cap(std::size_t cap) { table().set_cap(cap); }

std::size_t max_cells() {
  const char* raw = std::getenv("MULPROB_MAX_CELLS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxCells;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return kDefaultMaxCells;
  return static_cast<std::size_t>(value);
}

void check_cells(const Natural& cells, const char* what) {
  const std::size_t budget = max_cells();
  if (cells > Natural(std::to_string(budget))) {
    throw ResourceError(std::string(what) + " needs " +
                        cells.get_str() + " cells, above MULPROB_MAX_CELLS=" +
                        std::to_string(budget));
  }
}

}  // namespace mulprob
