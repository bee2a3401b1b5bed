#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mulprob/dist.hpp"
#include "mulprob/value.hpp"

namespace mulprob::laws {

// Bounds for the law runner. Every law quantifies over spaces of size
// 1..max_space and draw sizes up to the K/L/N bounds, over a pool of
// distributions made of point masses, the uniform distribution and
// `random_states` seeded random distributions.
struct Config {
  std::size_t max_space = 2;
  std::size_t max_k = 3;
  std::size_t max_l = 3;
  std::size_t max_n = 4;
  std::size_t random_states = 20;
  std::uint64_t seed = 1;
  // Multinomial implementation under test; swapped out by mutation tests.
  std::function<Dist(const Dist&, std::size_t)> multinomial;
};

enum class Verdict { pass, fail, expected_fail, unexpected_pass };

std::string_view to_string(Verdict v);

// First input on which the two legs of a diagram disagree.
struct Witness {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct LawReport {
  std::string name;
  std::string description;
  std::string parameters;
  bool negative = false;
  Verdict verdict = Verdict::pass;
  std::size_t instances = 0;
  std::optional<Witness> witness;

  // Pass for positive laws, failure for the negative ones.
  bool as_expected() const {
    return verdict == Verdict::pass || verdict == Verdict::expected_fail;
  }
};

struct LawInfo {
  std::string name;
  std::string description;
  bool negative = false;
};

const std::vector<LawInfo>& catalogue();

// Deterministic given the config.
std::vector<LawReport> run_laws(const Config& config);
// Throws DomainError for an unknown law name.
LawReport run_law(std::string_view name, const Config& config);

// One summary line, plus witness lines for unexpected verdicts and for
// negative laws.
std::string format_report(const LawReport& report);

// Pool of test distributions over `space`: point masses, uniform, then
// `count` random ones with small denominators. Deterministic in `seed`.
std::vector<Dist> state_pool(const FiniteSpace& space, std::size_t count, std::uint64_t seed);

// Random channel domain ~> codomain, deterministic in `seed`.
Channel random_channel(const FiniteSpace& domain, const FiniteSpace& codomain,
                       std::uint64_t seed);

// Atoms a, b, c, ... / z0, z1, ... / w0, w1, ...
FiniteSpace space_x(std::size_t n);
FiniteSpace space_y(std::size_t n);
FiniteSpace space_z(std::size_t n);

}  // namespace mulprob::laws
