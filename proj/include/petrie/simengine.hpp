#pragma once

#include "petrie/certificates.hpp"
#include "petrie/extensions.hpp"
#include "petrie/perm.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace petrie {

enum class Strength { Similar, WeaklySimilar };

std::string to_string(Strength s);

/// Cheapest first.
enum class Discriminator { Determinant, Trace, Charpoly, InvariantFactors };

std::string to_string(Discriminator d);
Discriminator parse_discriminator(std::string_view text);

/// Extension bounds. Right mode reads n, left mode reads m, two-sided both.
struct Bounds {
  int m = 0;
  int n = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// bound 3 for one-sided; two-sided uses (b, b).
Bounds bounds_for(Mode mode, int bound);
/// Defaults: 3 for one-sided, (2, 2) for two-sided.
Bounds default_bounds(Mode mode);

struct Refutation {
  ExtensionSpec spec;
  Discriminator discriminator = Discriminator::Determinant;
  Permutation sigma, rho;         // the extended pair
  std::string value_sigma, value_rho;  // the separating values, printed
};

/// First separating invariant of two Petrie matrices, or nullopt if they
/// agree on every invariant the strength looks at.
std::optional<Discriminator> separate(const IntMatrix& a, const IntMatrix& b, Strength strength);
std::string invariant_text(const IntMatrix& a, Discriminator d);

/// Recomputes both sides of a refutation and confirms the mismatch.
bool replay(const Permutation& sigma, const Permutation& rho, const Refutation& r);

struct Verdict {
  enum class Outcome { Refuted, ConsistentUpTo, Certified };
  Outcome outcome = Outcome::ConsistentUpTo;
  Mode mode = Mode::Right;
  Strength strength = Strength::Similar;
  Bounds bounds;
  std::optional<Refutation> refutation;
  std::optional<Certificate> certificate;
  struct LogEntry {
    Shape shape;
    std::size_t checked = 0;
  };
  std::vector<LogEntry> log;
  bool petrie_similar = false;  // base matrices, reported apart from the verdict

  bool refuted() const { return outcome == Outcome::Refuted; }
};

std::string to_string(Verdict::Outcome o);

struct CheckOptions {
  bool try_certificate = true;
};

Verdict check_pair(const Permutation& sigma, const Permutation& rho, Mode mode, Strength strength, Bounds bounds,
                   CheckOptions opts = {});

/// First counterexample in enumeration order.
std::optional<Refutation> refute(const Permutation& sigma, const Permutation& rho, Mode mode, Strength strength,
                                 Bounds bounds);

/// Extends both by spec and runs check_pair on the result in each mode.
std::vector<Verdict> propagate_check(const Permutation& sigma, const Permutation& rho, const ExtensionSpec& spec,
                                     const std::vector<Mode>& modes, Strength strength, int bound);

struct ClassInfo {
  std::vector<Permutation> members;
  bool certified = false;        // every member linked by certified pairs
  bool petrie_similar = false;   // base matrices pairwise similar
  std::vector<std::string> certificates;
};

struct ClassificationReport {
  int degree = 0;
  Mode mode = Mode::Right;
  Strength strength = Strength::Similar;
  Bounds bounds;
  std::vector<ClassInfo> classes;  // nontrivial classes only, sorted
  std::vector<std::pair<std::pair<Permutation, Permutation>, Refutation>> refutations;  // sorted by pair
};

struct ClassifyOptions {
  int jobs = 1;
  bool certify = true;
};

ClassificationReport classify(int n, Mode mode, Strength strength, Bounds bounds, ClassifyOptions opts = {});

inline constexpr int kReportFormatVersion = 1;

nlohmann::json to_json(const Refutation& r);
Refutation refutation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const nlohmann::json& j);

/// "1 3 2|2 1 3"
std::string pair_key(const Permutation& a, const Permutation& b);

/// Cache file for a report key inside dir.
std::filesystem::path cache_path(const std::filesystem::path& dir, int n, Mode mode, Strength strength, Bounds b);
/// Returns the cached report if present with the current format version.
std::optional<ClassificationReport> load_cached(const std::filesystem::path& file);
void store_cached(const std::filesystem::path& file, const ClassificationReport& r);

}  // namespace petrie
