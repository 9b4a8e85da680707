#pragma once

// Oracle suite: every stratum table entry recounted by brute force, plus
// structural identities (closed forms, centralizers, Vandermonde unit).

#include <cstdint>
#include <string>
#include <vector>

#include "wmk/families.hpp"

namespace wmk::verify {

enum class Level { None, Fast, Full };
std::string to_string(Level level);
Level parse_level(const std::string& text);

/// Enumeration budget per oracle: 10^6 items for Fast, 10^7 for Full.
std::uint64_t enumeration_budget(Level level);

struct Check {
  std::string name;
  bool pass = false;
  bool skipped = false;  // enumeration did not fit the budget
  std::string expected;
  std::string actual;
  bool operator==(const Check&) const = default;
};

/// Identities that need no field: closed form, Euler characteristic,
/// unramified part q^3, zeta consistency, Vandermonde unit.
std::vector<Check> structural_checks(families::FamilyKind kind, unsigned l);

/// Oracle comparisons on the built family; empty for Level::None. Sorted by name.
std::vector<Check> oracle_checks(const families::Family& fam, Level level);

/// structural_checks + oracle_checks, sorted by name.
std::vector<Check> run_checks(const families::FamilySpec& spec, Level level);

bool all_pass(const std::vector<Check>& checks);

}  // namespace wmk::verify
