#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "altsum/rational.hpp"

namespace altsum {

// A named decimal constant with a certified absolute error bound. Used as
// the series limit L when measuring true remainders, so the bound must be
// far below any tolerance the library reasons about (< 10^-50 always).
//
// The committed digit string is a truncation of the constant: with d
// certified fractional digits, 0 <= true - value < 10^-d.
struct ReferenceConstant {
  std::string name;
  Rational value;
  Rational abs_error_bound;
  unsigned digits = 0;  // certified fractional digits, >= 50
  std::string provenance;
};

class ConstantTable {
 public:
  // Source-committed constants: pi_over_4 and ln2, 60 certified digits each.
  static const ConstantTable& builtin();

  // Plain-text format, one constant per line:
  //   <name> <decimal digits> <provenance-note>
  // Blank lines and lines starting with '#' are skipped.
  static ConstantTable from_file(const std::filesystem::path& path);

  const ReferenceConstant& get(std::string_view name) const;  // throws unknown_constant
  bool contains(std::string_view name) const;
  const std::vector<ReferenceConstant>& entries() const { return entries_; }

 private:
  std::vector<ReferenceConstant> entries_;
};

// Lookup in the built-in table.
const ReferenceConstant& reference_value(std::string_view name);

}  // namespace altsum
