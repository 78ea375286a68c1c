#include "altsum/constants.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "altsum/error.hpp"

namespace altsum {

namespace {

struct BuiltinSpec {
  const char* name;
  const char* digits;
  const char* provenance;
};

// Both strings are truncations certified by two independent exact-rational
// series evaluations with rigorous tail enclosures; the derivations are
// re-run against these strings in the test suite.
constexpr BuiltinSpec kBuiltins[] = {
    {"pi_over_4",
     "0.785398163397448309615660845819875721049292349843776455243736",
     "machin 4*arctan(1/5)-arctan(1/239), alternating-tail enclosure; "
     "cross-checked against arctan(1/2)+arctan(1/3)"},
    {"ln2",
     "0.693147180559945309417232121458176568075500134360255254120680",
     "sum 1/(k*2^k) with geometric tail enclosure; "
     "cross-checked against 2*atanh(1/3)"},
};

ReferenceConstant make_constant(std::string name, std::string_view digit_string,
                                std::string provenance, const std::string& origin) {
  auto fail = [&](const std::string& why) -> void {
    raise(errc::parse_error, "bad constant digits: " + why, origin);
  };

  std::string_view body = digit_string;
  bool neg = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  if (dot == std::string_view::npos) fail("expected a decimal point");
  std::string_view frac = body.substr(dot + 1);
  // 50 certified digits plus at least one guard digit, so the truncation
  // bound 10^-digits sits strictly below 10^-50
  if (frac.size() < 51) fail("need at least 51 fractional digits");
  for (char c : body) {
    if (c != '.' && !std::isdigit(static_cast<unsigned char>(c))) fail("non-digit character");
  }
  if (neg) fail("reference constants are positive");

  ReferenceConstant out;
  out.name = std::move(name);
  out.value = Rational::parse(digit_string);
  out.digits = static_cast<unsigned>(frac.size());
  out.abs_error_bound = pow10(-static_cast<long>(out.digits));
  out.provenance = std::move(provenance);
  return out;
}

}  // namespace

const ConstantTable& ConstantTable::builtin() {
  static const ConstantTable table = [] {
    ConstantTable t;
    for (const auto& spec : kBuiltins) {
      t.entries_.push_back(make_constant(spec.name, spec.digits, spec.provenance, "builtin"));
    }
    return t;
  }();
  return table;
}

ConstantTable ConstantTable::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    raise(errc::io_error, "cannot open constants file", path.string());
  }
  ConstantTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    std::string name, digits;
    if (!(row >> name) || name.front() == '#') continue;
    if (!(row >> digits)) {
      raise(errc::parse_error, "constant line missing digits",
            path.string() + ":" + std::to_string(lineno));
    }
    std::string provenance;
    std::getline(row, provenance);
    if (auto start = provenance.find_first_not_of(" \t"); start != std::string::npos) {
      provenance = provenance.substr(start);
    } else {
      provenance.clear();
    }
    table.entries_.push_back(make_constant(name, digits, provenance,
                                           path.string() + ":" + std::to_string(lineno)));
  }
  if (table.entries_.empty()) {
    raise(errc::parse_error, "constants file has no entries", path.string());
  }
  return table;
}

const ReferenceConstant& ConstantTable::get(std::string_view name) const {
  for (const auto& entry : entries_) {
    if (entry.name == name) return entry;
  }
  raise(errc::unknown_constant, "unknown reference constant", std::string(name));
}

bool ConstantTable::contains(std::string_view name) const {
  for (const auto& entry : entries_) {
    if (entry.name == name) return true;
  }
  return false;
}

const ReferenceConstant& reference_value(std::string_view name) {
  return ConstantTable::builtin().get(name);
}

}  // namespace altsum
