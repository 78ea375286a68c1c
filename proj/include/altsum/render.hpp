#pragma once

// Machine-readable rendering of library results. JSON objects use a fixed
// key order and carry the schema tag "altsum/1"; rationals are emitted as
// exact "p/q" strings (plain "p" for integers) alongside decimal renderings
// so no value ever passes through a binary float.

#include <string>

#include <json.hpp>

#include "altsum/bounds.hpp"
#include "altsum/constants.hpp"
#include "altsum/differences.hpp"
#include "altsum/error.hpp"
#include "altsum/euler.hpp"
#include "altsum/rational.hpp"
#include "altsum/series.hpp"

namespace altsum {

using ordered_json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "altsum/1";

ordered_json catalog_json();
ordered_json sum_json(const SeriesSpec& spec, std::int64_t n, const Rational& value,
                      unsigned digits);
ordered_json table_json(const SeriesSpec& spec, const DifferenceTable& table,
                        unsigned digits);
ordered_json interval_json(const RemainderInterval& interval, unsigned digits);
ordered_json accel_json(const SeriesSpec& spec, const AccelerationResult& result,
                        unsigned digits);
ordered_json error_json(const Error& error);

std::string catalog_text();
std::string sum_text(const SeriesSpec& spec, std::int64_t n, const Rational& value,
                     unsigned digits);
std::string table_text(const DifferenceTable& table, unsigned digits);
std::string table_csv(const DifferenceTable& table, unsigned digits);
std::string interval_text(const RemainderInterval& interval, unsigned digits);
std::string accel_text(const AccelerationResult& result, unsigned digits);

}  // namespace altsum
