#include "altsum/render.hpp"

#include <sstream>

namespace altsum {

namespace {

std::string decimal(const Rational& value, unsigned digits) {
  return value.decimal_string(digits);
}

}  // namespace

ordered_json catalog_json() {
  ordered_json series = ordered_json::array();
  for (const auto& spec : catalog()) {
    ordered_json entry;
    entry["id"] = spec.id;
    entry["family"] = std::string(to_string(spec.family));
    entry["display_name"] = spec.display_name;
    entry["known_limit"] = spec.known_limit ? ordered_json(*spec.known_limit)
                                            : ordered_json(nullptr);
    series.push_back(std::move(entry));
  }
  ordered_json out;
  out["schema"] = kSchema;
  out["series"] = std::move(series);
  return out;
}

ordered_json sum_json(const SeriesSpec& spec, std::int64_t n, const Rational& value,
                      unsigned digits) {
  ordered_json out;
  out["schema"] = kSchema;
  out["series"] = spec.id;
  out["n"] = n;
  out["value"] = value.to_string();
  out["value_decimal"] = decimal(value, digits);
  return out;
}

ordered_json table_json(const SeriesSpec& spec, const DifferenceTable& table,
                        unsigned digits) {
  ordered_json cells = ordered_json::array();
  for (int r = 0; r <= table.max_order(); ++r) {
    for (std::int64_t j = 0; j <= table.width() - r; ++j) {
      const Rational& v = table.at(r, table.n_start() + j);
      ordered_json cell;
      cell["r"] = r;
      cell["n"] = table.n_start() + j;
      cell["value"] = v.to_string();
      cell["value_decimal"] = decimal(v, digits);
      cells.push_back(std::move(cell));
    }
  }
  ordered_json out;
  out["schema"] = kSchema;
  out["series"] = spec.id;
  out["n_start"] = table.n_start();
  out["width"] = table.width();
  out["max_order"] = table.max_order();
  out["cells"] = std::move(cells);
  return out;
}

ordered_json interval_json(const RemainderInterval& interval, unsigned digits) {
  ordered_json out;
  out["schema"] = kSchema;
  out["n"] = interval.n;
  out["method"] = interval.method.to_string();
  if (interval.method.kind == BoundMethod::Kind::johnsonbaugh) {
    out["k"] = interval.method.k;
  } else {
    out["k"] = nullptr;
  }
  out["lower"] = interval.lower.to_string();
  out["upper"] = interval.upper.to_string();
  out["lower_decimal"] = decimal(interval.lower, digits);
  out["upper_decimal"] = decimal(interval.upper, digits);
  out["lower_strict"] = interval.lower_strict;
  out["upper_strict"] = interval.upper_strict;
  out["sign"] = interval.sign;
  return out;
}

ordered_json accel_json(const SeriesSpec& spec, const AccelerationResult& result,
                        unsigned digits) {
  ordered_json out;
  out["schema"] = kSchema;
  out["series"] = spec.id;
  out["method"] = result.method.to_string();
  out["value"] = result.value.to_string();
  out["value_decimal"] = decimal(result.value, digits);
  out["error_upper"] = result.error_upper.to_string();
  out["error_upper_decimal"] = decimal(result.error_upper, digits);
  out["underestimates"] = result.underestimates;
  out["terms_consumed"] = result.terms_consumed;
  out["backend"] = std::string(to_string(result.backend));
  return out;
}

ordered_json error_json(const Error& error) {
  ordered_json body;
  body["kind"] = std::string(to_string(error.code()));
  body["message"] = error.what();
  body["context"] = error.context();
  ordered_json out;
  out["schema"] = kSchema;
  out["error"] = std::move(body);
  return out;
}

std::string catalog_text() {
  std::ostringstream os;
  for (const auto& spec : catalog()) {
    os << spec.id << "  " << spec.display_name;
    if (spec.known_limit) {
      os << "  (limit: " << *spec.known_limit << ")";
    }
    os << '\n';
  }
  return os.str();
}

std::string sum_text(const SeriesSpec& spec, std::int64_t n, const Rational& value,
                     unsigned digits) {
  std::ostringstream os;
  os << "series = " << spec.id << '\n'
     << "n = " << n << '\n'
     << "value = " << value.to_string() << '\n'
     << "decimal = " << decimal(value, digits) << '\n';
  return os.str();
}

std::string table_text(const DifferenceTable& table, unsigned digits) {
  std::size_t w_exact = 0;
  for (int r = 0; r <= table.max_order(); ++r) {
    for (std::int64_t j = 0; j <= table.width() - r; ++j) {
      w_exact = std::max(w_exact, table.at(r, table.n_start() + j).to_string().size());
    }
  }
  std::ostringstream os;
  os << "r  n  value  decimal\n";
  for (int r = 0; r <= table.max_order(); ++r) {
    for (std::int64_t j = 0; j <= table.width() - r; ++j) {
      const Rational& v = table.at(r, table.n_start() + j);
      std::string exact = v.to_string();
      os << r << "  " << (table.n_start() + j) << "  " << exact
         << std::string(w_exact - exact.size() + 2, ' ') << decimal(v, digits) << '\n';
    }
  }
  return os.str();
}

std::string table_csv(const DifferenceTable& table, unsigned digits) {
  std::ostringstream os;
  os << "r,n,value_exact,value_decimal\n";
  for (int r = 0; r <= table.max_order(); ++r) {
    for (std::int64_t j = 0; j <= table.width() - r; ++j) {
      const Rational& v = table.at(r, table.n_start() + j);
      os << r << ',' << (table.n_start() + j) << ',' << v.to_string() << ','
         << decimal(v, digits) << '\n';
    }
  }
  return os.str();
}

std::string interval_text(const RemainderInterval& interval, unsigned digits) {
  std::ostringstream os;
  os << "n = " << interval.n << '\n'
     << "method = " << interval.method.to_string() << '\n'
     << "sign = " << (interval.sign > 0 ? "+1" : "-1") << '\n'
     << "lower = " << interval.lower.to_string() << '\n'
     << "lower_decimal = " << decimal(interval.lower, digits) << '\n'
     << "lower_strict = " << (interval.lower_strict ? "true" : "false") << '\n'
     << "upper = " << interval.upper.to_string() << '\n'
     << "upper_decimal = " << decimal(interval.upper, digits) << '\n'
     << "upper_strict = " << (interval.upper_strict ? "true" : "false") << '\n';
  return os.str();
}

std::string accel_text(const AccelerationResult& result, unsigned digits) {
  std::ostringstream os;
  os << "method = " << result.method.to_string() << '\n'
     << "value = " << result.value.to_string() << '\n'
     << "value_decimal = " << decimal(result.value, digits) << '\n'
     << "error_upper = " << result.error_upper.to_string() << '\n'
     << "error_upper_decimal = " << decimal(result.error_upper, digits) << '\n'
     << "underestimates = " << (result.underestimates ? "true" : "false") << '\n'
     << "terms_consumed = " << result.terms_consumed << '\n'
     << "backend = " << to_string(result.backend) << '\n';
  return os.str();
}

}  // namespace altsum
