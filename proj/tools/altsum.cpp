// Command-line front end: every subcommand prints results with numbers in
// both exact p/q form and decimal rendering, as text, JSON, or CSV.
//
// Exit codes: 0 success, 1 domain error (reported as a structured JSON
// error object in JSON mode), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "altsum/bounds.hpp"
#include "altsum/constants.hpp"
#include "altsum/differences.hpp"
#include "altsum/error.hpp"
#include "altsum/euler.hpp"
#include "altsum/render.hpp"
#include "altsum/series.hpp"

namespace {

using altsum::ordered_json;

enum class OutputMode { text, json, csv };

struct GlobalOptions {
  OutputMode output = OutputMode::text;
  unsigned digits = 12;
};

std::string series_flag;
std::string method_flag = "jb";
std::string eps_flag;
std::int64_t n_flag = 0;
int k_flag = 0;
std::int64_t start_flag = 1;
std::int64_t width_flag = 0;
int max_order_flag = 0;
std::int64_t head_flag = 0;
std::int64_t tail_flag = 0;
bool enclosure_flag = false;

void emit(const GlobalOptions& opts, const ordered_json& json_doc,
          const std::string& text_doc) {
  if (opts.output == OutputMode::json) {
    std::cout << json_doc.dump(2) << '\n';
  } else {
    std::cout << text_doc;
  }
}

const altsum::ConstantTable& constant_table() {
  static const altsum::ConstantTable* table = []() -> const altsum::ConstantTable* {
    if (const char* path = std::getenv("ALTSUM_CONSTANTS")) {
      static altsum::ConstantTable loaded = altsum::ConstantTable::from_file(path);
      return &loaded;
    }
    return &altsum::ConstantTable::builtin();
  }();
  return *table;
}

altsum::TermSource source_for(const std::string& designator) {
  return {altsum::parse_series(designator), altsum::Backend::exact};
}

altsum::RemainderInterval interval_at(const altsum::TermSource& src, std::int64_t n,
                                      const altsum::BoundMethod& method) {
  return method.kind == altsum::BoundMethod::Kind::leibniz
             ? altsum::leibniz_bound(src, n)
             : altsum::johnsonbaugh_interval(src, n, method.k);
}

int run_command(const CLI::App& app, const GlobalOptions& opts) {
  const unsigned digits = opts.digits;

  if (opts.output == OutputMode::csv && !app.got_subcommand("table")) {
    std::cerr << "csv output is only available for the table subcommand\n";
    return 2;
  }

  if (app.got_subcommand("catalog")) {
    emit(opts, altsum::catalog_json(), altsum::catalog_text());
    return 0;
  }

  if (app.got_subcommand("sum")) {
    auto src = source_for(series_flag);
    altsum::Rational value = altsum::partial_sum(src, n_flag);
    emit(opts, altsum::sum_json(src.spec, n_flag, value, digits),
         altsum::sum_text(src.spec, n_flag, value, digits));
    return 0;
  }

  if (app.got_subcommand("table")) {
    auto src = source_for(series_flag);
    auto table = altsum::DifferenceTable::build(src, start_flag, width_flag,
                                                max_order_flag);
    if (opts.output == OutputMode::csv) {
      std::cout << altsum::table_csv(table, digits);
    } else {
      emit(opts, altsum::table_json(src.spec, table, digits),
           altsum::table_text(table, digits));
    }
    return 0;
  }

  if (app.got_subcommand("bounds")) {
    auto src = source_for(series_flag);
    altsum::BoundMethod method = altsum::BoundMethod::parse(method_flag);
    if (method.kind == altsum::BoundMethod::Kind::johnsonbaugh && method_flag == "jb") {
      method.k = k_flag;  // --k spells the order when --method is plain jb
    }
    altsum::RemainderInterval interval =
        method.kind == altsum::BoundMethod::Kind::leibniz
            ? altsum::leibniz_bound(src, n_flag)
            : altsum::johnsonbaugh_interval(src, n_flag, method.k);
    emit(opts, altsum::interval_json(interval, digits),
         altsum::interval_text(interval, digits));
    return 0;
  }

  if (app.got_subcommand("solve")) {
    auto src = source_for(series_flag);
    altsum::Rational eps = altsum::Rational::parse(eps_flag);
    ordered_json out;
    out["schema"] = altsum::kSchema;
    out["series"] = src.spec.id;
    out["eps"] = eps.to_string();
    std::ostringstream text;
    if (method_flag == "true") {
      std::int64_t n = altsum::first_n_true(src, eps, constant_table());
      altsum::TrueRemainder rem = altsum::true_remainder(src, n, constant_table());
      out["method"] = "true";
      out["n"] = n;
      ordered_json cert;
      cert["remainder"] = rem.value.to_string();
      cert["remainder_decimal"] = rem.value.decimal_string(digits);
      cert["limit_error_bound"] = rem.error_bound.to_string();
      out["certificate"] = std::move(cert);
      text << "series = " << src.spec.id << "\nmethod = true\nn = " << n
           << "\nremainder = " << rem.value.to_string()
           << "\nremainder_decimal = " << rem.value.decimal_string(digits) << '\n';
    } else {
      altsum::BoundMethod method = altsum::BoundMethod::parse(method_flag);
      std::int64_t n = altsum::first_n_guaranteed(src, eps, method);
      altsum::RemainderInterval certificate = interval_at(src, n, method);
      out["method"] = method.to_string();
      out["n"] = n;
      out["certificate"] = altsum::interval_json(certificate, digits);
      text << "series = " << src.spec.id << "\nmethod = " << method.to_string()
           << "\nn = " << n << "\ncertificate:\n"
           << altsum::interval_text(certificate, digits);
    }
    emit(opts, out, text.str());
    return 0;
  }

  if (app.got_subcommand("euler")) {
    auto src = source_for(series_flag);
    altsum::AccelerationResult result = altsum::euler_partial_sum(src, n_flag);
    ordered_json out = altsum::accel_json(src.spec, result, digits);
    std::string text = "series = " + src.spec.id + "\n" +
                       altsum::accel_text(result, digits);
    if (enclosure_flag) {
      auto [lo, hi] = altsum::euler_enclosure(src, n_flag);
      ordered_json enc;
      enc["lower"] = lo.to_string();
      enc["upper"] = hi.to_string();
      enc["lower_decimal"] = lo.decimal_string(digits);
      enc["upper_decimal"] = hi.decimal_string(digits);
      out["enclosure"] = std::move(enc);
      text += "enclosure = [" + lo.to_string() + ", " + hi.to_string() + "]\n";
    }
    emit(opts, out, text);
    return 0;
  }

  if (app.got_subcommand("hybrid")) {
    auto src = source_for(series_flag);
    altsum::AccelerationResult result = altsum::hybrid_sum(src, head_flag, tail_flag);
    emit(opts, altsum::accel_json(src.spec, result, digits),
         "series = " + src.spec.id + "\n" + altsum::accel_text(result, digits));
    return 0;
  }

  if (app.got_subcommand("accel-solve")) {
    auto src = source_for(series_flag);
    altsum::Rational eps = altsum::Rational::parse(eps_flag);
    std::int64_t n = altsum::first_n_euler(src, eps);
    altsum::AccelerationResult result = altsum::euler_partial_sum(src, n);
    ordered_json out;
    out["schema"] = altsum::kSchema;
    out["series"] = src.spec.id;
    out["eps"] = eps.to_string();
    out["n"] = n;
    out["result"] = altsum::accel_json(src.spec, result, digits);
    std::string text = "series = " + src.spec.id + "\nn = " + std::to_string(n) +
                       "\n" + altsum::accel_text(result, digits);
    emit(opts, out, text);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified alternating-series summation and acceleration"};
  app.require_subcommand(1);
  app.fallthrough();  // global --output/--digits may follow the subcommand

  GlobalOptions opts;
  std::map<std::string, OutputMode> output_names{
      {"text", OutputMode::text}, {"json", OutputMode::json}, {"csv", OutputMode::csv}};
  app.add_option("--output", opts.output, "output format")
      ->transform(CLI::CheckedTransformer(output_names, CLI::ignore_case))
      ->default_val("text");
  app.add_option("--digits", opts.digits, "decimal rendering precision")
      ->check(CLI::Range(1u, 1000u))
      ->default_val(12u);

  auto series_opt = [&](CLI::App* cmd) {
    cmd->add_option("--series", series_flag, "series designator")
        ->required()
        ->check([](const std::string& value) -> std::string {
          try {
            altsum::validate_series_designator(value);
          } catch (const altsum::Error& e) {
            return std::string(e.what()) + ": " + e.context();
          }
          return {};
        });
  };

  app.add_subcommand("catalog", "list built-in series");

  auto* sum = app.add_subcommand("sum", "exact partial sum S_n");
  series_opt(sum);
  sum->add_option("--n", n_flag, "number of terms")->required()->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("table", "forward-difference table");
  series_opt(table);
  table->add_option("--start", start_flag, "first index")->check(CLI::PositiveNumber);
  table->add_option("--width", width_flag, "table width")->required()->check(CLI::PositiveNumber);
  table->add_option("--max-order", max_order_flag, "highest difference order")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* bounds = app.add_subcommand("bounds", "certified remainder interval for S_n");
  series_opt(bounds);
  bounds->add_option("--n", n_flag, "partial-sum index")->required()->check(CLI::NonNegativeNumber);
  bounds->add_option("--k", k_flag, "difference order")->check(CLI::NonNegativeNumber);
  bounds->add_option("--method", method_flag, "leibniz or jb[:k]");

  auto* solve = app.add_subcommand("solve", "first n whose remainder beats eps");
  series_opt(solve);
  solve->add_option("--eps", eps_flag, "target accuracy (exact rational or decimal)")
      ->required()
      ->check([](const std::string& value) -> std::string {
        try {
          if (!altsum::Rational::parse(value).is_positive()) return "eps must be > 0";
        } catch (const altsum::Error& e) {
          return std::string(e.what());
        }
        return {};
      });
  solve->add_option("--method", method_flag, "leibniz, jb:k, or true")->required();

  auto* euler = app.add_subcommand("euler", "Euler-transformed partial sum E_n");
  series_opt(euler);
  euler->add_option("--n", n_flag, "transform order")->required()->check(CLI::PositiveNumber);
  euler->add_flag("--enclosure", enclosure_flag, "also print the two-sided enclosure of the limit");

  auto* hybrid = app.add_subcommand("hybrid", "exact head plus Euler tail");
  series_opt(hybrid);
  hybrid->add_option("--head", head_flag, "terms summed exactly")
      ->required()
      ->check(CLI::NonNegativeNumber);
  hybrid->add_option("--tail", tail_flag, "transform order for the tail")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* accel = app.add_subcommand("accel-solve", "first Euler order with bound <= eps");
  series_opt(accel);
  accel->add_option("--eps", eps_flag, "target accuracy")
      ->required()
      ->check([](const std::string& value) -> std::string {
        try {
          if (!altsum::Rational::parse(value).is_positive()) return "eps must be > 0";
        } catch (const altsum::Error& e) {
          return std::string(e.what());
        }
        return {};
      });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run_command(app, opts);
  } catch (const altsum::Error& e) {
    if (opts.output == OutputMode::json) {
      std::cout << altsum::error_json(e).dump(2) << '\n';
    } else {
      std::cerr << "error: " << e.what();
      if (!e.context().empty()) std::cerr << " (" << e.context() << ")";
      std::cerr << '\n';
    }
    return 1;
  }
}
