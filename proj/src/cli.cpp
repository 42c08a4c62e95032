#include "kohn/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kohn/asymptotics.hpp"
#include "kohn/report_io.hpp"
#include "kohn/spectrum.hpp"

namespace kohn::cli {

namespace {

using nlohmann::json;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

// Writes to --out when given, otherwise to the caller's stream.
void emit(const std::string& out_path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (out_path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw IoFailure("cannot open '" + out_path + "' for writing");
  }
  body(file);
  if (!file) {
    throw IoFailure("write to '" + out_path + "' failed");
  }
}

std::vector<CountingConvention> conventions_for(const std::string& flag) {
  if (flag == "both") {
    return {CountingConvention::paper_restricted, CountingConvention::full_spectrum};
  }
  return {parse_convention(flag)};
}

std::string short_name(CoefficientMethod m) {
  return m == CoefficientMethod::closed_form ? "closed" : std::string(to_string(m));
}

struct SpectrumArgs {
  int n = 0;
  double lambda_max = 0;
  std::string convention = "full";
  std::string format = "csv";
  std::string out;
};

struct CountArgs {
  int n = 0;
  double lambda = 0;
  std::string convention = "full";
  unsigned threads = 0;
  std::string format = "text";
  std::string out;
};

struct CoeffArgs {
  int n = 0;
  std::string method = "all";
  std::string convention = "both";
  double eps = 1e-12;
  unsigned precision = PrecisionSpec::kDefaultDigits;
  double lambda = 1e6;
  std::uint64_t cap = 1'000'000'000;
  unsigned threads = 0;
  std::string format = "text";
  std::string out;
};

struct ConvergeArgs {
  int n = 0;
  std::string lambdas;
  std::string convention = "full";
  unsigned precision = PrecisionSpec::kDefaultDigits;
  unsigned threads = 0;
  std::string format = "csv";
  std::string out;
};

struct WeylArgs {
  int n = 0;
  std::string normalization = "paper-text";
  unsigned precision = PrecisionSpec::kDefaultDigits;
  std::string format = "text";
  std::string out;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const SphereParam n(a.n);
  const auto table = spectrum_table(n, a.lambda_max, parse_convention(a.convention));
  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "csv") {
      io::write_spectrum_csv(os, table);
    } else if (a.format == "json") {
      os << io::spectrum_to_json(table).dump(2) << '\n';
    } else {
      Integer cumulative = 0;
      os << std::setw(14) << "eigenvalue" << std::setw(24) << "multiplicity" << std::setw(28) << "cumulative" << '\n';
      for (const auto& e : table) {
        cumulative += e.multiplicity;
        os << std::setw(14) << e.eigenvalue << std::setw(24) << e.multiplicity.get_str() << std::setw(28)
           << cumulative.get_str() << '\n';
      }
    }
  });
  return kOk;
}

int cmd_count(const CountArgs& a, std::ostream& out) {
  const SphereParam n(a.n);
  const auto result = count_N(n, a.lambda, parse_convention(a.convention), a.threads == 0 ? default_threads() : a.threads);
  emit(a.out, out, [&](std::ostream& os) {
    const std::string conv(to_string(result.convention));
    if (a.format == "csv") {
      os << "n,lambda,convention,count\n"
         << a.n << ',' << io::format_double(result.lambda) << ',' << conv << ',' << result.count.get_str() << '\n';
    } else if (a.format == "json") {
      os << json{{"n", a.n}, {"lambda", result.lambda}, {"convention", conv}, {"count", result.count.get_str()}}.dump(2)
         << '\n';
    } else {
      os << "n=" << a.n << " lambda=" << io::format_double(result.lambda) << " convention=" << conv
         << " count=" << result.count.get_str() << '\n';
    }
  });
  return kOk;
}

void print_report_text(std::ostream& os, const CoefficientReport& r) {
  os << "  " << std::left << std::setw(12) << to_string(r.method) << std::right << " value = " << r.value.to_string()
     << "  error_bound = " << io::format_double(r.error_bound);
  if (r.K) {
    os << "  K = " << *r.K;
  }
  if (r.lambda) {
    os << "  lambda = " << io::format_double(*r.lambda);
  }
  os << '\n';
  if (r.exact) {
    const Rational prefactor = coefficient_prefactor(SphereParam(r.n));
    const PiPolynomial bracket = *r.exact * Rational(1 / prefactor);
    os << "               exact = " << r.exact->to_string() << '\n'
       << "                     = " << prefactor.get_str() << " * (" << bracket.to_string() << ")\n";
  }
}

int cmd_coeff(const CoeffArgs& a, std::ostream& out) {
  const SphereParam n(a.n);
  const PrecisionSpec prec(a.precision);
  if (!(a.eps > 0.0)) {
    throw std::invalid_argument("--eps must be positive");
  }
  std::vector<CoefficientMethod> methods;
  if (a.method == "all") {
    methods = {CoefficientMethod::closed_form, CoefficientMethod::series, CoefficientMethod::empirical};
  } else {
    methods = {parse_method(a.method)};
  }
  const unsigned threads = a.threads == 0 ? default_threads() : a.threads;

  std::vector<CoefficientReport> reports;
  struct Gap {
    CountingConvention convention;
    CoefficientMethod lhs;
    CoefficientMethod rhs;
    BigFloat difference;
  };
  std::vector<Gap> gaps;
  for (const auto conv : conventions_for(a.convention)) {
    const std::size_t first = reports.size();
    for (const auto m : methods) {
      switch (m) {
        case CoefficientMethod::closed_form:
          reports.push_back(leading_coefficient_closed(n, conv, prec));
          break;
        case CoefficientMethod::series: {
          SeriesOptions opts;
          opts.eps = a.eps;
          opts.iteration_cap = a.cap;
          opts.precision = prec;
          reports.push_back(leading_coefficient_series(n, conv, opts));
          break;
        }
        case CoefficientMethod::empirical:
          reports.push_back(leading_coefficient_empirical(n, a.lambda, conv, prec, threads));
          break;
      }
    }
    for (std::size_t i = first; i < reports.size(); ++i) {
      for (std::size_t j = i + 1; j < reports.size(); ++j) {
        gaps.push_back(Gap{conv, reports[j].method, reports[i].method, reports[j].value - reports[i].value});
      }
    }
  }

  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "csv") {
      io::write_coefficient_csv(os, reports);
    } else if (a.format == "json") {
      json j{{"reports", json::array()}, {"gaps", json::array()}};
      for (const auto& r : reports) {
        j["reports"].push_back(io::to_json(r));
      }
      for (const auto& g : gaps) {
        j["gaps"].push_back({{"convention", std::string(to_string(g.convention))},
                             {"lhs", std::string(to_string(g.lhs))},
                             {"rhs", std::string(to_string(g.rhs))},
                             {"difference", g.difference.to_string(20)}});
      }
      os << j.dump(2) << '\n';
    } else {
      std::optional<CountingConvention> current;
      for (const auto& r : reports) {
        if (current != r.convention) {
          current = r.convention;
          os << "n = " << r.n << ", convention = " << to_string(r.convention) << '\n';
        }
        print_report_text(os, r);
        const bool last_of_convention = &r == &reports.back() || (&r + 1)->convention != r.convention;
        if (last_of_convention) {
          for (const auto& g : gaps) {
            if (g.convention == r.convention) {
              os << "  gap " << short_name(g.lhs) << " - " << short_name(g.rhs) << " = " << g.difference.to_string(20)
                 << '\n';
            }
          }
        }
      }
    }
  });
  return kOk;
}

int cmd_converge(const ConvergeArgs& a, std::ostream& out) {
  const SphereParam n(a.n);
  const auto lambdas = parse_lambda_list(a.lambdas);
  const auto profile = remainder_profile(n, lambdas, parse_convention(a.convention), PrecisionSpec(a.precision),
                                         a.threads == 0 ? default_threads() : a.threads);
  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "json") {
      os << io::to_json(profile).dump(2) << '\n';
    } else {
      io::write_remainder_csv(os, profile);
    }
  });
  return kOk;
}

int cmd_weyl(const WeylArgs& a, std::ostream& out) {
  const auto normalization = parse_normalization(a.normalization);
  const auto constant = weyl_ball_constant(a.n, normalization);
  const auto value = pipoly_eval(constant, PrecisionSpec(a.precision));
  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "json") {
      os << json{{"n", a.n},
                 {"normalization", a.normalization},
                 {"exact", constant.to_string()},
                 {"value", value.to_string()}}
                .dump(2)
         << '\n';
    } else {
      os << constant.to_string() << '\n' << "value = " << value.to_string() << '\n';
    }
  });
  return kOk;
}

double parse_positive(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v) || v <= 0) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<double> parse_lambda_list(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty lambda list");
  }
  std::vector<double> out;
  if (text.find(':') == std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      out.push_back(parse_positive(item));
    }
    if (out.empty() || text.back() == ',') {
      throw std::invalid_argument("malformed lambda list '" + text + "'");
    }
    return out;
  }

  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    parts.push_back(item);
  }
  if (parts.size() != 3 || parts[2].size() < 2 || (parts[2][0] != 'x' && parts[2][0] != '+')) {
    throw std::invalid_argument("malformed lambda range '" + text + "' (expected lo:hi:xR or lo:hi:+D)");
  }
  const double lo = parse_positive(parts[0]);
  const double hi = parse_positive(parts[1]);
  const double step = parse_positive(parts[2].substr(1));
  const bool geometric = parts[2][0] == 'x';
  if (hi < lo || (geometric && step <= 1.0)) {
    throw std::invalid_argument("malformed lambda range '" + text + "'");
  }
  const double slack = hi * 1e-12;
  for (std::size_t i = 0;; ++i) {
    const double v = geometric ? lo * std::pow(step, static_cast<double>(i)) : lo + step * static_cast<double>(i);
    if (v > hi + slack) {
      break;
    }
    out.push_back(v);
    if (out.size() > 1'000'000) {
      throw std::invalid_argument("lambda range too long");
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrum, counting function and leading Weyl-type coefficient of the Kohn Laplacian on S^{2n-1}",
               "kohn-spectral"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::vector<std::string> formats_csv_json_text{"csv", "json", "text"};
  const std::vector<std::string> conventions{"paper", "full"};

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Tabulate eigenvalues and multiplicities up to --lambda-max");
  spectrum->add_option("--n", spectrum_args.n, "Sphere S^{2n-1} in C^n (n >= 2)")->required();
  spectrum->add_option("--lambda-max", spectrum_args.lambda_max, "Largest eigenvalue to list")->required();
  spectrum->add_option("--convention", spectrum_args.convention)->check(CLI::IsMember(conventions))->capture_default_str();
  spectrum->add_option("--format", spectrum_args.format)->check(CLI::IsMember(formats_csv_json_text))->capture_default_str();
  spectrum->add_option("--out", spectrum_args.out, "Output file (default stdout)");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Evaluate N(lambda)");
  count->add_option("--n", count_args.n)->required();
  count->add_option("--lambda", count_args.lambda)->required();
  count->add_option("--convention", count_args.convention)->check(CLI::IsMember(conventions))->capture_default_str();
  count->add_option("--threads", count_args.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  count->add_option("--format", count_args.format)->check(CLI::IsMember(formats_csv_json_text))->capture_default_str();
  count->add_option("--out", count_args.out);

  CoeffArgs coeff_args;
  auto* coeff = app.add_subcommand("coeff", "Leading coefficient of N(lambda)/lambda^n");
  coeff->add_option("--n", coeff_args.n)->required();
  coeff->add_option("--method", coeff_args.method)
      ->check(CLI::IsMember({"series", "closed", "empirical", "all"}))
      ->capture_default_str();
  coeff->add_option("--convention", coeff_args.convention)
      ->check(CLI::IsMember({"paper", "full", "both"}))
      ->capture_default_str();
  coeff->add_option("--eps", coeff_args.eps, "Series accuracy target")->capture_default_str();
  coeff->add_option("--precision", coeff_args.precision, "Decimal digits (>= 16)")->capture_default_str();
  coeff->add_option("--lambda", coeff_args.lambda, "lambda for the empirical ratio")->capture_default_str();
  coeff->add_option("--cap", coeff_args.cap, "Series iteration cap")->capture_default_str();
  coeff->add_option("--threads", coeff_args.threads)->capture_default_str();
  coeff->add_option("--format", coeff_args.format)->check(CLI::IsMember(formats_csv_json_text))->capture_default_str();
  coeff->add_option("--out", coeff_args.out);

  ConvergeArgs converge_args;
  auto* converge = app.add_subcommand("converge", "Remainder profile N(lambda) - c lambda^n");
  converge->add_option("--n", converge_args.n)->required();
  converge->add_option("--lambdas", converge_args.lambdas, "a,b,c | lo:hi:xR | lo:hi:+D")->required();
  converge->add_option("--convention", converge_args.convention)->check(CLI::IsMember(conventions))->capture_default_str();
  converge->add_option("--precision", converge_args.precision)->capture_default_str();
  converge->add_option("--threads", converge_args.threads)->capture_default_str();
  converge->add_option("--format", converge_args.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  converge->add_option("--out", converge_args.out);

  WeylArgs weyl_args;
  auto* weyl = app.add_subcommand("weyl", "Dirichlet Weyl constant of the unit ball in R^{2n}");
  weyl->add_option("--n", weyl_args.n)->required();
  weyl->add_option("--normalization", weyl_args.normalization)
      ->check(CLI::IsMember({"paper-text", "conventional"}))
      ->capture_default_str();
  weyl->add_option("--precision", weyl_args.precision)->capture_default_str();
  weyl->add_option("--format", weyl_args.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  weyl->add_option("--out", weyl_args.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) {
      return cmd_spectrum(spectrum_args, out);
    }
    if (*count) {
      return cmd_count(count_args, out);
    }
    if (*coeff) {
      return cmd_coeff(coeff_args, out);
    }
    if (*converge) {
      return cmd_converge(converge_args, out);
    }
    if (*weyl) {
      return cmd_weyl(weyl_args, out);
    }
  } catch (const PrecisionUnattainable& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kohn::cli
