#include "kohn/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kohn::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return v;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

void expect_header(std::istream& is, const std::string& header) {
  std::string line;
  if (!std::getline(is, line) || line != header) {
    throw std::invalid_argument("expected CSV header '" + header + "'");
  }
}

// Significant digits in a decimal literal, floored at the minimum precision.
PrecisionSpec precision_of_literal(const std::string& text) {
  unsigned digits = 0;
  for (char ch : text) {
    if (ch == 'e' || ch == 'E') {
      break;
    }
    if (ch >= '0' && ch <= '9') {
      ++digits;
    }
  }
  return PrecisionSpec(std::max(digits, PrecisionSpec::kMinDigits));
}

std::uint64_t parse_u64(const std::string& text) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an unsigned integer: '" + text + "'");
  }
  return v;
}

json integer_to_json(const Integer& z) {
  if (z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, z.get_mpz_t());
    return v;
  }
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_unsigned()) {
    return Integer(std::to_string(j.get<std::uint64_t>()));
  }
  if (j.is_number_integer()) {
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  return Integer(j.get<std::string>());
}

}  // namespace

void write_spectrum_csv(std::ostream& os, std::span<const SpectrumEntry> table) {
  os << "eigenvalue,multiplicity,cumulative\n";
  Integer cumulative = 0;
  for (const auto& e : table) {
    cumulative += e.multiplicity;
    os << e.eigenvalue << ',' << e.multiplicity.get_str() << ',' << cumulative.get_str() << '\n';
  }
}

std::vector<SpectrumEntry> read_spectrum_csv(std::istream& is) {
  expect_header(is, "eigenvalue,multiplicity,cumulative");
  std::vector<SpectrumEntry> table;
  Integer cumulative = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 3) {
      throw std::invalid_argument("spectrum CSV row must have 3 fields: '" + line + "'");
    }
    SpectrumEntry e{parse_u64(f[0]), Integer(f[1])};
    cumulative += e.multiplicity;
    if (cumulative != Integer(f[2])) {
      throw std::invalid_argument("spectrum CSV cumulative column is inconsistent at '" + line + "'");
    }
    table.push_back(std::move(e));
  }
  return table;
}

json spectrum_to_json(std::span<const SpectrumEntry> table) {
  json rows = json::array();
  Integer cumulative = 0;
  for (const auto& e : table) {
    cumulative += e.multiplicity;
    rows.push_back({{"eigenvalue", e.eigenvalue},
                    {"multiplicity", integer_to_json(e.multiplicity)},
                    {"cumulative", integer_to_json(cumulative)}});
  }
  return rows;
}

std::vector<SpectrumEntry> spectrum_from_json(const json& j) {
  std::vector<SpectrumEntry> table;
  for (const auto& row : j) {
    table.push_back(SpectrumEntry{row.at("eigenvalue").get<std::uint64_t>(), integer_from_json(row.at("multiplicity"))});
  }
  return table;
}

json to_json(const CoefficientReport& r) {
  json j;
  j["n"] = r.n;
  j["convention"] = std::string(to_string(r.convention));
  j["method"] = std::string(to_string(r.method));
  j["exact"] = r.exact ? json(r.exact->to_string()) : json(nullptr);
  j["value"] = r.value.to_string();
  j["error_bound"] = r.error_bound;
  j["K"] = r.K ? json(*r.K) : json(nullptr);
  j["precision_digits"] = r.value.precision().decimal_digits();
  if (r.lambda) {
    j["lambda"] = *r.lambda;
  }
  return j;
}

CoefficientReport coefficient_report_from_json(const json& j) {
  CoefficientReport r;
  r.n = j.at("n").get<int>();
  r.convention = parse_convention(j.at("convention").get<std::string>());
  r.method = parse_method(j.at("method").get<std::string>());
  if (!j.at("exact").is_null()) {
    r.exact = PiPolynomial::parse(j.at("exact").get<std::string>());
  }
  const PrecisionSpec prec(j.value("precision_digits", PrecisionSpec::kDefaultDigits));
  r.value = BigFloat::parse(j.at("value").get<std::string>(), prec);
  r.error_bound = j.at("error_bound").get<double>();
  if (!j.at("K").is_null()) {
    r.K = j.at("K").get<std::uint64_t>();
  }
  if (j.contains("lambda")) {
    r.lambda = j.at("lambda").get<double>();
  }
  return r;
}

void write_coefficient_csv(std::ostream& os, std::span<const CoefficientReport> reports) {
  os << "n,convention,method,exact,value,error_bound,K\n";
  for (const auto& r : reports) {
    os << r.n << ',' << to_string(r.convention) << ',' << to_string(r.method) << ','
       << (r.exact ? r.exact->to_string() : "") << ',' << r.value.to_string() << ','
       << format_double(r.error_bound) << ',' << (r.K ? std::to_string(*r.K) : "") << '\n';
  }
}

std::vector<CoefficientReport> read_coefficient_csv(std::istream& is) {
  expect_header(is, "n,convention,method,exact,value,error_bound,K");
  std::vector<CoefficientReport> reports;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 7) {
      throw std::invalid_argument("coefficient CSV row must have 7 fields: '" + line + "'");
    }
    CoefficientReport r;
    r.n = static_cast<int>(parse_u64(f[0]));
    r.convention = parse_convention(f[1]);
    r.method = parse_method(f[2]);
    if (!f[3].empty()) {
      r.exact = PiPolynomial::parse(f[3]);
    }
    r.value = BigFloat::parse(f[4], precision_of_literal(f[4]));
    r.error_bound = parse_double(f[5]);
    if (!f[6].empty()) {
      r.K = parse_u64(f[6]);
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

bool same_report(const CoefficientReport& a, const CoefficientReport& b) {
  const unsigned digits = std::min(a.value.precision().decimal_digits(), b.value.precision().decimal_digits());
  return a.n == b.n && a.convention == b.convention && a.method == b.method && a.exact == b.exact &&
         a.value.to_string(digits) == b.value.to_string(digits) && a.error_bound == b.error_bound && a.K == b.K;
}

void write_remainder_csv(std::ostream& os, const RemainderProfile& profile) {
  os << "lambda,count,residual,normalized\n";
  for (const auto& s : profile.samples) {
    os << format_double(s.lambda) << ',' << s.count.get_str() << ',' << s.residual.to_string() << ','
       << format_double(s.normalized) << '\n';
  }
}

RemainderProfile read_remainder_csv(std::istream& is, PrecisionSpec prec) {
  expect_header(is, "lambda,count,residual,normalized");
  RemainderProfile profile;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 4) {
      throw std::invalid_argument("remainder CSV row must have 4 fields: '" + line + "'");
    }
    profile.samples.push_back(
        RemainderSample{parse_double(f[0]), Integer(f[1]), BigFloat::parse(f[2], prec), parse_double(f[3])});
  }
  for (std::size_t i = profile.samples.size() / 2; i < profile.samples.size(); ++i) {
    profile.fitted_C = std::max(profile.fitted_C, std::fabs(profile.samples[i].normalized));
  }
  return profile;
}

json to_json(const RemainderProfile& profile) {
  json samples = json::array();
  for (const auto& s : profile.samples) {
    samples.push_back({{"lambda", s.lambda},
                       {"count", integer_to_json(s.count)},
                       {"residual", s.residual.to_string()},
                       {"normalized", s.normalized}});
  }
  return json{{"fitted_C", profile.fitted_C}, {"samples", samples}};
}

}  // namespace kohn::io
