#include <zmsp/serialize.hpp>

#include <zmsp/errors.hpp>

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace zmsp {

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "tsv") return OutputFormat::kTsv;
  if (name == "plain") return OutputFormat::kPlain;
  throw UsageError("unknown format '" + std::string(name) + "' (json|tsv|plain)");
}

Json to_json(const BigInt& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(value.get_str());
}

namespace {

std::vector<std::pair<BoundedPartition, BigInt>> sorted_records(const MonomialMap& expansion) {
  std::vector<std::pair<BoundedPartition, BigInt>> records;
  records.reserve(expansion.size());
  for (const auto& [e, c] : expansion.terms()) records.emplace_back(to_partition(e), c);
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return records;
}

std::string monomial_text(const BoundedPartition& lambda) {
  // x_lambda = x_{l_1} ... x_{l_L}, grouped into powers.
  std::string s;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(parts[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string export_expansion(const MonomialMap& expansion, OutputFormat format) {
  const auto records = sorted_records(expansion);
  switch (format) {
    case OutputFormat::kJson: {
      Json arr = Json::array();
      for (const auto& [lambda, c] : records) {
        arr.push_back(Json{{"lambda", lambda.to_string()}, {"coefficient", to_json(c)}});
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::kTsv: {
      std::string out = "lambda\tcoefficient\n";
      for (const auto& [lambda, c] : records) out += lambda.to_string() + "\t" + c.get_str() + "\n";
      return out;
    }
    case OutputFormat::kPlain: {
      std::string out;
      bool first = true;
      for (const auto& [lambda, c] : records) {
        const BigInt mag = abs(c);
        if (first) {
          if (c < 0) out += "-";
        } else {
          out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) out += mag.get_str() + "*";
        out += monomial_text(lambda);
      }
      return (first ? std::string("0") : out) + "\n";
    }
  }
  return {};
}

Json to_json(const VerificationReport& report, bool include_elapsed) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(Json{{"lambda", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
  }
  Json breakdown = Json::array();
  for (const auto& t : report.breakdown) {
    breakdown.push_back(Json{{"section", t.name}, {"instances", t.instances}, {"failures", t.failures}});
  }
  Json j{{"suite", report.suite},
         {"n", report.n},
         {"k", report.k},
         {"instances_checked", report.instances_checked},
         {"passed", report.passed()},
         {"failures", std::move(failures)},
         {"breakdown", std::move(breakdown)}};
  if (include_elapsed) j["elapsed_ms"] = report.elapsed.count();
  return j;
}

Json to_json(const ConjectureReport& report, bool include_elapsed) {
  Json zeros = Json::array();
  for (const auto& p : report.zero_coefficients) zeros.push_back(p.to_string());
  Json j{{"n", report.n},
         {"k", report.k},
         {"total", to_json(report.total)},
         {"zero_count", report.zero_coefficients.size()},
         {"zero_coefficients", std::move(zeros)},
         {"is_prime_power", report.is_prime_power},
         {"consistent_with_conjecture", report.consistent_with_conjecture}};
  if (include_elapsed) j["elapsed_ms"] = report.elapsed.count();
  return j;
}

std::string render(const VerificationReport& report, OutputFormat format, bool include_elapsed) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kJson:
      return to_json(report, include_elapsed).dump(2) + "\n";
    case OutputFormat::kTsv:
      out << "section\tinstances\tfailures\n";
      for (const auto& t : report.breakdown) out << t.name << '\t' << t.instances << '\t' << t.failures << '\n';
      for (const auto& f : report.failures) {
        out << "FAIL\t" << f.instance << '\t' << f.expected << '\t' << f.actual << '\n';
      }
      return out.str();
    case OutputFormat::kPlain:
      out << report.suite << " n=" << report.n << " k=" << report.k << ": "
          << (report.passed() ? "PASS" : "FAIL") << " (" << report.instances_checked
          << " instances, " << report.failures.size() << " failures";
      if (include_elapsed) out << ", " << report.elapsed.count() << " ms";
      out << ")\n";
      for (const auto& t : report.breakdown) {
        out << "  " << t.name << ": " << t.instances << " checked, " << t.failures << " failed\n";
      }
      for (const auto& f : report.failures) {
        out << "  FAIL " << f.instance << ": expected " << f.expected << ", got " << f.actual << '\n';
      }
      return out.str();
  }
  return {};
}

std::string render(const ConjectureReport& report, OutputFormat format, bool include_elapsed) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kJson:
      return to_json(report, include_elapsed).dump(2) + "\n";
    case OutputFormat::kTsv:
      out << "n\tk\ttotal\tzero_count\tis_prime_power\tconsistent\n"
          << report.n << '\t' << report.k << '\t' << report.total.get_str() << '\t'
          << report.zero_coefficients.size() << '\t' << report.is_prime_power << '\t'
          << report.consistent_with_conjecture << '\n';
      for (const auto& p : report.zero_coefficients) out << "zero\t" << p.to_string() << '\n';
      return out.str();
    case OutputFormat::kPlain:
      out << "n=" << report.n << " k=" << report.k << ": " << report.total.get_str()
          << " partitions with n | |lambda|, " << report.zero_coefficients.size()
          << " vanishing; n is " << (report.is_prime_power ? "" : "not ") << "a prime power; "
          << (report.consistent_with_conjecture ? "consistent" : "INCONSISTENT")
          << " with the prime-power conjecture\n";
      for (const auto& p : report.zero_coefficients) out << "  m_(" << p.to_string() << ") = 0\n";
      return out.str();
  }
  return {};
}

}  // namespace zmsp
