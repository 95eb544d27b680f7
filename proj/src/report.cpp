#include "gentrig/report.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace gentrig {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);  // "inf"/"-inf"/"nan" as strings
}

nlohmann::json json_field(const std::optional<double>& v) {
  if (!v) return nullptr;
  return json_number(*v);
}

}  // namespace

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::string out = "suite,p,q,r,x,value,margin,err_est,passed\n";
  for (const OutputRecord& rec : records) {
    out += rec.suite;
    out += ',';
    out += format_double(rec.p);
    out += ',';
    out += format_double(rec.q);
    out += ',';
    out += format_double(rec.r);
    out += ',';
    out += csv_field(rec.x);
    out += ',';
    out += csv_field(rec.value);
    out += ',';
    out += csv_field(rec.margin);
    out += ',';
    out += format_double(rec.err_est);
    out += ',';
    out += rec.passed ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string to_json_text(const std::vector<OutputRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const OutputRecord& rec : records) {
    arr.push_back({{"suite", rec.suite},
                   {"p", json_number(rec.p)},
                   {"q", json_number(rec.q)},
                   {"r", json_number(rec.r)},
                   {"x", json_field(rec.x)},
                   {"value", json_field(rec.value)},
                   {"margin", json_field(rec.margin)},
                   {"err_est", json_number(rec.err_est)},
                   {"passed", rec.passed}});
  }
  return arr.dump(1) + "\n";
}

std::vector<OutputRecord> to_records(const std::vector<MarginReport>& reports) {
  std::vector<OutputRecord> records;
  for (const MarginReport& rep : reports) {
    for (const MarginSample& s : rep.samples) {
      OutputRecord rec;
      rec.suite = rep.suite;
      rec.p = rep.p;
      rec.q = rep.q;
      rec.r = rep.r;
      rec.x = s.x;
      rec.margin = s.margin;
      rec.err_est = s.err_est;
      rec.passed = rep.passed;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace gentrig
