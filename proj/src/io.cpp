#include "dfrac/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace dfrac {

using nlohmann::json;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_grid_csv(std::ostream& os, const GridSeq& seq) {
  os << "offset,value\n";
  for (int n = 0; n <= seq.horizon(); ++n)
    os << n << ',' << format_number(seq[n]) << '\n';
}

GridSeq read_grid_csv(std::istream& is, GridFamily family, FracParams params) {
  params.validate();
  GridSeq seq{family, params, {}};
  std::string line;
  if (!std::getline(is, line) || line.rfind("offset,value", 0) != 0)
    throw std::invalid_argument("GridSeq CSV must start with header offset,value");
  int expected = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed GridSeq CSV row: " + line);
    const int offset = std::stoi(line.substr(0, comma));
    if (offset != expected++)
      throw std::invalid_argument("GridSeq CSV offsets must be 0,1,2,...");
    seq.values.push_back(std::stod(line.substr(comma + 1)));
  }
  if (seq.values.empty()) throw std::invalid_argument("GridSeq CSV has no rows");
  return seq;
}

namespace {

std::string family_name(GridFamily f) {
  return f == GridFamily::IntegerGrid ? "integer" : "shifted";
}

GridFamily family_from_name(const std::string& s) {
  if (s == "integer") return GridFamily::IntegerGrid;
  if (s == "shifted") return GridFamily::ShiftedGrid;
  throw std::invalid_argument("unknown grid family: " + s);
}

json point_to_json(const SweepPoint& p) {
  return json{{"nu", p.nu}, {"c", p.c}, {"n", p.n}, {"gap", p.gap}};
}

}  // namespace

std::string grid_to_json(const GridSeq& seq) {
  json j{{"family", family_name(seq.family)},
         {"a", seq.params.a},
         {"nu", seq.params.nu},
         {"values", seq.values}};
  return j.dump();
}

GridSeq grid_from_json(const std::string& text) {
  const json j = json::parse(text);
  GridSeq seq{family_from_name(j.at("family").get<std::string>()),
              {j.at("a").get<double>(), j.at("nu").get<double>()},
              j.at("values").get<std::vector<double>>()};
  seq.params.validate();
  if (seq.values.empty()) throw std::invalid_argument("GridSeq needs at least one value");
  return seq;
}

IvpSpec ivp_from_json(const std::string& text) {
  const json j = json::parse(text);
  FracParams params{j.at("a").get<double>(), j.at("nu").get<double>()};
  params.validate();
  const int horizon = j.at("horizon").get<int>();
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");

  const auto coeff_seq = [&](const char* key) {
    const json& v = j.at(key);
    GridSeq seq{GridFamily::ShiftedGrid, params, {}};
    if (v.is_number()) {
      seq.values.assign(static_cast<std::size_t>(std::max(horizon, 1)),
                        v.get<double>());
    } else {
      seq.values = v.get<std::vector<double>>();
    }
    return seq;
  };
  IvpSpec spec{params, j.at("x0").get<double>(), coeff_seq("y"), coeff_seq("z"),
               horizon};
  spec.validate();
  return spec;
}

std::string sweep_report_to_json(const SweepReport& report) {
  json j;
  j["nu_axis"] = report.nu_axis;
  j["c_axis"] = report.c_axis;
  j["n_max"] = report.n_max;
  j["tolerance"] = report.tolerance;
  j["min_gap"] = report.min_gap;
  j["argmin"] = point_to_json(report.argmin);
  j["violations"] = json::array();
  for (const auto& p : report.violations) j["violations"].push_back(point_to_json(p));
  j["exploration"] = json::array();
  for (const auto& p : report.exploration) j["exploration"].push_back(point_to_json(p));
  return j.dump(2);
}

void write_violations_csv(std::ostream& os, const SweepReport& report) {
  os << "nu,c,n,gap\n";
  for (const auto& p : report.violations)
    os << format_number(p.nu) << ',' << format_number(p.c) << ',' << p.n << ','
       << format_number(p.gap) << '\n';
}

}  // namespace dfrac
