#include "btq/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "btq/error.hpp"

namespace btq {

namespace {

void write_value(std::ostream& os, const Json& j, int depth) {
  const std::string indent(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string closing(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << indent << Json(key).dump() << ": ";
        write_value(os, value, depth + 1);
      }
      os << '\n' << closing << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << ",\n";
        first = false;
        os << indent;
        write_value(os, value, depth + 1);
      }
      os << '\n' << closing << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      os << (std::isfinite(x) ? format_double(x) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

const char* status_of(const BSSolution& s) {
  return s.failure ? to_string(*s.failure).data() : "ok";
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_json(std::ostream& os, const Json& doc) {
  write_value(os, doc, 0);
  os << '\n';
}

std::string dump_json(const Json& doc) {
  std::ostringstream os;
  write_json(os, doc);
  return os.str();
}

Json to_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
      !j["im"].is_number()) {
    throw Error(ErrorKind::InvalidArgument, "expected a complex number {\"re\", \"im\"}");
  }
  return {j["re"].get<double>(), j["im"].get<double>()};
}

Json to_json(const Spectrum& spectrum) {
  Json values = Json::array();
  for (const auto& ev : spectrum.eigenvalues) values.push_back(to_json(ev));
  return Json{{"label", spectrum.label},
              {"k", spectrum.k},
              {"size", spectrum.eigenvalues.size()},
              {"eigenvalues", std::move(values)}};
}

Json to_json(const ActionResult& result) {
  return Json{{"value", to_json(result.value)},
              {"nodes_used", result.nodes_used},
              {"last_delta", result.last_delta},
              {"contour_radius", result.contour_radius},
              {"seed_steps", result.seed_steps}};
}

Json to_json(const BSSolution& s) {
  Json j{{"j", s.j},
         {"variant", std::string(to_string(s.variant))},
         {"lambda", to_json(s.lambda)},
         {"iterations", s.iterations},
         {"final_residual", s.final_residual},
         {"k", s.k},
         {"eps", s.eps},
         {"continuation_steps", s.continuation_steps},
         {"outside_window", s.outside_window},
         {"status", status_of(s)}};
  return j;
}

Json to_json(const std::vector<BSSolution>& solutions) {
  Json arr = Json::array();
  for (const auto& s : solutions) arr.push_back(to_json(s));
  return arr;
}

Json to_json(const ComparisonReport& report) {
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back(
        Json{{"exact", to_json(p.exact)}, {"approx", to_json(p.approx)}, {"distance", p.distance}});
  }
  Json exact = Json::array();
  for (const auto& ev : report.exact_spectrum) exact.push_back(to_json(ev));
  return Json{{"k", report.k},
              {"eps", report.eps},
              {"variant", std::string(to_string(report.variant))},
              {"window", report.window},
              {"max_error", report.max_error},
              {"mean_error", report.mean_error},
              {"exact_count_in_window", report.exact_count_in_window},
              {"bs_count_in_window", report.bs_count_in_window},
              {"pairs", std::move(pairs)},
              {"exact_spectrum", std::move(exact)},
              {"bs_solutions", to_json(report.bs_solutions)}};
}

Json to_json(const ConvergenceStudy& study) {
  Json table = Json::array();
  for (const auto& row : study.table) table.push_back(Json{{"k", row.k}, {"max_error", row.max_error}});
  return Json{{"table", std::move(table)}, {"slope", study.slope}};
}

ComparisonPoints comparison_points_from_json(const Json& doc) {
  const Json* data = &doc;
  if (doc.is_object() && doc.contains("data")) data = &doc["data"];
  if (!data->is_object() || !data->contains("exact_spectrum") ||
      !data->contains("bs_solutions") || !(*data)["exact_spectrum"].is_array() ||
      !(*data)["bs_solutions"].is_array()) {
    throw Error(ErrorKind::InvalidArgument,
                "plot input is not a compare report (needs data.exact_spectrum and data.bs_solutions)");
  }
  ComparisonPoints points;
  for (const auto& ev : (*data)["exact_spectrum"]) points.exact.push_back(complex_from_json(ev));
  for (const auto& s : (*data)["bs_solutions"]) {
    if (s.value("status", std::string("ok")) != "ok") continue;
    if (!s.contains("lambda")) throw Error(ErrorKind::InvalidArgument, "bs solution without lambda");
    points.approx.push_back(complex_from_json(s["lambda"]));
  }
  points.k = data->value("k", 0);
  points.eps = data->value("eps", 0.0);
  points.variant = data->value("variant", std::string());
  return points;
}

void write_csv(std::ostream& os, const Spectrum& spectrum) {
  os << "index,re,im\n";
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    const auto& ev = spectrum.eigenvalues[i];
    os << i << ',' << format_double(ev.real()) << ',' << format_double(ev.imag()) << '\n';
  }
}

void write_csv(std::ostream& os, const ActionResult& r) {
  os << "re,im,nodes_used,last_delta,contour_radius\n"
     << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ','
     << r.nodes_used << ',' << format_double(r.last_delta) << ','
     << format_double(r.contour_radius) << '\n';
}

void write_csv(std::ostream& os, const std::vector<BSSolution>& solutions) {
  os << "j,variant,re,im,iterations,final_residual,status\n";
  for (const auto& s : solutions) {
    os << s.j << ',' << to_string(s.variant) << ',' << format_double(s.lambda.real()) << ','
       << format_double(s.lambda.imag()) << ',' << s.iterations << ','
       << format_double(s.final_residual) << ',' << status_of(s) << '\n';
  }
}

void write_csv(std::ostream& os, const ComparisonReport& report) {
  os << "exact_re,exact_im,approx_re,approx_im,distance\n";
  for (const auto& p : report.pairs) {
    os << format_double(p.exact.real()) << ',' << format_double(p.exact.imag()) << ','
       << format_double(p.approx.real()) << ',' << format_double(p.approx.imag()) << ','
       << format_double(p.distance) << '\n';
  }
}

void write_csv(std::ostream& os, const ConvergenceStudy& study) {
  os << "k,max_error\n";
  for (const auto& row : study.table) os << row.k << ',' << format_double(row.max_error) << '\n';
}

}  // namespace btq
