#pragma once

// JSON and CSV encodings of the pipeline results. Complex numbers are
// {"re": x, "im": y}; every double is written with 17 significant digits so
// that output is lossless and byte-stable.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "btq/action.hpp"
#include "btq/bs.hpp"
#include "btq/compare.hpp"
#include "btq/spectra.hpp"

namespace btq {

using Json = nlohmann::ordered_json;

/// Shortest form of %.17g; non-finite values become "null" in JSON.
std::string format_double(double x);

/// Pretty-prints `doc` with two-space indentation, doubles via format_double.
void write_json(std::ostream& os, const Json& doc);
std::string dump_json(const Json& doc);

Json to_json(cplx z);
cplx complex_from_json(const Json& j);

Json to_json(const Spectrum& spectrum);
Json to_json(const ActionResult& result);
Json to_json(const BSSolution& solution);
Json to_json(const std::vector<BSSolution>& solutions);
Json to_json(const ComparisonReport& report);
Json to_json(const ConvergenceStudy& study);

/// Points read back from the `data` payload of a compare document.
struct ComparisonPoints {
  std::vector<cplx> exact;
  std::vector<cplx> approx;
  int k = 0;
  double eps = 0.0;
  std::string variant;
};

/// Throws InvalidArgument when the document does not follow the compare schema.
ComparisonPoints comparison_points_from_json(const Json& doc);

// CSV writers: header row, ',' separator, '.' decimal point.
void write_csv(std::ostream& os, const Spectrum& spectrum);          // index,re,im
void write_csv(std::ostream& os, const ActionResult& result);        // re,im,nodes_used,last_delta,contour_radius
void write_csv(std::ostream& os, const std::vector<BSSolution>& s);  // j,variant,re,im,iterations,final_residual,status
void write_csv(std::ostream& os, const ComparisonReport& report);    // exact_re,exact_im,approx_re,approx_im,distance
void write_csv(std::ostream& os, const ConvergenceStudy& study);     // k,max_error

}  // namespace btq
