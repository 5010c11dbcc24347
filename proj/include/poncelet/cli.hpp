#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/classify.hpp"
#include "poncelet/geometry.hpp"

namespace poncelet::cli {

/// Exit codes of run().
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Dispatches one subcommand: cayley, classify, isoperiodic, trace, locus,
/// painleve, verify-identities.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string classification_to_json(const PairClassification& c);
PairClassification classification_from_json(std::string_view text);

std::string trace_to_json(const TraceResult& r);
TraceResult trace_from_json(std::string_view text);

struct Segment {
  double x0, y0, x1, y1;
};

/// Zero set of f on a grid x grid lattice over [-3, 3]^2: the sign-change
/// points on lattice edges, and the marching-squares segments joining them.
struct ContourSet {
  std::vector<std::pair<double, double>> points;
  std::vector<Segment> segments;
};

ContourSet marching_squares(const std::function<double(double, double)>& f, int grid);

std::string trace_svg(const Circle& circle, const Parabola& par, const TraceResult& r);
std::string contour_svg(const ContourSet& c);

}  // namespace poncelet::cli
