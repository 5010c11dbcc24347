#include "poncelet/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "poncelet/cayley.hpp"
#include "poncelet/error.hpp"
#include "poncelet/identities.hpp"
#include "poncelet/painleve.hpp"

namespace poncelet::cli {

using nlohmann::json;

namespace {

constexpr double kView = 3.0;
constexpr double kSvgSize = 600.0;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string fmt(Complex z) {
  if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z.real()))) return fmt(z.real());
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

double sx(double x) { return (x + kView) / (2 * kView) * kSvgSize; }
double sy(double y) { return (kView - y) / (2 * kView) * kSvgSize; }

std::string svg_open() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgSize << "\" height=\"" << kSvgSize
     << "\" viewBox=\"0 0 " << kSvgSize << ' ' << kSvgSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<line x1=\"" << sx(-kView) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(kView) << "\" y2=\"" << sy(0)
     << "\" stroke=\"#ccc\"/>\n"
     << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(-kView) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(kView)
     << "\" stroke=\"#ccc\"/>\n";
  return os.str();
}

bool is_real(const Point2& v) {
  return std::abs(v.x.imag()) < 1e-7 && std::abs(v.y.imag()) < 1e-7;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  f << text;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Center parse_center(const std::string& s) {
  try {
    return Center::parse(s);
  } catch (const Error& e) {
    throw UsageError(std::string("--center: ") + e.what());
  }
}

Rational parse_rational_flag(const std::string& flag, const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

}  // namespace

std::string classification_to_json(const PairClassification& c) {
  json roots = json::array();
  for (const auto& r : c.p_roots) {
    roots.push_back({{"p", r.value},
                     {"multiplicity", r.multiplicity},
                     {"interval", {poncelet::to_string(r.lo), poncelet::to_string(r.hi)}}});
  }
  const json j = {{"n", c.n},
                  {"center", {poncelet::to_string(c.center.x), poncelet::to_string(c.center.y)}},
                  {"region", c.region},
                  {"roots", roots},
                  {"count", c.count},
                  {"isoperiodic", c.isoperiodic}};
  return j.dump();
}

PairClassification classification_from_json(std::string_view text) {
  const json j = json::parse(text);
  PairClassification c;
  c.n = j.at("n").get<int>();
  c.center = {parse_rational(j.at("center").at(0).get<std::string>()),
              parse_rational(j.at("center").at(1).get<std::string>())};
  c.region = j.at("region").get<std::string>();
  for (const auto& r : j.at("roots")) {
    RealRoot root;
    root.value = r.at("p").get<double>();
    root.multiplicity = r.at("multiplicity").get<int>();
    if (r.contains("interval")) {
      root.lo = parse_rational(r["interval"].at(0).get<std::string>());
      root.hi = parse_rational(r["interval"].at(1).get<std::string>());
    }
    c.p_roots.push_back(root);
  }
  c.count = j.at("count").get<int>();
  c.isoperiodic = j.at("isoperiodic").get<bool>();
  return c;
}

std::string trace_to_json(const TraceResult& r) {
  json vertices = json::array();
  for (const auto& v : r.vertices) vertices.push_back({{"x", complex_json(v.x)}, {"y", complex_json(v.y)}});
  json params = json::array();
  for (const auto& t : r.tangency_params) params.push_back(complex_json(t));
  const json j = {{"steps", r.steps},
                  {"closed", r.closed},
                  {"closure_residual", r.closure_residual},
                  {"period", r.period},
                  {"max_line_residual", r.max_line_residual},
                  {"vertices", vertices},
                  {"tangency_params", params}};
  return j.dump();
}

TraceResult trace_from_json(std::string_view text) {
  const json j = json::parse(text);
  TraceResult r;
  r.steps = j.at("steps").get<int>();
  r.closed = j.at("closed").get<bool>();
  r.closure_residual = j.at("closure_residual").get<double>();
  r.period = j.at("period").get<int>();
  r.max_line_residual = j.at("max_line_residual").get<double>();
  for (const auto& v : j.at("vertices")) r.vertices.push_back({complex_from(v.at("x")), complex_from(v.at("y"))});
  for (const auto& t : j.at("tangency_params")) r.tangency_params.push_back(complex_from(t));
  return r;
}

ContourSet marching_squares(const std::function<double(double, double)>& f, int grid) {
  if (grid < 2) throw Error(ErrorCode::Parse, "grid must be at least 2");
  const double h = 2 * kView / grid;
  const auto coord = [&](int i) { return -kView + h * i; };
  std::vector<std::vector<double>> v(static_cast<std::size_t>(grid + 1), std::vector<double>(static_cast<std::size_t>(grid + 1)));
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f(coord(i), coord(j));
  }
  const auto at = [&](int i, int j) { return v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  const auto crosses = [](double a, double b) { return (a <= 0 && b > 0) || (a > 0 && b <= 0); };
  // Crossing on the edge from lattice node (i0, j0) to (i1, j1).
  const auto cross = [&](int i0, int j0, int i1, int j1) {
    const double a = at(i0, j0), b = at(i1, j1);
    const double s = a / (a - b);
    return std::pair<double, double>{coord(i0) + s * (coord(i1) - coord(i0)), coord(j0) + s * (coord(j1) - coord(j0))};
  };

  ContourSet out;
  for (int j = 0; j <= grid; ++j) {
    for (int i = 0; i < grid; ++i) {
      if (crosses(at(i, j), at(i + 1, j))) out.points.push_back(cross(i, j, i + 1, j));
    }
  }
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      if (crosses(at(i, j), at(i, j + 1))) out.points.push_back(cross(i, j, i, j + 1));
    }
  }

  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      // Edges in cyclic order: bottom, right, top, left.
      const int corners[4][2] = {{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}};
      std::vector<std::pair<double, double>> hits;
      for (int e = 0; e < 4; ++e) {
        const auto& a = corners[e];
        const auto& b = corners[(e + 1) % 4];
        if (crosses(at(a[0], a[1]), at(b[0], b[1]))) hits.push_back(cross(a[0], a[1], b[0], b[1]));
      }
      if (hits.size() == 2) {
        out.segments.push_back({hits[0].first, hits[0].second, hits[1].first, hits[1].second});
      } else if (hits.size() == 4) {
        const double centre = f(coord(i) + h / 2, coord(j) + h / 2);
        const bool pair01 = (centre > 0) == (at(i, j) > 0);
        const std::size_t a = pair01 ? 1 : 0;
        out.segments.push_back({hits[a].first, hits[a].second, hits[a + 1].first, hits[a + 1].second});
        const std::size_t b = pair01 ? 3 : 2;
        const std::size_t c = (b + 1) % 4;
        out.segments.push_back({hits[b].first, hits[b].second, hits[c].first, hits[c].second});
      }
    }
  }
  return out;
}

std::string trace_svg(const Circle& circle, const Parabola& par, const TraceResult& r) {
  std::ostringstream os;
  os << svg_open();
  const double scale = kSvgSize / (2 * kView);
  os << "<circle cx=\"" << sx(circle.cx.real()) << "\" cy=\"" << sy(circle.cy.real()) << "\" r=\"" << scale
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
  for (int k = 0; k < 400; ++k) {
    const double y = -4.0 + 8.0 * k / 399.0;
    const double x = (y * y - par.p * par.p) / (2 * par.p);
    os << sx(x) << ',' << sy(y) << ' ';
  }
  os << "\"/>\n";
  const bool real = std::all_of(r.vertices.begin(), r.vertices.end(), is_real);
  if (real) {
    os << "<polyline fill=\"none\" stroke=\"crimson\" points=\"";
    for (const auto& v : r.vertices) os << sx(v.x.real()) << ',' << sy(v.y.real()) << ' ';
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string contour_svg(const ContourSet& c) {
  std::ostringstream os;
  os << svg_open();
  os << "<g stroke=\"crimson\" stroke-width=\"1\">\n";
  for (const auto& s : c.segments) {
    os << "<line x1=\"" << sx(s.x0) << "\" y1=\"" << sy(s.y0) << "\" x2=\"" << sx(s.x1) << "\" y2=\"" << sy(s.y1)
       << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("poncelet");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poncelet pairs of a circle and confocal parabolas"};
  app.require_subcommand(1);

  int n = 0;
  std::string p_text, center_text, format, output, start_text = "0.3", start_im_text = "0";
  std::vector<std::string> p_list;
  int grid = 512;
  int family = 3;

  auto* cayley = app.add_subcommand("cayley", "Print the canonical n-Poncelet locus");
  cayley->add_option("--n", n, "Period, 3..12")->required();
  cayley->add_option("--p", p_text, "Fix p (rational)");
  cayley->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "Real parabolas forming an n-pair with the circle");
  classify->add_option("--n", n, "Period, 3..7")->required();
  classify->add_option("--center", center_text, "Circle centre X,Y")->required();

  auto* iso = app.add_subcommand("isoperiodic", "Period for which every parabola works");
  iso->add_option("--center", center_text, "Circle centre X,Y")->required();

  auto* trace = app.add_subcommand("trace", "Trace a Poncelet polygon numerically");
  trace->add_option("--center", center_text, "Circle centre X,Y")->required();
  trace->add_option("--p", p_text, "Parabola parameter")->required();
  trace->add_option("--n", n, "Number of steps")->required();
  trace->add_option("--start", start_text, "Real part of the starting tangent parameter");
  trace->add_option("--start-im", start_im_text, "Imaginary part of the starting tangent parameter");
  trace->add_option("--svg", output, "Also write an SVG drawing to this file");

  auto* locus_cmd = app.add_subcommand("locus", "Rasterize the locus at fixed p");
  locus_cmd->add_option("--n", n, "Period, 3..12")->required();
  locus_cmd->add_option("--p", p_text, "Parabola parameter")->required();
  locus_cmd->add_option("--grid", grid, "Lattice resolution")->check(CLI::Range(2, 8192));
  locus_cmd->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

  auto* painleve = app.add_subcommand("painleve", "Algebraic Painleve VI solutions");
  painleve->add_option("--family", family, "3 or 4")->required()->check(CLI::IsMember({3, 4}));
  painleve->add_option("--p", p_list, "Parameter values")->required();
  painleve->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify-identities", "Check every golden polynomial identity");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cayley) {
      if (n < 3 || n > kMaxLocusN) throw UsageError("--n must be in 3..12");
      const LocusPolynomial& loc = locus(n);
      LaurentPoly3 poly = loc.canonical;
      if (!p_text.empty()) {
        const Rational p = parse_rational_flag("--p", p_text);
        if (p == 0) throw UsageError("--p must be nonzero");
        poly = locus_at_p(n, p);
      }
      if (format == "json") {
        out << json{{"n", n}, {"divisors_removed", loc.divisors_removed}, {"canonical", poly.to_string()}}.dump()
            << '\n';
      } else {
        out << poly.to_string() << '\n';
      }
      return kOk;
    }

    if (*classify) {
      if (n < 3 || n > 7) throw UsageError("--n must be in 3..7");
      out << classification_to_json(pair_classify(n, parse_center(center_text))) << '\n';
      return kOk;
    }

    if (*iso) {
      const Center e = parse_center(center_text);
      const auto k = isoperiodic_n(e);
      out << json{{"center", {poncelet::to_string(e.x), poncelet::to_string(e.y)}},
                  {"n", k ? json(*k) : json(nullptr)}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (*trace) {
      if (n < 1) throw UsageError("--n must be positive");
      const Center e = parse_center(center_text);
      const double p = to_double(parse_rational_flag("--p", p_text));
      if (p == 0) throw UsageError("--p must be nonzero");
      const Complex start(to_double(parse_rational_flag("--start", start_text)),
                          to_double(parse_rational_flag("--start-im", start_im_text)));
      const Circle circle{to_double(e.x), to_double(e.y)};
      const Parabola par{p};
      const TraceResult r = poncelet_trace(circle, par, start, n);
      out << trace_to_json(r) << '\n';
      if (!output.empty()) write_file(output, trace_svg(circle, par, r));
      return kOk;
    }

    if (*locus_cmd) {
      if (n < 3 || n > kMaxLocusN) throw UsageError("--n must be in 3..12");
      const Rational p = parse_rational_flag("--p", p_text);
      if (p == 0) throw UsageError("--p must be nonzero");
      const LaurentPoly3 q = locus_at_p(n, p);
      const ContourSet c = marching_squares([&](double x, double y) { return q.evaluate(0.0, x, y); }, grid);
      if (format == "svg") {
        out << contour_svg(c);
      } else {
        out << "x,y\n";
        for (const auto& [x, y] : c.points) out << fmt(x) << ',' << fmt(y) << '\n';
      }
      return kOk;
    }

    if (*painleve) {
      std::vector<Complex> ps;
      for (const auto& s : p_list) ps.emplace_back(to_double(parse_rational_flag("--p", s)), 0.0);
      const FamilySample sample = sample_family(family == 3 ? Family::N3 : Family::N4, ps);
      if (format == "json") {
        json rows = json::array();
        for (const auto& pt : sample.points) {
          rows.push_back({{"p", complex_json(pt.p)},
                          {"x", complex_json(pt.x)},
                          {"y0", complex_json(pt.y0)},
                          {"y", complex_json(pt.y)},
                          {"residual_y0", pt.residual_y0},
                          {"residual_y", pt.residual_y},
                          {"relation_residual", pt.relation_residual}});
        }
        json failures = json::array();
        for (const auto& [p, msg] : sample.failures) failures.push_back({{"p", complex_json(p)}, {"error", msg}});
        out << json{{"family", family}, {"points", rows}, {"failures", failures}, {"max_residual", sample.max_residual}}
                   .dump()
            << '\n';
      } else {
        out << "p,x,y0,y,res0,res1,rel\n";
        for (const auto& pt : sample.points) {
          out << fmt(pt.p) << ',' << fmt(pt.x) << ',' << fmt(pt.y0) << ',' << fmt(pt.y) << ',' << fmt(pt.residual_y0)
              << ',' << fmt(pt.residual_y) << ',' << fmt(pt.relation_residual) << '\n';
        }
        for (const auto& [p, msg] : sample.failures) err << "p = " << fmt(p) << ": " << msg << '\n';
      }
      return sample.failures.empty() ? kOk : kFailed;
    }

    if (*verify) {
      const auto results = golden_identities();
      bool all = true;
      json rows = json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        if (format == "json") {
          rows.push_back({{"group", r.group}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
          out << (r.pass ? "PASS " : "FAIL ") << r.group << ": " << r.name;
          if (!r.detail.empty()) out << " (" << r.detail << ')';
          out << '\n';
        }
      }
      if (format == "json") out << json{{"all_pass", all}, {"identities", rows}}.dump() << '\n';
      return all ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace poncelet::cli
