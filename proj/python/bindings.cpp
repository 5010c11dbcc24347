#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "poncelet/cayley.hpp"
#include "poncelet/classify.hpp"
#include "poncelet/error.hpp"
#include "poncelet/geometry.hpp"
#include "poncelet/identities.hpp"
#include "poncelet/painleve.hpp"

namespace py = pybind11;
using namespace poncelet;

namespace {

py::dict roots_dict(const RootList& roots) {
  py::list out;
  for (const auto& r : roots) {
    py::dict d;
    d["p"] = r.value;
    d["multiplicity"] = r.multiplicity;
    d["interval"] = py::make_tuple(to_string(r.lo), to_string(r.hi));
    out.append(d);
  }
  py::dict d;
  d["roots"] = out;
  return d;
}

std::string locus_text(int n, std::optional<std::string> p) {
  if (p) return locus_at_p(n, parse_rational(*p)).to_string();
  return locus(n).canonical.to_string();
}

py::dict classify(int n, const std::string& center) {
  const auto c = pair_classify(n, Center::parse(center));
  py::dict d = roots_dict(c.p_roots);
  d["n"] = c.n;
  d["region"] = c.region;
  d["count"] = c.count;
  d["isoperiodic"] = c.isoperiodic;
  return d;
}

py::dict trace(double cx, double cy, double p, int n, std::complex<double> start) {
  const auto r = poncelet_trace(Circle{cx, cy}, Parabola{p}, start, n);
  py::list verts;
  for (const auto& v : r.vertices) verts.append(py::make_tuple(v.x, v.y));
  py::dict d;
  d["vertices"] = verts;
  d["tangency_params"] = r.tangency_params;
  d["closure_residual"] = r.closure_residual;
  d["closed"] = r.closed;
  d["period"] = r.period;
  return d;
}

py::dict painleve(int family, std::complex<double> p) {
  if (family != 3 && family != 4) throw Error(ErrorCode::UnsupportedN, "family must be 3 or 4");
  const auto s = solution(family == 3 ? Family::N3 : Family::N4, p);
  py::dict d;
  d["x"] = s.x;
  d["y0"] = s.y0;
  d["y"] = s.y;
  d["residual_y0"] = s.residual_y0;
  d["residual_y"] = s.residual_y;
  d["relation_residual"] = s.relation_residual;
  return d;
}

py::list verify_identities() {
  py::list out;
  for (const auto& r : golden_identities()) {
    py::dict d;
    d["group"] = r.group;
    d["name"] = r.name;
    d["pass"] = r.pass;
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

std::string quartic_shape(const std::vector<std::string>& descending) {
  if (descending.size() != 5) throw Error(ErrorCode::NotQuartic, "expected five coefficients");
  std::vector<Rational> c;
  for (const auto& s : descending) c.push_back(parse_rational(s));
  return std::string(to_string(rees_classify(c[0], c[1], c[2], c[3], c[4]).tag));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Poncelet circle-parabola pairs";
  py::register_exception<Error>(m, "PonceletError", PyExc_ValueError);
  m.def("locus", &locus_text, py::arg("n"), py::arg("p") = std::nullopt);
  m.def("classify", &classify, py::arg("n"), py::arg("center"));
  m.def("isoperiodic", [](const std::string& center) { return isoperiodic_n(Center::parse(center)); });
  m.def("unique_p_for_4", [](const std::string& center) { return to_string(unique_p_for_4(Center::parse(center))); });
  m.def("quartic_shape", &quartic_shape, py::arg("coefficients"));
  m.def("trace", &trace, py::arg("cx"), py::arg("cy"), py::arg("p"), py::arg("n"),
        py::arg("start") = std::complex<double>(0.3, 0));
  m.def("closes_after", [](double cx, double cy, double p, int n) {
    return closes_after(Circle{cx, cy}, Parabola{p}, n);
  });
  m.def("painleve", &painleve, py::arg("family"), py::arg("p"));
  m.def("verify_identities", &verify_identities);
}
