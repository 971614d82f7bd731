#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sonc/circuit.hpp"
#include "sonc/covers.hpp"
#include "sonc/dualphos.hpp"
#include "sonc/error.hpp"
#include "sonc/experiment.hpp"
#include "sonc/sampling.hpp"
#include "sonc/selftest.hpp"

namespace py = pybind11;
using namespace sonc;

namespace {

SamplePlan make_plan(std::uint64_t n, std::uint64_t seed, double box, unsigned threads) {
  SamplePlan p;
  p.target = n;
  p.seed = seed;
  p.box = box;
  p.threads = threads;
  p.validate();
  return p;
}

struct CoverHits {
  std::uint64_t n = 0;
  std::uint64_t raw_draws = 0;
  double union_ratio = 0.0;
  std::map<int, double> ratios;
  std::map<int, std::uint64_t> hits;
};

}  // namespace

PYBIND11_MODULE(_sonc_mono, m) {
  m.doc() = "Circuit-cover certificates for the dual phosphorylation network";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::enum_<SignCase>(m, "SignCase")
      .value("Case1Monostationary", SignCase::Case1Monostationary)
      .value("Case2Multistationary", SignCase::Case2Multistationary)
      .value("Case3AZeroBNegative", SignCase::Case3AZeroBNegative)
      .value("Case4APositiveBNegative", SignCase::Case4APositiveBNegative);

  py::class_<EtaPoint>(m, "Eta")
      .def(py::init([](const std::array<double, 8>& v) { return EtaPoint::from_array(v); }), py::arg("values"))
      .def_readonly("K1", &EtaPoint::K1)
      .def_readonly("K2", &EtaPoint::K2)
      .def_readonly("K3", &EtaPoint::K3)
      .def_readonly("K4", &EtaPoint::K4)
      .def_readonly("k3", &EtaPoint::k3)
      .def_readonly("k6", &EtaPoint::k6)
      .def_readonly("k9", &EtaPoint::k9)
      .def_readonly("k12", &EtaPoint::k12)
      .def("to_list", &EtaPoint::to_array)
      .def("__repr__", [](const EtaPoint& e) {
        return "Eta(" + py::repr(py::cast(e.to_array())).cast<std::string>() + ")";
      });

  m.def("reduce", [](const std::array<double, 12>& kappa) { return reduce(KappaVector(kappa)); },
        py::arg("kappa"), "Michaelis-Menten reduction of 12 rate constants.");
  m.def("swap", &swap_michaelis_menten, py::arg("eta"));
  m.def("ab_values", [](const EtaPoint& e) {
    const auto ab = ab_values(e);
    return std::make_pair(ab.a, ab.b);
  }, py::arg("eta"));
  m.def("classify", [](const EtaPoint& e) { return classify(e).tag; }, py::arg("eta"));
  m.def("hex_coefficients", [](const EtaPoint& e) {
    const auto h = hex_coefficients(e);
    return std::make_pair(h.coeffs, h.c_m);
  }, py::arg("eta"), "Ten support coefficients in canonical point order and c_m.");
  m.def("closed_form_bound", &closed_form_bound, py::arg("cover_id"), py::arg("eta"));
  m.def("theta_sum", [](int id, const EtaPoint& e) {
    return cover_theta_sum(cover_fixture(id), case4_coefficients(e).coeffs);
  }, py::arg("cover_id"), py::arg("eta"));
  m.def("certify", [](const EtaPoint& e) {
    const auto h = case4_coefficients(e);
    std::vector<int> ids;
    for (const auto& c : hexagon_covers()) {
      if (certifies(cover_theta_sum(c, h.coeffs), h.c_m)) ids.push_back(c.id());
    }
    return ids;
  }, py::arg("eta"), "Ids of the covers certifying a Case-4 point.");

  m.def("enumerate_covers", [] {
    const auto& hp = hexagon_points();
    auto covers = enumerate_pure_covers(hp.positive, hp.negative);
    label_covers(covers, CoverFixture::builtin());
    std::vector<std::pair<int, std::string>> out;
    for (const auto& c : covers) out.emplace_back(c.id(), canonical_key(c));
    return out;
  });
  m.def("cover_keys", [] { return CoverFixture::builtin().entries(); });

  m.def("sample_case4", [](std::uint64_t n, std::uint64_t seed, double box, unsigned threads) {
    py::gil_scoped_release release;
    std::vector<EtaPoint> out;
    for (const auto& s : sample_case4(make_plan(n, seed, box, threads)).samples) out.push_back(s.eta);
    return out;
  }, py::arg("n"), py::arg("seed") = 42, py::arg("box") = 1.0, py::arg("threads") = 1);

  py::class_<CoverHits>(m, "CoverHits")
      .def_readonly("n", &CoverHits::n)
      .def_readonly("raw_draws", &CoverHits::raw_draws)
      .def_readonly("union_ratio", &CoverHits::union_ratio)
      .def_readonly("ratios", &CoverHits::ratios)
      .def_readonly("hits", &CoverHits::hits);

  m.def("table1", [](std::uint64_t n, std::uint64_t seed, double box, unsigned threads) {
    py::gil_scoped_release release;
    const auto s = sample_case4(make_plan(n, seed, box, threads));
    const auto hm = evaluate_covers(s, threads);
    CoverHits out{hm.total(), s.raw_draws, hm.union_ratio(), {}, {}};
    for (int id : hm.cover_ids) {
      out.ratios[id] = hm.ratio(id);
      out.hits[id] = hm.count(id);
    }
    return out;
  }, py::arg("n") = 1000000, py::arg("seed") = 42, py::arg("box") = 1.0, py::arg("threads") = 1);

  m.def("selftest", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : run_selftest()) out.emplace_back(c.name, c.passed, c.detail);
    return out;
  });
}
