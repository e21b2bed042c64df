#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xpoincare/check.hpp"
#include "xpoincare/errors.hpp"
#include "xpoincare/io.hpp"
#include "xpoincare/poincare.hpp"

namespace py = pybind11;
using namespace xpoincare;

namespace {

template <int N>
Eigen::Matrix<double, N, 1> field(const py::dict& d, const char* key) {
  if (!d.contains(key)) return Eigen::Matrix<double, N, 1>::Zero();
  const auto values = d[key].cast<std::vector<double>>();
  if (values.size() != static_cast<std::size_t>(N))
    throw py::value_error(std::string("field '") + key + "' must have " + std::to_string(N) + " entries");
  return Eigen::Map<const Eigen::Matrix<double, N, 1>>(values.data());
}

GroupParams to_params(const py::dict& d) {
  for (const auto& item : d) {
    const auto key = item.first.cast<std::string>();
    if (key != "alpha" && key != "a" && key != "omega" && key != "u" && key != "theta")
      throw py::value_error("unknown field '" + key + "'");
  }
  GroupParams g;
  g.alpha = d.contains("alpha") ? d["alpha"].cast<double>() : 0.0;
  g.a = field<4>(d, "a");
  g.xl = {OmegaVector(field<4>(d, "omega")), FourVelocity(field<3>(d, "u")), RotationVector(field<3>(d, "theta"))};
  return g;
}

template <typename V>
py::list to_list(const V& v) {
  py::list out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.append(v[i]);
  return out;
}

py::dict to_dict(const GroupParams& g) {
  py::dict d;
  d["alpha"] = g.alpha;
  d["a"] = to_list(g.a);
  d["omega"] = to_list(g.xl.omega.lower());
  d["u"] = to_list(g.xl.u.spatial());
  d["theta"] = to_list(g.xl.theta.vector());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Extended Poincare group: algebra, group law, O+ and Theta matrices";

  py::register_exception<DecompositionError>(m, "DecompositionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("generator_names", &io::generator_labels);
  m.def("structure_constants", [](bool both_orders) {
    std::vector<std::tuple<std::string, std::string, std::string, int>> rows;
    for (const auto& e : StructureConstants::extended_poincare().entries(!both_orders))
      rows.emplace_back(name(e.a), name(e.b), name(e.c), static_cast<int>(e.f.numerator()));
    return rows;
  }, py::arg("both_orders") = false);
  m.def("jacobi_max_violation", [] { return to_double(jacobi_check().max_violation); });
  m.def("commutator", [](const Vec15& x, const Vec15& y) { return commutator(x, y); });
  m.def("ad_matrix", [](const std::string& g) {
    const auto parsed = parse_generator(g);
    if (!parsed) throw py::value_error("unknown generator '" + g + "'");
    return ad_matrix(*parsed);
  });
  m.def("exp_ad", [](const Vec15& x, double t) { return exp_ad(x, t); }, py::arg("x"), py::arg("t") = 1.0);

  m.def("lorentz_matrix", [](const Vec3& u, const Vec3& theta) {
    return lorentz_matrix(FourVelocity(u), RotationVector(theta));
  });
  m.def("lorentz_decompose", [](const Mat4& l) {
    const LorentzParams p = lorentz_decompose(l);
    return py::make_tuple(to_list(p.u.spatial()), to_list(p.theta.vector()));
  });
  m.def("dirac_boost", [](const Vec4& omega) { return dirac_boost_mat5(OmegaVector(omega)); });
  m.def("xl_matrix", [](const py::dict& g) { return xl_matrix(to_params(g).xl); });
  m.def("xl_decompose", [](const Mat5& d) {
    GroupParams g;
    g.xl = xl_decompose(d);
    return to_dict(g);
  });

  m.def("compose", [](const py::dict& g2, const py::dict& g1) { return to_dict(compose(to_params(g2), to_params(g1))); });
  m.def("inverse", [](const py::dict& g) { return to_dict(inverse(to_params(g))); });
  m.def("affine_matrix", [](const py::dict& g) { return to_affine(to_params(g)).matrix(); });
  m.def("oplus", [](const py::dict& g) { return oplus(to_params(g)); });
  m.def("theta_numeric", [](const py::dict& g, double step) { return theta_numeric(to_params(g), step); },
        py::arg("g"), py::arg("step") = 1e-5);
  m.def("theta_closed", [](const py::dict& g) {
    const ThetaClosed t = theta_closed(to_params(g));
    return py::make_tuple(t.value, Eigen::Matrix<bool, 15, 15>(t.known));
  });

  m.def("check", [](const std::string& suite, std::size_t trials, std::uint64_t seed) {
    CheckOptions options;
    options.suite = suite;
    options.trials = trials;
    options.seed = seed;
    return run_check(options).to_json();
  }, py::arg("suite") = "all", py::arg("trials") = 1000, py::arg("seed") = 42);
}
