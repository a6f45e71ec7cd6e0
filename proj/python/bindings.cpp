#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>

#include "orbk/cohomology.hpp"
#include "orbk/commands.hpp"
#include "orbk/corpus.hpp"
#include "orbk/error.hpp"
#include "orbk/input.hpp"
#include "orbk/moduli.hpp"
#include "orbk/ring.hpp"
#include "orbk/sectors.hpp"
#include "orbk/suite.hpp"

namespace py = pybind11;
using namespace orbk;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

Rational rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::dict table_dict(const GradedDimensions& t) {
  py::dict d;
  for (const auto& [deg, n] : t.entries()) d[fraction(deg)] = n;
  return d;
}

// A closed group together with its inertia decomposition.
class Quotient {
 public:
  explicit Quotient(const std::string& text) {
    const auto spec = parse_input(text);
    if (!spec.is_matrix_group()) throw Error(ErrorCode::SemanticError, "expected a matrix_group input");
    input_ = spec.matrix_group();
    dec_ = std::make_unique<InertiaDecomposition>(inertia(close_group(input_), input_.geometry));
  }

  std::size_t order() const { return dec_->group().order(); }
  std::size_t class_count() const { return dec_->group().class_count(); }
  std::string geometry() const { return std::string(to_string(dec_->geometry())); }

  py::list sectors() const {
    py::list out;
    const auto& g = dec_->group();
    for (const auto& s : dec_->sectors()) {
      py::dict d;
      d["class_size"] = g.class_members(s.class_index).size();
      d["representative"] = format_word(g.word(g.class_representative(s.class_index)));
      d["iota"] = fraction(s.iota);
      d["fixed_dim"] = s.fixed_dim;
      d["inverse"] = s.inverse_sector;
      out.append(d);
    }
    return out;
  }

  py::dict poincare() const { return table_dict(orbifold_poincare_linear(*dec_)); }
  std::size_t euler() const { return orbifold_euler(*dec_); }

  py::object pairing(std::size_t a, std::size_t b) const { return fraction(pairing_ptG(dec_->group(), a, b)); }
  py::object threepoint(std::size_t a, std::size_t b, std::size_t c) const {
    return fraction(threepoint_ptG(dec_->group(), a, b, c));
  }
  py::object kpoint(const std::vector<std::size_t>& classes) const {
    return fraction(kpoint_constant_count(dec_->group(), SectorTuple{classes}));
  }

  // Product of two basis classes in the ring the geometry supports.
  py::dict product(std::size_t a, std::size_t b) const {
    const OrbClass p = dec_->geometry() == Geometry::point ? ring_table_ptG(dec_->group()).product(a, b)
                                                          : cup_product_abelian_linear(*dec_, a, b);
    py::dict d;
    for (const auto& [s, c] : p.coefficients()) d[py::int_(s)] = fraction(c);
    return d;
  }

  bool verify() const {
    for (const auto& r : verify_matrix_group("input", input_)) {
      if (!r.passed()) return false;
    }
    return true;
  }

 private:
  MatrixGroupInput input_;
  std::unique_ptr<InertiaDecomposition> dec_;
};

}  // namespace

PYBIND11_MODULE(_orbk, m) {
  m.doc() = "exact orbifold cohomology computations";

  static py::exception<Error> error(m, "OrbkError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Quotient>(m, "Quotient")
      .def(py::init<const std::string&>(), py::arg("text"))
      .def_property_readonly("order", &Quotient::order)
      .def_property_readonly("class_count", &Quotient::class_count)
      .def_property_readonly("geometry", &Quotient::geometry)
      .def("sectors", &Quotient::sectors)
      .def("poincare", &Quotient::poincare)
      .def("euler", &Quotient::euler)
      .def("pairing", &Quotient::pairing)
      .def("threepoint", &Quotient::threepoint)
      .def("kpoint", &Quotient::kpoint)
      .def("product", &Quotient::product)
      .def("verify", &Quotient::verify);

  m.def("wps_poincare", [](const std::vector<unsigned>& w) { return table_dict(orbifold_poincare_wps(WeightedProjectiveSpace(w))); });
  m.def("wps_euler", [](const std::vector<unsigned>& w) { return orbifold_euler(WeightedProjectiveSpace(w)); });

  m.def(
      "virtual_dimension",
      [](const py::handle& c1a, std::size_t dim, std::size_t genus, const py::list& iotas) {
        DimensionInput in;
        in.c1a = rational(c1a);
        in.complex_dim = dim;
        in.genus = genus;
        in.marks = iotas.size();
        for (const auto& x : iotas) in.iotas.push_back(rational(x));
        return fraction(virtual_dimension(in));
      },
      py::arg("c1a"), py::arg("dim"), py::arg("genus"), py::arg("iotas"));

  m.def("canonical_input", [](const std::string& text) { return serialize_input(parse_input(text)); });

  m.def(
      "run_command",
      [](const std::string& command, std::optional<std::string> text, const std::vector<std::size_t>& classes,
         std::optional<std::string> element, std::optional<std::string> c1a, std::optional<std::size_t> dim,
         std::optional<std::size_t> genus, std::optional<std::size_t> marks, const std::vector<std::string>& iotas,
         const std::vector<std::size_t>& axes, std::optional<std::size_t> order,
         std::optional<std::int64_t> character) {
        CommandOptions o;
        o.classes = classes;
        o.element = std::move(element);
        o.c1a = std::move(c1a);
        o.dim = dim;
        o.genus = genus;
        o.marks = marks;
        o.iotas = iotas;
        o.axes = axes;
        o.order = order;
        o.character = character;
        const auto r = run_command_on_text(command, text, o);
        return std::make_pair(r.output, r.exit_code);
      },
      py::arg("command"), py::arg("text") = py::none(), py::arg("classes") = std::vector<std::size_t>{},
      py::arg("element") = py::none(), py::arg("c1a") = py::none(), py::arg("dim") = py::none(),
      py::arg("genus") = py::none(), py::arg("marks") = py::none(), py::arg("iotas") = std::vector<std::string>{},
      py::arg("axes") = std::vector<std::size_t>{}, py::arg("order") = py::none(), py::arg("character") = py::none());
}
