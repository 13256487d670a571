#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "demchar/qsystem.hpp"
#include "demchar/steinberg.hpp"
#include "demchar/store.hpp"

namespace py = pybind11;
using namespace demchar;

namespace {

Weight to_weight(const std::vector<int32_t>& coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w[i] = coords[i];
  return w;
}

std::vector<int32_t> from_weight(const Weight& w) {
  return std::vector<int32_t>(w.c.begin(), w.c.end());
}

py::int_ to_py_int(const Coeff& c) {
  // arbitrary precision via the decimal string
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(c.str()));
}

py::list character_terms(const Character& ch) {
  py::list out;
  for (const auto& [w, c] : ch.sorted_terms())
    out.append(py::make_tuple(from_weight(w), 0, 1, to_py_int(c)));
  return out;
}

py::list affine_terms(const AffineCharacter& ch) {
  py::list out;
  for (const auto& [k, c] : ch.sorted_terms())
    out.append(
        py::make_tuple(from_weight(k.classical), k.delta.num(), k.delta.den(), to_py_int(c)));
  return out;
}

RootSystem build_rs(const std::string& type, int rank) {
  if (type.size() != 1) throw py::value_error("type must be a single letter A..G");
  return RootSystem::build(type[0], rank);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Demazure module characters for current algebras";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init(&build_rs), py::arg("type"), py::arg("rank"))
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("type", [](const RootSystem& rs) {
        return std::string(1, rs.type());
      })
      .def_property_readonly("num_positive_roots",
                             [](const RootSystem& rs) { return rs.positive_roots().size(); })
      .def_property_readonly("theta",
                             [](const RootSystem& rs) {
                               return std::vector<int32_t>(rs.theta().rc.begin(),
                                                           rs.theta().rc.end());
                             })
      .def_property_readonly("d",
                             [](const RootSystem& rs) {
                               return std::vector<int32_t>(rs.d().begin(), rs.d().end());
                             })
      .def("coweight_basis",
           [](const RootSystem& rs) {
             py::list out;
             for (const Weight& w : rs.coweight_basis()) out.append(from_weight(w));
             return out;
           })
      .def("w0_word", [](const RootSystem& rs) { return rs.w0_word(); })
      .def("is_dominant", [](const RootSystem& rs, const std::vector<int32_t>& lam) {
        return rs.is_dominant(to_weight(lam));
      });

  m.def(
      "demazure_character",
      [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam, bool graded) {
        if (graded) return affine_terms(demazure_character_graded(rs, ell, to_weight(lam)));
        return character_terms(demazure_character(rs, ell, to_weight(lam)));
      },
      py::arg("rs"), py::arg("ell"), py::arg("lam"), py::arg("graded") = false,
      "terms as (weight, delta_num, delta_den, coeff) tuples");

  m.def("demazure_dim",
        [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam) {
          return to_py_int(demazure_dim(rs, ell, to_weight(lam)));
        });

  m.def("irr_character", [](const RootSystem& rs, const std::vector<int32_t>& lam) {
    return character_terms(irr_character(rs, to_weight(lam)));
  });

  m.def("weyl_dim", [](const RootSystem& rs, const std::vector<int32_t>& lam) {
    return to_py_int(weyl_dim(rs, to_weight(lam)));
  });

  m.def("decompose_demazure",
        [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam) {
          py::list out;
          for (auto& [w, c] : decompose(rs, demazure_character(rs, ell, to_weight(lam))))
            out.append(py::make_tuple(from_weight(w), to_py_int(c)));
          return out;
        });

  m.def("tensor_mult", [](const RootSystem& rs, const std::vector<int32_t>& nu,
                          const std::vector<int32_t>& mu1, const std::vector<int32_t>& mu2) {
    return to_py_int(tensor_mult(rs, to_weight(nu), to_weight(mu1), to_weight(mu2)));
  });

  m.def("steinberg_split",
        [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam) {
          auto sp = steinberg_split(rs, ell, to_weight(lam));
          return py::make_tuple(from_weight(sp.mu), from_weight(sp.lambda0));
        });

  m.def("verify_factorization",
        [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam) {
          return verify_factorization(rs, ell, to_weight(lam));
        });

  m.def("key_valid", [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam,
                        const std::vector<int32_t>& mu) {
    return key_valid(rs, ell, to_weight(lam), to_weight(mu));
  });

  m.def(
      "key_search_brute",
      [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam,
         int bound) -> py::object {
        auto mu = key_search_brute(rs, ell, to_weight(lam), bound);
        if (!mu) return py::none();
        return py::cast(from_weight(*mu));
      },
      py::arg("rs"), py::arg("ell"), py::arg("lam"), py::arg("bound") = 3);

  m.def("key_construct",
        [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam) {
          return from_weight(key_construct(rs, ell, to_weight(lam)));
        });

  m.def("dominant_witness_exists",
        [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam,
           const std::vector<int32_t>& mu) {
          return dominant_witness(rs, ell, to_weight(lam), to_weight(mu)).has_value();
        });

  m.def(
      "verify_table",
      [](const std::string& path, const std::string& convention, int threads) {
        TableReport rep = verify_table(load_fixture(path), convention, threads);
        py::dict out;
        out["rows"] = rep.rows_total;
        out["failing_rows"] = rep.failing_rows;
        out["passing_convention"] =
            rep.passing_convention ? py::cast(*rep.passing_convention) : py::none();
        out["ok"] = rep.ok();
        return out;
      },
      py::arg("path"), py::arg("convention") = "bourbaki", py::arg("threads") = 1);

  m.def("minuscule", [](const RootSystem& rs, int i) { return minuscule(rs, i); });

  m.def("qsystem_identity", [](const RootSystem& rs, int64_t ell, int node,
                               const std::vector<int32_t>& lam) {
    return qsystem_identity(rs, ell, node, to_weight(lam));
  });

  m.def("classical_qsystem", [](const RootSystem& rs, int64_t ell, int node) {
    return classical_qsystem(rs, ell, node);
  });

  m.def("schur_compare",
        [](const RootSystem& rs, int64_t ell, int node, const std::vector<int32_t>& mu) {
          return schur_compare(rs, ell, node, to_weight(mu));
        });

  m.def("prime_certificate",
        [](const RootSystem& rs, int64_t ell, const std::vector<int32_t>& lam) {
          PrimeVerdict v = prime_certificate(rs, ell, to_weight(lam));
          py::dict out;
          out["prime"] = v.prime;
          out["splittings_examined"] = v.splittings_examined;
          out["candidates_examined"] = v.candidates_examined;
          out["candidate_budget"] = v.candidate_budget;
          if (!v.prime) {
            py::list f1, f2;
            for (auto& [w, c] : v.factor1_decomp)
              f1.append(py::make_tuple(from_weight(w), to_py_int(c)));
            for (auto& [w, c] : v.factor2_decomp)
              f2.append(py::make_tuple(from_weight(w), to_py_int(c)));
            out["factor1"] = f1;
            out["factor2"] = f2;
          }
          return out;
        });

  m.def("set_term_budget", &set_term_budget);
}
