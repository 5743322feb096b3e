#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "appart/counting.hpp"
#include "appart/enumerate.hpp"
#include "appart/errors.hpp"
#include "appart/format.hpp"
#include "appart/separation.hpp"
#include "appart/verify.hpp"

namespace py = pybind11;
using namespace appart;

namespace {

py::int_ to_python(const BigInt &v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

EnumerationBudget make_budget(std::optional<std::uint64_t> max_nodes, bool truncate) {
  auto b = EnumerationBudget::from_environment();
  if (max_nodes)
    b.max_nodes = *max_nodes;
  b.on_exceed = truncate ? EnumerationBudget::OnExceed::truncate : EnumerationBudget::OnExceed::fail;
  return b;
}

PartitionType as_type(const py::object &t) {
  if (py::isinstance<PartitionType>(t))
    return t.cast<PartitionType>();
  return PartitionType::parse(t.cast<std::string>());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partitions of Z_n into arithmetic-progression blocks";

  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError",
                                                                PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  (void)precondition;

  py::class_<APBlock>(m, "APBlock")
      .def(py::init<int, int>(), py::arg("head"), py::arg("length"))
      .def_readonly("head", &APBlock::head)
      .def_readonly("length", &APBlock::length)
      .def("__eq__", [](const APBlock &a, const APBlock &b) { return a == b; })
      .def("__hash__", [](const APBlock &b) { return py::hash(py::make_tuple(b.head, b.length)); })
      .def("__repr__", [](const APBlock &b) {
        return "APBlock(" + std::to_string(b.head) + ", " + std::to_string(b.length) + ")";
      });

  py::class_<APPartition>(m, "APPartition")
      .def(py::init([](int n, int difference, const std::vector<std::pair<int, int>> &blocks) {
             std::vector<APBlock> bs;
             for (auto [h, l] : blocks)
               bs.push_back({h, l});
             return APPartition(n, difference, std::move(bs));
           }),
           py::arg("n"), py::arg("m"), py::arg("blocks"))
      .def_readonly("n", &APPartition::n)
      .def_readonly("m", &APPartition::difference)
      .def_property_readonly("blocks",
                             [](const APPartition &p) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto &b : p.blocks)
                                 out.emplace_back(b.head, b.length);
                               return out;
                             })
      .def("__eq__", [](const APPartition &a, const APPartition &b) { return a == b; })
      .def("__hash__", [](const APPartition &p) { return py::hash(py::str(to_text(p))); })
      .def("__repr__", [](const APPartition &p) { return "<APPartition " + to_text(p) + ">"; })
      .def("__str__", &to_text);

  py::class_<PartitionType>(m, "PartitionType")
      .def(py::init(&PartitionType::parse), py::arg("text"))
      .def_property_readonly("weight", &PartitionType::weight)
      .def_property_readonly("block_count", &PartitionType::block_count)
      .def_property_readonly("parts",
                             [](const PartitionType &t) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto &p : t.parts())
                                 out.emplace_back(p.size, p.multiplicity);
                               return out;
                             })
      .def("__eq__", [](const PartitionType &a, const PartitionType &b) { return a == b; })
      .def("__str__", &PartitionType::to_string)
      .def("__repr__", [](const PartitionType &t) { return "PartitionType('" + t.to_string() + "')"; });

  m.def("all_types", &all_types, py::arg("weight"));

  // core
  m.def("validate_partition", [](const APPartition &p) -> std::optional<std::string> {
    if (auto v = validate_partition(p))
      return v->message;
    return std::nullopt;
  }, "None when valid, otherwise a description of the violation.");
  m.def("type_of", &type_of);
  m.def("underlying_set", [](int head, int length, int n, int m_) {
    return underlying_set({head, length}, n, m_);
  }, py::arg("head"), py::arg("length"), py::arg("n"), py::arg("m"));
  m.def("block_from_set", &block_from_set, py::arg("s"), py::arg("n"), py::arg("m"));
  m.def("check_condition",
        [](const py::object &t, int m_, int m_prime) { return check_condition(as_type(t), m_, m_prime); },
        py::arg("type"), py::arg("m"), py::arg("m_prime"));

  // formats
  m.def("to_text", &to_text);
  m.def("to_json", &to_json);
  m.def("parse", [](const std::string &text, bool normalize) {
    auto r = parse_any(text, normalize);
    return py::make_tuple(r.partition, r.normalized);
  }, py::arg("text"), py::arg("normalize") = false,
        "Parse the text or JSON form; returns (partition, was_normalized).");

  // counting
  m.def("kaplansky", [](int n, int k) { return to_python(kaplansky(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("generalized_kaplansky",
        [](int n, int p, int k) { return to_python(generalized_kaplansky(n, p, k)); },
        py::arg("n"), py::arg("p"), py::arg("k"));
  m.def("msun_count", [](int n, int m_, int p, int k) { return to_python(msun_count(n, m_, p, k)); },
        py::arg("n"), py::arg("m"), py::arg("p"), py::arg("k"));
  m.def("cyclic_multinomial",
        [](int n, const py::object &t) { return to_python(cyclic_multinomial(n, as_type(t))); },
        py::arg("n"), py::arg("type"));

  // enumeration
  m.def("enumerate_ap_partitions",
        [](int n, int m_, const py::object &t, std::optional<std::uint64_t> max_nodes, bool truncate) {
          return enumerate_ap_partitions(n, m_, as_type(t), make_budget(max_nodes, truncate)).items;
        },
        py::arg("n"), py::arg("m"), py::arg("type"), py::arg("max_nodes") = py::none(),
        py::arg("truncate") = false);
  m.def("count_ap_partitions",
        [](int n, int m_, const py::object &t, std::optional<std::uint64_t> max_nodes) {
          return visit_ap_partitions(n, m_, as_type(t), make_budget(max_nodes, false),
                                     [](const APPartition &) {})
              .results;
        },
        py::arg("n"), py::arg("m"), py::arg("type"), py::arg("max_nodes") = py::none());
  m.def("enumerate_dissections",
        [](int n, const py::object &t, std::optional<std::uint64_t> max_nodes, bool truncate) {
          return enumerate_dissections(n, as_type(t), make_budget(max_nodes, truncate)).items;
        },
        py::arg("n"), py::arg("type"), py::arg("max_nodes") = py::none(), py::arg("truncate") = false);
  m.def("enumerate_spaced_subsets", &enumerate_spaced_subsets, py::arg("n"), py::arg("m"),
        py::arg("p"), py::arg("k"));
  m.def("subsets_to_partitions", &subsets_to_partitions, py::arg("n"), py::arg("m"), py::arg("p"),
        py::arg("heads"));

  // separation
  m.def("head_profiles", [](const APPartition &p) {
    py::list out;
    for (const auto &hp : head_profiles(p))
      out.append(py::make_tuple(hp.head, hp.is_singleton, hp.g));
    return out;
  }, "List of (head, is_singleton, g).");
  m.def("starting_points", &starting_points);
  m.def("separate",
        [](const APPartition &p, int m_prime, std::optional<int> start) {
          return start ? separate_from(p, m_prime, *start) : separate(p, m_prime);
        },
        py::arg("p"), py::arg("m_prime"), py::arg("start") = py::none());
  m.def("separation_trace", [](const APPartition &p, int m_prime) {
    SeparationTrace trace;
    separate(p, m_prime, &trace);
    return trace.to_string();
  }, py::arg("p"), py::arg("m_prime"));
  m.def("verify_roundtrip", &verify_roundtrip, py::arg("p"), py::arg("m_prime"));

  m.def("verify",
        [](const std::string &theorem, int n_max, int m_max, int m_prime_max, int p_max, int k_max,
           int jobs) {
          auto th = parse_theorem(theorem);
          if (!th)
            throw PreconditionError("unknown theorem '" + theorem + "'");
          SweepSpec spec;
          spec.n_range = {1, n_max};
          spec.type_weight_max = n_max;
          spec.m_range = {1, m_max};
          spec.m_prime_range = {1, m_prime_max};
          spec.p_range = {1, p_max};
          spec.k_range = {0, k_max};
          spec.jobs = jobs;
          spec.budget = EnumerationBudget::from_environment();
          py::gil_scoped_release release;
          auto report = run_sweep(*th, spec);
          return std::make_pair(report.all_pass(), report.to_json(false));
        },
        py::arg("theorem"), py::arg("n_max") = 10, py::arg("m_max") = 4, py::arg("m_prime_max") = 4,
        py::arg("p_max") = 3, py::arg("k_max") = 3, py::arg("jobs") = 1,
        "Run a verification sweep; returns (passed, json_report).");
}
