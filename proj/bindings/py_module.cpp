// Python bindings: the normalizer, rule-fire tracing, rule-pack export,
// and the data-table evaluator.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ltnorm/eval.hpp"
#include "ltnorm/rule_engine.hpp"
#include "ltnorm/rulepack_lt.hpp"
#include "ltnorm/tags.hpp"

namespace py = pybind11;

namespace {

ltnorm::RulePack resolve_pack(const std::string& rules) {
  if (auto profile = ltnorm::profile_from_name(rules))
    return ltnorm::build_rulepack(*profile);
  return ltnorm::load_rulepack_file(rules, ltnorm::Profile::DelFlf);
}

class Normalizer {
 public:
  explicit Normalizer(const std::string& rules) : pack_(resolve_pack(rules)) {}

  std::string normalize(const std::string& text) const {
    return ltnorm::restore_guillemets(
        ltnorm::apply_cascade(pack_, ltnorm::escape_guillemets(text)));
  }

  py::list trace(const std::string& text) const {
    ltnorm::TraceResult traced =
        ltnorm::trace_cascade(pack_, ltnorm::escape_guillemets(text));
    py::list steps;
    for (const auto& step : traced.trace.steps) {
      py::dict d;
      d["rule"] = step.rule_id;
      d["count"] = step.match_count;
      d["before"] = ltnorm::restore_guillemets(step.before);
      d["after"] = ltnorm::restore_guillemets(step.after);
      steps.append(d);
    }
    return steps;
  }

  py::dict evaluate_table(const std::string& path) const {
    auto entries = ltnorm::load_data_table_file(path);
    ltnorm::EvalReport report = ltnorm::evaluate(pack_, entries);
    py::dict out;
    out["total_nsw"] = report.total_nsw;
    out["total_errors"] = report.total_errors;
    out["total_pct"] = report.total_pct;
    py::dict per_class;
    for (const auto& s : report.per_class) {
      py::dict row;
      row["total"] = s.total;
      row["errors"] = s.errors;
      row["pct_of_class"] = s.pct_of_class;
      row["pct_of_all_errors"] = s.pct_of_all_errors;
      per_class[py::str(ltnorm::semiotic_class_name(s.cls))] = row;
    }
    out["per_class"] = per_class;
    out["report"] = ltnorm::render_report(report);
    return out;
  }

  std::size_t rule_count() const { return pack_.rules.size(); }

 private:
  ltnorm::RulePack pack_;
};

}  // namespace

PYBIND11_MODULE(_ltnorm, m) {
  m.doc() = "Lithuanian text normalization for speech synthesis front ends";

  py::class_<Normalizer>(m, "Normalizer")
      .def(py::init<const std::string&>(), py::arg("rules") = "del_flf",
           "Create a normalizer from a builtin profile name (del_flf, nav) "
           "or a rule-file path.")
      .def("normalize", &Normalizer::normalize, py::arg("text"))
      .def("trace", &Normalizer::trace, py::arg("text"))
      .def("evaluate_table", &Normalizer::evaluate_table, py::arg("path"))
      .def_property_readonly("rule_count", &Normalizer::rule_count);

  m.def(
      "normalize",
      [](const std::string& text, const std::string& rules) {
        return Normalizer(rules).normalize(text);
      },
      py::arg("text"), py::arg("rules") = "del_flf");

  m.def(
      "emit_rules",
      [](const std::string& profile) {
        auto p = ltnorm::profile_from_name(profile);
        if (!p) throw std::invalid_argument("unknown profile: " + profile);
        return ltnorm::emit_rulepack(ltnorm::build_rulepack(*p));
      },
      py::arg("profile") = "del_flf");

  m.def("profiles", [] {
    return std::vector<std::string>{"del_flf", "nav"};
  });
}
