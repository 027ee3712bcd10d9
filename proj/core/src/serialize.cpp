#include "stablenorm/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "stablenorm/cfg.hpp"

namespace stablenorm {

using nlohmann::json;

namespace {

json ext_to_json(ExtNat v) {
  if (v.is_infinite()) {
    return "inf";
  }
  return v.value();
}

ExtNat ext_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") {
    return ExtNat::infinity();
  }
  if (j.is_number_unsigned()) {
    return ExtNat(j.get<std::uint64_t>());
  }
  throw ParseError("expected a natural number or \"inf\", got " + j.dump());
}

json form_json(const SemiArithmeticForm& form) {
  json preperiod = json::array();
  for (ExtNat v : form.preperiod()) {
    preperiod.push_back(ext_to_json(v));
  }
  json residues = json::array();
  for (const ResidueTail& t : form.tails()) {
    if (t.infinite) {
      residues.push_back({{"intercept", "inf"}, {"difference", 0}});
    } else {
      residues.push_back({{"intercept", t.intercept}, {"difference", t.difference}});
    }
  }
  std::optional<Rational> tau;
  if (form.uniform() && form.eventually_finite()) {
    tau = limit_tau(form);
  }
  return {{"preperiod", std::move(preperiod)},
          {"period", form.period()},
          {"residues", std::move(residues)},
          {"tau", tau_to_string(tau)},
          {"uniform", form.uniform()}};
}

SemiArithmeticForm form_from(const json& j) {
  try {
    std::vector<ExtNat> preperiod;
    for (const auto& v : j.at("preperiod")) {
      preperiod.push_back(ext_from_json(v));
    }
    std::vector<ResidueTail> tails;
    for (const auto& r : j.at("residues")) {
      const json& intercept = r.at("intercept");
      if (intercept.is_string()) {
        if (intercept.get<std::string>() != "inf") {
          throw ParseError("residue intercept must be an integer or \"inf\"");
        }
        tails.push_back(ResidueTail::infinity());
      } else {
        tails.push_back(ResidueTail::arithmetic(intercept.get<std::int64_t>(),
                                                r.at("difference").get<std::uint64_t>()));
      }
    }
    return SemiArithmeticForm(std::move(preperiod), j.at("period").get<std::size_t>(),
                              std::move(tails));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed form: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid form: ") + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string tau_to_string(const std::optional<Rational>& tau) {
  return tau ? tau->to_string() : "undetermined";
}

std::string form_to_json(const SemiArithmeticForm& form) { return form_json(form).dump(); }

SemiArithmeticForm form_from_json(std::string_view text) { return form_from(parse_json(text)); }

std::string semilinear_to_json(const SemilinearSet& s) {
  json components = json::array();
  for (const LinearSet& l : s.components()) {
    components.push_back({{"offset", l.offset}, {"generators", l.generators}});
  }
  return json{{"coordinates", s.coordinates()}, {"components", std::move(components)}}.dump();
}

SemilinearSet semilinear_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    std::vector<LinearSet> components;
    for (const auto& c : j.at("components")) {
      components.push_back(LinearSet{c.at("offset").get<VectorN>(),
                                     c.at("generators").get<std::vector<VectorN>>()});
    }
    return SemilinearSet(j.at("coordinates").get<std::vector<std::string>>(),
                         std::move(components));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed semilinear set: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid semilinear set: ") + e.what());
  }
}

std::string report_to_json(const PipelineReport& report) {
  const Presentation& p = report.query.presentation;
  json words = json::array();
  for (const Word& w : report.query.words) {
    words.push_back(format_word(p, w));
  }
  json out{{"schema", kReportSchema},
           {"query", {{"group", p.describe()}, {"words", std::move(words)}}},
           {"tau", tau_to_string(report.tau)},
           {"verdict", to_string(report.verdict)},
           {"notes", report.notes},
           {"empirical", nullptr},
           {"symbolic", nullptr},
           {"compared_up_to", nullptr}};
  if (report.compared_up_to) {
    out["compared_up_to"] = *report.compared_up_to;
  }
  if (report.empirical) {
    const EmpiricalResult& e = *report.empirical;
    json values = json::array();
    for (ExtNat v : e.values) {
      values.push_back(ext_to_json(v));
    }
    json fitted = "no fit";
    if (e.fitted) {
      fitted = form_json(e.fitted->form);
      fitted["confirming_steps"] = e.fitted->confirming_steps;
      fitted["window"] = e.fitted->window;
    }
    out["empirical"] = {{"values", std::move(values)},
                        {"fitted", std::move(fitted)},
                        {"step_bound_d", e.step_bound}};
  }
  if (report.symbolic) {
    const SymbolicResult& s = *report.symbolic;
    json sizes = json::array();
    for (const StageSize& size : s.sizes) {
      sizes.push_back({{"stage", size.stage}, {"size", size.size}});
    }
    out["symbolic"] = {{"status", s.status},
                       {"stage", s.stage},
                       {"detail", s.detail},
                       {"sizes", std::move(sizes)},
                       {"envelope", s.envelope ? form_json(*s.envelope) : json(nullptr)}};
  }
  return out.dump(2);
}

ReportSummary parse_report(std::string_view text) {
  const json j = parse_json(text);
  ReportSummary out;
  try {
    out.schema = j.at("schema").get<int>();
    if (out.schema != kReportSchema) {
      throw ParseError("unsupported report schema " + std::to_string(out.schema));
    }
    out.verdict = j.at("verdict").get<std::string>();
    if (out.verdict != "certified" && out.verdict != "heuristic" && out.verdict != "mismatch") {
      throw ParseError("unknown verdict '" + out.verdict + "'");
    }
    out.tau = j.at("tau").get<std::string>();
    if (out.tau != "undetermined") {
      Rational::parse(out.tau);
    }
    j.at("query").at("group").get<std::string>();
    j.at("query").at("words").get<std::vector<std::string>>();
    const json& empirical = j.at("empirical");
    if (!empirical.is_null()) {
      for (const auto& v : empirical.at("values")) {
        out.values.push_back(ext_from_json(v));
      }
      const json& fitted = empirical.at("fitted");
      if (!(fitted.is_string() && fitted.get<std::string>() == "no fit")) {
        form_from(fitted);
      }
      empirical.at("step_bound_d").get<std::uint64_t>();
    }
    const json& symbolic = j.at("symbolic");
    if (!symbolic.is_null()) {
      out.symbolic_status = symbolic.at("status").get<std::string>();
      for (const auto& size : symbolic.at("sizes")) {
        size.at("stage").get<std::string>();
        size.at("size").get<std::size_t>();
      }
      if (!symbolic.at("envelope").is_null()) {
        form_from(symbolic.at("envelope"));
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("report does not match the schema: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("report does not match the schema: ") + e.what());
  }
  return out;
}

std::string values_to_csv(std::span<const ExtNat> values) {
  std::ostringstream out;
  out << "k,norm\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << k << ',' << values[k] << '\n';
  }
  return out.str();
}

namespace {

std::string describe_form(const SemiArithmeticForm& form) {
  std::ostringstream out;
  out << "preperiod [";
  for (std::size_t i = 0; i < form.preperiod().size(); ++i) {
    out << (i ? ", " : "") << form.preperiod()[i];
  }
  out << "], period " << form.period() << ", residues";
  for (std::size_t n = 0; n < form.tails().size(); ++n) {
    const ResidueTail& t = form.tails()[n];
    out << ' ' << n << ':';
    if (t.infinite) {
      out << "inf";
    } else {
      out << t.intercept << '+' << t.difference << 'j';
    }
  }
  return out.str();
}

}  // namespace

std::string report_to_text(const PipelineReport& report) {
  const Presentation& p = report.query.presentation;
  std::ostringstream out;
  out << "group    " << p.describe() << '\n';
  for (const Word& w : report.query.words) {
    out << "word     " << format_word(p, w) << '\n';
  }
  if (report.empirical) {
    const EmpiricalResult& e = *report.empirical;
    out << "values  ";
    for (ExtNat v : e.values) {
      out << ' ' << v;
    }
    out << '\n';
    out << "fitted   " << (e.fitted ? describe_form(e.fitted->form) : "no fit") << '\n';
    out << "step D   " << e.step_bound << '\n';
  }
  if (report.symbolic) {
    const SymbolicResult& s = *report.symbolic;
    out << "symbolic " << s.status;
    if (!s.stage.empty()) {
      out << " at " << s.stage;
    }
    out << '\n';
    for (const StageSize& size : s.sizes) {
      out << "  " << size.stage << ' ' << size.size << '\n';
    }
    if (s.envelope) {
      out << "envelope " << describe_form(*s.envelope) << '\n';
    }
  }
  if (report.compared_up_to) {
    out << "compared k <= " << *report.compared_up_to << '\n';
  }
  out << "tau      " << tau_to_string(report.tau) << '\n';
  out << "verdict  " << to_string(report.verdict) << '\n';
  for (const auto& note : report.notes) {
    out << "note     " << note << '\n';
  }
  return out.str();
}

}  // namespace stablenorm
