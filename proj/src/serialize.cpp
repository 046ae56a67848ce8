#include "spnkit/serialize.hpp"

#include <cmath>

#include "spnkit/error.hpp"
#include "spnkit/text_io.hpp"

namespace spnkit {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

TraceStep::Kind trace_kind(const std::string& s) {
  if (s == "StripRow") return TraceStep::Kind::StripRow;
  if (s == "SchurStep") return TraceStep::Kind::SchurStep;
  if (s == "BaseCase") return TraceStep::Kind::BaseCase;
  throw ParseError("unknown trace step '" + s + "'", 1, 1);
}

const char* trace_kind_name(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::StripRow: return "StripRow";
    case TraceStep::Kind::SchurStep: return "SchurStep";
    case TraceStep::Kind::BaseCase: return "BaseCase";
  }
  return "?";
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace

Json to_json(const ClassLabel& label) {
  Json j;
  j["class"] = to_string(label.tag);
  if (label.detail) j["parameter"] = *label.detail;
  j["label"] = label.to_string();
  return j;
}

Json to_json(const RowSignSummary& rows) {
  return Json{{"nonneg_rows", rows.nonneg_rows},
              {"nonpos_rows", rows.nonpos_rows},
              {"strictly_neg_rows", rows.strictly_neg_rows}};
}

Json to_json(const TraceStep& step) {
  return Json{{"kind", trace_kind_name(step.kind)}, {"index", step.index}};
}

Json to_json(const SpnCertificate& c) {
  Json trace = Json::array();
  for (const TraceStep& s : c.trace) trace.push_back(to_json(s));
  return Json{{"psd_part", format_matrix(c.psd_part)},
              {"nonneg_part", format_matrix(c.nonneg_part)},
              {"residual", number_or_null(c.residual)},
              {"trace", std::move(trace)}};
}

Json to_json(const DnnWitness& w) {
  return Json{{"x", format_matrix(w.x)}, {"objective", number_or_null(w.objective)}};
}

Json to_json(const OrbitResult& r) {
  Json j{{"found", r.found}};
  if (r.witness) {
    j["perm"] = r.witness->perm();
    Json diag = Json::array();
    for (double d : r.witness->diag()) diag.push_back(number_or_null(d));
    j["diag"] = std::move(diag);
  } else {
    j["perm"] = nullptr;
    j["diag"] = nullptr;
  }
  j["method"] = to_string(r.method);
  return j;
}

Json to_json(const StqpReport& r) {
  Json j;
  j["z_star"] = r.z_star ? number_or_null(*r.z_star) : Json(nullptr);
  j["minimizer"] = r.minimizer;
  j["z_spn"] = number_or_null(r.z_spn);
  j["z_spn_interval"] = Json::array({number_or_null(r.z_spn_lo), number_or_null(r.z_spn_hi)});
  j["z_spn_undecided"] = r.spn_undecided;
  j["z_dnn"] = r.z_dnn ? number_or_null(*r.z_dnn) : Json(nullptr);
  j["gap"] = r.gap ? number_or_null(*r.gap) : Json(nullptr);
  j["tight"] = r.tight;
  Json certs = Json::array();
  for (const ClassLabel& c : r.certificates) certs.push_back(to_json(c));
  j["certificates"] = std::move(certs);
  if (r.orbit_witness) j["orbit_perm"] = r.orbit_witness->perm();
  j["consistent"] = r.consistent();
  return j;
}

Json to_json(const Graph& g) {
  const ThresholdResult t = threshold_elimination(g);
  return Json{{"n", g.n},
              {"adjacency", g.adjacency()},
              {"threshold", t.threshold},
              {"elimination", t.elimination}};
}

Json to_json(const SignGraphs& g) {
  return Json{{"positive", to_json(g.positive)}, {"negative", to_json(g.negative)}};
}

SpnCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    SpnCertificate c;
    c.psd_part = parse_matrix(j.at("psd_part").get<std::string>());
    c.nonneg_part = parse_matrix(j.at("nonneg_part").get<std::string>());
    c.residual = j.at("residual").get<double>();
    for (const Json& s : j.at("trace")) {
      c.trace.push_back({trace_kind(s.at("kind").get<std::string>()),
                         s.at("index").get<std::size_t>()});
    }
    return c;
  });
}

DnnWitness witness_from_json(const Json& j) {
  return guarded([&] {
    return DnnWitness{parse_matrix(j.at("x").get<std::string>()),
                      j.at("objective").get<double>()};
  });
}

}  // namespace spnkit
