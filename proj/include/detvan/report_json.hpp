#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "detvan/abelian.hpp"
#include "detvan/pipeline.hpp"

namespace detvan {

inline nlohmann::json to_json(const AbelianGroup& g) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& d : g.torsion()) t.push_back(d.fits_slong_p() ? nlohmann::json(d.get_si()) : nlohmann::json(d.get_str()));
  return {{"rank", g.free_rank()}, {"torsion", t}};
}

inline nlohmann::json int_matrix_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& v = m(i, j);
      if (v.fits_slong_p()) row.push_back(v.get_si());
      else row.push_back(v.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

/// Key-sorted report. Degrees whose group is unknown appear with a null
/// torsion list (rank known) or are omitted from "homology" entirely and
/// null in "betti".
inline nlohmann::json report_to_json(const HomologyReport& r) {
  using nlohmann::json;
  json j;
  j["classification"] = to_string(r.classification);
  j["dimension"] = r.dimension;
  j["seed"] = r.seed;

  json betti = json::array();
  for (unsigned q = 0; q <= r.dimension; ++q) {
    const auto b = r.b(q);
    betti.push_back(b ? json(*b) : json(nullptr));
  }
  j["betti"] = betti;

  json hom = json::array();
  for (unsigned q = 0; q <= r.dimension; ++q) {
    auto it = r.homology.find(q);
    if (it != r.homology.end()) {
      json e = to_json(it->second);
      e["degree"] = q;
      hom.push_back(e);
    } else if (const auto b = r.b(q)) {
      hom.push_back({{"degree", q}, {"rank", *b}, {"torsion", nullptr}});
    }
  }
  j["homology"] = hom;
  j["vertical_rank"] = r.vertical_rank;
  j["euler"] = r.euler ? json(*r.euler) : json(nullptr);
  if (r.classification == Classification::unsupported) {
    j["unsupported_reason"] = r.unsupported_reason;
    if (r.dimension == 3) j["b3_formula"] = "b3 = -chi + 2";
  }

  json sp = json::array();
  for (const auto& p : r.special_points)
    sp.push_back({{"minpoly", p.minpoly},
                  {"degree", p.degree},
                  {"multiplicity", p.multiplicity},
                  {"corank", p.corank},
                  {"class", p.cls}});
  j["special_points"] = sp;

  if (r.axis) {
    json a = {{"class", r.axis->name()}};
    if (r.axis->kind == AxisClass::Kind::icis) a["milnor"] = r.axis->milnor;
    j["axis"] = a;
  } else {
    j["axis"] = nullptr;
  }

  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"vacuous", c.vacuous}, {"detail", c.detail}});
  j["checks"] = checks;

  json trace = json::array();
  for (const auto& t : r.trace) trace.push_back({{"step", t.step}, {"detail", t.detail}});
  j["trace"] = trace;
  return j;
}

inline std::string report_to_text(const HomologyReport& r) {
  std::ostringstream os;
  os << "classification: " << to_string(r.classification) << "\n";
  if (r.classification == Classification::unsupported) os << "reason: " << r.unsupported_reason << "\n";
  os << "dimension: " << r.dimension << "\n";
  for (unsigned q = 0; q <= r.dimension; ++q) {
    os << "H_" << q << ": ";
    auto it = r.homology.find(q);
    if (it != r.homology.end()) os << it->second.to_string();
    else if (const auto b = r.b(q)) os << "rank " << *b << " (torsion unknown)";
    else os << "unknown";
    os << "\n";
  }
  os << "vertical rank: " << r.vertical_rank << "\n";
  os << "euler characteristic: " << (r.euler ? std::to_string(*r.euler) : std::string("unknown")) << "\n";
  for (const auto& p : r.special_points)
    os << "special points: " << p.minpoly << " = 0 (" << p.degree << " points, multiplicity " << p.multiplicity
       << ", corank " << p.corank << ", " << p.cls << ")\n";
  if (r.axis) os << "axis: " << detail::axis_string(*r.axis) << "\n";
  for (const auto& c : r.checks)
    os << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << (c.vacuous ? " (vacuous)" : "") << "\n";
  for (const auto& t : r.trace) os << "trace " << t.step << ": " << t.detail << "\n";
  return os.str();
}

}  // namespace detvan
