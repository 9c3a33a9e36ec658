#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and returns the process exit code: 0 success, 2 unsupported
// classification, 1 any error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detvan/abelian.hpp"
#include "detvan/detmodel.hpp"
#include "detvan/errors.hpp"
#include "detvan/exprparse.hpp"
#include "detvan/model_file.hpp"
#include "detvan/pipeline.hpp"
#include "detvan/report_json.hpp"
#include "detvan/singularity.hpp"

namespace detvan {

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::int64_t seed = 1;
  bool seed_given = false;
  unsigned max_degree = 24;
  bool max_degree_given = false;
  std::string format = "json";
  std::string out_path;
  std::string vars;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw Error("cannot write '" + cfg.out_path + "'");
  f << text;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline nlohmann::json chart_json(const Chart& c, const BasisOptions& bo) {
  nlohmann::json j;
  j["index"] = c.index;
  j["coordinate"] = c.coordinate;
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& e : c.equations) eqs.push_back(e.to_string());
  j["equations"] = eqs;
  auto red = reduce_to_hypersurface(c, bo);
  if (auto* ch = std::get_if<Chart>(&red)) {
    j["hypersurface"] = ch->hypersurface->to_string();
    nlohmann::json el = nlohmann::json::object();
    for (const auto& [k, v] : ch->eliminated) el[k] = v.to_string();
    j["eliminated"] = el;
    auto q = quadratic_family(*ch->hypersurface, ch->coordinate);
    if (auto* qf = std::get_if<QuadraticFamily>(&q)) {
      nlohmann::json Q = nlohmann::json::array();
      for (const auto& row : qf->Q) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(e.to_string());
        Q.push_back(r);
      }
      j["Q"] = Q;
      nlohmann::json vars = qf->vars;
      j["Q_variables"] = vars;
      j["det_Q"] = special_points(*qf).det.to_string();
    } else {
      j["Q"] = nullptr;
      j["not_quadratic"] = std::get<NotQuadratic>(q).reason;
    }
  } else {
    j["hypersurface"] = nullptr;
    j["not_reducible"] = std::get<NotReducible>(red).reason;
  }
  return j;
}

inline std::string chart_text(const nlohmann::json& j) {
  std::ostringstream os;
  os << "chart " << j["index"].get<unsigned>() << " (" << j["coordinate"].get<std::string>() << ")\n";
  for (const auto& e : j["equations"]) os << "  " << e.get<std::string>() << " = 0\n";
  if (!j["hypersurface"].is_null()) {
    for (const auto& [k, v] : j["eliminated"].items()) os << "  " << k << " = " << v.get<std::string>() << "\n";
    os << "  h = " << j["hypersurface"].get<std::string>() << "\n";
    if (!j["Q"].is_null()) {
      os << "  Q =\n";
      for (const auto& row : j["Q"]) {
        os << "   ";
        for (const auto& e : row) os << " " << e.get<std::string>();
        os << "\n";
      }
      os << "  det Q = " << j["det_Q"].get<std::string>() << "\n";
    }
  } else {
    os << "  not reducible: " << j["not_reducible"].get<std::string>() << "\n";
  }
  return os.str();
}

inline IntMatrix parse_int_matrix(const std::string& bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (doc.is_object() && doc.contains("matrix")) doc = doc["matrix"];
  if (!doc.is_array()) throw Error("matrix file must hold an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw Error("matrix rows must be arrays");
    std::vector<Integer> r;
    for (const auto& e : row) {
      if (e.is_number_integer()) r.emplace_back(std::to_string(e.get<std::int64_t>()));
      else if (e.is_string()) r.emplace_back(e.get<std::string>());
      else throw Error("matrix entries must be integers");
    }
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

inline std::string int_matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

inline std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline int run_command(const CliConfig& cfg, std::ostream& out) {
  const bool json = cfg.format == "json";
  BasisOptions bo;
  bo.max_degree = cfg.max_degree;

  if (cfg.subcommand == "milnor") {
    const RingPtr ring = make_ring(split_vars(cfg.vars));
    const Polynomial f = parse_poly(cfg.input, ring);
    const Multiplicity mu = milnor_hypersurface(f, true, bo);
    std::string text;
    if (json) text = mu.is_finite() ? std::to_string(mu.value()) + "\n" : "\"infinite\"\n";
    else text = mu.to_string() + "\n";
    emit(cfg, text, out);
    return 0;
  }

  if (cfg.subcommand == "snf") {
    const IntMatrix m = parse_int_matrix(read_file(cfg.input));
    const SmithForm f = smith_normal_form(m);
    if (json) {
      nlohmann::json j{{"U", int_matrix_json(f.U)}, {"S", int_matrix_json(f.S)}, {"V", int_matrix_json(f.V)}};
      emit(cfg, dump(j), out);
    } else {
      emit(cfg, "U =\n" + int_matrix_text(f.U) + "S =\n" + int_matrix_text(f.S) + "V =\n" + int_matrix_text(f.V),
           out);
    }
    return 0;
  }

  const ModelFile mf = parse_model_file(read_file(cfg.input));
  const DetModel model = model_from_file(mf);
  if (!cfg.max_degree_given && mf.options.max_degree) bo.max_degree = *mf.options.max_degree;

  if (cfg.subcommand == "tjurina") {
    nlohmann::json charts = nlohmann::json::array();
    for (unsigned k = 0; k < 2; ++k) charts.push_back(chart_json(tjurina_chart(model, k), bo));
    if (json) {
      emit(cfg, dump({{"charts", charts}}), out);
    } else {
      std::string text;
      for (const auto& c : charts) text += chart_text(c);
      emit(cfg, text, out);
    }
    return 0;
  }

  AnalyzeOptions ao;
  ao.basis = bo;
  ao.seed = static_cast<std::uint64_t>(cfg.seed_given ? cfg.seed : mf.options.seed.value_or(1));
  ao.max_reseeds = max_reseeds_from_env();
  const HomologyReport report = analyze(model, ao);
  emit(cfg, json ? dump(report_to_json(report)) : report_to_text(report), out);
  return report.classification == Classification::unsupported ? 2 : 0;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Milnor fibre homology of determinantal singularities given by 3x2 matrices", "detvan"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto common = [&](CLI::App* sub, bool seeded) {
    sub->add_option("--max-degree", cfg.max_degree, "degree budget for basis computations")
        ->each([&](const std::string&) { cfg.max_degree_given = true; });
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
    if (seeded)
      sub->add_option("--seed", cfg.seed, "seed for every random choice")
          ->each([&](const std::string&) { cfg.seed_given = true; });
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "homology report for a model file");
  analyze_cmd->add_option("model", cfg.input, "model JSON file")->required();
  common(analyze_cmd, true);

  auto* tjurina_cmd = app.add_subcommand("tjurina", "equations of both charts of the Tjurina transform");
  tjurina_cmd->add_option("model", cfg.input, "model JSON file")->required();
  common(tjurina_cmd, false);

  auto* milnor_cmd = app.add_subcommand("milnor", "Milnor number of a hypersurface germ at the origin");
  milnor_cmd->add_option("expr", cfg.input, "polynomial expression")->required();
  milnor_cmd->add_option("--vars", cfg.vars, "comma separated variable list")->required();
  common(milnor_cmd, false);

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("matrix", cfg.input, "JSON file with [[...],...] or {\"matrix\": ...}")->required();
  common(snf_cmd, false);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 1;
  }
  for (auto* sub : {analyze_cmd, tjurina_cmd, milnor_cmd, snf_cmd})
    if (sub->parsed()) cfg.subcommand = sub->get_name();

  try {
    return detail::run_command(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace detvan
