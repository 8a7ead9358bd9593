#include "jdiv/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "jdiv/error.hpp"

namespace jdiv::io {

namespace {

// Runs a schema-reading function, mapping nlohmann type/key errors to ParseError.
template <class F>
auto guarded(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError("malformed " + std::string(what) + ": " + e.what());
  }
}

double read_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Infinity") return INFINITY;
    if (s == "-inf" || s == "-Infinity") return -INFINITY;
  }
  throw ParseError("expected a number, got " + j.dump());
}

std::vector<double> read_numbers(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of numbers, got " + j.dump());
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(read_number(x));
  return out;
}

std::complex<double> read_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("expected [re, im] or a number, got " + j.dump());
}

json matrix_rows(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd read_matrix(const json& rows) {
  if (!rows.is_array()) throw ParseError("expected a nested array");
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) return Eigen::MatrixXd(0, 0);
  const auto m = static_cast<Eigen::Index>(rows[0].size());
  Eigen::MatrixXd out(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = read_numbers(rows[i]);
    if (static_cast<Eigen::Index>(row.size()) != m) throw ParseError("ragged matrix rows");
    for (Eigen::Index j = 0; j < m; ++j) out(i, j) = row[static_cast<std::size_t>(j)];
  }
  return out;
}

json witness_pair(const std::pair<Distribution, Distribution>& w) {
  return json::array({to_json(w.first), to_json(w.second)});
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

json number(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

namespace {

void dump_into(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        dump_into(value, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        dump_into(value, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Distribution distribution_from_json(const json& j) {
  return guarded("distribution", [&] {
    if (j.is_array()) return Distribution(read_numbers(j));
    if (j.is_object() && j.contains("probs")) {
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return Distribution(read_numbers(j.at("probs")), std::move(labels));
    }
    throw ParseError("distribution must be an array or an object with \"probs\"");
  });
}

json to_json(const Distribution& p) {
  json probs = json::array();
  for (double x : p.probs()) probs.push_back(x);
  if (p.labels().empty()) return probs;
  return json{{"labels", p.labels()}, {"probs", probs}};
}

DensityMatrix density_from_json(const json& j) {
  return guarded("density matrix", [&] {
    if (!j.is_object() || !j.contains("entries")) {
      throw ParseError("density matrix must be an object with \"entries\"");
    }
    const json& rows = j.at("entries");
    if (!rows.is_array()) throw ParseError("\"entries\" must be a nested array");
    const auto n = static_cast<Eigen::Index>(rows.size());
    if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != n) {
      throw ParseError("\"dim\" does not match the number of rows");
    }
    ComplexMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw ValidationError("density matrix must be square");
      }
      for (Eigen::Index c = 0; c < n; ++c) m(r, c) = read_complex(row[static_cast<std::size_t>(c)]);
    }
    return validate_density(m);
  });
}

json to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < rho.dim(); ++c) {
      const auto z = rho.matrix()(r, c);
      row.push_back(json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return json{{"dim", rho.dim()}, {"entries", rows}};
}

std::string family_kind(const json& j) {
  return guarded("family", [&] {
    if (!j.is_object()) throw ParseError("family must be a JSON object");
    if (j.contains("kind")) {
      const auto kind = j.at("kind").get<std::string>();
      if (kind != "classical" && kind != "quantum") {
        throw ParseError("family kind must be \"classical\" or \"quantum\", got \"" + kind + "\"");
      }
      return kind;
    }
    const json& members = j.at("members");
    if (!members.empty() && members[0].is_object() && members[0].contains("entries")) {
      return std::string("quantum");
    }
    return std::string("classical");
  });
}

ClassicalFamily classical_family_from_json(const json& j) {
  if (family_kind(j) != "classical") throw ValidationError("expected a classical family");
  return guarded("family", [&] {
    std::vector<Distribution> members;
    for (const auto& m : j.at("members")) members.push_back(distribution_from_json(m));
    return ClassicalFamily(std::move(members), distribution_from_json(j.at("weights")));
  });
}

QuantumFamily quantum_family_from_json(const json& j) {
  if (family_kind(j) != "quantum") throw ValidationError("expected a quantum family");
  return guarded("family", [&] {
    std::vector<DensityMatrix> members;
    for (const auto& m : j.at("members")) members.push_back(density_from_json(m));
    return QuantumFamily(std::move(members), distribution_from_json(j.at("weights")));
  });
}

json to_json(const ClassicalFamily& f) {
  json members = json::array();
  for (const auto& m : f.members()) members.push_back(to_json(m));
  return json{{"kind", "classical"}, {"weights", to_json(f.weights())}, {"members", members}};
}

json to_json(const QuantumFamily& f) {
  json members = json::array();
  for (const auto& m : f.members()) members.push_back(to_json(m));
  return json{{"kind", "quantum"}, {"weights", to_json(f.weights())}, {"members", members}};
}

PointSet points_from_json(const json& j) {
  return guarded("point list", [&]() -> PointSet {
    const json& list = (j.is_object() && j.contains("points")) ? j.at("points") : j;
    if (!list.is_array() || list.empty()) throw ParseError("points must be a non-empty array");
    if (list[0].is_object() && list[0].contains("entries")) {
      std::vector<DensityMatrix> states;
      for (const auto& x : list) states.push_back(density_from_json(x));
      return states;
    }
    std::vector<Distribution> dists;
    for (const auto& x : list) dists.push_back(distribution_from_json(x));
    return dists;
  });
}

DistanceMatrix distance_matrix_from_json(const json& j) {
  return guarded("distance matrix", [&] {
    const json& rows = j.is_object() ? j.at("d") : j;
    Eigen::MatrixXd d = read_matrix(rows);
    if (j.is_object() && j.contains("n") && j.at("n").get<Eigen::Index>() != d.rows()) {
      throw ParseError("\"n\" does not match the matrix size");
    }
    std::vector<std::string> labels;
    if (j.is_object() && j.contains("point_labels")) {
      labels = j.at("point_labels").get<std::vector<std::string>>();
    }
    return DistanceMatrix(std::move(d), std::move(labels));
  });
}

json to_json(const DistanceMatrix& d) {
  json out{{"n", d.size()}, {"d", matrix_rows(d.matrix())}};
  if (!d.labels().empty()) out["point_labels"] = d.labels();
  return out;
}

json to_json(const Embedding& e) {
  return json{{"coords", matrix_rows(e.coords)},
              {"reconstruction_error", number(e.reconstruction_error)}};
}

Embedding embedding_from_json(const json& j) {
  return guarded("embedding", [&] {
    return Embedding{read_matrix(j.at("coords")), read_number(j.at("reconstruction_error"))};
  });
}

json to_json(const DefinitenessReport& r) {
  json out{{"certified", r.certified},
           {"min_eigenvalue", number(r.min_eigenvalue)},
           {"tolerance", number(r.tolerance)}};
  if (r.witness) {
    json w = json::array();
    for (Eigen::Index i = 0; i < r.witness->size(); ++i) w.push_back((*r.witness)(i));
    out["witness"] = w;
  }
  return out;
}

json to_json(const BoundReport& r) {
  json out{{"lower", number(r.lower)},   {"value", number(r.value)},
           {"upper", number(r.upper)},   {"v", number(r.v)},
           {"alpha", r.alpha},           {"upper_kind", std::string(to_string(r.upper_kind))},
           {"holds", r.holds()}};
  if (r.tight_lower_witness) out["tight_lower_witness"] = witness_pair(*r.tight_lower_witness);
  if (r.tight_upper_witness) out["tight_upper_witness"] = witness_pair(*r.tight_upper_witness);
  return out;
}

json to_json(const ChainValues& c) {
  json values = json::array();
  for (double x : c.as_vector()) values.push_back(number(x));
  return json{{"v_squared_over_8", number(c.v_squared_over_8)},
              {"series_first_term", number(c.series_first_term)},
              {"jd", number(c.jd)},
              {"un", number(c.un)},
              {"linear_tv", number(c.linear_tv)},
              {"chain", values},
              {"monotone", c.monotone()}};
}

json to_json(const DivergenceResult& r) {
  return json{{"value", number(r.value)}, {"alpha", r.alpha}, {"via", std::string(to_string(r.via))}};
}

std::vector<Distribution> distributions_from_csv(std::string_view text) {
  std::vector<Distribution> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> probs;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto first = cell.find_first_not_of(" \t\r");
      const auto last = cell.find_last_not_of(" \t\r");
      if (first == std::string::npos) throw ParseError("empty CSV cell on line " + std::to_string(line_no));
      const std::string token = cell.substr(first, last - first + 1);
      double value = 0.0;
      const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
      if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
        throw ParseError("bad number \"" + token + "\" on CSV line " + std::to_string(line_no));
      }
      probs.push_back(value);
    }
    out.emplace_back(std::move(probs));
  }
  return out;
}

std::string diagram_csv(const DiagramPoints& d) {
  std::string out = "curve,t,v,jd\n";
  auto row = [&out](std::string_view curve, double t, double v, double jd) {
    out += curve;
    out += ',' + format_double(t) + ',' + format_double(v) + ',' + format_double(jd) + '\n';
  };
  for (const auto& p : d.curve_lower) row("lower", 0.0, p.v, p.jd);
  for (const auto& p : d.curve_upper) row("upper", 1.0, p.v, p.jd);
  for (const auto& s : d.homotopy_samples) row("homotopy", s.t, s.v, s.jd);
  return out;
}

}  // namespace jdiv::io
