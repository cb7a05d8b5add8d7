#include "graphonlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphonlab/error.hpp"

namespace graphonlab::io {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(mpq_class(mpz_class(j.dump())));
  if (j.is_number_float()) return Scalar(j.get<double>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const Scalar s = Scalar::parse(text);
    if (!s.is_exact()) throw Error(Errc::ParseError, "decimal strings are not accepted: \"" + text + "\"");
    return s;
  }
  throw Error(Errc::ParseError, "expected a number or \"a/b\" string, got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
  if (!s.is_exact()) return s.to_double();
  const mpq_class& q = s.exact();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.str();
}

std::vector<Scalar> scalar_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

StepGraphon parse_graphon(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("parts") || !doc.contains("values")) {
    throw Error(Errc::ParseError, "graphon document needs \"parts\" and \"values\"");
  }
  auto parts = scalar_array(doc["parts"], "parts");
  const json& rows = doc["values"];
  if (!rows.is_array()) throw Error(Errc::ParseError, "values must be an array of arrays");
  std::vector<std::vector<Scalar>> values;
  for (const auto& row : rows) values.push_back(scalar_array(row, "values row"));
  return validate_graphon(std::move(parts), std::move(values));
}

std::string format_graphon(const StepGraphon& w) {
  json doc;
  doc["parts"] = json::array();
  for (const auto& p : w.parts()) doc["parts"].push_back(scalar_to_json(p));
  doc["values"] = json::array();
  for (const auto& row : w.value_matrix()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    doc["values"].push_back(std::move(r));
  }
  return doc.dump();
}

SimpleGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(Errc::ParseError, "graph header must be \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long a = -1;
    long long b = -1;
    if (!(in >> a >> b) || a < 0 || b < 0) {
      throw Error(Errc::ParseError, "expected edge line " + std::to_string(i + 1) + " as \"i j\"");
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  std::string trailing;
  if (in >> trailing) throw Error(Errc::ParseError, "unexpected trailing content \"" + trailing + "\"");
  return SimpleGraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string format_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_pmf(const EdgeCountPMF& pmf) {
  std::string out = "[";
  const auto mass = pmf.mass();
  for (std::size_t k = 0; k < mass.size(); ++k) {
    if (k > 0) out += ", ";
    out += mass[k].str();
  }
  return out + "]";
}

EdgeCountPMF parse_pmf(std::string_view text) {
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw Error(Errc::ParseError, "pmf must be a bracketed list");
  }
  for (char c : text.substr(0, open)) {
    if (!std::isspace(static_cast<unsigned char>(c))) throw Error(Errc::ParseError, "junk before pmf");
  }
  for (char c : text.substr(close + 1)) {
    if (!std::isspace(static_cast<unsigned char>(c))) throw Error(Errc::ParseError, "junk after pmf");
  }
  std::vector<Scalar> mass;
  std::string_view body = text.substr(open + 1, close - open - 1);
  while (true) {
    const auto comma = body.find(',');
    std::string token(body.substr(0, comma));
    std::erase_if(token, [](char c) { return c == '"' || std::isspace(static_cast<unsigned char>(c)); });
    if (token.empty()) throw Error(Errc::ParseError, "empty pmf entry");
    mass.push_back(Scalar::parse(token));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return EdgeCountPMF(std::move(mass));
}

std::string format_report(const VerifierReport& report, int indent) {
  nlohmann::ordered_json doc;
  doc["verdict"] = std::string(to_string(report.verdict));
  doc["contradiction"] = report.contradiction;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"lhs", scalar_to_json(c.lhs)},
                             {"rhs", scalar_to_json(c.rhs)},
                             {"gap", scalar_to_json(c.gap)},
                             {"pass", c.pass}});
  }
  return doc.dump(indent);
}

VerifierReport parse_report(std::string_view text) {
  const json doc = parse_json(text);
  VerifierReport report;
  try {
    const auto verdict = doc.at("verdict").get<std::string>();
    bool known = false;
    for (auto v : {Verdict::ConsistentWithTheorem, Verdict::ConstantGraphon, Verdict::NonbinomialEdgeCounts,
                   Verdict::NoC4Precondition}) {
      if (verdict == to_string(v)) {
        report.verdict = v;
        known = true;
      }
    }
    if (!known) throw Error(Errc::ParseError, "unknown verdict \"" + verdict + "\"");
    report.contradiction = doc.value("contradiction", false);
    for (const auto& c : doc.at("checks")) {
      report.checks.push_back({c.at("name").get<std::string>(), scalar_from_json(c.at("lhs")),
                               scalar_from_json(c.at("rhs")), scalar_from_json(c.at("gap")),
                               c.at("pass").get<bool>()});
    }
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return report;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace graphonlab::io
