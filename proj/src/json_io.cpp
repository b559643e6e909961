#include "leroy/json_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace leroy {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string params_json(const LeRoyParams& params) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const ParamTriple& t : params.triples()) {
    if (!first) os << ",";
    first = false;
    os << "[" << format_double(t.alpha) << "," << format_double(t.beta) << ","
       << format_double(t.gamma) << "]";
  }
  os << "]";
  return os.str();
}

Relation relation_from_symbol(const std::string& s) {
  if (s == "<") return Relation::less;
  if (s == "<=") return Relation::less_equal;
  if (s == ">") return Relation::greater;
  if (s == ">=") return Relation::greater_equal;
  if (s == "=") return Relation::equal;
  throw std::invalid_argument("unknown relation symbol: " + s);
}

Clause clause_from(const nlohmann::json& j) {
  return Clause{j.at("name").get<std::string>(),
                j.at("lhs").get<double>(),
                relation_from_symbol(j.at("relation").get<std::string>()),
                j.at("rhs").get<double>(),
                j.at("margin").get<double>(),
                j.at("pass").get<bool>()};
}

LeRoyParams params_from(const nlohmann::json& j) {
  std::vector<ParamTriple> triples;
  for (const auto& t : j) {
    triples.push_back(ParamTriple{t.at(0).get<double>(), t.at(1).get<double>(),
                                  t.at(2).get<double>()});
  }
  return LeRoyParams(std::move(triples));
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) return "0";  // canonicalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_json(const SeriesValue& value) {
  std::ostringstream os;
  os << "{\"value\":{\"re\":" << format_double(value.value.real())
     << ",\"im\":" << format_double(value.value.imag())
     << "},\"tail_bound\":" << format_double(value.tail_bound)
     << ",\"terms_used\":" << value.terms_used << "}";
  return os.str();
}

std::string to_json(const Clause& clause) {
  std::ostringstream os;
  os << "{\"name\":\"" << escape(clause.name)
     << "\",\"lhs\":" << format_double(clause.lhs) << ",\"relation\":\""
     << relation_symbol(clause.relation)
     << "\",\"rhs\":" << format_double(clause.rhs)
     << ",\"margin\":" << format_double(clause.margin)
     << ",\"pass\":" << (clause.pass ? "true" : "false") << "}";
  return os.str();
}

std::string to_json(const Certificate& certificate) {
  std::ostringstream os;
  os << "{\"theorem_id\":\"" << escape(certificate.theorem_id)
     << "\",\"params\":" << params_json(certificate.params)
     << ",\"satisfied\":" << (certificate.satisfied ? "true" : "false")
     << ",\"clauses\":[";
  for (std::size_t i = 0; i < certificate.clauses.size(); ++i) {
    if (i) os << ",";
    os << to_json(certificate.clauses[i]);
  }
  os << "],\"informational\":[";
  for (std::size_t i = 0; i < certificate.informational.size(); ++i) {
    if (i) os << ",";
    os << to_json(certificate.informational[i]);
  }
  os << "]}";
  return os.str();
}

std::string to_json(const VerificationReport& report) {
  std::ostringstream os;
  os << "{\"property\":\"" << escape(report.property)
     << "\",\"radius_limit\":" << format_double(report.radius_limit)
     << ",\"grid\":{\"radii\":[";
  for (std::size_t i = 0; i < report.grid.radii.size(); ++i) {
    if (i) os << ",";
    os << format_double(report.grid.radii[i]);
  }
  os << "],\"angles\":" << report.grid.angles_per_circle
     << "},\"extremal_value\":" << format_double(report.extremal_value)
     << ",\"witness\":";
  if (report.witness) {
    os << "{\"re\":" << format_double(report.witness->real())
       << ",\"im\":" << format_double(report.witness->imag()) << "}";
  } else {
    os << "null";
  }
  os << ",\"pass\":" << (report.pass ? "true" : "false") << ",\"notes\":\""
     << escape(report.notes) << "\"}";
  return os.str();
}

std::string to_json(const AgreementRecord& record) {
  std::ostringstream os;
  os << "{\"certificate\":" << to_json(record.certificate)
     << ",\"report\":" << to_json(record.report)
     << ",\"agree\":" << (record.agree ? "true" : "false") << "}";
  return os.str();
}

Certificate certificate_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Certificate cert{j.at("theorem_id").get<std::string>(),
                   params_from(j.at("params")),
                   {},
                   {},
                   j.at("satisfied").get<bool>()};
  for (const auto& c : j.at("clauses")) cert.clauses.push_back(clause_from(c));
  for (const auto& c : j.at("informational"))
    cert.informational.push_back(clause_from(c));
  return cert;
}

VerificationReport report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  VerificationReport report;
  report.property = j.at("property").get<std::string>();
  report.radius_limit = j.at("radius_limit").get<double>();
  for (const auto& r : j.at("grid").at("radii"))
    report.grid.radii.push_back(r.get<double>());
  report.grid.angles_per_circle = j.at("grid").at("angles").get<int>();
  report.extremal_value = j.at("extremal_value").get<double>();
  if (!j.at("witness").is_null()) {
    report.witness = std::complex<double>(j.at("witness").at("re").get<double>(),
                                          j.at("witness").at("im").get<double>());
  }
  report.pass = j.at("pass").get<bool>();
  report.notes = j.at("notes").get<std::string>();
  return report;
}

}  // namespace leroy
