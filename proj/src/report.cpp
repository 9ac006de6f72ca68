#include "mayerkit/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace mayerkit::report {

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::json envelope(const std::string& command, bool with_timestamp) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["command"] = command;
  if (with_timestamp) j["timestamp"] = utc_now();
  return j;
}

nlohmann::json rational(const Rational& q) {
  return {{"exact", to_string(q)}, {"value", to_double(q)}};
}

nlohmann::json records(const cluster::ClusterTable& t) {
  nlohmann::json arr = nlohmann::json::array();
  const bool mayer = t.quantity == "b_n";
  for (const auto& [order, v] : t.values) {
    nlohmann::json r;
    r["quantity"] = t.quantity;
    r[mayer ? "n" : "k"] = order;
    r["beta"] = t.beta;
    r["potential"] = t.potential;
    r["volume"] = t.volume.label();
    r["value"] = v.value;
    r["error"] = v.error;
    r["method"] = t.method.label();
    if (t.method.method == cluster::Method::monte_carlo) {
      r["seed"] = t.method.seed;
      r["samples"] = t.method.samples;
    } else {
      r["seed"] = nullptr;
    }
    arr.push_back(r);
  }
  return arr;
}

nlohmann::json records(const series::VirialCoefficients& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, v] : c.values) {
    nlohmann::json r{{"quantity", "C_k"}, {"k", k}, {"value", v}, {"source", series::to_string(c.source)}};
    auto e = c.errors.find(k);
    r["error"] = e == c.errors.end() ? 0.0 : e->second;
    if (c.source == series::Source::finite_N) r["N"] = c.N;
    arr.push_back(r);
  }
  return arr;
}

nlohmann::json to_json(const series::FreeEnergySeries& f) {
  nlohmann::json j{{"rho", f.rho}, {"k_max", f.k_max}, {"Q", f.Q}, {"certified", f.certified},
                   {"ratio", f.ratio}, {"rho_star", f.rho_star}};
  j["tail_bound"] = f.tail_bound ? nlohmann::json(*f.tail_bound) : nlohmann::json(nullptr);
  if (!f.warning.empty()) j["warning"] = f.warning;
  return j;
}

nlohmann::json to_json(const canonical::CanonicalResult& r) {
  return {{"N", r.N},           {"L", r.L},         {"beta", r.beta},
          {"dimension", r.dimension}, {"ztilde", r.ztilde}, {"error", r.error},
          {"method", canonical::to_string(r.method)}};
}

nlohmann::json to_json(const canonical::CompareReport& r) {
  nlohmann::json j{{"N", r.N},
                   {"L", r.L},
                   {"beta", r.beta},
                   {"rho", r.rho},
                   {"rho_star", r.rho_star},
                   {"k_max", r.k_max},
                   {"Q_direct", r.Q_direct},
                   {"direct_error", r.direct_error},
                   {"direct_method", r.direct_method},
                   {"Q_series", r.Q_series},
                   {"gap", r.gap},
                   {"budget", r.budget},
                   {"certified", r.certified},
                   {"pass", r.pass}};
  j["tail_bound"] = r.tail_bound ? nlohmann::json(*r.tail_bound) : nlohmann::json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump_into(const nlohmann::json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close(static_cast<std::size_t>(indent) * depth, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case nlohmann::json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      std::string s = format_double(x);
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += std::string(",") + nl;
        first = false;
        out += pad + nlohmann::json(it.key()).dump() + (indent > 0 ? ": " : ":");
        dump_into(it.value(), indent, depth + 1, out);
      }
      out += nl + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += std::string(",") + nl;
        out += pad;
        dump_into(j[i], indent, depth + 1, out);
      }
      out += nl + close + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const nlohmann::json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&](const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += csv_field(v[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

}  // namespace mayerkit::report
