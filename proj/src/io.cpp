#include "infconv/io.hpp"

#include <fstream>

namespace infconv {

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where + ": missing field \"" + std::string(key) + "\"");
  return j.at(key);
}

int need_int(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer())
    throw ParseError(where + ": field \"" + std::string(key) + "\" must be an integer");
  return v.get<int>();
}

Rat rat_field(const json& v, const std::string& where) {
  if (!v.is_string())
    throw ParseError(where + ": rationals must be strings like \"3/4\"");
  try {
    return rat_from_string(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

FiniteMetricMagma magma_from_json(const json& j, const std::string& where) {
  FiniteMetricMagma m;
  const int n = need_int(j, "n", where);
  m.metric.n = n;

  const json& law = need(j, "law", where);
  if (!law.is_array() || (int)law.size() != n)
    throw ParseError(where + ": \"law\" must be an n x n array");
  m.law.resize(n);
  for (int y = 0; y < n; ++y) {
    const json& row = law.at(y);
    if (!row.is_array() || (int)row.size() != n)
      throw ParseError(where + ": law[" + std::to_string(y) + "] must have n entries");
    for (const json& v : row) {
      if (!v.is_number_integer())
        throw ParseError(where + ": law entries must be integers");
      m.law[y].push_back(v.get<int>());
    }
  }

  const json& metric = need(j, "metric", where);
  if (!metric.is_array() || (int)metric.size() != n)
    throw ParseError(where + ": \"metric\" must be an n x n array");
  m.metric.d.resize(n);
  for (int i = 0; i < n; ++i) {
    const json& row = metric.at(i);
    if (!row.is_array() || (int)row.size() != n)
      throw ParseError(where + ": metric[" + std::to_string(i) + "] must have n entries");
    for (int k = 0; k < n; ++k)
      m.metric.d[i].push_back(
          rat_field(row.at(k), where + ": metric[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }

  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array() || (int)labels.size() != n)
      throw ParseError(where + ": \"labels\" must list n strings");
    for (const json& s : labels) {
      if (!s.is_string()) throw ParseError(where + ": labels must be strings");
      m.labels.push_back(s.get<std::string>());
    }
  }

  try {
    m.validate();
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(where + ": " + e.what());
  }
  return m;
}

FiniteMetricMagma load_magma(const std::string& path) {
  return magma_from_json(load_json(path), path);
}

json magma_to_json(const FiniteMetricMagma& m) {
  json j;
  j["n"] = m.n();
  if (!m.labels.empty()) j["labels"] = m.labels;
  j["law"] = m.law;
  auto metric = json::array();
  for (const auto& row : m.metric.d) {
    auto r = json::array();
    for (const Rat& v : row) r.push_back(rat_to_string(v));
    metric.push_back(r);
  }
  j["metric"] = metric;
  return j;
}

FnOnX fn_from_json(const json& j, const std::string& where) {
  const int n = need_int(j, "n", where);
  const json& values = need(j, "values", where);
  if (!values.is_array() || (int)values.size() != n)
    throw ParseError(where + ": \"values\" must list n entries");
  FnOnX f;
  f.values.reserve(n);
  for (int i = 0; i < n; ++i) {
    const json& v = values.at(i);
    if (!v.is_string())
      throw ParseError(where + ": values[" + std::to_string(i) + "] must be a string");
    try {
      f.values.push_back(ext_from_string(v.get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError(where + ": values[" + std::to_string(i) + "]: " + e.what());
    }
  }
  try {
    f.validate();
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(where + ": " + e.what());
  }
  return f;
}

FnOnX load_fn(const std::string& path) { return fn_from_json(load_json(path), path); }

json fn_to_json(const FnOnX& f) {
  json j;
  j["n"] = f.size();
  auto arr = json::array();
  for (const ExtRat& v : f.values) arr.push_back(v.str());
  j["values"] = arr;
  return j;
}

SubspaceFn subspace_from_json(const json& j, const std::string& where) {
  SubspaceFn sf;
  const int n = need_int(j, "n", where);
  sf.metric.n = n;
  const json& metric = need(j, "metric", where);
  if (!metric.is_array() || (int)metric.size() != n)
    throw ParseError(where + ": \"metric\" must be an n x n array");
  sf.metric.d.resize(n);
  for (int i = 0; i < n; ++i) {
    const json& row = metric.at(i);
    if (!row.is_array() || (int)row.size() != n)
      throw ParseError(where + ": metric[" + std::to_string(i) + "] must have n entries");
    for (int k = 0; k < n; ++k)
      sf.metric.d[i].push_back(
          rat_field(row.at(k), where + ": metric[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  const json& subset = need(j, "subset", where);
  if (!subset.is_array()) throw ParseError(where + ": \"subset\" must be an array");
  for (const json& v : subset) {
    if (!v.is_number_integer()) throw ParseError(where + ": subset entries must be integers");
    sf.subset.push_back(v.get<int>());
  }
  const json& values = need(j, "values", where);
  if (!values.is_array() || values.size() != subset.size())
    throw ParseError(where + ": \"values\" must match \"subset\" in length");
  for (std::size_t i = 0; i < values.size(); ++i)
    sf.values.push_back(rat_field(values.at(i), where + ": values[" + std::to_string(i) + "]"));
  try {
    sf.validate();
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(where + ": " + e.what());
  }
  return sf;
}

SubspaceFn load_subspace(const std::string& path) {
  return subspace_from_json(load_json(path), path);
}

json subspace_to_json(const SubspaceFn& sf) {
  json j;
  j["n"] = sf.metric.n;
  auto metric = json::array();
  for (const auto& row : sf.metric.d) {
    auto r = json::array();
    for (const Rat& v : row) r.push_back(rat_to_string(v));
    metric.push_back(r);
  }
  j["metric"] = metric;
  j["subset"] = sf.subset;
  auto vals = json::array();
  for (const Rat& v : sf.values) vals.push_back(rat_to_string(v));
  j["values"] = vals;
  return j;
}

CyclicSeq cyclic_from_json(const json& j, const std::string& where) {
  const int p = need_int(j, "p", where);
  if (p <= 0) throw InvariantViolation(where + ": p must be positive");
  const json& values = need(j, "values", where);
  if (!values.is_array() || (int)values.size() != p)
    throw ParseError(where + ": \"values\" must list p entries");
  CyclicSeq u;
  for (int i = 0; i < p; ++i)
    u.values.push_back(rat_field(values.at(i), where + ": values[" + std::to_string(i) + "]"));
  return u;
}

CyclicSeq load_cyclic(const std::string& path) { return cyclic_from_json(load_json(path), path); }

json cyclic_to_json(const CyclicSeq& u) {
  json j;
  j["p"] = u.p();
  auto arr = json::array();
  for (const Rat& v : u.values) arr.push_back(rat_to_string(v));
  j["values"] = arr;
  return j;
}

CofiniteSeq cofinite_from_json(const json& j, const std::string& where) {
  CofiniteSeq u;
  u.dflt = rat_field(need(j, "default", where), where + ": default");
  if (j.contains("exceptions")) {
    const json& exc = j.at("exceptions");
    if (!exc.is_object()) throw ParseError(where + ": \"exceptions\" must map indices to values");
    for (const auto& [key, val] : exc.items()) {
      long long idx;
      try {
        std::size_t used = 0;
        idx = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError(where + ": exception key \"" + key + "\" is not an integer");
      }
      u.exc[idx] = rat_field(val, where + ": exceptions[" + key + "]");
    }
  }
  u.normalize();
  return u;
}

CofiniteSeq load_cofinite(const std::string& path) {
  return cofinite_from_json(load_json(path), path);
}

json cofinite_to_json(const CofiniteSeq& u) {
  json j;
  j["default"] = rat_to_string(u.dflt);
  auto exc = json::object();
  for (const auto& [i, v] : u.exc) exc[std::to_string(i)] = rat_to_string(v);
  j["exceptions"] = exc;
  return j;
}

PLKatetovFn pl_from_json(const json& j, const std::string& where) {
  const json& bps = need(j, "breakpoints", where);
  if (!bps.is_array() || bps.empty())
    throw ParseError(where + ": \"breakpoints\" must be a nonempty array of [x, v] pairs");
  std::vector<std::pair<Rat, Rat>> out;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const json& pair = bps.at(i);
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(where + ": breakpoints[" + std::to_string(i) + "] must be [x, v]");
    out.emplace_back(rat_field(pair.at(0), where + ": breakpoints[" + std::to_string(i) + "].x"),
                     rat_field(pair.at(1), where + ": breakpoints[" + std::to_string(i) + "].v"));
  }
  try {
    return PLKatetovFn(std::move(out));
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(where + ": " + e.what());
  }
}

PLKatetovFn load_pl(const std::string& path) { return pl_from_json(load_json(path), path); }

json pl_to_json(const PLKatetovFn& f) {
  json j;
  auto arr = json::array();
  for (const auto& [x, v] : f.breakpoints())
    arr.push_back(json::array({rat_to_string(x), rat_to_string(v)}));
  j["breakpoints"] = arr;
  return j;
}

}  // namespace infconv
