#include "triolex/workspace.hpp"

#include <fstream>
#include <sstream>

namespace triolex {

using nlohmann::json;

namespace {

struct UnknownObject : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T, class F>
std::map<std::string, T> collection(const json& j, const char* key, F parse) {
  std::map<std::string, T> out;
  auto it = j.find(key);
  if (it == j.end()) return out;
  if (!it->is_object()) throw SchemaError(std::string("'") + key + "' must map names to objects");
  for (const auto& [name, v] : it->items()) {
    try {
      out.emplace(name, parse(v));
    } catch (const SchemaError& e) {
      throw SchemaError(std::string(key) + "." + name + ": " + e.what());
    }
  }
  return out;
}

template <class T, class F>
json emit(const std::map<std::string, T>& m, F f) {
  json j = json::object();
  for (const auto& [name, v] : m) j[name] = f(v);
  return j;
}

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

json entry(const std::string& kind, const std::string& name, const Report& r) {
  json j = r.to_json();
  j["kind"] = kind;
  j["name"] = name;
  return j;
}

Report connection_report(const TriConnection& C, const TrioleAlgebra& alg) {
  const auto res = compat_residual(C, alg);
  for (std::size_t i = 0; i < res.size(); ++i)
    for (std::size_t B = 0; B < res[i].size(); ++B)
      for (std::size_t a = 0; a < res[i][B].size(); ++a)
        for (std::size_t b = 0; b < res[i][B][a].size(); ++b)
          if (!res[i][B][a][b].is_zero())
            return Report::fail("g-compatibility",
                                json{{"i", i}, {"B", B}, {"alpha", a}, {"beta", b}, {"residual", res[i][B][a][b].str()}},
                                "the connection does not preserve g");
  return Report::ok();
}

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) throw UnknownObject(std::string("no ") + kind + " named \"" + name + "\"");
  return it->second;
}

json nonzero_components(const std::vector<std::vector<PolyMat>>& R) {
  json out = json::array();
  for (std::size_t i = 0; i < R.size(); ++i)
    for (std::size_t j = i + 1; j < R[i].size(); ++j)
      if (!is_zero(R[i][j])) out.push_back(json{{"i", i}, {"j", j}, {"matrix", to_json(R[i][j])}});
  return out;
}

json symbol_report(const NamedDiffOp& d, const TrioleAlgebra& alg) {
  const TriDiffOp& D = d.op;
  const int k = d.order;
  json j{{"degree", D.degree}, {"order", k}};
  switch (D.degree) {
    case 0:
      j["DA"] = to_json(principal_symbol(D.DA, k));
      j["DP"] = to_json(principal_symbol(D.DP, k));
      j["DQ"] = to_json(principal_symbol(D.DQ, k));
      j["tensor_vanishes"] = symbol_deg0_vanishes(D, k, alg);
      break;
    case 1:
      j["DA1"] = to_json(principal_symbol(D.DA1, k));
      j["DP1"] = to_json(principal_symbol(D.DP1, k));
      j["tensor_vanishes"] = symbol_deg1_vanishes(D, k, alg);
      break;
    case 2: {
      const Deg2Symbol s = symbol_deg2_tensor(D, k, alg);
      json comps = json::array();
      for (const auto& [w, v] : s.tensor.comps) comps.push_back(json{{"word", w}, {"value", to_json(v)}});
      j["tensor"] = comps;
      j["symbol"] = to_json(s.symbol);
      j["round_trip"] = s.round_trip;
      break;
    }
  }
  return j;
}

json atiyah_report(const NamedDiffOp& d, const TrioleAlgebra& alg) {
  const AtiyahDecomposition a = atiyah_k_decompose(d.op, alg, d.order);
  return json{{"order", d.order},
              {"scalar", to_json(a.scalar)},
              {"kernel_P", to_json(a.kernel_P)},
              {"kernel_Q", to_json(a.kernel_Q)},
              {"kernel_order_ok", a.kernel_order_ok},
              {"g_relation", a.g_relation},
              {"reassembles", a.reassembles},
              {"valid", a.ok()},
              {"witness", a.witness}};
}

json poisson_report(const BiDerivation& Pi, const TrioleAlgebra& alg) {
  switch (Pi.degree) {
    case 0: {
      json j = poisson_check_deg0(Pi, alg).to_json();
      j["schouten"] = schouten_square(Pi, alg).to_json();
      j["biderivation"] = validate_biderivation(Pi, alg).to_json();
      return j;
    }
    case -1: return algebroid_from_deg_minus1(Pi, alg).to_json();
    case -2: return algebroid_from_deg_minus2(Pi, alg).to_json();
  }
  throw UnknownObject("poisson-check handles brackets of degree 0, -1 and -2");
}

json bracket_report(const Workspace& ws, const std::string& target) {
  const auto comma = target.find(',');
  if (comma == std::string::npos) throw UnknownObject("bracket target must be \"X,Y\"");
  const GradedDerivation& X = lookup(ws.derivations, target.substr(0, comma), "derivation");
  const GradedDerivation& Y = lookup(ws.derivations, target.substr(comma + 1), "derivation");
  if (!admissible_pair(X.degree, Y.degree) || X.degree + Y.degree > 2 || X.degree + Y.degree < -1)
    throw UnknownObject("the bracket of these degrees leaves D(T)");
  const GradedDerivation Z = bracket(X, Y, ws.algebra);
  return json{{"bracket", to_json(Z)},
              {"validation", validate_derivation(Z, ws.algebra).to_json()},
              {"evaluation", check_bracket_against_evaluation(X, Y, ws.algebra).to_json()}};
}

}  // namespace

Workspace workspace_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("workspace must be a JSON object");
  auto sv = j.find("schema");
  if (sv == j.end() || !sv->is_string() || sv->get<std::string>() != kWorkspaceSchema)
    throw SchemaError(std::string("workspace schema tag must be \"") + kWorkspaceSchema + "\"");
  auto at = j.find("algebra");
  if (at == j.end()) throw SchemaError("workspace has no algebra");
  Workspace ws;
  try {
    ws.algebra = algebra_from_json(*at);
  } catch (const SchemaError& e) {
    throw SchemaError(std::string("algebra: ") + e.what());
  }
  const TrioleAlgebra& alg = ws.algebra;
  ws.derivations = collection<GradedDerivation>(j, "derivations", [&](const json& v) { return graded_derivation_from_json(v, alg); });
  ws.connections = collection<TriConnection>(j, "connections", [&](const json& v) { return connection_from_json(v, alg); });
  ws.biderivations = collection<BiDerivation>(j, "biderivations", [&](const json& v) { return biderivation_from_json(v, alg); });
  ws.diffops = collection<NamedDiffOp>(j, "diffops", [&](const json& v) {
    auto o = v.find("order");
    if (o == v.end() || !o->is_number_integer() || o->get<int>() < 0)
      throw SchemaError("differential operator needs a nonnegative integer 'order'");
    auto op = v.find("op");
    if (op == v.end()) throw SchemaError("differential operator needs 'op'");
    return NamedDiffOp{o->get<int>(), tridiffop_from_json(*op, alg)};
  });
  ws.modules = collection<TruncatedTriModule>(j, "modules", [&](const json& v) { return module_from_json(v, alg); });
  ws.morphisms = collection<NamedMorphism>(j, "morphisms", [&](const json& v) {
    NamedMorphism m;
    auto t = v.find("target");
    m.target = t == v.end() ? alg : algebra_from_json(*t);
    if (m.target.n != alg.n) throw SchemaError("morphism target must share the coordinate ring");
    m.psi = morphism_from_json(v, alg.n);
    if (static_cast<int>(m.psi.psi1.size()) != m.target.mP || static_cast<int>(m.psi.psi2.size()) != m.target.mQ)
      throw SchemaError("morphism rows do not match the target ranks");
    for (const auto& r : m.psi.psi1)
      if (static_cast<int>(r.size()) != alg.mP) throw SchemaError("psi1 columns do not match mP");
    for (const auto& r : m.psi.psi2)
      if (static_cast<int>(r.size()) != alg.mQ) throw SchemaError("psi2 columns do not match mQ");
    return m;
  });
  ws.tensors = collection<NamedTensor>(j, "tensors", [&](const json& v) {
    NamedTensor t;
    if (!v.contains("p") || !v.contains("q") || !v.contains("xi")) throw SchemaError("tensor needs p, q and xi");
    t.p = v["p"].get<int>();
    t.q = v["q"].get<int>();
    if (t.p < 0 || t.q < 0 || t.p + t.q > 3) throw SchemaError("tensor valence must satisfy p + q <= 3");
    const RatMat row = ratmat_from_json(json::array({v["xi"]}));
    t.xi = row[0];
    if (static_cast<int>(t.xi.size()) != ipow(alg.mP, t.p + t.q)) throw SchemaError("tensor has the wrong number of entries");
    return t;
  });
  return ws;
}

json to_json(const Workspace& ws) {
  json j{{"schema", kWorkspaceSchema}, {"algebra", to_json(ws.algebra)}};
  j["derivations"] = emit(ws.derivations, [](const GradedDerivation& X) { return to_json(X); });
  j["connections"] = emit(ws.connections, [](const TriConnection& C) { return to_json(C); });
  j["biderivations"] = emit(ws.biderivations, [](const BiDerivation& P) { return to_json(P); });
  j["diffops"] = emit(ws.diffops, [](const NamedDiffOp& d) { return json{{"order", d.order}, {"op", to_json(d.op)}}; });
  j["modules"] = emit(ws.modules, [](const TruncatedTriModule& R) { return to_json(R); });
  j["morphisms"] = emit(ws.morphisms, [](const NamedMorphism& m) {
    json v = to_json(m.psi);
    v["target"] = to_json(m.target);
    return v;
  });
  j["tensors"] = emit(ws.tensors, [](const NamedTensor& t) {
    return json{{"p", t.p}, {"q", t.q}, {"xi", to_json(RatMat{t.xi})[0]}};
  });
  return j;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return workspace_from_json(j);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("schema error: ") + e.what());
  }
}

CommandResult validate_workspace(const Workspace& ws) {
  const TrioleAlgebra& alg = ws.algebra;
  CommandResult out;
  const Report ar = validate_algebra(alg);
  json objects = json::array();
  bool all = ar.valid;
  auto add = [&](json e) {
    all = all && e["valid"].get<bool>();
    objects.push_back(std::move(e));
  };
  for (const auto& [name, X] : ws.derivations) add(entry("derivation", name, validate_derivation(X, alg)));
  for (const auto& [name, C] : ws.connections) add(entry("connection", name, connection_report(C, alg)));
  for (const auto& [name, P] : ws.biderivations) add(entry("biderivation", name, validate_biderivation(P, alg)));
  for (const auto& [name, d] : ws.diffops) add(entry("diffop", name, validate_diffop(d.op, alg, d.order)));
  for (const auto& [name, R] : ws.modules) add(entry("module", name, validate_truncated_module(R, alg)));
  for (const auto& [name, m] : ws.morphisms) {
    const MorphismReport r = validate_morphism(m.psi, alg, m.target);
    json e = entry("morphism", name, r.report);
    e["class"] = to_string(r.kind);
    add(std::move(e));
  }
  for (const auto& [name, t] : ws.tensors) add(entry("tensor", name, Report::ok()));
  out.report = json{{"algebra", ar.to_json()}, {"objects", objects}, {"valid", all}};
  out.exit_code = all ? kExitOk : kExitInvalid;
  return out;
}

CommandResult analyze_workspace(const Workspace& ws, const std::string& command, const std::string& target, int dmax) {
  const TrioleAlgebra& alg = ws.algebra;
  CommandResult out;
  json result;
  try {
    if (command == "curvature") {
      const CurvatureTensor R = curvature(lookup(ws.connections, target, "connection"));
      result = json{{"RP", nonzero_components(R.RP)}, {"RQ", nonzero_components(R.RQ)}, {"zero", R.is_zero()}};
    } else if (command == "flat-check") {
      result = flat_check(lookup(ws.connections, target, "connection"), alg).to_json();
    } else if (command == "poisson-check") {
      result = poisson_report(lookup(ws.biderivations, target, "biderivation"), alg);
    } else if (command == "symbol") {
      result = symbol_report(lookup(ws.diffops, target, "differential operator"), alg);
    } else if (command == "atiyah") {
      const NamedDiffOp& d = lookup(ws.diffops, target, "differential operator");
      if (d.op.degree != 0) throw UnknownObject("atiyah needs a degree 0 operator");
      result = atiyah_report(d, alg);
    } else if (command == "h0") {
      const auto basis = nabla_constant_sections(lookup(ws.connections, target, "connection").Gamma, dmax);
      json b = json::array();
      for (const auto& v : basis) b.push_back(to_json(v));
      result = json{{"dmax", dmax}, {"dimension", basis.size()}, {"basis", b}};
    } else if (command == "bracket") {
      result = bracket_report(ws, target);
    } else if (command == "gauge") {
      const NamedTensor& t = lookup(ws.tensors, target, "tensor");
      result = gauge_structure_search(t.xi, alg.mP, t.p, t.q).to_json();
    } else {
      throw UnknownObject("unknown command \"" + command + "\"");
    }
  } catch (const UnknownObject& e) {
    out.exit_code = kExitInvalid;
    out.diagnostic = e.what();
    out.report = json{{"command", command}, {"target", target}, {"error", e.what()}};
    return out;
  } catch (const std::invalid_argument& e) {
    out.exit_code = kExitInvalid;
    out.diagnostic = e.what();
    out.report = json{{"command", command}, {"target", target}, {"error", e.what()}};
    return out;
  }
  out.report = json{{"command", command}, {"target", target}, {"result", result}};
  return out;
}

CommandResult cmd_validate(const std::string& path) {
  try {
    return validate_workspace(load_workspace(path));
  } catch (const SchemaError& e) {
    return CommandResult{kExitSchema, json{{"error", e.what()}, {"valid", false}}, e.what()};
  }
}

CommandResult cmd_analyze(const std::string& path, const std::string& command, const std::string& target, int dmax) {
  try {
    return analyze_workspace(load_workspace(path), command, target, dmax);
  } catch (const SchemaError& e) {
    return CommandResult{kExitSchema, json{{"error", e.what()}}, e.what()};
  }
}

std::string render(const json& report, bool pretty) { return pretty ? report.dump(2) + "\n" : report.dump() + "\n"; }

}  // namespace triolex
