#pragma once

#include <map>
#include <string>

#include "triolex/serialize.hpp"

namespace triolex {

inline constexpr const char* kWorkspaceSchema = "triolex-workspace/1";

struct NamedDiffOp {
  int order = 0;
  TriDiffOp op;
};

struct NamedMorphism {
  TrioleMorphism psi;
  TrioleAlgebra target;
};

// a constant tensor of valence (p, q) on P, entries in row-major slot order
struct NamedTensor {
  int p = 0, q = 0;
  RatVec xi;
};

struct Workspace {
  TrioleAlgebra algebra;
  std::map<std::string, GradedDerivation> derivations;
  std::map<std::string, TriConnection> connections;
  std::map<std::string, BiDerivation> biderivations;
  std::map<std::string, NamedDiffOp> diffops;
  std::map<std::string, TruncatedTriModule> modules;
  std::map<std::string, NamedMorphism> morphisms;
  std::map<std::string, NamedTensor> tensors;
};

Workspace workspace_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Workspace& ws);
// reads and parses a file; SchemaError on any I/O, syntax or shape problem
Workspace load_workspace(const std::string& path);

enum ExitCode { kExitOk = 0, kExitInvalid = 1, kExitSchema = 2 };

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string diagnostic;  // for stderr
};

CommandResult validate_workspace(const Workspace& ws);
CommandResult analyze_workspace(const Workspace& ws, const std::string& command, const std::string& target, int dmax);

CommandResult cmd_validate(const std::string& path);
CommandResult cmd_analyze(const std::string& path, const std::string& command, const std::string& target, int dmax);

std::string render(const nlohmann::json& report, bool pretty);

}  // namespace triolex
