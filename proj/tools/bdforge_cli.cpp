#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "bdforge/bdforge.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "@path" reads the file, anything else is taken literally
std::string resolve(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1), std::ios::binary);
  if (!in) throw InputError("cannot read " + value.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> resolve(const std::optional<std::string>& value) {
  if (!value) return std::nullopt;
  return resolve(*value);
}

const char* c_str(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

int exit_code(bdf_status s) {
  switch (s) {
    case BDF_OK: return kExitPass;
    case BDF_VERIFICATION_FAILED: return kExitFailed;
    case BDF_INVALID_ARGUMENT:
    case BDF_UNSUPPORTED_TYPE:
    case BDF_PARSE_ERROR: return kExitInvalid;
    case BDF_INTERNAL_ERROR: return kExitInternal;
  }
  return kExitInternal;
}

struct Output {
  std::string path;

  int write(bdf_status status, char* json) const {
    std::unique_ptr<char, void (*)(char*)> owned(json, bdf_free_string);
    if (status != BDF_OK && status != BDF_VERIFICATION_FAILED) {
      std::cerr << "error: " << bdf_status_name(status) << ": " << bdf_last_error_message() << "\n";
      return exit_code(status);
    }
    if (status == BDF_VERIFICATION_FAILED) std::cerr << "failed: " << bdf_last_error_message() << "\n";
    if (path.empty()) {
      std::cout << json << "\n";
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitInvalid;
      }
      out << json << "\n";
    }
    return exit_code(status);
  }
};

struct AlgebraArgs {
  std::string type;
  int rank = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--type", type, "Root system type: A, B, C, D or G")->required();
    cmd->add_option("--rank", rank, "Rank")->required();
  }
};

// runs f on a freshly created algebra
template <class F>
int with_algebra(const AlgebraArgs& a, const Output& out, F&& f) {
  bdf_algebra* g = nullptr;
  const bdf_status s = bdf_algebra_create(a.type.c_str(), a.rank, &g);
  if (s != BDF_OK) return out.write(s, nullptr);
  std::unique_ptr<bdf_algebra, void (*)(bdf_algebra*)> owned(g, bdf_algebra_destroy);
  char* json = nullptr;
  const bdf_status r = f(g, &json);
  return out.write(r, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belavin-Drinfeld r-matrices, Lie bialgebras and their twisted forms"};
  app.require_subcommand(1);
  Output out;
  app.add_option("-o,--output", out.path, "Write the JSON report to a file instead of stdout");

  std::function<int()> action;

  AlgebraArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List admissible triples");
  enumerate_args.attach(enumerate);
  enumerate->callback([&] {
    action = [&] { return with_algebra(enumerate_args, out, bdf_enumerate_triples); };
  });

  AlgebraArgs basis_args;
  auto* basis = app.add_subcommand("basis", "Chevalley basis labels and weights");
  basis_args.attach(basis);
  basis->callback([&] { action = [&] { return with_algebra(basis_args, out, bdf_basis_json); }; });

  AlgebraArgs casimir_args;
  auto* casimir = app.add_subcommand("casimir", "Casimir element and its Cartan part");
  casimir_args.attach(casimir);
  casimir->callback([&] { action = [&] { return with_algebra(casimir_args, out, bdf_casimir_json); }; });

  auto* bd = app.add_subcommand("bd", "Belavin-Drinfeld r-matrices");
  bd->require_subcommand(1);
  AlgebraArgs build_args;
  std::string build_triple;
  std::optional<std::string> build_rh;
  auto* build = bd->add_subcommand("build", "Build r_BD for a triple");
  build_args.attach(build);
  build->add_option("--triple", build_triple, "Triple JSON or @file")->required();
  build->add_option("--rh", build_rh, "Cartan part as tensor JSON or @file");
  build->callback([&] {
    action = [&] {
      const std::string t = resolve(build_triple);
      const auto rh = resolve(build_rh);
      return with_algebra(build_args, out, [&](bdf_algebra* g, char** json) {
        return bdf_bd_build(g, t.c_str(), c_str(rh), json);
      });
    };
  });

  AlgebraArgs verify_args;
  std::string verify_r;
  auto* verify = app.add_subcommand("verify", "Check whether a tensor is an r-matrix");
  verify_args.attach(verify);
  verify->add_option("--r", verify_r, "Tensor JSON or @file")->required();
  verify->callback([&] {
    action = [&] {
      const std::string r = resolve(verify_r);
      return with_algebra(verify_args, out,
                          [&](bdf_algebra* g, char** json) { return bdf_verify_rmatrix(g, r.c_str(), json); });
    };
  });

  auto* bialg = app.add_subcommand("bialg", "Lie bialgebra structures");
  bialg->require_subcommand(1);
  AlgebraArgs bialg_args;
  std::string bialg_r;
  auto* bialg_verify = bialg->add_subcommand("verify", "Check the axioms of the coboundary cobracket of r");
  bialg_args.attach(bialg_verify);
  bialg_verify->add_option("--r", bialg_r, "Tensor JSON or @file")->required();
  bialg_verify->callback([&] {
    action = [&] {
      const std::string r = resolve(bialg_r);
      return with_algebra(bialg_args, out,
                          [&](bdf_algebra* g, char** json) { return bdf_verify_bialgebra(g, r.c_str(), json); });
    };
  });

  auto* twist = app.add_subcommand("twist", "Diagram automorphisms and Galois cocycles");
  twist->require_subcommand(1);
  AlgebraArgs pi_args;
  std::string pi_triple;
  std::optional<std::string> pi_rh;
  auto* find_pi = twist->add_subcommand("find-pi", "Find pi with (chi pi^ (x) chi pi^)(r) = flip(r)");
  pi_args.attach(find_pi);
  find_pi->add_option("--triple", pi_triple, "Triple JSON or @file")->required();
  find_pi->add_option("--rh", pi_rh, "Cartan part as tensor JSON or @file");
  find_pi->callback([&] {
    action = [&] {
      const std::string t = resolve(pi_triple);
      const auto rh = resolve(pi_rh);
      return with_algebra(pi_args, out, [&](bdf_algebra* g, char** json) {
        return bdf_find_pi(g, t.c_str(), c_str(rh), json);
      });
    };
  });

  AlgebraArgs cocycle_args;
  std::string cocycle_triple;
  std::optional<std::string> cocycle_rh;
  std::optional<std::string> cocycle_pi;
  long cocycle_d = 5;
  auto* cocycle = twist->add_subcommand("cocycle", "Galois cocycle u = chi pi^ over Q(sqrt d)");
  cocycle_args.attach(cocycle);
  cocycle->add_option("--triple", cocycle_triple, "Triple JSON or @file")->required();
  cocycle->add_option("--rh", cocycle_rh, "Cartan part as tensor JSON or @file");
  cocycle->add_option("--pi", cocycle_pi, "Diagram automorphism JSON or @file (default: find-pi)");
  cocycle->add_option("--d", cocycle_d, "Squarefree integer d")->required();
  cocycle->callback([&] {
    action = [&] {
      const std::string t = resolve(cocycle_triple);
      const auto rh = resolve(cocycle_rh);
      const auto pi = resolve(cocycle_pi);
      return with_algebra(cocycle_args, out, [&](bdf_algebra* g, char** json) {
        return bdf_twist_cocycle(g, t.c_str(), c_str(rh), cocycle_d, c_str(pi), json);
      });
    };
  });

  auto* descend = app.add_subcommand("descend", "Galois descent");
  descend->require_subcommand(1);
  int sun_n = 0;
  long sun_d = 5;
  auto* sun = descend->add_subcommand("sun", "Descend sqrt(d) times the standard cobracket to su_n(Q, d)");
  sun->add_option("--n", sun_n, "Matrix size, 2 to 4")->required();
  sun->add_option("--d", sun_d, "Squarefree integer d")->required();
  sun->callback([&] {
    action = [&] {
      char* json = nullptr;
      const bdf_status s = bdf_descend_sun(sun_n, sun_d, &json);
      return out.write(s, json);
    };
  });

  std::string suite_type;
  int suite_rank = 0;
  long suite_d = 5;
  int suite_threads = 0;
  auto* suite = app.add_subcommand("full-suite", "Run every check for one type and rank");
  suite->add_option("--type", suite_type, "Root system type")->required();
  suite->add_option("--rank", suite_rank, "Rank")->required();
  suite->add_option("--d", suite_d, "Squarefree integer d for the twisting checks");
  suite->add_option("--threads", suite_threads, "Worker threads (0: hardware concurrency)");
  suite->callback([&] {
    action = [&] {
      char* json = nullptr;
      const bdf_status s = bdf_full_suite(suite_type.c_str(), suite_rank, suite_d, suite_threads, &json);
      return out.write(s, json);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
