#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hopfrt/hopfrt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
};

// Reports a failed call, pointing at the offending character of `input`.
[[noreturn]] void fail(const std::string& what, const std::string& input = "") {
  std::cerr << "error: " << what << ": " << hopfrt_last_error() << "\n";
  const long pos = hopfrt_last_error_position();
  if (pos >= 0 && !input.empty() && input.find('\n') == std::string::npos) {
    std::cerr << "  " << input << "\n  " << std::string(static_cast<std::size_t>(pos), ' ') << "^\n";
  }
  throw Failure{kExitUsage};
}

void check(hopfrt_status s, const std::string& what, const std::string& input = "") {
  if (s != HOPFRT_OK) fail(what, input);
}

std::string take(char* s) {
  std::string out(s ? s : "");
  hopfrt_string_free(s);
  return out;
}

class Lincomb {
 public:
  explicit Lincomb(const std::string& text) {
    check(hopfrt_lincomb_parse(text.c_str(), &p_), "cannot parse expression", text);
  }
  explicit Lincomb(hopfrt_lincomb* p) : p_(p) {}
  Lincomb(const Lincomb&) = delete;
  Lincomb& operator=(const Lincomb&) = delete;
  ~Lincomb() { hopfrt_lincomb_free(p_); }

  const hopfrt_lincomb* get() const { return p_; }
  std::string str() const {
    char* s = nullptr;
    check(hopfrt_lincomb_render(p_, &s), "render");
    return take(s);
  }

 private:
  hopfrt_lincomb* p_ = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{kExitUsage};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted-tree Hopf algebra, growth operators, Butcher series and the frame-bundle model"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");

  std::ostringstream out;
  int status = kExitOk;

  std::size_t vertices = 0;
  auto* trees = app.add_subcommand("trees", "Enumerate rooted trees");
  trees->add_option("--vertices", vertices, "Vertex count")->required();

  std::string expr, expr2, by;
  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of an expression");
  coproduct->add_option("EXPR", expr)->required();
  auto* antipode = app.add_subcommand("antipode", "Antipode of an expression");
  antipode->add_option("EXPR", expr)->required();
  auto* multiply = app.add_subcommand("multiply", "Product of two expressions");
  multiply->add_option("EXPR", expr)->required();
  multiply->add_option("EXPR2", expr2)->required();
  auto* grow = app.add_subcommand("grow", "Generalized natural growth N_t");
  grow->add_option("--by", by, "Tree to graft, or 1")->required();
  grow->add_option("EXPR", expr)->required();

  std::size_t k = 0;
  auto* delta = app.add_subcommand("delta-k", "delta_k = N^{k-1}(.)");
  delta->add_option("K", k)->required()->check(CLI::PositiveNumber);

  std::string tree;
  auto* decompose = app.add_subcommand("decompose", "Write a tree as iterated growth");
  decompose->add_option("TREE", tree)->required();

  std::string gens;
  std::size_t max_degree = 5;
  bool check_closure = false;
  auto* subalgebra = app.add_subcommand("subalgebra", "Basis of the subalgebra A_S");
  subalgebra->add_option("--gens", gens, "Comma separated trees")->required();
  subalgebra->add_option("--max-degree", max_degree)->capture_default_str();
  subalgebra->add_flag("--check-closure", check_closure);

  std::string field_path;
  int taylor = -1;
  int butcher_order = -1;
  auto* butcher = app.add_subcommand("butcher", "Elementary differentials and Taylor derivatives");
  butcher->add_option("--field", field_path, "Vector field file")->required()->check(CLI::ExistingFile);
  auto* tree_opt = butcher->add_option("--tree", tree, "Tree for phi(t)");
  auto* taylor_opt = butcher->add_option("--taylor", taylor, "Deepest Taylor order")->check(CLI::NonNegativeNumber);
  tree_opt->excludes(taylor_opt);
  butcher->add_option("--order", butcher_order, "Truncation order of the field");

  std::string psi, gamma;
  int order = 8;
  auto* cm = app.add_subcommand("cm", "Frame-bundle model");
  cm->require_subcommand(1);
  cm->fallthrough();
  auto* cm_gamma = cm->add_subcommand("gamma", "gamma_t(psi)");
  cm_gamma->add_option("--psi", psi)->required();
  cm_gamma->add_option("--Gamma", gamma)->required();
  cm_gamma->add_option("--tree", tree)->required();
  cm_gamma->add_option("--order", order)->capture_default_str()->check(CLI::NonNegativeNumber);

  std::string suite;
  std::uint64_t seed = 0;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"hopf", "growth", "butcher", "cm", "all"}));
  verify->add_option("--max-degree", max_degree)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    char* s = nullptr;
    if (*trees) {
      check(hopfrt_enumerate_trees(vertices, &s), "trees");
      out << take(s);
    } else if (*coproduct) {
      Lincomb x(expr);
      hopfrt_tensor* t = nullptr;
      check(hopfrt_coproduct(x.get(), &t), "coproduct");
      const hopfrt_status st = hopfrt_tensor_render(t, &s);
      hopfrt_tensor_free(t);
      check(st, "render");
      out << take(s) << "\n";
    } else if (*antipode) {
      Lincomb x(expr);
      hopfrt_lincomb* r = nullptr;
      check(hopfrt_antipode(x.get(), &r), "antipode");
      out << Lincomb(r).str() << "\n";
    } else if (*multiply) {
      Lincomb a(expr), b(expr2);
      hopfrt_lincomb* r = nullptr;
      check(hopfrt_multiply(a.get(), b.get(), &r), "multiply");
      out << Lincomb(r).str() << "\n";
    } else if (*grow) {
      Lincomb x(expr);
      hopfrt_lincomb* r = nullptr;
      check(hopfrt_grow(by.c_str(), x.get(), &r), "cannot grow by --by", by);
      out << Lincomb(r).str() << "\n";
    } else if (*delta) {
      hopfrt_lincomb* r = nullptr;
      check(hopfrt_delta_k(k, &r), "delta-k");
      out << Lincomb(r).str() << "\n";
    } else if (*decompose) {
      check(hopfrt_decompose(tree.c_str(), &s), "cannot parse tree", tree);
      out << take(s) << "\n";
    } else if (*subalgebra) {
      int closed = 1;
      check(hopfrt_subalgebra(gens.c_str(), max_degree, check_closure ? 1 : 0, &s, &closed), "subalgebra", gens);
      out << take(s);
      if (!closed) status = kExitFailed;
    } else if (*butcher) {
      if (tree.empty() && taylor < 0) {
        std::cerr << "error: butcher needs --tree or --taylor\n";
        return kExitUsage;
      }
      int field_order = butcher_order;
      if (field_order < 0) {
        field_order = taylor >= 0 ? taylor + 1 : static_cast<int>(std::count(tree.begin(), tree.end(), '['));
      }
      const std::string text = read_file(field_path);
      hopfrt_field* f = nullptr;
      check(hopfrt_field_parse(text.c_str(), field_order, &f), "cannot parse field " + field_path);
      const hopfrt_status st =
          taylor >= 0 ? hopfrt_butcher_taylor(f, taylor, &s) : hopfrt_butcher_tree(f, tree.c_str(), &s);
      hopfrt_field_free(f);
      check(st, "butcher", taylor >= 0 ? "" : tree);
      out << take(s);
    } else if (*cm_gamma) {
      const hopfrt_status st = hopfrt_cm_gamma(psi.c_str(), gamma.c_str(), tree.c_str(), order, &s);
      if (st != HOPFRT_OK) {
        const std::string msg = hopfrt_last_error();
        std::string input;
        if (st == HOPFRT_ERR_PARSE) {
          if (msg.rfind("psi:", 0) == 0) input = psi;
          else if (msg.rfind("Gamma:", 0) == 0) input = gamma;
          else if (msg.rfind("tree:", 0) == 0) input = tree;
        }
        fail("cm gamma", input);
      }
      out << take(s);
    } else if (*verify) {
      int passed = 0;
      check(hopfrt_verify(suite.c_str(), max_degree, seed, json ? 1 : 0, &s, &passed), "verify");
      out << take(s);
      if (!passed) status = kExitFailed;
    }
  } catch (const Failure& f) {
    return f.code;
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << out.str();
  }
  return status;
}
