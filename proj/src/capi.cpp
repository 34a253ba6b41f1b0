#include "hopfrt/hopfrt.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "hopfrt/butcher.hpp"
#include "hopfrt/cm_model.hpp"
#include "hopfrt/errors.hpp"
#include "hopfrt/growth.hpp"
#include "hopfrt/hopf.hpp"
#include "hopfrt/verify.hpp"

struct hopfrt_lincomb {
  hopfrt::LinComb value;
};
struct hopfrt_tensor {
  hopfrt::Tensor2 value;
};
struct hopfrt_field {
  hopfrt::VectorField value;
};

namespace {

thread_local std::string g_error;
thread_local long g_position = -1;

template <class F>
hopfrt_status guarded(F&& f) {
  g_error.clear();
  g_position = -1;
  try {
    f();
    return HOPFRT_OK;
  } catch (const hopfrt::ParseError& e) {
    g_error = e.what();
    g_position = static_cast<long>(e.position());
    return HOPFRT_ERR_PARSE;
  } catch (const hopfrt::TruncationError& e) {
    g_error = e.what();
    return HOPFRT_ERR_TRUNCATION;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return HOPFRT_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_error = e.what();
    return HOPFRT_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_error = e.what();
    return HOPFRT_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return HOPFRT_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is null");
}

std::vector<hopfrt::RootedTree> parse_tree_list(const std::string& csv) {
  std::vector<hopfrt::RootedTree> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    try {
      out.push_back(hopfrt::parse_tree(csv.substr(start, end - start)));
    } catch (const hopfrt::ParseError& e) {
      throw hopfrt::ParseError(e.message(), start + e.position());
    }
    start = end + 1;
  }
  return out;
}

// Prefixes parse errors with the name of the offending input.
template <class F>
auto labelled(const char* name, F&& f) {
  try {
    return f();
  } catch (const hopfrt::ParseError& e) {
    throw hopfrt::ParseError(std::string(name) + ": " + e.message(), e.position());
  }
}

}  // namespace

extern "C" {

const char* hopfrt_last_error(void) { return g_error.c_str(); }

long hopfrt_last_error_position(void) { return g_position; }

void hopfrt_string_free(char* s) { std::free(s); }

hopfrt_status hopfrt_lincomb_parse(const char* text, hopfrt_lincomb** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new hopfrt_lincomb{hopfrt::parse_lincomb(text)};
  });
}

hopfrt_status hopfrt_lincomb_render(const hopfrt_lincomb* x, char** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = dup(hopfrt::render(x->value));
  });
}

void hopfrt_lincomb_free(hopfrt_lincomb* x) { delete x; }

hopfrt_status hopfrt_tensor_render(const hopfrt_tensor* x, char** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = dup(hopfrt::render(x->value));
  });
}

void hopfrt_tensor_free(hopfrt_tensor* x) { delete x; }

hopfrt_status hopfrt_enumerate_trees(size_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    std::string s;
    for (const auto& t : hopfrt::enumerate_trees(n)) s += t.str() + "\n";
    *out = dup(s);
  });
}

hopfrt_status hopfrt_coproduct(const hopfrt_lincomb* x, hopfrt_tensor** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = new hopfrt_tensor{hopfrt::coproduct(x->value)};
  });
}

hopfrt_status hopfrt_antipode(const hopfrt_lincomb* x, hopfrt_lincomb** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = new hopfrt_lincomb{hopfrt::antipode(x->value)};
  });
}

hopfrt_status hopfrt_multiply(const hopfrt_lincomb* a, const hopfrt_lincomb* b, hopfrt_lincomb** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new hopfrt_lincomb{hopfrt::multiply(a->value, b->value)};
  });
}

hopfrt_status hopfrt_grow(const char* by, const hopfrt_lincomb* x, hopfrt_lincomb** out) {
  return guarded([&] {
    require(by, "by");
    require(x, "x");
    require(out, "out");
    const hopfrt::Forest grower = hopfrt::parse_forest(by);
    if (grower.trees().size() > 1) throw std::invalid_argument("growth needs a single tree or 1");
    *out = new hopfrt_lincomb{hopfrt::natural_growth(grower, x->value)};
  });
}

hopfrt_status hopfrt_delta_k(size_t k, hopfrt_lincomb** out) {
  return guarded([&] {
    require(out, "out");
    if (k == 0) throw std::invalid_argument("delta_k needs k >= 1");
    *out = new hopfrt_lincomb{hopfrt::delta_k(k)};
  });
}

hopfrt_status hopfrt_decompose(const char* tree, char** out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    *out = dup(hopfrt::decompose(hopfrt::parse_tree(tree)).str());
  });
}

hopfrt_status hopfrt_subalgebra(const char* generators, size_t max_degree, int check_closure, char** out,
                                int* closed) {
  return guarded([&] {
    require(generators, "generators");
    require(out, "out");
    const auto gens = parse_tree_list(generators);
    const hopfrt::GradedBasis basis = hopfrt::generate_subalgebra(gens, max_degree);
    std::ostringstream os;
    for (std::size_t d = 0; d < basis.by_degree.size(); ++d) {
      os << "degree " << d << ": dimension " << basis.by_degree[d].size() << "\n";
      for (const auto& x : basis.by_degree[d]) os << "  " << hopfrt::render(x) << "\n";
    }
    int ok = 1;
    if (check_closure) {
      const hopfrt::ClosureReport r = hopfrt::closure_check(basis);
      ok = r.closed ? 1 : 0;
      if (r.closed) {
        os << "closure: closed under the coproduct up to degree " << max_degree << "\n";
      } else {
        os << "closure: violated by " << hopfrt::render(*r.violating_element) << "; escaping term "
           << r.violating_term << "\n";
      }
    }
    if (closed) *closed = ok;
    *out = dup(os.str());
  });
}

hopfrt_status hopfrt_field_parse(const char* text, int order, hopfrt_field** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
    *out = new hopfrt_field{hopfrt::parse_vector_field(text, order)};
  });
}

void hopfrt_field_free(hopfrt_field* f) { delete f; }

int hopfrt_field_order(const hopfrt_field* f) { return f ? f->value.order() : -1; }

hopfrt_status hopfrt_butcher_tree(const hopfrt_field* f, const char* tree, char** out) {
  return guarded([&] {
    require(f, "field");
    require(tree, "tree");
    require(out, "out");
    const hopfrt::RootedTree t = hopfrt::parse_tree(tree);
    const auto phi = hopfrt::elementary_differential(t, f->value);
    const auto vars = f->value.variable_names();
    std::string s;
    for (std::size_t i = 0; i < phi.size(); ++i)
      s += "phi^" + std::to_string(i + 1) + "(" + t.str() + ") = " + phi[i].str(vars) + "\n";
    *out = dup(s);
  });
}

hopfrt_status hopfrt_butcher_taylor(const hopfrt_field* f, int K, char** out) {
  return guarded([&] {
    require(f, "field");
    require(out, "out");
    const auto derivs = hopfrt::taylor_derivatives(f->value, K);
    std::string s;
    for (std::size_t k = 0; k < derivs.size(); ++k) {
      s += "k=" + std::to_string(k) + ":";
      for (std::size_t i = 0; i < derivs[k].size(); ++i)
        s += std::string(i ? "," : "") + " x" + std::to_string(i + 1) + " = " + hopfrt::to_string(derivs[k][i]);
      s += "\n";
    }
    *out = dup(s);
  });
}

hopfrt_status hopfrt_cm_gamma(const char* psi, const char* gamma, const char* tree, int order, char** out) {
  return guarded([&] {
    require(psi, "psi");
    require(gamma, "Gamma");
    require(tree, "tree");
    require(out, "out");
    if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
    const hopfrt::RootedTree t = labelled("tree", [&] { return hopfrt::parse_tree(tree); });
    // Inputs are exact polynomials: carry enough extra orders to cover ψ″/ψ′
    // and the x-derivatives taken by φ_t.
    const int work = order + static_cast<int>(t.vertex_count()) + 1;
    const hopfrt::FormalDiffeo p(labelled("psi", [&] { return hopfrt::parse_xseries(psi, work); }));
    hopfrt::FrameModel model(labelled("Gamma", [&] { return hopfrt::parse_xseries(gamma, work); }));
    const hopfrt::FrameFunction g = model.gamma_t(t, p);
    if (g.order() < order) throw hopfrt::TruncationError("gamma_t lost precision", order);
    *out = dup(g.truncated(order).str() + "\n");
  });
}

hopfrt_status hopfrt_verify(const char* suite, size_t max_degree, uint64_t seed, int json, char** out, int* passed) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    const hopfrt::VerifyReport r = hopfrt::run_suite(suite, max_degree, seed);
    if (passed) *passed = r.all_passed() ? 1 : 0;
    *out = dup(json ? r.to_json() + "\n" : r.to_text());
  });
}

}  // extern "C"
