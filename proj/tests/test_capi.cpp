#include "doctest.h"

#include <string>

#include "hopfrt/hopfrt.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
  std::string out(s);
  hopfrt_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api round trip") {
  hopfrt_lincomb* x = nullptr;
  REQUIRE(hopfrt_lincomb_parse("[[]] + 2 []*[]", &x) == HOPFRT_OK);
  char* s = nullptr;
  REQUIRE(hopfrt_lincomb_render(x, &s) == HOPFRT_OK);
  CHECK(take(s) == "2 []*[] + 1 [[]]");

  hopfrt_tensor* t = nullptr;
  REQUIRE(hopfrt_coproduct(x, &t) == HOPFRT_OK);
  REQUIRE(hopfrt_tensor_render(t, &s) == HOPFRT_OK);
  CHECK(take(s).find("5 ([] | [])") != std::string::npos);
  hopfrt_tensor_free(t);

  hopfrt_lincomb* y = nullptr;
  REQUIRE(hopfrt_antipode(x, &y) == HOPFRT_OK);
  hopfrt_lincomb* z = nullptr;
  REQUIRE(hopfrt_multiply(x, y, &z) == HOPFRT_OK);
  hopfrt_lincomb_free(x);
  hopfrt_lincomb_free(y);
  hopfrt_lincomb_free(z);
}

TEST_CASE("c api errors") {
  hopfrt_lincomb* x = nullptr;
  CHECK(hopfrt_lincomb_parse("[[]", &x) == HOPFRT_ERR_PARSE);
  CHECK(hopfrt_last_error_position() == 3);
  CHECK(std::string(hopfrt_last_error()).find("position 3") != std::string::npos);
  CHECK(x == nullptr);

  hopfrt_lincomb* d = nullptr;
  CHECK(hopfrt_delta_k(0, &d) == HOPFRT_ERR_INVALID_ARGUMENT);
  CHECK(hopfrt_last_error_position() == -1);
  CHECK(hopfrt_lincomb_render(nullptr, nullptr) == HOPFRT_ERR_INVALID_ARGUMENT);

  char* s = nullptr;
  int closed = 0;
  CHECK(hopfrt_subalgebra("[],[[]],[[]", 3, 1, &s, &closed) == HOPFRT_ERR_PARSE);
  CHECK(hopfrt_last_error_position() == 11);

  hopfrt_field* f = nullptr;
  REQUIRE(hopfrt_field_parse("f1 = 1 + x1^2", 1, &f) == HOPFRT_OK);
  CHECK(hopfrt_field_order(f) == 1);
  CHECK(hopfrt_butcher_tree(f, "[[][]]", &s) == HOPFRT_ERR_TRUNCATION);
  CHECK(hopfrt_butcher_taylor(f, 3, &s) == HOPFRT_ERR_TRUNCATION);
  hopfrt_field_free(f);

  CHECK(hopfrt_cm_gamma("1 + x", "x", "[]", 4, &s) == HOPFRT_ERR_INVALID_ARGUMENT);
  CHECK(hopfrt_verify("nope", 3, 0, 0, &s, nullptr) == HOPFRT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("c api subalgebra and gamma") {
  char* s = nullptr;
  int closed = 0;
  REQUIRE(hopfrt_subalgebra("[]", 3, 1, &s, &closed) == HOPFRT_OK);
  CHECK(closed == 1);
  CHECK(take(s).find("degree 3: dimension 3") != std::string::npos);

  REQUIRE(hopfrt_cm_gamma("2 x", "x", "[]", 4, &s) == HOPFRT_OK);
  CHECK(take(s) == "3 x y + O(x^5)\n");
  REQUIRE(hopfrt_cm_gamma("x", "x", "[[]]", 4, &s) == HOPFRT_OK);
  CHECK(take(s) == "0 + O(x^5)\n");
}

TEST_CASE("verify json parses back") {
  char* s = nullptr;
  int passed = 0;
  REQUIRE(hopfrt_verify("hopf", 3, 0, 1, &s, &passed) == HOPFRT_OK);
  const std::string text = take(s);
  CHECK(passed == 1);
  const auto j = nlohmann::ordered_json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["suite"] == "hopf");
  CHECK(j["passed"] == true);
  CHECK(j.dump(2) + "\n" == text);
  for (const auto& r : j["results"]) {
    CHECK(r["status"] == "pass");
    CHECK(r["first_mismatch"].is_null());
  }
}
