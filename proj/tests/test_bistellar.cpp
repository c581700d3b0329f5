#include <doctest.h>

#include "pmc/bistellar.hpp"
#include "pmc/catalog.hpp"
#include "pmc/complex.hpp"
#include "pmc/iso.hpp"
#include "pmc/recognition.hpp"

using namespace pmc;

namespace {

std::vector<Simplex> alphas(const std::vector<Move>& moves) {
  std::vector<Simplex> out;
  for (const Move& m : moves) out.push_back(m.alpha);
  return out;
}

std::vector<Simplex> edges(std::initializer_list<const char*> list) {
  std::vector<Simplex> out;
  for (const char* e : list) out.push_back(parse_face(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("bistellar") {
  TEST_CASE("removable faces") {
    CHECK(alphas(enumerate_moves(catalog::get("N_7"), 2)) == edges({"12", "14", "24", "56", "57", "67"}));
    CHECK(alphas(enumerate_moves(catalog::get("S3_8_37"), 2)) ==
          edges({"13", "16", "17", "24", "27", "35", "46", "48", "58"}));
    const Complex b = catalog::get("B_3_9");
    CHECK_FALSE(is_removable(b, Simplex::of({4, 6})));
    for (Simplex e : faces(b, 1))
      if (degree(b, e) == 3) CHECK_FALSE(is_removable(b, e));
    // an edge of degree >= 4 never qualifies
    const Complex n1 = catalog::get("N_1");
    for (Simplex e : faces(n1, 1))
      if (degree(n1, e) >= 4) CHECK_FALSE(is_removable(n1, e));
  }

  TEST_CASE("paper moves") {
    CHECK(apply_move(catalog::get("S3_8_37"), parse_face("58")) == catalog::get("S3_8_31"));
    CHECK(apply_move(catalog::get("N_7"), parse_face("67")) == catalog::get("N_16"));
    CHECK_THROWS_AS(apply_move(catalog::get("N_7"), parse_face("13")), MoveError);
    CHECK(run_script(catalog::get("N_7"), parse_script("67;56;238;348")) == catalog::get("N_8"));
    CHECK(run_script(catalog::get("N_7"), {}) == catalog::get("N_7"));
    // the thirteen steps from N_5' back to an 8-vertex complex
    const Complex moved =
        run_script(catalog::get("N_5_prime"), parse_script("158;138;135;13;268;02;68;035;03;07;156;08;0"));
    CHECK(is_isomorphism(moved, catalog::get("N_6"), parse_cycles("(2,3)(5,8)", moved.vertex_set())));
  }

  TEST_CASE("script errors name the step") {
    try {
      run_script(catalog::get("N_7"), parse_script("67;13"));
      FAIL("no error");
    } catch (const ScriptError& e) {
      CHECK(e.step() == 1);
      CHECK(e.face() == "13");
    }
    CHECK(format_script(parse_script("67;56;1358+0")) == "67;56;1358+0");
  }

  TEST_CASE("starring and collapsing") {
    const Complex n5 = catalog::get("N_5");
    const Complex starred = star_vertex(n5, parse_face("1358"), 0);
    CHECK(starred == catalog::get("N_5_prime"));
    CHECK(collapse_vertex(starred, 0) == n5);
    CHECK(apply_move(starred, Simplex::single(0)) == n5);
    // B_3_9's parent: two facets of N_3 starred
    const Complex n3 = catalog::get("N_3");
    const Complex m = apply_move(apply_move(n3, parse_face("1248"), 9), parse_face("3568"), 10);
    auto f = f_vector(n3);
    f[0] += 2, f[1] += 8, f[2] += 12, f[3] += 6;
    CHECK(f_vector(m) == f);
    CHECK(is_normal(m));
  }

  TEST_CASE("moves are involutions with the expected f-vector change") {
    const Complex k = catalog::get("N_12");
    for (int i = 1; i <= 2; ++i)
      for (const Move& mv : enumerate_moves(k, i)) {
        const Complex after = apply_move(k, mv);
        CHECK(apply_move(after, mv.beta) == k);
        const auto f0 = f_vector(k);
        const auto f1 = f_vector(after);
        if (i == 1) CHECK(std::vector<long>{f1[0] - f0[0], f1[1] - f0[1], f1[2] - f0[2], f1[3] - f0[3]} == std::vector<long>{0, 1, 2, 1});
        if (i == 2) CHECK(std::vector<long>{f1[0] - f0[0], f1[1] - f0[1], f1[2] - f0[2], f1[3] - f0[3]} == std::vector<long>{0, -1, -2, -1});
      }
  }

  TEST_CASE("neighbourly_ize") {
    const auto [k, script] = neighbourly_ize(catalog::get("S3_8_1"));
    CHECK(is_neighbourly(k));
    bool hit = false;
    for (const char* s : {"S3_8_35", "S3_8_36", "S3_8_37", "S3_8_38"}) hit |= are_isomorphic(k, catalog::get(s)).isomorphic;
    CHECK(hit);
    for (const ScriptStep& st : script) CHECK(st.alpha.size() == 3);

    const auto [top, s35] = neighbourly_ize(catalog::get("N_35"));
    bool hit_n = false;
    for (int i = 7; i <= 15; ++i) hit_n |= are_isomorphic(top, catalog::get("N_" + std::to_string(i))).isomorphic;
    CHECK(hit_n);

    const auto [same, none] = neighbourly_ize(catalog::get("N_1"));
    CHECK(same == catalog::get("N_1"));
    CHECK(none.empty());
    CHECK_THROWS_AS(neighbourly_ize(catalog::get("B_3_9")), NoOneMoveError);
  }
}
