#include <doctest.h>

#include "forms/jumper.hpp"
#include "forms/positivity.hpp"

using namespace forms;

TEST_CASE("jump exponent decomposition") {
  CHECK(decompose_r(2) == std::make_pair(1, 0));
  CHECK(decompose_r(3) == std::make_pair(0, 1));
  CHECK(decompose_r(7) == std::make_pair(2, 1));
  CHECK(decompose_r(4) == std::make_pair(2, 0));
  CHECK_THROWS_AS(decompose_r(1), std::invalid_argument);
}

TEST_CASE("pq jump of the Robinson form") {
  ProvenancedForm seed = provenanced_seed(FormId::make(FormTag::Robinson, 3));
  CHECK(seed.psd.status == PsdStatus::ProvedPsd);
  CHECK(seed.sos.kind == SosStatus::Kind::ProvedNotSos);
  REQUIRE(seed.sos.certificate != nullptr);

  ProvenancedForm jumped = jump_pq(seed, 2);
  CHECK(jumped.form.degree() == 14);
  CHECK(jumped.form.vars() == 3);
  Form expected = build(FormId::make(FormTag::pn, 3)).form.pow(2) * seed.form;
  CHECK(jumped.form == expected);
  CHECK(jumped.form.is_even());
  CHECK(jumped.form.is_symmetric());
  CHECK(jumped.psd.status == PsdStatus::ProvedPsd);
  CHECK(jumped.sos.kind == SosStatus::Kind::ProvedNotSos);

  CHECK_THROWS_AS(jump_pq(seed, 1), std::invalid_argument);
}

TEST_CASE("all-variable jump of the Robinson form is the ternary dodecic") {
  ProvenancedForm seed = provenanced_seed(FormId::make(FormTag::Robinson, 3));
  ProvenancedForm jumped = jump_allvars(seed);
  CHECK(jumped.form.degree() == 12);
  CHECK(jumped.form == build(FormId::make(FormTag::Rdodecic, 3)).form);
}

TEST_CASE("jumped forms retain the seed zero orbits") {
  ProvenancedForm seed = provenanced_seed(FormId::make(FormTag::Robinson, 3));
  std::vector<PatternPoint> zeros = {PatternPoint::vt(3, 2), PatternPoint::vt(3, 3)};
  REQUIRE(verify_zero_orbits(seed.form, zeros));
  CHECK(verify_zero_orbits(jump_pq(seed, 2).form, zeros));
  CHECK(verify_zero_orbits(jump_allvars(seed).form, zeros));
}

TEST_CASE("degree bookkeeping on a four-variable seed") {
  ProvenancedForm d4 = provenanced_seed(FormId::make(FormTag::D, 2));
  CHECK(jump_pq(d4, 2).form.degree() == 16);
  CHECK(jump_allvars(d4).form.degree() == 16);
  CHECK(jump_allvars(jump_allvars(d4)).form.degree() == 24);
}

TEST_CASE("jumps demand provenance") {
  ProvenancedForm bare;
  bare.form = build(FormId::make(FormTag::Robinson, 3)).form;
  CHECK_THROWS_AS(jump_pq(bare, 2), std::invalid_argument);
  CHECK_THROWS_AS(jump_allvars(bare), std::invalid_argument);
}

TEST_CASE("classification formula") {
  CHECK(classify(3, 4).equal);
  CHECK(classify(3, 8).equal);
  CHECK(classify(2, 40).equal);
  CHECK(classify(1, 10).equal);
  CHECK_FALSE(classify(4, 8).equal);
  CHECK_FALSE(classify(3, 6).equal);
  CHECK_FALSE(classify(3, 10).equal);
  CHECK_FALSE(classify(5, 20).equal);
  CHECK_THROWS_AS(classify(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(classify(3, 0), std::invalid_argument);
}

TEST_CASE("classification citations") {
  CHECK(classify(3, 4).citation.find("Hilbert") != std::string::npos);
  CHECK(classify(3, 8).citation.find("Harris") != std::string::npos);
  CHECK(classify(3, 10).citation.find("Harris") != std::string::npos);
}

TEST_CASE("the two classification routes agree") {
  for (int n = 1; n <= 12; ++n)
    for (int two_d = 2; two_d <= 40; two_d += 2) {
      INFO("n = " << n << ", 2d = " << two_d);
      CHECK(classify_equal_formula(n, two_d) == classify_equal_constructive(n, two_d));
    }
}

TEST_CASE("strict witnesses follow the case split") {
  ClassificationEntry e = classify(4, 8);
  REQUIRE(e.witness.has_value());
  CHECK(e.witness->kind == WitnessRecipe::Kind::DirectForm);
  CHECK(e.witness->seed->tag == FormTag::D);
  CHECK(e.witness->constructible);

  e = classify(5, 8);
  CHECK(e.witness->seed->tag == FormTag::G);

  e = classify(3, 10);
  CHECK(e.witness->kind == WitnessRecipe::Kind::Literature);
  CHECK_FALSE(e.witness->constructible);
  CHECK_THROWS_AS(realize_witness(*e.witness), std::invalid_argument);

  e = classify(5, 20);  // 20 = 12 + 8: dodecic seed, one pq jump with r = 2
  CHECK(e.witness->kind == WitnessRecipe::Kind::JumpChain);
  CHECK(e.witness->seed->tag == FormTag::Q);
  CHECK(e.witness->pq_r == 2);

  e = classify(4, 12);  // Q4 is open, so the dodecic witness is the R family
  CHECK(e.witness->seed->tag == FormTag::Rdodecic);

  e = classify(3, 14);  // 14 = 6 + 8: Robinson with one pq jump
  CHECK(e.witness->seed->tag == FormTag::Robinson);
  CHECK(e.witness->pq_r == 2);

  e = classify(3, 12);  // 12 = 6 + 6: one all-variable jump
  CHECK(e.witness->allvars_count == 1);
  CHECK(e.witness->pq_r == 0);
}

TEST_CASE("every builtin seed family derives both statuses") {
  for (const FormId& id :
       {FormId::make(FormTag::T, 4), FormId::make(FormTag::P, 5), FormId::make(FormTag::Q, 5),
        FormId::make(FormTag::Rdodecic, 4), FormId::make(FormTag::G, 2),
        FormId::msextic(rat(1), rat(-5), rat(6), 5)}) {
    INFO(id.describe());
    ProvenancedForm seed = provenanced_seed(id);
    CHECK(seed.psd.status == PsdStatus::ProvedPsd);
    CHECK(seed.sos.kind == SosStatus::Kind::ProvedNotSos);
    REQUIRE(seed.sos.certificate != nullptr);
    CHECK(verify_certificate(seed.form, *seed.sos.certificate));
  }
}

TEST_CASE("realized witnesses carry full provenance") {
  ProvenancedForm w = realize_witness(*classify(4, 8).witness);
  CHECK(w.form.degree() == 8);
  CHECK(w.form.vars() == 4);
  CHECK(w.psd.status == PsdStatus::ProvedPsd);
  CHECK(w.sos.kind == SosStatus::Kind::ProvedNotSos);

  ProvenancedForm chain = realize_witness(*classify(3, 12).witness);
  CHECK(chain.form == build(FormId::make(FormTag::Rdodecic, 3)).form);
}

TEST_CASE("chart matches the classification cell by cell") {
  Chart c = chart(5, 14);
  REQUIRE(c.cells.size() == 7 * 4);
  size_t idx = 0;
  for (int two_d = 2; two_d <= 14; two_d += 2)
    for (int n = 2; n <= 5; ++n) {
      CHECK(c.cells[idx].n == n);
      CHECK(c.cells[idx].two_d == two_d);
      CHECK(c.cells[idx].equal == classify_equal_formula(n, two_d));
      ++idx;
    }
  CHECK_THROWS_AS(chart(1, 14), std::invalid_argument);
}
