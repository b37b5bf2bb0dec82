#include "doctest.h"

#include "genergy/verify.hpp"

using namespace genergy;

namespace {

ClaimInstance row(const VerifyReport& rep, const std::string& id_prefix) {
  for (const auto& c : rep.claims)
    if (c.id.rfind(id_prefix, 0) == 0) return c;
  FAIL("no claim with id prefix " << id_prefix);
  return {};
}

int count_rows(const VerifyReport& rep, const std::string& id_prefix) {
  int k = 0;
  for (const auto& c : rep.claims)
    if (c.id.rfind(id_prefix, 0) == 0) ++k;
  return k;
}

}  // namespace

TEST_CASE("lemma 3.3 grid") {
  VerifyReport rep = verify_lemma_3_3();
  CHECK(rep.proved_failures() == 0);
  CHECK(count_rows(rep, "L3.3/case1") >= 3);
  CHECK(count_rows(rep, "L3.3/case2") >= 3);
}

TEST_CASE("lemmas 3.5, 3.6, 3.9") {
  VerifyReport rep = verify_lemmas_3_5_3_6_3_9();
  CHECK(rep.proved_failures() == 0);
  CHECK(count_rows(rep, "L3.5") >= 3);
  CHECK(count_rows(rep, "L3.6") >= 3);
  CHECK(count_rows(rep, "L3.9") >= 3);
}

TEST_CASE("lemma 3.10") {
  VerifyReport rep = verify_lemma_3_10();
  CHECK(rep.proved_failures() == 0);
  ClaimInstance l5 = row(rep, "L3.10/l5-energy");
  CHECK(l5.pass);
  CHECK(l5.actual == "Less");
  ClaimInstance q5 = row(rep, "L3.10/l5-quasiorder");
  CHECK_FALSE(q5.proved);
}

TEST_CASE("displayed identities") {
  VerifyReport rep = verify_displayed_identities();
  for (const auto& c : rep.claims)
    if (c.proved) CHECK_MESSAGE(c.pass, c.id, ": ", c.note);
  ClaimInstance p45 = row(rep, "kernel/P45-P5");
  CHECK(p45.actual == std::string("Incomparable"));
}

TEST_CASE("report rendering") {
  VerifyReport rep = verify_lemma_3_10();
  std::string md = rep.to_markdown();
  CHECK(md.find("L3.10") != std::string::npos);
  std::string js = rep.to_json();
  CHECK(js.find("\"pass\"") != std::string::npos);
}

TEST_CASE("run_verify dispatch and parallel determinism") {
  VerifyReport a = run_verify({"L3.10", "identities"}, 1);
  VerifyReport b = run_verify({"L3.10", "identities"}, 4);
  CHECK(a.to_json() == b.to_json());
  CHECK_THROWS_AS(run_verify({"bogus"}, 1), Error);
}
