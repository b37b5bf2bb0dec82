#include "doctest.h"

#include <cmath>

#include "genergy/energy.hpp"
#include "genergy/families.hpp"

using namespace genergy;

TEST_CASE("dyadic arithmetic") {
  Dyadic h = Dyadic::from_double(0.5);
  CHECK(h.num == 1);
  CHECK(h.exp == 1);
  Dyadic q = Dyadic::from_double(0.75);
  CHECK((h + q).to_double() == doctest::Approx(1.25));
  CHECK((q - h).to_double() == doctest::Approx(0.25));
  CHECK(h < q);
  CHECK(Dyadic::from_double(1e-9).to_double() == doctest::Approx(1e-9).epsilon(1e-12));
}

TEST_CASE("exact enclosures for integer spectra") {
  EnergyEnclosure k2 = energy_certified(path(2), 1e-9);
  CHECK(k2.lo == k2.hi);  // roots +-1 are exact
  CHECK(k2.lo.to_double() == 2.0);

  EnergyEnclosure c6 = energy_certified(cycle(6), 1e-9);
  CHECK(c6.contains(8.0));
  CHECK(c6.width() <= 1e-9);
  CHECK(c6.lo == c6.hi);  // spectrum {+-2, +-1, +-1} is integral

  EnergyEnclosure c4 = energy_certified(cycle(4), 1e-9);
  CHECK(c4.lo.to_double() == 4.0);

  EnergyEnclosure empty = energy_certified(Graph(5), 1e-9);
  CHECK(empty.lo.to_double() == 0.0);
  CHECK(empty.hi.to_double() == 0.0);
}

TEST_CASE("certified enclosure properties") {
  for (const char* s : {"pna:10:6", "p666:20", "theta1:20:4,6,6:4,4:2", "cycle:7", "pnab:13:4,5"}) {
    Graph g = build(FamilySpec::parse(s));
    EnergyEnclosure e = energy_certified(g, 1e-8);
    CHECK(e.lo <= e.hi);
    CHECK(e.width() <= 1e-8);
    // cross-check against double-precision quadrature
    double est = coulson_energy(g, 1e-7);
    CHECK(std::abs(est - e.lo.to_double()) < 1e-4);
  }
  CHECK_THROWS_AS(energy_certified(path(4), 0.0), Error);
}

TEST_CASE("coulson estimates") {
  CHECK(std::abs(coulson_energy(path(2), 1e-8) - 2.0) < 1e-6);
  CHECK(std::abs(coulson_energy(cycle(6), 1e-6) - 8.0) < 1e-4);
  // non-bipartite graphs take the general two-sum form
  CHECK(std::abs(coulson_energy(cycle(3), 1e-6) - 4.0) < 1e-4);
  double cert = energy_certified(p_n_a(10, 6), 1e-10).lo.to_double();
  CHECK(std::abs(coulson_energy(p_n_a(10, 6), 1e-6) - cert) < 1e-4);
}

TEST_CASE("energy additivity over components") {
  Graph g1 = p_n_a(8, 6), g2 = cycle(4);
  double tol = 1e-9;
  EnergyEnclosure a = energy_certified(g1, tol), b = energy_certified(g2, tol);
  EnergyEnclosure u = energy_certified(disjoint_union(g1, g2), tol);
  CHECK(std::abs(u.lo.to_double() - (a.lo.to_double() + b.lo.to_double())) <= 2 * tol);
}

TEST_CASE("energy_compare") {
  // Lemma 3.10's computed case
  Graph g0 = theta_i(22, 6, 6, 6, 6, 2, 2);
  Graph g2 = theta_ii(22, 6, 6, 6, 5, 2, 2);
  CHECK(energy_compare(g0, g2, 1e-6) == EnergyOrder::Less);

  // E(C_8) < E(P_8^6)
  CHECK(energy_compare(cycle(8), p_n_a(8, 6), 1e-6) == EnergyOrder::Less);

  Graph g = p_n_666(20);
  CHECK(energy_compare(g, g, 1e-4) == EnergyOrder::Undecided);
}
