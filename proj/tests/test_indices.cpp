#include <doctest.h>

#include "folres/error.hpp"
#include "folres/indices.hpp"
#include "support.hpp"

using namespace folres;
using namespace folres::test;

namespace {

OneForm form(const std::string& a, const std::string& b, const std::string& c) {
  return OneForm(xyz, {P(a), P(b), P(c)});
}

SingularComponent example_component() {
  const Foliation f = make_foliation(example_presentation());
  DeclaredComponent z{"Z", {P("y"), P("z")}, pt({1, 0, 0}), 1};
  return enumerate_components(f, std::vector{z}, EnumerationOptions{}).components.at(0);
}

// -(a - b)^2 / (a b): BB of a transverse pair of leaves with weights a, b.
Rational pair_bb(const Rational& a, const Rational& b) { return -(a - b) * (a - b) / (a * b); }

}  // namespace

TEST_SUITE("indices") {

TEST_CASE("variational index of the worked example") {
  const auto z = example_component();
  const auto p = example_presentation();
  const SaitoDecomposition s3{"V3", P("1"), P("4*x*y"), P("z"), form("2*y", "3*x", "0")};
  const SaitoDecomposition s2{"V2", P("1"), P("3*x*z"), P("y"), form("2*z", "0", "4*x")};
  CHECK(var_residue(s3, z, z.certificate).value == Q("1/4"));
  CHECK(var_residue(s2, z, z.certificate).value == Q("-1/3"));
  CHECK(var_closed_form(p, 2, z, z.certificate).value == Q("1/4"));
  CHECK(var_closed_form(p, 1, z, z.certificate).value == Q("-1/3"));
  const IndexValue v1 = var_closed_form(p, 0, z, z.certificate);
  CHECK(v1.value == 0);
  CHECK_FALSE(v1.contained);

  const LogarithmicPresentation equal{xyz, {P("x"), P("y"), P("z")}, {Rational(1), Rational(1), Rational(1)},
                                      Rational(1)};
  CHECK(var_residue(canonical_saito(equal, 2), z, z.certificate).value == 0);
}

TEST_CASE("GSV and Camacho-Sad indices") {
  const auto z = example_component();
  const SaitoDecomposition s3{"V3", P("1"), P("4*x*y"), P("z"), form("2*y", "3*x", "0")};
  const SaitoDecomposition s2{"V2", P("1"), P("3*x*z"), P("y"), form("2*z", "0", "4*x")};
  const IndexValue g3 = gsv(s3, z, z.certificate), g2 = gsv(s2, z, z.certificate);
  CHECK(g3.value == 1);
  CHECK(g2.value == 1);
  CHECK(cs(var_residue(s3, z, z.certificate), g3).value == Q("-3/4"));
  CHECK(cs(var_residue(s2, z, z.certificate), g2).value == Q("-4/3"));
  CHECK_THROWS_AS(cs(var_residue(s3, z, z.certificate), g2), Error);

  // h/g a unit on V near Z
  const SaitoDecomposition unit{"U", P("1"), P("1 + x"), P("z"), form("0", "0", "0")};
  CHECK(gsv(unit, z, z.certificate).value == 0);
}

TEST_CASE("Baum-Bott index by every method") {
  const auto z = example_component();
  const auto p = example_presentation();
  CHECK(bb_liouville(p, z, z.certificate, Rational(1)).value == Q("-1/12"));
  CHECK(bb_liouville(p, z, z.certificate, Rational(0)).value == Q("-1/12"));
  const IndexValue j = bb_jacobian(build_omega(p), z, z.certificate, 1);
  CHECK(j.value == Q("-1/12"));
  REQUIRE(j.jacobian.has_value());
  CHECK(*j.jacobian == std::array<Rational, 4>{Rational(4), Rational(0), Rational(0), Rational(-3)});

  const FirstIntegralPresentation fi{xyz, {P("x"), P("y"), P("z")}, {2, 3, 4}};
  CHECK(bb_first_integral(fi, z, z.certificate).value == Q("-1/12"));
  const FirstIntegralPresentation same{xyz, {P("x"), P("y"), P("z")}, {5, 5, 5}};
  CHECK(bb_first_integral(same, z, z.certificate).value == 0);
}

TEST_CASE("first integral xy has a traceless linear part") {
  const FirstIntegralPresentation p{xyz, {P("x"), P("y")}, {1, 1}};
  const Foliation f = make_foliation(p);
  const auto set = enumerate_components(f, std::nullopt, EnumerationOptions{});
  REQUIRE(set.components.size() == 1);
  const auto& z = set.components[0];
  const IndexValue j = bb_jacobian(f.omega, z, z.certificate, 1);
  CHECK(j.value == 0);
  CHECK((*j.jacobian)[0] + (*j.jacobian)[3] == 0);

  const FirstIntegralPresentation q{xyz, {P("x + z"), P("y - 2*z + 1")}, {1, 2}};
  const Foliation fq = make_foliation(q);
  const auto zq = enumerate_components(fq, std::nullopt, EnumerationOptions{}).components.at(0);
  CHECK(bb_first_integral(q, zq, zq.certificate).value == Q("-1/2"));
}

TEST_CASE("pairs of random leaves against the closed form -(a - b)^2 / ab") {
  RandomStream rng(314);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = frac(rng.nonzero_int(9), 1 + (rng.small_int(4) + 4));
    const Rational b = frac(rng.nonzero_int(9), 1 + (rng.small_int(4) + 4));
    LogarithmicPresentation p{xyz, {random_linear(rng, xyz, true), random_linear(rng, xyz, true)}, {a, b},
                              Rational(rng.small_int(3))};
    const Foliation f = make_foliation(p);
    const auto set = enumerate_components(f, std::nullopt, EnumerationOptions{});
    if (set.components.size() != 1) continue;
    const auto& z = set.components[0];
    for (int t : {0, 1, 2, -1}) CHECK(bb_liouville(p, z, z.certificate, Rational(t)).value == pair_bb(a, b));
    CHECK(var_closed_form(p, 0, z, z.certificate).value == 1 - b / a);
    CHECK(var_residue(canonical_saito(p, 0), z, z.certificate).value == 1 - b / a);
    CHECK(bb_jacobian(f.omega, z, z.certificate, 3).value == pair_bb(a, b));
  }
}

TEST_CASE("compute_indices on the worked example") {
  const Foliation f = make_foliation(example_presentation());
  DeclaredComponent d{"Z", {P("y"), P("z")}, pt({1, 0, 0}), 1};
  const auto set = enumerate_components(f, std::vector{d}, EnumerationOptions{});
  const IndexReport r = compute_indices(f, set, IndexOptions{});
  CHECK(r.all_agree());
  CHECK(r.find(IndexKind::Var, "Z", "V3", IndexMethod::Residue) == Q("1/4"));
  CHECK(r.find(IndexKind::Var, "Z", "V2", IndexMethod::ClosedForm) == Q("-1/3"));
  CHECK(r.find(IndexKind::Var, "Z", "V1") == Q("0"));
  CHECK(r.find(IndexKind::GSV, "Z", "V3") == Q("1"));
  CHECK(r.find(IndexKind::CS, "Z", "V2") == Q("-4/3"));
  CHECK(r.find(IndexKind::BB, "Z", {}, IndexMethod::Liouville) == Q("-1/12"));
  CHECK(r.find(IndexKind::BB, "Z", {}, IndexMethod::Jacobian) == Q("-1/12"));
  CHECK_FALSE(r.certificates.empty());
  for (const auto& v : r.values) CHECK_FALSE(v.certificates.empty());
}

TEST_CASE("compute_indices on an explicit presentation") {
  const OneForm omega = form("2*y*z", "3*x*z", "4*x*y");
  ExplicitPresentation e{omega,
                         {{"A", P("1"), P("3*x*z"), P("y"), form("2*z", "0", "4*x")},
                          {"B", P("1"), P("4*x*y"), P("z"), form("2*y", "3*x", "0")}}};
  const Foliation f = make_foliation(e);
  DeclaredComponent d{"Z", {P("y"), P("z")}, pt({1, 0, 0}), 1};
  const auto set = enumerate_components(f, std::vector{d}, EnumerationOptions{});
  const IndexReport r = compute_indices(f, set, IndexOptions{});
  CHECK(r.all_agree());
  CHECK(r.find(IndexKind::Var, "Z", "A") == Q("-1/3"));
  CHECK(r.find(IndexKind::Var, "Z", "B") == Q("1/4"));
  CHECK(r.find(IndexKind::BB, "Z", {}, IndexMethod::Jacobian) == Q("-1/12"));
  CHECK_FALSE(r.find(IndexKind::BB, "Z", {}, IndexMethod::Liouville).has_value());
}

TEST_CASE("identical results for identical seeds") {
  RandomStream rng(5);
  LogarithmicPresentation p{xyz, {}, {}, Rational(1)};
  for (int j = 0; j < 3; ++j) {
    p.factors.push_back(random_linear(rng, xyz, true));
    p.weights.emplace_back(rng.nonzero_int(7));
  }
  const Foliation f = make_foliation(p);
  IndexOptions o;
  o.seed = 77;
  const auto run = [&] {
    const auto set = enumerate_components(f, std::nullopt, EnumerationOptions{o.seed, 8, 16, true, false});
    return compute_indices(f, set, o);
  };
  const IndexReport a = run(), b = run();
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i].value == b.values[i].value);
  REQUIRE(a.certificates.size() == b.certificates.size());
  for (std::size_t i = 0; i < a.certificates.size(); ++i) CHECK(a.certificates[i].facts == b.certificates[i].facts);
}

}
