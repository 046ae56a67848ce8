#include <gtest/gtest.h>

#include <variant>

#include "spnkit/error.hpp"
#include "spnkit/generators.hpp"
#include "spnkit/serialize.hpp"
#include "support.hpp"

using namespace spnkit;

TEST(Serialize, CertificateRoundTrip) {
  Rng rng(71);
  SymMatrix a = random_Mn(rng, 6);
  a = a.shifted(-simplex_minimum(a).value + 0.01);
  const SpnCertificate c = spn_decompose_recursive(a);
  const Json j = to_json(c);
  const SpnCertificate back = certificate_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.psd_part, c.psd_part);
  EXPECT_EQ(back.nonneg_part, c.nonneg_part);
  EXPECT_EQ(back.trace, c.trace);
  EXPECT_DOUBLE_EQ(back.residual, c.residual);
  EXPECT_TRUE(validate_certificate(a, back));
}

TEST(Serialize, WitnessRoundTrip) {
  const SymMatrix h = test::horn();
  const DnnWitness w = std::get<DnnWitness>(spn_oracle(h));
  const DnnWitness back = witness_from_json(Json::parse(to_json(w).dump()));
  EXPECT_EQ(back.x, w.x);
  EXPECT_DOUBLE_EQ(back.objective, w.objective);
}

TEST(Serialize, MalformedDocumentsThrow) {
  EXPECT_THROW(certificate_from_json(Json::object()), ParseError);
  EXPECT_THROW(certificate_from_json(Json{{"psd_part", "2\n1 0\n0 1\n"},
                                          {"nonneg_part", "nonsense"},
                                          {"residual", 0.0},
                                          {"trace", Json::array()}}),
               ParseError);
  EXPECT_THROW(witness_from_json(Json{{"x", 3}}), ParseError);
}

TEST(Serialize, ReportShapes) {
  const StqpReport r = certify_tightness(StqpInstance::raw(test::load("extraneous_q")));
  const Json j = to_json(r);
  EXPECT_TRUE(j.at("tight").get<bool>());
  EXPECT_NEAR(j.at("z_star").get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j.at("certificates").at(0).at("label").get<std::string>(), "Mn");
  EXPECT_TRUE(j.contains("orbit_perm"));

  const OrbitResult o = permute_into_Mn(test::load("extraneous_q"));
  const Json oj = to_json(o);
  EXPECT_TRUE(oj.at("found").get<bool>());
  EXPECT_EQ(oj.at("perm").size(), 5u);

  const Json rn = to_json(ClassLabel::with(ClassTag::Rn, 2));
  EXPECT_EQ(rn.at("class").get<std::string>(), "Rn");
  EXPECT_EQ(rn.at("parameter").get<int>(), 2);
  EXPECT_EQ(rn.at("label").get<std::string>(), "Rn(2)");
  const Json g = to_json(extract_sign_graphs(test::horn()));
  EXPECT_FALSE(g.at("positive").at("threshold").get<bool>());
}
