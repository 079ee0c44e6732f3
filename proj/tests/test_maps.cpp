#include <gtest/gtest.h>

#include <set>

#include "opf/certificate.hpp"
#include "opf/enumerate.hpp"
#include "opf/error.hpp"
#include "opf/maps.hpp"
#include "opf/parse.hpp"

using namespace opf;

namespace {

std::string phi_tilde_of(const char* s) { return format_lincomb(phi_tilde(parse_binary(s))); }

}  // namespace

TEST(Normalize, Examples) {
  EXPECT_EQ(to_string(normalize_commag(parse_binary("(3*1)"))), "(1*3)");
  EXPECT_EQ(to_string(normalize_commag(parse_binary("((2*3)*1)"))), "(1*(2*3))");
  EXPECT_EQ(to_string(normalize_commag(parse_binary("((3*1)*2)"))), "(2*(1*3))");
  for (const auto& t : enumerate_mag(4)) {
    BinaryTerm n = normalize_commag(t);
    EXPECT_TRUE(is_normalized(n));
    EXPECT_EQ(normalize_commag(n), n);
  }
}

TEST(Psi, Examples) {
  EXPECT_EQ(to_string(psi(parse_binary("(1*2)"))), "1(2)");
  EXPECT_EQ(to_string(psi(parse_binary("((1*2)*3)"))), "1(2,3)");
  EXPECT_EQ(to_string(psi(parse_binary("(2*(1*3))"))), "2(1(3))");
  EXPECT_THROW(psi(parse_binary("(3*1)")), Error);
}

TEST(Psi, InverseExamples) {
  EXPECT_EQ(to_string(psi_inverse(parse_rooted("1(2,3)"))), "((1*2)*3)");
  EXPECT_EQ(to_string(psi_inverse(parse_rooted("1(2(3))"))), "(1*(2*3))");
  EXPECT_EQ(to_string(psi_inverse(parse_rooted("7"))), "7");
  EXPECT_THROW(psi_inverse(parse_rooted("3(1,2)")), Error);
}

TEST(Psi, RoundTripAndImage) {
  for (int n = 1; n <= 7; ++n) {
    std::set<RootedTree> image;
    for (const auto& t : enumerate_commag(n)) {
      RootedTree p = psi(t);
      ASSERT_TRUE(is_type_a(p));
      ASSERT_EQ(psi_inverse(p), t);
      image.insert(p);
    }
    std::set<RootedTree> type_a;
    for (const auto& t : enumerate_rooted_trees(n))
      if (is_type_a(t)) {
        type_a.insert(t);
        ASSERT_EQ(psi(psi_inverse(t)), t);
      }
    EXPECT_EQ(image, type_a) << "n=" << n;
    EXPECT_EQ(type_a.size(), double_factorial(2 * n - 3));
  }
}

TEST(TypeA, Certificates) {
  TypeACertificate c = type_a_certificate(parse_rooted("1(2,3)"));
  EXPECT_EQ(*c.d, 1u);
  EXPECT_EQ(to_string(*c.x1), "1(2)");
  EXPECT_EQ(to_string(*c.x2), "3");
  EXPECT_EQ(*type_a_certificate(parse_rooted("2(1(3))")).d, 2u);
  EXPECT_EQ(*type_a_certificate(parse_rooted("1(2(3))")).d, 2u);
  EXPECT_TRUE(type_a_certificate(parse_rooted("4")).root_is_max());
  EXPECT_FALSE(is_type_a(parse_rooted("3(1,2)")));
  try {
    type_a_certificate(parse_rooted("3(1,2)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not in A[S]"), std::string::npos);
  }
}

TEST(TypeA, FactorizationRebuildsTheTree) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_rooted_trees(n)) {
      if (!is_type_a(t)) continue;
      TypeACertificate c = type_a_certificate(t);
      ASSERT_FALSE(c.root_is_max());
      ASSERT_EQ(nap_product(*c.x1, *c.x2), t);
      ASSERT_EQ(c.x2->max_label(), t.max_label());
      ASSERT_EQ(*c.d, c.x2->size());
    }
}

TEST(PhiTilde, ArityThreeDisplays) {
  EXPECT_EQ(phi_tilde_of("(1*(2*3))"), "1(2(3)) + 1(3(2)) + 2(1,3) + 3(1,2)");
  EXPECT_EQ(phi_tilde_of("((1*2)*3)"), "1(2,3) + 2(1,3) + 3(1(2)) + 3(2(1))");
  EXPECT_EQ(phi_tilde_of("(2*(1*3))"), "1(2,3) + 2(1(3)) + 2(3(1)) + 3(1,2)");
  EXPECT_EQ(phi_tilde_of("((2*3)*1)"), phi_tilde_of("(1*(2*3))"));
}

TEST(Phi, Examples) {
  EXPECT_EQ(format_lincomb(phi(parse_binary("(1*2)"))), "1(2) + 2(1)");
  EXPECT_THROW(phi(parse_binary("(1*1)")), Error);
}

TEST(PhiTilde, LeadingTermIsPsi) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_commag(n)) {
      Rational c = phi_tilde(t).coeff(psi(t));
      ASSERT_TRUE(c.is_integer() && c.sign() > 0) << to_string(t);
    }
}

TEST(ComMagToMag, Expansion) {
  EXPECT_EQ(format_lincomb(commag_to_mag(parse_binary("(1*2)"))), "(1*2) + (2*1)");
  EXPECT_EQ(commag_to_mag(parse_binary("((1*2)*3)")).size(), 4u);
  EXPECT_EQ(format_lincomb(commag_to_mag(parse_binary("(1*(2*3))"))),
            "((2*3)*1) + ((3*2)*1) + (1*(2*3)) + (1*(3*2))");
  for (const auto& t : enumerate_commag(5)) {
    MagComb e = commag_to_mag(t);
    EXPECT_EQ(e.size(), 16u);
    for (const auto& [m, c] : e) EXPECT_EQ(c, Rational(1));
  }
}

TEST(MagToDend, Examples) {
  EXPECT_EQ(format_lincomb(mag_to_dend(parse_binary("1"))), "(o,o)");
  EXPECT_EQ(format_lincomb(mag_to_dend(parse_binary("(1*2)"))), "-((o,o),o) + (o,(o,o))");
  DendComb two = mag_to_dend(parse_binary("(1*2)"), [](Label l) { return static_cast<GenIndex>(l); });
  EXPECT_EQ(two.size(), 2u);
  for (const auto& [t, c] : two) EXPECT_TRUE(t.labelled());
  EXPECT_EQ(mag_to_dend(parse_binary("((1*2)*3)")).size(), 5u);
}

TEST(Certificate, SmallArities) {
  CertificateOptions o;
  RankCertificate c = injectivity_certificate(CertMap::Phi, 3, o);
  EXPECT_EQ(c.rank, 3u);
  EXPECT_TRUE(c.injective);
  c = injectivity_certificate(CertMap::PhiTilde, 4, o);
  EXPECT_EQ(c.rank, 15u);
  EXPECT_EQ(c.cols, 64u);
  c = injectivity_certificate(CertMap::ComMagToMag, 4, o);
  EXPECT_TRUE(c.injective);
  o.lambda = Rational(0);
  c = injectivity_certificate(CertMap::MagToDend, 4, o);
  EXPECT_EQ(c.rank, 5u);
  EXPECT_EQ(c.source_dim, 5u);
}

TEST(Certificate, RefusesOversizedArity) {
  CertificateOptions o;
  o.max_n = 4;
  EXPECT_THROW(injectivity_certificate(CertMap::PhiTilde, 5, o), ResourceError);
  EXPECT_THROW(injectivity_certificate(CertMap::Phi, 0, o), Error);
  EXPECT_EQ(parse_cert_map("phi_tilde"), CertMap::PhiTilde);
  EXPECT_THROW(parse_cert_map("psi"), Error);
}
