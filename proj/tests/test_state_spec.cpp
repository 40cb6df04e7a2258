#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mlur/criteria.hpp"
#include "mlur/error.hpp"
#include "mlur/state_spec.hpp"

using namespace mlur;

TEST(StateSpec, named_states) {
  EXPECT_EQ(parse_state_spec("singlet").matrix(), density_from_pure(bell_state(BellKind::PsiMinus)).matrix());
  EXPECT_EQ(parse_state_spec("psi-").matrix(), parse_state_spec("singlet").matrix());
  EXPECT_EQ(parse_state_spec("psi+").matrix(), density_from_pure(bell_state(BellKind::PsiPlus)).matrix());
  EXPECT_EQ(parse_state_spec("phi+").matrix(), density_from_pure(bell_state(BellKind::PhiPlus)).matrix());
  EXPECT_EQ(parse_state_spec("phi-").matrix(), density_from_pure(bell_state(BellKind::PhiMinus)).matrix());
  EXPECT_NEAR(lur_value(parse_state_spec("u1-singlet"), l3_set()), 6.0, 1e-12);
  EXPECT_NEAR(mlur_value(parse_state_spec("u2-singlet"), l2_set()), 1.0, 1e-12);
  EXPECT_NEAR(lur_value(parse_state_spec("u3-singlet"), l3_set()), 8.0, 1e-12);
}

TEST(StateSpec, mixtures) {
  EXPECT_EQ(parse_state_spec("werner:p=0.25").matrix(), noise_mixture(0.25, NoiseKind::Werner).matrix());
  EXPECT_EQ(parse_state_spec("polarized:p=0.5").matrix(), noise_mixture(0.5, NoiseKind::MaxPolarized).matrix());
  EXPECT_EQ(parse_state_spec("werner:p=0.5,base=phi+").matrix(),
            noise_mixture(0.5, NoiseKind::Werner, BellKind::PhiPlus).matrix());
}

TEST(StateSpec, rejects_malformed_specs) {
  for (const char* bad : {"", "triplet", "werner", "werner:", "werner:p=", "werner:p=abc", "werner:p=1.5",
                          "werner:q=0.5", "werner:p=0.5,base=xyz", "polarized:p=0.5x", "file:/nonexistent/rho.json"}) {
    EXPECT_THROW(parse_state_spec(bad), InputError) << bad;
  }
}

TEST(StateSpec, json_round_trip_and_validation) {
  const DensityMatrix rho = noise_mixture(0.3, NoiseKind::Werner, BellKind::PhiMinus);
  const DensityMatrix back = density_from_json(density_to_json(rho));
  EXPECT_LT(back.matrix().max_abs_diff(rho.matrix()), 1e-15);

  const auto path = std::filesystem::temp_directory_path() / "mlur_state_spec_test.json";
  {
    std::ofstream out(path);
    out << density_to_json(rho);
  }
  EXPECT_LT(parse_state_spec("file:" + path.string()).matrix().max_abs_diff(rho.matrix()), 1e-15);
  std::filesystem::remove(path);

  EXPECT_THROW(density_from_json("not json"), InputError);
  EXPECT_THROW(density_from_json(R"({"dim": 4, "re": [[1]]})"), InputError);
  EXPECT_THROW(density_from_json(R"({"dim": 2, "re": [[1,0],[0,0]], "im": [[0,0],[0,0]]})"), InputError);
  // Unit diagonal: trace 4 violates the invariants.
  EXPECT_THROW(density_from_json(R"({"dim":4,"re":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                                     "im":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})"),
               InputError);
  // Negative eigenvalue.
  EXPECT_THROW(density_from_json(R"({"dim":4,"re":[[1.5,0,0,0],[0,-0.5,0,0],[0,0,0,0],[0,0,0,0]],
                                     "im":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})"),
               InputError);
}
