/*
   Copyright 2026 The hetcran Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hetcran/errors.hpp"
#include "hetcran/model.hpp"
#include "oracles.hpp"

namespace hetcran {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(BetaTest, UnitForcingFrequency) {
    EXPECT_NEAR(beta_pathloss_constant(3e8 / (4.0 * kPi)), 1.0, 1e-15);
}

TEST(BetaTest, OneGigahertz) {
    EXPECT_NEAR(beta_pathloss_constant(1e9), 5.6997e-4, 5e-8);
    EXPECT_NEAR(beta_pathloss_constant(1e9), 5.699316579881499e-4, 1e-18);
}

TEST(BetaTest, InverseSquareInFrequency) {
    EXPECT_DOUBLE_EQ(beta_pathloss_constant(2e9) / beta_pathloss_constant(1e9), 0.25);
    EXPECT_THROW(beta_pathloss_constant(0.0), DomainError);
}

TEST(UnitsTest, DbmToWatts) {
    EXPECT_NEAR(dbm_to_watts(30.0), 1.0, 1e-15);
    EXPECT_NEAR(dbm_to_watts(40.0), 10.0, 1e-14);
    EXPECT_NEAR(dbm_to_watts(-162.0) / 6.3096e-20, 1.0, 1e-5);
}

TEST(UnitsTest, RoundTrip) {
    for (double dbm = -180.0; dbm <= 60.0; dbm += 3.7)
        EXPECT_NEAR(watts_to_dbm(dbm_to_watts(dbm)) / dbm, 1.0, 1e-12) << dbm;
    for (double w : {1e-21, 3e-3, 1.0, 250.0})
        EXPECT_NEAR(dbm_to_watts(watts_to_dbm(w)) / w, 1.0, 1e-12);
}

TEST(LinkSpecTest, MbsDedicatedInvalid) {
    EXPECT_THROW((LinkSpec{Tier::mbs, RbMode::dedicated}).validate(), DomainError);
    EXPECT_NO_THROW(LinkSpec::mbs_shared().validate());
    EXPECT_THROW(parse_link("mbs-dedicated"), ConfigError);
    EXPECT_THROW(parse_link("macro"), ConfigError);
}

TEST(LinkSpecTest, NamesRoundTrip) {
    for (const auto link : {LinkSpec::rrh_dedicated(), LinkSpec::rrh_shared(), LinkSpec::mbs_shared()})
        EXPECT_EQ(parse_link(link.name()), link);
    EXPECT_EQ(parse_tier(tier_name(Tier::mbs)), Tier::mbs);
}

TEST(NetworkConfigTest, DefaultsValid) { EXPECT_NO_THROW(NetworkConfig{}.validate()); }

TEST(NetworkConfigTest, RejectsViolations) {
    auto expect_reject = [](auto mutate) {
        NetworkConfig c;
        mutate(c);
        EXPECT_THROW(c.validate(), ConfigError);
    };
    expect_reject([](NetworkConfig& c) { c.eta_r = 1.9; });
    expect_reject([](NetworkConfig& c) { c.eta_m = 2.0; });
    expect_reject([](NetworkConfig& c) { c.n_m = c.s_users; });
    expect_reject([](NetworkConfig& c) { c.s_users = 0; });
    expect_reject([](NetworkConfig& c) { c.alpha = 1.01; });
    expect_reject([](NetworkConfig& c) { c.lambda_e = -1e-6; });
    expect_reject([](NetworkConfig& c) { c.lambda_r = 0.0; });
    expect_reject([](NetworkConfig& c) { c.n0 = 0.0; });
    expect_reject([](NetworkConfig& c) { c.b_o = -1.0; });
    NetworkConfig zero_eves;
    zero_eves.lambda_e = 0.0;
    EXPECT_NO_THROW(zero_eves.validate());
}

TEST(PowerModelTest, RejectsViolations) {
    PowerModel pm;
    EXPECT_NO_THROW(pm.validate());
    pm.eps_r = 1.2;
    EXPECT_THROW(pm.validate(), ConfigError);
    pm = {};
    pm.p_bh = -0.1;
    EXPECT_THROW(pm.validate(), ConfigError);
}

TEST(AssociationTest, Examples) {
    NetworkConfig c;
    c.lambda_r = c.lambda_m;
    auto [ar, am] = association_probabilities(c);
    EXPECT_DOUBLE_EQ(ar, 0.5);
    EXPECT_DOUBLE_EQ(am, 0.5);
    c.lambda_r = 20.0 * c.lambda_m;
    std::tie(ar, am) = association_probabilities(c);
    EXPECT_NEAR(ar, 20.0 / 21.0, 1e-15);
    EXPECT_NEAR(am, 1.0 / 21.0, 1e-15);
    EXPECT_NEAR(ar + am, 1.0, 1e-15);
}

TEST(AssociationTest, DegenerateRrhDensity) {
    NetworkConfig c;
    c.lambda_r = 0.0;
    const auto [ar, am] = association_probabilities(c);
    EXPECT_EQ(ar, 0.0);
    EXPECT_EQ(am, 1.0);
}

TEST(ServingDistanceTest, NormalisedForRandomDensities) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> isd(100.0, 2000.0);
    for (int i = 0; i < 20; ++i) {
        NetworkConfig c;
        c.lambda_m = 1.0 / (kPi * std::pow(isd(gen), 2));
        c.lambda_r = 1.0 / (kPi * std::pow(isd(gen), 2));
        const double scale = 1.0 / std::sqrt(c.total_density());
        for (Tier tier : {Tier::rrh, Tier::mbs}) {
            const double mass = oracle::simpson(
                [&](double x) { return serving_distance_pdf(x, tier, c); }, 0.0, 12.0 * scale,
                200000);
            EXPECT_NEAR(mass, 1.0, 1e-10);
        }
    }
}

TEST(ServingDistanceTest, MeanAndOrigin) {
    NetworkConfig c;
    const double mean = oracle::simpson(
        [&](double x) { return x * serving_distance_pdf(x, Tier::rrh, c); }, 0.0, 2000.0, 400000);
    EXPECT_NEAR(mean, 1.0 / (2.0 * std::sqrt(c.total_density())), 1e-8);
    EXPECT_NEAR(mean, 96.695, 0.001);
    EXPECT_EQ(serving_distance_pdf(0.0, Tier::mbs, c), 0.0);
    EXPECT_DOUBLE_EQ(serving_distance_pdf(80.0, Tier::mbs, c),
                     serving_distance_pdf(80.0, Tier::rrh, c));
}

TEST(ServingDistanceTest, CdfConsistentWithPdf) {
    NetworkConfig c;
    for (double x : {10.0, 60.0, 150.0, 400.0}) {
        const double mass = oracle::simpson(
            [&](double t) { return serving_distance_pdf(t, Tier::rrh, c); }, 0.0, x, 20000);
        EXPECT_NEAR(serving_distance_cdf(x, c), mass, 1e-12);
    }
}

TEST(RrhPowerTest, Examples) {
    NetworkConfig c;
    PowerModel pm;
    pm.eps_r = 1.0;
    EXPECT_NEAR(rrh_total_power(pm, c), 25.3, 1e-12);
    pm.eps_r = 0.5;
    EXPECT_NEAR(rrh_total_power(pm, c), 50.3, 1e-12);
    c.k_rb = 0;
    EXPECT_NEAR(rrh_total_power(pm, c), 0.3, 1e-15);
}

TEST(MbsPowerTest, GoldenValue) {
    EXPECT_NEAR(mbs_total_power(PowerModel{}, NetworkConfig{}), 7133.449888421052, 1e-9);
}

TEST(MbsPowerTest, NoSharedBlocks) {
    NetworkConfig c;
    c.alpha = 1.0;
    const PowerModel pm;
    EXPECT_NEAR(mbs_total_power(pm, c), pm.p_m0 + pm.p_bh, 1e-15);
}

TEST(MbsPowerTest, IncreasingInAntennasAndUsers) {
    NetworkConfig c;
    const PowerModel pm;
    c.n_m = 200;
    const double low = mbs_total_power(pm, c);
    c.n_m = 400;
    EXPECT_GT(mbs_total_power(pm, c), low);
    c.s_users = 31;
    NetworkConfig base;
    EXPECT_GT(mbs_total_power(pm, c), mbs_total_power(pm, base));
}

TEST(PowerModelTest, MonotoneUnderRandomPerturbation) {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> bump(1.0, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        const NetworkConfig c;
        const PowerModel pm;
        const double r0 = rrh_total_power(pm, c);
        const double m0 = mbs_total_power(pm, c);
        for (int coord = 0; coord < 12; ++coord) {
            NetworkConfig c2 = c;
            PowerModel pm2 = pm;
            const double f = bump(gen);
            switch (coord) {
                case 0: c2.p_r *= f; break;
                case 1: c2.p_m *= f; break;
                case 2: c2.k_rb += 1 + static_cast<int>(10 * (f - 1.0)); break;
                case 3: c2.n_m += 1 + static_cast<int>(100 * (f - 1.0)); break;
                case 4: c2.s_users += 1; break;
                case 5: pm2.p_r0 *= f; break;
                case 6: pm2.p_m0 *= f; break;
                case 7: pm2.p_fh *= f; break;
                case 8: pm2.p_bh *= f; break;
                case 9: pm2.eps_r /= f; break;
                case 10: pm2.eps_m /= f; break;
                default: pm2.lambda_rho1[trial % 3] *= f; break;
            }
            EXPECT_GE(rrh_total_power(pm2, c2), r0) << coord;
            EXPECT_GE(mbs_total_power(pm2, c2), m0) << coord;
        }
    }
}

}  // namespace
}  // namespace hetcran
