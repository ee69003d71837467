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
#include <utility>
#include <random>

#include "hetcran/analytic.hpp"
#include "hetcran/errors.hpp"

namespace hetcran {
namespace {

constexpr double kPi = std::numbers::pi;
const double kLambdaO = 1.0 / (500.0 * 500.0 * kPi);

const LinkSpec kLinks[] = {LinkSpec::rrh_dedicated(), LinkSpec::rrh_shared(),
                           LinkSpec::mbs_shared()};

NetworkConfig random_config(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    NetworkConfig c;
    c.lambda_m = kLambdaO * (0.5 + 1.5 * u(gen));
    c.lambda_r = c.lambda_m * (2.0 + 38.0 * u(gen));
    c.lambda_e = std::pow(10.0, -5.5 + 1.5 * u(gen));
    c.eta_m = 2.8 + 0.8 * u(gen);
    c.eta_r = 3.0 + 0.9 * u(gen);
    c.s_users = 5 + static_cast<int>(30 * u(gen));
    c.n_m = c.s_users + 100 + static_cast<int>(400 * u(gen));
    c.alpha = 0.1 + 0.8 * u(gen);
    c.p_r = 0.5 + u(gen);
    c.p_m = 5.0 + 15.0 * u(gen);
    return c;
}

TEST(UserCcdfTest, DedicatedAtOrigin) {
    EXPECT_EQ(user_sinr_ccdf(LinkSpec::rrh_dedicated(), 0.0, 30.0, NetworkConfig{}), 1.0);
}

TEST(UserCcdfTest, DedicatedClosedForm) {
    const NetworkConfig c;
    const double gamma = 255.0;
    const double ref =
        std::exp(-(c.b_o * c.n0 / (c.p_r * c.beta())) * std::pow(30.0, c.eta_r) * gamma);
    EXPECT_NEAR(user_sinr_ccdf(LinkSpec::rrh_dedicated(), gamma, 30.0, c), ref, 1e-14);
    EXPECT_NEAR(ref, 0.99531, 1e-5);
}

TEST(UserCcdfTest, SharedReducesToDedicatedWithoutMacros) {
    NetworkConfig c;
    c.lambda_m = 1e-26;
    for (double gamma : {0.5, 10.0, 255.0, 4000.0})
        EXPECT_NEAR(user_sinr_ccdf(LinkSpec::rrh_shared(), gamma, 60.0, c),
                    user_sinr_ccdf(LinkSpec::rrh_dedicated(), gamma, 60.0, c), 1e-12);
}

TEST(UserCcdfTest, BoundedMonotoneOnGrid) {
    std::mt19937_64 gen(3);
    for (int cfg_id = 0; cfg_id < 3; ++cfg_id) {
        const NetworkConfig c = random_config(gen);
        for (const auto link : kLinks) {
            double prev = 1.0;
            for (int i = 0; i < 100; ++i) {
                const double gamma = std::pow(10.0, -2.0 + 5.0 * i / 99.0);
                const double v = user_sinr_ccdf(link, gamma, 40.0, c);
                EXPECT_GE(v, 0.0);
                EXPECT_LE(v, 1.0);
                EXPECT_LE(v, prev + 1e-9) << link.name() << " gamma=" << gamma;
                prev = v;
            }
        }
    }
}

TEST(UserCcdfTest, SharedBelowDedicated) {
    const NetworkConfig c;
    for (double gamma = 0.01; gamma < 1e4; gamma *= 2.3)
        EXPECT_LE(user_sinr_ccdf(LinkSpec::rrh_shared(), gamma, 45.0, c),
                  user_sinr_ccdf(LinkSpec::rrh_dedicated(), gamma, 45.0, c));
}

TEST(UserCcdfTest, WorstCaseBoundBelowExact) {
    std::mt19937_64 gen(17);
    for (int i = 0; i < 10; ++i) {
        const NetworkConfig c = random_config(gen);
        for (double gamma : {0.1, 1.0, 10.0, 100.0})
            EXPECT_LE(rrh_shared_ccdf_lower_bound(gamma, 35.0, c),
                      user_sinr_ccdf(LinkSpec::rrh_shared(), gamma, 35.0, c) + 1e-12);
    }
}

TEST(UserCcdfTest, IncompleteBetaPathMatchesDirect) {
    const NetworkConfig c;
    for (double gamma : {0.3, 3.0, 30.0}) {
        const double beta_path = -std::log(rrh_shared_ccdf_incomplete_beta(gamma, 50.0, c));
        const double direct = -std::log(user_sinr_ccdf(LinkSpec::rrh_shared(), gamma, 50.0, c));
        EXPECT_NEAR(beta_path / direct, 1.0, 1e-5) << gamma;
    }
}

// 30-digit reference values from an independent arbitrary-precision quadrature.
TEST(UserCcdfTest, SharedMatchesHighPrecisionReference) {
    const NetworkConfig c;
    const std::pair<double, double> ref[] = {{0.3, 0.774520416276572891269199161625},
                                             {3.0, 0.294469401348321021395472859147},
                                             {30.0, 0.00330277822066303509925238002071}};
    for (const auto& [gamma, value] : ref)
        EXPECT_NEAR(user_sinr_ccdf(LinkSpec::rrh_shared(), gamma, 50.0, c) / value, 1.0, 1e-9);
}

TEST(UserCcdfTest, MbsNonpositiveThresholdGivesZero) {
    const NetworkConfig c;
    const double signal = c.p_m * c.beta() * (c.n_m - c.s_users + 1) /
                          (c.s_users * std::pow(50.0, c.eta_m));
    const double gamma = 1.01 * signal / (c.b_o * c.n1);
    EXPECT_EQ(user_sinr_ccdf(LinkSpec::mbs_shared(), gamma, 50.0, c), 0.0);
}

TEST(CapacityTest, IndependentOfEavesdroppers) {
    NetworkConfig a, b;
    b.lambda_e = 1e-3;
    for (const auto link : kLinks)
        EXPECT_EQ(user_ergodic_capacity(link, a), user_ergodic_capacity(link, b));
}

TEST(CapacityTest, Ordering) {
    const NetworkConfig c;
    EXPECT_GE(user_ergodic_capacity(LinkSpec::rrh_dedicated(), c),
              user_ergodic_capacity(LinkSpec::rrh_shared(), c));
    NetworkConfig small = c;
    small.n_m = 200;
    EXPECT_GT(mbs_capacity_lower_bound(c), mbs_capacity_lower_bound(small));
    EXPECT_EQ(user_ergodic_capacity(LinkSpec::mbs_shared(), c), mbs_capacity_lower_bound(c));
}

TEST(CapacityTest, MbsBoundVanishesForSteepPathloss) {
    NetworkConfig c;
    c.eta_m = 4.0;
    EXPECT_EQ(mbs_capacity_lower_bound(c), 0.0);
}

TEST(EveCdfTest, NoEavesdroppers) {
    NetworkConfig c;
    c.lambda_e = 0.0;
    for (const auto link : kLinks)
        for (double x : {1e-3, 1.0, 50.0}) EXPECT_EQ(eve_sinr_cdf(link, x, c), 1.0);
    for (const auto link : kLinks) EXPECT_EQ(eve_ergodic_capacity(link, c), 0.0);
}

TEST(EveCdfTest, ZeroThreshold) {
    for (const auto link : kLinks) EXPECT_EQ(eve_sinr_cdf(link, 0.0, NetworkConfig{}), 0.0);
}

TEST(EveCdfTest, MonotoneAndIncreasingInRrhDensity) {
    NetworkConfig c;
    NetworkConfig dense = c;
    dense.lambda_r *= 2.0;
    for (const auto link : kLinks) {
        double prev = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double x = std::pow(10.0, -3.0 + 5.0 * i / 99.0);
            const double v = eve_sinr_cdf(link, x, c);
            EXPECT_GE(v, prev - 1e-9);
            EXPECT_LE(v, 1.0);
            prev = v;
            if (i % 20 == 0) {
                EXPECT_GE(eve_sinr_cdf(link, x, dense), v) << link.name();
            }
        }
        EXPECT_GT(eve_sinr_cdf(link, 1e9, c), eve_sinr_cdf(link, 1e6, c));
        EXPECT_NEAR(eve_sinr_cdf(link, 1e15, c), 1.0, 1e-6);
    }
}

TEST(EveCapacityTest, DecreasingInDensities) {
    NetworkConfig c;
    NetworkConfig more_rrh = c, more_mbs = c;
    more_rrh.lambda_r *= 2.0;
    more_mbs.lambda_m *= 2.0;
    for (const auto link : kLinks) {
        const double base = eve_ergodic_capacity(link, c);
        EXPECT_LT(eve_ergodic_capacity(link, more_rrh), base) << link.name();
        if (link.rb_mode == RbMode::shared)
            EXPECT_LT(eve_ergodic_capacity(link, more_mbs), base) << link.name();
        else
            EXPECT_EQ(eve_ergodic_capacity(link, more_mbs), base);
    }
}

TEST(EveCapacityTest, VanishesWithSparseEavesdroppers) {
    NetworkConfig c;
    c.lambda_e = 1e-14;
    for (const auto link : kLinks) EXPECT_LT(eve_ergodic_capacity(link, c), 1e-6);
}

TEST(SecrecyRateTest, ClampAndComponents) {
    std::mt19937_64 gen(23);
    for (int i = 0; i < 5; ++i) {
        const NetworkConfig c = random_config(gen);
        for (const auto link : kLinks) {
            const auto r = ergodic_secrecy_rate(link, c);
            EXPECT_GE(r.secrecy_rate, 0.0);
            EXPECT_EQ(r.secrecy_rate, std::max(r.user_capacity - r.eve_capacity, 0.0));
            EXPECT_EQ(r.link, link);
        }
    }
    NetworkConfig crowded;
    crowded.lambda_e = 3e-2;
    crowded.lambda_m *= 10.0;
    const auto r = ergodic_secrecy_rate(LinkSpec::rrh_shared(), crowded);
    ASSERT_GE(r.eve_capacity, r.user_capacity);
    EXPECT_EQ(r.secrecy_rate, 0.0);
}

TEST(SecrecyRateTest, ApproachesUserCapacityWithoutEavesdroppers) {
    NetworkConfig c;
    c.lambda_e = 1e-14;
    for (const auto link : kLinks) {
        const auto r = ergodic_secrecy_rate(link, c);
        EXPECT_NEAR(r.secrecy_rate, r.user_capacity, 1e-6);
    }
}

TEST(AreaRateTest, Examples) {
    NetworkConfig c;
    c.alpha = 1.0;
    EXPECT_EQ(area_secrecy_rate(Tier::mbs, c), 0.0);

    NetworkConfig a, b;
    a.n_m = 200;
    b.n_m = 400;
    EXPECT_EQ(area_secrecy_rate(Tier::rrh, a), area_secrecy_rate(Tier::rrh, b));

    NetworkConfig sparse, dense;
    sparse.lambda_r = 10.0 * sparse.lambda_m;
    dense.lambda_r = 20.0 * dense.lambda_m;
    EXPECT_GT(area_secrecy_rate(Tier::rrh, dense), area_secrecy_rate(Tier::rrh, sparse));
}

TEST(AreaRateTest, Composition) {
    const NetworkConfig c;
    const double kb = c.k_rb * c.b_o;
    const double rrh = c.lambda_r *
                       (c.alpha * kb * ergodic_secrecy_rate(LinkSpec::rrh_dedicated(), c).secrecy_rate +
                        (1.0 - c.alpha) * kb * ergodic_secrecy_rate(LinkSpec::rrh_shared(), c).secrecy_rate);
    EXPECT_NEAR(area_secrecy_rate(Tier::rrh, c) / rrh, 1.0, 1e-12);
    const double mbs = c.lambda_m * (1.0 - c.alpha) * kb * c.s_users *
                       ergodic_secrecy_rate(LinkSpec::mbs_shared(), c).secrecy_rate;
    EXPECT_NEAR(area_secrecy_rate(Tier::mbs, c) / mbs, 1.0, 1e-12);
}

TEST(ConnectionOutageTest, Limits) {
    const NetworkConfig c;
    EXPECT_LT(connection_outage(LinkSpec::rrh_dedicated(), 1e-9, 30.0, c), 1e-9);
    NetworkConfig dense = c;
    dense.lambda_r *= 4.0;
    EXPECT_EQ(connection_outage(LinkSpec::rrh_dedicated(), 6.0, 40.0, c),
              connection_outage(LinkSpec::rrh_dedicated(), 6.0, 40.0, dense));
}

TEST(ConnectionOutageTest, MonotoneInRateAndDistance) {
    const NetworkConfig c;
    for (const auto link : kLinks) {
        double prev = 0.0;
        for (double rate = 0.5; rate <= 10.0; rate += 0.5) {
            const double v = connection_outage(link, rate, 40.0, c);
            EXPECT_GE(v, prev - 1e-12);
            prev = v;
        }
        prev = 0.0;
        for (double d = 10.0; d <= 200.0; d += 10.0) {
            const double v = connection_outage(link, 4.0, d, c);
            EXPECT_GE(v, prev - 1e-12) << link.name() << " d=" << d;
            prev = v;
        }
    }
}

TEST(ConnectionOutageTest, MbsDecreasingInAntennas) {
    NetworkConfig c;
    c.s_users = 20;
    double prev = 1.0;
    for (int n : {100, 200, 300, 400, 500}) {
        c.n_m = n;
        const double v = connection_outage(LinkSpec::mbs_shared(), 8.0, 50.0, c);
        EXPECT_LT(v, prev) << n;
        prev = v;
    }
}

TEST(RateForOutageTest, DedicatedRoundTrip) {
    const NetworkConfig c;
    for (double sigma : {0.01, 0.1, 0.5}) {
        const double rate = rate_for_outage(LinkSpec::rrh_dedicated(), sigma, 30.0, c);
        EXPECT_NEAR(connection_outage(LinkSpec::rrh_dedicated(), rate, 30.0, c), sigma, 1e-10);
    }
    EXPECT_LT(rate_for_outage(LinkSpec::rrh_dedicated(), 1e-12, 30.0, c), 1e-6);
}

TEST(RateForOutageTest, SharedBoundDirection) {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const NetworkConfig c = random_config(gen);
        const double sigma = 0.01 + 0.5 * u(gen);
        const double d_o = 10.0 + 90.0 * u(gen);
        const double rate = rate_for_outage(LinkSpec::rrh_shared(), sigma, d_o, c);
        EXPECT_LE(connection_outage(LinkSpec::rrh_shared(), rate, d_o, c), sigma + 1e-12) << i;
    }
}

TEST(RateForOutageTest, SharedMatchesClosedFormWhenNoiseNegligible) {
    NetworkConfig c;
    c.n0 = 1e-40;
    const double sigma = 0.1;
    const double d_o = 30.0;
    const int S = c.s_users;
    const double d = 2.0 / c.eta_m;
    double sum = 0.0;
    for (int mu = 1; mu <= S; ++mu)
        sum += std::tgamma(S + 1.0) / (std::tgamma(mu + 1.0) * std::tgamma(S - mu + 1.0)) *
               std::tgamma(mu - d) * std::tgamma(S - mu + d);
    const double delta1 = -c.eta_m * std::tgamma(S) * std::log(1.0 - sigma) /
                          (2.0 * kPi * c.lambda_m * sum);
    const double ref = std::log2(
        1.0 + c.p_r * S / (c.p_m * std::pow(d_o, c.eta_r)) * std::pow(delta1, c.eta_m / 2.0));
    EXPECT_NEAR(rate_for_outage(LinkSpec::rrh_shared(), sigma, d_o, c) / ref, 1.0, 1e-10);
}

TEST(RateForOutageTest, Errors) {
    const NetworkConfig c;
    EXPECT_THROW(rate_for_outage(LinkSpec::rrh_dedicated(), 0.0, 30.0, c), DomainError);
    EXPECT_THROW(rate_for_outage(LinkSpec::rrh_dedicated(), 1.0, 30.0, c), DomainError);
    EXPECT_THROW(rate_for_outage(LinkSpec::mbs_shared(), 0.1, 30.0, c), DomainError);
}

TEST(SecrecyOutageTest, Limits) {
    NetworkConfig none;
    none.lambda_e = 0.0;
    EXPECT_EQ(secrecy_outage(LinkSpec::rrh_dedicated(), 4.0, 1.0, none), 0.0);
    const NetworkConfig c;
    for (const auto link : kLinks) EXPECT_EQ(secrecy_outage(link, 3.0, 3.0, c), 1.0);
    EXPECT_THROW(secrecy_outage(LinkSpec::rrh_dedicated(), 1.0, 2.0, c), DomainError);
}

TEST(SecrecyOutageTest, NonincreasingInRate) {
    const NetworkConfig c;
    double prev = 1.0;
    for (double rate = 1.0; rate <= 10.0; rate += 1.0) {
        const double v = secrecy_outage(LinkSpec::rrh_shared(), rate, 0.5, c);
        EXPECT_LE(v, prev + 1e-12);
        prev = v;
    }
}

TEST(SecrecyOutageTest, DenserRrhsHelp) {
    NetworkConfig c;
    c.lambda_m = kLambdaO;
    c.lambda_e = 1e-4;
    c.n_m = 200;
    c.s_users = 15;
    NetworkConfig dense = c;
    c.lambda_r = 20.0 * kLambdaO;
    dense.lambda_r = 40.0 * kLambdaO;
    for (double rate : {2.0, 6.0})
        EXPECT_LT(secrecy_outage(LinkSpec::rrh_dedicated(), rate, 0.2 * rate, dense),
                  secrecy_outage(LinkSpec::rrh_dedicated(), rate, 0.2 * rate, c));
}

TEST(SecrecyOutageTest, DoublingRrhDensityRandomConfigs) {
    std::mt19937_64 gen(41);
    for (int i = 0; i < 20; ++i) {
        const NetworkConfig c = random_config(gen);
        NetworkConfig dense = c;
        dense.lambda_r *= 2.0;
        for (const auto link : kLinks)
            EXPECT_LT(secrecy_outage(link, 4.0, 1.0, dense), secrecy_outage(link, 4.0, 1.0, c))
                << i << ' ' << link.name();
    }
}

TEST(OutageReportTest, Consistent) {
    const NetworkConfig c;
    const auto r = outage_report(LinkSpec::rrh_shared(), 5.0, 1.0, 30.0, c);
    EXPECT_EQ(r.connection_outage, connection_outage(LinkSpec::rrh_shared(), 5.0, 30.0, c));
    EXPECT_EQ(r.secrecy_outage, secrecy_outage(LinkSpec::rrh_shared(), 5.0, 1.0, c));
    EXPECT_LE(r.secrecy_rate_target, r.rate);
}

TEST(DelayTolerantTest, Rules) {
    NetworkConfig none;
    none.lambda_e = 1e-14;
    const auto d = delay_tolerant_rate_rule(LinkSpec::rrh_dedicated(), 1.0, none);
    EXPECT_FALSE(d.outage_flag);
    const NetworkConfig c;
    bool flagged = false;
    for (double rs : {0.5, 1.0, 2.0, 4.0, 6.0, 9.0, 14.0}) {
        const auto r = delay_tolerant_rate_rule(LinkSpec::rrh_shared(), rs, c);
        if (flagged) {
            EXPECT_TRUE(r.outage_flag) << rs;
        }
        flagged = flagged || r.outage_flag;
        EXPECT_NEAR(r.margin, r.max_rate - r.eve_capacity, 1e-15);
    }
    EXPECT_TRUE(flagged);
}

TEST(DelayTolerantTest, MbsMarginGrowsWithAntennas) {
    NetworkConfig c;
    c.eta_m = 3.3;
    double prev = -1e9;
    for (int n : {100, 200, 300, 400, 500}) {
        c.n_m = n;
        const auto r = delay_tolerant_rate_rule(LinkSpec::mbs_shared(), 0.5, c);
        EXPECT_GT(r.margin, prev);
        prev = r.margin;
    }
}

TEST(EnergyTest, LinearInAlphaOnApproximatePath) {
    NetworkConfig a, b;
    a.alpha = 0.4;
    b.alpha = 0.8;
    const PowerModel pm;
    const auto ea = energy_efficiency(a, pm);
    const auto eb = energy_efficiency(b, pm);
    EXPECT_NEAR(eb.ee_rrh_approx / ea.ee_rrh_approx, 2.0, 1e-12);
    EXPECT_NEAR(eb.ee_mbs / ea.ee_mbs, 1.0, 1e-12);
}

TEST(EnergyTest, NonnegativeAndNetworkGain) {
    NetworkConfig sparse, dense;
    sparse.lambda_r = 10.0 * sparse.lambda_m;
    dense.lambda_r = 20.0 * dense.lambda_m;
    sparse.alpha = dense.alpha = 0.7;
    const PowerModel pm;
    const auto es = energy_efficiency(sparse, pm);
    const auto ed = energy_efficiency(dense, pm);
    for (double v : {es.ee_rrh, es.ee_rrh_approx, es.ee_mbs, es.ee_mbs_exact, es.ee_network})
        EXPECT_GE(v, 0.0);
    EXPECT_GT(ed.ee_network, es.ee_network);
}

TEST(EnergyTest, MbsDecreasingInAntennasIncreasingInUsers) {
    const PowerModel pm;
    NetworkConfig c;
    c.eta_m = 3.2;
    c.n_m = 200;
    const double e200 = energy_efficiency(c, pm).ee_mbs;
    c.n_m = 400;
    const double e400 = energy_efficiency(c, pm).ee_mbs;
    EXPECT_LT(e400, e200);
    c.s_users = 15;
    const double s15 = energy_efficiency(c, pm).ee_mbs;
    c.s_users = 30;
    EXPECT_GT(energy_efficiency(c, pm).ee_mbs, s15);
}

TEST(ScaleInvarianceTest, CommonPowerAndNoiseScaling) {
    const NetworkConfig c;
    NetworkConfig k = c;
    const double f = 7.3;
    k.n0 *= f;
    k.n1 *= f;
    k.ne *= f;
    k.p_r *= f;
    k.p_m *= f;
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
    for (const auto link : kLinks) {
        EXPECT_LT(rel(user_sinr_ccdf(link, 3.0, 40.0, k), user_sinr_ccdf(link, 3.0, 40.0, c)), 1e-9);
        EXPECT_LT(rel(user_ergodic_capacity(link, k), user_ergodic_capacity(link, c)), 1e-9);
        EXPECT_LT(rel(eve_sinr_cdf(link, 0.5, k), eve_sinr_cdf(link, 0.5, c)), 1e-9);
        EXPECT_LT(rel(eve_ergodic_capacity(link, k), eve_ergodic_capacity(link, c)), 1e-9);
    }
}

}  // namespace
}  // namespace hetcran
