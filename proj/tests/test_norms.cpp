#include "vilenkin/norms.hpp"

#include "vilenkin/characters.hpp"
#include "vilenkin/sharpness.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace vilenkin;

TEST_CASE("lp quasi-norm") {
  auto walsh = make_base({2, 2, 2}, 3);
  CellFunction one(walsh);
  for (auto& v : one.values()) v = cplx{1.0, 0.0};
  CHECK(lp_quasinorm(one, 0.5) == doctest::Approx(1.0));
  CHECK(lp_quasinorm(one, 2.0) == doctest::Approx(1.0));

  // ||D_{M_n}||_p = M_n^{1-1/p}: D_4 at p = 1/2 gives 1/4
  const auto d4 = dirichlet(walsh, 4);
  CHECK(lp_quasinorm(d4, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(lp_quasinorm(d4, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  // homogeneity
  const auto f = oracle::random_function(walsh, 2);
  for (double p : {0.3, 0.5, 1.0, 2.0}) {
    CellFunction g = f;
    g *= cplx{-2.5, 0.0};
    CHECK(lp_quasinorm(g, p) == doctest::Approx(2.5 * lp_quasinorm(f, p)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lp_quasinorm(f, 0.0), std::domain_error);
}

TEST_CASE("weak lp quasi-norm") {
  auto walsh = make_base({2, 2, 2}, 3);

  const auto half = interval_indicator(walsh, 1, 0);
  for (double p : {0.5, 1.0, 2.0}) {
    CHECK(weak_lp_quasinorm(half, p) == doctest::Approx(std::pow(0.5, 1.0 / p)));
  }

  CellFunction c(walsh);
  for (auto& v : c.values()) v = cplx{0.0, -3.0};
  CHECK(weak_lp_quasinorm(c, 0.7) == doctest::Approx(3.0));

  // Chebyshev: weak <= strong, random suite
  for (std::uint32_t seed = 0; seed < 8; ++seed) {
    const auto f = oracle::random_function(walsh, seed);
    for (double p : {0.3, 0.5, 1.0}) {
      CHECK(weak_lp_quasinorm(f, p) <= lp_quasinorm(f, p) + 1e-12);
    }
  }
}

TEST_CASE("maximal function") {
  auto walsh = make_base(std::vector<int>(4, 2), 4);

  // constant
  CellFunction c(walsh);
  for (auto& v : c.values()) v = cplx{2.0, 1.0};
  const auto cstar = maximal_function(c);
  for (std::uint64_t x = 0; x < c.size(); ++x) {
    CHECK(cstar[x].real() == doctest::Approx(std::abs(cplx{2.0, 1.0})));
  }

  // f* >= |f| and matches the per-level oracle
  for (std::uint32_t seed = 0; seed < 4; ++seed) {
    const auto f = oracle::random_function(walsh, seed);
    const auto s = oracle::analyze(f);
    const auto fstar = maximal_function(f);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      CHECK(fstar[x].real() >= std::abs(f[x]) - 1e-12);
      double expected = 0.0;
      for (int n = 0; n <= walsh->resolution(); ++n) {
        const auto level = oracle::partial_sum(s, walsh->scale(n));
        expected = std::max(expected, std::abs(level[x]));
      }
      CHECK(fstar[x].real() == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("maximal function on a mixed-radix base") {
  auto base = make_base({2, 3, 4}, 3);
  const auto f = oracle::random_function(base, 31);
  const auto s = oracle::analyze(f);
  const auto fstar = maximal_function(f);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    double expected = 0.0;
    for (int n = 0; n <= 3; ++n) {
      const auto level = oracle::partial_sum(s, base->scale(n));
      expected = std::max(expected, std::abs(level[x]));
    }
    CHECK(fstar[x].real() == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("hp norm of characters and the counterexample") {
  auto walsh = make_base(std::vector<int>(4, 2), 4);

  // f = psi_n, n >= 1: each S_{M_j} picks psi_n up fully or not at all
  for (std::uint64_t n : {1u, 3u, 7u}) {
    const auto psi = vilenkin_character(walsh, n);
    for (double p : {0.5, 1.0}) {
      CHECK(hp_norm(psi, p) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  // f_1 = D_8 - D_4: H_{1/2} norm 1/4, H_1 norm 1
  const auto f1 = counterexample(walsh, 1);
  CHECK(hp_norm(f1, 0.5) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(hp_norm(f1, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  // f* = |f| for the counterexample
  const auto fstar = maximal_function(f1);
  for (std::uint64_t x = 0; x < f1.size(); ++x) {
    CHECK(fstar[x].real() == doctest::Approx(std::abs(f1[x])).epsilon(1e-12));
  }

  // hp >= lp always
  for (std::uint32_t seed = 0; seed < 4; ++seed) {
    const auto f = oracle::random_function(walsh, seed);
    for (double p : {0.3, 0.5, 1.0}) {
      CHECK(hp_norm(f, p) >= lp_quasinorm(f, p) - 1e-12);
    }
  }
}

TEST_CASE("atom validation") {
  auto walsh = make_base({2, 2, 2}, 3);
  const double p = 0.5;

  // a mean-zero, correctly normalized atom on I_1(0)
  {
    const double height = std::pow(2.0, 1.0 / p);  // mu(I_1)^{-1/p}
    CellFunction a(walsh);
    for (std::uint64_t x = 0; x < 8; ++x) {
      if (x % 2 != 0) continue;              // outside I_1(0)
      a[x] = (x % 4 == 0) ? cplx{height, 0} : cplx{-height, 0};
    }
    const auto cert = validate_atom(a, p, 1, 0);
    CHECK(cert.mean_zero);
    CHECK(cert.sup_bound);
    CHECK(cert.supported);
    CHECK(cert.passed());
  }

  // constant 1 on G_m fails mean-zero
  {
    CellFunction a(walsh);
    for (auto& v : a.values()) v = cplx{1.0, 0.0};
    const auto cert = validate_atom(a, p, 0, 0);
    CHECK_FALSE(cert.mean_zero);
    CHECK(cert.supported);
  }

  // the counterexample lives on I_2(0); against the smaller I_3(0) both the
  // support and mean-zero conditions fail
  {
    const auto f1 = counterexample(walsh, 1);
    const auto cert = validate_atom(f1, p, 3, 0);
    CHECK_FALSE(cert.supported);
    CHECK_FALSE(cert.mean_zero);
  }

  // oversized values break the sup bound
  {
    CellFunction a(walsh);
    a[0] = cplx{100.0, 0.0};
    a[2] = cplx{-100.0, 0.0};
    const auto cert = validate_atom(a, p, 1, 0);
    CHECK(cert.mean_zero);
    CHECK_FALSE(cert.sup_bound);
  }
}

TEST_CASE("atomic upper bound") {
  const std::vector<double> single{1.0};
  CHECK(atomic_upper_bound(single, 0.5) == doctest::Approx(1.0));
  const std::vector<double> pair{1.0, 1.0};
  CHECK(atomic_upper_bound(pair, 0.5) == doctest::Approx(4.0));
  CHECK_THROWS_AS(atomic_upper_bound(std::vector<double>{}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(atomic_upper_bound(single, 1.5), std::domain_error);

  // a concrete one-atom decomposition of f_1: it is mean-zero, supported
  // on I_2(0), with |f_1| <= 4 there, so f_1 = mu_0 * a with a an atom
  auto walsh = make_base(std::vector<int>(4, 2), 4);
  const auto f1 = counterexample(walsh, 1);
  const double p = 0.5;
  const double height = std::pow(4.0, 1.0 / p);  // mu(I_2)^{-1/p} = 16
  CellFunction a = f1;
  a *= cplx{height / 4.0, 0.0};
  const auto cert = validate_atom(a, p, 2, 0);
  CHECK(cert.passed());
  const double mu0 = 4.0 / height;
  CHECK(atomic_upper_bound(std::vector<double>{mu0}, p) >= 0.5 * hp_norm(f1, p));
}

TEST_CASE("paper weight function") {
  // p = 1/2: phi(n) = log2(n+1)^2, so phi(3) = 4
  const auto phi_half = WeightFunction::paper(0.5);
  CHECK(phi_half(3) == doctest::Approx(4.0));
  CHECK(phi_half(1) == doctest::Approx(1.0));

  // p = 1/4: no log factor, phi(3) = 4^2 = 16
  const auto phi_quarter = WeightFunction::paper(0.25);
  CHECK(phi_quarter(3) == doctest::Approx(16.0));

  CHECK_THROWS_AS(WeightFunction::paper(0.6), std::domain_error);
  CHECK_THROWS_AS(WeightFunction::paper(0.0), std::domain_error);

  // nondecreasing, >= 1, sampled up to 2^20
  for (double p : {0.1, 0.25, 0.5}) {
    const auto phi = WeightFunction::paper(p);
    double prev = 0.0;
    for (std::uint64_t n = 1; n <= (1u << 20); n *= 2) {
      const double v = phi(n);
      CHECK(v >= 1.0 - 1e-12);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("weighted maximal operator") {
  auto walsh = make_base(std::vector<int>(4, 2), 4);
  const auto f = oracle::random_function(walsh, 77);
  const auto s = analyze(f);
  auto q = CoefficientSequence::constant(1.0);
  const auto phi = WeightFunction::one();

  // singleton index set equals |T_n f| / phi(n)
  for (std::uint64_t n : {1u, 3u, 7u}) {
    const std::vector<std::uint64_t> idx{n};
    const auto g = weighted_maximal(s, q, phi, idx);
    const auto t = t_mean(s, q, n);
    for (std::uint64_t x = 0; x < g.size(); ++x) {
      CHECK(g[x].real() == doctest::Approx(std::abs(t[x])).epsilon(1e-10));
    }
  }

  // dominates every member and is monotone in the index set
  std::vector<std::uint64_t> all(16);
  std::iota(all.begin(), all.end(), std::uint64_t{1});
  const auto g_all = weighted_maximal(s, q, phi, all);
  for (std::uint64_t n = 1; n <= 16; ++n) {
    const auto t = t_mean(s, q, n);
    for (std::uint64_t x = 0; x < g_all.size(); ++x) {
      CHECK(g_all[x].real() >= std::abs(t[x]) - 1e-11);
    }
  }
  const std::vector<std::uint64_t> some{2, 5, 9};
  const auto g_some = weighted_maximal(s, q, phi, some);
  for (std::uint64_t x = 0; x < g_all.size(); ++x) {
    CHECK(g_all[x].real() >= g_some[x].real() - 1e-11);
  }

  CHECK_THROWS_AS(weighted_maximal(s, q, phi, std::vector<std::uint64_t>{}),
                  std::invalid_argument);
}
