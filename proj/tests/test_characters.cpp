#include "vilenkin/characters.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numbers>
#include <stdexcept>

using namespace vilenkin;

TEST_CASE("rademacher on the dyadic group is a sign") {
  auto walsh = make_base({2, 2, 2}, 3);
  const auto r0 = rademacher(walsh, 0);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const double expected = (x % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(r0[x] - cplx{expected, 0.0}) < 1e-15);
  }
  CHECK_THROWS_AS(rademacher(walsh, 3), std::out_of_range);
}

TEST_CASE("rademacher on a ternary digit hits all cube roots") {
  auto base = make_base({3, 2}, 2);
  const auto r0 = rademacher(base, 0);
  const cplx w{std::cos(2.0 * std::numbers::pi / 3), std::sin(2.0 * std::numbers::pi / 3)};
  CHECK(std::abs(r0[0] - cplx{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(r0[1] - w) < 1e-15);
  CHECK(std::abs(r0[2] - w * w) < 1e-15);
  CHECK(std::abs(haar_integral(r0)) < 1e-15);
}

TEST_CASE("rademacher functions have zero mean and unit modulus") {
  auto base = make_base({2, 3, 4}, 3);
  for (int k = 0; k < 3; ++k) {
    const auto r = rademacher(base, k);
    CHECK(std::abs(haar_integral(r)) < 1e-14);
    for (std::uint64_t x = 0; x < r.size(); ++x) {
      CHECK(std::abs(std::abs(r[x]) - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("characters match the direct exponential oracle") {
  for (auto base : {make_base({2, 2, 2, 2}, 4), make_base({2, 3, 4}, 3)}) {
    for (std::uint64_t n = 0; n < base->cell_count(); ++n) {
      CHECK(sup_distance(vilenkin_character(base, n), oracle::character(base, n)) < 1e-13);
    }
  }
}

TEST_CASE("psi_0 is one, psi_5 is the Walsh parity of digits 0 and 2") {
  auto walsh = make_base({2, 2, 2}, 3);
  const auto psi0 = vilenkin_character(walsh, 0);
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(std::abs(psi0[x] - cplx{1.0, 0.0}) < 1e-15);

  const auto psi5 = vilenkin_character(walsh, 5);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const int parity = static_cast<int>((x & 1) + ((x >> 2) & 1));
    const double expected = (parity % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(psi5[x] - cplx{expected, 0.0}) < 1e-15);
  }
  CHECK_THROWS_AS(vilenkin_character(walsh, 8), std::out_of_range);
}

TEST_CASE("orthonormality at M_N = 24") {
  auto base = make_base({2, 3, 4}, 3);
  for (std::uint64_t i = 0; i < 24; ++i) {
    const auto psi_i = vilenkin_character(base, i);
    for (std::uint64_t j = 0; j < 24; ++j) {
      const cplx ip = oracle::inner(psi_i, vilenkin_character(base, j));
      const double expected = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(ip - cplx{expected, 0.0}) < 1e-12);
    }
  }
}

TEST_CASE("no-carry multiplicativity psi_a * psi_b = psi_{a+b}") {
  auto base = make_base({2, 3, 4}, 3);
  for (std::uint64_t a = 0; a < 24; ++a) {
    for (std::uint64_t b = 0; b < 24; ++b) {
      const auto da = base->to_digits(a);
      const auto db = base->to_digits(b);
      bool carries = false;
      for (int k = 0; k < 3; ++k) {
        if (da[static_cast<std::size_t>(k)] + db[static_cast<std::size_t>(k)] >=
            base->radix(k)) {
          carries = true;
        }
      }
      if (carries) continue;
      const auto pa = vilenkin_character(base, a);
      const auto pb = vilenkin_character(base, b);
      CellFunction prod(base);
      for (std::uint64_t x = 0; x < 24; ++x) prod[x] = pa[x] * pb[x];
      CHECK(sup_distance(prod, vilenkin_character(base, a + b)) < 1e-12);
    }
  }
}

TEST_CASE("dirichlet agrees with direct character summation exhaustively") {
  for (auto base : {make_base({2, 2, 2, 2}, 4), make_base({2, 3, 4}, 3)}) {
    for (std::uint64_t n = 0; n <= base->cell_count(); ++n) {
      CHECK(sup_distance(dirichlet(base, n), oracle::dirichlet(base, n)) < 1e-11);
    }
  }
}

TEST_CASE("dirichlet basics") {
  auto walsh = make_base({2, 2, 2}, 3);
  const auto d0 = dirichlet(walsh, 0);
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(std::abs(d0[x]) < 1e-15);

  const auto d1 = dirichlet(walsh, 1);
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(std::abs(d1[x] - cplx{1.0, 0.0}) < 1e-15);

  // D_3 = 1 + (-1)^{x_0} + (-1)^{x_1}
  const auto d3 = dirichlet(walsh, 3);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const double expected = 1.0 + ((x & 1) ? -1.0 : 1.0) + (((x >> 1) & 1) ? -1.0 : 1.0);
    CHECK(std::abs(d3[x] - cplx{expected, 0.0}) < 1e-14);
  }
  CHECK_THROWS_AS(dirichlet(walsh, 9), std::out_of_range);
}

TEST_CASE("Paley identity D_{M_n} = M_n 1_{I_n(0)}") {
  for (auto base : {make_base({2, 2, 2, 2}, 4), make_base({2, 3, 4}, 3)}) {
    for (int n = 0; n <= base->resolution(); ++n) {
      CellFunction expected = interval_indicator(base, n, 0);
      expected *= cplx{static_cast<double>(base->scale(n)), 0.0};
      CHECK(sup_distance(dirichlet(base, base->scale(n)), expected) < 1e-12);
    }
  }
}

TEST_CASE("kernel recursion for leading digit 1") {
  auto walsh = make_base({2, 2, 2}, 3);
  // D_5 = D_4 + r_2 D_1 and D_6 = D_4 + r_2 D_2
  for (std::uint64_t n : {5u, 6u, 7u}) {
    CHECK(sup_distance(dirichlet_recursive(walsh, n), dirichlet(walsh, n)) < 1e-13);
  }
  // exhaustive over leading digit 1
  auto mixed = make_base({2, 3, 4}, 3);
  for (std::uint64_t n = 2; n <= mixed->cell_count(); ++n) {
    const auto digits = mixed->to_digits(n == 24 ? 23 : n);
    int lead = 0;
    for (int k = 0; k < 3; ++k) {
      if (digits[static_cast<std::size_t>(k)] != 0) lead = k;
    }
    if (n < 24 && mixed->to_digits(n)[static_cast<std::size_t>(lead)] == 1) {
      CHECK(sup_distance(dirichlet_recursive(mixed, n), oracle::dirichlet(mixed, n)) <
            1e-11);
    }
  }
}

TEST_CASE("dirichlet kernels have unit mean for n >= 1") {
  auto base = make_base({2, 3, 4}, 3);
  for (std::uint64_t n = 1; n <= base->cell_count(); ++n) {
    CHECK(std::abs(haar_integral(dirichlet(base, n)) - cplx{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("fejer kernel") {
  auto walsh = make_base({2, 2, 2}, 3);
  CHECK(sup_distance(fejer_kernel(walsh, 1), dirichlet(walsh, 1)) < 1e-15);
  CHECK_THROWS_AS(fejer_kernel(walsh, 0), std::invalid_argument);

  for (std::uint64_t n = 1; n <= 8; ++n) {
    // oracle: direct mean of direct kernels
    CellFunction mean(walsh);
    for (std::uint64_t k = 1; k <= n; ++k) mean += oracle::dirichlet(walsh, k);
    mean *= cplx{1.0 / static_cast<double>(n), 0.0};
    CHECK(sup_distance(fejer_kernel(walsh, n), mean) < 1e-12);
    CHECK(std::abs(haar_integral(fejer_kernel(walsh, n)) - cplx{1.0, 0.0}) < 1e-12);
  }
}
