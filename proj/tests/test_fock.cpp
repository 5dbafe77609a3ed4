#include <gtest/gtest.h>

#include "bfc/bfc.hpp"
#include "oracles.hpp"

using namespace bfc;

namespace {

Permutation pw(const Word& w) { return product_word(w); }
Permutation s(int i) { return Permutation::simple(i); }
const Permutation id{};
MPoly x(int i, int e = 1) { return MPoly::variable(i, e); }
YoungVector young(std::initializer_list<int> parts) { return YoungVector(Partition(parts)); }

}  // namespace

TEST(AlphaPlus, Examples) {
  EXPECT_EQ(alpha_plus(1, ket(s(1))), ket(id));
  EXPECT_EQ(alpha_plus(2, ket(pw({1, 2}))), ket(id) * Rational(-1));
  EXPECT_EQ(alpha_plus(2, ket(pw({2, 1}))), ket(id));
}

TEST(AlphaMinus, Examples) {
  EXPECT_EQ(alpha_minus(1, 1, ket(id)), ket(s(1)));
  EXPECT_EQ(alpha_minus(2, 1, ket(id)), ket(pw({2, 1})) - ket(pw({0, 1})));
  EXPECT_EQ(alpha_minus(1, 0, ket(id)), ket(s(0)));
}

TEST(AlphaCommutator, SmallCase) {
  // [α_1, α_{-2,1}] kills |id>.
  const FockVector v = ket(id);
  EXPECT_TRUE((alpha_plus(1, alpha_minus(2, 1, v)) - alpha_minus(2, 1, alpha_plus(1, v))).empty());
}

TEST(YoungAlpha, Examples) {
  EXPECT_EQ(young_alpha(-1, young({})), young({1}));
  EXPECT_EQ(young_alpha(-2, young({})), young({2}) - young({1, 1}));
  EXPECT_EQ(young_alpha(2, young({2})), young({}));
  // (2,2)/(1) is a ribbon of height 2; (2,2)/() is not a ribbon at all.
  EXPECT_EQ(young_alpha(3, young({2, 2})), young({1}) * Rational(-1));
  EXPECT_EQ(young_alpha(4, young({2, 2})), YoungVector{});
}

TEST(IsIncreasing, Examples) {
  EXPECT_TRUE(is_increasing_perm(id));
  EXPECT_TRUE(is_increasing_perm(pw({2, 1})));
  EXPECT_FALSE(is_increasing_perm(pw({1, 2})));
}

TEST(IsIncreasing, AgreesWithExhaustiveSearch) {
  for (const Permutation& v : permutation_pool(-1, 3, 4)) {
    bool has_decreasing = false;
    for (const Word& w : reduced_words(v))
      has_decreasing |= std::is_sorted(w.begin(), w.end(), std::greater_equal<>()) &&
                        std::adjacent_find(w.begin(), w.end()) == w.end();
    EXPECT_EQ(is_increasing_perm(v), has_decreasing);
  }
}

TEST(TransferRow, Examples) {
  EXPECT_EQ(transfer_row(id).rows, (std::map<std::pair<Permutation, int>, Rational>{{{id, 0}, 1}}));
  // Increasing factors are taken on the left: s2 s1 = (s2)(s1) = (s2 s1)(id).
  EXPECT_EQ(transfer_row(pw({2, 1})).rows,
            (std::map<std::pair<Permutation, int>, Rational>{
                {{pw({2, 1}), 0}, 1}, {{s(1), 1}, 1}, {{id, 2}, 1}}));
  EXPECT_EQ(transfer_row(pw({1, 2})).rows,
            (std::map<std::pair<Permutation, int>, Rational>{{{pw({1, 2}), 0}, 1},
                                                              {{s(2), 1}, 1}}));
}

TEST(SkewStanleyTransfer, Examples) {
  const Permutation w = pw({3, 1, 2});
  EXPECT_EQ(skew_stanley_via_transfer(w, w, 3), MPoly(1));
  EXPECT_EQ(skew_stanley_via_transfer(pw({1, 2}), id, 2), x(1) * x(2));
  EXPECT_EQ(skew_stanley_via_transfer(pw({2, 1}), id, 2), x(1, 2) + x(1) * x(2) + x(2, 2));
}

TEST(ExpHamiltonian, Examples) {
  EXPECT_EQ(exp_hamiltonian_apply(id, 1), (std::map<Permutation, MPoly>{{id, MPoly(1)}}));
  const auto a = exp_hamiltonian_apply(pw({1, 2}), 1);
  EXPECT_FALSE(a.contains(id));
  const auto b = exp_hamiltonian_apply(pw({2, 1}), 1);
  ASSERT_TRUE(b.contains(id));
  EXPECT_EQ(b.at(id), x(1, 2));
}

TEST(ExpHamiltonian, EqualsTransferRowOnSmallPool) {
  for (const Permutation& w : permutation_pool(-1, 3, 4))
    EXPECT_EQ(exp_hamiltonian_apply(w, 1), transfer_row_poly(w));
}

TEST(Chi, Examples) {
  EXPECT_EQ(chi(id, Partition{}), 1);
  EXPECT_EQ(chi(pw({1, 2}), Partition{2}), -1);
  EXPECT_EQ(chi(pw({1, 2}), Partition{1, 1}), 1);
  EXPECT_THROW(chi(pw({1, 2}), Partition{1}), SizeMismatch);
}

TEST(Chi, MatchesReducedWordSegments) {
  for (const Permutation& w : permutation_pool(-1, 3, 4))
    for (const Partition& alpha : partitions_of(w.length()))
      EXPECT_EQ(chi(w, alpha), oracle::chi(w, alpha));
}

TEST(StanleyOperator, Examples) {
  EXPECT_EQ(stanley_op_apply(id, 2, ket(id)), ket(id));
  EXPECT_EQ(stanley_op_apply(pw({1, 2}), 1, ket(id)), ket(pw({0, 1})));
  EXPECT_EQ(stanley_op_apply(pw({2, 1}), 1, ket(id)), ket(pw({2, 1})));
}

TEST(EgCoeffs, Examples) {
  using Table = std::map<Partition, Integer>;
  EXPECT_EQ(eg_coeffs(id, 0), (Table{{Partition{}, 1}}));
  EXPECT_EQ(eg_coeffs(pw({1, 2}), 1), (Table{{Partition{1, 1}, 1}}));
  EXPECT_EQ(eg_coeffs(pw({2, 1}), 1), (Table{{Partition{2}, 1}}));
  EXPECT_EQ(eg_coeffs(pw({1, 3, 2}), 0), (Table{{Partition{2, 1}, 1}}));
}

TEST(StanleyAdjoint, Examples) {
  EXPECT_EQ(stanley_adjoint_apply(id, ket(pw({3, 1}))), ket(pw({3, 1})));
  EXPECT_EQ(stanley_adjoint_apply(pw({1, 2}), ket(pw({1, 2}))), ket(id));
  // α_1 strips s2 from the left of s2 s1.
  EXPECT_EQ(stanley_adjoint_apply(s(1), ket(pw({2, 1}))), ket(s(1)));
}

TEST(SchurViaFermions, Examples) {
  EXPECT_EQ(schur_via_fermions(Partition{3, 1}, Partition{3, 1}, 2), MPoly(1));
  EXPECT_EQ(coeff(schur_via_fermions(Partition{3, 1}, Partition{}, 2),
                  Monomial({{1, 3}, {2, 1}})),
            1);
  EXPECT_EQ(schur_via_fermions(Partition{1, 1}, Partition{}, 2), x(1) * x(2));
  EXPECT_THROW(schur_via_fermions(Partition{1}, Partition{2}, 2), NotContained);
}
