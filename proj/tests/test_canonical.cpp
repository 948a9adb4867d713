#include "doctest.h"

#include "arfkit/canonical.hpp"
#include "arfkit/classify.hpp"
#include "arfkit/oracle.hpp"
#include "support/convert.hpp"

using namespace arfkit;

namespace {
  NumericalSemigroup sg(std::initializer_list<value_type> gens) {
    return NumericalSemigroup::from_generators(gens);
  }

  brute::Set translates(NumericalSemigroup const& h,
                        std::vector<int> const&   shifts) {
    brute::Set out;
    for (int s : shifts) {
      auto t = brute::shift(brute::to_set(h), s);
      out.insert(t.begin(), t.end());
    }
    return brute::below(out, brute::kWindow);
  }
}  // namespace

TEST_CASE("canonical_ideal") {
  auto h = sg({3, 7, 11});
  auto k = canonical_ideal(h);
  CHECK(k.min() == 0);
  CHECK(k.finite_part() == std::vector<value_type>{0, 3, 4, 6, 7});
  CHECK(k.bound() == 9);
  CHECK(brute::below(brute::to_set(k), brute::kWindow)
        == translates(h, {0, 4}));

  auto h5 = sg({5, 16, 17, 18, 19});
  CHECK(brute::below(brute::to_set(canonical_ideal(h5)), brute::kWindow)
        == translates(h5, {0, 1, 2, 3}));

  auto h6 = sg({4, 5, 6});
  CHECK(canonical_ideal(h6) == RelativeIdeal::whole(h6));
  CHECK(canonical_ideal(NumericalSemigroup())
        == RelativeIdeal::whole(NumericalSemigroup()));
}

TEST_CASE("extension_S") {
  CHECK(extension_S(sg({5, 16, 17, 18, 19})).is_natural_numbers());
  CHECK(extension_S(sg({4, 5, 6})) == sg({4, 5, 6}));
  CHECK(extension_S(sg({3, 7, 11})) == sg({3, 4}));
}

TEST_CASE("conductor_and_length") {
  auto [c5, ell5] = conductor_and_length(sg({5, 16, 17, 18, 19}));
  CHECK(ell5 == 3);
  CHECK(c5.min() == 15);
  CHECK(c5.bound() == 15);

  auto h = sg({4, 5, 6});
  auto [c6, ell6] = conductor_and_length(h);
  CHECK(ell6 == 0);
  CHECK(c6 == RelativeIdeal::whole(h));

  auto [c3, ell3] = conductor_and_length(sg({3, 7, 11}));
  CHECK(ell3 == 1);
  CHECK(c3.finite_part() == std::vector<value_type>{3, 6, 7});
  CHECK(c3.bound() == 9);
}

TEST_CASE("canonical data against brute force") {
  for_each_by_genus(8, [](NumericalSemigroup const& h) {
    CAPTURE(to_string(h));
    auto const cd = canonical_data(h);
    auto const hs = brute::to_set(h);
    int const  f  = h.frobenius();

    brute::Set k;
    for (int x = 0; x < brute::kWindow; ++x) {
      if (!hs.count(f - x)) {
        k.insert(x);
      }
    }
    CHECK(brute::below(brute::to_set(cd.canonical), brute::kWindow) == k);

    std::vector<int> kgens(k.begin(), k.end());
    kgens.erase(kgens.begin());  // drop 0
    auto const s = kgens.empty() ? brute::Set{0} : brute::monoid(kgens);
    CHECK(brute::below(brute::to_set(cd.extension), brute::kWindow)
          == brute::below(s, brute::kWindow));

    auto const c = brute::colon(hs, brute::to_set(cd.extension), 0);
    CHECK(brute::below(brute::to_set(cd.conductor), brute::kWindow) == c);

    int ell = 0;
    for (int n = 0; n < brute::kWindow; ++n) {
      ell += hs.count(n) && !c.count(n);
    }
    CHECK(cd.ell == ell);
  });
}

TEST_CASE("canonical invariants") {
  for_each_by_genus(10, [](NumericalSemigroup const& h) {
    CAPTURE(to_string(h));
    auto const cd    = canonical_data(h);
    auto const whole = RelativeIdeal::whole(h);
    CHECK(whole.is_subset_of(cd.canonical));
    CHECK(cd.canonical.min() == 0);
    CHECK(h.is_subset_of(cd.extension));
    CHECK(cd.conductor.is_subset_of(whole));
    if (!h.is_natural_numbers()) {
      CHECK(ideal_colength(cd.canonical, whole)
            == 2 * h.genus() - h.frobenius() - 1);
    }
    bool const sym = is_symmetric(h);
    CHECK((cd.ell == 0) == sym);
    CHECK((cd.canonical == whole) == sym);
    CHECK((cd.extension == h) == sym);
    CHECK((cd.ell == 1) == (is_almost_symmetric(h) && !sym));
    CHECK(is_almost_symmetric(h)
          == (2 * h.genus() == h.frobenius() + type(h)));
  });
}

TEST_CASE("b_extension_length") {
  CHECK(b_extension_length(sg({5, 16, 17, 18, 19})) == 2);
  CHECK(b_extension_length(sg({3, 7, 11})) == 0);
  CHECK(b_extension_length(sg({4, 5, 6})) == std::nullopt);
  CHECK(b_extension_length(sg({2, 5})) == std::nullopt);
  CHECK(b_extension_length(NumericalSemigroup()) == std::nullopt);
  // symmetric with max embedding dimension needs multiplicity <= 2, so the
  // symmetric refusal is exercised above; non-max-embdim also refuses
  CHECK(b_extension_length(sg({4, 7, 9})) == std::nullopt);
}
