#pragma once

// Numerical semigroups H <= N and their relative ideals E <= Z (E + H <= E).
//
// A numerical semigroup models the ring k[[t^H]]; a relative ideal models a
// monomial fractional ideal of that ring.  Both are stored as a dense
// membership table over a finite window followed by an implicit full tail,
// and both are immutable once constructed.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arfkit/errors.hpp"

namespace arfkit {

  using value_type = int;

  class NumericalSemigroup {
   public:
    //! The semigroup N = <1>.
    NumericalSemigroup();

    //! The semigroup generated by \p gens.  Non-minimal input is reduced.
    //!
    //! \throws InvalidInput if \p gens is empty or has a non-positive entry.
    //! \throws InvalidSemigroup if the gcd of \p gens is not 1.
    static NumericalSemigroup from_generators(std::span<value_type const> gens);
    static NumericalSemigroup
    from_generators(std::initializer_list<value_type> gens) {
      return from_generators(std::span<value_type const>(gens.begin(),
                                                         gens.size()));
    }

    //! The semigroup whose members below table.size() are the true entries
    //! of \p table and which contains every n >= table.size().
    //!
    //! \throws InvalidSemigroup if table[0] is false or the set is not closed
    //! under addition.
    static NumericalSemigroup from_membership(std::vector<bool> const& table);

    //! The semigroup N \ gaps.
    static NumericalSemigroup from_gaps(std::span<value_type const> gaps);

    [[nodiscard]] bool contains(value_type n) const noexcept {
      if (n < 0) {
        return false;
      }
      if (n > _frobenius) {
        return true;
      }
      return _window[static_cast<std::size_t>(n)];
    }

    [[nodiscard]] std::vector<value_type> const& generators() const noexcept {
      return _gens;
    }
    [[nodiscard]] value_type frobenius() const noexcept {
      return _frobenius;
    }
    //! F + 1; every n >= conductor() is a member.
    [[nodiscard]] value_type conductor() const noexcept {
      return _frobenius + 1;
    }
    [[nodiscard]] value_type genus() const noexcept {
      return _genus;
    }
    [[nodiscard]] value_type multiplicity() const noexcept {
      return _gens.front();
    }
    [[nodiscard]] value_type embedding_dimension() const noexcept {
      return static_cast<value_type>(_gens.size());
    }
    [[nodiscard]] bool has_max_embedding_dimension() const noexcept {
      return embedding_dimension() == multiplicity();
    }
    [[nodiscard]] bool is_natural_numbers() const noexcept {
      return _frobenius == -1;
    }

    [[nodiscard]] std::vector<value_type> gaps() const;
    //! Members in [0, bound).
    [[nodiscard]] std::vector<value_type> members_below(value_type bound) const;

    //! True iff every member of *this is a member of \p other.
    [[nodiscard]] bool is_subset_of(NumericalSemigroup const& other) const;

    friend bool operator==(NumericalSemigroup const& a,
                           NumericalSemigroup const& b) {
      return a._gens == b._gens;
    }
    friend bool operator<(NumericalSemigroup const& a,
                          NumericalSemigroup const& b) {
      return a._gens < b._gens;
    }

   private:
    void init_from_table(std::vector<bool> table);

    std::vector<value_type> _gens;
    value_type              _frobenius;
    value_type              _genus;
    // _window[n] for n in [0, F + 1]
    std::vector<bool> _window;
  };

  //! Minimal member of each residue class modulo \p n, indexed by class.
  //!
  //! \throws DomainError unless n > 0 and n is a member of \p h.
  std::vector<value_type> apery_set(NumericalSemigroup const& h, value_type n);

  //! PF(H) in increasing order; {-1} for N.
  std::vector<value_type> pseudo_frobenius(NumericalSemigroup const& h);

  //! Cohen-Macaulay type, |PF(H)|.
  value_type type(NumericalSemigroup const& h);

  // Text and number parsing

  //! Parses "4,7,9,10", optionally wrapped in "<...>" or "⟨...⟩".
  //!
  //! \throws InvalidInput on malformed text.
  std::vector<value_type> parse_generators(std::string_view text);

  //! "<4,7,9,10>", or "⟨4,7,9,10⟩" when \p unicode is set.
  std::string to_string(NumericalSemigroup const& h, bool unicode = false);

  class RelativeIdeal {
   public:
    //! The ideal {n in [lo, hi) : member(n)} u [hi, infinity) over
    //! \p ambient.
    //!
    //! \throws DomainError if the set is empty below hi and hi is not a
    //! sensible bound, or if it is not closed under adding \p ambient.
    template <typename Pred>
    static RelativeIdeal from_predicate(NumericalSemigroup const& ambient,
                                        value_type                lo,
                                        value_type                hi,
                                        Pred&&                    member) {
      std::vector<bool> window;
      if (hi > lo) {
        window.reserve(static_cast<std::size_t>(hi - lo));
      }
      for (value_type n = lo; n < hi; ++n) {
        window.push_back(static_cast<bool>(member(n)));
      }
      return RelativeIdeal(ambient, lo, std::move(window));
    }

    //! The semigroup itself as an ideal over itself.
    static RelativeIdeal whole(NumericalSemigroup const& h);
    //! M = H \ {0}.
    static RelativeIdeal maximal(NumericalSemigroup const& h);
    //! The members of the oversemigroup \p s, viewed as an ideal over \p h.
    //!
    //! \throws DomainError unless h is a subset of s.
    static RelativeIdeal of_oversemigroup(NumericalSemigroup const& h,
                                          NumericalSemigroup const& s);

    [[nodiscard]] NumericalSemigroup const& ambient() const noexcept {
      return _ambient;
    }
    [[nodiscard]] value_type min() const noexcept {
      return _min;
    }
    //! Every n >= bound() is a member, and bound() - 1 is not (unless
    //! bound() == min()).
    [[nodiscard]] value_type bound() const noexcept {
      return _min + static_cast<value_type>(_window.size());
    }

    [[nodiscard]] bool contains(value_type n) const noexcept {
      if (n < _min) {
        return false;
      }
      if (n >= bound()) {
        return true;
      }
      return _window[static_cast<std::size_t>(n - _min)];
    }

    //! Members in [min(), bound()).
    [[nodiscard]] std::vector<value_type> finite_part() const;

    //! x + *this.
    [[nodiscard]] RelativeIdeal translate(value_type x) const;

    //! The same set, re-tagged as an ideal over \p ambient.
    //!
    //! \throws DomainError if the set is not closed under adding \p ambient.
    [[nodiscard]] RelativeIdeal over(NumericalSemigroup const& ambient) const;

    [[nodiscard]] bool is_subset_of(RelativeIdeal const& other) const;

    //! Equality of the underlying sets; the ambient is ignored.
    [[nodiscard]] bool same_set(RelativeIdeal const& other) const noexcept {
      return _min == other._min && _window == other._window;
    }

    friend bool operator==(RelativeIdeal const& a, RelativeIdeal const& b) {
      return a._ambient == b._ambient && a.same_set(b);
    }

   private:
    RelativeIdeal(NumericalSemigroup const& ambient,
                  value_type                lo,
                  std::vector<bool>         window);

    NumericalSemigroup _ambient;
    value_type         _min;
    // membership over [_min, bound())
    std::vector<bool> _window;
  };

  //! The sumset E + F.
  //!
  //! \throws AmbientMismatch
  RelativeIdeal ideal_sum(RelativeIdeal const& e, RelativeIdeal const& f);

  //! E - F = {x : x + F <= E}.
  //!
  //! \throws AmbientMismatch
  RelativeIdeal ideal_quotient(RelativeIdeal const& e, RelativeIdeal const& f);

  //! The smallest numerical semigroup containing \p e.
  //!
  //! \throws DomainError unless min(e) == 0.
  NumericalSemigroup monoid_generated_by(RelativeIdeal const& e);

  //! |E \ F|.
  //!
  //! \throws AmbientMismatch
  //! \throws DomainError unless F is a subset of E.
  value_type ideal_colength(RelativeIdeal const& e, RelativeIdeal const& f);

  //! Some x in E with E + E = x + E, if one exists.  Only x = min(E) can
  //! work, since min(E + E) = 2 min(E).
  std::optional<value_type> stability_witness(RelativeIdeal const& e);

  inline bool is_stable(RelativeIdeal const& e) {
    return stability_witness(e).has_value();
  }

}  // namespace arfkit
