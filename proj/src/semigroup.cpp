#include "arfkit/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace arfkit {

  ////////////////////////////////////////////////////////////////////////
  // NumericalSemigroup
  ////////////////////////////////////////////////////////////////////////

  NumericalSemigroup::NumericalSemigroup()
      : _gens{1}, _frobenius(-1), _genus(0), _window{true} {}

  NumericalSemigroup
  NumericalSemigroup::from_generators(std::span<value_type const> gens) {
    if (gens.empty()) {
      throw InvalidInput("empty generator list");
    }
    value_type g = 0;
    for (auto a : gens) {
      if (a <= 0) {
        throw InvalidInput("generators must be positive, found "
                           + std::to_string(a));
      }
      g = std::gcd(g, a);
    }
    if (g != 1) {
      throw InvalidSemigroup("gcd of generators is " + std::to_string(g)
                             + ", the complement would be infinite");
    }
    value_type const smallest = *std::min_element(gens.begin(), gens.end());

    // Grow the table until `smallest` consecutive members appear; from
    // there on every integer is reached by adding `smallest`.
    std::vector<bool> table{true};
    value_type        run = 1;
    for (value_type n = 1; run < smallest; ++n) {
      bool in = false;
      for (auto a : gens) {
        if (a <= n && table[static_cast<std::size_t>(n - a)]) {
          in = true;
          break;
        }
      }
      table.push_back(in);
      run = in ? run + 1 : 0;
    }
    NumericalSemigroup result;
    result.init_from_table(std::move(table));
    return result;
  }

  NumericalSemigroup
  NumericalSemigroup::from_membership(std::vector<bool> const& table) {
    NumericalSemigroup result;
    result.init_from_table(table);
    return result;
  }

  NumericalSemigroup
  NumericalSemigroup::from_gaps(std::span<value_type const> gaps) {
    value_type top = 0;
    for (auto x : gaps) {
      if (x <= 0) {
        throw InvalidSemigroup("gap " + std::to_string(x)
                               + " is not a positive integer");
      }
      top = std::max(top, x);
    }
    std::vector<bool> table(static_cast<std::size_t>(top) + 1, true);
    for (auto x : gaps) {
      table[static_cast<std::size_t>(x)] = false;
    }
    return from_membership(table);
  }

  void NumericalSemigroup::init_from_table(std::vector<bool> table) {
    if (table.empty()) {
      table.push_back(true);
    }
    if (!table[0]) {
      throw InvalidSemigroup("0 must be a member");
    }
    value_type frob = -1;
    for (std::size_t n = table.size(); n-- > 0;) {
      if (!table[n]) {
        frob = static_cast<value_type>(n);
        break;
      }
    }
    table.resize(static_cast<std::size_t>(frob) + 2);
    table[static_cast<std::size_t>(frob) + 1] = true;

    for (value_type x = 1; x <= frob; ++x) {
      if (!table[x]) {
        continue;
      }
      for (value_type y = x; x + y <= frob; ++y) {
        if (table[y] && !table[x + y]) {
          throw InvalidSemigroup("not closed under addition: "
                                 + std::to_string(x) + " + "
                                 + std::to_string(y));
        }
      }
    }

    _frobenius = frob;
    _window    = std::move(table);
    _genus     = static_cast<value_type>(
        std::count(_window.begin(), _window.end(), false));

    value_type mult = 1;
    while (!contains(mult)) {
      ++mult;
    }
    // Minimal generators are the irreducible members, all at most F + m
    // (or 1 for N).
    _gens.clear();
    for (value_type n = mult; n <= std::max(frob + mult, mult); ++n) {
      if (!contains(n)) {
        continue;
      }
      bool irreducible = true;
      for (value_type x = mult; 2 * x <= n; ++x) {
        if (contains(x) && contains(n - x)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) {
        _gens.push_back(n);
      }
    }
  }

  std::vector<value_type> NumericalSemigroup::gaps() const {
    std::vector<value_type> out;
    out.reserve(static_cast<std::size_t>(_genus));
    for (value_type n = 1; n <= _frobenius; ++n) {
      if (!contains(n)) {
        out.push_back(n);
      }
    }
    return out;
  }

  std::vector<value_type>
  NumericalSemigroup::members_below(value_type bound) const {
    std::vector<value_type> out;
    for (value_type n = 0; n < bound; ++n) {
      if (contains(n)) {
        out.push_back(n);
      }
    }
    return out;
  }

  bool NumericalSemigroup::is_subset_of(NumericalSemigroup const& other) const {
    if (other._frobenius > _frobenius) {
      // other has a gap above our conductor
      for (value_type n = _frobenius + 1; n <= other._frobenius; ++n) {
        if (!other.contains(n)) {
          return false;
        }
      }
    }
    for (value_type n = 0; n <= _frobenius; ++n) {
      if (contains(n) && !other.contains(n)) {
        return false;
      }
    }
    return true;
  }

  std::vector<value_type> apery_set(NumericalSemigroup const& h, value_type n) {
    if (n <= 0 || !h.contains(n)) {
      throw DomainError("Apery set needs a positive member, got "
                        + std::to_string(n));
    }
    std::vector<value_type> out(static_cast<std::size_t>(n), -1);
    value_type              found = 0;
    for (value_type x = 0; found < n; ++x) {
      auto& slot = out[static_cast<std::size_t>(x % n)];
      if (slot < 0 && h.contains(x)) {
        slot = x;
        ++found;
      }
    }
    return out;
  }

  std::vector<value_type> pseudo_frobenius(NumericalSemigroup const& h) {
    if (h.is_natural_numbers()) {
      return {-1};
    }
    std::vector<value_type> out;
    for (auto x : h.gaps()) {
      bool ok = std::all_of(h.generators().begin(),
                            h.generators().end(),
                            [&](value_type a) { return h.contains(x + a); });
      if (ok) {
        out.push_back(x);
      }
    }
    return out;
  }

  value_type type(NumericalSemigroup const& h) {
    return static_cast<value_type>(pseudo_frobenius(h).size());
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    bool strip(std::string_view& s,
               std::string_view  open,
               std::string_view  close) {
      if (s.starts_with(open) && s.ends_with(close)
          && s.size() >= open.size() + close.size()) {
        s.remove_prefix(open.size());
        s.remove_suffix(close.size());
        return true;
      }
      return false;
    }
  }  // namespace

  std::vector<value_type> parse_generators(std::string_view text) {
    auto s = trim(text);
    if (!strip(s, "<", ">")) {
      strip(s, "⟨", "⟩");
    }
    s = trim(s);
    if (s.empty()) {
      throw InvalidInput("empty generator list");
    }
    std::vector<value_type> out;
    while (true) {
      auto comma = s.find(',');
      auto item  = trim(s.substr(0, comma));
      if (item.starts_with('+')) {
        item.remove_prefix(1);
      }
      value_type v   = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw InvalidInput("cannot parse generator '" + std::string(item) + "'");
      }
      if (v <= 0) {
        throw InvalidInput("generators must be positive, found "
                           + std::to_string(v));
      }
      out.push_back(v);
      if (comma == std::string_view::npos) {
        break;
      }
      s.remove_prefix(comma + 1);
    }
    return out;
  }

  std::string to_string(NumericalSemigroup const& h, bool unicode) {
    std::ostringstream os;
    os << (unicode ? "⟨" : "<");
    bool first = true;
    for (auto a : h.generators()) {
      os << (first ? "" : ",") << a;
      first = false;
    }
    os << (unicode ? "⟩" : ">");
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // RelativeIdeal
  ////////////////////////////////////////////////////////////////////////

  RelativeIdeal::RelativeIdeal(NumericalSemigroup const& ambient,
                               value_type                lo,
                               std::vector<bool>         window)
      : _ambient(ambient), _min(lo), _window(std::move(window)) {
    // normalize: leading non-members, trailing members
    auto first = std::find(_window.begin(), _window.end(), true);
    if (first == _window.end()) {
      // every member lies in the tail
      _min += static_cast<value_type>(_window.size());
      _window.clear();
    } else {
      auto skip = first - _window.begin();
      _min += static_cast<value_type>(skip);
      _window.erase(_window.begin(), first);
      while (!_window.empty() && _window.back()) {
        _window.pop_back();
      }
    }
    // E + H <= E; members >= bound() are fine automatically
    for (value_type e = _min; e < bound(); ++e) {
      if (!contains(e)) {
        continue;
      }
      for (auto a : _ambient.generators()) {
        if (!contains(e + a)) {
          throw DomainError("not an ideal over " + to_string(_ambient) + ": "
                            + std::to_string(e) + " + " + std::to_string(a)
                            + " is missing");
        }
      }
    }
  }

  RelativeIdeal RelativeIdeal::whole(NumericalSemigroup const& h) {
    return from_predicate(
        h, 0, h.conductor(), [&h](value_type n) { return h.contains(n); });
  }

  RelativeIdeal RelativeIdeal::maximal(NumericalSemigroup const& h) {
    return from_predicate(h, 0, h.conductor() + 1, [&h](value_type n) {
      return n != 0 && h.contains(n);
    });
  }

  RelativeIdeal RelativeIdeal::of_oversemigroup(NumericalSemigroup const& h,
                                                NumericalSemigroup const& s) {
    if (!h.is_subset_of(s)) {
      throw DomainError(to_string(h) + " is not contained in " + to_string(s));
    }
    return from_predicate(
        h, 0, s.conductor(), [&s](value_type n) { return s.contains(n); });
  }

  std::vector<value_type> RelativeIdeal::finite_part() const {
    std::vector<value_type> out;
    for (value_type n = _min; n < bound(); ++n) {
      if (contains(n)) {
        out.push_back(n);
      }
    }
    return out;
  }

  RelativeIdeal RelativeIdeal::translate(value_type x) const {
    RelativeIdeal out(*this);
    out._min += x;
    return out;
  }

  RelativeIdeal RelativeIdeal::over(NumericalSemigroup const& ambient) const {
    return RelativeIdeal(ambient, _min, _window);
  }

  bool RelativeIdeal::is_subset_of(RelativeIdeal const& other) const {
    if (_min < other._min) {
      return false;
    }
    auto top = std::max(bound(), other.bound());
    for (value_type n = _min; n < top; ++n) {
      if (contains(n) && !other.contains(n)) {
        return false;
      }
    }
    return true;
  }

  namespace {
    void check_ambient(RelativeIdeal const& e, RelativeIdeal const& f) {
      if (!(e.ambient() == f.ambient())) {
        throw AmbientMismatch("ideals over " + to_string(e.ambient())
                              + " and " + to_string(f.ambient()));
      }
    }
  }  // namespace

  RelativeIdeal ideal_sum(RelativeIdeal const& e, RelativeIdeal const& f) {
    check_ambient(e, f);
    value_type const lo = e.min() + f.min();
    // n >= bound(E) + min(F) is bound(E)-tail + min(F); symmetric for F
    value_type const hi
        = std::min(e.bound() + f.min(), f.bound() + e.min());
    return RelativeIdeal::from_predicate(
        e.ambient(), lo, hi, [&](value_type n) {
          for (value_type x = e.min(); x <= n - f.min(); ++x) {
            if (e.contains(x) && f.contains(n - x)) {
              return true;
            }
          }
          return false;
        });
  }

  RelativeIdeal ideal_quotient(RelativeIdeal const& e, RelativeIdeal const& f) {
    check_ambient(e, f);
    // x < min(E) - min(F) puts x + min(F) below E; x >= bound(E) - min(F)
    // puts all of x + F inside the tail of E.
    value_type const lo = e.min() - f.min();
    value_type const hi = e.bound() - f.min();
    return RelativeIdeal::from_predicate(
        e.ambient(), lo, hi, [&](value_type x) {
          for (value_type y = f.min(); x + y < e.bound(); ++y) {
            if (f.contains(y) && !e.contains(x + y)) {
              return false;
            }
          }
          return true;
        });
  }

  NumericalSemigroup monoid_generated_by(RelativeIdeal const& e) {
    if (e.min() != 0) {
      throw DomainError("monoid_generated_by needs min 0, got min "
                        + std::to_string(e.min()));
    }
    auto const        n = static_cast<std::size_t>(e.bound());
    std::vector<bool> table(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      bool in = e.contains(static_cast<value_type>(x));
      for (std::size_t y = 1; !in && 2 * y <= x; ++y) {
        in = table[y] && table[x - y];
      }
      table[x] = in;
    }
    return NumericalSemigroup::from_membership(table);
  }

  value_type ideal_colength(RelativeIdeal const& e, RelativeIdeal const& f) {
    check_ambient(e, f);
    if (!f.is_subset_of(e)) {
      throw DomainError("colength needs F inside E");
    }
    value_type count = 0;
    for (value_type n = e.min(); n < f.bound(); ++n) {
      if (e.contains(n) && !f.contains(n)) {
        ++count;
      }
    }
    return count;
  }

  std::optional<value_type> stability_witness(RelativeIdeal const& e) {
    auto const square = ideal_sum(e, e);
    if (square.same_set(e.translate(e.min()))) {
      return e.min();
    }
    for (auto x : e.finite_part()) {
      if (x != e.min() && square.same_set(e.translate(x))) {
        return x;
      }
    }
    return std::nullopt;
  }

}  // namespace arfkit
