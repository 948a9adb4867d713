#pragma once

// Brute-force reference computations used only by tests.  Everything here
// works on explicit std::set<int> slices of Z below a fixed horizon and
// deliberately shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

  // Sets are truncated to [-kHorizon, kHorizon); callers only compare
  // below kWindow, where truncation cannot interfere with sums of two
  // members or with colon tests.
  inline constexpr int kHorizon = 400;
  inline constexpr int kWindow  = 120;

  using Set = std::set<int>;

  //! All sums of generators below the horizon, by breadth-first closure.
  inline Set monoid(std::vector<int> const& gens) {
    Set              out{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (int g : gens) {
          int y = x + g;
          if (y < kHorizon && out.insert(y).second) {
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  inline Set below(Set const& s, int bound) {
    return Set(s.begin(), s.lower_bound(bound));
  }

  inline int frobenius(Set const& h) {
    int f = -1;
    for (int n = 0; n < kWindow; ++n) {
      if (!h.count(n)) {
        f = n;
      }
    }
    return f;
  }

  inline int genus(Set const& h) {
    int g = 0;
    for (int n = 0; n < kWindow; ++n) {
      g += !h.count(n);
    }
    return g;
  }

  inline Set sumset(Set const& a, Set const& b) {
    Set out;
    for (int x : a) {
      for (int y : b) {
        if (x + y < kHorizon) {
          out.insert(x + y);
        }
      }
    }
    return out;
  }

  //! {x in [lo, kWindow) : x + b <= a}, testing b below the horizon.
  inline Set colon(Set const& a, Set const& b, int lo) {
    Set out;
    for (int x = lo; x < kWindow; ++x) {
      bool ok = true;
      for (int y : b) {
        if (x + y >= kHorizon) {
          break;
        }
        if (!a.count(x + y)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.insert(x);
      }
    }
    return out;
  }

  inline Set without_zero(Set s) {
    s.erase(0);
    return s;
  }

  inline Set shift(Set const& s, int x) {
    Set out;
    for (int y : s) {
      out.insert(y + x);
    }
    return out;
  }

  //! Irreducible nonzero members.
  inline std::vector<int> minimal_generators(Set const& h) {
    std::vector<int> out;
    int const        f = frobenius(h);
    for (int n : h) {
      if (n == 0 || n > f + kWindow / 2) {
        continue;
      }
      bool irreducible = true;
      for (int x : h) {
        if (x == 0) {
          continue;
        }
        if (2 * x > n) {
          break;
        }
        if (h.count(n - x)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) {
        out.push_back(n);
      }
    }
    return out;
  }

  //! Gap sets of every numerical semigroup of genus g, by testing every
  //! g-subset of [1, 2g - 1] for closure of the complement.
  inline std::vector<std::vector<int>> gap_sets_of_genus(int g) {
    std::vector<std::vector<int>> out;
    if (g == 0) {
      out.push_back({});
      return out;
    }
    int const         top = 2 * g - 1;
    std::vector<bool> pick(static_cast<std::size_t>(top), false);
    std::fill(pick.end() - g, pick.end(), true);
    do {
      std::vector<int> gaps;
      for (int i = 0; i < top; ++i) {
        if (pick[static_cast<std::size_t>(i)]) {
          gaps.push_back(i + 1);
        }
      }
      auto in = [&](int n) {
        return n >= 0 && !std::binary_search(gaps.begin(), gaps.end(), n);
      };
      bool closed = true;
      for (int x = 1; x <= top && closed; ++x) {
        for (int y = x; x + y <= top && closed; ++y) {
          closed = !(in(x) && in(y) && !in(x + y));
        }
      }
      if (closed) {
        out.push_back(gaps);
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
  }

  //! x + y - z in H for all x >= y >= z in H, scanning below the window.
  inline bool arf_pattern(Set const& h) {
    std::vector<int> m(h.begin(), h.lower_bound(kWindow / 2));
    for (int x : m) {
      for (int y : m) {
        for (int z : m) {
          if (x >= y && y >= z && !h.count(x + y - z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace brute
