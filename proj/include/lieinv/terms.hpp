#ifndef LIEINV_TERMS_HPP
#define LIEINV_TERMS_HPP

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "lieinv/frame.hpp"

namespace lieinv {

enum class Scope { Borel, Full };

// One pairing < d_W d_eps^b d_p^a d_U , I > identified by its frame data.
// W and U are sorted multisets of frame indices; the key is admissible iff
//
//   |W| + a + b + |U| = d      and      b + |o(W)| = o(U).
//
struct TermKey {
  std::vector<int> W, U;
  int b = 0, a = 0;

  int beta() const { return static_cast<int>(W.size()); }
  int c() const { return static_cast<int>(U.size()); }

  friend bool operator<(const TermKey& x, const TermKey& y) {
    return std::tie(x.W, x.U, x.b, x.a) < std::tie(y.W, y.U, y.b, y.a);
  }
  friend bool operator==(const TermKey& x, const TermKey& y) {
    return x.W == y.W && x.U == y.U && x.b == y.b && x.a == y.a;
  }
};

inline int total_height(const Frame& fr, const std::vector<int>& members) {
  int h = 0;
  for (int f : members) h += fr.height_of(f);
  return h;
}

inline bool key_admissible(const Frame& fr, int d, const TermKey& k) {
  if (k.a < 0 || k.b < 0) return false;
  if (k.beta() + k.a + k.b + k.c() != d) return false;
  for (int f : k.W)
    if (!fr.is_w(f)) return false;
  for (int f : k.U)
    if (!fr.is_u(f)) return false;
  return k.b + (-total_height(fr, k.W)) == total_height(fr, k.U);
}

struct TermLists {
  std::vector<TermKey> ttms;  // beta = 0, a = 0, by descending b
  std::vector<TermKey> ptms;  // beta = 0, a >= 1, by ascending a
  TermKey cartan;             // the single pure-Cartan key (a = d)
  std::vector<TermKey> ntms;  // beta >= 1, by ascending (beta, |o(W)|)

  size_t total() const { return ttms.size() + ptms.size() + 1 + ntms.size(); }
};

// Partitions of x into exactly z unordered parts, each within [lo, hi],
// every partition sorted descending, the set in decreasing lexicographic
// order.
inline std::vector<std::vector<int>> bounded_partitions(int x, int z, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (z == 0) {
    if (x == 0) out.push_back({});
    return out;
  }
  if (x < z * lo || x > z * hi) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int parts, int cap) -> void {
    if (parts == 0) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    int top = std::min(cap, rest - (parts - 1) * lo);
    for (int v = top; v >= lo; --v) {
      if (rest - v > (parts - 1) * static_cast<long>(v)) break;
      cur.push_back(v);
      self(self, rest - v, parts - 1, v);
      cur.pop_back();
    }
  };
  rec(rec, x, z, hi);
  return out;
}

// Partition x into z parts from [1, y] (heights of U factors).
inline std::vector<std::vector<int>> pospart(int x, int y, int z) {
  return bounded_partitions(x, z, 1, y);
}

// Partition x into z parts from [2, y] (absolute heights of W factors).
inline std::vector<std::vector<int>> negpart(int x, int y, int z) {
  return bounded_partitions(x, z, 2, y);
}

namespace detail {

// All sorted multisets of frame indices realizing a height partition:
// per height, combinations with repetition over the frame elements at that
// height, then the cartesian product across heights.
inline std::vector<std::vector<int>> expand_heights(const std::map<int, std::vector<int>>& at_height,
                                                    const std::vector<int>& partition) {
  std::map<int, int> mult;
  for (int h : partition) mult[h] += 1;
  std::vector<std::vector<int>> acc = {{}};
  for (const auto& [h, mu] : mult) {
    auto it = at_height.find(h);
    if (it == at_height.end()) return {};
    const std::vector<int>& elems = it->second;
    // combinations with repetition: nondecreasing position sequences
    std::vector<std::vector<int>> combos;
    std::vector<int> pos(mu, 0);
    for (;;) {
      std::vector<int> pickd;
      for (int p : pos) pickd.push_back(elems[p]);
      combos.push_back(pickd);
      int i = mu - 1;
      while (i >= 0 && pos[i] == static_cast<int>(elems.size()) - 1) --i;
      if (i < 0) break;
      ++pos[i];
      for (int k = i + 1; k < mu; ++k) pos[k] = pos[i];
    }
    std::vector<std::vector<int>> next;
    for (const auto& base : acc)
      for (const auto& combo : combos) {
        std::vector<int> merged = base;
        merged.insert(merged.end(), combo.begin(), combo.end());
        next.push_back(std::move(merged));
      }
    acc = std::move(next);
  }
  for (auto& m : acc) std::sort(m.begin(), m.end());
  std::sort(acc.begin(), acc.end());
  return acc;
}

}  // namespace detail

// Every potentially nonzero pairing for degree d, in the order the
// reductions consume them.  Keys with explicit height-0 or height-(-1)
// factors never appear: those factors are absorbed into the p- and
// epsilon-powers.
inline TermLists generate_terms(const Frame& fr, int d, Scope scope) {
  TermLists out;
  const int mx = fr.exponents().back();

  std::map<int, std::vector<int>> u_at, w_at;  // W keyed by |height|
  for (int f : fr.u_indices()) u_at[fr.height_of(f)].push_back(f);
  for (int f : fr.w_indices()) w_at[-fr.height_of(f)].push_back(f);

  // ttms: b + c = d, o(U) = b; descending b means ascending c.
  for (int c = 1; c <= d; ++c) {
    int b = d - c;
    for (const auto& part : pospart(b, mx, c))
      for (auto& U : detail::expand_heights(u_at, part))
        out.ttms.push_back({{}, U, b, 0});
  }

  // ptms: a >= 1, a + b + c = d, o(U) = b; ascending a, then ascending b.
  for (int a = 1; a <= d - 2; ++a)
    for (int c = d - a; c >= 1; --c) {
      int b = d - a - c;
      for (const auto& part : pospart(b, mx, c))
        for (auto& U : detail::expand_heights(u_at, part))
          out.ptms.push_back({{}, U, b, a});
    }

  out.cartan = TermKey{{}, {}, 0, d};

  if (scope == Scope::Full) {
    for (int beta = 1; beta <= d - 1; ++beta)
      for (int ow = 2 * beta; ow <= beta * mx; ++ow) {
        std::vector<TermKey> stratum;
        for (const auto& wpart : negpart(ow, mx, beta))
          for (auto& W : detail::expand_heights(w_at, wpart))
            for (int a = 0; a <= d - beta - 1; ++a)
              for (int b = 0; b <= d - beta - a - 1; ++b) {
                int c = d - beta - a - b;
                for (const auto& upart : pospart(b + ow, mx, c))
                  for (auto& U : detail::expand_heights(u_at, upart))
                    stratum.push_back({W, U, b, a});
              }
        std::sort(stratum.begin(), stratum.end(), [](const TermKey& x, const TermKey& y) {
          return std::tie(y.b, x.W, x.U, x.a) < std::tie(x.b, y.W, y.U, y.a);
        });
        out.ntms.insert(out.ntms.end(), stratum.begin(), stratum.end());
      }
  }
  return out;
}

inline TermLists borel_only_terms(const Frame& fr, int d) {
  return generate_terms(fr, d, Scope::Borel);
}

inline nlohmann::json termkey_to_json(const TermKey& k) {
  return nlohmann::json{{"W", k.W}, {"U", k.U}, {"b", k.b}, {"a", k.a}};
}

inline TermKey termkey_from_json(const nlohmann::json& j) {
  TermKey k;
  k.W = j.at("W").get<std::vector<int>>();
  k.U = j.at("U").get<std::vector<int>>();
  k.b = j.at("b").get<int>();
  k.a = j.at("a").get<int>();
  return k;
}

inline nlohmann::json termlists_to_json(const TermLists& lists) {
  nlohmann::json j;
  auto dump = [](const std::vector<TermKey>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& k : v) a.push_back(termkey_to_json(k));
    return a;
  };
  j["ttms"] = dump(lists.ttms);
  j["ptms"] = dump(lists.ptms);
  j["cartan"] = termkey_to_json(lists.cartan);
  j["ntms"] = dump(lists.ntms);
  return j;
}

}  // namespace lieinv

#endif
