#ifndef LIEINV_ROOTSYSTEM_HPP
#define LIEINV_ROOTSYSTEM_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieinv/rational.hpp"

namespace lieinv {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return static_cast<Family>(c);
    default:
      throw InvalidTypeError(std::string("unknown family '") + c + "'");
  }
}

inline char family_char(Family f) { return static_cast<char>(f); }

using RootVec = std::vector<int>;  // coefficients over the simple roots

inline int root_height(const RootVec& r) {
  int h = 0;
  for (int n : r) h += n;
  return h;
}

// Positive roots in a fixed canonical order: heights ascending, ties broken
// on the coefficient vector with the lexicographically larger vector first
// (so alpha_1 precedes alpha_2 at height 1, matching the usual basis labels
// e.g. for G2: alpha1, alpha2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2).
struct RootOrder {
  bool operator()(const RootVec& a, const RootVec& b) const {
    int ha = root_height(a), hb = root_height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  }
};

struct RootSystem {
  Family family;
  int rank;
  // cartan[i][j] = alpha_i(H_{alpha_j}) = 2(alpha_i,alpha_j)/(alpha_j,alpha_j)
  std::vector<std::vector<int>> cartan;
  std::vector<RootVec> positive;  // canonical order
  std::vector<int> height;        // per positive root
  std::vector<Rat> simple_len2;   // (alpha_i, alpha_i)
  std::map<RootVec, int> index_of;

  int num_positive() const { return static_cast<int>(positive.size()); }
  int max_height() const { return height.empty() ? 0 : height.back(); }

  // beta(H_{alpha_j}) for beta given by its coefficient vector.
  int pairing_with_coroot(const RootVec& beta, int j) const {
    int v = 0;
    for (int i = 0; i < rank; ++i) v += beta[i] * cartan[i][j];
    return v;
  }

  bool is_positive_root(const RootVec& r) const { return index_of.count(r) != 0; }

  // Roots come in +/- pairs only; mixed-sign vectors are never roots.
  bool is_root(const RootVec& r) const {
    if (is_positive_root(r)) return true;
    RootVec neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    return is_positive_root(neg);
  }

  Rat len2(const RootVec& r) const {
    Rat v = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (r[i] != 0 && r[j] != 0)
          v += Rat(r[i]) * Rat(r[j]) * Rat(cartan[i][j]) * simple_len2[j] / 2;
    return v;
  }

  // Simple reflection acting on the root lattice:
  // r_i(beta) = beta - beta(H_{alpha_i}) alpha_i.
  RootVec reflect_root(int i, const RootVec& beta) const {
    RootVec r = beta;
    r[i] -= pairing_with_coroot(beta, i);
    return r;
  }

  // r_i on a Cartan element written in the coroot basis:
  // r_i(p) = p - alpha_i(p) H_{alpha_i}.
  std::vector<Rat> reflect_cartan(int i, const std::vector<Rat>& p) const {
    if (static_cast<int>(p.size()) != rank)
      throw DimensionMismatchError("reflect_cartan: wrong coordinate count");
    Rat ai_p = 0;
    for (int j = 0; j < rank; ++j) ai_p += Rat(cartan[i][j]) * p[j];
    std::vector<Rat> r = p;
    r[i] -= ai_p;
    return r;
  }
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(Family f, int l) {
  auto chain = [&](std::vector<std::vector<int>>& c) {
    for (int i = 0; i + 1 < l; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  };
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  switch (f) {
    case Family::A:
      if (l < 1) throw InvalidTypeError("A requires rank >= 1");
      chain(c);
      break;
    case Family::B:  // alpha_l short
      if (l < 2) throw InvalidTypeError("B requires rank >= 2");
      chain(c);
      c[l - 2][l - 1] = -2;
      c[l - 1][l - 2] = -1;
      break;
    case Family::C:  // alpha_l long
      if (l < 2) throw InvalidTypeError("C requires rank >= 2");
      chain(c);
      c[l - 2][l - 1] = -1;
      c[l - 1][l - 2] = -2;
      break;
    case Family::D:
      if (l < 4) throw InvalidTypeError("D requires rank >= 4");
      for (int i = 0; i + 2 < l; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      c[l - 3][l - 1] = c[l - 1][l - 3] = -1;
      break;
    case Family::E: {
      if (l < 6 || l > 8) throw InvalidTypeError("E requires rank 6, 7 or 8");
      // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      auto edge = [&](int i, int j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
      edge(1, 3); edge(3, 4); edge(4, 5); edge(5, 6); edge(2, 4);
      if (l >= 7) edge(6, 7);
      if (l == 8) edge(7, 8);
      break;
    }
    case Family::F:
      if (l != 4) throw InvalidTypeError("F requires rank 4");
      c[0][1] = c[1][0] = -1;
      c[1][2] = -2;  // alpha_2 long, alpha_3 short
      c[2][1] = -1;
      c[2][3] = c[3][2] = -1;
      break;
    case Family::G:
      if (l != 2) throw InvalidTypeError("G requires rank 2");
      // alpha_1 short (highest root 3 alpha_1 + 2 alpha_2)
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

}  // namespace detail

inline RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = detail::cartan_matrix(family, rank);

  // Simple root lengths from symmetrizing the Cartan matrix:
  // C[i][j] (a_j,a_j) = C[j][i] (a_i,a_i), solved along the Dynkin graph.
  std::vector<Rat> d(rank, Rat(0));
  d[0] = 2;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (rs.cartan[i][j] == 0 || i == j) continue;
        if (d[i] != 0 && d[j] == 0) {
          d[j] = d[i] * rat(rs.cartan[j][i], rs.cartan[i][j]);
          progress = true;
        }
      }
  }
  for (int i = 0; i < rank; ++i)
    if (d[i] == 0) throw DefectError("Dynkin diagram not connected");
  rs.simple_len2 = d;

  // Closure by height: beta + alpha_i is a root iff the alpha_i-string
  // through beta satisfies q = p - beta(H_{alpha_i}) >= 1 where p is the
  // depth of the string below beta.
  std::vector<RootVec> roots;
  for (int i = 0; i < rank; ++i) {
    RootVec r(rank, 0);
    r[i] = 1;
    roots.push_back(r);
  }
  std::map<RootVec, bool> seen;
  for (const auto& r : roots) seen[r] = true;
  auto is_known_root = [&](const RootVec& r) {
    if (seen.count(r)) return true;
    RootVec neg(r.size());
    bool nonzero = false;
    for (size_t i = 0; i < r.size(); ++i) {
      neg[i] = -r[i];
      if (r[i] != 0) nonzero = true;
    }
    return nonzero && seen.count(neg) != 0;
  };
  for (size_t q = 0; q < roots.size(); ++q) {
    RootVec beta = roots[q];
    for (int i = 0; i < rank; ++i) {
      RootVec alpha(rank, 0);
      alpha[i] = 1;
      if (beta == alpha) continue;
      int p = 0;
      RootVec down = beta;
      for (;;) {
        for (int k = 0; k < rank; ++k) down[k] -= alpha[k];
        if (!is_known_root(down)) break;
        ++p;
      }
      int pair = 0;
      for (int k = 0; k < rank; ++k) pair += beta[k] * rs.cartan[k][i];
      if (p - pair >= 1) {
        RootVec up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = true;
          roots.push_back(up);
        }
      }
    }
  }

  std::sort(roots.begin(), roots.end(), RootOrder{});
  rs.positive = roots;
  for (int k = 0; k < rs.num_positive(); ++k) {
    rs.height.push_back(root_height(rs.positive[k]));
    rs.index_of[rs.positive[k]] = k;
  }
  return rs;
}

inline int classical_positive_count(Family f, int l) {
  switch (f) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

}  // namespace lieinv

#endif
