#ifndef LIEINV_ALGEBRA_HPP
#define LIEINV_ALGEBRA_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lieinv/rootsystem.hpp"

namespace lieinv {

// Element of the algebra in the standard basis:
//   index 0..l-1            H_{alpha_1}..H_{alpha_l}
//   index l..l+npos-1       e_alpha, positive roots in canonical order
//   index l+npos..dim-1     e_{-alpha}, mirroring the positive order
struct GVec {
  std::vector<Rat> c;

  GVec() = default;
  explicit GVec(int dim) : c(dim) {}

  int dim() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (const Rat& x : c)
      if (x != 0) return false;
    return true;
  }

  GVec& operator+=(const GVec& o) {
    if (dim() != o.dim()) throw DimensionMismatchError("GVec addition shape mismatch");
    for (int i = 0; i < dim(); ++i) c[i] += o.c[i];
    return *this;
  }
  GVec& operator-=(const GVec& o) {
    if (dim() != o.dim()) throw DimensionMismatchError("GVec subtraction shape mismatch");
    for (int i = 0; i < dim(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend GVec operator+(GVec a, const GVec& b) { return a += b; }
  friend GVec operator-(GVec a, const GVec& b) { return a -= b; }
  friend GVec operator*(const Rat& k, GVec v) {
    for (Rat& x : v.c) x *= k;
    return v;
  }
  bool operator==(const GVec& o) const { return c == o.c; }
};

// Chevalley-basis structure constants of a simple Lie algebra.  All
// brackets in the package reduce to this table.  Immutable once built.
class Algebra {
 public:
  RootSystem rs;
  int dim = 0;

  int rank() const { return rs.rank; }
  int npos() const { return rs.num_positive(); }

  int cartan_index(int i) const { return i; }
  int pos_index(int k) const { return rs.rank + k; }
  int neg_index(int k) const { return rs.rank + npos() + k; }

  bool is_cartan(int idx) const { return idx < rs.rank; }
  bool is_pos(int idx) const { return idx >= rs.rank && idx < rs.rank + npos(); }
  bool is_neg(int idx) const { return idx >= rs.rank + npos(); }

  // positive-root index of a root-vector basis element
  int root_of(int idx) const { return is_pos(idx) ? idx - rs.rank : idx - rs.rank - npos(); }

  int height_of(int idx) const {
    if (is_cartan(idx)) return 0;
    int h = rs.height[root_of(idx)];
    return is_pos(idx) ? h : -h;
  }

  std::string basis_label(int idx) const {
    if (is_cartan(idx)) return "H" + std::to_string(idx + 1);
    const RootVec& r = rs.positive[root_of(idx)];
    std::string s = "e[";
    for (int i = 0; i < rs.rank; ++i) {
      if (i) s += ",";
      s += std::to_string(is_pos(idx) ? r[i] : -r[i]);
    }
    return s + "]";
  }

  GVec basis_vector(int idx) const {
    GVec v(dim);
    v.c[idx] = 1;
    return v;
  }

  GVec zero() const { return GVec(dim); }

  const std::vector<std::pair<int, Rat>>& bracket_basis(int i, int j) const {
    return table_[static_cast<size_t>(i) * dim + j];
  }

  GVec bracket(const GVec& x, const GVec& y) const {
    if (x.dim() != dim || y.dim() != dim)
      throw DimensionMismatchError("bracket arguments not over this algebra");
    GVec r(dim);
    for (int i = 0; i < dim; ++i) {
      if (x.c[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (y.c[j] == 0) continue;
        for (const auto& [k, c] : bracket_basis(i, j)) r.c[k] += x.c[i] * y.c[j] * c;
      }
    }
    return r;
  }

  // All nonzero coordinates at one height (Cartan = height 0)?
  std::optional<int> homogeneous_height(const GVec& v) const {
    std::optional<int> h;
    for (int i = 0; i < dim; ++i) {
      if (v.c[i] == 0) continue;
      int hi = height_of(i);
      if (h && *h != hi) return std::nullopt;
      h = hi;
    }
    return h ? h : std::optional<int>(0);
  }

  // N_{alpha,beta} for positive roots by index; 0 if alpha+beta is not a root.
  Rat pos_pair_constant(int ka, int kb) const {
    if (ka == kb) return 0;
    auto it = npos_pair_.find(ka < kb ? std::make_pair(ka, kb) : std::make_pair(kb, ka));
    if (it == npos_pair_.end()) return 0;
    return ka < kb ? it->second : Rat(-it->second);
  }

  // Coroot H_beta = sum_i c_i H_{alpha_i} for a positive root beta.
  std::vector<Rat> coroot(int k) const {
    const RootVec& beta = rs.positive[k];
    Rat b2 = rs.len2(beta);
    std::vector<Rat> c(rs.rank);
    for (int i = 0; i < rs.rank; ++i) c[i] = Rat(beta[i]) * rs.simple_len2[i] / b2;
    return c;
  }

  nlohmann::json to_json() const;
  static Algebra from_json(const nlohmann::json& j);

  friend Algebra chevalley_constants(const RootSystem& rs);

 private:
  // sparse bracket table, row-major over basis pairs
  std::vector<std::vector<std::pair<int, Rat>>> table_;
  std::map<std::pair<int, int>, Rat> npos_pair_;  // N for ordered positive pairs

  void set_bracket(int i, int j, std::vector<std::pair<int, Rat>> v) {
    table_[static_cast<size_t>(i) * dim + j] = std::move(v);
  }
};

namespace detail {

// Depth p of the alpha-string through beta: max k with beta - k alpha a root.
inline int string_down(const RootSystem& rs, const RootVec& alpha, const RootVec& beta) {
  int p = 0;
  RootVec r = beta;
  for (;;) {
    for (size_t i = 0; i < r.size(); ++i) r[i] -= alpha[i];
    if (!rs.is_root(r)) break;
    ++p;
  }
  return p;
}

}  // namespace detail

// Structure constants with the extraspecial pairs normalized to +1
// (taken in the canonical root order).  The remaining signs follow from
// the Jacobi identity applied to (e_{-eps}, e_alpha, e_beta) together with
// the length-ratio relations for triples of roots summing to zero.
inline Algebra chevalley_constants(const RootSystem& rs_in) {
  Algebra alg;
  alg.rs = rs_in;
  const RootSystem& rs = alg.rs;
  const int l = rs.rank;
  const int np = rs.num_positive();
  alg.dim = l + 2 * np;
  alg.table_.assign(static_cast<size_t>(alg.dim) * alg.dim, {});

  auto N = [&](int ka, int kb) { return alg.pos_pair_constant(ka, kb); };
  // N_{-eps, chi} for positive eps, chi with chi - eps a positive root.
  auto N_minus = [&](int keps, int kchi) -> Rat {
    RootVec delta = rs.positive[kchi];
    for (int i = 0; i < l; ++i) delta[i] -= rs.positive[keps][i];
    int kdelta = rs.index_of.at(delta);
    return N(keps, kdelta) * rs.len2(delta) / rs.len2(rs.positive[kchi]);
  };

  // Positive pairs by increasing height of the sum.
  for (int kg = 0; kg < np; ++kg) {
    const RootVec& gamma = rs.positive[kg];
    if (rs.height[kg] < 2) continue;
    int keps = -1, keta = -1;
    for (int ka = 0; ka < np; ++ka) {
      RootVec rest = gamma;
      bool ok = true;
      for (int i = 0; i < l; ++i) {
        rest[i] -= rs.positive[ka][i];
        if (rest[i] < 0) ok = false;
      }
      if (!ok || !rs.is_positive_root(rest)) continue;
      int kb = rs.index_of.at(rest);
      if (kb <= ka) continue;
      if (keps < 0) {
        // extraspecial pair: sign +, magnitude p+1
        keps = ka;
        keta = kb;
        int p = detail::string_down(rs, rs.positive[ka], rs.positive[kb]);
        alg.npos_pair_[{ka, kb}] = p + 1;
      } else {
        // special pair, resolved against the extraspecial one
        const RootVec& a = rs.positive[ka];
        const RootVec& b = rs.positive[kb];
        Rat t1 = 0, t2 = 0;
        RootVec ae = a, be = b;
        for (int i = 0; i < l; ++i) {
          ae[i] -= rs.positive[keps][i];
          be[i] -= rs.positive[keps][i];
        }
        if (rs.is_positive_root(ae)) t1 = N_minus(keps, ka) * N(rs.index_of.at(ae), kb);
        if (rs.is_positive_root(be)) t2 = N_minus(keps, kb) * N(ka, rs.index_of.at(be));
        Rat nab = (t1 + t2) / N_minus(keps, kg);
        int p = detail::string_down(rs, a, b);
        if (!is_integer(nab) || (nab != p + 1 && nab != -(p + 1)))
          throw DefectError("structure constant recursion broke the string-length law");
        alg.npos_pair_[{ka, kb}] = nab;
      }
    }
    if (keps < 0) throw DefectError("non-simple root with no positive decomposition");
  }

  // Assemble the full bracket table.
  auto add = [&](int i, int j, int k, const Rat& c) {
    if (c == 0) return;
    alg.table_[static_cast<size_t>(i) * alg.dim + j].push_back({k, c});
  };

  for (int i = 0; i < l; ++i) {
    for (int k = 0; k < np; ++k) {
      int w = rs.pairing_with_coroot(rs.positive[k], i);
      add(i, alg.pos_index(k), alg.pos_index(k), rat(w));
      add(alg.pos_index(k), i, alg.pos_index(k), rat(-w));
      add(i, alg.neg_index(k), alg.neg_index(k), rat(-w));
      add(alg.neg_index(k), i, alg.neg_index(k), rat(w));
    }
  }

  for (int ka = 0; ka < np; ++ka) {
    // [e_alpha, e_{-alpha}] = H_alpha
    std::vector<Rat> h = alg.coroot(ka);
    for (int i = 0; i < l; ++i) {
      if (!is_integer(h[i])) throw DefectError("coroot has non-integer coordinates");
      add(alg.pos_index(ka), alg.neg_index(ka), i, h[i]);
      add(alg.neg_index(ka), alg.pos_index(ka), i, -h[i]);
    }
    for (int kb = 0; kb < np; ++kb) {
      if (ka == kb) continue;
      const RootVec& a = rs.positive[ka];
      const RootVec& b = rs.positive[kb];
      // [e_alpha, e_beta]
      RootVec sum(l);
      for (int i = 0; i < l; ++i) sum[i] = a[i] + b[i];
      if (rs.is_positive_root(sum)) {
        Rat n = alg.pos_pair_constant(ka, kb);
        int ks = rs.index_of.at(sum);
        add(alg.pos_index(ka), alg.pos_index(kb), alg.pos_index(ks), n);
        add(alg.neg_index(ka), alg.neg_index(kb), alg.neg_index(ks), -n);
      }
      // [e_alpha, e_{-beta}] with alpha != beta
      RootVec diff(l);
      for (int i = 0; i < l; ++i) diff[i] = a[i] - b[i];
      if (rs.is_positive_root(diff)) {
        int kd = rs.index_of.at(diff);
        // triple (alpha, -beta, -delta): N = -N_{beta,delta} (delta,delta)/(alpha,alpha)
        Rat n = -alg.pos_pair_constant(kb, kd) * rs.len2(diff) / rs.len2(a);
        if (!is_integer(n)) throw DefectError("mixed structure constant not integral");
        add(alg.pos_index(ka), alg.neg_index(kb), alg.pos_index(kd), n);
        add(alg.neg_index(kb), alg.pos_index(ka), alg.pos_index(kd), -n);
      } else {
        RootVec neg(l);
        for (int i = 0; i < l; ++i) neg[i] = -diff[i];
        if (rs.is_positive_root(neg)) {
          int kd = rs.index_of.at(neg);
          // triple (alpha, -beta, delta'): N = -N_{alpha,delta'} (d',d')/(beta,beta)
          Rat n = -alg.pos_pair_constant(ka, kd) * rs.len2(neg) / rs.len2(b);
          if (!is_integer(n)) throw DefectError("mixed structure constant not integral");
          add(alg.pos_index(ka), alg.neg_index(kb), alg.neg_index(kd), n);
          add(alg.neg_index(kb), alg.pos_index(ka), alg.neg_index(kd), -n);
        }
      }
    }
  }

  // Self-check: string-length law plus the Jacobi identity (exhaustive on
  // small algebras, a seeded sample on big ones).
  for (const auto& [pair, n] : alg.npos_pair_) {
    int p = detail::string_down(rs, rs.positive[pair.first], rs.positive[pair.second]);
    Rat mag = n < 0 ? Rat(-n) : n;
    if (mag != p + 1) throw DefectError("|N| != p+1 after table assembly");
  }
  auto jacobi_zero = [&](int i, int j, int k) {
    GVec bi = alg.basis_vector(i), bj = alg.basis_vector(j), bk = alg.basis_vector(k);
    GVec s = alg.bracket(alg.bracket(bi, bj), bk) + alg.bracket(alg.bracket(bj, bk), bi) +
             alg.bracket(alg.bracket(bk, bi), bj);
    return s.is_zero();
  };
  if (alg.dim <= 30) {
    for (int i = 0; i < alg.dim; ++i)
      for (int j = i + 1; j < alg.dim; ++j)
        for (int k = j + 1; k < alg.dim; ++k)
          if (!jacobi_zero(i, j, k)) throw DefectError("Jacobi identity violated");
  } else {
    std::mt19937_64 rng(20130215u);
    std::uniform_int_distribution<int> pick(0, alg.dim - 1);
    for (int t = 0; t < 2000; ++t)
      if (!jacobi_zero(pick(rng), pick(rng), pick(rng)))
        throw DefectError("Jacobi identity violated");
  }

  return alg;
}

inline Algebra build_algebra(Family f, int rank) {
  return chevalley_constants(build_root_system(f, rank));
}

inline nlohmann::json Algebra::to_json() const {
  nlohmann::json j;
  j["format"] = "lieinv-algebra/1";
  j["family"] = std::string(1, family_char(rs.family));
  j["rank"] = rs.rank;
  j["cartan"] = rs.cartan;
  j["positive_roots"] = rs.positive;
  nlohmann::json labels = nlohmann::json::array();
  for (int i = 0; i < dim; ++i) labels.push_back(basis_label(i));
  j["basis"] = labels;
  nlohmann::json consts = nlohmann::json::array();
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      for (const auto& [t, c] : bracket_basis(i, k))
        consts.push_back({i, k, t, to_string(c)});
    }
  j["constants"] = consts;
  return j;
}

inline Algebra Algebra::from_json(const nlohmann::json& j) {
  if (j.at("format") != "lieinv-algebra/1") throw Error("unsupported algebra file format");
  Algebra alg = build_algebra(family_from_char(j.at("family").get<std::string>().at(0)),
                              j.at("rank").get<int>());
  // Rebuilding is deterministic; the stored table is a cross-check.
  nlohmann::json expect = alg.to_json();
  if (expect.at("constants") != j.at("constants"))
    throw DefectError("cached algebra disagrees with deterministic reconstruction");
  return alg;
}

// Weyl reflection data on Cartan points lives in RootSystem; this wrapper
// exposes it with 1-based simple-root indexing for callers.
inline std::vector<Rat> simple_reflection(const Algebra& alg, int i, const std::vector<Rat>& p) {
  if (i < 1 || i > alg.rank()) throw Error("simple_reflection: index out of range");
  return alg.rs.reflect_cartan(i - 1, p);
}

}  // namespace lieinv

#endif
