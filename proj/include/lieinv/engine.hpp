#ifndef LIEINV_ENGINE_HPP
#define LIEINV_ENGINE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lieinv/poly.hpp"
#include "lieinv/terms.hpp"
#include "lieinv/util.hpp"

namespace lieinv {

// Normalization of the pure-slice pairings.  Primitive mode pins the
// invariant that restricts to the slice coordinate xi_j; generic mode takes
// arbitrary constants per pure-slice monomial (a multiset of slice indices)
// and produces the corresponding algebra combination of the primitives.
struct SeedSpec {
  bool generic = false;
  int index = 1;  // 1-based slice index, primitive mode
  std::map<std::vector<int>, Rat> constants;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["mode"] = generic ? "generic" : "primitive";
    if (generic) {
      nlohmann::json cs = nlohmann::json::array();
      for (const auto& [k, v] : constants) cs.push_back({k, to_string(v)});
      j["constants"] = cs;
    } else {
      j["index"] = index;
    }
    return j;
  }

  static SeedSpec from_json(const nlohmann::json& j) {
    SeedSpec s;
    s.generic = j.at("mode") == "generic";
    if (s.generic) {
      for (const auto& e : j.at("constants"))
        s.constants[e.at(0).get<std::vector<int>>()] = rat_from_string(e.at(1).get<std::string>());
    } else {
      s.index = j.at("index").get<int>();
    }
    return s;
  }
};

// Fills the value table by the inductive reductions and assembles the
// invariant polynomial.  The induction order is: top terms by descending
// epsilon power, then p-terms by ascending p power, the pure-Cartan term,
// then the negative terms by ascending (beta, |o(W)|).  Values in one
// stratum depend only on earlier strata, so a stratum may be filled by
// several workers; single-threaded and multi-threaded runs produce
// identical tables.
class Engine {
 public:
  Engine(const Frame& fr, int degree, Scope scope, SeedSpec seeds)
      : fr_(fr), alg_(fr.algebra()), d_(degree), scope_(scope), seeds_(std::move(seeds)) {
    lists_ = generate_terms(fr_, d_, scope_);
    build_strata();
  }

  const Frame& frame() const { return fr_; }
  int degree() const { return d_; }
  Scope scope() const { return scope_; }
  const SeedSpec& seeds() const { return seeds_; }
  const TermLists& lists() const { return lists_; }
  const std::map<TermKey, Poly>& table() const { return table_; }

  int num_strata() const { return static_cast<int>(strata_.size()); }
  int strata_done() const { return done_; }
  bool finished() const { return done_ == num_strata(); }

  void run_stratum(int threads = 1) {
    if (finished()) return;
    const Stratum& st = strata_[done_];
    std::vector<Poly> vals(st.keys.size(), Poly(rank()));
    auto work = [&](size_t lo, size_t hi) {
      for (size_t i = lo; i < hi; ++i) vals[i] = value_for(st, st.keys[i]);
    };
    if (threads <= 1 || st.keys.size() < 2) {
      work(0, st.keys.size());
    } else {
      size_t nw = std::min<size_t>(threads, st.keys.size());
      std::vector<std::thread> pool;
      size_t chunk = (st.keys.size() + nw - 1) / nw;
      for (size_t w = 0; w < nw; ++w) {
        size_t lo = w * chunk, hi = std::min(st.keys.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < st.keys.size(); ++i) table_[st.keys[i]] = std::move(vals[i]);
    ++done_;
  }

  void run_all(int threads = 1) {
    while (!finished()) run_stratum(threads);
  }

  // Table lookup with the vanishing rule: an inadmissible key pairs to zero
  // (weight balance, Lemma-type vanishing); an admissible key that is not
  // yet in the table is an induction-order defect.
  Poly lookup(TermKey k) const {
    std::sort(k.W.begin(), k.W.end());
    std::sort(k.U.begin(), k.U.end());
    auto it = table_.find(k);
    if (it != table_.end()) return it->second;
    if (!key_admissible(fr_, d_, k)) return Poly(rank());
    throw DefectError("lookup of admissible key before its stratum");
  }

  // --- reductions -------------------------------------------------------

  // Positions in key.U that lie in the image of ad_epsilon (peelable).
  std::vector<int> peelable_positions(const TermKey& key) const {
    std::vector<int> pos;
    for (int n = 0; n < key.c(); ++n)
      if (!fr_.is_slice_element(key.U[n])) pos.push_back(n);
    return pos;
  }

  // Top terms, a = 0: peel u(1) = [eps, v1] and integrate by parts; all
  // referenced keys carry b+1 epsilon's.  Any peelable position gives the
  // same value; the default is the first one.
  Poly reduce_top(const TermKey& key, int peel_pos = -1) const {
    std::vector<int> peels = peelable_positions(key);
    if (peels.empty()) throw DefectError("reduce_top on a pure-slice key");
    int pp = peel_pos < 0 ? peels.front() : peel_pos;
    const auto& e1 = fr_.entry(key.U[pp]);
    GVec v1 = fr_.cyclic(e1.j, e1.k - 1);
    Poly total(rank());
    for (int n = 0; n < key.c(); ++n) {
      if (n == pp) continue;
      GVec bv = alg_.bracket(v1, fr_.cyclic(fr_.entry(key.U[n]).j, fr_.entry(key.U[n]).k));
      total += route_bracket(bv, key.W, erase_positions(key.U, {pp, n}), key.b + 1, 0);
    }
    return rat(1, key.b + 1) * total;
  }

  // p-terms, a >= 1: replace one p through p = -[eps, x_p].
  Poly reduce_p(const TermKey& key) const {
    if (key.beta() != 0) throw DefectError("reduce_p expects beta = 0");
    Poly total(rank());
    for (int i = 0; i < rank(); ++i) {
      Poly pi = Poly::variable(rank(), i);
      Poly sum1(rank());
      for (int n = 0; n < key.c(); ++n) {
        GVec bv = alg_.bracket(fr_.cyclic(fr_.entry(key.U[n]).j, fr_.entry(key.U[n]).k),
                               alg_.basis_vector(alg_.pos_index(i)));
        sum1 += route_bracket(bv, key.W, erase_positions(key.U, {n}), key.b + 1, key.a - 1);
      }
      total += pi * sum1;
      if (key.a >= 2) {
        Poly sum2(rank());
        for (const auto& [t, c] : fr_.e_to_frame(alg_.pos_index(i))) {
          std::vector<int> U2 = key.U;
          U2.push_back(t);
          sum2 += c * lookup({key.W, U2, key.b + 1, key.a - 2});
        }
        total += rat(key.a - 1) * pi * alpha_poly(i) * sum2;
      }
    }
    return rat(1, key.b + 1) * total;
  }

  // Alternative route for a p-term with a peelable factor; agrees with
  // reduce_p (consistency of the two integration-by-parts orders).
  Poly reduce_p_via_peel(const TermKey& key, int peel_pos) const {
    const auto& e1 = fr_.entry(key.U[peel_pos]);
    if (e1.k == 0) throw DefectError("reduce_p_via_peel needs a factor in the image");
    GVec v1 = fr_.cyclic(e1.j, e1.k - 1);
    Poly total(rank());
    for (int n = 0; n < key.c(); ++n) {
      if (n == peel_pos) continue;
      GVec bv = alg_.bracket(v1, fr_.cyclic(fr_.entry(key.U[n]).j, fr_.entry(key.U[n]).k));
      total += route_bracket(bv, key.W, erase_positions(key.U, {peel_pos, n}), key.b + 1, key.a);
    }
    if (key.a >= 1) {
      // [v1, p] = -sum over components c_gamma gamma(p) e_gamma
      for (int eidx = 0; eidx < alg_.dim; ++eidx) {
        if (v1.c[eidx] == 0) continue;
        Poly gp = root_linear_form(eidx);
        for (const auto& [t, c] : fr_.e_to_frame(eidx)) {
          std::vector<int> U2 = erase_positions(key.U, {peel_pos});
          U2.push_back(t);
          total += rat(-key.a) * v1.c[eidx] * c * gp * lookup({key.W, U2, key.b + 1, key.a - 1});
        }
      }
    }
    return rat(1, key.b + 1) * total;
  }

  // The single pure-Cartan term <d_p^d, I>.
  Poly pure_cartan_value() const {
    Poly total(rank());
    for (int i = 0; i < rank(); ++i) {
      Poly inner(rank());
      for (const auto& [t, c] : fr_.e_to_frame(alg_.pos_index(i)))
        inner += c * lookup({{}, {t}, 1, d_ - 2});
      total += Poly::variable(rank(), i) * alpha_poly(i) * inner;
    }
    return rat(d_ - 1) * total;
  }

  // Negative terms, beta >= 1: peel w(1) = [eps, v1].  The value does not
  // depend on the choice of v1 within its ad_epsilon fiber; v1_override
  // lets the consistency tests exercise other representatives.
  Poly reduce_negative(const TermKey& key, const GVec* v1_override = nullptr) const {
    const auto& e1 = fr_.entry(key.W[0]);
    GVec w1 = fr_.cyclic(e1.j, e1.k);
    GVec v1 = v1_override ? *v1_override : fr_.cyclic(e1.j, e1.k - 1);
    if (v1_override && !(alg_.bracket(fr_.epsilon(), v1) == w1))
      throw DefectError("v1 override is not a preimage of w(1)");
    std::vector<int> Wt = erase_positions(key.W, {0});
    Poly total(rank());
    for (int m = 0; m < static_cast<int>(Wt.size()); ++m) {
      GVec bv = alg_.bracket(v1, fr_.cyclic(fr_.entry(Wt[m]).j, fr_.entry(Wt[m]).k));
      total += route_bracket(bv, erase_positions(Wt, {m}), key.U, key.b + 1, key.a);
    }
    if (key.a >= 1) {
      // [v1, p] component by component: [e_{-gamma}, p] = gamma(p) e_{-gamma}
      for (int eidx = 0; eidx < alg_.dim; ++eidx) {
        if (v1.c[eidx] == 0) continue;
        Poly gp = root_linear_form(eidx);
        Poly routed = route_single(eidx, Wt, key.U, key.b + 1, key.a - 1);
        total += rat(key.a) * v1.c[eidx] * gp * routed;
      }
    }
    for (int n = 0; n < key.c(); ++n) {
      GVec bv = alg_.bracket(v1, fr_.cyclic(fr_.entry(key.U[n]).j, fr_.entry(key.U[n]).k));
      total += route_bracket(bv, Wt, erase_positions(key.U, {n}), key.b + 1, key.a);
    }
    return rat(1, key.b + 1) * total;
  }

  // --- mixed-basis routing ----------------------------------------------
  //
  // Brackets are computed among root vectors and converted through the
  // frame: components of height >= 1 or <= -2 become key factors, height 0
  // goes through the p-derivative rule, height -1 through the
  // epsilon-replacement ratio after expanding to definite root monomials.

  Poly route_bracket(const GVec& bv, const std::vector<int>& W, const std::vector<int>& U,
                     int b, int a) const {
    Poly total(rank());
    if (bv.is_zero()) return total;
    for (int eidx = 0; eidx < alg_.dim; ++eidx)
      if (bv.c[eidx] != 0) total += bv.c[eidx] * route_single(eidx, W, U, b, a);
    return total;
  }

  // One basis vector inserted as an extra derivative factor.
  Poly route_single(int eidx, const std::vector<int>& W, const std::vector<int>& U, int b,
                    int a) const {
    int h = alg_.height_of(eidx);
    if (h == 0) return insert_cartan(W, U, b, a, eidx);
    if (h == -1) return insert_negsimple(W, U, b, a, alg_.root_of(eidx));
    Poly total(rank());
    if (h >= 1) {
      for (const auto& [t, c] : fr_.e_to_frame(eidx)) {
        std::vector<int> U2 = U;
        U2.push_back(t);
        total += c * lookup({W, U2, b, a});
      }
    } else {
      for (const auto& [t, c] : fr_.e_to_frame(eidx)) {
        std::vector<int> W2 = W;
        W2.push_back(t);
        total += c * lookup({W2, U, b, a});
      }
    }
    return total;
  }

  // One H_{alpha_i} factor: differentiate the value with one more p.
  Poly insert_cartan(const std::vector<int>& W, const std::vector<int>& U, int b, int a,
                     int i) const {
    Poly v = lookup({W, U, b, a + 1});
    return rat(1, a + 1) * v.partial_derivative(i);
  }

  // One e_{-alpha_i} factor: expand the remaining factors into definite
  // root monomials V; on each, the factor trades against one epsilon at the
  // ratio n_i/o(V), and the monomial folds back into frame keys.
  Poly insert_negsimple(const std::vector<int>& W, const std::vector<int>& U, int b, int a,
                        int i) const {
    std::vector<int> factors = W;
    factors.insert(factors.end(), U.begin(), U.end());
    Poly total(rank());
    for (const auto& [emono, c] : expand_to_root_monomials(factors)) {
      std::vector<int> n(rank(), 0);
      int oV = 0;
      for (int eidx : emono) {
        const RootVec& r = alg_.rs.positive[alg_.root_of(eidx)];
        int sgn = alg_.is_pos(eidx) ? 1 : -1;
        for (int q = 0; q < rank(); ++q) n[q] += sgn * r[q];
      }
      bool feasible = true;
      for (int q = 0; q < rank(); ++q) {
        oV += n[q];
        if (n[q] < 0) feasible = false;
      }
      if (!feasible || n[i] < 1) continue;
      if (oV != b + 1) throw DefectError("weight bookkeeping broke in insert_negsimple");
      Rat factor = c * rat(n[i], oV);
      for (const auto& [fmono, fc] : refold_to_frame(emono)) {
        TermKey k;
        k.b = b + 1;
        k.a = a;
        for (int f : fmono) (fr_.is_u(f) ? k.U : k.W).push_back(f);
        total += factor * fc * lookup(k);
      }
    }
    return total;
  }

  // --- seeds and strata ---------------------------------------------------

  bool is_pure_slice(const TermKey& key) const {
    if (key.beta() != 0 || key.a != 0) return false;
    for (int f : key.U)
      if (!fr_.is_slice_element(f)) return false;
    return !key.U.empty();
  }

  Rat seed_value(const TermKey& key) const {
    if (seeds_.generic) {
      std::vector<int> js;
      for (int f : key.U) js.push_back(fr_.entry(f).j + 1);
      std::sort(js.begin(), js.end());
      auto it = seeds_.constants.find(js);
      return it == seeds_.constants.end() ? Rat(0) : it->second;
    }
    // primitive: <d_{s_j} d_eps^{m_j}, I_j> = m_j!, every other pure-slice
    // pairing (same-height competitors, products) is zero
    if (key.c() == 1 && key.U[0] == fr_.slice_frame_index(seeds_.index - 1))
      return Rat(factorial(fr_.exponents()[seeds_.index - 1]));
    return Rat(0);
  }

  // --- assembly -----------------------------------------------------------

  // Multinomial weight of a key in the Taylor expansion.
  Rat taylor_weight(const TermKey& key) const {
    Int den = factorial(key.b) * factorial(key.a);
    auto count_mults = [&](const std::vector<int>& v) {
      int run = 1;
      for (size_t i = 1; i <= v.size(); ++i) {
        if (i < v.size() && v[i] == v[i - 1]) {
          ++run;
        } else {
          den *= factorial(run);
          run = 1;
        }
      }
    };
    count_mults(key.W);
    count_mults(key.U);
    return rat(Int(1), den);
  }

  // I(p + eps + sum_{o(alpha) >= 1} x_alpha e_alpha [+ negative part]),
  // written in root-vector coordinates.  Variables: p_1..p_l then x_alpha
  // over the positive roots (Borel) or over all roots (Full).
  Poly assemble(Scope wanted) const {
    if (wanted == Scope::Full && scope_ != Scope::Full)
      throw ConfigError("full assembly requires a full-scope run");
    if (!finished()) throw DefectError("assemble before the table is closed");
    int nv = wanted == Scope::Borel ? rank() + alg_.npos() : alg_.dim;
    auto var_of_eidx = [&](int eidx) {
      return eidx;  // variable order matches the basis order
    };
    Poly H(nv);
    for (const auto& [key, val] : table_) {
      if (wanted == Scope::Borel && key.beta() != 0) continue;
      Poly term = embed_cartan(val, nv) * Poly::constant(nv, taylor_weight(key));
      bool dead = false;
      std::vector<int> factors = key.W;
      factors.insert(factors.end(), key.U.begin(), key.U.end());
      for (int f : factors) {
        // frame coordinate of x as a linear form in the root coordinates
        Poly lin(nv);
        for (int eidx = 0; eidx < alg_.dim; ++eidx) {
          const Rat& c = fr_.Minv().at(f, eidx);
          if (c == 0) continue;
          if (wanted == Scope::Borel && !alg_.is_pos(eidx)) { dead = true; continue; }
          lin.add_term(unit_mono(nv, var_of_eidx(eidx)), c);
        }
        if (lin.is_zero()) { dead = true; break; }
        term *= lin;
      }
      if (dead && term.is_zero()) continue;
      H += term;
    }
    if (wanted == Scope::Borel) return H;

    // spell out the e_{-alpha_i} dependence: each monomial picks up
    // prod x_{-alpha_i}^{n_i} where n is its total root content
    Poly F(nv);
    for (const auto& [m, c] : H.terms()) {
      std::vector<int> n(rank(), 0);
      for (int v = rank(); v < nv; ++v) {
        if (m[v] == 0) continue;
        const RootVec& r = alg_.rs.positive[alg_.root_of(v)];
        int sgn = alg_.is_pos(v) ? 1 : -1;
        for (int q = 0; q < rank(); ++q) n[q] += sgn * r[q] * m[v];
      }
      Mono mm = m;
      for (int q = 0; q < rank(); ++q) {
        if (n[q] < 0) throw DefectError("assembled monomial with negative root content");
        mm[alg_.neg_index(q)] += n[q];
      }
      F.add_term(mm, c);
    }
    return F;
  }

  // --- checkpointing -------------------------------------------------------

  nlohmann::json meta_json(const std::string& frame_hash) const {
    nlohmann::json meta;
    meta["family"] = std::string(1, family_char(alg_.rs.family));
    meta["rank"] = alg_.rank();
    meta["degree"] = d_;
    meta["scope"] = scope_ == Scope::Full ? "full" : "borel";
    meta["seed"] = seeds_.to_json();
    meta["frame_hash"] = frame_hash;
    return meta;
  }

  nlohmann::json checkpoint(const std::string& frame_hash) const {
    nlohmann::json j;
    j["format"] = "lieinv-valuedata/1";
    j["meta"] = meta_json(frame_hash);
    j["strata_done"] = done_;
    nlohmann::json vals = nlohmann::json::array();
    VarNames pv = cartan_vars(rank());
    for (const auto& [k, v] : table_) vals.push_back({termkey_to_json(k), v.to_json(pv)});
    j["values"] = vals;
    return j;
  }

  void restore(const nlohmann::json& j, const std::string& frame_hash) {
    if (j.at("format") != "lieinv-valuedata/1") throw ConfigError("unsupported checkpoint format");
    if (j.at("meta") != meta_json(frame_hash))
      throw ConfigError("checkpoint metadata does not match this job (frame/seed/degree mismatch)");
    table_.clear();
    VarNames pv = cartan_vars(rank());
    for (const auto& e : j.at("values")) table_[termkey_from_json(e.at(0))] = Poly::from_json(e.at(1), pv);
    done_ = j.at("strata_done").get<int>();
  }

  // linear form gamma(p) of the root attached to a root-vector basis index
  Poly root_linear_form(int eidx) const {
    const RootVec& r = alg_.rs.positive[alg_.root_of(eidx)];
    Poly g(rank());
    for (int j = 0; j < rank(); ++j) {
      int v = 0;
      for (int i = 0; i < rank(); ++i) v += r[i] * alg_.rs.cartan[i][j];
      if (v != 0) g.add_term(unit_mono(rank(), j), rat(v));
    }
    return g;
  }

  Poly alpha_poly(int i) const {
    Poly g(rank());
    for (int j = 0; j < rank(); ++j)
      if (alg_.rs.cartan[i][j] != 0) g.add_term(unit_mono(rank(), j), rat(alg_.rs.cartan[i][j]));
    return g;
  }

 private:
  struct Stratum {
    enum Kind { Seed, Top, P, Cartan, Neg } kind;
    std::vector<TermKey> keys;
  };

  int rank() const { return alg_.rank(); }

  static Mono unit_mono(int nv, int i) {
    Mono m(nv, 0);
    m[i] = 1;
    return m;
  }

  static std::vector<int> erase_positions(const std::vector<int>& v, std::vector<int> pos) {
    std::sort(pos.begin(), pos.end());
    std::vector<int> out;
    size_t pi = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (pi < pos.size() && static_cast<int>(i) == pos[pi]) {
        ++pi;
        continue;
      }
      out.push_back(v[i]);
    }
    return out;
  }

  static Poly embed_cartan(const Poly& p, int nv) {
    Poly r(nv);
    for (const auto& [m, c] : p.terms()) {
      Mono mm(nv, 0);
      std::copy(m.begin(), m.end(), mm.begin());
      r.add_term(mm, c);
    }
    return r;
  }

  Poly value_for(const Stratum& st, const TermKey& key) const {
    switch (st.kind) {
      case Stratum::Seed: return Poly::constant(rank(), seed_value(key));
      case Stratum::Top: return reduce_top(key);
      case Stratum::P: return reduce_p(key);
      case Stratum::Cartan: return pure_cartan_value();
      case Stratum::Neg: return reduce_negative(key);
    }
    throw DefectError("unknown stratum kind");
  }

  void build_strata() {
    std::vector<TermKey> seeds;
    std::map<int, std::vector<TermKey>, std::greater<int>> tops;
    for (const auto& k : lists_.ttms)
      (is_pure_slice(k) ? seeds : tops[k.b]).push_back(k);
    if (!seeds.empty()) strata_.push_back({Stratum::Seed, seeds});
    for (auto& [b, keys] : tops) strata_.push_back({Stratum::Top, keys});
    std::map<int, std::vector<TermKey>> ps;
    for (const auto& k : lists_.ptms) ps[k.a].push_back(k);
    for (auto& [a, keys] : ps) strata_.push_back({Stratum::P, keys});
    strata_.push_back({Stratum::Cartan, {lists_.cartan}});
    std::map<std::pair<int, int>, std::vector<TermKey>> negs;
    for (const auto& k : lists_.ntms)
      negs[{k.beta(), -total_height(fr_, k.W)}].push_back(k);
    for (auto& [bo, keys] : negs) strata_.push_back({Stratum::Neg, keys});
  }

  // product of the e-expansions of the given frame elements: sorted
  // root-vector index monomials with coefficients
  std::vector<std::pair<std::vector<int>, Rat>> expand_to_root_monomials(
      const std::vector<int>& factors) const {
    std::map<std::vector<int>, Rat> acc;
    acc[{}] = 1;
    for (int f : factors) {
      std::map<std::vector<int>, Rat> next;
      for (const auto& [mono, c] : acc)
        for (const auto& [eidx, ec] : fr_.frame_to_e(f)) {
          std::vector<int> m = mono;
          m.insert(std::upper_bound(m.begin(), m.end(), eidx), eidx);
          next[m] += c * ec;
        }
      acc = std::move(next);
    }
    std::vector<std::pair<std::vector<int>, Rat>> out;
    for (auto& [m, c] : acc)
      if (c != 0) out.push_back({m, c});
    return out;
  }

  std::vector<std::pair<std::vector<int>, Rat>> refold_to_frame(
      const std::vector<int>& emono) const {
    std::map<std::vector<int>, Rat> acc;
    acc[{}] = 1;
    for (int eidx : emono) {
      std::map<std::vector<int>, Rat> next;
      for (const auto& [mono, c] : acc)
        for (const auto& [f, fc] : fr_.e_to_frame(eidx)) {
          std::vector<int> m = mono;
          m.insert(std::upper_bound(m.begin(), m.end(), f), f);
          next[m] += c * fc;
        }
      acc = std::move(next);
    }
    std::vector<std::pair<std::vector<int>, Rat>> out;
    for (auto& [m, c] : acc)
      if (c != 0) out.push_back({m, c});
    return out;
  }

  const Frame& fr_;
  const Algebra& alg_;
  int d_;
  Scope scope_;
  SeedSpec seeds_;
  TermLists lists_;
  std::vector<Stratum> strata_;
  std::map<TermKey, Poly> table_;
  int done_ = 0;
};

// Convenience wrapper: build the table for slice index j (1-based) at its
// intrinsic degree and return the closed engine.
inline Engine compute_valuedata(const Frame& fr, int j, Scope scope, int threads = 1) {
  SeedSpec seeds;
  seeds.index = j;
  Engine eng(fr, fr.degree(j - 1), scope, seeds);
  eng.run_all(threads);
  return eng;
}

}  // namespace lieinv

#endif
