#ifndef LIEINV_POLY_HPP
#define LIEINV_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieinv/rational.hpp"

namespace lieinv {

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Graded lexicographic order with the leading monomial first.  This is the
// canonical term order: map iteration, printing, hashing and the JSON dump
// all follow it, so equal polynomials serialize byte-identically.
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Printable variable universe.  Cartan coordinates are p1..pl, root-vector
// coordinates are named by the simple-root coefficient vector of their
// root, e.g. x[1,1] for e_{alpha_1+alpha_2} and x[-1,0] for e_{-alpha_1}.
struct VarNames {
  std::vector<std::string> names;

  int size() const { return static_cast<int>(names.size()); }
  const std::string& operator[](int i) const { return names[i]; }

  int index_of(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == s) return i;
    throw UnboundVariableError("unknown variable '" + s + "'");
  }
};

inline VarNames cartan_vars(int l) {
  VarNames v;
  for (int i = 1; i <= l; ++i) v.names.push_back("p" + std::to_string(i));
  return v;
}

inline VarNames xi_vars(int l) {
  VarNames v;
  for (int i = 1; i <= l; ++i) v.names.push_back("xi" + std::to_string(i));
  return v;
}

// Sparse multivariate polynomial over Rat.  Zero coefficients are never
// stored.  Values are immutable in spirit: every operation returns a new
// polynomial, so concurrent reads are safe.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nv_(nvars) {}

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.t_[Mono(nvars, 0)] = c;
    return p;
  }

  static Poly variable(int nvars, int i) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.t_[m] = 1;
    return p;
  }

  static Poly monomial(int nvars, const Mono& m, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.t_[m] = c;
    return p;
  }

  int nvars() const { return nv_; }
  bool is_zero() const { return t_.empty(); }
  size_t num_terms() const { return t_.size(); }
  const std::map<Mono, Rat, MonoOrder>& terms() const { return t_; }

  Rat coefficient(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
  }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_universe(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_universe(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_universe(b);
    Poly r(a.nv_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m(a.nv_);
        for (int i = 0; i < a.nv_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }
  friend Poly operator*(const Poly& p, const Rat& c) { return p.scaled(c); }

  Poly scaled(const Rat& c) const {
    Poly r(nv_);
    if (c == 0) return r;
    for (const auto& [m, k] : t_) r.t_[m] = c * k;
    return r;
  }

  Poly operator-() const { return scaled(rat(-1)); }

  Poly pow(int e) const {
    Poly r = constant(nv_, rat(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  bool operator==(const Poly& o) const { return nv_ == o.nv_ && t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly partial_derivative(int var) const {
    Poly r(nv_);
    for (const auto& [m, c] : t_) {
      if (m[var] == 0) continue;
      Mono d = m;
      d[var] -= 1;
      r.add_term(d, c * m[var]);
    }
    return r;
  }

  int total_degree() const {
    return t_.empty() ? 0 : mono_degree(t_.begin()->first);
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m[var]);
    return d;
  }

  // Degree d such that every stored monomial has total degree d; nullopt
  // when inhomogeneous.  The zero polynomial reports degree 0.
  std::optional<int> homogeneous_degree() const {
    if (t_.empty()) return 0;
    int d = mono_degree(t_.begin()->first);
    for (const auto& [m, c] : t_)
      if (mono_degree(m) != d) return std::nullopt;
    return d;
  }

  Rat eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nv_)
      throw DimensionMismatchError("eval point has wrong number of coordinates");
    Rat total = 0;
    for (const auto& [m, c] : t_) {
      Rat term = c;
      for (int i = 0; i < nv_; ++i)
        for (int k = 0; k < m[i]; ++k) term *= point[i];
      total += term;
    }
    return total;
  }

  // Ring homomorphism determined by the bindings.  Every variable that
  // actually occurs must be bound; all bound polynomials must live in one
  // target universe, whose arity is given by target_nvars.
  Poly substitute(const std::map<int, Poly>& bind, int target_nvars) const {
    Poly r(target_nvars);
    for (const auto& [m, c] : t_) {
      Poly term = Poly::constant(target_nvars, c);
      for (int i = 0; i < nv_; ++i) {
        if (m[i] == 0) continue;
        auto it = bind.find(i);
        if (it == bind.end())
          throw UnboundVariableError("substitute: variable #" + std::to_string(i) + " unbound");
        if (it->second.nvars() != target_nvars)
          throw DimensionMismatchError("substitute: binding universe mismatch");
        term *= it->second.pow(m[i]);
      }
      r += term;
    }
    return r;
  }

  // --- text format ----------------------------------------------------
  //
  //   poly  := ['-'] term (('+'|'-') term)*
  //   term  := coeff | coeff '*' factors | factors
  //   factor:= name ('^' int)?
  //
  // printed canonically in the graded-lex order above.

  std::string to_text(const VarNames& vars) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : t_) {
      Rat ac = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mono = mono_text(m, vars);
      if (mono.empty()) {
        out += to_string(ac);
      } else if (ac == 1) {
        out += mono;
      } else {
        out += to_string(ac) + " * " + mono;
      }
    }
    return out;
  }

  static Poly from_text(const std::string& text, const VarNames& vars);

  nlohmann::json to_json(const VarNames& vars) const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : t_) {
      nlohmann::json exps = nlohmann::json::object();
      for (int i = 0; i < nv_; ++i)
        if (m[i] != 0) exps[vars[i]] = m[i];
      terms.push_back({{"coeff", to_string(c)}, {"exps", exps}});
    }
    return terms;
  }

  static Poly from_json(const nlohmann::json& j, const VarNames& vars) {
    Poly p(vars.size());
    for (const auto& term : j) {
      Mono m(vars.size(), 0);
      for (auto it = term.at("exps").begin(); it != term.at("exps").end(); ++it)
        m[vars.index_of(it.key())] = it.value().get<int>();
      p.add_term(m, rat_from_string(term.at("coeff").get<std::string>()));
    }
    return p;
  }

 private:
  void check_universe(const Poly& o) const {
    if (nv_ != o.nv_)
      throw DimensionMismatchError("polynomials from different variable universes");
  }

  static std::string mono_text(const Mono& m, const VarNames& vars) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars[static_cast<int>(i)];
      if (m[i] != 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  int nv_;
  std::map<Mono, Rat, MonoOrder> t_;
};

namespace detail {

struct TextCursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos == start) throw Error("polynomial parse: expected number at position " + std::to_string(start));
    return s.substr(start, pos - start);
  }
  std::string name() {
    skip_ws();
    size_t start = pos;
    bool inside_brackets = false;
    while (pos < s.size()) {
      char ch = s[pos];
      if (ch == '[') { inside_brackets = true; ++pos; continue; }
      if (ch == ']') { ++pos; break; }
      if (inside_brackets) {
        if (ch == ',' || ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) { ++pos; continue; }
        throw Error("polynomial parse: malformed bracket variable at position " + std::to_string(start));
      }
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') { ++pos; continue; }
      break;
    }
    if (pos == start) throw Error("polynomial parse: expected variable at position " + std::to_string(start));
    return s.substr(start, pos - start);
  }
};

}  // namespace detail

inline Poly Poly::from_text(const std::string& text, const VarNames& vars) {
  detail::TextCursor cur{text};
  Poly result(vars.size());
  bool first = true;
  while (!cur.eof()) {
    int sign = 1;
    if (cur.accept('-')) sign = -1;
    else if (cur.accept('+')) sign = 1;
    else if (!first) throw Error("polynomial parse: expected '+' or '-'");
    first = false;
    if (cur.eof()) throw Error("polynomial parse: dangling sign");

    Rat coeff = rat(sign);
    Mono m(vars.size(), 0);
    bool saw_factor = false;
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= rat_from_string(cur.number());
      saw_factor = true;
      if (!cur.accept('*')) {
        result.add_term(m, coeff);
        continue;
      }
    }
    for (;;) {
      std::string var = cur.name();
      int e = 1;
      if (cur.accept('^')) e = static_cast<int>(std::stol(cur.number()));
      m[vars.index_of(var)] += e;
      saw_factor = true;
      if (!cur.accept('*')) break;
    }
    if (!saw_factor) throw Error("polynomial parse: empty term");
    result.add_term(m, coeff);
  }
  if (result.nvars() != vars.size()) throw Error("polynomial parse: universe mismatch");
  return result;
}

}  // namespace lieinv

#endif
