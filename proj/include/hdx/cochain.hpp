#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "complex.hpp"

namespace hdx {

/// A bijection on {0, ..., l-1} in one-line notation. compose(a, b) = a ∘ b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : p_(std::move(images)) {
    std::vector<char> seen(p_.size(), 0);
    for (int x : p_) {
      require(x >= 0 && x < static_cast<int>(p_.size()) && !seen[x], ErrorKind::BadParams, "not a permutation");
      seen[x] = 1;
    }
  }

  static Permutation identity(int l) {
    Permutation p;
    p.p_.resize(l);
    std::iota(p.p_.begin(), p.p_.end(), 0);
    return p;
  }

  static Permutation transposition(int l, int i, int j) {
    Permutation p = identity(l);
    std::swap(p.p_[i], p.p_[j]);
    return p;
  }

  static Permutation random(int l, Rng& rng) {
    Permutation p = identity(l);
    rng.shuffle(p.p_);
    return p;
  }

  /// All l! permutations in lexicographic order.
  static std::vector<Permutation> all(int l) {
    std::vector<Permutation> out;
    Permutation p = identity(l);
    do out.push_back(p);
    while (std::next_permutation(p.p_.begin(), p.p_.end()));
    return out;
  }

  int size() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[i]; }
  const std::vector<int>& images() const { return p_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (p_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation q;
    q.p_.resize(p_.size());
    for (int i = 0; i < size(); ++i) q.p_[p_[i]] = i;
    return q;
  }

  /// Lexicographic rank in [0, l!).
  int rank() const {
    int r = 0;
    const int l = size();
    for (int i = 0; i < l; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < l; ++j) smaller += p_[j] < p_[i];
      int f = 1;
      for (int j = 2; j <= l - 1 - i; ++j) f *= j;
      r += smaller * f;
    }
    return r;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < size(); ++i) s += (i ? " " : "") + std::to_string(p_[i]);
    return s;
  }

  friend Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c;
    c.p_.resize(b.p_.size());
    for (std::size_t i = 0; i < b.p_.size(); ++i) c.p_[i] = a.p_[b.p_[i]];
    return c;
  }
  friend Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> p_;
};

inline int factorial(int l) {
  int f = 1;
  for (int i = 2; i <= l; ++i) f *= i;
  return f;
}

/// Asymmetric Sym(l)-valued function on directed edges. Stored as ψ(u→v) for u < v, indexed by edge ordinal;
/// ψ(uv) maps the fiber over u to the fiber over v.
class Cochain1 {
 public:
  Cochain1() = default;
  Cochain1(ComplexPtr base, int ell) : base_(std::move(base)), ell_(ell) {
    require(ell_ >= 1, ErrorKind::BadParams, "ell must be positive");
    values_.assign(base_->count(1), Permutation::identity(ell_));
  }

  const ComplexPtr& base() const { return base_; }
  const SimplicialComplex& complex() const { return *base_; }
  int ell() const { return ell_; }
  std::size_t size() const { return values_.size(); }

  const Permutation& at(int edge) const { return values_[edge]; }
  void set_at(int edge, Permutation p) {
    require(p.size() == ell_, ErrorKind::BadParams, "permutation size differs from ell");
    values_[edge] = std::move(p);
  }

  /// ψ(u→v) for any orientation.
  Permutation get(VertexId u, VertexId v) const {
    int e = base_->ordinal(Face{u, v});
    return u < v ? values_[e] : values_[e].inverse();
  }

  void set(VertexId u, VertexId v, const Permutation& p) {
    int e = base_->ordinal(Face{u, v});
    set_at(e, u < v ? p : p.inverse());
  }

  friend bool operator==(const Cochain1& a, const Cochain1& b) {
    return a.base_ == b.base_ && a.ell_ == b.ell_ && a.values_ == b.values_;
  }

 private:
  ComplexPtr base_;
  int ell_ = 1;
  std::vector<Permutation> values_;
};

/// δψ on the ascending orientation (u<v<w): ψ(wu) ∘ ψ(vw) ∘ ψ(uv).
inline Permutation delta_at(const Cochain1& psi, const Face& tri) {
  const Permutation& uv = psi.at(psi.complex().ordinal(Face{tri[0], tri[1]}));
  const Permutation& vw = psi.at(psi.complex().ordinal(Face{tri[1], tri[2]}));
  Permutation wu = psi.at(psi.complex().ordinal(Face{tri[0], tri[2]})).inverse();
  return wu * vw * uv;
}

/// δψ per triangle ordinal; empty when the base has no triangles.
inline std::vector<Permutation> delta(const Cochain1& psi) {
  std::vector<Permutation> out;
  if (psi.complex().dim() < 2) return out;
  for (const Face& t : psi.complex().faces(2)) out.push_back(delta_at(psi, t));
  return out;
}

/// Pr_2-mass of triangles where δψ is not the identity.
inline double wt_delta(const Cochain1& psi) {
  if (psi.complex().dim() < 2) return 0.0;
  double w = 0;
  const auto& T = psi.complex().faces(2);
  for (std::size_t j = 0; j < T.size(); ++j)
    if (!delta_at(psi, T[j]).is_identity()) w += psi.complex().weights(2)[j];
  return w;
}

inline std::vector<int> violated_triangles(const Cochain1& psi) {
  std::vector<int> out;
  if (psi.complex().dim() < 2) return out;
  const auto& T = psi.complex().faces(2);
  for (std::size_t j = 0; j < T.size(); ++j)
    if (!delta_at(psi, T[j]).is_identity()) out.push_back(static_cast<int>(j));
  return out;
}

inline bool is_cocycle(const Cochain1& psi) {
  if (psi.complex().dim() < 2) return true;
  for (const Face& t : psi.complex().faces(2))
    if (!delta_at(psi, t).is_identity()) return false;
  return true;
}

inline void check_same_base(const Cochain1& a, const Cochain1& b) {
  require(a.base() == b.base() || (a.base() && b.base() && a.complex().faces(1) == b.complex().faces(1)), ErrorKind::BaseMismatch, "cochains live on different complexes");
  require(a.ell() == b.ell(), ErrorKind::BaseMismatch, "cochains have different ell");
}

/// Pr_1-mass of edges where ψ and φ differ.
inline double dist(const Cochain1& psi, const Cochain1& phi) {
  check_same_base(psi, phi);
  double d = 0;
  for (std::size_t e = 0; e < psi.size(); ++e)
    if (!(psi.at(static_cast<int>(e)) == phi.at(static_cast<int>(e)))) d += psi.complex().weights(1)[e];
  return d;
}

inline double wt(const Cochain1& psi) {
  double d = 0;
  for (std::size_t e = 0; e < psi.size(); ++e)
    if (!psi.at(static_cast<int>(e)).is_identity()) d += psi.complex().weights(1)[e];
  return d;
}

/// Edgewise ψ(uv) ∘ φ(uv)^{-1}.
inline Cochain1 edgewise_quotient(const Cochain1& psi, const Cochain1& phi) {
  check_same_base(psi, phi);
  Cochain1 out(psi.base(), psi.ell());
  for (std::size_t e = 0; e < psi.size(); ++e) out.set_at(static_cast<int>(e), psi.at(static_cast<int>(e)) * phi.at(static_cast<int>(e)).inverse());
  return out;
}

/// ψ(uv) = h(v) ∘ h(u)^{-1}.
inline Cochain1 coboundary(const ComplexPtr& X, const std::vector<Permutation>& h) {
  require(static_cast<int>(h.size()) == X->n_vertices(), ErrorKind::BadParams, "gauge must assign every vertex");
  Cochain1 psi(X, h.empty() ? 1 : h.front().size());
  const auto& E = X->faces(1);
  for (std::size_t e = 0; e < E.size(); ++e) psi.set_at(static_cast<int>(e), h[E[e][1]] * h[E[e][0]].inverse());
  return psi;
}

/// Gauge action (h·ψ)(uv) = h(v) ∘ ψ(uv) ∘ h(u)^{-1}; preserves cocycles and their classes.
inline Cochain1 gauge(const Cochain1& psi, const std::vector<Permutation>& h) {
  Cochain1 out(psi.base(), psi.ell());
  const auto& E = psi.complex().faces(1);
  for (std::size_t e = 0; e < E.size(); ++e) out.set_at(static_cast<int>(e), h[E[e][1]] * psi.at(static_cast<int>(e)) * h[E[e][0]].inverse());
  return out;
}

inline Cochain1 random_cochain(const ComplexPtr& X, int ell, Rng& rng) {
  Cochain1 psi(X, ell);
  for (std::size_t e = 0; e < psi.size(); ++e) psi.set_at(static_cast<int>(e), Permutation::random(ell, rng));
  return psi;
}

inline std::vector<Permutation> random_gauge(int n, int ell, Rng& rng) {
  std::vector<Permutation> h;
  for (int v = 0; v < n; ++v) h.push_back(Permutation::random(ell, rng));
  return h;
}

inline std::string write_cochain(const Cochain1& psi) {
  std::ostringstream os;
  os << "ell " << psi.ell() << '\n';
  const auto& E = psi.complex().faces(1);
  for (std::size_t e = 0; e < E.size(); ++e) os << E[e][0] << ' ' << E[e][1] << "  " << psi.at(static_cast<int>(e)).str() << '\n';
  return os.str();
}

/// Parses the cochain text format; edges not listed keep the identity.
inline Cochain1 parse_cochain(const std::string& text, const ComplexPtr& X) {
  std::istringstream in(text);
  std::string line, tok;
  int ell = -1, lineno = 0;
  Cochain1 psi;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    if (!(ls >> tok)) continue;
    if (ell < 0) {
      if (tok != "ell" || !(ls >> ell) || ell < 1) fail(ErrorKind::ParseError, "expected header `ell <l>`");
      psi = Cochain1(X, ell);
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad vertex");
    }
    if (!(ls >> v)) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": missing second vertex");
    std::vector<int> img;
    int x;
    while (ls >> x) img.push_back(x);
    if (static_cast<int>(img.size()) != ell) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": permutation length differs from ell");
    if (!X->contains(Face{u, v})) fail(ErrorKind::NotAFace, "line " + std::to_string(lineno) + ": not an edge");
    try {
      psi.set(u, v, Permutation(img));
    } catch (const Error&) {
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": not a permutation");
    }
  }
  if (ell < 0) fail(ErrorKind::ParseError, "missing header");
  return psi;
}

}  // namespace hdx
