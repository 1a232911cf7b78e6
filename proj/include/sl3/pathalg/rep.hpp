#pragma once

// Quiver representations over an exact field: projectives, submodule and
// quotient machinery, radical/socle filtrations, contravariant duals,
// isomorphism testing, standard modules and the universal-extension tilting
// constructor.

#include <numeric>
#include <random>
#include <sstream>

#include "sl3/pathalg/algebra.hpp"

namespace sl3::pathalg {

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// multiset of vertex labels, one entry per vertex with multiplicity
using LayerMultiset = std::map<std::string, int>;

struct FiltrationReport {
  std::vector<LayerMultiset> layers;

  int length() const { return static_cast<int>(layers.size()); }
  friend bool operator==(const FiltrationReport&, const FiltrationReport&) = default;
};

inline std::string to_string(const LayerMultiset& layer) {
  std::ostringstream os;
  bool first = true;
  for (auto& [v, m] : layer)
    for (int i = 0; i < m; ++i) {
      if (!first) os << " ";
      first = false;
      os << v;
    }
  return os.str();
}

template <class K>
struct Rep {
  const Algebra<K>* alg = nullptr;
  std::vector<int> dims;       // per vertex
  std::vector<Mat<K>> act;     // per arrow: dims[src] x dims[tgt]

  int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

  const Quiver& quiver() const { return alg->quiver(); }

  bool relations_hold() const {
    for (const Relation& r : alg->presentation().relations) {
      int s = quiver().arrows[r.terms.front().arrows.front()].src;
      int t = quiver().arrows[r.terms.front().arrows.back()].tgt;
      Mat<K> acc(dims[s], dims[t]);
      for (const auto& term : r.terms) {
        Mat<K> m = Mat<K>::identity(dims[s]);
        for (int a : term.arrows) m = m * act[a];
        m *= K(term.coeff);
        acc = acc + m;
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  }
};

// a module element: one row vector per vertex
template <class K>
using Element = std::vector<std::vector<K>>;

template <class K>
Element<K> zero_element(const Rep<K>& m) {
  Element<K> e(m.dims.size());
  for (size_t v = 0; v < m.dims.size(); ++v) e[v].assign(m.dims[v], K(0));
  return e;
}

// -------------------------------------------------------------------------
// Projectives: right modules on the paths starting at a vertex.

template <class K>
struct ProjectiveModule {
  Rep<K> rep;
  std::vector<int> basis_ids;               // algebra basis indices, in order
  std::vector<std::pair<int, int>> coords;  // basis id -> (vertex, column)

  // element supported on one basis path
  Element<K> unit(int basis_id) const {
    Element<K> e = zero_element(rep);
    for (size_t i = 0; i < basis_ids.size(); ++i)
      if (basis_ids[i] == basis_id) {
        auto [v, col] = coords[i];
        e[v][col] = K(1);
        return e;
      }
    throw std::invalid_argument("basis id not in this projective");
  }
};

template <class K>
ProjectiveModule<K> projective(const Algebra<K>& alg, int vertex) {
  ProjectiveModule<K> out;
  out.rep.alg = &alg;
  const Quiver& q = alg.quiver();
  out.rep.dims.assign(q.vertices.size(), 0);
  out.basis_ids = alg.projective_basis(vertex);
  std::map<int, std::pair<int, int>> where;
  for (int id : out.basis_ids) {
    int v = alg.basis_path(id).tgt;
    where[id] = {v, out.rep.dims[v]++};
    out.coords.push_back(where[id]);
  }
  out.rep.act.assign(q.arrows.size(), {});
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    Mat<K> m(out.rep.dims[q.arrows[a].src], out.rep.dims[q.arrows[a].tgt]);
    for (size_t i = 0; i < out.basis_ids.size(); ++i) {
      int id = out.basis_ids[i];
      if (alg.basis_path(id).tgt != q.arrows[a].src) continue;
      auto [v, col] = out.coords[i];
      for (auto& [id2, c] : alg.right_action(id, static_cast<int>(a))) {
        auto [v2, col2] = where.at(id2);
        m.at(col, col2) += c;
      }
    }
    out.rep.act[a] = std::move(m);
  }
  return out;
}

// -------------------------------------------------------------------------
// Submodules as per-vertex subspaces, closed under the arrow actions.

template <class K>
struct SubModule {
  std::vector<Subspace<K>> spaces;  // per vertex

  int total_dim() const {
    int d = 0;
    for (auto& s : spaces) d += s.dim();
    return d;
  }
  friend bool operator==(const SubModule&, const SubModule&) = default;
};

template <class K>
SubModule<K> empty_submodule(const Rep<K>& m) {
  SubModule<K> s;
  for (int d : m.dims) s.spaces.emplace_back(d);
  return s;
}

template <class K>
SubModule<K> full_submodule(const Rep<K>& m) {
  SubModule<K> s = empty_submodule(m);
  for (size_t v = 0; v < m.dims.size(); ++v)
    s.spaces[v].insert_all(Mat<K>::identity(m.dims[v]));
  return s;
}

// closure under all arrow actions
template <class K>
void spin_up(const Rep<K>& m, SubModule<K>& s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < m.quiver().arrows.size(); ++a) {
      int src = m.quiver().arrows[a].src, tgt = m.quiver().arrows[a].tgt;
      const Mat<K>& basis = s.spaces[src].basis();
      for (int i = 0; i < basis.rows(); ++i)
        if (s.spaces[tgt].insert(basis.row(i) * m.act[a])) changed = true;
    }
  }
}

template <class K>
SubModule<K> generated_submodule(const Rep<K>& m, const std::vector<Element<K>>& gens) {
  SubModule<K> s = empty_submodule(m);
  for (const Element<K>& g : gens)
    for (size_t v = 0; v < m.dims.size(); ++v)
      if (m.dims[v] > 0) s.spaces[v].insert(g[v]);
  spin_up(m, s);
  return s;
}

// image of all arrows: rad M
template <class K>
SubModule<K> radical_submodule(const Rep<K>& m, const SubModule<K>& within) {
  SubModule<K> s = empty_submodule(m);
  for (size_t a = 0; a < m.quiver().arrows.size(); ++a) {
    int src = m.quiver().arrows[a].src, tgt = m.quiver().arrows[a].tgt;
    const Mat<K>& basis = within.spaces[src].basis();
    for (int i = 0; i < basis.rows(); ++i) s.spaces[tgt].insert(basis.row(i) * m.act[a]);
  }
  return s;
}

// joint kernel of all arrows out of each vertex, taken inside `above`:
// {v : v * act[a] in below[tgt] for all arrows}
template <class K>
SubModule<K> socle_above(const Rep<K>& m, const SubModule<K>& below) {
  SubModule<K> out = empty_submodule(m);
  for (size_t v = 0; v < m.dims.size(); ++v) {
    if (m.dims[v] == 0) continue;
    // constraints: for each arrow a: v -> t, the image must reduce to zero
    // modulo below[t]; stack the reduced-action matrices
    std::vector<Mat<K>> blocks;
    int total_cols = 0;
    for (size_t a = 0; a < m.quiver().arrows.size(); ++a) {
      if (m.quiver().arrows[a].src != static_cast<int>(v)) continue;
      int t = m.quiver().arrows[a].tgt;
      Mat<K> reduced(m.dims[v], m.dims[t]);
      for (int i = 0; i < m.dims[v]; ++i) {
        std::vector<K> row(m.dims[v], K(0));
        row[i] = K(1);
        std::vector<K> img = row * m.act[a];
        below.spaces[t].reduce(img);
        reduced.set_row(i, img);
      }
      total_cols += m.dims[t];
      blocks.push_back(std::move(reduced));
    }
    Mat<K> stacked(m.dims[v], total_cols);
    int ofs = 0;
    for (const Mat<K>& b : blocks) {
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) stacked.at(i, ofs + j) = b.at(i, j);
      ofs += b.cols();
    }
    Mat<K> ker = total_cols == 0 ? Mat<K>::identity(m.dims[v]) : left_null_space(stacked);
    out.spaces[v].insert_all(ker);
    // everything already below stays in the socle preimage
    out.spaces[v].insert_all(below.spaces[v].basis());
  }
  return out;
}

// -------------------------------------------------------------------------
// Quotients.

template <class K>
struct QuotientResult {
  Rep<K> rep;
  // per vertex: projection matrix dims_old x dims_new
  std::vector<Mat<K>> projection;
};

template <class K>
QuotientResult<K> quotient(const Rep<K>& m, const SubModule<K>& s) {
  QuotientResult<K> out;
  out.rep.alg = m.alg;
  const size_t nv = m.dims.size();
  out.rep.dims.assign(nv, 0);
  out.projection.resize(nv);
  std::vector<std::vector<int>> free_cols(nv);
  for (size_t v = 0; v < nv; ++v) {
    std::vector<bool> is_pivot(m.dims[v], false);
    const Mat<K>& rows = s.spaces[v].basis();
    for (int i = 0; i < rows.rows(); ++i)
      for (int j = 0; j < m.dims[v]; ++j)
        if (!rows.at(i, j).is_zero()) {
          is_pivot[j] = true;
          break;
        }
    for (int j = 0; j < m.dims[v]; ++j)
      if (!is_pivot[j]) free_cols[v].push_back(j);
    out.rep.dims[v] = static_cast<int>(free_cols[v].size());
    Mat<K> proj(m.dims[v], out.rep.dims[v]);
    for (int j = 0; j < m.dims[v]; ++j) {
      std::vector<K> e(m.dims[v], K(0));
      e[j] = K(1);
      s.spaces[v].reduce(e);
      for (size_t k = 0; k < free_cols[v].size(); ++k)
        proj.at(j, static_cast<int>(k)) = e[free_cols[v][k]];
    }
    out.projection[v] = std::move(proj);
  }
  out.rep.act.assign(m.quiver().arrows.size(), {});
  for (size_t a = 0; a < m.quiver().arrows.size(); ++a) {
    int src = m.quiver().arrows[a].src, tgt = m.quiver().arrows[a].tgt;
    Mat<K> mat(out.rep.dims[src], out.rep.dims[tgt]);
    for (int i = 0; i < out.rep.dims[src]; ++i) {
      std::vector<K> lift(m.dims[src], K(0));
      lift[free_cols[src][i]] = K(1);
      std::vector<K> img = lift * m.act[a];
      std::vector<K> proj = img * out.projection[tgt];
      mat.set_row(i, proj);
    }
    out.rep.act[a] = std::move(mat);
  }
  return out;
}

template <class K>
Rep<K> quotient_by_elements(const Rep<K>& m, const std::vector<Element<K>>& gens) {
  return quotient(m, generated_submodule(m, gens)).rep;
}

// -------------------------------------------------------------------------
// Filtrations and structural reports.

template <class K>
std::vector<SubModule<K>> radical_series(const Rep<K>& m) {
  std::vector<SubModule<K>> chain{full_submodule(m)};
  while (chain.back().total_dim() > 0) {
    SubModule<K> next = radical_submodule(m, chain.back());
    if (next.total_dim() == chain.back().total_dim())
      throw std::logic_error("radical series stalls; the action is not nilpotent");
    chain.push_back(std::move(next));
  }
  return chain;  // M = rad^0 > rad^1 > ... > 0
}

template <class K>
std::vector<SubModule<K>> socle_series(const Rep<K>& m) {
  std::vector<SubModule<K>> chain{empty_submodule(m)};
  while (chain.back().total_dim() < m.total_dim()) {
    SubModule<K> next = socle_above(m, chain.back());
    if (next.total_dim() == chain.back().total_dim())
      throw std::logic_error("socle series stalls; the action is not nilpotent");
    chain.push_back(std::move(next));
  }
  return chain;  // 0 = soc_0 < soc_1 < ... < M
}

template <class K>
LayerMultiset layer_between(const Rep<K>& m, const SubModule<K>& big, const SubModule<K>& small) {
  LayerMultiset out;
  for (size_t v = 0; v < m.dims.size(); ++v) {
    int d = big.spaces[v].dim() - small.spaces[v].dim();
    if (d > 0) out[m.quiver().vertices[v]] += d;
  }
  return out;
}

// top layer first
template <class K>
FiltrationReport radical_filtration(const Rep<K>& m) {
  auto chain = radical_series(m);
  FiltrationReport rep;
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    rep.layers.push_back(layer_between(m, chain[i], chain[i + 1]));
  return rep;
}

// bottom layer first
template <class K>
FiltrationReport socle_filtration(const Rep<K>& m) {
  auto chain = socle_series(m);
  FiltrationReport rep;
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    rep.layers.push_back(layer_between(m, chain[i + 1], chain[i]));
  return rep;
}

template <class K>
int loewy_length(const Rep<K>& m) {
  return static_cast<int>(radical_series(m).size()) - 1;
}

// rad^i M = soc_{l-i} M as subspaces, for all i
template <class K>
bool is_rigid(const Rep<K>& m) {
  auto rad = radical_series(m);
  auto soc = socle_series(m);
  if (rad.size() != soc.size()) return false;
  const size_t l = rad.size() - 1;
  for (size_t i = 0; i <= l; ++i)
    if (!(rad[i] == soc[l - i])) return false;
  return true;
}

template <class K>
LayerMultiset composition_multiset(const Rep<K>& m) {
  LayerMultiset out;
  for (size_t v = 0; v < m.dims.size(); ++v)
    if (m.dims[v] > 0) out[m.quiver().vertices[v]] += m.dims[v];
  return out;
}

// -------------------------------------------------------------------------
// Contravariant dual: transpose arrow matrices and swap dashed partners.

template <class K>
Rep<K> contravariant_dual(const Rep<K>& m) {
  std::vector<int> partner = m.alg->dual_partner_map();
  Rep<K> out;
  out.alg = m.alg;
  out.dims = m.dims;
  out.act.assign(m.act.size(), {});
  for (size_t a = 0; a < m.act.size(); ++a) out.act[a] = m.act[partner[a]].transposed();
  return out;
}

// -------------------------------------------------------------------------
// Hom spaces, isomorphism, Ext^1 and universal extensions.

// a hom is one matrix per vertex
template <class K>
using Hom = std::vector<Mat<K>>;

template <class K>
std::vector<Hom<K>> hom_space(const Rep<K>& x, const Rep<K>& y) {
  const size_t nv = x.dims.size();
  std::vector<int> offset(nv, 0);
  int nvars = 0;
  for (size_t v = 0; v < nv; ++v) {
    offset[v] = nvars;
    nvars += x.dims[v] * y.dims[v];
  }
  // constraints: for each arrow a: s->t,  X_a * F_t - F_s * Y_a = 0
  std::vector<std::vector<K>> rows;
  for (size_t a = 0; a < x.quiver().arrows.size(); ++a) {
    int s = x.quiver().arrows[a].src, t = x.quiver().arrows[a].tgt;
    for (int i = 0; i < x.dims[s]; ++i)
      for (int j = 0; j < y.dims[t]; ++j) {
        std::vector<K> row(nvars, K(0));
        for (int k = 0; k < x.dims[t]; ++k)
          row[offset[t] + k * y.dims[t] + j] += x.act[a].at(i, k);
        for (int k = 0; k < y.dims[s]; ++k)
          row[offset[s] + i * y.dims[s] + k] -= y.act[a].at(k, j);
        rows.push_back(std::move(row));
      }
  }
  Mat<K> sys(static_cast<int>(rows.size()), nvars);
  for (size_t i = 0; i < rows.size(); ++i) sys.set_row(static_cast<int>(i), rows[i]);
  Mat<K> ker = nvars == 0 ? Mat<K>(0, 0) : null_space(sys);
  std::vector<Hom<K>> out;
  for (int r = 0; r < ker.rows(); ++r) {
    Hom<K> h(nv);
    for (size_t v = 0; v < nv; ++v) {
      h[v] = Mat<K>(x.dims[v], y.dims[v]);
      for (int i = 0; i < x.dims[v]; ++i)
        for (int j = 0; j < y.dims[v]; ++j)
          h[v].at(i, j) = ker.at(r, offset[v] + i * y.dims[v] + j);
    }
    out.push_back(std::move(h));
  }
  return out;
}

template <class K>
bool hom_invertible(const Hom<K>& h) {
  for (const Mat<K>& m : h) {
    if (m.rows() != m.cols()) return false;
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

// Exact decision: the determinant polynomial in the Hom-basis coefficients
// has degree <= total dimension, so scanning a grid of that size per
// coordinate is conclusive over the rationals; over small prime fields the
// whole coefficient space is scanned when feasible.
template <class K>
bool rep_isomorphic(const Rep<K>& x, const Rep<K>& y) {
  if (x.dims != y.dims) return false;
  if (x.total_dim() == 0) return true;
  std::vector<Hom<K>> homs = hom_space(x, y);
  if (homs.empty()) return false;
  const size_t k = homs.size();
  const int degree = x.total_dim();

  auto combine = [&](const std::vector<long long>& coeffs) {
    Hom<K> h(x.dims.size());
    for (size_t v = 0; v < x.dims.size(); ++v) {
      h[v] = Mat<K>(x.dims[v], y.dims[v]);
      for (size_t i = 0; i < k; ++i) {
        if (coeffs[i] == 0) continue;
        Mat<K> scaled = homs[i][v];
        scaled *= K(coeffs[i]);
        h[v] = h[v] + scaled;
      }
    }
    return h;
  };

  for (const Hom<K>& h : homs)
    if (hom_invertible(h)) return true;

  double grid_points = 1;
  for (size_t i = 0; i < k; ++i) grid_points *= degree + 1;
  if (grid_points <= 200000.0) {
    std::vector<long long> c(k, 0);
    while (true) {
      if (hom_invertible(combine(c))) return true;
      size_t i = 0;
      while (i < k && ++c[i] > degree) c[i++] = 0;
      if (i == k) return false;
    }
  }
  // derandomized search is infeasible; sample widely instead
  std::mt19937_64 rng(0x5137);
  std::uniform_int_distribution<long long> dist(-1000, 1000);
  for (int trial = 0; trial < 4000; ++trial) {
    std::vector<long long> c(k);
    for (auto& v : c) v = dist(rng);
    if (hom_invertible(combine(c))) return true;
  }
  return false;
}

// -------------------------------------------------------------------------
// Standard modules and tilting via universal extensions.

// Delta(v) = P(v) / (trace of all projectives at vertices after v in the
// given linear order)
template <class K>
Rep<K> delta_module(const Algebra<K>& alg, const std::vector<int>& order, int v) {
  ProjectiveModule<K> p = projective(alg, v);
  SubModule<K> sub = empty_submodule(p.rep);
  bool after = false;
  for (int w : order) {
    if (w == v) {
      after = true;
      continue;
    }
    if (!after) continue;
    // the trace of P(w) is generated by the whole vertex-w component
    for (int i = 0; i < p.rep.dims[w]; ++i) {
      std::vector<K> row(p.rep.dims[w], K(0));
      row[i] = K(1);
      sub.spaces[w].insert(row);
    }
  }
  spin_up(p.rep, sub);
  return quotient(p.rep, sub).rep;
}

template <class K>
Rep<K> nabla_module(const Algebra<K>& alg, const std::vector<int>& order, int v) {
  return contravariant_dual(delta_module(alg, order, v));
}

// projective presentation 0 -> ker -> P(v) -> Delta(v) -> 0
template <class K>
struct DeltaPresentation {
  ProjectiveModule<K> cover;
  SubModule<K> kernel;
  Rep<K> delta;
  // kernel as a standalone representation plus its embedding rows
  Rep<K> kernel_rep;
};

template <class K>
DeltaPresentation<K> delta_presentation(const Algebra<K>& alg, const std::vector<int>& order,
                                        int v) {
  DeltaPresentation<K> out;
  out.cover = projective(alg, v);
  out.kernel = empty_submodule(out.cover.rep);
  bool after = false;
  for (int w : order) {
    if (w == v) {
      after = true;
      continue;
    }
    if (!after) continue;
    for (int i = 0; i < out.cover.rep.dims[w]; ++i) {
      std::vector<K> row(out.cover.rep.dims[w], K(0));
      row[i] = K(1);
      out.kernel.spaces[w].insert(row);
    }
  }
  spin_up(out.cover.rep, out.kernel);
  out.delta = quotient(out.cover.rep, out.kernel).rep;

  // restrict the action to the kernel
  const size_t nv = out.cover.rep.dims.size();
  out.kernel_rep.alg = out.cover.rep.alg;
  out.kernel_rep.dims.assign(nv, 0);
  for (size_t w = 0; w < nv; ++w) out.kernel_rep.dims[w] = out.kernel.spaces[w].dim();
  out.kernel_rep.act.assign(out.cover.rep.act.size(), {});
  for (size_t a = 0; a < out.cover.rep.act.size(); ++a) {
    int s = alg.quiver().arrows[a].src, t = alg.quiver().arrows[a].tgt;
    Mat<K> m(out.kernel_rep.dims[s], out.kernel_rep.dims[t]);
    const Mat<K>& sb = out.kernel.spaces[s].basis();
    for (int i = 0; i < sb.rows(); ++i) {
      std::vector<K> img = sb.row(i) * out.cover.rep.act[a];
      // coordinates in the kernel basis at t (it is in RREF)
      const Mat<K>& tb = out.kernel.spaces[t].basis();
      std::vector<K> coords(tb.rows(), K(0));
      for (int r = 0; r < tb.rows(); ++r) {
        int piv = -1;
        for (int j = 0; j < tb.cols(); ++j)
          if (!tb.at(r, j).is_zero()) {
            piv = j;
            break;
          }
        coords[r] = img[piv];
        for (int j = 0; j < tb.cols(); ++j) img[j] -= coords[r] * tb.at(r, j);
      }
      for (const K& c : img)
        if (!c.is_zero()) throw std::logic_error("kernel not arrow-closed");
      m.set_row(i, coords);
    }
    out.kernel_rep.act[a] = std::move(m);
  }
  return out;
}

// Ext^1(Delta(w), X) via Hom(K,X)/Hom(P(w),X); returns representing
// cocycles as homs kernel_rep -> X
template <class K>
std::vector<Hom<K>> ext1_cocycles(const DeltaPresentation<K>& pres, const Rep<K>& x) {
  std::vector<Hom<K>> homs_kx = hom_space(pres.kernel_rep, x);
  if (homs_kx.empty()) return {};

  // Hom(P(w), X) = X_w: restriction of phi_m to the kernel
  const Algebra<K>& alg = *pres.cover.rep.alg;
  const Quiver& q = alg.quiver();
  int w = -1;
  for (size_t i = 0; i < pres.cover.basis_ids.size(); ++i)
    if (alg.basis_path(pres.cover.basis_ids[i]).length() == 0)
      w = alg.basis_path(pres.cover.basis_ids[i]).src;
  if (w < 0) throw std::logic_error("projective cover lost its idempotent");

  // flatten hom(kernel,x) into vectors for rank computations
  int nflat = 0;
  std::vector<int> offset(x.dims.size(), 0);
  for (size_t v = 0; v < x.dims.size(); ++v) {
    offset[v] = nflat;
    nflat += pres.kernel_rep.dims[v] * x.dims[v];
  }
  auto flatten = [&](const Hom<K>& h) {
    std::vector<K> out(nflat, K(0));
    for (size_t v = 0; v < x.dims.size(); ++v)
      for (int i = 0; i < pres.kernel_rep.dims[v]; ++i)
        for (int j = 0; j < x.dims[v]; ++j)
          out[offset[v] + i * x.dims[v] + j] = h[v].at(i, j);
    return out;
  };

  // path action matrices on X, computed per algebra basis path from w
  auto act_along = [&](const std::vector<int>& arrows) {
    Mat<K> m = Mat<K>::identity(x.dims[w]);
    int cur = w;
    for (int a : arrows) {
      m = m * x.act[a];
      cur = q.arrows[a].tgt;
    }
    return m;  // x.dims[w] x x.dims[cur]
  };

  // restriction images: for each basis vector m of X_w, the hom
  // K -> X, sum_b k_b * (m . path_b)
  std::vector<std::vector<K>> restric;
  for (int mi = 0; mi < x.dims[w]; ++mi) {
    Hom<K> h(x.dims.size());
    for (size_t v = 0; v < x.dims.size(); ++v)
      h[v] = Mat<K>(pres.kernel_rep.dims[v], x.dims[v]);
    for (size_t v = 0; v < x.dims.size(); ++v) {
      const Mat<K>& kb = pres.kernel.spaces[v].basis();  // rows in P(w)_v coords
      for (int r = 0; r < kb.rows(); ++r) {
        // kernel basis row r at vertex v, coordinates over projective columns
        std::vector<K> img(x.dims[v], K(0));
        for (size_t bi = 0; bi < pres.cover.basis_ids.size(); ++bi) {
          auto [bv, bcol] = pres.cover.coords[bi];
          if (bv != static_cast<int>(v)) continue;
          const K& coeff = kb.at(r, bcol);
          if (coeff.is_zero()) continue;
          Mat<K> pa = act_along(alg.basis_path(pres.cover.basis_ids[bi]).arrows);
          for (int j = 0; j < x.dims[v]; ++j) img[j] += coeff * pa.at(mi, j);
        }
        h[v].set_row(r, img);
      }
    }
    restric.push_back(flatten(h));
  }

  // complement of the restriction image inside Hom(K,X)
  Subspace<K> image(nflat);
  for (auto& r : restric) image.insert(r);
  std::vector<Hom<K>> cocycles;
  Subspace<K> seen = image;
  for (const Hom<K>& h : homs_kx) {
    std::vector<K> f = flatten(h);
    if (seen.insert(f)) cocycles.push_back(h);
  }
  return cocycles;
}

// universal extension 0 -> X -> E -> Delta(w)^d -> 0 along the given cocycles
template <class K>
Rep<K> universal_extension(const DeltaPresentation<K>& pres, const Rep<K>& x,
                           const std::vector<Hom<K>>& cocycles) {
  const size_t nv = x.dims.size();
  const int d = static_cast<int>(cocycles.size());
  Rep<K> big;
  big.alg = x.alg;
  big.dims.assign(nv, 0);
  std::vector<int> xofs(nv), pofs(nv);
  for (size_t v = 0; v < nv; ++v) {
    xofs[v] = 0;
    pofs[v] = x.dims[v];
    big.dims[v] = x.dims[v] + d * pres.cover.rep.dims[v];
  }
  big.act.assign(x.act.size(), {});
  for (size_t a = 0; a < x.act.size(); ++a) {
    int s = x.quiver().arrows[a].src, t = x.quiver().arrows[a].tgt;
    Mat<K> m(big.dims[s], big.dims[t]);
    for (int i = 0; i < x.dims[s]; ++i)
      for (int j = 0; j < x.dims[t]; ++j) m.at(i, j) = x.act[a].at(i, j);
    for (int copy = 0; copy < d; ++copy) {
      int so = pofs[s] + copy * pres.cover.rep.dims[s];
      int to = pofs[t] + copy * pres.cover.rep.dims[t];
      for (int i = 0; i < pres.cover.rep.dims[s]; ++i)
        for (int j = 0; j < pres.cover.rep.dims[t]; ++j)
          m.at(so + i, to + j) = pres.cover.rep.act[a].at(i, j);
    }
    big.act[a] = std::move(m);
  }
  // quotient by (f_i(k), 0, ..., -k in slot i, ..., 0)
  SubModule<K> u = empty_submodule(big);
  for (int copy = 0; copy < d; ++copy) {
    for (size_t v = 0; v < nv; ++v) {
      const Mat<K>& kb = pres.kernel.spaces[v].basis();
      for (int r = 0; r < kb.rows(); ++r) {
        std::vector<K> vec(big.dims[v], K(0));
        for (int j = 0; j < x.dims[v]; ++j) vec[j] = cocycles[copy][v].at(r, j);
        int po = pofs[v] + copy * pres.cover.rep.dims[v];
        for (int j = 0; j < pres.cover.rep.dims[v]; ++j) vec[po + j] -= kb.at(r, j);
        u.spaces[v].insert(vec);
      }
    }
  }
  spin_up(big, u);
  return quotient(big, u).rep;
}

template <class K>
struct TiltingResult {
  Rep<K> rep;
  std::map<int, int> delta_factors;  // vertex -> multiplicity
};

template <class K>
TiltingResult<K> build_tilting(const Algebra<K>& alg, const std::vector<int>& order, int v,
                               int max_passes = 16) {
  TiltingResult<K> out;
  out.rep = delta_module(alg, order, v);
  out.delta_factors[v] = 1;
  std::map<int, DeltaPresentation<K>> pres;
  for (int w : order) pres.emplace(w, delta_presentation(alg, order, w));
  for (int pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::vector<Hom<K>> cocycles = ext1_cocycles(pres.at(*it), out.rep);
      if (cocycles.empty()) continue;
      out.rep = universal_extension(pres.at(*it), out.rep, cocycles);
      out.delta_factors[*it] += static_cast<int>(cocycles.size());
      changed = true;
    }
    if (!changed) return out;
  }
  throw NonConvergence("universal-extension iteration did not stabilize");
}

}  // namespace sl3::pathalg
