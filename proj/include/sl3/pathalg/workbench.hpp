#pragma once

// Built-in presentations (the quasi-hereditary algebra behind T(4,3) and its
// variants), the four-subspace analysis of T(43), and DOT export of
// coefficient quivers.

#include <set>

#include "sl3/pathalg/rep.hpp"

namespace sl3::pathalg {

// Quiver on vertices 10, 05, 51, 43 with arrows
//   alpha: 10->05, alpha': 05->10, beta: 10->51, beta': 51->10,
//   gamma: 10->43, gamma': 43->10.
inline Quiver appendix_quiver() {
  Quiver q;
  q.vertices = {"10", "05", "51", "43"};
  q.arrows = {
      {"alpha", 0, 1}, {"alpha'", 1, 0}, {"beta", 0, 2},
      {"beta'", 2, 0}, {"gamma", 0, 3},  {"gamma'", 3, 0},
  };
  return q;
}

namespace detail {

inline Relation monomial(const Quiver& q, std::initializer_list<const char*> arrows) {
  Relation r;
  Relation::Term t;
  for (const char* a : arrows) t.arrows.push_back(q.arrow_index(a));
  r.terms.push_back(std::move(t));
  return r;
}

inline Relation::Term term(const Quiver& q, long long c,
                           std::initializer_list<const char*> arrows) {
  Relation::Term t;
  t.coeff = c;
  for (const char* a : arrows) t.arrows.push_back(q.arrow_index(a));
  return t;
}

}  // namespace detail

// A(10,05,51,43):
//   a'a = 0, a'b = 0, b'a = 0, b'(1 - gg')b = 0,
//   g'g = 0, g'(aa' - bb') = 0, (aa' - bb')g = 0, g'aa'g = 0.
inline Presentation presentation_A() {
  Presentation p;
  p.quiver = appendix_quiver();
  const Quiver& q = p.quiver;
  p.relations.push_back(detail::monomial(q, {"alpha'", "alpha"}));
  p.relations.push_back(detail::monomial(q, {"alpha'", "beta"}));
  p.relations.push_back(detail::monomial(q, {"beta'", "alpha"}));
  {
    Relation r;
    r.terms.push_back(detail::term(q, 1, {"beta'", "beta"}));
    r.terms.push_back(detail::term(q, -1, {"beta'", "gamma", "gamma'", "beta"}));
    p.relations.push_back(std::move(r));
  }
  p.relations.push_back(detail::monomial(q, {"gamma'", "gamma"}));
  {
    Relation r;
    r.terms.push_back(detail::term(q, 1, {"gamma'", "alpha", "alpha'"}));
    r.terms.push_back(detail::term(q, -1, {"gamma'", "beta", "beta'"}));
    p.relations.push_back(std::move(r));
  }
  {
    Relation r;
    r.terms.push_back(detail::term(q, 1, {"alpha", "alpha'", "gamma"}));
    r.terms.push_back(detail::term(q, -1, {"beta", "beta'", "gamma"}));
    p.relations.push_back(std::move(r));
  }
  p.relations.push_back(detail::monomial(q, {"gamma'", "alpha", "alpha'", "gamma"}));
  return p;
}

// The variant with b'b = 0 instead of b'(1-gg')b = 0.
inline Presentation presentation_Aprime() {
  Presentation p = presentation_A();
  Relation r = detail::monomial(p.quiver, {"beta'", "beta"});
  p.relations[3] = std::move(r);
  return p;
}

// B = A(10,05,51): the full subquiver on 10, 05, 51 with
// a'a = a'b = b'a = b'b = 0.
inline Presentation presentation_B() {
  Presentation p;
  p.quiver.vertices = {"10", "05", "51"};
  p.quiver.arrows = {
      {"alpha", 0, 1}, {"alpha'", 1, 0}, {"beta", 0, 2}, {"beta'", 2, 0}};
  const Quiver& q = p.quiver;
  p.relations.push_back(detail::monomial(q, {"alpha'", "alpha"}));
  p.relations.push_back(detail::monomial(q, {"alpha'", "beta"}));
  p.relations.push_back(detail::monomial(q, {"beta'", "alpha"}));
  p.relations.push_back(detail::monomial(q, {"beta'", "beta"}));
  return p;
}

inline Presentation named_presentation(const std::string& name) {
  if (name == "A-appendix") return presentation_A();
  if (name == "A-prime") return presentation_Aprime();
  if (name == "B-subalgebra") return presentation_B();
  throw std::invalid_argument("unknown presentation " + name);
}

// quasi-hereditary order 10 < 05 < 51 < 43 (a linear extension of the poset)
inline std::vector<int> appendix_order(const Quiver& q) {
  std::vector<int> order;
  for (const char* v : {"10", "05", "51", "43"}) {
    for (size_t i = 0; i < q.vertices.size(); ++i)
      if (q.vertices[i] == v) order.push_back(static_cast<int>(i));
  }
  return order;
}

// T(43) realized as P(10)/gamma*A
template <class K>
Rep<K> t43_quotient_model(const Algebra<K>& alg) {
  ProjectiveModule<K> p10 = projective(alg, alg.quiver().vertex_index("10"));
  Path gamma;
  gamma.src = alg.quiver().vertex_index("10");
  gamma.tgt = alg.quiver().vertex_index("43");
  gamma.arrows = {alg.quiver().arrow_index("gamma")};
  auto id = alg.basis_index(gamma);
  if (!id) throw std::logic_error("gamma vanished in the algebra");
  return quotient_by_elements(p10.rep, {p10.unit(*id)});
}

// -------------------------------------------------------------------------
// Four-subspace analysis of T(43): V is the vertex-10 component of
// rad/soc, carrying U1 = Im a' + Im gg', U2 = Im b' + Im gg',
// U3 = Ker a n Ker gg', U4 = Ker b n Ker gg'.

struct FourSubspaceReport {
  int dim_v = 0;
  int dim_u1 = 0, dim_u2 = 0, dim_u3 = 0, dim_u4 = 0;
  int dim_u1_cap_u2 = 0, dim_u3_plus_u4 = 0;
  bool u1_cap_u2_is_im_gamma = false;
  bool u3_plus_u4_is_ker_gamma = false;
  bool im_gamma_inside_ker_gamma = false;
  bool all_distinct = false;
};

template <class K>
FourSubspaceReport four_subspace_report(const Rep<K>& t43) {
  const Quiver& q = t43.quiver();
  const int v10 = q.vertex_index("10");
  const int v05 = q.vertex_index("05");
  const int v51 = q.vertex_index("51");

  auto rad = radical_submodule(t43, full_submodule(t43));
  auto soc = socle_above(t43, empty_submodule(t43));

  // the subquotient rad/soc with its induced arrow actions
  Rep<K> sub;  // rad as a standalone rep
  sub.alg = t43.alg;
  sub.dims.assign(t43.dims.size(), 0);
  for (size_t v = 0; v < t43.dims.size(); ++v) sub.dims[v] = rad.spaces[v].dim();
  sub.act.assign(t43.act.size(), {});
  for (size_t a = 0; a < t43.act.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    Mat<K> m(sub.dims[s], sub.dims[t]);
    const Mat<K>& sb = rad.spaces[s].basis();
    const Mat<K>& tb = rad.spaces[t].basis();
    for (int i = 0; i < sb.rows(); ++i) {
      std::vector<K> img = sb.row(i) * t43.act[a];
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
      m.set_row(i, coords);
    }
    sub.act[a] = std::move(m);
  }
  // socle inside rad coordinates
  SubModule<K> soc_in_sub = empty_submodule(sub);
  for (size_t v = 0; v < t43.dims.size(); ++v) {
    const Mat<K>& sb = soc.spaces[v].basis();
    const Mat<K>& rb = rad.spaces[v].basis();
    for (int i = 0; i < sb.rows(); ++i) {
      std::vector<K> img = sb.row(i);
      std::vector<K> coords(rb.rows(), K(0));
      for (int r = 0; r < rb.rows(); ++r) {
        int piv = -1;
        for (int j = 0; j < rb.cols(); ++j)
          if (!rb.at(r, j).is_zero()) {
            piv = j;
            break;
          }
        coords[r] = img[piv];
        for (int j = 0; j < rb.cols(); ++j) img[j] -= coords[r] * rb.at(r, j);
      }
      soc_in_sub.spaces[v].insert(coords);
    }
  }
  QuotientResult<K> w = quotient(sub, soc_in_sub);

  const Mat<K>& act_a = w.rep.act[q.arrow_index("alpha")];
  const Mat<K>& act_ap = w.rep.act[q.arrow_index("alpha'")];
  const Mat<K>& act_b = w.rep.act[q.arrow_index("beta")];
  const Mat<K>& act_bp = w.rep.act[q.arrow_index("beta'")];
  Mat<K> gbar = w.rep.act[q.arrow_index("gamma")] * w.rep.act[q.arrow_index("gamma'")];

  const int n = w.rep.dims[v10];
  auto row_space = [&](const Mat<K>& m) {
    Subspace<K> s(n);
    for (int i = 0; i < m.rows(); ++i) s.insert(m.row(i));
    return s;
  };
  Subspace<K> im_gamma = row_space(gbar);
  Subspace<K> u1 = row_space(act_ap) + im_gamma;
  Subspace<K> u2 = row_space(act_bp) + im_gamma;

  auto kernel_of = [&](const Mat<K>& m) {
    Subspace<K> s(n);
    s.insert_all(left_null_space(m));
    return s;
  };
  Subspace<K> ker_gamma = kernel_of(gbar);
  Subspace<K> u3 = intersect(kernel_of(act_a), ker_gamma);
  Subspace<K> u4 = intersect(kernel_of(act_b), ker_gamma);

  FourSubspaceReport r;
  r.dim_v = n;
  r.dim_u1 = u1.dim();
  r.dim_u2 = u2.dim();
  r.dim_u3 = u3.dim();
  r.dim_u4 = u4.dim();
  Subspace<K> cap = intersect(u1, u2);
  Subspace<K> sum = u3 + u4;
  r.dim_u1_cap_u2 = cap.dim();
  r.dim_u3_plus_u4 = sum.dim();
  r.u1_cap_u2_is_im_gamma = cap == im_gamma;
  r.u3_plus_u4_is_ker_gamma = sum == ker_gamma;
  r.im_gamma_inside_ker_gamma = (im_gamma + ker_gamma) == ker_gamma;
  r.all_distinct = !(u1 == u2) && !(u3 == u4) && !(u1 == u3) && !(u1 == u4) &&
                   !(u2 == u3) && !(u2 == u4);
  return r;
}

// -------------------------------------------------------------------------
// Coefficient quivers in DOT form, with a basis adapted to the radical
// filtration (unit pivots preferred via RREF).

template <class K>
std::string coefficient_quiver_dot(const Rep<K>& m, const std::string& name) {
  auto chain = radical_series(m);
  const size_t nv = m.dims.size();
  // adapted basis per vertex: layer by layer from the deepest up
  std::vector<Mat<K>> basis(nv);     // rows = new basis, deepest rows last
  std::vector<std::vector<int>> layer_of(nv);
  for (size_t v = 0; v < nv; ++v) {
    Subspace<K> seen(m.dims[v]);
    std::vector<std::vector<K>> rows;
    std::vector<int> layers;
    for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i) {
      const Mat<K>& cur = chain[i].spaces[v].basis();
      for (int r = 0; r < cur.rows(); ++r) {
        std::vector<K> vec = cur.row(r);
        seen.reduce(vec);
        int lead = -1;
        for (size_t j = 0; j < vec.size(); ++j)
          if (!vec[j].is_zero()) {
            lead = static_cast<int>(j);
            break;
          }
        if (lead < 0) continue;
        K inv = K(1) / vec[lead];
        for (K& x : vec) x *= inv;
        rows.push_back(vec);
        layers.push_back(i);
        seen.insert(vec);
      }
    }
    basis[v] = Mat<K>(static_cast<int>(rows.size()), m.dims[v]);
    for (size_t r = 0; r < rows.size(); ++r) basis[v].set_row(static_cast<int>(r), rows[r]);
    layer_of[v] = std::move(layers);
  }

  // node order: by layer, then vertex, then row
  struct Node {
    int layer, vertex, row;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<int>> node_id(nv);
  for (size_t v = 0; v < nv; ++v) node_id[v].assign(basis[v].rows(), -1);
  for (size_t layer = 0; layer + 1 < chain.size(); ++layer)
    for (size_t v = 0; v < nv; ++v)
      for (int r = 0; r < basis[v].rows(); ++r)
        if (layer_of[v][r] == static_cast<int>(layer)) {
          node_id[v][r] = static_cast<int>(nodes.size());
          nodes.push_back({static_cast<int>(layer), static_cast<int>(v), r});
        }

  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=TB;\n  node [shape=plaintext];\n";
  for (size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << m.quiver().vertices[nodes[i].vertex] << "\"];\n";
  // same-rank groups per layer
  for (size_t layer = 0; layer + 1 < chain.size(); ++layer) {
    os << "  { rank=same;";
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].layer == static_cast<int>(layer)) os << " n" << i << ";";
    os << " }\n";
  }
  int edges = 0;
  for (size_t a = 0; a < m.act.size(); ++a) {
    int s = m.quiver().arrows[a].src, t = m.quiver().arrows[a].tgt;
    if (basis[s].rows() == 0 || basis[t].rows() == 0) continue;
    // change of basis: rows act through the original matrices
    for (int i = 0; i < basis[s].rows(); ++i) {
      std::vector<K> img = basis[s].row(i) * m.act[a];
      // coordinates over basis[t] (solve by reduction; basis rows are
      // echelonized within layers, so peel from the deepest layers up)
      std::vector<K> coords(basis[t].rows(), K(0));
      // gaussian solve against basis[t]
      Mat<K> sys(basis[t].rows() + 1, m.dims[t]);
      for (int r = 0; r < basis[t].rows(); ++r) sys.set_row(r, basis[t].row(r));
      sys.set_row(basis[t].rows(), img);
      Mat<K> ker = left_null_space(sys);
      // find kernel row with nonzero last coordinate
      for (int r = 0; r < ker.rows(); ++r)
        if (!ker.at(r, basis[t].rows()).is_zero()) {
          K inv = -(K(1) / ker.at(r, basis[t].rows()));
          for (int c = 0; c < basis[t].rows(); ++c) coords[c] = ker.at(r, c) * inv;
          break;
        }
      for (int c = 0; c < basis[t].rows(); ++c)
        if (!coords[c].is_zero()) {
          os << "  n" << node_id[s][i] << " -> n" << node_id[t][c] << " [label=\""
             << m.quiver().arrows[a].name << "\"];\n";
          ++edges;
        }
    }
  }
  os << "  // " << nodes.size() << " nodes, " << edges << " edges\n";
  os << "}\n";
  return os.str();
}

inline int dot_edge_count(const std::string& dot) {
  int n = 0;
  size_t pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++n;
    ++pos;
  }
  return n;
}

inline int dot_node_count(const std::string& dot) {
  int labels = 0;
  size_t pos = 0;
  while ((pos = dot.find("[label=", pos)) != std::string::npos) {
    ++labels;
    ++pos;
  }
  return labels - dot_edge_count(dot);
}

}  // namespace sl3::pathalg
