#pragma once

// Path algebras with relations over an exact field: basis computation by
// increasing path length with exact row reduction, multiplication table,
// and nilpotency detection.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sl3/pathalg/field.hpp"
#include "sl3/pathalg/linalg.hpp"

namespace sl3::pathalg {

struct NonTerminating : std::runtime_error {
  explicit NonTerminating(int bound)
      : std::runtime_error("no zero path stratum up to length " + std::to_string(bound) +
                           "; the quotient looks infinite-dimensional") {}
};

struct PresentationNotSelfDual : std::runtime_error {
  explicit PresentationNotSelfDual(const std::string& what) : std::runtime_error(what) {}
};

struct Quiver {
  struct Arrow {
    std::string name;
    int src = 0, tgt = 0;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex " + name);
  }
  int arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown arrow " + name);
  }
};

// integer-coefficient linear combination of directed paths, homogeneous in
// (source, target)
struct Relation {
  struct Term {
    long long coeff = 1;
    std::vector<int> arrows;  // indices into quiver.arrows, in path order
  };
  std::vector<Term> terms;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;

  void validate() const {
    for (const Relation& r : relations) {
      if (r.terms.empty()) throw std::invalid_argument("empty relation");
      auto ends = [&](const Relation::Term& t) {
        if (t.arrows.empty()) throw std::invalid_argument("length-0 relation term");
        int s = quiver.arrows[t.arrows.front()].src;
        int e = quiver.arrows[t.arrows.front()].tgt;
        for (size_t i = 1; i < t.arrows.size(); ++i) {
          if (quiver.arrows[t.arrows[i]].src != e)
            throw std::invalid_argument("non-composable path in relation");
          e = quiver.arrows[t.arrows[i]].tgt;
        }
        return std::make_pair(s, e);
      };
      auto [s0, e0] = ends(r.terms.front());
      for (const auto& t : r.terms)
        if (ends(t) != std::make_pair(s0, e0))
          throw std::invalid_argument("relation is not (source,target)-homogeneous");
    }
  }
};

struct Path {
  int src = 0, tgt = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Path&, const Path&) = default;
};

template <class K>
class Algebra {
 public:
  // sparse element in the path basis of the quotient
  using Element = std::map<int, K>;  // basis index -> coefficient

  static Algebra build(const Presentation& pres, int length_bound = 12) {
    pres.validate();
    Algebra a = build_once(pres, length_bound);
    // multiplying two basis elements needs paths up to twice the top length
    if (2 * (a.nilpotency_ - 1) > length_bound)
      a = build_once(pres, 2 * (a.nilpotency_ - 1));
    return a;
  }

  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int nilpotency_degree() const { return nilpotency_; }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int i) const { return basis_[i]; }

  std::vector<int> stratum_sizes() const {
    std::vector<int> out(nilpotency_, 0);
    for (const Path& p : basis_) ++out[p.length()];
    return out;
  }

  // basis indices of paths starting at v, grouped order as stored
  std::vector<int> projective_basis(int v) const {
    std::vector<int> out;
    for (size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].src == v) out.push_back(static_cast<int>(i));
    return out;
  }

  std::optional<int> basis_index(const Path& p) const {
    auto it = path_ids_.find(std::make_pair(p.src, key_of(p.src, p.arrows)));
    if (it == path_ids_.end()) return std::nullopt;
    auto jt = basis_pos_.find(it->second);
    if (jt == basis_pos_.end()) return std::nullopt;
    return jt->second;
  }

  // normal form of (basis element i) * (arrow a); zero map when not composable
  const std::vector<std::pair<int, K>>& right_action(int i, int a) const {
    return action_[static_cast<size_t>(i) * quiver().arrows.size() + a];
  }

  Element multiply(int i, int j) const {
    const Path& x = basis_[i];
    const Path& y = basis_[j];
    Element acc;
    if (x.tgt != y.src) return acc;
    acc.emplace(i, K(1));
    for (int a : y.arrows) {
      Element next;
      for (auto& [bi, c] : acc)
        for (auto& [bj, c2] : right_action(bi, a)) {
          auto [it, fresh] = next.emplace(bj, c * c2);
          if (!fresh) it->second += c * c2;
        }
      for (auto it = next.begin(); it != next.end();)
        it = it->second.is_zero() ? next.erase(it) : std::next(it);
      acc = std::move(next);
    }
    return acc;
  }

  // evaluates an integer path combination in the quotient
  Element evaluate(const Relation& r) const {
    Element acc;
    for (const Relation::Term& t : r.terms) {
      int src = quiver().arrows[t.arrows.front()].src;
      Element cur;
      int e_idx = idempotent_index(src);
      cur.emplace(e_idx, K(t.coeff));
      for (int a : t.arrows) {
        Element next;
        for (auto& [bi, c] : cur)
          for (auto& [bj, c2] : right_action(bi, a)) {
            auto [it, fresh] = next.emplace(bj, c * c2);
            if (!fresh) it->second += c * c2;
          }
        for (auto it = next.begin(); it != next.end();)
          it = it->second.is_zero() ? next.erase(it) : std::next(it);
        cur = std::move(next);
      }
      for (auto& [bi, c] : cur) {
        auto [it, fresh] = acc.emplace(bi, c);
        if (!fresh) it->second += c;
      }
    }
    for (auto it = acc.begin(); it != acc.end();)
      it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
  }

  int idempotent_index(int v) const {
    for (size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].length() == 0 && basis_[i].src == v) return static_cast<int>(i);
    throw std::logic_error("missing idempotent");
  }

  // The dash-swap anti-automorphism: each arrow must have a unique reverse
  // arrow; a path maps to the reversed partner path.  Returns the partner
  // arrow table and checks the relations are preserved.
  std::vector<int> dual_partner_map() const {
    const auto& arrows = quiver().arrows;
    std::vector<int> partner(arrows.size(), -1);
    for (size_t i = 0; i < arrows.size(); ++i) {
      for (size_t j = 0; j < arrows.size(); ++j)
        if (arrows[j].src == arrows[i].tgt && arrows[j].tgt == arrows[i].src) {
          if (partner[i] != -1)
            throw PresentationNotSelfDual("multiple reverse arrows for " + arrows[i].name);
          partner[i] = static_cast<int>(j);
        }
      if (partner[i] == -1)
        throw PresentationNotSelfDual("arrow " + arrows[i].name + " has no reverse arrow");
    }
    for (const Relation& r : pres_.relations) {
      Relation tau;
      for (const Relation::Term& t : r.terms) {
        Relation::Term tt;
        tt.coeff = t.coeff;
        for (auto it = t.arrows.rbegin(); it != t.arrows.rend(); ++it)
          tt.arrows.push_back(partner[*it]);
        tau.terms.push_back(std::move(tt));
      }
      if (!evaluate(tau).empty())
        throw PresentationNotSelfDual("relations are not stable under reverse-and-swap");
    }
    return partner;
  }

 private:
  static Algebra build_once(const Presentation& pres, int length_bound) {
    Algebra a;
    a.pres_ = pres;
    a.enumerate_paths(length_bound);
    a.reduce_ideal(length_bound);
    a.finish(length_bound);
    return a;
  }

  Presentation pres_;
  std::vector<Path> basis_;
  std::map<int, int> basis_pos_;  // path id -> basis index
  int nilpotency_ = 0;

  // path enumeration over the truncated algebra
  struct Stored {
    Path path;
    int id;
  };
  std::vector<Path> all_paths_;                       // id -> path
  std::map<std::pair<int, long long>, int> path_ids_; // (src, arrowkey) -> id
  std::vector<std::vector<std::pair<int, K>>> action_;

  // echelon rows of the truncated ideal: leading id -> sparse row
  std::map<int, std::map<int, K>> pivot_rows_;
  std::map<int, std::map<int, K>> normal_forms_;  // memo: pivot id -> nf over non-pivots

  static long long key_of(int src, const std::vector<int>& arrows) {
    // arrows per vertex are < 64 here; a simple polynomial key over a base
    long long k = src + 1;
    for (int a : arrows) k = k * 64 + (a + 1);
    return k;
  }

  void enumerate_paths(int bound) {
    const auto& q = pres_.quiver;
    for (size_t v = 0; v < q.vertices.size(); ++v) {
      Path p;
      p.src = p.tgt = static_cast<int>(v);
      register_path(p);
    }
    size_t level_begin = 0;
    for (int len = 1; len <= bound; ++len) {
      size_t level_end = all_paths_.size();
      for (size_t i = level_begin; i < level_end; ++i)
        for (size_t a = 0; a < q.arrows.size(); ++a)
          if (q.arrows[a].src == all_paths_[i].tgt) {
            Path p = all_paths_[i];
            p.arrows.push_back(static_cast<int>(a));
            p.tgt = q.arrows[a].tgt;
            register_path(p);
          }
      level_begin = level_end;
    }
  }

  void register_path(const Path& p) {
    int id = static_cast<int>(all_paths_.size());
    all_paths_.push_back(p);
    path_ids_.emplace(std::make_pair(p.src, key_of(p.src, p.arrows)), id);
  }

  // order: longer paths are larger; ties by id
  bool id_less(int x, int y) const {
    int lx = all_paths_[x].length(), ly = all_paths_[y].length();
    if (lx != ly) return lx < ly;
    return x < y;
  }

  int leading(const std::map<int, K>& row) const {
    int best = -1;
    for (auto& [id, c] : row)
      if (best < 0 || id_less(best, id)) best = id;
    return best;
  }

  void echelon_insert(std::map<int, K> row) {
    while (true) {
      for (auto it = row.begin(); it != row.end();)
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
      if (row.empty()) return;
      int lead = leading(row);
      auto pit = pivot_rows_.find(lead);
      if (pit == pivot_rows_.end()) {
        K inv = K(1) / row.at(lead);
        for (auto& [id, c] : row) c *= inv;
        pivot_rows_.emplace(lead, std::move(row));
        return;
      }
      K f = row.at(lead);
      for (auto& [id, c] : pit->second) {
        auto [it, fresh] = row.emplace(id, -(f * c));
        if (!fresh) it->second -= f * c;
      }
    }
  }

  void reduce_ideal(int bound) {
    const auto& q = pres_.quiver;
    // group path ids: by end vertex and by start vertex, with lengths
    std::vector<std::vector<int>> ends_at(q.vertices.size()), starts_at(q.vertices.size());
    for (size_t i = 0; i < all_paths_.size(); ++i) {
      ends_at[all_paths_[i].tgt].push_back(static_cast<int>(i));
      starts_at[all_paths_[i].src].push_back(static_cast<int>(i));
    }
    for (const Relation& r : pres_.relations) {
      int rs = q.arrows[r.terms.front().arrows.front()].src;
      int rt = q.arrows[r.terms.front().arrows.back()].tgt;
      int rmin = bound + 1;
      for (const auto& t : r.terms) rmin = std::min<int>(rmin, static_cast<int>(t.arrows.size()));
      for (int u : ends_at[rs])
        for (int v : starts_at[rt]) {
          const Path& pu = all_paths_[u];
          const Path& pv = all_paths_[v];
          if (pu.length() + rmin + pv.length() > bound) continue;
          std::map<int, K> row;
          for (const auto& t : r.terms) {
            if (pu.length() + static_cast<int>(t.arrows.size()) + pv.length() > bound)
              continue;  // truncated component
            std::vector<int> arrows = pu.arrows;
            arrows.insert(arrows.end(), t.arrows.begin(), t.arrows.end());
            arrows.insert(arrows.end(), pv.arrows.begin(), pv.arrows.end());
            int id = path_ids_.at(std::make_pair(pu.src, key_of(pu.src, arrows)));
            auto [it, fresh] = row.emplace(id, K(t.coeff));
            if (!fresh) it->second += K(t.coeff);
          }
          if (row.size() == 1) {
            // tail-free pivots make re-inserting the same monomial a no-op
            auto pit = pivot_rows_.find(row.begin()->first);
            if (pit != pivot_rows_.end() && pit->second.size() == 1) continue;
          }
          echelon_insert(std::move(row));
        }
    }
  }

  const std::map<int, K>& normal_form(int pivot_id) {
    auto memo = normal_forms_.find(pivot_id);
    if (memo != normal_forms_.end()) return memo->second;
    std::map<int, K> nf;
    for (auto& [id, c] : pivot_rows_.at(pivot_id)) {
      if (id == pivot_id) continue;
      if (pivot_rows_.count(id)) {
        for (auto& [id2, c2] : normal_form(id)) {
          auto [it, fresh] = nf.emplace(id2, -(c * c2));
          if (!fresh) it->second -= c * c2;
        }
      } else {
        auto [it, fresh] = nf.emplace(id, -c);
        if (!fresh) it->second -= c;
      }
    }
    for (auto it = nf.begin(); it != nf.end();)
      it = it->second.is_zero() ? nf.erase(it) : std::next(it);
    return normal_forms_.emplace(pivot_id, std::move(nf)).first->second;
  }

  void finish(int bound) {
    // strata of surviving (non-pivot) paths
    std::vector<int> survivors(bound + 1, 0);
    for (size_t i = 0; i < all_paths_.size(); ++i)
      if (!pivot_rows_.count(static_cast<int>(i))) ++survivors[all_paths_[i].length()];
    int first_zero = -1;
    for (int len = 0; len <= bound; ++len)
      if (survivors[len] == 0) {
        first_zero = len;
        break;
      }
    if (first_zero < 0) throw NonTerminating(bound);
    nilpotency_ = first_zero;
    for (int len = first_zero; len <= bound; ++len)
      if (survivors[len] != 0)
        throw std::logic_error("non-contiguous path strata; ideal reduction failed");

    for (size_t i = 0; i < all_paths_.size(); ++i) {
      if (pivot_rows_.count(static_cast<int>(i))) continue;
      if (all_paths_[i].length() >= nilpotency_) continue;
      basis_pos_.emplace(static_cast<int>(i), static_cast<int>(basis_.size()));
      basis_.push_back(all_paths_[i]);
    }

    // right action of each arrow on each basis element
    const auto& q = pres_.quiver;
    action_.assign(basis_.size() * q.arrows.size(), {});
    for (size_t i = 0; i < basis_.size(); ++i) {
      const Path& p = basis_[i];
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != p.tgt) continue;
        std::vector<int> arrows = p.arrows;
        arrows.push_back(static_cast<int>(a));
        int id = path_ids_.at(std::make_pair(p.src, key_of(p.src, arrows)));
        std::vector<std::pair<int, K>>& out = action_[i * q.arrows.size() + a];
        if (pivot_rows_.count(id)) {
          for (auto& [id2, c] : normal_form(id)) {
            auto pos = basis_pos_.find(id2);
            if (pos != basis_pos_.end()) out.push_back({pos->second, c});
          }
        } else {
          auto pos = basis_pos_.find(id);
          if (pos != basis_pos_.end()) out.push_back({pos->second, K(1)});
        }
      }
    }
  }
};

}  // namespace sl3::pathalg
