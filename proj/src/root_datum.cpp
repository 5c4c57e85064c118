#include "strata/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "strata/errors.hpp"

namespace strata {

namespace {

constexpr size_t kRootCap = 5000;
constexpr size_t kWeylCap = 200000;

IMat int_inverse_transpose(const IMat& m) {
  // solve m^T * x_j = e_j over Q, demand integrality
  size_t d = m.size();
  IMat mt = transpose(m);
  std::vector<QVec> cols(d, QVec(d, 0));
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < d; ++i) cols[j][i] = mt[i][j];
  IMat inv(d, IVec(d, 0));
  for (size_t j = 0; j < d; ++j) {
    QVec rhs(d, 0);
    rhs[j] = 1;
    auto sol = solve_columns(cols, rhs);
    if (!sol.ok) throw InvalidDatum("delta matrix is not invertible");
    for (size_t i = 0; i < d; ++i) {
      if (sol.x[i].get_den() != 1)
        throw InvalidDatum("delta matrix is not unimodular");
      inv[i][j] = sol.x[i].get_num().get_si();
    }
  }
  return inv;
}

}  // namespace

bool WeylElt::is_identity() const {
  for (size_t i = 0; i < coch.size(); ++i)
    for (size_t j = 0; j < coch.size(); ++j)
      if (coch[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

IVec WeylElt::inv_act_char(const IVec& a) const {
  // (v^{-1})_chr = coch^T
  IVec r(a.size(), 0);
  for (size_t i = 0; i < coch.size(); ++i)
    for (size_t j = 0; j < coch.size(); ++j) r[i] += coch[j][i] * a[j];
  return r;
}

WeylElt weyl_identity(int d) {
  return {identity_mat(d), identity_mat(d)};
}

WeylElt weyl_mul(const WeylElt& a, const WeylElt& b) {
  return {matmul(a.coch, b.coch), matmul(a.chr, b.chr)};
}

WeylElt weyl_inverse(const WeylElt& a) {
  return {transpose(a.chr), transpose(a.coch)};
}

WeylElt reflection(int d, const IVec& alpha, const IVec& coalpha) {
  WeylElt s = weyl_identity(d);
  // coch: x -> x - <alpha, x> coalpha ; chr: a -> a - <a, coalpha> alpha
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      s.coch[i][j] -= coalpha[i] * alpha[j];
      s.chr[i][j] -= alpha[i] * coalpha[j];
    }
  return s;
}

std::shared_ptr<const RootDatum> RootDatum::build(const Spec& spec) {
  auto rd = std::shared_ptr<RootDatum>(new RootDatum());
  rd->name_ = spec.name;
  rd->d_ = spec.ambient_rank;
  rd->simple_roots_ = spec.simple_roots;
  rd->simple_coroots_ = spec.simple_coroots;
  rd->cochar_basis_ = spec.cochar_basis;
  rd->delta_perm_ = spec.delta_perm;
  rd->delta_coch_ = spec.delta_matrix;
  rd->validate_and_finish();
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::builtin(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos)
    throw InvalidDatum("unknown group spec: " + name);
  std::string kind = name.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(name.substr(colon + 1));
  } catch (...) {
    throw InvalidDatum("bad rank in group spec: " + name);
  }
  Spec s;
  s.name = name;
  if (kind == "GL" || kind == "SL") {
    if (n < 1) throw InvalidDatum("rank must be >= 1");
    s.ambient_rank = n;
    for (int i = 0; i + 1 < n; ++i) {
      IVec a(n, 0);
      a[i] = 1;
      a[i + 1] = -1;
      s.simple_roots.push_back(a);
      s.simple_coroots.push_back(a);
    }
    if (kind == "SL") {
      if (n < 2) throw InvalidDatum("SL rank must be >= 2");
      s.cochar_basis = s.simple_coroots;  // sum-zero sublattice
    }
  } else if (kind == "SP") {
    if (n < 2 || n % 2 != 0)
      throw InvalidDatum("SP:2n requires an even positive rank");
    int m = n / 2;
    s.ambient_rank = m;
    for (int i = 0; i + 1 < m; ++i) {
      IVec a(m, 0);
      a[i] = 1;
      a[i + 1] = -1;
      s.simple_roots.push_back(a);
      s.simple_coroots.push_back(a);
    }
    IVec last(m, 0), colast(m, 0);
    last[m - 1] = 2;
    colast[m - 1] = 1;
    s.simple_roots.push_back(last);
    s.simple_coroots.push_back(colast);
  } else {
    throw InvalidDatum("unknown group kind: " + kind);
  }
  return build(s);
}

bool RootDatum::delta_is_identity() const {
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if (delta_coch_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

WeylElt RootDatum::delta_conj(const WeylElt& v) const {
  // delta_coch^{-1} = delta_chr^T, delta_chr^{-1} = delta_coch^T
  return {matmul(matmul(delta_coch_, v.coch), transpose(delta_chr_)),
          matmul(matmul(delta_chr_, v.chr), transpose(delta_coch_))};
}

AffElt RootDatum::delta_of(const AffElt& x) const {
  return {delta_lambda(x.lambda), delta_conj(x.v)};
}

QVec RootDatum::delta_average(const QVec& x) const {
  QVec acc = x;
  QVec cur = x;
  for (int k = 1; k < delta_order_; ++k) {
    cur = delta_q(cur);
    acc = addq(acc, cur);
  }
  return scaleq(Rat(1, delta_order_), acc);
}

std::optional<IVec> RootDatum::cochar_coords(const IVec& lambda) const {
  std::vector<QVec> cols;
  cols.reserve(cochar_basis_.size());
  for (const auto& b : cochar_basis_) cols.push_back(to_q(b));
  auto sol = solve_columns(cols, to_q(lambda));
  if (!sol.ok) return std::nullopt;
  IVec out(sol.x.size());
  for (size_t i = 0; i < sol.x.size(); ++i) {
    if (sol.x[i].get_den() != 1) return std::nullopt;
    out[i] = sol.x[i].get_num().get_si();
  }
  return out;
}

void RootDatum::validate_and_finish() {
  int r = num_simple();
  if (d_ < 1) throw InvalidDatum("ambient rank must be positive");
  for (const auto& v : simple_roots_)
    if (static_cast<int>(v.size()) != d_)
      throw InvalidDatum("simple root has wrong dimension");
  for (const auto& v : simple_coroots_)
    if (static_cast<int>(v.size()) != d_)
      throw InvalidDatum("simple coroot has wrong dimension");
  if (simple_coroots_.size() != simple_roots_.size())
    throw InvalidDatum("roots/coroots count mismatch");

  // Cartan matrix conditions
  for (int i = 0; i < r; ++i) {
    if (dot(simple_roots_[i], simple_coroots_[i]) != 2)
      throw InvalidDatum("Cartan diagonal entry is not 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      Int cij = dot(simple_roots_[i], simple_coroots_[j]);
      Int cji = dot(simple_roots_[j], simple_coroots_[i]);
      if (cij > 0 || cji > 0)
        throw InvalidDatum("positive off-diagonal Cartan entry");
      if ((cij == 0) != (cji == 0))
        throw InvalidDatum("asymmetric zero in Cartan matrix");
    }
  }

  if (cochar_basis_.empty()) {
    cochar_basis_.assign(d_, IVec(d_, 0));
    for (int i = 0; i < d_; ++i) cochar_basis_[i][i] = 1;
  }
  {
    std::vector<QVec> rows;
    for (const auto& b : cochar_basis_) rows.push_back(to_q(b));
    if (rank_q(rows) != static_cast<int>(cochar_basis_.size()))
      throw InvalidDatum("cocharacter basis is not independent");
  }
  for (const auto& cv : simple_coroots_)
    if (!in_cochar_lattice(cv))
      throw InvalidDatum("simple coroot outside the cocharacter lattice");

  // delta
  if (delta_perm_.empty()) {
    delta_perm_.resize(r);
    for (int i = 0; i < r; ++i) delta_perm_[i] = i;
  }
  if (static_cast<int>(delta_perm_.size()) != r)
    throw InvalidDatum("delta permutation has wrong size");
  {
    std::vector<bool> seen(r, false);
    for (int i : delta_perm_) {
      if (i < 0 || i >= r || seen[i])
        throw InvalidDatum("delta permutation is not a permutation");
      seen[i] = true;
    }
  }
  if (delta_coch_.empty()) delta_coch_ = identity_mat(d_);
  if (static_cast<int>(delta_coch_.size()) != d_)
    throw InvalidDatum("delta matrix has wrong size");
  delta_chr_ = int_inverse_transpose(delta_coch_);
  for (int i = 0; i < r; ++i) {
    if (apply_mat(delta_coch_, simple_coroots_[i]) != simple_coroots_[delta_perm_[i]])
      throw InvalidDatum("delta matrix incompatible with permutation (coroots)");
    if (apply_mat(delta_chr_, simple_roots_[i]) != simple_roots_[delta_perm_[i]])
      throw InvalidDatum("delta matrix incompatible with permutation (roots)");
  }
  for (const auto& b : cochar_basis_)
    if (!in_cochar_lattice(apply_mat(delta_coch_, b)))
      throw InvalidDatum("delta does not preserve the cocharacter lattice");
  {
    IMat p = delta_coch_;
    IMat id = identity_mat(d_);
    delta_order_ = 1;
    while (p != id) {
      p = matmul(p, delta_coch_);
      ++delta_order_;
      if (delta_order_ > 1024) throw InvalidDatum("delta has infinite order");
    }
  }

  refl_.clear();
  for (int i = 0; i < r; ++i)
    refl_.push_back(reflection(d_, simple_roots_[i], simple_coroots_[i]));

  // Finite-type check: the root closure must terminate, and then W is finite.
  // Re-uses the Group machinery on the full level; Group construction itself
  // throws when the closure exceeds the cap.
  const Group& g = full_level();
  for (int i = 0; i < r; ++i)
    if (dotq(simple_coroots_[i], g.rho()) != 1)
      throw InvalidDatum("<rho, coroot> != 1; datum is not finite type");
  // delta stability of the positive system
  for (const auto& rt : g.roots()) {
    int idx = g.root_index(apply_mat(delta_chr_, rt.alpha));
    if (idx < 0) throw InvalidDatum("delta does not permute the roots");
  }
}

const Group& RootDatum::level(std::vector<int> j) const {
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (int i : j)
    if (i < 0 || i >= num_simple())
      throw InvalidDatum("level index out of range");
  std::lock_guard<std::mutex> lock(level_mutex_);
  auto it = levels_.find(j);
  if (it == levels_.end()) {
    auto g = std::make_unique<Group>(shared_from_this(), j);
    it = levels_.emplace(j, std::move(g)).first;
  }
  return *it->second;
}

const Group& RootDatum::full_level() const {
  std::vector<int> all(num_simple());
  for (int i = 0; i < num_simple(); ++i) all[i] = i;
  return level(all);
}

// ---------------------------------------------------------------------------

Group::Group(std::shared_ptr<const RootDatum> datum, std::vector<int> j)
    : datum_(std::move(datum)), j_(std::move(j)) {
  std::sort(j_.begin(), j_.end());
  delta_stable_ = true;
  for (int i : j_)
    if (!std::binary_search(j_.begin(), j_.end(), datum_->delta_perm()[i]))
      delta_stable_ = false;
  build_roots();
  build_quotients();
}

bool Group::contains_level(const std::vector<int>& sub) const {
  for (int i : sub)
    if (!std::binary_search(j_.begin(), j_.end(), i)) return false;
  return true;
}

void Group::build_roots() {
  int d = datum_->ambient_rank();
  // components of the sub-diagram
  {
    std::vector<int> comp(j_.size(), -1);
    int nc = 0;
    for (size_t s = 0; s < j_.size(); ++s) {
      if (comp[s] >= 0) continue;
      std::deque<size_t> dq{s};
      comp[s] = nc;
      while (!dq.empty()) {
        size_t cur = dq.front();
        dq.pop_front();
        for (size_t t = 0; t < j_.size(); ++t) {
          if (comp[t] >= 0) continue;
          if (dot(datum_->simple_roots()[j_[cur]],
                  datum_->simple_coroots()[j_[t]]) != 0) {
            comp[t] = nc;
            dq.push_back(t);
          }
        }
      }
      ++nc;
    }
    components_.assign(nc, {});
    for (size_t s = 0; s < j_.size(); ++s) components_[comp[s]].push_back(j_[s]);
  }

  // closure of the positive roots, tracking coroots and simple supports
  struct Item {
    IVec alpha, coalpha;
    IVec coeffs;  // coefficients over j_ (parallel index)
  };
  std::map<IVec, int> seen;
  std::vector<Item> pos;
  for (size_t s = 0; s < j_.size(); ++s) {
    Item it;
    it.alpha = datum_->simple_roots()[j_[s]];
    it.coalpha = datum_->simple_coroots()[j_[s]];
    it.coeffs.assign(j_.size(), 0);
    it.coeffs[s] = 1;
    seen[it.alpha] = static_cast<int>(pos.size());
    pos.push_back(it);
  }
  for (size_t head = 0; head < pos.size(); ++head) {
    if (pos.size() > kRootCap)
      throw InvalidDatum("root closure exceeds cap; datum is not finite type");
    for (size_t s = 0; s < j_.size(); ++s) {
      Item cur = pos[head];
      Int n = dot(cur.alpha, datum_->simple_coroots()[j_[s]]);
      if (n == 0) continue;
      Item nxt;
      nxt.alpha = cur.alpha;
      nxt.coalpha = cur.coalpha;
      nxt.coeffs = cur.coeffs;
      for (int i = 0; i < d; ++i) {
        nxt.alpha[i] -= n * datum_->simple_roots()[j_[s]][i];
      }
      Int m = dot(datum_->simple_roots()[j_[s]], cur.coalpha);
      for (int i = 0; i < d; ++i)
        nxt.coalpha[i] -= m * datum_->simple_coroots()[j_[s]][i];
      nxt.coeffs[s] -= n;
      bool nonneg = true, nonpos = true;
      for (Int c : nxt.coeffs) {
        if (c > 0) nonpos = false;
        if (c < 0) nonneg = false;
      }
      if (!nonneg && !nonpos)
        throw InvalidDatum("mixed-sign root encountered; invalid datum");
      if (nonneg && seen.find(nxt.alpha) == seen.end()) {
        seen[nxt.alpha] = static_cast<int>(pos.size());
        pos.push_back(nxt);
      }
    }
  }

  n_pos_ = static_cast<int>(pos.size());
  roots_.clear();
  rho_.assign(d, 0);
  two_rho_.assign(d, 0);
  for (int k = 0; k < n_pos_; ++k) {
    Root rt;
    rt.alpha = pos[k].alpha;
    rt.coalpha = pos[k].coalpha;
    rt.positive = true;
    rt.negative_index = n_pos_ + k;
    int comp = 0;
    for (size_t s = 0; s < j_.size(); ++s)
      if (pos[k].coeffs[s] != 0) {
        for (size_t c = 0; c < components_.size(); ++c)
          if (std::find(components_[c].begin(), components_[c].end(), j_[s]) !=
              components_[c].end())
            comp = static_cast<int>(c);
        break;
      }
    rt.component = comp;
    roots_.push_back(rt);
    two_rho_ = add(two_rho_, rt.alpha);
  }
  for (int k = 0; k < n_pos_; ++k) {
    Root rt;
    rt.alpha = neg(roots_[k].alpha);
    rt.coalpha = neg(roots_[k].coalpha);
    rt.positive = false;
    rt.negative_index = k;
    rt.component = roots_[k].component;
    roots_.push_back(rt);
  }
  for (size_t k = 0; k < roots_.size(); ++k) root_index_[roots_[k].alpha] = k;
  rho_ = scaleq(Rat(1, 2), to_q(two_rho_));

  // affine generators: finite simple reflections, then one affine reflection
  // per component through its highest root
  affine_gens_.clear();
  IVec zero(d, 0);
  for (int i : j_)
    affine_gens_.push_back({zero, datum_->simple_reflection(i)});
  for (size_t c = 0; c < components_.size(); ++c) {
    // highest root: maximal height within the component
    int best = -1;
    Int best_h = -1;
    for (int k = 0; k < n_pos_; ++k) {
      if (roots_[k].component != static_cast<int>(c)) continue;
      Int h = 0;
      for (size_t s = 0; s < j_.size(); ++s) h += pos[k].coeffs[s];
      if (h > best_h) {
        best_h = h;
        best = k;
      }
    }
    AffElt s0;
    s0.lambda = neg(roots_[best].coalpha);
    s0.v = reflection(d, roots_[best].alpha, roots_[best].coalpha);
    affine_gens_.push_back(s0);
  }

  // fundamental weights
  fw_.clear();
  std::vector<QVec> cartan_cols;  // column i = (<alpha_j, alpha_i^vee>)_j
  for (size_t i = 0; i < j_.size(); ++i) {
    QVec col(j_.size());
    for (size_t jj = 0; jj < j_.size(); ++jj)
      col[jj] = dot(datum_->simple_roots()[j_[jj]],
                    datum_->simple_coroots()[j_[i]]);
    cartan_cols.push_back(col);
  }
  for (size_t i = 0; i < j_.size(); ++i) {
    // omega_i = sum_j t_j alpha_j with <omega_i, alpha_k^vee> = delta_ik
    std::vector<QVec> cols;  // col j = (<alpha_j, alpha_k^vee>)_k
    for (size_t jj = 0; jj < j_.size(); ++jj) {
      QVec col(j_.size());
      for (size_t k = 0; k < j_.size(); ++k)
        col[k] = dot(datum_->simple_roots()[j_[jj]],
                     datum_->simple_coroots()[j_[k]]);
      cols.push_back(col);
    }
    QVec rhs(j_.size(), 0);
    rhs[i] = 1;
    auto sol = solve_columns(cols, rhs);
    if (!sol.ok) throw InvalidDatum("Cartan matrix is singular");
    QVec w(d, 0);
    for (size_t jj = 0; jj < j_.size(); ++jj)
      w = addq(w, scaleq(sol.x[jj], to_q(datum_->simple_roots()[j_[jj]])));
    fw_.push_back(w);
  }
}

void Group::build_quotients() {
  int xr = datum_->cochar_rank();
  std::vector<IVec> rel_omega, rel_kappa;
  for (int i : j_) {
    auto c = datum_->cochar_coords(datum_->simple_coroots()[i]);
    rel_omega.push_back(*c);
    rel_kappa.push_back(*c);
  }
  if (delta_stable_ && !datum_->delta_is_identity()) {
    for (const auto& b : datum_->cochar_basis()) {
      IVec db = apply_mat(datum_->delta_coch(), b);
      auto c = datum_->cochar_coords(sub(b, db));
      rel_kappa.push_back(*c);
    }
  }
  omega_quot_ = LatticeQuotient(xr, rel_omega);
  kappa_quot_ = LatticeQuotient(xr, rel_kappa);

  // central sublattice: kernel of the simple-root pairings on the lattice
  {
    size_t r = j_.size();
    IMat pairing(std::max<size_t>(r, 1), IVec(xr, 0));
    for (size_t a = 0; a < r; ++a)
      for (int k = 0; k < xr; ++k)
        pairing[a][k] =
            dot(datum_->simple_roots()[j_[a]], datum_->cochar_basis()[k]);
    SmithResult s = smith_normal_form(pairing);
    // kernel basis: columns of V beyond the pivots
    size_t pivots = 0;
    for (Int d : s.diag)
      if (d != 0) ++pivots;
    central_basis_.clear();
    std::vector<IVec> drift_rels;
    for (int k = static_cast<int>(pivots); k < xr; ++k) {
      IVec coords(xr, 0);
      for (int i = 0; i < xr; ++i) coords[i] = s.v[i][k];
      IVec ambient(datum_->ambient_rank(), 0);
      for (int i = 0; i < xr; ++i)
        for (int d2 = 0; d2 < datum_->ambient_rank(); ++d2)
          ambient[d2] += coords[i] * datum_->cochar_basis()[i][d2];
      central_basis_.push_back(ambient);
      if (delta_stable_ && !datum_->delta_is_identity()) {
        IVec drifted = sub(ambient, apply_mat(datum_->delta_coch(), ambient));
        auto dc = datum_->cochar_coords(drifted);
        drift_rels.push_back(*dc);
      }
    }
    drift_quot_ = LatticeQuotient(xr, drift_rels);
  }
}

IVec Group::drift_reduced(const IVec& lambda) const {
  auto coords = datum_->cochar_coords(lambda);
  return drift_quot_.reduce(*coords);
}

int Group::root_index(const IVec& alpha) const {
  auto it = root_index_.find(alpha);
  return it == root_index_.end() ? -1 : it->second;
}

Int Group::finite_length(const WeylElt& v) const {
  Int len = 0;
  for (int k = 0; k < n_pos_; ++k) {
    int idx = root_index(v.act_char(roots_[k].alpha));
    if (idx >= 0 && !roots_[idx].positive) ++len;
  }
  return len;
}

std::vector<int> Group::word(const WeylElt& v) const {
  std::vector<int> w;
  WeylElt cur = v;
  while (!cur.is_identity()) {
    bool found = false;
    for (int i : j_) {
      IVec b = cur.inv_act_char(datum_->simple_roots()[i]);
      int idx = root_index(b);
      if (idx >= 0 && !roots_[idx].positive) {
        w.push_back(i);
        cur = weyl_mul(datum_->simple_reflection(i), cur);
        found = true;
        break;
      }
    }
    if (!found) throw InvalidDatum("element not in this level's Weyl group");
  }
  return w;
}

WeylElt Group::from_word(const std::vector<int>& w) const {
  WeylElt v = weyl_identity(datum_->ambient_rank());
  for (int i : w) v = weyl_mul(v, datum_->simple_reflection(i));
  return v;
}

const std::vector<WeylElt>& Group::weyl_elements() const {
  std::lock_guard<std::mutex> lock(weyl_mutex_);
  if (!weyl_cache_.empty()) return weyl_cache_;
  std::set<IMat> seen;
  std::deque<WeylElt> queue;
  WeylElt id = weyl_identity(datum_->ambient_rank());
  queue.push_back(id);
  seen.insert(id.coch);
  while (!queue.empty()) {
    WeylElt cur = queue.front();
    queue.pop_front();
    weyl_cache_.push_back(cur);
    if (weyl_cache_.size() > kWeylCap)
      throw InvalidDatum("Weyl group exceeds cap; datum is not finite type");
    for (int i : j_) {
      WeylElt nxt = weyl_mul(cur, datum_->simple_reflection(i));
      if (seen.insert(nxt.coch).second) queue.push_back(nxt);
    }
  }
  return weyl_cache_;
}

WeylElt Group::longest_element() const {
  const auto& all = weyl_elements();
  const WeylElt* best = &all[0];
  Int best_len = 0;
  for (const auto& v : all) {
    Int l = finite_length(v);
    if (l > best_len) {
      best_len = l;
      best = &v;
    }
  }
  return *best;
}

bool Group::is_dominant(const QVec& x) const {
  for (int i : j_)
    if (dotq(datum_->simple_roots()[i], x) < 0) return false;
  return true;
}

bool Group::is_dominant_regular(const QVec& x) const {
  for (int i : j_)
    if (dotq(datum_->simple_roots()[i], x) <= 0) return false;
  return true;
}

std::pair<QVec, WeylElt> Group::dominant_rep(const QVec& x) const {
  QVec cur = x;
  WeylElt v = weyl_identity(datum_->ambient_rank());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : j_) {
      if (dotq(datum_->simple_roots()[i], cur) < 0) {
        cur = datum_->simple_reflection(i).act(cur);
        v = weyl_mul(datum_->simple_reflection(i), v);
        moved = true;
        break;
      }
    }
  }
  return {cur, v};
}

std::optional<QVec> Group::coroot_cone_coeffs(
    const QVec& x, const std::vector<int>& jsub) const {
  std::vector<QVec> cols;
  for (int i : jsub) cols.push_back(to_q(datum_->simple_coroots()[i]));
  if (cols.empty()) {
    if (is_zero(x)) return QVec{};
    return std::nullopt;
  }
  auto sol = solve_columns(cols, x);
  if (!sol.ok) return std::nullopt;
  return sol.x;
}

Pi1Element Group::kappa_of_lambda(const IVec& lambda) const {
  auto coords = datum_->cochar_coords(lambda);
  if (!coords)
    throw SemanticError("cocharacter outside the lattice of " + datum_->name());
  return {kappa_quot_.reduce(*coords), lambda};
}

IVec Group::omega_component(const IVec& lambda) const {
  auto coords = datum_->cochar_coords(lambda);
  if (!coords)
    throw SemanticError("cocharacter outside the lattice of " + datum_->name());
  return omega_quot_.reduce(*coords);
}

std::vector<std::vector<int>> Group::delta_stable_subsets() const {
  std::vector<std::vector<int>> out;
  size_t n = j_.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<int> sub;
    for (size_t s = 0; s < n; ++s)
      if (mask & (size_t(1) << s)) sub.push_back(j_[s]);
    bool stable = true;
    for (int i : sub)
      if (!std::binary_search(sub.begin(), sub.end(), datum_->delta_perm()[i]))
        stable = false;
    if (stable) out.push_back(sub);
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

std::vector<WeylElt> Group::min_coset_reps(const std::vector<int>& jsub) const {
  std::vector<WeylElt> reps;
  for (const auto& v : weyl_elements()) {
    bool minimal = true;
    for (int i : jsub) {
      int idx = root_index(v.act_char(datum_->simple_roots()[i]));
      if (idx >= 0 && !roots_[idx].positive) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(v);
  }
  std::vector<std::pair<std::pair<Int, std::vector<int>>, size_t>> keyed;
  for (size_t k = 0; k < reps.size(); ++k)
    keyed.push_back({{finite_length(reps[k]), word(reps[k])}, k});
  std::sort(keyed.begin(), keyed.end());
  std::vector<WeylElt> out;
  for (auto& kv : keyed) out.push_back(reps[kv.second]);
  return out;
}

WeylElt Group::min_in_coset(WeylElt v, const std::vector<int>& jsub) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : jsub) {
      int idx = root_index(v.act_char(datum_->simple_roots()[i]));
      if (idx >= 0 && !roots_[idx].positive) {
        v = weyl_mul(v, datum_->simple_reflection(i));
        moved = true;
        break;
      }
    }
  }
  return v;
}

QVec Group::central_projection(const QVec& x) const {
  if (j_.empty()) return x;
  std::vector<QVec> cols;
  QVec rhs(j_.size());
  for (size_t a = 0; a < j_.size(); ++a) {
    QVec col(j_.size());
    for (size_t b = 0; b < j_.size(); ++b)
      col[b] = dot(datum_->simple_roots()[j_[b]],
                   datum_->simple_coroots()[j_[a]]);
    cols.push_back(col);
    rhs[a] = dotq(datum_->simple_roots()[j_[a]], x);
  }
  auto sol = solve_columns(cols, rhs);
  if (!sol.ok) throw InvalidDatum("Cartan matrix is singular");
  QVec out = x;
  for (size_t a = 0; a < j_.size(); ++a)
    out = subq(out, scaleq(sol.x[a], to_q(datum_->simple_coroots()[j_[a]])));
  return out;
}

int Group::fixed_space_dim_twisted(const WeylElt& v) const {
  IMat m = matmul(v.coch, datum_->delta_coch());
  int xr = datum_->cochar_rank();
  std::vector<QVec> rows;
  for (int k = 0; k < xr; ++k) {
    IVec mb = apply_mat(m, datum_->cochar_basis()[k]);
    auto coords = datum_->cochar_coords(mb);
    if (!coords)
      throw InvalidDatum("twisted action does not preserve the lattice");
    QVec row(xr, 0);
    for (int l = 0; l < xr; ++l) row[l] = (*coords)[l];
    row[k] -= 1;
    rows.push_back(row);
  }
  // rows are the columns of (A - I) transposed; rank is the same
  return xr - rank_q(rows);
}

}  // namespace strata
