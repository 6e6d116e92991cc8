#include "liaison/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "liaison/invariants.hpp"
#include "module.hpp"

namespace liaison {

using detail::ModDivision;
using detail::ModGB;
using detail::ModPoly;
using detail::MTerm;

void FreeResolution::validate() const {
  const std::vector<std::int64_t>* prev_cols = &f0_twists;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].row_twists() != *prev_cols)
      throw std::invalid_argument("resolution maps do not chain at step " + std::to_string(i + 1));
    prev_cols = &maps[i].col_twists();
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!PolyMatrix::multiply(maps[i], maps[i + 1]).is_zero())
      throw std::invalid_argument("nonzero composite at step " + std::to_string(i + 1));
}

int BettiTable::pd() const {
  int p = 0;
  for (const auto& [key, rank] : entries)
    if (rank > 0) p = std::max(p, key.first);
  return p;
}

int BettiTable::total_rank(int idx) const {
  int r = 0;
  for (const auto& [key, rank] : entries)
    if (key.first == idx) r += rank;
  return r;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  for (const auto& [key, rank] : entries)
    if (rank > 0) os << "B(" << key.first << "," << key.second << ") = " << rank << "\n";
  return os.str();
}

namespace {

// Deterministic structural order on module elements of equal graded degree.
bool mod_before(const RingPtr& ring, const ModPoly& a, const ModPoly& b) {
  std::size_t n = std::min(a.terms().size(), b.terms().size());
  for (std::size_t i = 0; i < n; ++i) {
    const MTerm &ta = a.terms()[i], &tb = b.terms()[i];
    if (detail::mterm_less(ring, ta, tb)) return false;
    if (detail::mterm_less(ring, tb, ta)) return true;
  }
  return a.terms().size() > b.terms().size();
}

// Greedy minimal generating set of a graded submodule, lowest degrees first.
std::vector<ModPoly> trim_generators(const RingPtr& ring, int ncomp,
                                     std::vector<ModPoly> candidates,
                                     const std::vector<std::int64_t>& comp_twists) {
  std::vector<std::pair<std::int64_t, ModPoly>> graded;
  for (ModPoly& c : candidates) {
    if (c.is_zero()) continue;
    auto d = c.graded_degree(comp_twists);
    if (!d) throw std::invalid_argument("inhomogeneous module element");
    graded.emplace_back(*d, std::move(c));
  }
  std::stable_sort(graded.begin(), graded.end(),
                   [&](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first < b.first;
                     return mod_before(ring, a.second, b.second);
                   });
  std::vector<ModPoly> kept;
  ModGB gb;
  for (auto& [deg, cand] : graded) {
    if (!kept.empty() && detail::submodule_contains(gb, cand)) continue;
    kept.push_back(std::move(cand));
    gb = detail::module_groebner(ring, ncomp, kept, false);
  }
  return kept;
}

PolyMatrix columns_to_matrix(const RingPtr& ring, const std::vector<std::int64_t>& row_twists,
                             const std::vector<ModPoly>& cols) {
  std::vector<std::int64_t> col_twists;
  for (const ModPoly& c : cols) {
    auto d = c.graded_degree(row_twists);
    if (!d) throw std::invalid_argument("inhomogeneous column");
    col_twists.push_back(*d);
  }
  PolyMatrix m(ring, row_twists, col_twists);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<Polynomial> col = cols[j].to_columns();
    for (int i = 0; i < m.rows(); ++i) m.set(i, static_cast<int>(j), col[static_cast<std::size_t>(i)]);
  }
  return m;
}

}  // namespace

PolyMatrix syzygies(const PolyMatrix& m) {
  const RingPtr& R = m.ring();
  int s = m.cols();

  std::vector<ModPoly> gens;
  for (int j = 0; j < s; ++j) gens.push_back(ModPoly::from_column(m, j));

  ModGB gb = detail::module_groebner(R, m.rows(), gens, true);
  std::size_t nb = gb.elements.size();

  std::vector<ModPoly> candidates;
  auto add_candidate = [&](std::vector<Polynomial> coords) {
    std::vector<MTerm> terms;
    for (int j = 0; j < s; ++j)
      for (const Term& t : coords[static_cast<std::size_t>(j)].terms())
        terms.push_back({t.coef, t.mono, j});
    ModPoly c = ModPoly::from_terms(R, s, std::move(terms));
    if (!c.is_zero()) candidates.push_back(std::move(c));
  };

  // Schreyer syzygies of the Groebner basis, pushed down to the input columns.
  for (std::size_t k = 0; k < nb; ++k) {
    for (std::size_t l = k + 1; l < nb; ++l) {
      const MTerm& lk = gb.elements[k].leading();
      const MTerm& ll = gb.elements[l].leading();
      if (lk.comp != ll.comp) continue;
      Monomial lcm = Monomial::lcm(lk.mono, ll.mono);
      Monomial qk = Monomial::quotient(lcm, lk.mono);
      Monomial ql = Monomial::quotient(lcm, ll.mono);
      Scalar one = Scalar::one(R->field());
      ModPoly sv = ModPoly::fma(ModPoly::zero(R, m.rows()), one, qk, gb.elements[k]);
      sv = ModPoly::fma(sv, -one, ql, gb.elements[l]);
      ModDivision d = detail::mod_divide(sv, gb.elements);
      if (!d.remainder.is_zero())
        throw std::runtime_error("S-vector failed to reduce against a Groebner basis");
      std::vector<Polynomial> coords(static_cast<std::size_t>(s), Polynomial::zero(R));
      auto accumulate = [&](const Polynomial& c, std::size_t basis_idx, bool negate) {
        if (c.is_zero()) return;
        for (int j = 0; j < s; ++j) {
          const Polynomial& rep = gb.reps[basis_idx][static_cast<std::size_t>(j)];
          if (rep.is_zero()) continue;
          Polynomial contrib = c * rep;
          coords[static_cast<std::size_t>(j)] =
              negate ? coords[static_cast<std::size_t>(j)] - contrib
                     : coords[static_cast<std::size_t>(j)] + contrib;
        }
      };
      accumulate(Polynomial::term(R, one, qk), k, false);
      accumulate(Polynomial::term(R, one, ql), l, true);
      for (std::size_t r = 0; r < nb; ++r) accumulate(d.quotients[r], r, true);
      add_candidate(std::move(coords));
    }
  }

  // Rewrites of the original columns through the basis give the remaining
  // generators (and pick up free summands from zero columns).
  for (int j = 0; j < s; ++j) {
    ModDivision d = detail::mod_divide(gens[static_cast<std::size_t>(j)], gb.elements);
    if (!d.remainder.is_zero())
      throw std::runtime_error("matrix column failed to reduce against its own basis");
    std::vector<Polynomial> coords(static_cast<std::size_t>(s), Polynomial::zero(R));
    coords[static_cast<std::size_t>(j)] = Polynomial::constant(R, 1);
    for (std::size_t r = 0; r < nb; ++r) {
      if (d.quotients[r].is_zero()) continue;
      for (int jj = 0; jj < s; ++jj) {
        const Polynomial& rep = gb.reps[r][static_cast<std::size_t>(jj)];
        if (!rep.is_zero())
          coords[static_cast<std::size_t>(jj)] =
              coords[static_cast<std::size_t>(jj)] - d.quotients[r] * rep;
      }
    }
    add_candidate(std::move(coords));
  }

  std::vector<ModPoly> kept = trim_generators(R, s, std::move(candidates), m.col_twists());
  return columns_to_matrix(R, m.col_twists(), kept);
}

namespace {

FreeResolution chain_resolution(const RingPtr& ring, std::vector<std::int64_t> f0,
                                std::vector<PolyMatrix> start, int cap) {
  FreeResolution res{ring, std::move(f0), std::move(start)};
  while (!res.maps.empty() && res.maps.back().cols() > 0) {
    if (static_cast<int>(res.maps.size()) > cap)
      throw std::runtime_error("resolution exceeded the syzygy-theorem length bound");
    PolyMatrix next = syzygies(res.maps.back());
    if (next.cols() == 0) break;
    res.maps.push_back(std::move(next));
  }
  return res;
}

}  // namespace

FreeResolution resolve_quotient(const Ideal& I) {
  if (!I.is_homogeneous())
    throw std::invalid_argument("resolve_quotient requires a homogeneous ideal");
  const RingPtr& R = I.ring();
  Ideal M = minimalized(I);
  std::vector<Polynomial> gens = M.gens();
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return poly_before(a, b);
  });
  if (gens.empty()) return FreeResolution{R, {0}, {}};

  std::vector<std::int64_t> col_twists;
  for (const Polynomial& g : gens) col_twists.push_back(g.degree());
  PolyMatrix phi1(R, {0}, col_twists);
  for (std::size_t j = 0; j < gens.size(); ++j) phi1.set(0, static_cast<int>(j), gens[j]);

  std::vector<PolyMatrix> maps;
  maps.push_back(std::move(phi1));
  return chain_resolution(R, {0}, std::move(maps), R->nvars() + 1);
}

FreeResolution resolve_cokernel(const PolyMatrix& presentation) {
  const RingPtr& R = presentation.ring();
  std::vector<ModPoly> cols;
  for (int j = 0; j < presentation.cols(); ++j)
    cols.push_back(ModPoly::from_column(presentation, j));
  std::vector<ModPoly> kept =
      trim_generators(R, presentation.rows(), std::move(cols), presentation.row_twists());
  if (kept.empty()) return FreeResolution{R, presentation.row_twists(), {}};
  std::vector<PolyMatrix> maps;
  maps.push_back(columns_to_matrix(R, presentation.row_twists(), kept));
  return chain_resolution(R, presentation.row_twists(), std::move(maps), R->nvars() + 2);
}

namespace {

// Mutable working form for unit cancellation.
struct WorkMat {
  std::vector<std::int64_t> rt, ct;
  std::vector<std::vector<Polynomial>> e;  // [row][col]

  static WorkMat from(const PolyMatrix& m) {
    WorkMat w{m.row_twists(), m.col_twists(), {}};
    w.e.resize(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
      w.e[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.cols()));
      for (int j = 0; j < m.cols(); ++j) w.e[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    }
    return w;
  }

  PolyMatrix to_matrix(const RingPtr& ring) const {
    PolyMatrix m(ring, rt, ct);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e[i].size(); ++j)
        m.set(static_cast<int>(i), static_cast<int>(j), e[i][j]);
    return m;
  }

  void drop_row(std::size_t r) {
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(r));
    rt.erase(rt.begin() + static_cast<std::ptrdiff_t>(r));
  }
  void drop_col(std::size_t c) {
    for (auto& row : e) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
    ct.erase(ct.begin() + static_cast<std::ptrdiff_t>(c));
  }
};

bool is_unit_entry(const Polynomial& p) { return p.is_nonzero_constant(); }

}  // namespace

FreeResolution minimize(FreeResolution res) {
  const RingPtr& R = res.ring;
  std::vector<WorkMat> w;
  w.reserve(res.maps.size());
  for (const PolyMatrix& m : res.maps) w.push_back(WorkMat::from(m));

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < w.size() && !changed; ++s) {
      WorkMat& m = w[s];
      for (std::size_t r = 0; r < m.e.size() && !changed; ++r) {
        for (std::size_t c = 0; c < (m.e.empty() ? 0 : m.e[r].size()) && !changed; ++c) {
          if (!is_unit_entry(m.e[r][c])) continue;
          changed = true;

          // Normalize the pivot to 1.
          Scalar u = m.e[r][c].leading_coefficient();
          Scalar uinv = u.inverse();
          for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i][c] = m.e[i][c].scaled(uinv);
          if (s + 1 < w.size())
            for (std::size_t j = 0; j < w[s + 1].e[c].size(); ++j)
              w[s + 1].e[c][j] = w[s + 1].e[c][j].scaled(u);

          // Clear row r by column operations; compensate in the next map.
          for (std::size_t cc = 0; cc < m.e[r].size(); ++cc) {
            if (cc == c || m.e[r][cc].is_zero()) continue;
            Polynomial a = m.e[r][cc];
            for (std::size_t i = 0; i < m.e.size(); ++i)
              m.e[i][cc] = m.e[i][cc] - a * m.e[i][c];
            if (s + 1 < w.size())
              for (std::size_t j = 0; j < w[s + 1].e[c].size(); ++j)
                w[s + 1].e[c][j] = w[s + 1].e[c][j] + a * w[s + 1].e[cc][j];
          }

          // Clear column c by row operations; compensate in the previous map.
          for (std::size_t rr = 0; rr < m.e.size(); ++rr) {
            if (rr == r || m.e[rr][c].is_zero()) continue;
            Polynomial b = m.e[rr][c];
            for (std::size_t j = 0; j < m.e[rr].size(); ++j)
              m.e[rr][j] = m.e[rr][j] - b * m.e[r][j];
            if (s > 0)
              for (std::size_t i = 0; i < w[s - 1].e.size(); ++i)
                w[s - 1].e[i][r] = w[s - 1].e[i][r] + w[s - 1].e[i][rr] * b;
          }

          // The cancelled row/column must now vanish in the neighbours.
          if (s + 1 < w.size())
            for (const Polynomial& p : w[s + 1].e[c])
              if (!p.is_zero()) throw std::runtime_error("minimize: residual next-map row");
          if (s > 0)
            for (std::size_t i = 0; i < w[s - 1].e.size(); ++i)
              if (!w[s - 1].e[i][r].is_zero())
                throw std::runtime_error("minimize: residual previous-map column");

          if (s + 1 < w.size()) {
            w[s + 1].e.erase(w[s + 1].e.begin() + static_cast<std::ptrdiff_t>(c));
            w[s + 1].rt.erase(w[s + 1].rt.begin() + static_cast<std::ptrdiff_t>(c));
          }
          if (s > 0) w[s - 1].drop_col(r);
          m.drop_row(r);
          m.drop_col(c);
          if (s == 0) {
            res.f0_twists.erase(res.f0_twists.begin() + static_cast<std::ptrdiff_t>(r));
          }
        }
      }
    }
  }

  while (!w.empty() && w.back().ct.empty()) w.pop_back();
  // A leading map with no columns means no relations at all.
  res.maps.clear();
  for (const WorkMat& mat : w) res.maps.push_back(mat.to_matrix(R));
  return res;
}

BettiTable betti(const FreeResolution& input) {
  FreeResolution res = minimize(input);
  BettiTable t;
  for (std::int64_t d : res.f0_twists) t.entries[{0, d}]++;
  for (std::size_t i = 0; i < res.maps.size(); ++i)
    for (std::int64_t d : res.maps[i].col_twists())
      t.entries[{static_cast<int>(i) + 1, d}]++;
  return t;
}

int pd_quotient(const Ideal& I) {
  FreeResolution res = minimize(resolve_quotient(I));
  return res.length();
}

PolyMatrix subquotient_presentation(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  if (!A.contains(B)) throw std::invalid_argument("subquotient requires B contained in A");
  const RingPtr& R = A.ring();
  const std::vector<Polynomial>& agens = A.gens();

  if (agens.empty()) return PolyMatrix(R, {}, {});

  std::vector<std::int64_t> row_twists;
  for (const Polynomial& a : agens) {
    Homogeneity h = a.homogeneity();
    if (!h.homogeneous) throw std::invalid_argument("subquotient requires homogeneous generators");
    row_twists.push_back(h.degree);
  }
  PolyMatrix row(R, {0}, row_twists);
  for (std::size_t j = 0; j < agens.size(); ++j) row.set(0, static_cast<int>(j), agens[j]);
  PolyMatrix syz = syzygies(row);

  // Coordinates of B's generators over A's, through a tracked basis.
  std::vector<ModPoly> mods;
  for (const Polynomial& a : agens) {
    std::vector<MTerm> ts;
    for (const Term& t : a.terms()) ts.push_back({t.coef, t.mono, 0});
    mods.push_back(ModPoly::from_terms(R, 1, std::move(ts)));
  }
  ModGB gb = detail::module_groebner(R, 1, mods, true);

  std::vector<std::vector<Polynomial>> coord_cols;
  std::vector<std::int64_t> coord_twists;
  for (const Polynomial& b : B.gens()) {
    std::vector<MTerm> ts;
    for (const Term& t : b.terms()) ts.push_back({t.coef, t.mono, 0});
    ModDivision d = detail::mod_divide(ModPoly::from_terms(R, 1, std::move(ts)), gb.elements);
    if (!d.remainder.is_zero())
      throw std::runtime_error("containment check passed but reduction left a remainder");
    std::vector<Polynomial> coords(agens.size(), Polynomial::zero(R));
    for (std::size_t r = 0; r < gb.elements.size(); ++r) {
      if (d.quotients[r].is_zero()) continue;
      for (std::size_t j = 0; j < agens.size(); ++j)
        if (!gb.reps[r][j].is_zero()) coords[j] = coords[j] + d.quotients[r] * gb.reps[r][j];
    }
    coord_cols.push_back(std::move(coords));
    coord_twists.push_back(b.degree());
  }

  std::vector<std::int64_t> col_twists = syz.col_twists();
  col_twists.insert(col_twists.end(), coord_twists.begin(), coord_twists.end());
  PolyMatrix pres(R, row_twists, col_twists);
  for (int j = 0; j < syz.cols(); ++j)
    for (int i = 0; i < syz.rows(); ++i) pres.set(i, j, syz.at(i, j));
  for (std::size_t j = 0; j < coord_cols.size(); ++j)
    for (std::size_t i = 0; i < agens.size(); ++i)
      pres.set(static_cast<int>(i), syz.cols() + static_cast<int>(j), coord_cols[j][i]);
  return pres;
}

int pd_module(const PolyMatrix& presentation) {
  FreeResolution res = minimize(resolve_cokernel(presentation));
  return res.length();
}

std::string AcyclicityReport::to_string() const {
  std::ostringstream os;
  os << (acyclic ? "acyclic" : "NOT acyclic");
  for (const AcyclicityStep& s : steps)
    os << "; step " << s.index << ": rank " << s.rank << (s.rank_condition ? " ok" : " BAD")
       << ", minors codim " << s.minors_codim << (s.depth_condition ? " ok" : " BAD");
  return os.str();
}

AcyclicityReport check_buchsbaum_eisenbud(const FreeResolution& res) {
  if (res.f0_twists.size() != 1)
    throw std::invalid_argument("acyclicity check expects a complex ending in R");
  res.validate();

  AcyclicityReport rep{true, {}};
  int len = res.length();
  std::vector<int> ranks(static_cast<std::size_t>(len) + 1, 0);
  for (int i = 0; i < len; ++i) ranks[static_cast<std::size_t>(i)] = rank(res.maps[static_cast<std::size_t>(i)]);

  for (int i = 1; i <= len; ++i) {
    const PolyMatrix& phi = res.maps[static_cast<std::size_t>(i - 1)];
    int r = ranks[static_cast<std::size_t>(i - 1)];
    int r_next = ranks[static_cast<std::size_t>(i)];
    bool rank_ok = r + r_next == phi.cols();
    std::int64_t cod;
    if (r == 0) {
      cod = phi.ring()->nvars() + 1;  // minors ideal is the unit ideal by convention
    } else {
      Ideal mi = minors(phi, r);
      cod = mi.is_unit_ideal() ? phi.ring()->nvars() + 1 : codimension(mi);
    }
    bool depth_ok = cod >= i;
    rep.steps.push_back({i, r, rank_ok, cod, depth_ok});
    if (!rank_ok || !depth_ok) rep.acyclic = false;
  }
  return rep;
}

bool submodule_contains_column(const PolyMatrix& gens, const std::vector<Polynomial>& column) {
  if (static_cast<int>(column.size()) != gens.rows())
    throw std::invalid_argument("column length mismatch");
  std::vector<ModPoly> g;
  for (int j = 0; j < gens.cols(); ++j) g.push_back(ModPoly::from_column(gens, j));
  ModGB gb = detail::module_groebner(gens.ring(), gens.rows(), g, false);
  std::vector<MTerm> ts;
  for (std::size_t i = 0; i < column.size(); ++i)
    for (const Term& t : column[i].terms()) ts.push_back({t.coef, t.mono, static_cast<int>(i)});
  return detail::submodule_contains(gb, ModPoly::from_terms(gens.ring(), gens.rows(), std::move(ts)));
}

bool submodule_equal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) return false;
  for (int j = 0; j < b.cols(); ++j)
    if (!submodule_contains_column(a, b.column(j))) return false;
  for (int j = 0; j < a.cols(); ++j)
    if (!submodule_contains_column(b, a.column(j))) return false;
  return true;
}

}  // namespace liaison
