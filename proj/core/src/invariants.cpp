#include "liaison/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liaison {

std::int64_t HilbertSeries::multiplicity() const {
  std::int64_t s = 0;
  for (std::int64_t c : numerator) s += c;
  return s;
}

std::string HilbertSeries::to_string() const {
  std::string num;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    if (numerator[i] == 0) continue;
    if (!num.empty()) num += numerator[i] > 0 ? " + " : " - ";
    else if (numerator[i] < 0) num += "-";
    std::int64_t a = numerator[i] > 0 ? numerator[i] : -numerator[i];
    if (a != 1 || i == 0) num += std::to_string(a);
    if (i > 0) {
      if (a != 1) num += "*";
      num += "t";
      if (i > 1) num += "^" + std::to_string(i);
    }
  }
  if (num.empty()) num = "0";
  return "(" + num + ") / (1-t)^" + std::to_string(dim);
}

Ideal leading_ideal(const Ideal& I) {
  const GroebnerBasis& G = I.groebner();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : G.elements())
    gens.push_back(Polynomial::term(I.ring(), Scalar::one(I.ring()->field()),
                                    g.leading_monomial()));
  return Ideal(I.ring(), std::move(gens));
}

namespace {

using Coeffs = std::vector<std::int64_t>;

Coeffs mul_one_minus_tpow(const Coeffs& a, std::int64_t d) {
  Coeffs r(a.size() + static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + static_cast<std::size_t>(d)] -= a[i];
  }
  return r;
}

void add_shifted(Coeffs& a, const Coeffs& b, std::int64_t shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift))
    a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += b[i];
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : out)
      if (Monomial::divides(kept, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

struct KPolyContext {
  std::map<std::vector<std::int32_t>, Coeffs> memo;

  static std::vector<std::int32_t> key(const std::vector<Monomial>& gens) {
    std::vector<std::int32_t> k;
    for (const Monomial& m : gens) {
      for (std::int32_t e : m.exponents()) k.push_back(e);
      k.push_back(-1);
    }
    return k;
  }

  // Numerator of the Hilbert series of R/(gens) over (1-t)^nvars, by the
  // pivot-splitting recursion; gens must be a minimal generating set.
  Coeffs kpoly(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    if (gens.size() == 1 && gens[0].is_one()) return {0};
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
      for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
        if (!Monomial::coprime(gens[i], gens[j])) coprime = false;
    if (coprime) {
      Coeffs r{1};
      for (const Monomial& m : gens) r = mul_one_minus_tpow(r, m.total_degree());
      trim(r);
      return r;
    }

    auto k = key(gens);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;

    int n = gens[0].nvars();
    int pivot = 0, best = -1;
    for (int v = 0; v < n; ++v) {
      int cnt = 0;
      for (const Monomial& m : gens)
        if (m.exponent(v) > 0) ++cnt;
      if (cnt > best) {
        best = cnt;
        pivot = v;
      }
    }

    // Split along the pivot variable v: H(M) = H(M + (v)) + t*H(M : v).
    std::vector<Monomial> plus, quot;
    plus.push_back(Monomial::variable(n, pivot));
    for (const Monomial& m : gens) {
      if (m.exponent(pivot) == 0) plus.push_back(m);
      std::vector<std::int32_t> e = m.exponents();
      if (e[static_cast<std::size_t>(pivot)] > 0) --e[static_cast<std::size_t>(pivot)];
      quot.emplace_back(std::move(e));
    }
    Coeffs a = kpoly(minimalize_monomials(std::move(plus)));
    Coeffs b = kpoly(minimalize_monomials(std::move(quot)));
    add_shifted(a, b, 1);
    trim(a);
    memo.emplace(std::move(k), a);
    return a;
  }
};

std::vector<Monomial> leading_monomials(const Ideal& I) {
  std::vector<Monomial> ms;
  for (const Polynomial& g : I.groebner().elements()) ms.push_back(g.leading_monomial());
  return ms;
}

void require_homogeneous(const Ideal& I, const char* op) {
  if (!I.is_homogeneous())
    throw std::invalid_argument(std::string(op) + " requires a homogeneous ideal");
}

int dimension_of_monomials(int nvars, const std::vector<Monomial>& gens) {
  if (gens.empty()) return nvars;
  for (const Monomial& m : gens)
    if (m.is_one()) return -1;
  if (nvars > 24) throw std::runtime_error("dimension: too many variables");
  std::vector<std::uint32_t> support;
  for (const Monomial& m : gens) {
    std::uint32_t s = 0;
    for (int v = 0; v < nvars; ++v)
      if (m.exponent(v) > 0) s |= 1u << v;
    support.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << nvars); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t s : support)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace

int dimension(const Ideal& I) {
  require_homogeneous(I, "dimension");
  return dimension_of_monomials(I.ring()->nvars(), leading_monomials(I));
}

int codimension(const Ideal& I) { return I.ring()->nvars() - dimension(I); }

HilbertSeries hilbert_series(const Ideal& I) {
  require_homogeneous(I, "hilbert_series");
  std::vector<Monomial> gens = minimalize_monomials(leading_monomials(I));
  int n = I.ring()->nvars();
  int d = dimension_of_monomials(n, gens);

  KPolyContext ctx;
  Coeffs h = ctx.kpoly(gens);
  if (d < 0) return HilbertSeries{{0}, -1};  // unit ideal: zero module

  // Divide the full numerator by (1-t)^(n-d); exactness is a consistency
  // check between the combinatorial dimension and the numerator's root at 1.
  for (int k = 0; k < n - d; ++k) {
    if (h.size() < 2) throw std::runtime_error("hilbert numerator not divisible by (1-t)");
    Coeffs q(h.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      acc += h[i];
      q[i] = acc;
    }
    if (acc + h.back() != 0)
      throw std::runtime_error("hilbert numerator not divisible by (1-t)");
    h = std::move(q);
    trim(h);
  }
  trim(h);
  if (h.empty()) throw std::runtime_error("hilbert numerator vanished unexpectedly");
  return HilbertSeries{std::move(h), d};
}

std::int64_t multiplicity(const Ideal& I) {
  require_homogeneous(I, "multiplicity");
  if (I.is_unit_ideal()) throw std::invalid_argument("multiplicity of the unit ideal");
  HilbertSeries hs = hilbert_series(I);
  std::int64_t e = hs.multiplicity();
  if (e <= 0) throw std::runtime_error("nonpositive multiplicity computed");
  return e;
}

bool is_regular_sequence(std::span<const Polynomial> fs) {
  if (fs.empty()) throw std::invalid_argument("empty sequence");
  const RingPtr& R = fs.front().ring();
  for (const Polynomial& f : fs) {
    require_same_ring(R, f.ring());
    if (f.is_zero()) throw std::invalid_argument("zero entry in sequence");
    if (!f.homogeneity().homogeneous)
      throw std::invalid_argument("regular sequence test requires homogeneous forms");
    if (f.is_nonzero_constant()) throw std::invalid_argument("unit entry in sequence");
  }
  Ideal I(R, std::vector<Polynomial>(fs.begin(), fs.end()));
  return codimension(I) == static_cast<int>(fs.size());
}

}  // namespace liaison
