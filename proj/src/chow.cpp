#include "cubictk/chow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubictk {

namespace {

void require_same(const ChowElement& a, const ChowElement& b) {
  if (&a.algebra() != &b.algebra()) throw std::invalid_argument("elements of different rings");
}

std::string rational_str(const Rational& r) {
  return denominator(r) == 1 ? numerator(r).str() : numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

// ---- GradedAlgebra ----

GradedAlgebra::GradedAlgebra(std::vector<std::string> names, std::vector<int> degrees, Table table)
    : names_(std::move(names)), degrees_(std::move(degrees)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (degrees_.size() != n || table_.size() != n || n == 0 || degrees_[0] != 0)
    throw std::invalid_argument("malformed algebra");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("malformed algebra table");
    for (const auto& entry : row)
      if (entry.size() != n) throw std::invalid_argument("malformed algebra table");
  }
}

AlgebraPtr GradedAlgebra::create(std::vector<std::string> names, std::vector<int> degrees,
                                 Table table) {
  return AlgebraPtr(new GradedAlgebra(std::move(names), std::move(degrees), std::move(table)));
}

int GradedAlgebra::top_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

ChowElement GradedAlgebra::zero() const {
  return ChowElement(shared_from_this(), std::vector<Rational>(dim()));
}

ChowElement GradedAlgebra::one() const { return basis(0); }

ChowElement GradedAlgebra::basis(std::size_t i) const {
  std::vector<Rational> v(dim());
  v.at(i) = 1;
  return ChowElement(shared_from_this(), std::move(v));
}

ChowElement GradedAlgebra::element(std::vector<Rational> coeffs) const {
  return ChowElement(shared_from_this(), std::move(coeffs));
}

// ---- ChowElement ----

ChowElement::ChowElement(AlgebraPtr alg, std::vector<Rational> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != alg_->dim()) throw std::invalid_argument("wrong coefficient count");
}

bool ChowElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
}

bool ChowElement::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& r) { return denominator(r) == 1; });
}

ChowElement ChowElement::part(int degree) const {
  ChowElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (alg_->degree_of(i) != degree) r.coeffs_[i] = 0;
  return r;
}

ChowElement ChowElement::operator-() const {
  ChowElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ChowElement& ChowElement::operator+=(const ChowElement& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ChowElement& ChowElement::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) {
  require_same(a, b);
  const GradedAlgebra& alg = a.algebra();
  std::vector<Rational> out(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      const Rational ab = a.coeffs_[i] * b.coeffs_[j];
      const auto& prod = alg.product(i, j);
      for (std::size_t k = 0; k < alg.dim(); ++k)
        if (prod[k] != 0) out[k] += ab * prod[k];
    }
  }
  return ChowElement(a.alg_, std::move(out));
}

bool operator==(const ChowElement& a, const ChowElement& b) {
  return &a.algebra() == &b.algebra() && a.coeffs_ == b.coeffs_;
}

std::string ChowElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << rational_str(mag);
    } else {
      if (mag != 1) os << rational_str(mag) << " ";
      os << alg_->name(i);
    }
  }
  return first ? "0" : os.str();
}

ChowElement exp_nilpotent(const ChowElement& x) {
  if (!x.part(0).is_zero()) throw std::invalid_argument("exp needs a nilpotent argument");
  ChowElement sum = x.algebra().one();
  ChowElement term = sum;
  for (int k = 1; k <= x.algebra().top_degree(); ++k) {
    term = Rational(1, k) * (term * x);
    sum += term;
  }
  return sum;
}

// ---- CxC rings ----

namespace {

using Table = GradedAlgebra::Table;

Table empty_table(std::size_t n) {
  return Table(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
}

// Fill products of the unit.
void unit_rows(Table& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    t[0][i][i] = 1;
    t[i][0][i] = 1;
  }
}

void set_sym(Table& t, std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  t[i][j][k] = c;
  t[j][i][k] = c;
}

// Basis indices.
enum Sym : std::size_t { S1, W1, W2, DL, W12, DW, DD, SDIM };
enum Num : std::size_t { N1, F1, F2, DT, PT, NDIM };

}  // namespace

CxCRing CxCRing::make_symbolic() {
  static const AlgebraPtr alg = [] {
    Table t = empty_table(SDIM);
    unit_rows(t);
    set_sym(t, W1, W2, W12, 1);
    set_sym(t, W1, DL, DW, 1);
    set_sym(t, W2, DL, DW, 1);
    set_sym(t, DL, DL, DD, 1);
    return GradedAlgebra::create({"1", "w1", "w2", "Delta", "w1.w2", "Delta_*w", "Delta.Delta"},
                                 {0, 1, 1, 1, 2, 2, 2}, std::move(t));
  }();
  return CxCRing{alg, true, 0, 0, alg->basis(W1), alg->basis(W2), alg->basis(DL)};
}

CxCRing CxCRing::make_numeric(const Integer& d, const Integer& g) {
  if (d < 1 || g < 0) throw std::invalid_argument("need d >= 1 and g >= 0");
  Table t = empty_table(NDIM);
  unit_rows(t);
  set_sym(t, F1, F2, PT, 1);
  set_sym(t, DT, F1, PT, 1);
  set_sym(t, DT, F2, PT, 1);
  set_sym(t, DT, DT, PT, Rational(2 - 2 * g));
  AlgebraPtr alg =
      GradedAlgebra::create({"1", "f1", "f2", "delta", "pt"}, {0, 1, 1, 1, 2}, std::move(t));
  return CxCRing{alg, false, d, g, Rational(d) * alg->basis(F1), Rational(d) * alg->basis(F2),
                 alg->basis(DT)};
}

Rational CxCRing::degree(const ChowElement& top) const {
  if (symbolic) throw std::logic_error("degree needs the numeric ring");
  return top[PT];
}

ChowElement evaluate(const ChowElement& x, const CxCRing& numeric) {
  if (x.algebra().dim() != SDIM || numeric.symbolic)
    throw std::invalid_argument("evaluate maps the symbolic ring to a numeric ring");
  const auto& alg = *numeric.algebra;
  const Rational d(numeric.d);
  const ChowElement images[SDIM] = {
      alg.one(),
      numeric.omega1,
      numeric.omega2,
      numeric.delta,
      d * d * alg.basis(PT),
      d * alg.basis(PT),
      Rational(2 - 2 * numeric.g) * alg.basis(PT),
  };
  ChowElement out = alg.zero();
  for (std::size_t i = 0; i < SDIM; ++i)
    if (x[i] != 0) out += x[i] * images[i];
  return out;
}

TotalChern<ChowElement> chern_S(const CxCRing& r) {
  const ChowElement one = r.algebra->one();
  ChowElement c1 = -r.omega1 - r.omega2 + r.delta;
  ChowElement c2 = r.omega1 * r.omega2 - r.delta * r.omega1;
  return {{one, c1, c2}};
}

TotalChern<ChowElement> chern_S(long d, long g) { return chern_S(CxCRing::make_numeric(d, g)); }

// ---- P(S) ----

BundleElement::BundleElement(const ProjectiveBundle* bundle, ChowElement a, ChowElement b)
    : bundle_(bundle), a_(std::move(a)), b_(std::move(b)) {}

BundleElement BundleElement::operator-() const { return BundleElement(bundle_, -a_, -b_); }

BundleElement& BundleElement::operator+=(const BundleElement& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

BundleElement& BundleElement::operator-=(const BundleElement& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

BundleElement& BundleElement::operator*=(const Rational& k) {
  a_ *= k;
  b_ *= k;
  return *this;
}

BundleElement operator*(const BundleElement& x, const BundleElement& y) {
  if (x.bundle_ != y.bundle_) throw std::invalid_argument("elements of different bundles");
  const ProjectiveBundle& p = *x.bundle_;
  // (a1 + b1 e)(a2 + b2 e) with e^2 = -c1 e - c2.
  ChowElement bb = x.b_ * y.b_;
  ChowElement a = x.a_ * y.a_ - bb * p.c2S();
  ChowElement b = x.a_ * y.b_ + y.a_ * x.b_ - bb * p.c1S();
  return BundleElement(x.bundle_, std::move(a), std::move(b));
}

bool operator==(const BundleElement& x, const BundleElement& y) {
  return x.bundle_ == y.bundle_ && x.a_ == y.a_ && x.b_ == y.b_;
}

BundleElement BundleElement::part(int k) const {
  return BundleElement(bundle_, a_.part(k), b_.part(k - 1));
}

std::string BundleElement::to_string() const {
  return "(" + a_.to_string() + ") + (" + b_.to_string() + ") eta";
}

ProjectiveBundle::ProjectiveBundle(const CxCRing& ring)
    : ring_(ring), c1S_(chern_S(ring).parts[1]), c2S_(chern_S(ring).parts[2]) {}

BundleElement ProjectiveBundle::eta() const {
  return BundleElement(this, ring_.algebra->zero(), ring_.algebra->one());
}

BundleElement ProjectiveBundle::pullback(const ChowElement& a) const {
  return BundleElement(this, a, ring_.algebra->zero());
}

BundleElement ProjectiveBundle::c1_relative_tangent() const {
  return Rational(2) * eta() + pullback(c1S_);
}

BundleElement exp_nilpotent(const BundleElement& x) {
  if (!x.part(0).is_zero()) throw std::invalid_argument("exp needs a nilpotent argument");
  const ProjectiveBundle& p = x.bundle();
  const int top = p.ring().algebra->top_degree() + 1;
  BundleElement sum = p.one();
  BundleElement term = sum;
  for (int k = 1; k <= top; ++k) {
    term = Rational(1, k) * (term * x);
    sum += term;
  }
  return sum;
}

BundleElement todd_line(const BundleElement& x) {
  const ProjectiveBundle& p = x.bundle();
  BundleElement x2 = x * x;
  return p.one() + Rational(1, 2) * x + Rational(1, 12) * x2 - Rational(1, 720) * (x2 * x2);
}

IdealClasses chern_ideals(const ProjectiveBundle& p) {
  const CxCRing& r = p.ring();
  const BundleElement one = p.one();
  const BundleElement eta = p.eta();
  BundleElement c1I1 = -eta + p.pullback(r.omega2 - r.delta);
  BundleElement c1I2 = -eta + p.pullback(r.omega1 - r.delta);
  BundleElement c1ID = Rational(-3) * eta;
  return {{{one, c1I1}}, {{one, c1I2}}, {{one, c1ID}}};
}

GrrResult grr_pushforward(const CxCRing& ring) {
  ProjectiveBundle p(ring);
  IdealClasses ideals = chern_ideals(p);
  // All three sheaves have rank one and no c2, so ch(F) = exp(c1(F)) with
  // c1(F) = -c1(I_D) + c1(I_1) + c1(I_2).
  BundleElement c1F = -ideals.cID.parts[1] + ideals.cI1.parts[1] + ideals.cI2.parts[1];
  BundleElement integrand = exp_nilpotent(c1F) * todd_line(p.c1_relative_tangent());
  ChowElement chE = p.pushforward(integrand);
  GrrResult out{chE.part(0), chE.part(1), chE.part(2), ring.algebra->zero()};
  out.c2 = Rational(1, 2) * (out.c1 * out.c1 - Rational(2) * out.ch2);
  return out;
}

ChowElement grr_c2E(const CxCRing& ring) { return grr_pushforward(ring).c2; }

ChowElement expected_c2E_symbolic() {
  const CxCRing r = CxCRing::make_symbolic();
  const auto& alg = *r.algebra;
  return Rational(5) * alg.basis(W12) - Rational(15) * alg.basis(DW) + Rational(6) * alg.basis(DD);
}

Integer b_closed_form(long d, long g) {
  Integer D = d;
  return 5 * D * (D - 3) / 2 + 6 - 6 * Integer(g);
}

BValue b_of_C(long d, long g) {
  CxCRing ring = CxCRing::make_numeric(d, g);
  ChowElement c2 = grr_c2E(ring);
  Rational deg = ring.degree(c2);
  if (denominator(deg) != 1 || numerator(deg) % 2 != 0)
    throw std::logic_error("c2(E) is not an even integer");
  Integer value = numerator(deg) / 2;
  Integer closed = b_closed_form(d, g);
  if (value != closed) throw std::logic_error("GRR value disagrees with the closed form");
  return {value, closed, value >= 0};
}

}  // namespace cubictk
