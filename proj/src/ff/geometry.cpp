#include "cubictk/ff/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cubictk::ff {

BinaryForm form_mul(const FqField& f, const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

Elem form_eval(const FqField& f, const BinaryForm& a, Elem s, Elem t) {
  const std::size_t d = a.size() - 1;
  Elem sum = 0;
  for (std::size_t m = 0; m <= d; ++m)
    if (a[m] != 0) sum = f.add(sum, f.mul(a[m], f.mul(f.pow(s, m), f.pow(t, d - m))));
  return sum;
}

bool form_is_zero(const BinaryForm& a) {
  return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

Vec map_vec(const std::vector<Elem>& table, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = table.at(v[i]);
  return out;
}

// ---- FqLine ----

FqLine::FqLine(FieldPtr field, Matrix rows) : field_(std::move(field)), rows_(std::move(rows)) {
  rref(*field_, rows_);
  if (rows_.size() != 2) throw std::invalid_argument("span is not a line");
}

Vec FqLine::point(Elem s, Elem t) const {
  const FqField& f = *field_;
  Vec p(rows_[0].size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = f.add(f.mul(s, rows_[0][i]), f.mul(t, rows_[1][i]));
  return p;
}

bool FqLine::contains(const Vec& point) const {
  Matrix m = rows_;
  m.push_back(point);
  return rank(*field_, std::move(m)) == 2;
}

// ---- CubicForm ----

const std::vector<std::array<int, 3>>& CubicForm::monomials(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::array<int, 3>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[n];
  if (v.empty()) {
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int k = j; k <= n; ++k) v.push_back({i, j, k});
  }
  return v;
}

CubicForm::CubicForm(FieldPtr field, int n, Vec coeffs)
    : field_(std::move(field)), n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (coeffs_.size() != monomials(n).size())
    throw std::invalid_argument("wrong number of cubic coefficients");
}

CubicForm CubicForm::fermat(FieldPtr field, int n) {
  const auto& mons = monomials(n);
  Vec c(mons.size(), 0);
  for (std::size_t m = 0; m < mons.size(); ++m)
    if (mons[m][0] == mons[m][1] && mons[m][1] == mons[m][2]) c[m] = FqField::one();
  return CubicForm(std::move(field), n, std::move(c));
}

CubicForm CubicForm::parse(FieldPtr field, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::map<std::array<int, 3>, long long> acc;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("cubic form line " + std::to_string(lineno) +
                                    ": bad number '" + tok + "'");
      }
    }
    if (nums.empty()) continue;
    if (nums.size() < 3)
      throw std::invalid_argument("cubic form line " + std::to_string(lineno) + ": too few fields");
    const int vars = static_cast<int>(nums.size()) - 1;
    if (n < 0) n = vars - 1;
    if (vars != n + 1)
      throw std::invalid_argument("cubic form line " + std::to_string(lineno) +
                                  ": inconsistent number of variables");
    long long total = 0;
    for (int v = 0; v < vars; ++v) {
      if (nums[v] < 0)
        throw std::invalid_argument("cubic form line " + std::to_string(lineno) +
                                    ": negative exponent");
      total += nums[v];
    }
    if (total != 3)
      throw std::invalid_argument("cubic form line " + std::to_string(lineno) +
                                  ": exponents must sum to 3");
    std::array<int, 3> mon{};
    int filled = 0;
    for (int v = 0; v < vars; ++v)
      for (long long e = 0; e < nums[v]; ++e) mon[filled++] = v;
    acc[mon] += nums.back();
  }
  if (n < 0) throw std::invalid_argument("cubic form has no monomials");
  const auto& mons = monomials(n);
  Vec c(mons.size(), 0);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    auto it = acc.find(mons[m]);
    if (it != acc.end()) c[m] = field->from_int(it->second);
  }
  CubicForm form(std::move(field), n, std::move(c));
  if (form.is_zero()) throw std::invalid_argument("cubic form is identically zero");
  return form;
}

CubicForm CubicForm::load(FieldPtr field, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(std::move(field), ss.str());
}

std::string CubicForm::to_text() const {
  const auto& mons = monomials(n_);
  std::ostringstream os;
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    std::vector<int> e(n_ + 1, 0);
    for (int v : mons[m]) ++e[v];
    for (int x : e) os << x << ' ';
    if (field_->k() == 1) {
      os << field_->poly_index(coeffs_[m]);
    } else {
      throw std::logic_error("text output supports prime fields only");
    }
    os << '\n';
  }
  return os.str();
}

Elem CubicForm::evaluate(const Vec& x) const {
  const FqField& f = *field_;
  const auto& mons = monomials(n_);
  Elem s = 0;
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    s = f.add(s, f.mul(coeffs_[m], f.mul(x[mons[m][0]], f.mul(x[mons[m][1]], x[mons[m][2]]))));
  }
  return s;
}

Vec CubicForm::gradient(const Vec& x) const {
  const FqField& f = *field_;
  const auto& mons = monomials(n_);
  Vec g(n_ + 1, 0);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    const auto& mon = mons[m];
    // d/dx_v of x_a x_b x_c: one term per position holding v.
    for (int pos = 0; pos < 3; ++pos) {
      const Elem other = f.mul(x[mon[(pos + 1) % 3]], x[mon[(pos + 2) % 3]]);
      g[mon[pos]] = f.add(g[mon[pos]], f.mul(coeffs_[m], other));
    }
  }
  return g;
}

BinaryForm CubicForm::restrict_to_line(const FqLine& line) const {
  const FqField& f = *field_;
  const auto& P = line.rows()[0];
  const auto& Q = line.rows()[1];
  const auto& mons = monomials(n_);
  BinaryForm r(4, 0);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    const Elem c = coeffs_[m];
    if (c == 0) continue;
    // Coordinate i restricted to the line is Q_i t + P_i s.
    const int i = mons[m][0], j = mons[m][1], k = mons[m][2];
    const Elem a0 = Q[i], a1 = P[i], b0 = Q[j], b1 = P[j], c0 = Q[k], c1 = P[k];
    const Elem ab0 = f.mul(a0, b0);
    const Elem ab1 = f.add(f.mul(a0, b1), f.mul(a1, b0));
    const Elem ab2 = f.mul(a1, b1);
    r[0] = f.add(r[0], f.mul(c, f.mul(ab0, c0)));
    r[1] = f.add(r[1], f.mul(c, f.add(f.mul(ab0, c1), f.mul(ab1, c0))));
    r[2] = f.add(r[2], f.mul(c, f.add(f.mul(ab1, c1), f.mul(ab2, c0))));
    r[3] = f.add(r[3], f.mul(c, f.mul(ab2, c1)));
  }
  return r;
}

BinaryForm CubicForm::restrict_to_curve(const RncCurve& c) const {
  if (c.n() != n_) throw std::invalid_argument("curve and form live in different spaces");
  const FqField& f = *field_;
  const auto& mons = monomials(n_);
  const auto& comps = c.components();
  BinaryForm r(3 * c.degree() + 1, 0);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    BinaryForm prod =
        form_mul(f, form_mul(f, comps[mons[m][0]], comps[mons[m][1]]), comps[mons[m][2]]);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(r[i], f.mul(coeffs_[m], prod[i]));
  }
  return r;
}

bool CubicForm::contains_line_by_points(const FqLine& line) const {
  const FqField& f = *field_;
  if (f.q() < 3) {
    FieldPtr super = FqField::make(f.p(), 2 * f.k());
    auto table = embedding(f, *super);
    Matrix rows;
    for (const auto& r : line.rows()) rows.push_back(map_vec(table, r));
    return base_change(super, table).contains_line_by_points(FqLine(super, rows));
  }
  const Elem g = 2;  // generator code, neither 0 nor 1 when q >= 3
  const std::array<std::pair<Elem, Elem>, 4> params = {
      std::pair<Elem, Elem>{1, 0}, {0, 1}, {1, 1}, {g, 1}};
  for (auto [s, t] : params)
    if (evaluate(line.point(s, t)) != 0) return false;
  return true;
}

CubicForm CubicForm::base_change(const FieldPtr& super, const std::vector<Elem>& table) const {
  return CubicForm(super, n_, map_vec(table, coeffs_));
}

// ---- RncCurve ----

RncCurve::RncCurve(FieldPtr field, Matrix components)
    : field_(std::move(field)), comps_(std::move(components)) {
  if (comps_.size() < 2) throw std::invalid_argument("curve needs at least two components");
  for (const auto& c : comps_)
    if (c.size() != comps_[0].size() || c.size() < 2)
      throw std::invalid_argument("components must share a positive degree");
}

RncCurve RncCurve::standard(FieldPtr field, int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  Matrix comps(d + 1, Vec(d + 1, 0));
  for (int i = 0; i <= d; ++i) comps[i][i] = FqField::one();
  return RncCurve(std::move(field), std::move(comps));
}

RncCurve RncCurve::seeded_projection(FieldPtr field, int n, int d, std::uint64_t seed) {
  if (n < 1 || n > d) throw std::invalid_argument("need 1 <= n <= d");
  std::mt19937_64 rng(seed);
  const std::uint32_t q = field->q();
  for (;;) {
    Matrix comps(n + 1, Vec(d + 1));
    for (auto& row : comps)
      for (auto& x : row) x = static_cast<Elem>(rng() % q);
    if (rank(*field, comps) == static_cast<std::size_t>(n + 1))
      return RncCurve(field, std::move(comps));
  }
}

bool RncCurve::nondegenerate() const {
  return rank(*field_, comps_) == comps_.size();
}

Vec RncCurve::point(Elem s, Elem t) const {
  Vec p(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) p[i] = form_eval(*field_, comps_[i], s, t);
  return p;
}

RncCurve RncCurve::base_change(const FieldPtr& super, const std::vector<Elem>& table) const {
  Matrix comps;
  for (const auto& c : comps_) comps.push_back(map_vec(table, c));
  return RncCurve(super, std::move(comps));
}

// ---- spans ----

Matrix divisor_span(const RncCurve& c, const BinaryForm& div) {
  const FqField& f = c.field();
  const int d = c.degree();
  const int e = static_cast<int>(div.size()) - 1;
  if (e < 1 || e > d) throw std::invalid_argument("divisor degree out of range");
  if (form_is_zero(div)) throw std::invalid_argument("zero divisor form");
  // W = div * S_{d-e} inside S_d; its annihilator has dimension e.
  Matrix W;
  for (int j = 0; j <= d - e; ++j) {
    Vec w(d + 1, 0);
    for (int m = 0; m <= e; ++m) w[m + j] = div[m];
    W.push_back(std::move(w));
  }
  Matrix lambdas = nullspace(f, std::move(W), d + 1);
  Matrix M;
  for (const auto& lam : lambdas) {
    Vec row(c.components().size());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = dot(f, lam, c.components()[i]);
    M.push_back(std::move(row));
  }
  rref(f, M);
  return M;
}

FqLine chord_line(const RncCurve& c, const BinaryForm& q) {
  if (q.size() != 3) throw std::invalid_argument("chord needs a binary quadratic");
  Matrix span = divisor_span(c, q);
  if (span.size() != 2) throw std::runtime_error("chord span is not a line (degenerate curve)");
  return FqLine(c.field_ptr(), std::move(span));
}

std::optional<SingularPoint> find_singular_point(const CubicForm& form, int e_max) {
  const FqField& base = form.field();
  const int n = form.n();
  for (int e = 1; e <= e_max; ++e) {
    FieldPtr F = FqField::make(base.p(), base.k() * e);
    std::vector<Elem> table;
    if (e == 1) {
      table.resize(base.q());
      for (Elem a = 0; a < base.q(); ++a) table[a] = a;
    } else {
      table = embedding(base, *F);
    }
    const CubicForm fe = form.base_change(F, table);
    const std::uint64_t Q = F->q();
    Vec pt(n + 1);
    for (int j = 0; j <= n; ++j) {
      std::uint64_t block = 1;
      for (int c = j + 1; c <= n; ++c) block *= Q;
      if (block > kMaxLineCandidates * 10) throw BudgetExceeded("singular-point search too large");
      for (std::uint64_t g = 0; g < block; ++g) {
        std::fill(pt.begin(), pt.end(), 0);
        pt[j] = FqField::one();
        std::uint64_t h = g;
        for (int c = j + 1; c <= n; ++c) {
          pt[c] = static_cast<Elem>(h % Q);
          h /= Q;
        }
        if (fe.evaluate(pt) != 0) continue;
        if (form_is_zero(fe.gradient(pt))) return SingularPoint{e, pt};
      }
    }
  }
  return std::nullopt;
}

// ---- line enumeration ----

std::uint64_t grassmannian_line_count(std::uint64_t q, int n) {
  // sum over pivot pairs i < j of q^((n-i-1) + (n-j)).
  std::uint64_t total = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::uint64_t c = 1;
      for (int e = 0; e < (n - i - 1) + (n - j); ++e) {
        c *= q;
        if (c > (std::uint64_t{1} << 62)) return c;
      }
      total += c;
    }
  return total;
}

namespace {

struct PivotBlock {
  int i, j;
  std::vector<int> free0, free1;
  std::uint64_t start, count;
};

std::vector<PivotBlock> pivot_blocks(std::uint64_t q, int n) {
  std::vector<PivotBlock> blocks;
  std::uint64_t start = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PivotBlock b{i, j, {}, {}, start, 1};
      for (int c = i + 1; c <= n; ++c)
        if (c != j) b.free0.push_back(c);
      for (int c = j + 1; c <= n; ++c) b.free1.push_back(c);
      for (std::size_t e = 0; e < b.free0.size() + b.free1.size(); ++e) b.count *= q;
      start += b.count;
      blocks.push_back(std::move(b));
    }
  return blocks;
}

void scan_range(const CubicForm& form, const std::vector<PivotBlock>& blocks, std::uint64_t lo,
                std::uint64_t hi, std::vector<FqLine>& out) {
  const std::uint64_t q = form.field().q();
  const int n = form.n();
  Matrix rows(2, Vec(n + 1, 0));
  for (const auto& b : blocks) {
    const std::uint64_t from = std::max(lo, b.start), to = std::min(hi, b.start + b.count);
    if (from >= to) continue;
    for (std::uint64_t g = from; g < to; ++g) {
      std::uint64_t local = g - b.start;
      std::fill(rows[0].begin(), rows[0].end(), 0);
      std::fill(rows[1].begin(), rows[1].end(), 0);
      rows[0][b.i] = 1;
      rows[1][b.j] = 1;
      for (int c : b.free0) {
        rows[0][c] = static_cast<Elem>(local % q);
        local /= q;
      }
      for (int c : b.free1) {
        rows[1][c] = static_cast<Elem>(local % q);
        local /= q;
      }
      FqLine line(form.field_ptr(), rows);
      if (form.contains_line(line)) out.push_back(std::move(line));
    }
  }
}

}  // namespace

std::vector<FqLine> lines_in_hypersurface(const CubicForm& form, unsigned threads) {
  const std::uint64_t q = form.field().q();
  const int n = form.n();
  const std::uint64_t total = grassmannian_line_count(q, n);
  if (total > kMaxLineCandidates)
    throw BudgetExceeded("G(1," + std::to_string(n) + ") over F_" + std::to_string(q) + " has " +
                         std::to_string(total) + " lines, above the enumeration budget");
  const auto blocks = pivot_blocks(q, n);
  threads = std::max(1u, threads);
  std::vector<std::vector<FqLine>> parts(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = std::min(total, t * chunk), hi = std::min(total, lo + chunk);
    if (t + 1 == threads)
      scan_range(form, blocks, lo, hi, parts[t]);
    else
      pool.emplace_back(scan_range, std::cref(form), std::cref(blocks), lo, hi, std::ref(parts[t]));
  }
  for (auto& th : pool) th.join();
  std::vector<FqLine> out;
  for (auto& p : parts)
    for (auto& l : p) out.push_back(std::move(l));
  std::sort(out.begin(), out.end());
  return out;
}

Graph line_incidence_graph(const std::vector<FqLine>& lines) {
  Graph g(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Matrix m = lines[i].rows();
      m.insert(m.end(), lines[j].rows().begin(), lines[j].rows().end());
      if (rank(lines[i].field(), m) == 3) g.add_edge(i, j);
    }
  return g;
}

// ---- cubics through a curve ----

namespace {

Matrix restriction_matrix(const RncCurve& c) {
  const FqField& f = c.field();
  const int n = c.n();
  const auto& mons = CubicForm::monomials(n);
  const std::size_t rows = 3 * c.degree() + 1;
  Matrix M(rows, Vec(mons.size(), 0));
  const auto& comps = c.components();
  for (std::size_t m = 0; m < mons.size(); ++m) {
    BinaryForm prod =
        form_mul(f, form_mul(f, comps[mons[m][0]], comps[mons[m][1]]), comps[mons[m][2]]);
    for (std::size_t r = 0; r < rows; ++r) M[r][m] = prod[r];
  }
  return M;
}

}  // namespace

std::size_t cubics_through_curve_dim(const RncCurve& c) {
  const std::size_t cols = CubicForm::monomials(c.n()).size();
  return cols - rank(c.field(), restriction_matrix(c));
}

CubicForm cubic_through_curve(const RncCurve& c, std::uint64_t seed) {
  const FqField& f = c.field();
  const std::size_t cols = CubicForm::monomials(c.n()).size();
  Matrix kernel = nullspace(f, restriction_matrix(c), cols);
  if (kernel.empty()) throw std::runtime_error("no cubic contains the curve");
  std::mt19937_64 rng(seed);
  for (;;) {
    Vec coeffs(cols, 0);
    for (const auto& v : kernel) {
      const Elem a = static_cast<Elem>(rng() % f.q());
      if (a == 0) continue;
      for (std::size_t i = 0; i < cols; ++i) coeffs[i] = f.add(coeffs[i], f.mul(a, v[i]));
    }
    if (form_is_zero(coeffs)) continue;
    CubicForm form(c.field_ptr(), c.n(), std::move(coeffs));
    if (!form_is_zero(form.restrict_to_curve(c)))
      throw std::logic_error("kernel element does not vanish on the curve");
    return form;
  }
}

}  // namespace cubictk::ff
