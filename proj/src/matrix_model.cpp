#include "siegel/matrix_model.hpp"

#include "siegel/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace siegel {

namespace {

Int normalize(Int v, Int n) {
  Int r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

ModMatrix::ModMatrix(int rows, int cols, Int modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), e_(static_cast<std::size_t>(rows * cols), 0) {
  if (modulus < 1) throw ValidationError("modulus must be >= 1");
}

ModMatrix ModMatrix::identity(int k, Int modulus) {
  ModMatrix m(k, k, modulus);
  for (int i = 0; i < k; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::from_entries(int rows, int cols, Int modulus, const std::vector<Int>& entries) {
  if (entries.size() != static_cast<std::size_t>(rows * cols))
    throw ValidationError("matrix needs " + std::to_string(rows * cols) + " entries");
  ModMatrix m(rows, cols, modulus);
  for (std::size_t i = 0; i < entries.size(); ++i) m.e_[i] = normalize(entries[i], modulus);
  return m;
}

void ModMatrix::set(int i, int j, Int value) {
  e_[static_cast<std::size_t>(i * cols_ + j)] = normalize(value, modulus_);
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_ || modulus_ != o.modulus_) throw ValidationError("matrix shape or modulus mismatch");
  ModMatrix out(rows_, o.cols_, modulus_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.e_[static_cast<std::size_t>(i * o.cols_ + j)] += a * o(k, j);
    }
  for (auto& x : out.e_) x %= modulus_;
  return out;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix out(cols_, rows_, modulus_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

ModMatrix ModMatrix::reduce(Int divisor) const {
  if (divisor < 1 || modulus_ % divisor != 0) throw ValidationError("reduction modulus must divide the modulus");
  ModMatrix out(rows_, cols_, divisor);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] % divisor;
  return out;
}

Int ModMatrix::determinant() const {
  if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix");
  // Bareiss elimination over Z on the representatives, then reduce.
  const int k = rows_;
  if (k == 0) return normalize(1, modulus_);
  std::vector<BigInt> m(e_.begin(), e_.end());
  auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i * k + j)]; };
  BigInt prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (at(p, p) == 0) {
      int swap = -1;
      for (int i = p + 1; i < k; ++i)
        if (at(i, p) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < k; ++j) std::swap(at(p, j), at(swap, j));
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j) at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
    prev = at(p, p);
  }
  BigInt det = at(k - 1, k - 1) * sign;
  BigInt r = det % modulus_;
  if (r < 0) r += modulus_;
  return static_cast<Int>(r);
}

bool ModMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != normalize(i == j ? 1 : 0, modulus_)) return false;
  return true;
}

std::uint64_t ModMatrix::encode() const {
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  const auto n = static_cast<std::uint64_t>(modulus_);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    code += static_cast<std::uint64_t>(e_[i]) * scale;
    if (i + 1 < e_.size()) {
      if (scale > limit / n) throw ScopeError("matrix code does not fit in 64 bits");
      scale *= n;
    }
  }
  return code;
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
  }
  return os.str();
}

bool is_unit(Int x, Int n) { return std::gcd(normalize(x, n), n) == 1; }

Int mod_inverse(Int x, Int n) {
  Int a = normalize(x, n), b = n, u = 1, v = 0;
  while (b) {
    const Int q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw ValidationError(std::to_string(x) + " is not a unit mod " + std::to_string(n));
  return normalize(u, n);
}

ModMatrix symplectic_form(int d, Int n) {
  ModMatrix omega(2 * d, 2 * d, n);
  for (int i = 0; i < 2 * d; ++i) omega.set(i, 2 * d - 1 - i, i < d ? 1 : -1);
  return omega;
}

std::optional<Int> similitude_factor(const ModMatrix& g) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0 || g.rows() == 0) return std::nullopt;
  const int d = g.rows() / 2;
  const ModMatrix omega = symplectic_form(d, g.modulus());
  const ModMatrix form = g.transpose() * omega * g;
  const Int c = form(0, 2 * d - 1);
  for (int i = 0; i < 2 * d; ++i)
    for (int j = 0; j < 2 * d; ++j)
      if (form(i, j) != normalize(c * omega(i, j), g.modulus())) return std::nullopt;
  return c;
}

ModMatrix gsp_inverse(const ModMatrix& g) {
  const auto c = similitude_factor(g);
  if (!c || !is_unit(*c, g.modulus())) throw ValidationError("matrix is not an invertible symplectic similitude");
  const Int n = g.modulus();
  const ModMatrix omega = symplectic_form(g.rows() / 2, n);
  ModMatrix out = omega * g.transpose() * omega;
  const Int scale = normalize(-mod_inverse(*c, n), n);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out.set(i, j, out(i, j) * scale);
  return out;
}

namespace {

// Character of the p-th diagonal entry of the torus (0-based p).
Weight diagonal_character(int d, int p) {
  if (p < d) return Weight::unit(d, p + 1);
  return Weight::similitude_char(d) - Weight::unit(d, 2 * d - p);
}

}  // namespace

ModMatrix root_element(int d, const Weight& beta, Int n) {
  if (beta.rank() != d) throw ValidationError("root rank does not match genus");
  std::vector<std::pair<int, int>> slots;
  for (int p = 0; p < 2 * d; ++p)
    for (int q = 0; q < 2 * d; ++q)
      if (p != q && diagonal_character(d, p) - diagonal_character(d, q) == beta) slots.emplace_back(p, q);
  if (slots.empty() || slots.size() > 2) throw ValidationError(beta.to_string() + " is not a root of GSp_2d");
  // Pick the relative sign that puts X in sp_2d: XᵀΩ + ΩX = 0 over Z.
  const int k = 2 * d;
  auto omega = [&](int i, int j) -> Int { return j == k - 1 - i ? (i < d ? 1 : -1) : 0; };
  for (Int sign : {Int{1}, Int{-1}}) {
    if (slots.size() == 1 && sign == -1) break;
    std::vector<Int> x(static_cast<std::size_t>(k * k), 0);
    x[static_cast<std::size_t>(slots[0].first * k + slots[0].second)] = 1;
    if (slots.size() == 2) x[static_cast<std::size_t>(slots[1].first * k + slots[1].second)] = sign;
    auto X = [&](int i, int j) { return x[static_cast<std::size_t>(i * k + j)]; };
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        Int sum = 0;
        for (int l = 0; l < k; ++l) sum += X(l, i) * omega(l, j) + omega(i, l) * X(l, j);
        ok = sum == 0;
      }
    if (ok) {
      ModMatrix g = ModMatrix::identity(k, n);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (X(i, j)) g.set(i, j, X(i, j));
      return g;
    }
  }
  throw ValidationError("no symplectic root vector for " + beta.to_string());
}

ModMatrix torus_element(const std::vector<Int>& t, Int c, Int n) {
  const int d = static_cast<int>(t.size());
  ModMatrix g(2 * d, 2 * d, n);
  for (int i = 0; i < d; ++i) {
    g.set(i, i, t[static_cast<std::size_t>(i)]);
    g.set(2 * d - 1 - i, 2 * d - 1 - i, c * mod_inverse(t[static_cast<std::size_t>(i)], n));
  }
  if (!is_unit(c, n)) throw ValidationError("torus similitude must be a unit");
  return g;
}

std::vector<ModMatrix> subgroup_closure(const std::vector<ModMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw ValidationError("subgroup_closure needs at least one generator");
  const ModMatrix id = ModMatrix::identity(generators.front().rows(), generators.front().modulus());
  std::unordered_set<std::uint64_t> seen{id.encode()};
  std::vector<ModMatrix> out{id};
  std::deque<ModMatrix> queue{id};
  while (!queue.empty()) {
    const ModMatrix g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      ModMatrix h = g * s;
      if (seen.insert(h.encode()).second) {
        if (out.size() >= cap) throw ScopeError("subgroup exceeds enumeration cap " + std::to_string(cap));
        out.push_back(h);
        queue.push_back(std::move(h));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MatrixIndex::MatrixIndex(const std::vector<ModMatrix>& G) {
  sorted_.reserve(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) sorted_.emplace_back(G[i].encode(), i);
  std::sort(sorted_.begin(), sorted_.end());
}

std::optional<std::size_t> MatrixIndex::find(const ModMatrix& g) const {
  const auto code = g.encode();
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(code, std::size_t{0}));
  if (it == sorted_.end() || it->first != code) return std::nullopt;
  return it->second;
}

CosetPartition right_cosets(const std::vector<ModMatrix>& G, const std::vector<ModMatrix>& H) {
  const MatrixIndex index(G);
  constexpr auto unset = static_cast<std::size_t>(-1);
  CosetPartition part;
  part.classOf.assign(G.size(), unset);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (part.classOf[i] != unset) continue;
    const std::size_t id = part.representative.size();
    part.representative.push_back(i);
    for (const auto& h : H) {
      const auto j = index.find(h * G[i]);
      if (!j) throw ValidationError("subgroup element times group element left the group");
      part.classOf[*j] = id;
    }
  }
  return part;
}

std::vector<ModMatrix> parabolic_image_generators(const GroupContext& ctx, const ParabolicSet& S, Int n) {
  const int d = ctx.d;
  const int r = S.r();
  const ParabolicData pd = parabolic_data(ctx, S);
  std::vector<ModMatrix> gens;
  for (const auto& beta : pd.nRoots) gens.push_back(root_element(d, beta, n));
  for (const auto& beta : pd.leviRoots) {
    gens.push_back(root_element(d, beta, n));
    gens.push_back(root_element(d, beta * -1, n));
  }
  int start = 0;
  for (int b : pd.leviBlocks) {
    std::vector<Int> t(static_cast<std::size_t>(d), 1);
    t[static_cast<std::size_t>(start)] = -1;
    gens.push_back(torus_element(t, 1, n));
    start += b;
  }
  for (Int x = 1; x < n; ++x) {
    if (!is_unit(x, n)) continue;
    std::vector<Int> t(static_cast<std::size_t>(d), 1);
    for (int i = 0; i < d - r; ++i) t[static_cast<std::size_t>(i)] = x;
    gens.push_back(torus_element(t, x, n));
  }
  return gens;
}

std::vector<ModMatrix> linear_part_generators(const GroupContext& ctx, const ParabolicSet& S, Int n) {
  const int d = ctx.d;
  const int r = S.r();
  const ParabolicData pd = parabolic_data(ctx, S);
  std::vector<ModMatrix> gens;
  for (const auto& beta : pd.nRoots) gens.push_back(root_element(d, beta, n));
  for (const auto& beta : pd.leviRoots) {
    // Roots of the GL blocks only: no support on the GSp_2r coordinates.
    bool gl = beta.m0 == 0;
    for (int i = d - r; i < d && gl; ++i) gl = beta.a[static_cast<std::size_t>(i)] == 0;
    if (!gl) continue;
    gens.push_back(root_element(d, beta, n));
    gens.push_back(root_element(d, beta * -1, n));
  }
  int start = 0;
  for (int b : pd.leviBlocks) {
    std::vector<Int> t(static_cast<std::size_t>(d), 1);
    t[static_cast<std::size_t>(start)] = -1;
    gens.push_back(torus_element(t, 1, n));
    start += b;
  }
  if (gens.empty()) gens.push_back(ModMatrix::identity(2 * d, n));
  return gens;
}

std::vector<ModMatrix> block_parabolic_generators(const std::vector<int>& blocks, Int n) {
  const int k = std::accumulate(blocks.begin(), blocks.end(), 0);
  std::vector<int> blockOf;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int i = 0; i < blocks[b]; ++i) blockOf.push_back(static_cast<int>(b));
  std::vector<ModMatrix> gens;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      // Entry (i, j) is allowed when j's block is not before i's block.
      if (blockOf[static_cast<std::size_t>(j)] < blockOf[static_cast<std::size_t>(i)]) continue;
      ModMatrix e = ModMatrix::identity(k, n);
      e.set(i, j, 1);
      gens.push_back(e);
    }
  int start = 0;
  for (int b : blocks) {
    ModMatrix s = ModMatrix::identity(k, n);
    s.set(start, start, -1);
    gens.push_back(s);
    start += b;
  }
  return gens;
}

}  // namespace siegel
