#include "siegel/grouptheory.hpp"

#include "siegel/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace siegel {

Weight Weight::unit(int d, int i) {
  if (i < 1 || i > d) throw ValidationError("unit weight index out of range");
  Weight w = zero(d);
  w.a[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Weight Weight::operator+(const Weight& o) const {
  if (o.a.size() != a.size()) throw ValidationError("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
  out.m0 += o.m0;
  return out;
}

Weight Weight::operator-(const Weight& o) const { return *this + o * -1; }

Weight Weight::operator*(Int k) const {
  Weight out = *this;
  for (auto& x : out.a) x *= k;
  out.m0 *= k;
  return out;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ';' << m0 << ')';
  return os.str();
}

ParabolicSet ParabolicSet::make(int d, std::vector<int> indices) {
  if (d < 1) throw ValidationError("genus must be >= 1");
  if (indices.empty()) throw ValidationError("parabolic index set must be non-empty");
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw ValidationError("duplicate parabolic index");
  if (indices.front() < 0 || indices.back() > d - 1)
    throw ValidationError("parabolic index out of range {0.." + std::to_string(d - 1) + "}");
  return ParabolicSet(d, std::move(indices));
}

bool ParabolicSet::contains(int s) const {
  return std::binary_search(indices_.begin(), indices_.end(), s);
}

std::string ParabolicSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) os << (i ? "," : "") << indices_[i];
  os << '}';
  return os.str();
}

LeviShape levi_shape(const ParabolicSet& S) {
  const int d = S.d();
  const int r = S.r();
  // Block boundaries sit after coordinate d − s for every s in S other than r.
  std::vector<int> cuts;
  for (int s : S.indices())
    if (s != r) cuts.push_back(d - s);
  std::sort(cuts.begin(), cuts.end());
  LeviShape shape;
  int prev = 0;
  for (int c : cuts) {
    shape.glBlocks.push_back(c - prev);
    prev = c;
  }
  shape.glBlocks.push_back(d - r - prev);
  shape.sympRank = r;
  return shape;
}

WeylElt WeylElt::identity(int d) {
  WeylElt w;
  w.perm.resize(static_cast<std::size_t>(d));
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.flips.assign(static_cast<std::size_t>(d), 0);
  return w;
}

Weight WeylElt::apply(const Weight& mu) const {
  if (mu.rank() != rank()) throw ValidationError("weight rank mismatch in Weyl action");
  Weight out = mu;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const Int v = mu.a[i];
    out.a[static_cast<std::size_t>(perm[i])] = flips[i] ? -v : v;
    if (flips[i]) out.m0 += v;
  }
  return out;
}

std::vector<Weight> positive_roots(int d) {
  std::vector<Weight> roots;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) roots.push_back(Weight::unit(d, i) - Weight::unit(d, j));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      roots.push_back(Weight::unit(d, i) + Weight::unit(d, j) - Weight::similitude_char(d));
  for (int i = 1; i <= d; ++i)
    roots.push_back(Weight::unit(d, i) * 2 - Weight::similitude_char(d));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Weight> simple_roots(int d) {
  std::vector<Weight> out;
  for (int k = 1; k < d; ++k) out.push_back(Weight::unit(d, k) - Weight::unit(d, k + 1));
  out.push_back(Weight::unit(d, d) * 2 - Weight::similitude_char(d));
  return out;
}

std::vector<Int> simple_root_coefficients(const Weight& root) {
  const int d = root.rank();
  std::vector<Int> c(static_cast<std::size_t>(d));
  Int partial = 0;
  for (int k = 1; k < d; ++k) {
    partial += root.a[static_cast<std::size_t>(k - 1)];
    c[static_cast<std::size_t>(k - 1)] = partial;
  }
  c[static_cast<std::size_t>(d - 1)] = -root.m0;
  return c;
}

bool is_positive_root(const Weight& root) {
  const auto c = simple_root_coefficients(root);
  bool nonzero = false;
  for (Int x : c) {
    if (x < 0) return false;
    nonzero |= x != 0;
  }
  return nonzero;
}

int coxeter_length(const WeylElt& w) {
  int len = 0;
  for (const auto& beta : positive_roots(w.rank()))
    if (!is_positive_root(w.apply(beta))) ++len;
  return len;
}

WeylElt compose(const WeylElt& x, const WeylElt& y) {
  if (x.rank() != y.rank()) throw ValidationError("Weyl element rank mismatch");
  WeylElt out = WeylElt::identity(x.rank());
  for (std::size_t i = 0; i < y.perm.size(); ++i) {
    const auto j = static_cast<std::size_t>(y.perm[i]);
    out.perm[i] = x.perm[j];
    out.flips[i] = static_cast<char>(y.flips[i] != x.flips[j]);
  }
  out.length = coxeter_length(out);
  return out;
}

WeylElt inverse(const WeylElt& w) {
  WeylElt out = WeylElt::identity(w.rank());
  for (std::size_t i = 0; i < w.perm.size(); ++i) {
    const auto j = static_cast<std::size_t>(w.perm[i]);
    out.perm[j] = static_cast<int>(i);
    out.flips[j] = w.flips[i];
  }
  out.length = w.length;
  return out;
}

WeylElt simple_reflection(int d, int k) {
  if (k < 1 || k > d) throw ValidationError("simple reflection index out of range");
  WeylElt w = WeylElt::identity(d);
  if (k < d) {
    std::swap(w.perm[static_cast<std::size_t>(k - 1)], w.perm[static_cast<std::size_t>(k)]);
  } else {
    w.flips[static_cast<std::size_t>(d - 1)] = 1;
  }
  w.length = 1;
  return w;
}

namespace {

bool by_length(const WeylElt& x, const WeylElt& y) {
  if (x.length != y.length) return x.length < y.length;
  return x < y;
}

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<WeylElt> weyl_group(int d) {
  if (d < 1) throw ValidationError("genus must be >= 1");
  std::vector<WeylElt> out;
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      WeylElt w;
      w.perm = perm;
      w.flips.resize(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) w.flips[static_cast<std::size_t>(i)] = static_cast<char>((mask >> i) & 1u);
      w.length = coxeter_length(w);
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), by_length);
  return out;
}

GroupContext build_context(int d, Int n, int maxGenus) {
  if (d < 1) throw ValidationError("genus d must be >= 1");
  if (n < 3) throw ValidationError("level n must be >= 3 (got " + std::to_string(n) + ")");
  if (d > maxGenus)
    throw ScopeError("genus " + std::to_string(d) + " exceeds the Weyl group storage limit " +
                     std::to_string(maxGenus));
  GroupContext ctx;
  ctx.d = d;
  ctx.n = n;
  ctx.positiveRoots = positive_roots(d);
  ctx.simpleRoots = simple_roots(d);
  ctx.rho = Weight::zero(d);
  for (int i = 0; i < d; ++i) ctx.rho.a[static_cast<std::size_t>(i)] = d - i;
  ctx.weylOrder = (Int{1} << d) * factorial(d);
  ctx.dimG = 2 * static_cast<Int>(ctx.positiveRoots.size()) + (d + 1);
  for (int r = 0; r <= d; ++r) ctx.stratumDims.push_back(Int{d - r} * (d + 1 - r) / 2);
  ctx.c = ctx.stratumDims.front();
  ctx.weyl = weyl_group(d);
  return ctx;
}

namespace {

void check_genus(const GroupContext& ctx, const ParabolicSet& S) {
  if (S.d() != ctx.d) throw ValidationError("parabolic set genus does not match context");
}

std::vector<int> levi_simple_indices(const ParabolicSet& S) {
  const int d = S.d();
  std::vector<int> out;
  for (int k = 1; k <= d; ++k)
    if (!S.contains(d - k)) out.push_back(k);
  return out;
}

}  // namespace

ParabolicData parabolic_data(const GroupContext& ctx, const ParabolicSet& S) {
  check_genus(ctx, S);
  const int d = ctx.d;
  const int r = S.r();
  const LeviShape shape = levi_shape(S);
  ParabolicData pd{S, shape.glBlocks, shape.sympRank, levi_simple_indices(S), {}, {}, {}, 0, 0};

  std::vector<char> removed(static_cast<std::size_t>(d + 1), 1);
  for (int k : pd.leviSimple) removed[static_cast<std::size_t>(k)] = 0;

  for (const auto& beta : ctx.positiveRoots) {
    const auto coeff = simple_root_coefficients(beta);
    bool inLevi = true;
    for (int k = 1; k <= d; ++k)
      if (removed[static_cast<std::size_t>(k)] && coeff[static_cast<std::size_t>(k - 1)] != 0) inLevi = false;
    (inLevi ? pd.leviRoots : pd.nRoots).push_back(beta);
  }
  // U_r is the upper-right (d−r)×(d−r) block: roots e_i + e_j − e_0 with i, j <= d − r.
  for (const auto& beta : ctx.positiveRoots) {
    if (beta.m0 != -1) continue;
    bool inside = true;
    for (int i = d - r; i < d; ++i)
      if (beta.a[static_cast<std::size_t>(i)] != 0) inside = false;
    if (inside) pd.uRoots.push_back(beta);
  }
  pd.dimN = static_cast<Int>(pd.nRoots.size());
  pd.dimU = static_cast<Int>(pd.uRoots.size());
  return pd;
}

std::vector<WeylElt> kostant_reps(const GroupContext& ctx, const ParabolicSet& S) {
  check_genus(ctx, S);
  std::vector<Weight> leviSimple;
  for (int k : levi_simple_indices(S)) leviSimple.push_back(ctx.simpleRoots[static_cast<std::size_t>(k - 1)]);
  std::vector<WeylElt> out;
  for (const auto& w : ctx.weyl) {
    const WeylElt winv = inverse(w);
    const bool keep = std::all_of(leviSimple.begin(), leviSimple.end(),
                                  [&](const Weight& alpha) { return is_positive_root(winv.apply(alpha)); });
    if (keep) out.push_back(w);
  }
  return out;
}

Int levi_weyl_order(const LeviShape& shape) {
  Int order = (Int{1} << shape.sympRank) * factorial(shape.sympRank);
  for (int b : shape.glBlocks) order *= factorial(b);
  return order;
}

}  // namespace siegel
