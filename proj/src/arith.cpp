#include "siegel/arith.hpp"

#include "siegel/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace siegel {

std::string GroupKind::to_string() const {
  switch (family) {
    case Family::GL: return "GL(" + std::to_string(param) + ")";
    case Family::SL: return "SL(" + std::to_string(param) + ")";
    case Family::Sp: return "Sp(" + std::to_string(2 * param) + ")";
    case Family::GSp: return "GSp(" + std::to_string(2 * param) + ")";
    case Family::Unipotent: return "N(" + std::to_string(param) + ")";
  }
  return "?";
}

GroupKind GroupKind::parse(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw ValidationError("bad group kind '" + text + "'");
  const std::string name = text.substr(0, open);
  const Int value = parse_int_list(text.substr(open + 1, text.size() - open - 2)).at(0);
  if (value < 0) throw ValidationError("group kind parameter must be >= 0");
  const int v = static_cast<int>(value);
  if (name == "GL") return gl(v);
  if (name == "SL") return sl(v);
  if (name == "N") return unipotent(v);
  if (name == "Sp" || name == "GSp") {
    if (v % 2) throw ValidationError("symplectic groups need an even size");
    return name == "Sp" ? sp(v / 2) : gsp(v / 2);
  }
  throw ValidationError("unknown group family '" + name + "'");
}

namespace {

BigInt gl_prime_power(int k, const BigInt& p, unsigned e) {
  BigInt order = ipow(p, (e - 1) * static_cast<unsigned>(k * k));
  const BigInt pk = ipow(p, static_cast<unsigned>(k));
  for (int i = 0; i < k; ++i) order *= pk - ipow(p, static_cast<unsigned>(i));
  return order;
}

BigInt sp_prime_power(int r, const BigInt& p, unsigned e) {
  BigInt order = ipow(p, (e - 1) * static_cast<unsigned>(2 * r * r + r)) * ipow(p, static_cast<unsigned>(r * r));
  for (int i = 1; i <= r; ++i) order *= ipow(p, static_cast<unsigned>(2 * i)) - 1;
  return order;
}

BigInt units_prime_power(const BigInt& p, unsigned e) { return ipow(p, e - 1) * (p - 1); }

}  // namespace

namespace detail {

BigInt group_order_any(const GroupKind& kind, Int n) {
  if (n < 1) throw ValidationError("level must be >= 1");
  if (kind.param < 0) throw ValidationError("group kind parameter must be >= 0");
  if (kind.family == GroupKind::Family::Unipotent) return ipow(BigInt(n), static_cast<unsigned>(kind.param));
  BigInt order = 1;
  for (auto [prime, e] : factorize(n)) {
    const BigInt p = prime;
    switch (kind.family) {
      case GroupKind::Family::GL: order *= gl_prime_power(kind.param, p, e); break;
      case GroupKind::Family::SL:
        order *= kind.param == 0 ? BigInt(1) : gl_prime_power(kind.param, p, e) / units_prime_power(p, e);
        break;
      case GroupKind::Family::Sp: order *= sp_prime_power(kind.param, p, e); break;
      case GroupKind::Family::GSp: order *= sp_prime_power(kind.param, p, e) * units_prime_power(p, e); break;
      case GroupKind::Family::Unipotent: break;
    }
  }
  return order;
}

}  // namespace detail

BigInt group_order(const GroupKind& kind, Int n) {
  if (n < 2) throw ValidationError("group_order needs n >= 2");
  return detail::group_order_any(kind, n);
}

BigInt congruence_index(const GroupKind& kind, Int n, Int m) {
  if (n < 3) throw ValidationError("congruence_index needs n >= 3");
  if (m % n != 0) throw ValidationError("level " + std::to_string(n) + " does not divide " + std::to_string(m));
  const BigInt big = group_order(kind, m);
  const BigInt small = group_order(kind, n);
  if (big % small != 0) throw ValidationError("group orders do not divide exactly");
  return big / small;
}

BigInt integral_image_order(int k, Int n) {
  if (k < 0) throw ValidationError("block size must be >= 0");
  if (k == 0) return 1;
  const BigInt signs = n <= 2 ? 1 : 2;  // |{±1 mod n}|
  return detail::group_order_any(GroupKind::sl(k), n) * signs;
}

ExactRational bernoulli(int k) {
  if (k < 0) throw ValidationError("Bernoulli index must be >= 0");
  std::vector<ExactRational> B(static_cast<std::size_t>(k + 1));
  B[0] = 1;
  for (int m = 1; m <= k; ++m) {
    ExactRational sum = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      sum += ExactRational(binom) * B[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[static_cast<std::size_t>(m)] = -sum / (m + 1);
  }
  return B[static_cast<std::size_t>(k)];
}

ExactRational zeta_one_minus(int k) {
  if (k < 2) throw ValidationError("zeta_one_minus needs k >= 2");
  return -bernoulli(k) / k;
}

ExactRational euler_char_congruence(int k, Int n) {
  if (k < 1) throw ValidationError("block size must be >= 1");
  if (n < 3) throw ValidationError("Γ(n) is only torsion free for n >= 3");
  ExactRational chi = ExactRational(group_order(GroupKind::sl(k), n));
  for (int i = 2; i <= k; ++i) chi *= zeta_one_minus(i);
  return chi;
}

namespace {

void check_cap(const GroupKind& kind, Int n, const EnumerationOptions& opts) {
  const BigInt order = group_order(kind, n);
  if (order > BigInt(opts.cap))
    throw ScopeError(kind.to_string() + " over Z/" + std::to_string(n) + " has " + order.str() +
                     " elements, above the enumeration cap " + std::to_string(opts.cap));
}

// Runs body(chunk) for chunk in [0, chunks) on up to `threads` workers and
// returns the concatenated, sorted results.
template <class Body>
std::vector<ModMatrix> parallel_collect(std::size_t chunks, unsigned threads, Body body) {
  std::vector<std::vector<ModMatrix>> parts(chunks);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) parts[c] = body(c);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) parts[c] = body(c);
      });
  }
  std::vector<ModMatrix> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> digits(std::uint64_t code, Int n, std::size_t len) {
  std::vector<Int> v(len);
  for (auto& x : v) {
    x = static_cast<Int>(code % static_cast<std::uint64_t>(n));
    code /= static_cast<std::uint64_t>(n);
  }
  return v;
}

std::vector<ModMatrix> enumerate_linear(int k, Int n, bool special, const EnumerationOptions& opts) {
  const BigInt space = ipow(BigInt(n), static_cast<unsigned>(k * k));
  if (space > BigInt(50'000'000)) throw ScopeError("candidate space for brute force exceeds 5e7 matrices");
  const auto total = static_cast<std::uint64_t>(space);
  const std::uint64_t chunk = static_cast<std::uint64_t>(n);
  return parallel_collect(static_cast<std::size_t>(chunk), opts.threads, [&](std::size_t c) {
    std::vector<ModMatrix> found;
    for (std::uint64_t code = c; code < total; code += chunk) {
      const ModMatrix m = ModMatrix::from_entries(k, k, n, digits(code, n, static_cast<std::size_t>(k * k)));
      const Int det = m.determinant();
      if (special ? det == 1 % n : is_unit(det, n)) found.push_back(m);
    }
    return found;
  });
}

// Columns v_0, ..., v_{2r−1} with ω(v_i, v_j) = c·Ω_ij, chosen in order.
std::vector<ModMatrix> enumerate_symplectic(int r, Int n, bool similitudes, const EnumerationOptions& opts) {
  const int k = 2 * r;
  const auto vectors = static_cast<std::size_t>(static_cast<std::uint64_t>(ipow(BigInt(n), static_cast<unsigned>(k))));
  std::vector<std::vector<Int>> pool(vectors);
  for (std::size_t v = 0; v < vectors; ++v) pool[v] = digits(v, n, static_cast<std::size_t>(k));
  auto omega = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    Int s = 0;
    for (int i = 0; i < r; ++i)
      s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - 1 - i)] -
           x[static_cast<std::size_t>(k - 1 - i)] * y[static_cast<std::size_t>(i)];
    s %= n;
    return s < 0 ? s + n : s;
  };
  auto formEntry = [&](int i, int j) -> Int { return j == k - 1 - i ? (i < r ? 1 : -1) : 0; };

  return parallel_collect(vectors, opts.threads, [&](std::size_t first) {
    std::vector<ModMatrix> found;
    std::vector<std::size_t> cols{first};
    Int c = -1;
    // Depth-first search over the remaining columns.
    auto recurse = [&](auto&& self, int j) -> void {
      if (j == k) {
        std::vector<Int> e(static_cast<std::size_t>(k * k));
        for (int col = 0; col < k; ++col)
          for (int row = 0; row < k; ++row)
            e[static_cast<std::size_t>(row * k + col)] = pool[cols[static_cast<std::size_t>(col)]][static_cast<std::size_t>(row)];
        found.push_back(ModMatrix::from_entries(k, k, n, e));
        return;
      }
      for (std::size_t v = 0; v < vectors; ++v) {
        Int cHere = c;
        bool ok = true;
        for (int i = 0; i < j && ok; ++i) {
          const Int w = omega(pool[cols[static_cast<std::size_t>(i)]], pool[v]);
          if (i == k - 1 - j && j >= r && cHere < 0) {
            cHere = w;
            ok = similitudes ? is_unit(w, n) : w == 1 % n;
            continue;
          }
          Int want = (cHere < 0 ? 0 : cHere) * formEntry(i, j) % n;
          if (want < 0) want += n;
          ok = w == want;
        }
        if (!ok) continue;
        const Int saved = c;
        c = cHere;
        cols.push_back(v);
        self(self, j + 1);
        cols.pop_back();
        c = saved;
      }
    };
    recurse(recurse, 1);
    return found;
  });
}

}  // namespace

std::vector<ModMatrix> brute_force_group(const GroupKind& kind, Int n, const EnumerationOptions& opts) {
  check_cap(kind, n, opts);
  const int p = kind.param;
  switch (kind.family) {
    case GroupKind::Family::GL:
    case GroupKind::Family::SL:
      if (p == 0) return {ModMatrix(0, 0, n)};
      return enumerate_linear(p, n, kind.family == GroupKind::Family::SL, opts);
    case GroupKind::Family::Sp:
    case GroupKind::Family::GSp: {
      if (p == 0) {
        if (kind.family == GroupKind::Family::Sp) return {ModMatrix(0, 0, n)};
        std::vector<ModMatrix> units;
        for (Int x = 1; x < n; ++x)
          if (is_unit(x, n)) units.push_back(ModMatrix::from_entries(1, 1, n, {x}));
        return units;
      }
      return enumerate_symplectic(p, n, kind.family == GroupKind::Family::GSp, opts);
    }
    case GroupKind::Family::Unipotent: {
      const auto total = static_cast<std::uint64_t>(ipow(BigInt(n), static_cast<unsigned>(p)));
      std::vector<ModMatrix> out;
      for (std::uint64_t code = 0; code < total; ++code) {
        ModMatrix m = ModMatrix::identity(p + 1, n);
        const auto v = digits(code, n, static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) m.set(0, i + 1, v[static_cast<std::size_t>(i)]);
        out.push_back(std::move(m));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

}  // namespace siegel
