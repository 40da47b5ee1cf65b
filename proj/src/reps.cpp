#include "siegel/reps.hpp"

#include "siegel/errors.hpp"

#include <algorithm>
#include <sstream>

namespace siegel {

Int central_weight(const Weight& mu) {
  Int sum = 2 * mu.m0;
  for (Int x : mu.a) sum += x;
  return sum;
}

Int torus_pairing(const Weight& mu, int s, int d) {
  if (s < 0 || s > d - 1) throw ValidationError("torus index s out of range {0..d-1}");
  if (mu.rank() != d) throw ValidationError("weight rank does not match genus");
  Int sum = 2 * mu.m0;
  for (int i = 1; i <= d; ++i) sum += (i <= d - s ? 2 : 1) * mu.a[static_cast<std::size_t>(i - 1)];
  return sum;
}

Weight dot_action(const WeylElt& w, const Weight& lambda, const Weight& rho) {
  return w.apply(lambda + rho) - rho;
}

bool is_dominant(const Weight& lambda) {
  for (std::size_t i = 0; i + 1 < lambda.a.size(); ++i)
    if (lambda.a[i] < lambda.a[i + 1]) return false;
  return lambda.a.empty() || lambda.a.back() >= 0;
}

std::string LeviWeight::to_string() const {
  std::ostringstream os;
  os << '[';
  auto put = [&](const std::vector<Int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  };
  for (std::size_t b = 0; b < glParts.size(); ++b) {
    if (b) os << '|';
    put(glParts[b]);
  }
  os << '|';
  put(sympPart);
  os << ';' << m0 << ']';
  return os.str();
}

LeviWeight to_levi_weight(const LeviShape& shape, const Weight& mu) {
  int total = shape.sympRank;
  for (int b : shape.glBlocks) total += b;
  if (total != mu.rank()) throw ValidationError("weight rank does not match Levi shape");
  LeviWeight out;
  out.shape = shape;
  out.m0 = mu.m0;
  auto it = mu.a.begin();
  for (int b : shape.glBlocks) {
    out.glParts.emplace_back(it, it + b);
    it += b;
  }
  out.sympPart.assign(it, mu.a.end());
  return out;
}

bool is_levi_dominant(const LeviWeight& mu) {
  for (const auto& part : mu.glParts)
    if (!std::is_sorted(part.rbegin(), part.rend())) return false;
  if (!std::is_sorted(mu.sympPart.rbegin(), mu.sympPart.rend())) return false;
  return mu.sympPart.empty() || mu.sympPart.back() >= 0;
}

BigInt weyl_dim(const LeviWeight& mu) {
  if (!is_levi_dominant(mu)) throw ValidationError("weyl_dim needs a Levi-dominant weight");
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& part : mu.glParts) {
    const Int k = static_cast<Int>(part.size());
    for (Int i = 0; i < k; ++i)
      for (Int j = i + 1; j < k; ++j) {
        num *= part[static_cast<std::size_t>(i)] - part[static_cast<std::size_t>(j)] + (j - i);
        den *= j - i;
      }
  }
  // Type C_r: ρ = (r, ..., 1); coroots e_i ± e_j and e_i.
  const Int r = static_cast<Int>(mu.sympPart.size());
  std::vector<Int> l(static_cast<std::size_t>(r));
  for (Int i = 0; i < r; ++i) l[static_cast<std::size_t>(i)] = mu.sympPart[static_cast<std::size_t>(i)] + (r - i);
  for (Int i = 0; i < r; ++i) {
    const Int rhoI = r - i;
    num *= l[static_cast<std::size_t>(i)];
    den *= rhoI;
    for (Int j = i + 1; j < r; ++j) {
      const Int rhoJ = r - j;
      num *= (l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)]) *
             (l[static_cast<std::size_t>(i)] + l[static_cast<std::size_t>(j)]);
      den *= (rhoI - rhoJ) * (rhoI + rhoJ);
    }
  }
  if (num % den != 0) throw ValidationError("Weyl dimension formula did not divide exactly");
  return num / den;
}

GradedVirtualRep::GradedVirtualRep(ParabolicSet S) : S_(std::move(S)), shape_(levi_shape(S_)) {}

void GradedVirtualRep::add(int degree, const Weight& weight, Int mult) {
  if (weight.rank() != S_.d()) throw ValidationError("summand weight rank does not match genus");
  const Int d = S_.d();
  const Int bound = 2 * (2 * d * d + d + 1);
  if (degree < -bound || degree > bound) throw ValidationError("degree outside sanity bound ±2·dim G");
  if (mult == 0) return;
  auto key = [](const Summand& s) { return std::tie(s.degree, s.weight); };
  Summand probe{degree, weight, mult};
  auto it = std::lower_bound(summands_.begin(), summands_.end(), probe,
                             [&](const Summand& x, const Summand& y) { return key(x) < key(y); });
  if (it != summands_.end() && key(*it) == key(probe)) {
    it->mult += mult;
    if (it->mult == 0) summands_.erase(it);
  } else {
    summands_.insert(it, std::move(probe));
  }
}

void GradedVirtualRep::add(const GradedVirtualRep& other, Int scale) {
  if (!(other.S_ == S_)) throw ValidationError("cannot add modules over different parabolics");
  for (const auto& s : other.summands_) add(s.degree, s.weight, s.mult * scale);
}

std::vector<std::pair<int, Int>> GradedVirtualRep::pairings(const Summand& summand) const {
  std::vector<std::pair<int, Int>> out;
  for (int s : S_.indices()) out.emplace_back(s, torus_pairing(summand.weight, s, S_.d()));
  return out;
}

GradedVirtualRep truncate(const GradedVirtualRep& module, std::span<const TruncationCondition> conds) {
  const int d = module.parabolic().d();
  for (const auto& c : conds)
    if (c.s < 0 || c.s > d - 1) throw ValidationError("truncation index out of range");
  GradedVirtualRep out(module.parabolic());
  for (const auto& summand : module.summands()) {
    const bool keep = std::all_of(conds.begin(), conds.end(), [&](const TruncationCondition& c) {
      const Int p = torus_pairing(summand.weight, c.s, d);
      return c.mode == TruncMode::Below ? c.bound.above(p) : c.bound.at_most(p);
    });
    if (keep) out.add(summand.degree, summand.weight, summand.mult);
  }
  return out;
}

std::pair<std::vector<WeightedRep>, std::vector<WeightedRep>> global_weight_split(
    std::span<const WeightedRep> V, Threshold t) {
  std::pair<std::vector<WeightedRep>, std::vector<WeightedRep>> out;
  for (const auto& rep : V) {
    if (!is_dominant(rep.highest)) throw ValidationError("global_weight_split needs dominant weights");
    (t.above(central_weight(rep.highest)) ? out.first : out.second).push_back(rep);
  }
  return out;
}

}  // namespace siegel
