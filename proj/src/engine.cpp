#include "siegel/engine.hpp"

#include "siegel/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace siegel {

void SymbolicClass::add(const BigInt& coefficient, const GradedVirtualRep& module) {
  if (coefficient == 0 || module.empty()) return;
  terms_.push_back({coefficient, module});
  canonicalize();
}

void SymbolicClass::add(const SymbolicClass& other, const BigInt& scale) {
  if (scale == 0) return;
  for (const auto& t : other.terms_)
    if (!t.module.empty()) terms_.push_back({t.coefficient * scale, t.module});
  canonicalize();
}

void SymbolicClass::canonicalize() {
  std::map<ParabolicSet, std::map<std::pair<int, Weight>, BigInt>> bySet;
  for (const auto& t : terms_)
    for (const auto& s : t.module.summands()) bySet[t.module.parabolic()][{s.degree, s.weight}] += t.coefficient * s.mult;

  std::vector<Term> out;
  for (const auto& [S, entries] : bySet) {
    BigInt content = 0;
    for (const auto& [key, mult] : entries)
      if (mult != 0) content = gcd(content, abs(mult));
    if (content == 0) continue;
    const BigInt first = std::find_if(entries.begin(), entries.end(), [](const auto& e) { return e.second != 0; })->second;
    if (first < 0) content = -content;
    GradedVirtualRep module(S);
    for (const auto& [key, mult] : entries) {
      if (mult == 0) continue;
      const BigInt q = mult / content;
      if (q > BigInt(std::numeric_limits<Int>::max()) || q < BigInt(std::numeric_limits<Int>::min()))
        throw ScopeError("multiplicity exceeds 64 bits");
      module.add(key.first, key.second, static_cast<Int>(q));
    }
    out.push_back({content, std::move(module)});
  }
  terms_ = std::move(out);
}

bool operator==(const SymbolicClass& x, const SymbolicClass& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i)
    if (x.terms_[i].coefficient != y.terms_[i].coefficient || !(x.terms_[i].module == y.terms_[i].module)) return false;
  return true;
}

Chain::Chain(std::vector<ChainLink> links) : links_(std::move(links)) {
  for (std::size_t i = 1; i < links_.size(); ++i)
    if (links_[i].r >= links_[i - 1].r) throw ValidationError("chain indices must strictly decrease");
}

Threshold Chain::threshold(std::size_t i) const {
  const auto& l = links_.at(i);
  return -l.a + Int(l.r) * (l.r + 1) / 2;
}

Chain Chain::parse(const std::string& text) {
  std::vector<ChainLink> links;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("chain entries are written r:a, got '" + item + "'");
    const Int r = parse_int_list(item.substr(0, colon)).at(0);
    links.push_back({static_cast<int>(r), Threshold::parse(item.substr(colon + 1))});
  }
  return Chain(std::move(links));
}

std::string Chain::to_string() const {
  std::string out;
  for (const auto& l : links_) {
    if (!out.empty()) out += ',';
    out += std::to_string(l.r) + ":" + l.a.to_string();
  }
  return out;
}

SymbolicClass chain_term(const GroupContext& ctx, const Chain& chain, int r, const Weight& lambda) {
  if (r < 0 || r >= ctx.d) throw ValidationError("stratum index out of range");
  std::vector<int> indices{r};
  std::vector<TruncationCondition> conds;
  for (std::size_t i = 0; i < chain.links().size(); ++i) {
    const int ri = chain.links()[i].r;
    if (ri < r) throw ValidationError("stratum index must not exceed min(chain)");
    if (ri >= ctx.d) throw ValidationError("chain index out of range");
    if (ri != r) indices.push_back(ri);
    conds.push_back({ri, chain.threshold(i), TruncMode::Below});
  }
  const ParabolicSet S = ParabolicSet::make(ctx.d, indices);
  SymbolicClass out;
  out.add(double_coset_count(ctx, r, S), truncate(lie_n_cohomology(ctx, S, lambda), conds));
  return out;
}

namespace {

void check_profile(const GroupContext& ctx, const Profile& profile, int r) {
  if (static_cast<int>(profile.size()) != ctx.d)
    throw ValidationError("profile needs exactly d = " + std::to_string(ctx.d) + " thresholds");
  if (r < 0 || r >= ctx.d) throw ValidationError("stratum index out of range");
}

// Subsets S with r ∈ S ⊆ {r..d−1}, in increasing order of their bitmask.
std::vector<ParabolicSet> sets_through(int d, int r) {
  std::vector<ParabolicSet> out;
  const int free = d - 1 - r;
  for (unsigned mask = 0; mask < (1u << free); ++mask) {
    std::vector<int> idx{r};
    for (int b = 0; b < free; ++b)
      if (mask & (1u << b)) idx.push_back(r + 1 + b);
    out.push_back(ParabolicSet::make(d, idx));
  }
  return out;
}

}  // namespace

Int purity_weight(std::span<const GradedWeight> V) {
  if (V.empty()) throw ValidationError("empty representation has no weight");
  const Int m = central_weight(V.front().highest);
  for (const auto& x : V)
    if (central_weight(x.highest) != m) throw ValidationError("weighted complexes need V pure of a single weight");
  return m;
}

SymbolicClass restrict_weighted(const GroupContext& ctx, const Profile& profile, std::span<const GradedWeight> V,
                                int r) {
  check_profile(ctx, profile, r);
  SymbolicClass out;
  if (V.empty()) return out;
  const Int m = purity_weight(V);
  for (const auto& S : sets_through(ctx.d, r)) {
    std::vector<TruncationCondition> conds{{r, profile[static_cast<std::size_t>(r)] + m, TruncMode::AtLeast}};
    for (int s : S.indices())
      if (s != r) conds.push_back({s, profile[static_cast<std::size_t>(s)] + m, TruncMode::Below});
    const BigInt sign = S.size() % 2 == 1 ? 1 : -1;
    out.add(sign * double_coset_count(ctx, r, S), truncate(lie_n_cohomology(ctx, S, V), conds));
  }
  return out;
}

SymbolicClass restrict_weighted(const GroupContext& ctx, const Profile& profile, const Weight& lambda, int r) {
  const GradedWeight V[] = {{0, lambda, 1}};
  return restrict_weighted(ctx, profile, V, r);
}

std::pair<SymbolicClass, SymbolicClass> restrict_ic(const GroupContext& ctx, const Weight& lambda, int r) {
  const IcProfiles p = ic_profiles(ctx.d);
  return {restrict_weighted(ctx, p.t, lambda, r), restrict_weighted(ctx, p.s, lambda, r)};
}

std::vector<ExpansionTerm> expansion_terms(int n) {
  if (n < 0) throw ValidationError("number of strata must be >= 0");
  if (n > 20) throw ScopeError("expansion over more than 20 strata");
  std::vector<ExpansionTerm> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ExpansionTerm t;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) t.chain.push_back(b + 1);
    t.sign = t.chain.size() % 2 == 0 ? 1 : -1;
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const ExpansionTerm& x, const ExpansionTerm& y) {
    if (x.chain.size() != y.chain.size()) return x.chain.size() < y.chain.size();
    return x.chain < y.chain;
  });
  return out;
}

SymbolicClass assemble_from_chains(const GroupContext& ctx, const Profile& profile, const Weight& lambda, int r) {
  check_profile(ctx, profile, r);
  const Int m = central_weight(lambda);
  SymbolicClass out;
  for (const auto& term : expansion_terms(ctx.d)) {
    std::vector<int> strata;
    for (int k : term.chain) strata.push_back(ctx.d - k);
    if (std::any_of(strata.begin(), strata.end(), [&](int s) { return s < r; })) continue;
    std::sort(strata.rbegin(), strata.rend());
    std::vector<ChainLink> links;
    for (int s : strata) links.push_back({s, -(profile[static_cast<std::size_t>(s)] + m) + Int(s) * (s + 1) / 2});
    out.add(chain_term(ctx, Chain(std::move(links)), r, lambda), term.sign);
  }
  return out;
}

ExactRational euler_evaluate(const SymbolicClass& cls, const GroupContext& ctx) {
  ExactRational total = 0;
  for (const auto& t : cls.terms()) {
    ExactRational factor = ExactRational(t.coefficient);
    for (int b : t.module.shape().glBlocks) factor *= euler_char_congruence(b, ctx.n);
    if (factor == 0) continue;
    BigInt chi = 0;
    for (const auto& s : t.module.summands()) {
      const BigInt dim = weyl_dim(to_levi_weight(t.module.shape(), s.weight));
      chi += (s.degree % 2 == 0 ? dim : BigInt(-dim)) * s.mult;
    }
    total += factor * ExactRational(chi);
  }
  return total;
}

std::vector<ReportRow> graded_report(const SymbolicClass& cls) {
  std::vector<ReportRow> rows;
  for (const auto& t : cls.terms())
    for (const auto& s : t.module.summands()) {
      ReportRow row;
      row.S = t.module.parabolic().to_string();
      row.degree = s.degree;
      row.weight = to_levi_weight(t.module.shape(), s.weight).to_string();
      row.mult = t.coefficient * s.mult;
      row.centralWeight = central_weight(s.weight);
      row.sheafWeight = -row.centralWeight;
      row.pairings = t.module.pairings(s);
      rows.push_back(std::move(row));
    }
  return rows;
}

Profile parse_profile(const std::string& text, int d) {
  Profile p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(Threshold::parse(item));
  if (static_cast<int>(p.size()) != d)
    throw ValidationError("profile needs exactly d = " + std::to_string(d) + " thresholds");
  return p;
}

}  // namespace siegel
