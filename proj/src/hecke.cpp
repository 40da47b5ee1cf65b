#include "siegel/hecke.hpp"

#include "siegel/errors.hpp"

#include <sstream>

namespace siegel {

namespace {

void check_levels(Int n, Int m) {
  if (n < 3 || m < 3) throw ValidationError("levels must be >= 3");
  if (m % n != 0) throw ValidationError("level " + std::to_string(n) + " does not divide " + std::to_string(m));
}

}  // namespace

void validate(const HeckeDatum& datum) {
  check_levels(datum.n, datum.m);
  const int size = 2 * datum.d;
  if (datum.g.rows() != size || datum.g.cols() != size || datum.g.modulus() != datum.m)
    throw ValidationError("Hecke element must be a " + std::to_string(size) + "x" + std::to_string(size) +
                          " matrix mod " + std::to_string(datum.m));
  const auto c = similitude_factor(datum.g);
  if (!c) throw ValidationError("Hecke element is not a symplectic similitude");
  if (!is_unit(*c, datum.m)) throw ValidationError("Hecke element is not invertible mod m");
}

ModMatrix parse_hecke_element(const std::string& text, int d, Int m) {
  const int size = 2 * d;
  if (text.empty() || text == "identity") return ModMatrix::identity(size, m);
  if (text.find('/') != std::string::npos || text.find('.') != std::string::npos)
    throw ScopeError("Hecke elements must be integral (components outside the integral adeles are not supported)");
  std::vector<Int> entries;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    const auto values = parse_int_list(row);
    if (static_cast<int>(values.size()) != size) throw ValidationError("Hecke element rows need " + std::to_string(size) + " entries");
    entries.insert(entries.end(), values.begin(), values.end());
  }
  if (static_cast<int>(entries.size()) != size * size) throw ValidationError("Hecke element needs " + std::to_string(size) + " rows");
  return ModMatrix::from_entries(size, size, m, entries);
}

BigInt hecke_index(const GroupContext& ctx, const ParabolicSet& S, Int m) {
  check_levels(ctx.n, m);
  const ParabolicData pd = parabolic_data(ctx, S);
  BigInt index = ipow(BigInt(m / ctx.n), static_cast<unsigned>(pd.dimN));
  for (int b : pd.leviBlocks) index *= congruence_index(GroupKind::sl(b), ctx.n, m);
  return index;
}

BigInt transfer_degree(int d, Int n, Int m) {
  check_levels(n, m);
  return congruence_index(GroupKind::gsp(d), n, m);
}

BigInt boundary_fiber_count(const GroupContext& ctx, int r, Int m) {
  const BigInt degree = transfer_degree(ctx.d, ctx.n, m);
  const BigInt index = hecke_index(ctx, ParabolicSet::maximal(ctx.d, r), m);
  if (degree % index != 0) throw ValidationError("transfer degree is not divisible by the Hecke index");
  return degree / index;
}

HeckeMatrix hecke_matrix_structure(const HeckeDatum& datum, const ParabolicSet& S, bool annotate,
                                   const EnumerationOptions& opts) {
  validate(datum);
  const GroupContext ctxN = build_context(datum.d, datum.n);
  const GroupContext ctxM = build_context(datum.d, datum.m);
  const auto Gn = brute_force_group(GroupKind::gsp(datum.d), datum.n, opts);
  const auto Gm = brute_force_group(GroupKind::gsp(datum.d), datum.m, opts);
  const auto Hn = subgroup_closure(parabolic_image_generators(ctxN, S, datum.n), opts.cap);
  const auto Hm = subgroup_closure(parabolic_image_generators(ctxM, S, datum.m), opts.cap);
  const auto classesN = right_cosets(Gn, Hn);
  const auto classesM = right_cosets(Gm, Hm);
  const MatrixIndex indexN(Gn);
  const BigInt coefficient = hecke_index(ctxN, S, datum.m);

  auto classN = [&](const ModMatrix& x) {
    const auto i = indexN.find(x.reduce(datum.n));
    if (!i) throw ValidationError("reduction left GSp_2d(Z/n)");
    return classesN.classOf[*i];
  };

  HeckeMatrix out;
  out.levelNClasses = static_cast<Int>(classesN.count());
  out.levelMClasses = static_cast<Int>(classesM.count());
  for (std::size_t c = 0; c < classesM.count(); ++c) {
    const ModMatrix& h = Gm[classesM.representative[c]];
    const ModMatrix hg = h * datum.g;
    const auto c1 = classN(hg);
    const auto c2 = classN(h);
    auto [it, fresh] = out.cells.try_emplace({static_cast<Int>(c1), static_cast<Int>(c2)});
    HeckeCell& cell = it->second;
    cell.count += 1;
    cell.coefficient = coefficient;
    if (fresh && annotate) {
      const ModMatrix& h1 = Gn[classesN.representative[c1]];
      const ModMatrix& h2 = Gn[classesN.representative[c2]];
      const ModMatrix q1 = hg.reduce(datum.n) * gsp_inverse(h1);
      const ModMatrix q2 = h.reduce(datum.n) * gsp_inverse(h2);
      cell.annotation = "h=" + h.to_string() + " h1=" + h1.to_string() + " h2=" + h2.to_string() +
                        " q1=" + q1.to_string() + " q2=" + q2.to_string();
    }
  }
  return out;
}

Int brute_force_hecke_index(int d, const ParabolicSet& S, Int n, Int m, const EnumerationOptions& opts) {
  check_levels(n, m);
  const GroupContext ctx = build_context(d, m);
  const auto image = subgroup_closure(linear_part_generators(ctx, S, m), opts.cap);
  Int count = 0;
  for (const auto& x : image)
    if (x.reduce(n).is_identity()) ++count;
  return count;
}

}  // namespace siegel
