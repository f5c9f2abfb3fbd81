#include "vop/recurrence.hpp"

#include <algorithm>

#include "vop/parallel.hpp"

namespace vop {

Rational RecurrenceTable::value(int j, int n) const {
  auto it = gamma.find({j, n});
  return it == gamma.end() ? Rational(0) : it->second;
}

RecurrenceTable extract(const Family& fam, int jobs) {
  if (fam.max_n() < 2) throw InvalidSpec("recurrence extraction needs max_n >= 2");
  RecurrenceTable table;
  table.n_max = fam.max_n() - 1;
  const Poly x = Poly::variable();
  std::vector<std::map<int, Rational>> rows(static_cast<size_t>(fam.max_n()));
  detail::parallel_for(fam.max_n(), jobs, [&](int n) {
    Poly r = x * fam.polys[static_cast<size_t>(n)] - fam.polys[static_cast<size_t>(n) + 1];
    // peel leading terms against the monic basis P_k, k = deg r downwards
    while (!r.is_zero()) {
      const int k = r.degree();
      if (k > n)
        throw Error(ErrorKind::Internal, "ReductionOverflow",
                    "x P_n - P_{n+1} has degree above n at n = " + std::to_string(n));
      const Rational c = r.leading();
      rows[static_cast<size_t>(n)][n - k] = c;
      r -= c * fam.polys[static_cast<size_t>(k)];
    }
  });
  for (int n = 0; n < fam.max_n(); ++n) {
    for (const auto& [j, value] : rows[static_cast<size_t>(n)]) {
      table.gamma[{j, n}] = value;
      table.max_offset = std::max(table.max_offset, j);
    }
  }
  return table;
}

namespace {

// Minimal-degree interpolation through (nodes[i], values[i]) by divided
// differences; nodes must be strictly increasing.
Poly newton_interpolate(const std::vector<Rational>& nodes,
                        const std::vector<Rational>& values) {
  const size_t m = nodes.size();
  std::vector<Rational> dd = values;  // dd[i] becomes f[x_0..x_i]
  for (size_t level = 1; level < m; ++level)
    for (size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
  size_t top = m;
  while (top > 0 && dd[top - 1].is_zero()) --top;
  Poly out;
  for (size_t i = top; i-- > 0;) {
    out = out * (Poly::variable() - Poly{nodes[i]});
    out += Poly{dd[i]};
  }
  return out;
}

}  // namespace

RecurrenceForm fit(const RecurrenceTable& table, int holdout) {
  if (holdout < 0) throw InvalidSpec("holdout must be nonnegative");
  RecurrenceForm form;
  form.validated_range = {0, table.n_max};
  if (table.max_offset < 0) return form;  // no lower terms at all
  form.gamma_polys.assign(static_cast<size_t>(table.max_offset) + 1, Poly());
  for (int j = 0; j <= table.max_offset; ++j) {
    // gamma_j(n) is defined for n >= j; absent entries inside the band are 0
    const int n_lo = j;
    const int n_hi = table.n_max;
    const int samples = n_hi - n_lo + 1;
    if (samples < holdout + 2)
      throw InvalidSpec("offset " + std::to_string(j) + " has " + std::to_string(samples) +
                        " samples; need at least holdout + 2");
    std::vector<Rational> nodes, values;
    for (int n = n_lo; n <= n_hi - holdout; ++n) {
      nodes.emplace_back(n);
      values.push_back(table.value(j, n));
    }
    Poly p = newton_interpolate(nodes, values);
    for (int n = n_hi - holdout + 1; n <= n_hi; ++n) {
      if (p(Rational(n)) != table.value(j, n))
        throw FitMismatch("offset " + std::to_string(j) +
                          ": held-out sample at n = " + std::to_string(n) +
                          " breaks the polynomial fit");
    }
    form.gamma_polys[static_cast<size_t>(j)] = std::move(p);
  }
  while (!form.gamma_polys.empty() && form.gamma_polys.back().is_zero())
    form.gamma_polys.pop_back();
  form.d_inferred = static_cast<int>(form.gamma_polys.size()) - 1;
  form.bandwidth = form.d_inferred + 2;
  return form;
}

int infer_d(const RecurrenceForm& form, const FamilySpec& spec) {
  const int l = spec.q_degree();
  const int d = spec.r_degree();
  const int max_offset = form.d_inferred;
  if (spec.realization == FamilyRealization::Continuous) {
    // total terms = max_offset + 2, bounded by l(d+1)+1
    if (max_offset + 2 > l * (d + 1) + 1)
      throw BandwidthExceeded("continuous recurrence has " + std::to_string(max_offset + 2) +
                              " terms, above the bound " + std::to_string(l * (d + 1) + 1));
  } else {
    const int bound = (d > 0) ? l * d + l - 1 : l;
    if (max_offset > bound)
      throw BandwidthExceeded("discrete recurrence offset " + std::to_string(max_offset) +
                              " exceeds the bound " + std::to_string(bound));
  }
  return max_offset;
}

bool van_iseghem_check(const RecurrenceForm& form, int n_top) {
  if (form.d_inferred < 0) return false;
  const Poly& top = form.gamma_polys[static_cast<size_t>(form.d_inferred)];
  for (int n = form.d_inferred; n <= n_top; ++n)
    if (top(Rational(n)).is_zero()) return false;
  return true;
}

int check_bandwidth_law(const RecurrenceTable& table, const FamilySpec& spec) {
  const int l = spec.q_degree();
  const int d = spec.r_degree();
  const int max_offset = table.max_offset;
  if (spec.realization == FamilyRealization::Continuous) {
    if (max_offset + 2 > l * (d + 1) + 1)
      throw BandwidthExceeded("continuous recurrence has " + std::to_string(max_offset + 2) +
                              " terms, above the bound " + std::to_string(l * (d + 1) + 1));
  } else {
    const int bound = (d > 0) ? l * d + l - 1 : l;
    if (max_offset > bound)
      throw BandwidthExceeded("discrete recurrence offset " + std::to_string(max_offset) +
                              " exceeds the bound " + std::to_string(bound));
  }
  return max_offset;
}

bool van_iseghem_table_check(const RecurrenceTable& table) {
  if (table.max_offset < 0) return false;
  for (int n = table.max_offset; n <= table.n_max; ++n)
    if (table.value(table.max_offset, n).is_zero()) return false;
  return true;
}

std::vector<std::pair<int, Rational>> closed_form_qG(const FamilySpec& spec, int n) {
  spec.validate();
  if (spec.q != Poly{Rational(0), Rational(1)})
    throw SpecNotQEqualsG("closed-form coefficients require q(G) = G");
  const int d = spec.r_degree();
  // S(t) = R(t-1) t, and its forward differences in the index variable
  const Poly S = taylor_shift(spec.R, Rational(-1)) * Poly::variable();
  std::map<int, Rational> acc;
  for (int j = 1; j <= d + 1; ++j) {
    // normal ordering of [n R(n-1) T^{-1}]^{j-1} [Delta^j S](n):
    // product of (n-k) R(n-1-k) for k = 0..j-2, times Delta^j S at n-(j-1)
    Rational prod(1);
    for (int k = 0; k + 2 <= j; ++k)
      prod *= Rational(n - k) * spec.R(Rational(n - 1 - k));
    const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational coeff =
        sign / factorial(static_cast<unsigned>(j)) * prod *
        forward_diff(S, static_cast<unsigned>(j))(Rational(n - (j - 1)));
    if (!coeff.is_zero()) acc[j - 1] += coeff;
  }
  if (spec.realization == FamilyRealization::Discrete) {
    // b'(x) = b'(g) + b'(H) with b'(H) = n - n R(n-1) T^{-1}
    acc[0] += Rational(n);
    acc[1] += -(Rational(n) * spec.R(Rational(n - 1)));
  }
  std::vector<std::pair<int, Rational>> out;
  for (const auto& [offset, value] : acc)
    if (!value.is_zero() && offset <= n) out.emplace_back(offset, value);
  return out;
}

}  // namespace vop
