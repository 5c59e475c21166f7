#include "treeqaoa/tree_engine.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace treeqaoa {

namespace {

using cplxl = std::complex<long double>;

template <typename C>
C cpow_int(C base, int e) {
  C r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Per-slot Gamma entries.  They sum to zero, which is what makes the phase
// of a product string a function of the XOR: Gamma.(ab) = -2 T[a^b] and
// Gamma.b = -2 T[b], with T the subset sums below.
std::vector<double> gamma_slots_grown(int w, const std::vector<double>& gamma) {
  std::vector<double> s(2 * w, 0.0);
  for (int j = 1; j <= w; ++j) {
    s[grown_slot_plus(j)] = gamma[j - 1];
    s[grown_slot_minus(w, j)] = -gamma[j - 1];
  }
  return s;
}

std::vector<double> subset_sums(const std::vector<double>& slots) {
  const std::size_t n = std::size_t{1} << slots.size();
  std::vector<double> t(n, 0.0);
  for (std::size_t x = 1; x < n; ++x)
    t[x] = t[x & (x - 1)] + slots[static_cast<std::size_t>(std::countr_zero(x))];
  return t;
}

// table[u] = exp(-2i * scale * T[u]); scale 1/sqrt(d) for interactions,
// h/sqrt(d) for the field
std::vector<cplx> phase_table(const std::vector<double>& t, double scale) {
  std::vector<cplx> p(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) p[x] = std::exp(cplx{0.0, -2.0 * scale * t[x]});
  return p;
}

// collapsed mixer weight of a width-2w string (betas beta_1..beta_{w-1});
// the center link and the outer closures are handled by the callers
cplx g_weight(Code c, int w, const std::vector<double>& betas) {
  cplx r{1.0, 0.0};
  for (int j = 1; j < w; ++j) {
    r *= mixer_element(spin(c, grown_slot_plus(j)), spin(c, grown_slot_plus(j + 1)), betas[j - 1]);
    r *= mixer_element(spin(c, grown_slot_minus(w, j + 1)), spin(c, grown_slot_minus(w, j)),
                       -betas[j - 1]);
  }
  return r;
}

void check_cap(const char* backend, int p, int cap) {
  if (p > cap)
    throw CapExceeded(std::string(backend) + " backend supports p <= " + std::to_string(cap) +
                      ", requested p = " + std::to_string(p));
}

// Inner sums at level m >= 2 for the requested width-2m strings, given the
// dense child table of (d-1)-th powers on width-2(m-1) strings.  The sums
// over the two values of the child center slice are cached per truncated
// parent, which each of the four center extensions then reuses.
std::vector<cplx> level_inner(int m, const TreeProblem& problem, const AngleSchedule& angles,
                              const std::vector<cplx>& child_pow, const std::vector<Code>& targets) {
  const int wc = m - 1;
  const std::size_t nc = std::size_t{1} << (2 * wc);
  const double sd = std::sqrt(static_cast<double>(problem.d));
  const auto subset = subset_sums(gamma_slots_grown(wc, angles.gammas));
  const auto phase = phase_table(subset, 1.0 / sd);
  const auto field = phase_table(subset, problem.h / sd);
  const double beta_link = angles.betas[m - 2];

  std::vector<cplx> wplus(nc), wminus(nc);
  for (std::size_t b = 0; b < nc; ++b) {
    const Code bc = static_cast<Code>(b);
    const int up = spin(bc, grown_slot_plus(wc));
    const int lo = spin(bc, grown_slot_minus(wc, wc));
    const cplx base = 0.5 * g_weight(bc, wc, angles.betas) * child_pow[b] * field[b];
    wplus[b] = base * mixer_element(up, +1, beta_link) * mixer_element(+1, lo, -beta_link);
    wminus[b] = base * mixer_element(up, -1, beta_link) * mixer_element(-1, lo, -beta_link);
  }

  std::vector<cplx> sum_plus(nc), sum_minus(nc);
  detail::parallel_map(nc, [&](std::size_t u) {
    cplx sp{0.0, 0.0}, sm{0.0, 0.0};
    for (std::size_t b = 0; b < nc; ++b) {
      const cplx ph = phase[u ^ b];
      sp += wplus[b] * ph;
      sm += wminus[b] * ph;
    }
    sum_plus[u] = sp;
    sum_minus[u] = sm;
  });

  const cplx ep = std::exp(cplx{0.0, 2.0 * angles.gammas[m - 1] / sd});
  const cplx em = std::conj(ep);
  std::vector<cplx> inner(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Code a = targets[i];
    const Code u = truncate_center(a, m, m - 1);
    const int delta = spin(a, grown_slot_plus(m)) - spin(a, grown_slot_minus(m, m));
    if (delta == 0)
      inner[i] = sum_plus[u] + sum_minus[u];
    else if (delta > 0)
      inner[i] = ep * sum_plus[u] + em * sum_minus[u];
    else
      inner[i] = em * sum_plus[u] + ep * sum_minus[u];
  }
  return inner;
}

struct GrownTables {
  std::vector<std::vector<cplx>> pow_dm1;  // [m], dense 4^m, (d-1)-th powers
  std::vector<cplx> inner_top;             // raw inner sums at m = p
};

GrownTables build_grown(const TreeProblem& problem, const AngleSchedule& angles) {
  const int p = angles.depth();
  const int d = problem.d;
  GrownTables t;
  t.pow_dm1.resize(static_cast<std::size_t>(p) + 1);

  std::vector<cplx> inner(4);
  for (Code c = 0; c < 4; ++c) {
    const int delta = spin(c, grown_slot_plus(1)) - spin(c, grown_slot_minus(1, 1));
    inner[c] = std::cos(delta * angles.gammas[0] / std::sqrt(static_cast<double>(d)));
  }
  t.pow_dm1[1].resize(4);
  for (Code c = 0; c < 4; ++c) t.pow_dm1[1][c] = cpow_int(inner[c], d - 1);

  for (int m = 2; m <= p; ++m) {
    const std::size_t n = std::size_t{1} << (2 * m);
    std::vector<Code> all(n);
    for (std::size_t a = 0; a < n; ++a) all[a] = static_cast<Code>(a);
    inner = level_inner(m, problem, angles, t.pow_dm1[m - 1], all);
    t.pow_dm1[m].resize(n);
    for (std::size_t a = 0; a < n; ++a) t.pow_dm1[m][a] = cpow_int(inner[a], d - 1);
  }
  t.inner_top = std::move(inner);
  return t;
}

struct BlockTables {
  // dense per level, populated only at strings whose symmetry label equals
  // the level; conjugate-filled from the reflection representatives
  std::vector<std::vector<cplx>> pow_dm1, pow_d;
};

BlockTables build_blocks(const TreeProblem& problem, const AngleSchedule& angles) {
  const int p = angles.depth();
  const int d = problem.d;
  BlockTables t;
  t.pow_dm1.resize(static_cast<std::size_t>(p) + 1);
  t.pow_d.resize(static_cast<std::size_t>(p) + 1);

  const double c1 = std::cos(2.0 * angles.gammas[0] / std::sqrt(static_cast<double>(d)));
  t.pow_dm1[1].assign(4, cplx{0.0, 0.0});
  t.pow_d[1].assign(4, cplx{0.0, 0.0});
  t.pow_dm1[1][1] = t.pow_dm1[1][2] = cpow_int(c1, d - 1);
  t.pow_d[1][1] = t.pow_d[1][2] = cpow_int(c1, d);

  for (int m = 2; m <= p; ++m) {
    const std::size_t nc = std::size_t{1} << (2 * (m - 1));
    std::vector<cplx> child(nc);
    for (std::size_t b = 0; b < nc; ++b) {
      const int tb = symmetry_label(static_cast<Code>(b), m - 1);
      child[b] = tb == 0 ? cplx{1.0, 0.0}
                         : t.pow_dm1[tb][truncate_center(static_cast<Code>(b), m - 1, tb)];
    }

    const std::size_t n = std::size_t{1} << (2 * m);
    std::vector<Code> reps;
    reps.reserve(n / 4);
    for (std::size_t a = 0; a < n; ++a) {
      const Code ac = static_cast<Code>(a);
      if (symmetry_label(ac, m) == m && ac < reflect(ac, m)) reps.push_back(ac);
    }
    const auto inner = level_inner(m, problem, angles, child, reps);

    t.pow_dm1[m].assign(n, cplx{0.0, 0.0});
    t.pow_d[m].assign(n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const Code a = reps[i];
      const Code r = reflect(a, m);
      const cplx hm1 = cpow_int(inner[i], d - 1);
      const cplx hd = cpow_int(inner[i], d);
      t.pow_dm1[m][a] = hm1;
      t.pow_dm1[m][r] = std::conj(hm1);
      t.pow_d[m][a] = hd;
      t.pow_d[m][r] = std::conj(hd);
    }
  }
  return t;
}

// extended-precision mirror of f_weight for the reference backend below
cplxl f_weight_l(Code code, int p, const std::vector<double>& betas) {
  const auto mix = [](int out, int in, long double beta) {
    return out == in ? cplxl{std::cos(beta), 0.0L} : cplxl{0.0L, std::sin(beta)};
  };
  cplxl r{0.5L, 0.0L};
  for (int j = 1; j < p; ++j)
    r *= mix(spin(code, full_slot_plus(p, j)), spin(code, full_slot_plus(p, j + 1)), betas[j - 1]);
  r *= mix(spin(code, full_slot_plus(p, p)), spin(code, full_slot_zero(p)), betas[p - 1]);
  r *= mix(spin(code, full_slot_zero(p)), spin(code, full_slot_minus(p, p)), -betas[p - 1]);
  for (int j = p; j > 1; --j)
    r *= mix(spin(code, full_slot_minus(p, j)), spin(code, full_slot_minus(p, j - 1)),
             -betas[j - 2]);
  return r;
}

Correlators run_naive(const TreeProblem& problem, const AngleSchedule& angles) {
  // The full-width strings go through p rounds of ^(d-1), which amplifies
  // rounding error by roughly (d-1)^p; extended precision keeps this
  // reference backend well inside the agreement window of the others.
  const int p = angles.depth();
  const int w = 2 * p + 1;
  const std::size_t n = std::size_t{1} << w;
  const long double sd = std::sqrt(static_cast<long double>(problem.d));

  std::vector<long double> slots(static_cast<std::size_t>(w), 0.0L);
  for (int j = 1; j <= p; ++j) {
    slots[static_cast<std::size_t>(full_slot_plus(p, j))] = angles.gammas[static_cast<std::size_t>(j - 1)];
    slots[static_cast<std::size_t>(full_slot_minus(p, j))] = -angles.gammas[static_cast<std::size_t>(j - 1)];
  }
  std::vector<long double> subset(n, 0.0L);
  for (std::size_t x = 1; x < n; ++x)
    subset[x] = subset[x & (x - 1)] + slots[static_cast<std::size_t>(std::countr_zero(x))];
  std::vector<cplxl> phase(n), field(n);
  for (std::size_t x = 0; x < n; ++x) {
    phase[x] = std::exp(cplxl{0.0L, -2.0L * subset[x] / sd});
    field[x] = std::exp(cplxl{0.0L, -2.0L * problem.h * subset[x] / sd});
  }

  std::vector<cplxl> f(n);
  for (std::size_t a = 0; a < n; ++a) f[a] = f_weight_l(static_cast<Code>(a), p, angles.betas);

  std::vector<cplxl> pow_prev(n, cplxl{1.0L, 0.0L});
  std::vector<cplxl> inner(n), weight(n);
  for (int m = 1; m <= p; ++m) {
    for (std::size_t b = 0; b < n; ++b) weight[b] = f[b] * pow_prev[b] * field[b];
    detail::parallel_map(n, [&](std::size_t a) {
      cplxl s{0.0L, 0.0L};
      for (std::size_t b = 0; b < n; ++b) s += weight[b] * phase[a ^ b];
      inner[a] = s;
    });
    for (std::size_t a = 0; a < n; ++a) pow_prev[a] = cpow_int(inner[a], problem.d - 1);
  }

  const int zero_slot = full_slot_zero(p);
  std::vector<cplxl> v(n);
  for (std::size_t a = 0; a < n; ++a)
    v[a] = static_cast<long double>(spin(static_cast<Code>(a), zero_slot)) * f[a] * pow_prev[a] *
           field[a];
  const cplxl zz = detail::chunked_sum(n, [&](std::size_t a) {
    cplxl s{0.0L, 0.0L};
    for (std::size_t b = 0; b < n; ++b) s += v[b] * phase[a ^ b];
    return v[a] * s;
  });

  cplxl z{0.0L, 0.0L};
  for (std::size_t a = 0; a < n; ++a)
    z += static_cast<long double>(spin(static_cast<Code>(a), zero_slot)) * f[a] *
         cpow_int(inner[a], problem.d) * field[a];
  const auto narrow = [](cplxl x) {
    return cplx{static_cast<double>(x.real()), static_cast<double>(x.imag())};
  };
  return {narrow(zz), narrow(z)};
}

Correlators run_grown(const TreeProblem& problem, const AngleSchedule& angles) {
  const int p = angles.depth();
  const std::size_t n = std::size_t{1} << (2 * p);
  const double sd = std::sqrt(static_cast<double>(problem.d));
  const auto tabs = build_grown(problem, angles);
  const auto subset = subset_sums(gamma_slots_grown(p, angles.gammas));
  const auto phase = phase_table(subset, 1.0 / sd);
  const auto field = phase_table(subset, problem.h / sd);

  const double c2 = std::cos(2.0 * angles.betas[p - 1]);
  const double s2 = std::sin(2.0 * angles.betas[p - 1]);
  // closure of the center slice: the eliminated a_0 sum leaves a factor
  // (a_p/2)cos(2 beta_p) when a_p = a_{-p} and -(a_p/2) i sin(2 beta_p)
  // otherwise
  auto closure = [&](Code a) -> cplx {
    const int up = spin(a, grown_slot_plus(p));
    const int lo = spin(a, grown_slot_minus(p, p));
    if (up == lo) return cplx{0.5 * up * c2, 0.0};
    return cplx{0.0, -0.5 * up * s2};
  };

  std::vector<cplx> v(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Code ac = static_cast<Code>(a);
    v[a] = g_weight(ac, p, angles.betas) * tabs.pow_dm1[p][a] * closure(ac) * field[a];
  }
  const cplx zz = detail::chunked_sum(n, [&](std::size_t a) {
    cplx s{0.0, 0.0};
    for (std::size_t b = 0; b < n; ++b) s += v[b] * phase[a ^ b];
    return v[a] * s;
  });

  cplx z{0.0, 0.0};
  for (std::size_t a = 0; a < n; ++a) {
    const Code ac = static_cast<Code>(a);
    z += g_weight(ac, p, angles.betas) * cpow_int(tabs.inner_top[a], problem.d) * closure(ac) *
         field[a];
  }
  return {zz, z};
}

Correlators run_blocks(const TreeProblem& problem, const AngleSchedule& angles) {
  const int p = angles.depth();
  const double sd = std::sqrt(static_cast<double>(problem.d));
  const auto tabs = build_blocks(problem, angles);

  // suffix[j] = prod_{l=j..p} cos(2 beta_l)
  std::vector<double> suffix(static_cast<std::size_t>(p) + 2, 1.0);
  for (int j = p; j >= 1; --j) suffix[j] = suffix[j + 1] * std::cos(2.0 * angles.betas[j - 1]);
  // closure factors of the eliminated symmetric top: anti-symmetric center
  // at level t, and fully symmetric continuation respectively
  auto g_anti = [&](int s, int t) -> cplx {
    return cplx{0.0, -0.5 * s * std::sin(2.0 * angles.betas[t - 1]) * suffix[t + 1]};
  };
  auto g_sym = [&](int s, int w) -> double { return 0.5 * s * suffix[w]; };

  cplx zz{0.0, 0.0}, z{0.0, 0.0};
  for (int ta = 1; ta <= p; ++ta) {
    const std::size_t n = std::size_t{1} << (2 * ta);
    const auto subset = subset_sums(gamma_slots_grown(ta, angles.gammas));
    const auto phase = phase_table(subset, 1.0 / sd);
    const auto field = phase_table(subset, problem.h / sd);

    std::vector<Code> la;
    std::vector<cplx> wa;
    la.reserve(n / 2);
    wa.reserve(n / 2);
    for (std::size_t a = 0; a < n; ++a) {
      const Code ac = static_cast<Code>(a);
      if (symmetry_label(ac, ta) != ta) continue;
      const int center = spin(ac, grown_slot_plus(ta));
      const cplx common = g_weight(ac, ta, angles.betas) * field[a];
      la.push_back(ac);
      wa.push_back(g_anti(center, ta) * tabs.pow_dm1[ta][a] * common);
      z += g_anti(center, ta) * tabs.pow_d[ta][a] * common;
    }

    zz += detail::chunked_sum(la.size(), [&](std::size_t i) {
      cplx s{0.0, 0.0};
      for (std::size_t j = 0; j < la.size(); ++j) s += wa[j] * phase[la[i] ^ la[j]];
      return wa[i] * s;
    });

    // strings of width 2*ta whose label is below ta, paired off-diagonally
    std::vector<Code> lb;
    std::vector<cplx> wb;
    lb.reserve(n / 2);
    wb.reserve(n / 2);
    for (std::size_t b = 0; b < n; ++b) {
      const Code bc = static_cast<Code>(b);
      const int tb = symmetry_label(bc, ta);
      if (tb == ta) continue;
      const cplx hb =
          tb == 0 ? cplx{1.0, 0.0} : tabs.pow_dm1[tb][truncate_center(bc, ta, tb)];
      const int center = spin(bc, grown_slot_plus(ta));
      lb.push_back(bc);
      wb.push_back(g_sym(center, ta) * g_weight(bc, ta, angles.betas) * hb * field[b]);
    }
    zz += 2.0 * detail::chunked_sum(la.size(), [&](std::size_t i) {
      cplx s{0.0, 0.0};
      for (std::size_t j = 0; j < lb.size(); ++j) s += wb[j] * phase[la[i] ^ lb[j]];
      return wa[i] * s;
    });
  }
  return {zz, z};
}

}  // namespace

cplx mixer_element(int out, int in, double beta) {
  return out == in ? cplx{std::cos(beta), 0.0} : cplx{0.0, std::sin(beta)};
}

cplx f_weight(Code code, int p, const std::vector<double>& betas) {
  cplx r{0.5, 0.0};
  for (int j = 1; j < p; ++j)
    r *= mixer_element(spin(code, full_slot_plus(p, j)), spin(code, full_slot_plus(p, j + 1)),
                       betas[j - 1]);
  r *= mixer_element(spin(code, full_slot_plus(p, p)), spin(code, full_slot_zero(p)),
                     betas[p - 1]);
  r *= mixer_element(spin(code, full_slot_zero(p)), spin(code, full_slot_minus(p, p)),
                     -betas[p - 1]);
  for (int j = p; j > 1; --j)
    r *= mixer_element(spin(code, full_slot_minus(p, j)), spin(code, full_slot_minus(p, j - 1)),
                       -betas[j - 2]);
  return r;
}

Correlators p1_closed_form(const TreeProblem& problem, double gamma, double beta) {
  problem.validate();
  const double sd = std::sqrt(static_cast<double>(problem.d));
  const double th = 2.0 * gamma / sd;
  const double fh = 2.0 * problem.h * gamma / sd;
  const double c = std::cos(th);
  const double sin2b = std::sin(2.0 * beta);
  const double zz = -0.5 * sin2b * sin2b * (std::cos(2.0 * fh) - 1.0) *
                        std::pow(c, 2 * problem.d - 2) +
                    std::sin(4.0 * beta) * std::sin(th) * std::cos(fh) * std::pow(c, problem.d - 1);
  const double z = sin2b * std::sin(fh) * std::pow(c, problem.d);
  return {cplx{zz, 0.0}, cplx{z, 0.0}};
}

Correlators contract_naive(const TreeProblem& problem, const AngleSchedule& angles,
                           int depth_cap) {
  angles.validate_for(problem);
  check_cap("naive", angles.depth(), depth_cap);
  return run_naive(problem, angles);
}

Correlators contract_grown(const TreeProblem& problem, const AngleSchedule& angles,
                           int depth_cap) {
  angles.validate_for(problem);
  check_cap("grown", angles.depth(), depth_cap);
  return run_grown(problem, angles);
}

Correlators contract_blocks(const TreeProblem& problem, const AngleSchedule& angles,
                            int depth_cap) {
  angles.validate_for(problem);
  check_cap("blocks", angles.depth(), depth_cap);
  return run_blocks(problem, angles);
}

Correlators correlators(const TreeProblem& problem, const AngleSchedule& angles, Backend backend) {
  angles.validate_for(problem);
  switch (backend) {
    case Backend::closed_p1:
      if (angles.depth() != 1)
        throw std::invalid_argument("closed_p1 backend requires p = 1, got p = " +
                                    std::to_string(angles.depth()));
      return p1_closed_form(problem, angles.gammas[0], angles.betas[0]);
    case Backend::naive:
      return contract_naive(problem, angles);
    case Backend::grown:
      return contract_grown(problem, angles);
    case Backend::blocks:
      return contract_blocks(problem, angles);
  }
  throw std::invalid_argument("unknown backend");
}

double energy_density(const TreeProblem& problem, const AngleSchedule& angles, Backend backend) {
  const Correlators c = correlators(problem, angles, backend);
  if (std::abs(c.zz.imag()) > kImagTolerance || std::abs(c.z.imag()) > kImagTolerance)
    throw std::runtime_error("correlators have non-negligible imaginary part (|Im zz| = " +
                             std::to_string(std::abs(c.zz.imag())) + ", |Im z| = " +
                             std::to_string(std::abs(c.z.imag())) + ")");
  const double sd = std::sqrt(static_cast<double>(problem.d));
  return 0.5 * sd * c.zz.real() + problem.h / sd * c.z.real();
}

TreeSizes tree_sizes(int d, int p) {
  if (d < 3) throw std::invalid_argument("tree_sizes requires d >= 3");
  if (p < 1) throw std::invalid_argument("tree_sizes requires p >= 1");
  auto mul = [](std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("tree size overflows int64");
    return r;
  };
  auto add = [](std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("tree size overflows int64");
    return r;
  };
  // geometric sums 1 + (d-1) + ... + (d-1)^k, accumulated with overflow checks
  auto geom = [&](int k) {
    std::int64_t total = 1, term = 1;
    for (int i = 1; i <= k; ++i) {
      term = mul(term, d - 1);
      total = add(total, term);
    }
    return total;
  };
  TreeSizes s;
  s.two_tree = mul(2, geom(p));
  s.one_tree = add(1, mul(d, geom(p - 1)));
  return s;
}

std::vector<LevelTable> grown_level_tables(const TreeProblem& problem, const AngleSchedule& angles,
                                           int depth_cap) {
  angles.validate_for(problem);
  check_cap("grown", angles.depth(), depth_cap);
  const auto tabs = build_grown(problem, angles);
  std::vector<LevelTable> out;
  out.reserve(static_cast<std::size_t>(angles.depth()));
  for (int m = 1; m <= angles.depth(); ++m)
    out.push_back({m, problem.d - 1, tabs.pow_dm1[m]});
  return out;
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::naive: return "naive";
    case Backend::grown: return "grown";
    case Backend::blocks: return "blocks";
    case Backend::closed_p1: return "closed_p1";
  }
  return "unknown";
}

Backend backend_from_string(const std::string& name) {
  if (name == "naive") return Backend::naive;
  if (name == "grown") return Backend::grown;
  if (name == "blocks") return Backend::blocks;
  if (name == "closed_p1") return Backend::closed_p1;
  throw std::invalid_argument("unknown backend '" + name + "'");
}

}  // namespace treeqaoa
