#include "yagita/witness.hpp"

#include <stdexcept>

#include "yagita/arith.hpp"
#include "yagita/errors.hpp"
#include "yagita/formulas.hpp"

namespace yagita {

namespace {

void require_dimension(std::size_t n, const std::string& what) {
  if (n > kMaxWitnessDimension)
    throw std::invalid_argument(what + ": dimension " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxWitnessDimension));
}

Word commutator(std::size_t u, std::size_t v) { return {{u, 1}, {v, 1}, {u, -1}, {v, -1}}; }

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

// Relators of the extraspecial group on generators x_0, z_0, x_1, z_1, ...
// (x_i = letter 2i, z_i = letter 2i + 1).
std::vector<Word> extraspecial_relators(std::uint64_t p, std::uint64_t m) {
  std::vector<Word> rel;
  const auto pe = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < m; ++i) {
    rel.push_back({{2 * i, pe}});
    rel.push_back({{2 * i + 1, pe}});
  }
  const Word c = commutator(1, 0);
  Word c_pow;
  for (std::uint64_t k = 0; k < p; ++k) c_pow = concat(c_pow, c);
  rel.push_back(c_pow);
  for (std::size_t g = 0; g < 2 * m; ++g) rel.push_back(concat(concat(c, {{g, 1}}), concat(inverse(c), {{g, -1}})));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      rel.push_back(commutator(2 * i, 2 * j));
      rel.push_back(commutator(2 * i + 1, 2 * j + 1));
      rel.push_back(commutator(2 * i, 2 * j + 1));
      rel.push_back(commutator(2 * i + 1, 2 * j));
    }
  for (std::size_t i = 1; i < m; ++i) rel.push_back(concat(commutator(2 * i + 1, 2 * i), inverse(c)));
  return rel;
}

CycMatrix tensor_slot(const CycMatrix& block, std::size_t slot, std::size_t slots) {
  const std::size_t b = block.size();
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < slot; ++i) left *= b;
  for (std::size_t i = slot + 1; i < slots; ++i) right *= b;
  return kron(kron(CycMatrix::identity(left), block), CycMatrix::identity(right));
}

std::vector<CycMatrix> lowered(std::vector<CycMatrix> gens) {
  for (auto& g : gens) g = g.lowered();
  return gens;
}

}  // namespace

CyclotomicBasis::CyclotomicBasis(std::uint64_t p, std::uint64_t l) : p_(p), l_(l) {
  if (!is_prime(p)) throw std::invalid_argument("CyclotomicBasis: p must be prime");
  if (l == 0 || (p - 1) % l != 0) throw std::invalid_argument("CyclotomicBasis: l must divide p-1");
  for (std::uint64_t h = 1; h < p; ++h)
    if (pow_mod(h, l, p) == 1) h_.push_back(h);
  // prod_{h in H} (x - zeta^h)
  mu_ = {CycNum(Rational(1), p)};
  for (std::uint64_t h : h_) {
    const CycNum root = CycNum::zeta(p, static_cast<std::int64_t>(h));
    std::vector<CycNum> next(mu_.size() + 1, CycNum(Rational(0), p));
    for (std::size_t i = 0; i < mu_.size(); ++i) {
      next[i + 1] += mu_[i];
      next[i] -= root * mu_[i];
    }
    mu_ = std::move(next);
  }
  for (auto& c : mu_)
    if (auto r = c.as_rational()) c = CycNum(*r);
  std::vector<std::vector<CycNum>> rows(l, std::vector<CycNum>(l));
  for (std::size_t j = 0; j < l; ++j) {
    const auto col = coordinates(static_cast<std::int64_t>(j) + 1);
    for (std::size_t i = 0; i < l; ++i) rows[i][j] = col[i];
  }
  companion_ = CycMatrix::from_rows(rows);
  companion_powers_.push_back(CycMatrix::identity(l, companion_.conductor()));
  for (std::uint64_t k = 1; k + 1 < p; ++k) companion_powers_.push_back(companion_powers_.back() * companion_);
}

std::vector<CycNum> CyclotomicBasis::coordinates(std::int64_t e) const {
  const std::uint64_t ee = mod_floor(e, p_);
  std::vector<CycNum> r(std::max<std::uint64_t>(ee + 1, l_), CycNum(Rational(0)));
  r[ee] = CycNum(Rational(1));
  for (std::size_t k = r.size(); k-- > l_;) {
    if (r[k].is_zero()) continue;
    const CycNum c = r[k];
    for (std::size_t i = 0; i < l_; ++i) r[k - l_ + i] -= c * mu_[i];
    r[k] = CycNum(Rational(0));
  }
  r.resize(l_);
  return r;
}

CycMatrix CyclotomicBasis::galois_matrix(std::uint64_t h) const {
  if (pow_mod(h, l_, p_) != 1) throw std::invalid_argument("galois_matrix: h is not in the Galois group");
  std::vector<std::vector<CycNum>> rows(l_, std::vector<CycNum>(l_));
  for (std::size_t j = 0; j < l_; ++j) {
    const auto col = coordinates(static_cast<std::int64_t>(h * j));
    for (std::size_t i = 0; i < l_; ++i) rows[i][j] = col[i];
  }
  return CycMatrix::from_rows(rows);
}

CycMatrix CyclotomicBasis::multiplication_matrix(const CycNum& a) const {
  if (p_ % a.conductor() != 0)
    throw std::invalid_argument("multiplication_matrix: entry " + a.to_string() + " is not in Q(zeta_p)");
  if (!a.is_integral()) throw std::invalid_argument("blow_up: entry " + a.to_string() + " is not integral");
  const CycNum ap = a.embed(p_);
  CycMatrix out(l_, companion_.conductor());
  const auto& c = ap.numerators();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) out = out + CycNum(Rational(c[k])) * companion_powers_[k];
  return out;
}

CycMatrix regular_rep_zeta(std::uint64_t p) { return CyclotomicBasis(p, p - 1).companion().lowered(); }

CycMatrix galois_rep(std::uint64_t p, std::uint64_t g) {
  if (gcd_u64(g % p, p) != 1) throw std::invalid_argument("galois_rep: g must be a unit mod p");
  return CyclotomicBasis(p, p - 1).galois_matrix(g % p).lowered();
}

std::uint64_t unit_of_order(std::uint64_t p, std::uint64_t m) {
  for (std::uint64_t g = 1; g < std::max<std::uint64_t>(p, 2); ++g)
    if (mult_order(g, p) == m) return g;
  throw std::invalid_argument("no unit of order " + std::to_string(m) + " mod " + std::to_string(p));
}

std::string WitnessEmbedding::label() const {
  return kind.to_string() + " [" + construction + "] over " + ring.to_string() + " in dim " + std::to_string(dimension);
}

WitnessCheck verify_witness(const WitnessEmbedding& w, std::uint64_t cap) {
  WitnessCheck check;
  check.group = std::make_shared<MatrixGroup>(w.generators, cap);
  const auto& elements = check.group->enumerate();
  check.closure_order = elements.size();
  check.order_ok = check.closure_order == w.expected_order;
  check.relations_ok = relations_check(w.generators, w.relators);
  for (const auto& g : w.generators) check.generator_dets.push_back(det(g));
  check.all_det_one = true;
  const CycNum one(1);
  for (const auto& e : elements)
    if (!(det(e) == one)) {
      check.all_det_one = false;
      break;
    }
  check.verified = check.order_ok && check.relations_ok && (!w.claims_sl || check.all_det_one);
  return check;
}

WitnessEmbedding build_g1(std::uint64_t p, std::uint64_t m, const RingSpec& ring) {
  const WitnessKind kind = WitnessKind::g1(p, m);
  kind.validate();
  const std::uint64_t l = compute_l(ring, p);
  const std::uint64_t n = lcm_u64(m, l);
  require_dimension(n, kind.to_string());

  const std::uint64_t g = unit_of_order(p, m);
  // Realise G1(p, n) (n is a multiple of l) and take the index-(n/m)
  // subgroup; the big generator is chosen so that its (n/m)-th power acts
  // by g.
  std::uint64_t g_big = 0;
  for (std::uint64_t c = 1; c < p && !g_big; ++c)
    if (mult_order(c, p) == n && pow_mod(c, n / m, p) == g) g_big = c;
  if (!g_big) throw InternalError("build_g1: no suitable unit of order " + std::to_string(n));

  const std::uint64_t blocks = n / l;
  const CyclotomicBasis basis(p, l);
  const CycMatrix& zeta_mult = basis.companion();
  const CycMatrix sigma = basis.galois_matrix(pow_mod(g_big, blocks, p));
  const std::uint64_t g_big_inv = pow_mod(g_big, mult_order(g_big, p) - 1, p);

  CycMatrix a(n, zeta_mult.conductor());
  CycMatrix b_big(n, zeta_mult.conductor());
  std::uint64_t e = 1;
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    // a acts on the block b^i (x) V through a^(g^-i).
    const CycMatrix ai = zeta_mult.pow(static_cast<std::int64_t>(e));
    const std::size_t next = (blk + 1) % blocks;
    const CycMatrix bi = (next == 0) ? sigma : CycMatrix::identity(l, zeta_mult.conductor());
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        a.set(blk * l + i, blk * l + j, ai(i, j));
        b_big.set(next * l + i, blk * l + j, bi(i, j));
      }
    e = e * g_big_inv % p;
  }
  const CycMatrix b = b_big.pow(static_cast<std::int64_t>(n / m));

  WitnessEmbedding w;
  w.kind = kind;
  w.ring = ring;
  w.construction = l == 1 ? "monomial" : (blocks == 1 ? "galois" : "induced");
  w.dimension = n;
  w.l = l;
  w.generators = lowered({a, b});
  const auto pe = static_cast<std::int64_t>(p);
  w.relators = {{{0, pe}}, {{1, static_cast<std::int64_t>(m)}}, {{1, 1}, {0, 1}, {1, -1}, {0, -static_cast<std::int64_t>(g)}}};
  w.expected_order = kind.abstract_order();
  w.expected_yagita = oracle_yagita(kind);
  w.claims_sl = ((l / gcd_u64(m, l)) % 2 == 0) || (m % 2 == 1 && m > 1);
  return w;
}

WitnessEmbedding sl_pad(const WitnessEmbedding& w) {
  require_dimension(w.dimension + 1, "sl_pad");
  WitnessEmbedding out = w;
  out.generators.clear();
  for (const auto& g : w.generators) {
    const CycNum d = det(g);
    if (d.is_zero() || !d.is_integral() || !d.inverse().is_integral())
      throw std::invalid_argument("sl_pad: generator determinant " + d.to_string() + " is not a unit");
    out.generators.push_back(block_diag(g, CycMatrix::scalar(1, d.inverse())).lowered());
  }
  out.dimension = w.dimension + 1;
  out.construction = "sl_pad(" + w.construction + ")";
  out.claims_sl = true;
  return out;
}

WitnessEmbedding build_g2(std::uint64_t p, std::uint64_t m, const RingSpec& ring) {
  const WitnessKind kind = WitnessKind::g2(p, m);
  kind.validate();
  if (!has_nth_root_of_minus_one(ring, m))
    throw std::invalid_argument(kind.to_string() + ": " + ring.to_string() + " has no " + std::to_string(m) +
                                "-th root of -1");
  WitnessEmbedding w = build_g1(p, m, ring);
  const std::uint64_t big_m = roots_of_unity_order(ring);
  std::uint64_t t = 0;
  while ((t * m) % big_m != big_m / 2) ++t;
  const CycNum mu = CycNum::zeta(big_m, static_cast<std::int64_t>(t));
  w.kind = kind;
  w.construction += "+scalar";
  w.generators[1] = mu * w.generators[1];
  w.relators[1] = {{1, 2 * static_cast<std::int64_t>(m)}};
  w.expected_order = kind.abstract_order();
  w.expected_yagita = oracle_yagita(kind);
  w.claims_sl = true;
  return w;
}

WitnessEmbedding build_extraspecial_monomial(std::uint64_t p, std::uint64_t m) {
  const WitnessKind kind = WitnessKind::e(p, m);
  kind.validate();
  std::size_t dim = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    dim *= p;
    require_dimension(dim, kind.to_string());
  }
  CycMatrix shift(p, 1);
  std::vector<CycNum> diag;
  for (std::uint64_t j = 0; j < p; ++j) {
    shift.set((j + 1) % p, j, CycNum(1));
    diag.push_back(CycNum::zeta(p, static_cast<std::int64_t>(j)));
  }
  const CycMatrix clock = CycMatrix::diagonal(diag);
  WitnessEmbedding w;
  w.kind = kind;
  w.ring = RingSpec::cyclotomic(p);
  w.construction = "monomial";
  w.dimension = dim;
  w.l = 1;
  for (std::size_t i = 0; i < m; ++i) {
    w.generators.push_back(tensor_slot(shift, i, m).embed(p));
    w.generators.push_back(tensor_slot(clock, i, m));
  }
  w.relators = extraspecial_relators(p, m);
  w.expected_order = kind.abstract_order();
  w.expected_yagita = oracle_yagita(kind);
  w.claims_sl = p != 2;
  return w;
}

WitnessEmbedding blow_up(const WitnessEmbedding& w, const RingSpec& ring) {
  const std::uint64_t p = w.kind.p;
  const std::uint64_t l = compute_l(ring, p);
  require_dimension(w.dimension * l, "blow_up");
  const CyclotomicBasis basis(p, l);
  WitnessEmbedding out = w;
  out.generators.clear();
  for (const auto& g : w.generators) {
    CycMatrix big(w.dimension * l, basis.companion().conductor());
    for (std::size_t i = 0; i < w.dimension; ++i)
      for (std::size_t j = 0; j < w.dimension; ++j) {
        if (g(i, j).is_zero()) continue;
        const CycMatrix block = basis.multiplication_matrix(g(i, j));
        for (std::size_t r = 0; r < l; ++r)
          for (std::size_t c = 0; c < l; ++c) big.set(i * l + r, j * l + c, block(r, c));
      }
    out.generators.push_back(big.lowered());
  }
  out.ring = ring;
  out.l = l;
  out.dimension = w.dimension * l;
  out.construction = "blow_up(" + w.construction + ")";
  return out;
}

WitnessEmbedding build_extraspecial(std::uint64_t p, std::uint64_t m, const RingSpec& ring) {
  if (p == 2) {
    WitnessEmbedding w = build_e2m_integer(m);
    w.ring = ring;
    return w;
  }
  WitnessEmbedding w = build_extraspecial_monomial(p, m);
  if (compute_l(ring, p) == 1) {
    w.ring = ring;
    return w;
  }
  return blow_up(w, ring);
}

WitnessEmbedding build_d8() {
  WitnessEmbedding w;
  w.kind = WitnessKind::d8();
  w.ring = RingSpec::integers();
  w.construction = "integral";
  w.dimension = 2;
  w.l = 1;
  w.generators = {CycMatrix::from_ints({{0, -1}, {1, 0}}), CycMatrix::from_ints({{1, 0}, {0, -1}})};
  w.relators = {parse_word("a^4"), parse_word("b^2"), parse_word("b a b a")};
  w.expected_order = 8;
  w.expected_yagita = oracle_yagita(w.kind);
  w.claims_sl = false;
  return w;
}

WitnessEmbedding build_e2m_integer(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("build_e2m_integer: m must be positive");
  if (m == 1) {
    WitnessEmbedding w = build_d8();
    w.kind = WitnessKind::e(2, 1);
    return w;
  }
  std::size_t dim = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    dim *= 2;
    require_dimension(dim, "E(2," + std::to_string(m) + ")");
  }
  const CycMatrix swap = CycMatrix::from_ints({{0, 1}, {1, 0}});
  const CycMatrix sign = CycMatrix::from_ints({{1, 0}, {0, -1}});
  WitnessEmbedding w;
  w.kind = WitnessKind::e(2, m);
  w.ring = RingSpec::integers();
  w.construction = "tensor";
  w.dimension = dim;
  w.l = 1;
  for (std::size_t i = 0; i < m; ++i) {
    w.generators.push_back(tensor_slot(swap, i, m));
    w.generators.push_back(tensor_slot(sign, i, m));
  }
  w.relators = extraspecial_relators(2, m);
  w.expected_order = w.kind.abstract_order();
  w.expected_yagita = oracle_yagita(w.kind);
  w.claims_sl = true;

  // No closed formula is trusted here: enumerate and check order, centre
  // and determinants.
  const auto elements = closure(w.generators);
  if (elements.size() != w.expected_order)
    throw InternalError("build_e2m_integer: closure has " + std::to_string(elements.size()) + " elements");
  std::size_t central = 0;
  bool minus_one_central = false;
  const CycMatrix minus_one = CycMatrix::scalar(dim, CycNum(-1));
  for (const auto& e : elements) {
    bool commutes = true;
    for (const auto& g : w.generators)
      if (!(e * g == g * e)) {
        commutes = false;
        break;
      }
    if (commutes) {
      ++central;
      if (e == minus_one) minus_one_central = true;
    }
    if (!(det(e) == CycNum(1))) throw InternalError("build_e2m_integer: element with determinant != 1");
  }
  if (central != 2 || !minus_one_central) throw InternalError("build_e2m_integer: centre is not {+-I}");
  return w;
}

WitnessEmbedding build_q8() {
  const CycNum i = CycNum::zeta(4, 1);
  WitnessEmbedding w;
  w.kind = WitnessKind::q8();
  w.ring = RingSpec::cyclotomic(4);
  w.construction = "quaternion";
  w.dimension = 2;
  w.l = 1;
  w.generators = {CycMatrix::diagonal({i, -i}), CycMatrix::from_ints({{0, -1}, {1, 0}}).embed(4)};
  w.relators = {parse_word("a^4"), parse_word("a^2 B^2"), parse_word("B a b a")};
  w.expected_order = 8;
  w.expected_yagita = oracle_yagita(w.kind);
  w.claims_sl = true;
  return w;
}

WitnessEmbedding build_witness(const WitnessKind& kind, const RingSpec& ring) {
  kind.validate();
  using F = WitnessKind::Family;
  switch (kind.family) {
    case F::G1:
      return build_g1(kind.p, kind.m, ring);
    case F::G2:
      return build_g2(kind.p, kind.m, ring);
    case F::E:
      return build_extraspecial(kind.p, kind.m, ring);
    case F::Q8: {
      if (roots_of_unity_order(ring) % 4 != 0)
        throw std::invalid_argument("Q8 needs a square root of -1 in " + ring.to_string());
      WitnessEmbedding w = build_q8();
      w.ring = ring;
      return w;
    }
    case F::D8: {
      WitnessEmbedding w = build_d8();
      w.ring = ring;
      return w;
    }
  }
  throw std::invalid_argument("unknown witness family");
}

WitnessMenu witness_menu(std::uint64_t p, std::uint64_t n, const RingSpec& ring) {
  if (!is_prime(p)) throw std::invalid_argument("witness_menu: p must be prime");
  WitnessMenu menu;
  const std::size_t fit = std::min<std::uint64_t>(n, kMaxWitnessDimension);
  if (p == 2) {
    if (fit >= 2) {
      WitnessEmbedding d8 = build_witness(WitnessKind::d8(), ring);
      menu.gl.push_back(d8);
      if (fit >= 3) menu.sl.push_back(sl_pad(d8));
      if (roots_of_unity_order(ring) % 4 == 0) {
        WitnessEmbedding q8 = build_witness(WitnessKind::q8(), ring);
        menu.gl.push_back(q8);
        menu.sl.push_back(q8);
      }
    }
    for (std::uint64_t m = 2; (std::uint64_t{1} << m) <= fit; ++m) {
      WitnessEmbedding e = build_extraspecial(2, m, ring);
      menu.gl.push_back(e);
      menu.sl.push_back(std::move(e));
    }
    return menu;
  }

  const std::uint64_t l = compute_l(ring, p);
  for (std::uint64_t m : divisors(p - 1)) {
    const std::uint64_t dim = lcm_u64(m, l);
    if (dim > fit) continue;
    WitnessEmbedding g1 = build_g1(p, m, ring);
    if (g1.claims_sl) {
      menu.sl.push_back(g1);
    } else if (dim + 1 <= fit) {
      menu.sl.push_back(sl_pad(g1));
    }
    menu.gl.push_back(std::move(g1));
    if (m % 2 == 0 && has_nth_root_of_minus_one(ring, m)) menu.sl.push_back(build_g2(p, m, ring));
  }
  std::uint64_t power = p;
  for (std::uint64_t m = 1; l * power <= fit; ++m, power *= p) {
    WitnessEmbedding e = build_extraspecial(p, m, ring);
    menu.gl.push_back(e);
    menu.sl.push_back(std::move(e));
  }
  return menu;
}

}  // namespace yagita
