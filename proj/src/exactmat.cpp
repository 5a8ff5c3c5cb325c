#include "yagita/exactmat.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "yagita/arith.hpp"
#include "yagita/errors.hpp"

namespace yagita {

CycMatrix::CycMatrix(std::size_t n, std::uint64_t conductor)
    : n_(n), conductor_(conductor), e_(n * n, CycNum(Rational(0), conductor)) {}

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<CycNum>>& rows) {
  const std::size_t n = rows.size();
  std::uint64_t cond = 1;
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("CycMatrix: rows must form a square matrix");
    for (const auto& v : r) cond = lcm_u64(cond, v.conductor());
  }
  CycMatrix m(n, cond);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.e_[i * n + j] = rows[i][j].embed(cond);
  return m;
}

CycMatrix CycMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<CycNum>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return from_rows(r);
}

CycMatrix CycMatrix::identity(std::size_t n, std::uint64_t conductor) {
  CycMatrix m(n, conductor);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = CycNum(Rational(1), conductor);
  return m;
}

CycMatrix CycMatrix::scalar(std::size_t n, const CycNum& s) {
  CycMatrix m(n, s.conductor());
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = s;
  return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycNum>& d) {
  std::vector<std::vector<CycNum>> rows(d.size(), std::vector<CycNum>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) rows[i][i] = d[i];
  return from_rows(rows);
}

void CycMatrix::set(std::size_t i, std::size_t j, const CycNum& v) {
  if (conductor_ % v.conductor() != 0) *this = embed(lcm_u64(conductor_, v.conductor()));
  e_[i * n_ + j] = v.embed(conductor_);
}

CycMatrix CycMatrix::embed(std::uint64_t target) const {
  if (target == conductor_) return *this;
  CycMatrix m(n_, target);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].embed(target);
  return m;
}

CycMatrix CycMatrix::lowered() const {
  if (conductor_ == 1) return *this;
  CycMatrix m(n_, 1);
  for (std::size_t k = 0; k < e_.size(); ++k) {
    auto r = e_[k].as_rational();
    if (!r) return *this;
    m.e_[k] = CycNum(*r);
  }
  return m;
}

CycMatrix CycMatrix::galois(std::int64_t k) const {
  CycMatrix m = *this;
  for (auto& v : m.e_) v = v.galois(k);
  return m;
}

bool CycMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& v = e_[i * n_ + j];
      if (i == j) {
        auto r = v.as_rational();
        if (!r || *r != 1) return false;
      } else if (!v.is_zero()) {
        return false;
      }
    }
  return true;
}

bool CycMatrix::is_integral() const {
  for (const auto& v : e_)
    if (!v.is_integral()) return false;
  return true;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("CycMatrix: size mismatch in product");
  if (a.conductor_ != b.conductor_) {
    const std::uint64_t c = lcm_u64(a.conductor_, b.conductor_);
    return a.embed(c) * b.embed(c);
  }
  const std::size_t n = a.n_;
  CycMatrix out(n, a.conductor_);
  if (a.is_integral() && b.is_integral()) {
    // Row-by-row sparse accumulation of raw coordinate convolutions; each
    // entry is reduced mod Phi_N once.
    const std::size_t phi = a.e_.empty() ? 1 : a.e_[0].numerators().size();
    std::vector<std::vector<Integer>> acc(n, std::vector<Integer>(2 * phi - 1));
    std::vector<char> touched(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(touched.begin(), touched.end(), 0);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& x = a.e_[i * n + k];
        if (x.is_zero()) continue;
        const auto& xn = x.numerators();
        for (std::size_t j = 0; j < n; ++j) {
          const auto& y = b.e_[k * n + j];
          if (y.is_zero()) continue;
          const auto& yn = y.numerators();
          if (!touched[j]) {
            for (auto& v : acc[j]) v = 0;
            touched[j] = 1;
          }
          for (std::size_t s = 0; s < phi; ++s) {
            if (xn[s] == 0) continue;
            for (std::size_t t = 0; t < phi; ++t)
              if (yn[t] != 0) mpz_addmul(acc[j][s + t].get_mpz_t(), xn[s].get_mpz_t(), yn[t].get_mpz_t());
          }
        }
      }
      for (std::size_t j = 0; j < n; ++j)
        if (touched[j]) out.e_[i * n + j] = CycNum::from_coords(a.conductor_, acc[j]);
    }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CycNum s(Rational(0), a.conductor_);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& x = a.e_[i * n + k];
        if (x.is_zero()) continue;
        const auto& y = b.e_[k * n + j];
        if (y.is_zero()) continue;
        s += x * y;
      }
      out.e_[i * n + j] = s;
    }
  return out;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("CycMatrix: size mismatch in sum");
  if (a.conductor_ != b.conductor_) {
    const std::uint64_t c = lcm_u64(a.conductor_, b.conductor_);
    return a.embed(c) + b.embed(c);
  }
  CycMatrix out(a.n_, a.conductor_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
  return out;
}

CycMatrix operator*(const CycNum& s, const CycMatrix& a) {
  const std::uint64_t c = lcm_u64(s.conductor(), a.conductor_);
  CycMatrix out = a.embed(c);
  const CycNum se = s.embed(c);
  for (auto& v : out.e_) v = se * v;
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.n_ != b.n_) return false;
  if (a.conductor_ == b.conductor_) return a.e_ == b.e_;
  const std::uint64_t c = lcm_u64(a.conductor_, b.conductor_);
  return a.embed(c).e_ == b.embed(c).e_;
}

CycMatrix CycMatrix::inverse() const {
  const std::size_t n = n_;
  std::vector<CycNum> m = e_;
  CycMatrix inv = identity(n, conductor_);
  auto& r = inv.e_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("CycMatrix::inverse: singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m[piv * n + j], m[col * n + j]);
        std::swap(r[piv * n + j], r[col * n + j]);
      }
    const CycNum pinv = m[col * n + col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[col * n + j] *= pinv;
      r[col * n + j] *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i * n + col].is_zero()) continue;
      const CycNum f = m[i * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i * n + j] -= f * m[col * n + j];
        r[i * n + j] -= f * r[col * n + j];
      }
    }
  }
  return inv;
}

CycMatrix CycMatrix::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycMatrix result = identity(n_, conductor_);
  CycMatrix base = *this;
  auto k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string CycMatrix::key() const {
  std::string out = std::to_string(n_) + "#" + std::to_string(conductor_);
  for (const auto& v : e_) {
    out += ';';
    out += v.key();
  }
  return out;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << e_[i * n_ + j].to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

nlohmann::json CycMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n_; ++j) row.push_back(e_[i * n_ + j].to_json());
    rows.push_back(std::move(row));
  }
  return {{"size", n_}, {"conductor", conductor_}, {"entries", rows}};
}

CycMatrix CycMatrix::from_json(const nlohmann::json& j) {
  const auto n = j.at("size").get<std::size_t>();
  const auto& rows_json = j.at("entries");
  if (rows_json.size() != n) throw std::invalid_argument("matrix JSON: entries do not match size");
  std::vector<std::vector<CycNum>> rows;
  for (const auto& rj : rows_json) {
    std::vector<CycNum> row;
    for (const auto& v : rj) row.push_back(CycNum::from_json(v));
    rows.push_back(std::move(row));
  }
  CycMatrix m = CycMatrix::from_rows(rows);
  if (j.contains("conductor")) {
    const auto c = j.at("conductor").get<std::uint64_t>();
    if (c % m.conductor() != 0) throw std::invalid_argument("matrix JSON: conductor does not cover the entries");
    m = m.embed(c);
  }
  return m;
}

CycMatrix identity(std::size_t n, std::uint64_t conductor) { return CycMatrix::identity(n, conductor); }

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b) { return a * b; }

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  const std::uint64_t c = lcm_u64(a.conductor(), b.conductor());
  const CycMatrix ae = a.embed(c), be = b.embed(c);
  CycMatrix out(n * m, c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CycNum& x = ae(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out.set(i * m + k, j * m + l, x * be(k, l));
    }
  return out;
}

CycMatrix block_diag(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  const std::uint64_t c = lcm_u64(a.conductor(), b.conductor());
  CycMatrix out(n + m, c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(n + i, n + j, b(i, j));
  return out;
}

CycNum trace(const CycMatrix& a) {
  CycNum s(Rational(0), a.conductor());
  for (std::size_t i = 0; i < a.size(); ++i) s += a(i, i);
  return s;
}

CycNum det_cofactor(const CycMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return CycNum(Rational(1), a.conductor());
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  CycNum total(Rational(0), a.conductor());
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    CycMatrix minor(n - 1, a.conductor());
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor.set(r - 1, cc++, a(r, c));
      }
    const CycNum term = a(0, j) * det_cofactor(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

CycNum det(const CycMatrix& a) {
  const std::size_t n = a.size();
  if (n <= 3) return det_cofactor(a);
  std::vector<CycNum> m = a.entries();
  bool negate = false;
  CycNum prev(Rational(1), a.conductor());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv * n + k].is_zero()) ++piv;
      if (piv == n) return CycNum(Rational(0), a.conductor());
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[k * n + j]);
      negate = !negate;
    }
    const CycNum prev_inv = prev.inverse();
    const CycNum& pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * pivot - m[i * n + k] * m[k * n + j]) * prev_inv;
    prev = pivot;
  }
  const CycNum& d = m[n * n - 1];
  return negate ? -d : d;
}

std::uint64_t element_order(const CycMatrix& a, std::uint64_t cap) {
  CycMatrix power = a;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * a;
  }
  throw CapExceeded(cap);
}

std::vector<CycMatrix> closure(const std::vector<CycMatrix>& gens, std::uint64_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  const std::size_t n = gens.front().size();
  std::uint64_t cond = 1;
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("closure: generators differ in size");
    cond = lcm_u64(cond, g.conductor());
  }
  std::vector<CycMatrix> lifted;
  for (const auto& g : gens) lifted.push_back(g.embed(cond));

  std::vector<CycMatrix> elements{CycMatrix::identity(n, cond)};
  std::unordered_set<std::string> seen{elements.front().key()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : lifted) {
      CycMatrix next = g * elements[head];
      if (!seen.insert(next.key()).second) continue;
      if (elements.size() >= cap) throw CapExceeded(cap);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

MatrixGroup::MatrixGroup(std::vector<CycMatrix> generators, std::uint64_t cap)
    : gens_(std::move(generators)), cap_(cap) {
  if (gens_.empty()) throw std::invalid_argument("MatrixGroup: no generators");
}

const std::vector<CycMatrix>& MatrixGroup::enumerate() {
  if (!elements_) elements_ = closure(gens_, cap_);
  return *elements_;
}

const std::vector<CycMatrix>& MatrixGroup::elements() const {
  if (!elements_) throw std::logic_error("MatrixGroup: not enumerated");
  return *elements_;
}

std::vector<CycMatrix> order_p_cyclic_subgroups(const MatrixGroup& group, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("order_p_cyclic_subgroups: p must be prime");
  std::vector<CycMatrix> reps;
  std::unordered_set<std::string> covered;
  for (const auto& a : group.elements()) {
    if (a.is_identity() || covered.count(a.key())) continue;
    std::vector<std::string> keys;
    CycMatrix power = a;
    for (std::uint64_t k = 1; k < p; ++k) {
      keys.push_back(power.key());
      power = power * a;
    }
    if (!power.is_identity()) continue;
    covered.insert(keys.begin(), keys.end());
    reps.push_back(a);
  }
  return reps;
}

Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw std::invalid_argument("word: unexpected '" + std::string(1, c) + "'");
    const bool inverse = std::isupper(static_cast<unsigned char>(c));
    const auto gen = static_cast<std::size_t>(std::tolower(static_cast<unsigned char>(c)) - 'a');
    ++i;
    std::int64_t e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t used = 0;
      e = std::stoll(text.substr(i), &used);
      i += used;
    }
    w.push_back({gen, inverse ? -e : e});
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    const bool inv = l.exp < 0;
    out += static_cast<char>((inv ? 'A' : 'a') + static_cast<char>(l.gen));
    const std::int64_t e = inv ? -l.exp : l.exp;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

CycMatrix evaluate_word(const std::vector<CycMatrix>& gens, const Word& w) {
  if (gens.empty()) throw std::invalid_argument("evaluate_word: no generators");
  CycMatrix acc = CycMatrix::identity(gens.front().size(), gens.front().conductor());
  for (const auto& l : w) {
    if (l.gen >= gens.size()) throw std::invalid_argument("evaluate_word: generator index out of range");
    acc = acc * gens[l.gen].pow(l.exp);
  }
  return acc;
}

bool relations_check(const std::vector<CycMatrix>& gens, const std::vector<Word>& relators) {
  for (const auto& w : relators)
    if (!evaluate_word(gens, w).is_identity()) return false;
  return true;
}

}  // namespace yagita
