#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lindef {

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // within a degree, larger exponent vectors (lexicographically) come first
  return a.exps > b.exps;
}

namespace {

void enumerate_degree(int nvars, int d, int var, Monomial& cur,
                      std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.exps[var] = d;
    out.push_back(cur);
    cur.exps[var] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.exps[var] = e;
    enumerate_degree(nvars, d - e, var + 1, cur, out);
  }
  cur.exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  if (d < 0) throw Error(Err::argument, "monomials_of_degree: negative degree");
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur;
  cur.exps.assign(nvars, 0);
  enumerate_degree(nvars, d, 0, cur, out);
  return out;
}

MonomialTable::MonomialTable(int nvars, int cap) : nvars_(nvars), cap_(cap) {
  degree_start_.resize(cap + 2, 0);
  for (int d = 0; d <= cap; ++d) {
    degree_start_[d] = static_cast<int>(monomials_.size());
    for (Monomial& m : monomials_of_degree(nvars, d)) {
      index_[m.exps] = static_cast<int>(monomials_.size());
      degrees_.push_back(d);
      monomials_.push_back(std::move(m));
    }
  }
  degree_start_[cap + 1] = static_cast<int>(monomials_.size());
}

int MonomialTable::index_of(const Monomial& m) const {
  auto it = index_.find(m.exps);
  return it == index_.end() ? -1 : it->second;
}

int MonomialTable::degree_start(int d) const {
  if (d > cap_) return size();
  return degree_start_[d];
}

int TruncatedPoly::order() const {
  return coeffs.empty() ? -1 : coeffs.begin()->first.degree();
}

int TruncatedPoly::degree() const {
  return coeffs.empty() ? -1 : coeffs.rbegin()->first.degree();
}

bool TruncatedPoly::is_homogeneous() const {
  return coeffs.empty() || order() == degree();
}

void TruncatedPoly::set(const Monomial& m, std::uint32_t c) {
  c %= p;
  if (c == 0)
    coeffs.erase(m);
  else
    coeffs[m] = c;
}

std::uint32_t TruncatedPoly::coeff(const Monomial& m) const {
  auto it = coeffs.find(m);
  return it == coeffs.end() ? 0 : it->second;
}

TruncatedPoly poly_mul(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.cap != b.cap) throw Error(Err::cap_mismatch, "poly_mul: caps differ");
  if (a.p != b.p || a.nvars != b.nvars)
    throw Error(Err::argument, "poly_mul: incompatible polynomials");
  PrimeField f{a.p};
  TruncatedPoly out{a.p, a.nvars, a.cap, {}};
  Monomial prod;
  prod.exps.assign(a.nvars, 0);
  for (const auto& [ma, ca] : a.coeffs) {
    for (const auto& [mb, cb] : b.coeffs) {
      if (ma.degree() + mb.degree() > a.cap) continue;
      for (int i = 0; i < a.nvars; ++i) prod.exps[i] = ma.exps[i] + mb.exps[i];
      std::uint32_t c = f.add(out.coeff(prod), f.mul(ca, cb));
      out.set(prod, c);
    }
  }
  return out;
}

TruncatedPoly poly_add(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.cap != b.cap) throw Error(Err::cap_mismatch, "poly_add: caps differ");
  PrimeField f{a.p};
  TruncatedPoly out = a;
  for (const auto& [m, c] : b.coeffs) out.set(m, f.add(out.coeff(m), c));
  return out;
}

TruncatedPoly monomial_poly(std::uint32_t p, int cap, const Monomial& m, std::uint32_t c) {
  TruncatedPoly out{p, static_cast<int>(m.exps.size()), cap, {}};
  if (m.degree() <= cap) out.set(m, c);
  return out;
}

TruncatedPoly retruncate(const TruncatedPoly& a, int cap) {
  TruncatedPoly out{a.p, a.nvars, cap, {}};
  for (const auto& [m, c] : a.coeffs)
    if (m.degree() <= cap) out.coeffs.emplace(m, c);
  return out;
}

std::vector<std::uint32_t> to_dense(const TruncatedPoly& a, const MonomialTable& table) {
  std::vector<std::uint32_t> v(table.size(), 0);
  for (const auto& [m, c] : a.coeffs) {
    int idx = table.index_of(m);
    if (idx >= 0) v[idx] = c;
  }
  return v;
}

TruncatedPoly from_dense(std::span<const std::uint32_t> v, const MonomialTable& table,
                         std::uint32_t p) {
  TruncatedPoly out{p, table.nvars(), table.cap(), {}};
  for (int i = 0; i < table.size(); ++i)
    if (v[i]) out.coeffs.emplace(table.monomial(i), v[i]);
  return out;
}

namespace {

Subspace ideal_span_impl(const std::vector<TruncatedPoly>& gens, const MonomialTable& table,
                         bool exact_only) {
  PrimeField f{gens.empty() ? 101u : gens.front().p};
  FpMatrix rows(f, 0, table.size());
  Monomial prod;
  prod.exps.assign(table.nvars(), 0);
  std::vector<std::uint32_t> v(table.size());
  for (const TruncatedPoly& g : gens) {
    if (g.is_zero()) continue;
    for (int mi = 0; mi < table.size(); ++mi) {
      const Monomial& m = table.monomial(mi);
      int md = table.degree_of(mi);
      if (g.order() + md > table.cap()) continue;
      if (exact_only && g.degree() + md > table.cap()) continue;
      std::fill(v.begin(), v.end(), 0);
      bool nonzero = false;
      for (const auto& [gm, gc] : g.coeffs) {
        if (gm.degree() + md > table.cap()) continue;
        for (int i = 0; i < table.nvars(); ++i) prod.exps[i] = gm.exps[i] + m.exps[i];
        v[table.index_of(prod)] = gc;
        nonzero = true;
      }
      if (nonzero) rows.append_row(v);
    }
  }
  return Subspace::from_rows(rows);
}

}  // namespace

Subspace ideal_span(const std::vector<TruncatedPoly>& gens, const MonomialTable& table) {
  return ideal_span_impl(gens, table, false);
}

Subspace ideal_span_exact(const std::vector<TruncatedPoly>& gens, const MonomialTable& table) {
  return ideal_span_impl(gens, table, true);
}

std::vector<Subspace> order_filtration(PrimeField f, const MonomialTable& table) {
  std::vector<Subspace> out;
  for (int s = 0; s <= table.cap() + 1; ++s) {
    std::vector<int> coords;
    for (int i = table.degree_start(s); i < table.size(); ++i) coords.push_back(i);
    out.push_back(Subspace::coordinates(f, table.size(), coords));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial parser

namespace {

struct Cursor {
  const std::string& s;
  size_t i{0};
  int line;
  int col;

  void advance() {
    if (i < s.size() && s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
  }
  bool done() { return i >= s.size(); }
  char peek() { return s[i]; }
};

long long parse_integer(Cursor& c) {
  long long v = 0;
  int digits = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.peek() - '0');
    if (v > (1LL << 40)) throw ParseError("integer literal too large", c.line, c.col);
    c.advance();
    ++digits;
  }
  if (digits == 0) throw ParseError("expected an integer", c.line, c.col);
  return v;
}

std::string parse_identifier(Cursor& c) {
  std::string name;
  while (!c.done() &&
         (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) {
    name.push_back(c.peek());
    c.advance();
  }
  return name;
}

}  // namespace

TruncatedPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                               std::uint32_t p, int cap, int line_offset, int col_offset,
                               bool strict_cap) {
  PrimeField f{p};
  TruncatedPoly out{p, static_cast<int>(vars.size()), cap, {}};
  Cursor c{text, 0, line_offset, col_offset};
  c.skip_ws();
  if (c.done()) throw ParseError("empty polynomial", c.line, c.col);

  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    std::uint32_t sign = 1;  // 1 or p-1
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = p - 1;
      c.advance();
      c.skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", c.line, c.col);
    }
    first = false;

    // term: factors joined by '*'; factors are integers or var[^e]
    std::uint32_t coeff = sign;
    Monomial m;
    m.exps.assign(vars.size(), 0);
    bool have_factor = false;
    while (true) {
      c.skip_ws();
      if (c.done()) break;
      char ch = c.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        long long v = parse_integer(c);
        coeff = f.mul(coeff, f.reduce(v));
        have_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        int vline = c.line, vcol = c.col;
        std::string name = parse_identifier(c);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
          throw ParseError("unknown variable '" + name + "'", vline, vcol);
        int e = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '^') {
          c.advance();
          c.skip_ws();
          long long ev = parse_integer(c);
          if (ev < 0 || ev > 64) throw ParseError("exponent out of range", c.line, c.col);
          e = static_cast<int>(ev);
        }
        m.exps[it - vars.begin()] += e;
        have_factor = true;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", c.line, c.col);
      }
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        c.advance();
        continue;
      }
      break;
    }
    if (!have_factor) throw ParseError("empty term", c.line, c.col);
    if (m.degree() > cap && strict_cap && coeff != 0)
      throw ParseError("term degree " + std::to_string(m.degree()) + " exceeds the cap " +
                           std::to_string(cap),
                       c.line, c.col);
    if (m.degree() <= cap && coeff != 0)
      out.set(m, f.add(out.coeff(m), coeff));
  }
  return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string poly_to_string(const TruncatedPoly& a, const std::vector<std::string>& vars) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.coeffs) {
    if (!s.empty()) s += " + ";
    std::string ms = monomial_to_string(m, vars);
    if (c != 1 || ms == "1")
      s += std::to_string(c) + (ms == "1" ? "" : "*" + ms);
    else
      s += ms;
  }
  return s;
}

}  // namespace lindef
