#include "twistcolor/quandle.hpp"

#include <numeric>

namespace twistcolor {

FiniteQuandle::FiniteQuandle(std::size_t n, std::vector<Elem> table) : n_(n), table_(std::move(table)) {
  if (n_ == 0) throw Error(ErrorKind::invalid_argument, "quandle carrier must be non-empty");
  if (table_.size() != n_ * n_)
    throw Error(ErrorKind::malformed, "operation table has " + std::to_string(table_.size()) +
                                          " entries, expected " + std::to_string(n_ * n_));
  require_in_range(n_, table_, "operation table");

  // dual[a*n+b] = c with c*b = a, if every column map is a bijection
  std::vector<Elem> dual(n_ * n_, 0);
  std::vector<bool> hit(n_ * n_, false);
  for (Elem b = 0; b < n_; ++b)
    for (Elem c = 0; c < n_; ++c) {
      Elem a = op(c, b);
      std::size_t i = std::size_t(a) * n_ + b;
      if (hit[i]) return;
      hit[i] = true;
      dual[i] = c;
    }
  dual_ = std::move(dual);
}

FiniteQuandle FiniteQuandle::from_rows(const std::vector<std::vector<Elem>>& rows) {
  std::vector<Elem> t;
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw Error(ErrorKind::malformed, "operation table is not square");
    t.insert(t.end(), r.begin(), r.end());
  }
  return FiniteQuandle(rows.size(), std::move(t));
}

Elem FiniteQuandle::dual_op(Elem a, Elem b) const {
  if (!dual_) throw Error(ErrorKind::precondition, "operation is not right-invertible; dual undefined");
  return (*dual_)[std::size_t(a) * n_ + b];
}

std::vector<std::vector<Elem>> FiniteQuandle::rows() const {
  std::vector<std::vector<Elem>> r(n_);
  for (std::size_t a = 0; a < n_; ++a) r[a].assign(table_.begin() + a * n_, table_.begin() + (a + 1) * n_);
  return r;
}

FiniteQuandle make_dihedral_quandle(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "dihedral quandle needs n >= 1");
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((2 * b + n - a) % n);
  return FiniteQuandle(n, std::move(t));
}

FiniteQuandle make_alexander_quandle(std::size_t n, std::int64_t t) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "Alexander quandle needs n >= 1");
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t tm = ((t % nn) + nn) % nn;
  if (std::gcd(tm, nn) != 1)
    throw Error(ErrorKind::invalid_argument,
                "t = " + std::to_string(t) + " is not a unit mod " + std::to_string(n));
  const std::int64_t s = ((1 - tm) % nn + nn) % nn;
  std::vector<Elem> table(n * n);
  for (std::int64_t a = 0; a < nn; ++a)
    for (std::int64_t b = 0; b < nn; ++b) table[a * nn + b] = static_cast<Elem>((tm * a + s * b) % nn);
  return FiniteQuandle(n, std::move(table));
}

AxiomReport check_quandle(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  AxiomReport report;

  AxiomResult idem{"idempotent"};
  for (Elem a = 0; a < n && idem.pass; ++a)
    if (q.op(a, a) != a) {
      idem.pass = false;
      idem.witness = {a};
      idem.detail = "a * a != a";
    }
  report.add(idem);

  AxiomResult inv{"right-invertible"};
  for (Elem b = 0; b < n && inv.pass; ++b) {
    std::vector<int> preimage(n, -1);
    for (Elem a = 0; a < n; ++a) {
      Elem c = q.op(a, b);
      if (preimage[c] >= 0) {
        inv.pass = false;
        inv.witness = {b, static_cast<Elem>(preimage[c]), a};
        inv.detail = "column map x -> x * b is not injective";
        break;
      }
      preimage[c] = static_cast<int>(a);
    }
  }
  report.add(inv);

  AxiomResult dist{"distributive"};
  for (Elem a = 0; a < n && dist.pass; ++a)
    for (Elem b = 0; b < n && dist.pass; ++b)
      for (Elem c = 0; c < n; ++c)
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c))) {
          dist.pass = false;
          dist.witness = {a, b, c};
          dist.detail = "(a*b)*c != (a*c)*(b*c)";
          break;
        }
  report.add(dist);
  return report;
}

FiniteQuandle dual_quandle(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[std::size_t(a) * n + b] = q.dual_op(a, b);
  return FiniteQuandle(n, std::move(t));
}

bool is_involutory(const FiniteQuandle& q) {
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (q.op(q.op(a, b), b) != a) return false;
  return true;
}

Elem eval_word(const FiniteQuandle& q, Elem base, std::span<const WordLetter> word) {
  Elem x = base;
  for (const auto& l : word) {
    if (l.exponent == 1)
      x = q.op(x, l.element);
    else if (l.exponent == -1)
      x = q.dual_op(x, l.element);
    else
      throw Error(ErrorKind::invalid_argument, "word exponents must be +1 or -1");
  }
  return x;
}

Word alternating_word(Elem u, Elem v, std::size_t reps, std::optional<Elem> tail) {
  Word w;
  w.reserve(2 * reps + 1);
  for (std::size_t i = 0; i < reps; ++i) {
    w.push_back({u, 1});
    w.push_back({v, 1});
  }
  if (tail) w.push_back({*tail, 1});
  return w;
}

}  // namespace twistcolor
