#include "nobeling/lines.hpp"

#include <algorithm>
#include <stdexcept>

#include "nobeling/errors.hpp"

namespace nobeling {

LineIndex::LineIndex(mpz_class v) : value(std::move(v)) {
  if (value < 0) throw std::invalid_argument("line index must be non-negative");
}

namespace {

// Calkin-Wilf tree in breadth-first (heap) order: node 1 is 1/1, the left
// child of a/b is a/(a+b) and the right child is (a+b)/b.
Scalar calkin_wilf_node(const mpz_class& node) {
  mpz_class a = 1;
  mpz_class b = 1;
  const auto bits = mpz_sizeinbase(node.get_mpz_t(), 2);
  for (std::size_t k = bits - 1; k-- > 0;) {
    if (mpz_tstbit(node.get_mpz_t(), k)) {
      a += b;
    } else {
      b += a;
    }
  }
  return Scalar(a, b);
}

mpz_class calkin_wilf_position(const Scalar& positive) {
  mpz_class a = positive.numerator();
  mpz_class b = positive.denominator();
  // Walk to the root collecting runs of identical steps; a run of length k is
  // one division instead of k subtractions.
  std::vector<std::pair<bool, mpz_class>> runs;  // (is_right, length), leaf first
  while (!(a == 1 && b == 1)) {
    if (a < b) {
      mpz_class k = (b - 1) / a;
      b -= k * a;
      runs.emplace_back(false, k);
    } else {
      mpz_class k = (a - 1) / b;
      a -= k * b;
      runs.emplace_back(true, k);
    }
  }
  mpz_class node = 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    const unsigned long len = it->second.get_ui();
    mpz_mul_2exp(node.get_mpz_t(), node.get_mpz_t(), len);
    if (it->first) {
      mpz_class ones = 1;
      mpz_mul_2exp(ones.get_mpz_t(), ones.get_mpz_t(), len);
      node += ones - 1;
    }
  }
  return node;
}

}  // namespace

Scalar nth_rational(const mpz_class& i) {
  if (i < 0) throw std::invalid_argument("rational index must be non-negative");
  if (i == 0) return Scalar(0);
  if (mpz_odd_p(i.get_mpz_t())) {
    // i = 2j + 1 -> j-th Calkin-Wilf term, tree node j + 1
    return calkin_wilf_node((i - 1) / 2 + 1);
  }
  // i = 2j, j >= 1 -> -(the (j-1)-th term), tree node j
  return -calkin_wilf_node(i / 2);
}

mpz_class index_of_rational(const Scalar& q) {
  if (q.is_zero()) return 0;
  const mpz_class node = calkin_wilf_position(q.abs());
  return q.sign() > 0 ? mpz_class(2 * (node - 1) + 1) : mpz_class(2 * node);
}

mpz_class pair(const mpz_class& x, const mpz_class& y) {
  return x < y ? mpz_class(y * y + x) : mpz_class(x * x + x + y);
}

std::pair<mpz_class, mpz_class> unpair(const mpz_class& z) {
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), z.get_mpz_t());
  const mpz_class rest = z - s * s;
  if (rest < s) return {rest, s};
  return {s, rest - s};
}

mpz_class pair_tuple(const std::vector<mpz_class>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty tuple");
  mpz_class acc = xs.back();
  for (std::size_t k = xs.size() - 1; k-- > 0;) acc = pair(xs[k], acc);
  return acc;
}

std::vector<mpz_class> unpair_tuple(const mpz_class& z, std::size_t k) {
  if (k == 0) throw std::invalid_argument("empty tuple");
  std::vector<mpz_class> out;
  out.reserve(k);
  mpz_class rest = z;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto [head, tail] = unpair(rest);
    out.push_back(std::move(head));
    rest = std::move(tail);
  }
  out.push_back(std::move(rest));
  return out;
}

AxisLine nth_line(std::size_t dim, const LineIndex& i) {
  if (dim < 2) throw DimensionError("lines need ambient dimension >= 2");
  mpz_class tuple;
  mpz_class axis;
  mpz_fdiv_qr_ui(tuple.get_mpz_t(), axis.get_mpz_t(), i.value.get_mpz_t(), dim);
  std::vector<Scalar> offsets;
  offsets.reserve(dim - 1);
  for (const mpz_class& c : unpair_tuple(tuple, dim - 1)) offsets.push_back(nth_rational(c));
  return AxisLine(axis.get_ui(), std::move(offsets));
}

LineIndex index_of_line(const AxisLine& line) {
  std::vector<mpz_class> codes;
  codes.reserve(line.offsets().size());
  for (const Scalar& q : line.offsets()) codes.push_back(index_of_rational(q));
  return LineIndex(mpz_class(pair_tuple(codes) * line.dim() + line.free_axis()));
}

mpz_class line_prefix_bound(unsigned long h, std::size_t dim) {
  if (dim < 2) throw DimensionError("lines need ambient dimension >= 2");
  if (h == 0) throw std::invalid_argument("height bound must be positive");
  // A reduced p/q with max(|p|, q) <= h sits at Calkin-Wilf depth <= h - 1
  // (each step towards the root lowers max(p, q)), so its tree node is below
  // 2^h and its rational index is at most 2^(h+1) - 2.
  mpz_class bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), h + 1);
  bound -= 1;
  // If every component is below B then pair(x, y) < B^2; nesting k components
  // gives codes below B^(2^(k-1)).
  for (std::size_t k = 1; k + 1 < dim; ++k) bound *= bound;
  return bound * dim;
}

std::vector<AxisLine> lines_through(const FlaggedPoint& p) {
  const std::size_t n = p.point.dim();
  if (p.rational.size() != n) throw DimensionError("one rationality flag per coordinate");
  const auto flagged = static_cast<std::size_t>(std::count(p.rational.begin(), p.rational.end(), true));
  std::vector<AxisLine> out;
  if (flagged + 1 < n) return out;
  for (std::size_t axis = 0; axis < n; ++axis) {
    bool ok = true;
    std::vector<Scalar> offsets;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == axis) continue;
      if (!p.rational[j]) {
        ok = false;
        break;
      }
      offsets.push_back(p.point[j]);
    }
    if (ok) out.emplace_back(axis, std::move(offsets));
  }
  return out;
}

}  // namespace nobeling
