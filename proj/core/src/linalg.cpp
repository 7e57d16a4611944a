#include "whitmod/linalg.hpp"

#include <algorithm>
#include <map>

namespace whitmod {

namespace {

using IRow = std::vector<std::pair<int, BigInt>>;  // sorted by column

BigInt row_content(const IRow& r) {
  BigInt g = 0;
  for (const auto& [c, v] : r) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

void normalize_content(IRow& r) {
  if (r.empty()) return;
  BigInt g = row_content(r);
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) v /= g;
}

// a <- x*a - y*b, content-reduced.  Both rows sorted by column.
IRow combine(const IRow& a, const BigInt& x, const IRow& b, const BigInt& y) {
  IRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, x * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -y * b[j].second);
      ++j;
    } else {
      BigInt v = x * a[i].second - y * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize_content(out);
  return out;
}

IRow clear_denominators(const SparseRow& r) {
  BigInt lcm = 1;
  for (const auto& [c, v] : r) {
    (void)c;
    BigInt d = denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  IRow out;
  out.reserve(r.size());
  for (const auto& [c, v] : r) {
    BigInt n = numerator(v) * (lcm / denominator(v));
    if (n != 0) out.emplace_back(c, std::move(n));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  normalize_content(out);
  return out;
}

}  // namespace

KernelResult kernel(const SparseMatrix& m) {
  // Echelon form: pivots[col] holds a row whose leading column is col.
  std::map<int, IRow> pivots;
  for (const SparseRow& raw : m.rows) {
    IRow row = clear_denominators(raw);
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = combine(row, it->second.front().second, it->second, row.front().second);
    }
  }

  // Back-substitute to reduced form: eliminate every pivot column from the
  // rows above it.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    int col = it->first;
    for (auto jt = pivots.begin(); jt != pivots.end() && jt->first < col; ++jt) {
      IRow& r = jt->second;
      auto entry = std::lower_bound(
          r.begin(), r.end(), col,
          [](const auto& p, int c) { return p.first < c; });
      if (entry == r.end() || entry->first != col) continue;
      r = combine(r, it->second.front().second, it->second, entry->second);
    }
  }

  KernelResult result;
  result.rank = static_cast<int>(pivots.size());
  for (int f = 0; f < m.cols; ++f) {
    if (pivots.count(f)) continue;
    SparseRow v;
    for (const auto& [p, row] : pivots) {
      if (p >= f) break;
      auto entry = std::lower_bound(
          row.begin(), row.end(), f,
          [](const auto& a, int c) { return a.first < c; });
      if (entry != row.end() && entry->first == f)
        v.emplace_back(p, Rational(-entry->second, row.front().second));
    }
    v.emplace_back(f, Rational(1));
    result.basis.push_back(std::move(v));
  }
  return result;
}

}  // namespace whitmod
