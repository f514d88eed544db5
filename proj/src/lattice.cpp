#include "ksphere/lattice.hpp"

#include "ksphere/cyclotomic.hpp"
#include "ksphere/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace ksphere {

namespace {

void axpy(IntVector& row, std::int64_t q, const IntVector& other) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (other[j] != 0) row[j] = checked_add(row[j], -checked_mul(q, other[j]));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

} // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const auto cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InputError("lattice generators have different lengths");

  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    // Euclid on column c among rows[top..]
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool reduced = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        axpy(rows[i], rows[i][c] / rows[top][c], rows[top]);
        if (rows[i][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t i = 0; i < top; ++i)
      if (rows[i][c] != 0) axpy(rows[i], floor_div(rows[i][c], rows[top][c]), rows[top]);
    ++top;
  }
  rows.resize(top);
  return rows;
}

std::size_t lattice_rank(const IntMatrix& generators) {
  return hermite_normal_form(generators).size();
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return hermite_normal_form(a) == hermite_normal_form(b);
}

bool integrally_independent(const IntMatrix& rows) {
  return lattice_rank(rows) == rows.size();
}

} // namespace ksphere
