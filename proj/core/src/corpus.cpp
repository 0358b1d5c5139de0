#include "sublat/corpus.hpp"

#include <functional>
#include <numeric>

#include "sublat/operations.hpp"

namespace sublat {

namespace {

Permutation cycle_of(std::size_t degree, std::vector<Point> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

// Right regular representation of a group given by a multiplication rule on 0..n-1.
GroupPtr regular(std::size_t n, const std::vector<std::size_t>& gens,
                 const std::function<std::size_t(std::size_t, std::size_t)>& mul, std::string name) {
  std::vector<Permutation> perms;
  for (std::size_t x : gens) {
    std::vector<Point> images(n);
    for (std::size_t y = 0; y < n; ++y) images[y] = static_cast<Point>(mul(y, x));
    perms.emplace_back(std::move(images));
  }
  return group_generate(n, std::move(perms), std::move(name));
}

GroupPtr from_cycles(std::string name, std::size_t degree,
                     std::vector<std::vector<std::vector<Point>>> gens) {
  std::vector<Permutation> perms;
  for (auto& g : gens) perms.push_back(Permutation::from_cycles(degree, g));
  return group_generate(degree, std::move(perms), std::move(name));
}

// a^i b^e with b^-1 a b = a^r, b^2 = a^s, a^m = 1; index i + m e.
GroupPtr metacyclic(std::size_t m, std::size_t r, std::size_t s, std::string name) {
  auto mul = [=](std::size_t x, std::size_t y) {
    const std::size_t i = x % m, e = x / m, j = y % m, f = y / m;
    const std::size_t twisted = e ? (j * r) % m : j;
    std::size_t k = (i + twisted) % m;
    std::size_t b = e + f;
    if (b == 2) {
      k = (k + s) % m;
      b = 0;
    }
    return k + m * b;
  };
  return regular(2 * m, {1, m}, mul, std::move(name));
}

}  // namespace

GroupPtr cyclic_group(std::size_t n) {
  std::vector<Point> points(n);
  std::iota(points.begin(), points.end(), 0);
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(cycle_of(n, points));
  return group_generate(n, std::move(gens), "C" + std::to_string(n));
}

GroupPtr dihedral_group(std::size_t n) {
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return group_generate(n, {Permutation(rot), Permutation(refl)}, "D" + std::to_string(2 * n));
}

GroupPtr dicyclic_group(std::size_t n) {
  std::string name = n == 2 ? "Q8" : n == 4 ? "Q16" : "Dic" + std::to_string(n);
  return metacyclic(2 * n, 2 * n - 1, n, std::move(name));
}

std::vector<GroupPtr> corpus(bool extended) {
  std::vector<GroupPtr> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back(cyclic_group(n));
  out.push_back(from_cycles("V4", 4, {{{0, 1}}, {{2, 3}}}));
  out.push_back(from_cycles("C2^3", 6, {{{0, 1}}, {{2, 3}}, {{4, 5}}}));
  for (std::size_t n : {4, 5, 6, 8}) out.push_back(dihedral_group(n));
  out.push_back(dicyclic_group(2));
  out.push_back(dicyclic_group(4));
  out.push_back(dicyclic_group(3));
  out.push_back(metacyclic(8, 5, 0, "M16"));
  out.push_back(from_cycles("F20", 5, {{{0, 1, 2, 3, 4}}, {{1, 2, 4, 3}}}));
  out.push_back(from_cycles("C7:C3", 7, {{{0, 1, 2, 3, 4, 5, 6}}, {{1, 2, 4}, {3, 6, 5}}}));
  auto s3 = from_cycles("S3", 3, {{{0, 1}}, {{0, 1, 2}}});
  auto s4 = from_cycles("S4", 4, {{{0, 1}}, {{0, 1, 2, 3}}});
  out.push_back(s3);
  out.push_back(s4);
  out.push_back(from_cycles("A4", 4, {{{0, 1, 2}}, {{1, 2, 3}}}));
  out.push_back(from_cycles("A5", 5, {{{0, 1, 2}}, {{0, 1, 2, 3, 4}}}));
  out.push_back(direct_product(s3, out[1]));
  out.push_back(direct_product(s3, out[2]));
  out.push_back(direct_product(dihedral_group(4), out[1]));
  out.push_back(direct_product(dicyclic_group(2), out[2]));
  if (extended) out.push_back(direct_product(s4, out[1]));
  return out;
}

GroupPtr builtin(std::string_view name) {
  for (auto& g : corpus(true)) {
    if (g->name() == name) return g;
  }
  throw Error(ErrorCode::kUnknownName, "no built-in group named '" + std::string(name) + "'");
}

}  // namespace sublat
