#include "cgroupoid/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "cgroupoid/error.hpp"

namespace cgroupoid {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw Error(Errc::NotAPermutation, "image array is not a bijection");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm result = identity(degree);
  for (const auto& cycle : cycles) {
    Perm c = identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw Error(Errc::NotAPermutation, "cycle point out of range");
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = compose(result, Perm(c.images_));
  }
  return result;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

int Perm::parity() const {
  std::size_t cycles = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return static_cast<int>((images_.size() - cycles) % 2);
}

std::size_t Perm::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) out << ' ';
      out << j;
      seen[j] = true;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw Error(Errc::DegreeMismatch,
                "degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b[a[i]];
  return Perm(std::move(images));
}

std::set<Perm> closure_small(std::span<const Perm> gens, std::size_t degree, std::size_t limit) {
  for (const Perm& g : gens)
    if (g.degree() != degree) throw Error(Errc::DegreeMismatch, "generator degree differs");

  std::set<Perm> elements{Perm::identity(degree)};
  std::deque<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    Perm current = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& g : gens) {
      Perm next = compose(current, g);
      if (elements.insert(next).second) {
        if (elements.size() > limit)
          throw Error(Errc::ClosureTooLarge, "more than " + std::to_string(limit) + " elements");
        frontier.push_back(std::move(next));
      }
    }
  }
  return elements;
}

SignedPerm SignedPerm::identity(std::size_t k) {
  return SignedPerm{Perm::identity(k), std::vector<int>(k, 1)};
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.degree() != b.degree()) throw Error(Errc::DegreeMismatch, "signed permutation degrees differ");
  SignedPerm out{compose(a.perm, b.perm), std::vector<int>(a.degree())};
  for (std::size_t i = 0; i < a.degree(); ++i) out.signs[i] = a.signs[i] * b.signs[a.perm[i]];
  return out;
}

int signed_parity(const SignedPerm& s) {
  return static_cast<int>(std::count(s.signs.begin(), s.signs.end(), -1) % 2);
}

bool all_in_even_subgroup(std::span<const SignedPerm> gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const SignedPerm& s) { return signed_parity(s) == 0; });
}

}  // namespace cgroupoid
