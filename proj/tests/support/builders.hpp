#pragma once

#include <hodgecx/complex.hpp>

#include <initializer_list>
#include <vector>

namespace support {

using hodgecx::Rational;

inline hodgecx::Matrix<Rational> mat(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    std::vector<Rational> v;
    for (int x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return hodgecx::Matrix<Rational>::from_rows(r);
}

inline std::vector<Rational> vecq(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline hodgecx::Subspace<Rational> spanq(
    int ambient, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    std::vector<Rational> v;
    for (int x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return hodgecx::Subspace<Rational>::span_vectors(ambient, r);
}

// Chain with a single jump at the given index.
inline hodgecx::FiltChain<Rational> trivial_chain(int ambient, int jump_at = 0) {
  return hodgecx::FiltChain<Rational>::trivial(ambient, jump_at);
}

}  // namespace support
