#pragma once

#include <initializer_list>
#include <vector>

#include "exproj/subspace.hpp"

namespace exproj::testing {

inline RatVec rvec(std::initializer_list<long long> entries) {
  RatVec v;
  for (long long e : entries) v.emplace_back(e);
  return v;
}

inline RatMat rmat(std::initializer_list<std::initializer_list<long long>> rows) {
  RatMat m;
  for (const auto& row : rows) m.push_back(rvec(row));
  return m;
}

inline Subspace sub(int n, std::initializer_list<std::initializer_list<long long>> rows) {
  return Subspace(n, rmat(rows));
}

}  // namespace exproj::testing
