#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/value.hpp"

namespace testing_helpers {

/// Matrix from rows of string literals, e.g. mat<MaxPlus>({{"0", "-inf"}, {"1/2", "3"}}).
template <class K>
tropical::Matrix<K> mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  const std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
  std::vector<K> data;
  for (const auto& row : rows)
    for (const char* s : row) data.push_back(tropical::parse_value<K>(s));
  return tropical::Matrix<K>(r, c, std::move(data));
}

template <class K>
tropical::Vector<K> vec(std::initializer_list<const char*> xs) {
  tropical::Vector<K> v;
  for (const char* s : xs) v.push_back(tropical::parse_value<K>(s));
  return v;
}

inline tropical::MaxPlus mp(const char* s) { return tropical::parse_value<tropical::MaxPlus>(s); }

}  // namespace testing_helpers
