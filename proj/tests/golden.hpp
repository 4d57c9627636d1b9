#pragma once

// Printed matrices of the [n=8, k=4, d=6] product-matrix code over GF(11)
// with evaluation points (1, ..., 8), used as golden vectors.

#include <vector>

#include "sparsepm/matrix.hpp"

namespace golden {

using Rows = std::vector<std::vector<sparsepm::Scalar>>;

inline const Rows kPsi = {
    {1, 1, 1, 1, 1, 1},  {2, 4, 8, 5, 10, 9}, {3, 9, 5, 4, 1, 3},  {4, 5, 9, 3, 1, 4},
    {5, 3, 4, 9, 1, 5},  {6, 3, 7, 9, 10, 5}, {7, 5, 2, 3, 10, 4}, {8, 9, 6, 4, 10, 3},
};

inline const Rows kG = {
    {1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0},     {0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0},
    {0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1},     {2, 4, 8, 0, 0, 0, 5, 10, 9, 0, 0, 0},
    {0, 2, 0, 4, 8, 0, 0, 5, 0, 10, 9, 0},    {0, 0, 2, 0, 4, 8, 0, 0, 5, 0, 10, 9},
    {3, 9, 5, 0, 0, 0, 4, 1, 3, 0, 0, 0},     {0, 3, 0, 9, 5, 0, 0, 4, 0, 1, 3, 0},
    {0, 0, 3, 0, 9, 5, 0, 0, 4, 0, 1, 3},     {4, 5, 9, 0, 0, 0, 3, 1, 4, 0, 0, 0},
    {0, 4, 0, 5, 9, 0, 0, 3, 0, 1, 4, 0},     {0, 0, 4, 0, 5, 9, 0, 0, 3, 0, 1, 4},
    {5, 3, 4, 0, 0, 0, 9, 1, 5, 0, 0, 0},     {0, 5, 0, 3, 4, 0, 0, 9, 0, 1, 5, 0},
    {0, 0, 5, 0, 3, 4, 0, 0, 9, 0, 1, 5},     {6, 3, 7, 0, 0, 0, 9, 10, 5, 0, 0, 0},
    {0, 6, 0, 3, 7, 0, 0, 9, 0, 10, 5, 0},    {0, 0, 6, 0, 3, 7, 0, 0, 9, 0, 10, 5},
    {7, 5, 2, 0, 0, 0, 3, 10, 4, 0, 0, 0},    {0, 7, 0, 5, 2, 0, 0, 3, 0, 10, 4, 0},
    {0, 0, 7, 0, 5, 2, 0, 0, 3, 0, 10, 4},    {8, 9, 6, 0, 0, 0, 4, 10, 3, 0, 0, 0},
    {0, 8, 0, 9, 6, 0, 0, 4, 0, 10, 3, 0},    {0, 0, 8, 0, 9, 6, 0, 0, 4, 0, 10, 3},
};

inline const Rows kGsysParity = {
    {4, 2, 1, 2, 7, 8, 0, 0, 3, 2, 5, 7},     {8, 0, 0, 7, 1, 9, 10, 0, 3, 9, 2, 5},
    {1, 6, 10, 7, 8, 10, 0, 10, 4, 10, 3, 9}, {5, 7, 4, 2, 3, 0, 1, 3, 5, 4, 4, 9},
    {9, 2, 10, 9, 0, 3, 9, 4, 8, 3, 4, 4},    {9, 2, 9, 3, 0, 0, 10, 2, 7, 8, 7, 2},
    {10, 7, 7, 4, 6, 8, 5, 10, 5, 10, 0, 4},  {5, 7, 4, 4, 0, 8, 7, 4, 4, 8, 10, 0},
    {9, 9, 0, 6, 8, 9, 4, 2, 7, 0, 8, 3},     {7, 5, 0, 5, 4, 6, 2, 7, 2, 10, 3, 7},
    {5, 8, 5, 7, 6, 0, 1, 9, 9, 0, 10, 3},    {8, 0, 8, 4, 6, 10, 5, 3, 8, 6, 3, 6},
};

inline const Rows kPsiPrime = {
    {1, 0, 0, 1, 0, 0},  {0, 1, 0, 0, 8, 0},  {0, 0, 1, 0, 0, 5},  {4, 5, 4, 3, 1, 3},
    {4, 2, 10, 5, 8, 7}, {3, 10, 9, 10, 4, 8}, {4, 4, 2, 8, 8, 4},  {10, 3, 1, 5, 7, 6},
};

inline const Rows kGPrime = {
    {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},     {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},     {0, 1, 0, 0, 0, 0, 0, 8, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 8, 0, 0},     {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 8, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 5, 0, 0, 0},     {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 5, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 5},     {4, 5, 4, 0, 0, 0, 3, 1, 3, 0, 0, 0},
    {0, 4, 0, 5, 4, 0, 0, 3, 0, 1, 3, 0},     {0, 0, 4, 0, 5, 4, 0, 0, 3, 0, 1, 3},
    {4, 2, 10, 0, 0, 0, 5, 8, 7, 0, 0, 0},    {0, 4, 0, 2, 10, 0, 0, 5, 0, 8, 7, 0},
    {0, 0, 4, 0, 2, 10, 0, 0, 5, 0, 8, 7},    {3, 10, 9, 0, 0, 0, 10, 4, 8, 0, 0, 0},
    {0, 3, 0, 10, 9, 0, 0, 10, 0, 4, 8, 0},   {0, 0, 3, 0, 10, 9, 0, 0, 10, 0, 4, 8},
    {4, 4, 2, 0, 0, 0, 8, 8, 4, 0, 0, 0},     {0, 4, 0, 4, 2, 0, 0, 8, 0, 8, 4, 0},
    {0, 0, 4, 0, 4, 2, 0, 0, 8, 0, 8, 4},     {10, 3, 1, 0, 0, 0, 5, 7, 6, 0, 0, 0},
    {0, 10, 0, 3, 1, 0, 0, 5, 0, 7, 6, 0},    {0, 0, 10, 0, 3, 1, 0, 0, 5, 0, 7, 6},
};

inline const Rows kGPrimeSysParity = {
    {8, 2, 4, 5, 0, 0, 10, 0, 0, 10, 0, 0}, {0, 2, 0, 4, 10, 3, 0, 9, 0, 0, 5, 0},
    {0, 0, 4, 0, 0, 9, 8, 3, 7, 0, 0, 9},   {9, 9, 6, 3, 0, 0, 9, 0, 0, 4, 0, 0},
    {0, 4, 0, 7, 9, 2, 0, 4, 0, 0, 9, 0},   {0, 0, 3, 0, 0, 1, 1, 2, 10, 0, 0, 8},
    {9, 10, 2, 3, 0, 0, 5, 0, 0, 7, 0, 0},  {0, 1, 0, 9, 6, 6, 0, 2, 0, 0, 4, 0},
    {0, 0, 7, 0, 0, 4, 4, 6, 9, 0, 0, 1},   {1, 6, 6, 5, 0, 0, 8, 0, 0, 5, 0, 0},
    {0, 5, 0, 1, 9, 6, 0, 2, 0, 0, 1, 0},   {0, 0, 6, 0, 0, 7, 1, 6, 9, 0, 0, 9},
};

// Identity on the 12 systematic rows followed by the printed parity rows.
inline Rows systematic(const Rows& parity) {
  Rows rows;
  for (std::size_t i = 0; i < 12; ++i) {
    std::vector<sparsepm::Scalar> row(12, 0);
    row[i] = 1;
    rows.push_back(row);
  }
  rows.insert(rows.end(), parity.begin(), parity.end());
  return rows;
}

}  // namespace golden
