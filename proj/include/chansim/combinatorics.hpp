// Copyright 2026 The chansim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace chansim {

/// Exact C(n, k) in 64-bit arithmetic; 0 when k < 0 or k > n.
/// Throws Error(BadRange) on overflow.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Number of distinct orderings of a multiset given as a sorted index list.
std::uint64_t multinomial_count(const std::vector<int> &sorted_multiset);

/// Nondecreasing sequences of length n over [0, k), in lexicographic order.
std::vector<std::vector<int>> enumerate_multisets(int k, int n);

/// Number of sequences of length n over [0, k), or 0 on overflow past cap.
std::uint64_t tuple_count(int k, int n, std::uint64_t cap);

/// All length-n sequences over [0, k) in lexicographic order.
std::vector<std::vector<int>> enumerate_tuples(int k, int n);

/// All size-d subsets of [0, n) as sorted index lists, lexicographic.
std::vector<std::vector<int>> enumerate_subsets(int n, int d);

/// Exact rational with positive denominator, kept in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Parses "p/q", an integer, or a finite decimal such as "0.125".
    static Rational parse(const std::string &text);

    std::string to_string() const;

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    friend bool operator==(const Rational &a, const Rational &b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rational &a, const Rational &b);
    friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
    friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
    friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }
};

/// Smallest integer >= r.
std::int64_t ceil(const Rational &r);

}  // namespace chansim
