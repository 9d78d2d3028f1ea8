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

#include "chansim/combinatorics.hpp"

#include <cctype>
#include <limits>

#include "chansim/error.hpp"

namespace chansim {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotPsd: return "NotPsd";
        case ErrorCode::SumNotIdentity: return "SumNotIdentity";
        case ErrorCode::TraceNotOne: return "TraceNotOne";
        case ErrorCode::InvalidPovm: return "InvalidPovm";
        case ErrorCode::InvalidDensity: return "InvalidDensity";
        case ErrorCode::NonRealResult: return "NonRealResult";
        case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::MassDrift: return "MassDrift";
        case ErrorCode::UnbalancedInstance: return "UnbalancedInstance";
        case ErrorCode::ZeroSupplyNode: return "ZeroSupplyNode";
        case ErrorCode::NotMajorized: return "NotMajorized";
        case ErrorCode::NotDoublyStochastic: return "NotDoublyStochastic";
        case ErrorCode::BadRange: return "BadRange";
        case ErrorCode::BadDelta: return "BadDelta";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
        case ErrorCode::NotStochastic: return "NotStochastic";
        case ErrorCode::WeightSumNotOne: return "WeightSumNotOne";
        case ErrorCode::NotPartitionOfUnity: return "NotPartitionOfUnity";
        case ErrorCode::InvalidEffect: return "InvalidEffect";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::OddNormIndex: return "OddNormIndex";
        case ErrorCode::TransportInfeasible: return "TransportInfeasible";
        case ErrorCode::LpInfeasible: return "LpInfeasible";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NotFullDimensional: return "NotFullDimensional";
        case ErrorCode::InvalidPolytope: return "InvalidPolytope";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    unsigned __int128 result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        // Exact at every step: result holds C(n, i) here.
        result = result * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw Error(ErrorCode::BadRange, "binomial coefficient overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t multinomial_count(const std::vector<int> &sorted_multiset) {
    std::uint64_t count = 1;
    std::int64_t placed = 0;
    size_t i = 0;
    while (i < sorted_multiset.size()) {
        size_t j = i;
        while (j < sorted_multiset.size() && sorted_multiset[j] == sorted_multiset[i]) {
            ++j;
        }
        auto run = static_cast<std::int64_t>(j - i);
        placed += run;
        count *= binomial(placed, run);
        i = j;
    }
    return count;
}

std::vector<std::vector<int>> enumerate_multisets(int k, int n) {
    std::vector<std::vector<int>> out;
    if (k <= 0 || n < 0) {
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(n), 0);
    while (true) {
        out.push_back(cur);
        int pos = n - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == k - 1) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        int v = cur[static_cast<size_t>(pos)] + 1;
        for (int q = pos; q < n; ++q) {
            cur[static_cast<size_t>(q)] = v;
        }
    }
    return out;
}

std::uint64_t tuple_count(int k, int n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / static_cast<std::uint64_t>(k)) {
            return 0;
        }
        total *= static_cast<std::uint64_t>(k);
    }
    return total <= cap ? total : 0;
}

std::vector<std::vector<int>> enumerate_tuples(int k, int n) {
    std::vector<std::vector<int>> out;
    if (k <= 0 || n < 0) {
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(n), 0);
    while (true) {
        out.push_back(cur);
        int pos = n - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == k - 1) {
            cur[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++cur[static_cast<size_t>(pos)];
    }
    return out;
}

std::vector<std::vector<int>> enumerate_subsets(int n, int d) {
    std::vector<std::vector<int>> out;
    if (d < 0 || d > n) {
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(d));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int pos = d - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == n - d + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++cur[static_cast<size_t>(pos)];
        for (int q = pos + 1; q < d; ++q) {
            cur[static_cast<size_t>(q)] = cur[static_cast<size_t>(q - 1)] + 1;
        }
    }
    return out;
}

namespace {

std::int64_t checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::BadRange, "rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Rational make(__int128 n, __int128 d) {
    if (d == 0) {
        throw Error(ErrorCode::BadRange, "zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    Rational r;
    r.num = checked(n);
    r.den = checked(d);
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = make(n, d);
}

Rational Rational::parse(const std::string &text) {
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            size_t used = 0;
            auto p = std::stoll(text.substr(0, slash), &used);
            if (used != slash) {
                throw Error(ErrorCode::InvalidInput, "bad rational '" + text + "'");
            }
            auto rest = text.substr(slash + 1);
            auto q = std::stoll(rest, &used);
            if (used != rest.size()) {
                throw Error(ErrorCode::InvalidInput, "bad rational '" + text + "'");
            }
            return Rational(p, q);
        }
        // Decimal: digits, optional '.', digits.
        bool negative = false;
        size_t i = 0;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            negative = text[i] == '-';
            ++i;
        }
        __int128 num = 0;
        __int128 den = 1;
        bool seen_dot = false;
        bool seen_digit = false;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c == '.' && !seen_dot) {
                seen_dot = true;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw Error(ErrorCode::InvalidInput, "bad rational '" + text + "'");
            }
            seen_digit = true;
            num = num * 10 + (c - '0');
            if (seen_dot) {
                den *= 10;
            }
            if (den > static_cast<__int128>(1e17) || num > static_cast<__int128>(1e17)) {
                throw Error(ErrorCode::InvalidInput, "too many digits in '" + text + "'");
            }
        }
        if (!seen_digit) {
            throw Error(ErrorCode::InvalidInput, "bad rational '" + text + "'");
        }
        return make(negative ? -num : num, den);
    } catch (const std::logic_error &) {
        throw Error(ErrorCode::InvalidInput, "bad rational '" + text + "'");
    }
}

std::string Rational::to_string() const {
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational &a, const Rational &b) {
    return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
}

Rational operator-(const Rational &a, const Rational &b) {
    return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
}

Rational operator*(const Rational &a, const Rational &b) {
    return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Rational operator/(const Rational &a, const Rational &b) {
    return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}

bool operator<(const Rational &a, const Rational &b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::int64_t ceil(const Rational &r) {
    std::int64_t q = r.num / r.den;
    if (r.num % r.den != 0 && r.num > 0) {
        ++q;
    }
    return q;
}

}  // namespace chansim
