#include "sortic/integer.hpp"

#include <boost/multiprecision/integer.hpp>
#include <limits>

namespace sortic {

void ivec_make_primitive(IntVec& v) {
    Integer g = 0;
    for (const Integer& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0 || g == 1) return;
    for (Integer& x : v) x /= g;
}

bool ivec_is_zero(const IntVec& v) {
    for (const Integer& x : v)
        if (x != 0) return false;
    return true;
}

int ivec_rank(std::vector<IntVec> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Integer a = rows[row][col];
            Integer b = rows[r][col];
            for (size_t c = col; c < cols; ++c)
                rows[r][c] = rows[r][c] * a - rows[row][c] * b;
            ivec_make_primitive(rows[r]);
        }
        ++row;
    }
    return static_cast<int>(row);
}

std::string ivec_to_string(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    s += ")";
    return s;
}

long long to_long_checked(const Integer& x) {
    SORTIC_CHECK(x >= std::numeric_limits<long long>::min() &&
                     x <= std::numeric_limits<long long>::max(),
                 "integer out of 64-bit range: " + x.str());
    return static_cast<long long>(x);
}

} // namespace sortic
