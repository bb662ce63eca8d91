#include "wlpw/rational.hpp"

#include <stdexcept>
#include <utility>

namespace wlpw {

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: " + text);
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational power(const Rational& base, unsigned exponent) {
    Rational result = 1;
    for (unsigned e = 0; e < exponent; ++e) {
        result *= base;
    }
    return result;
}

namespace {

// Row-reduces in place; returns pivot columns and the determinant sign/scale.
std::vector<std::size_t> reduce(RationalMatrix& m, Rational* det) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Rational scale = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            std::swap(m[p], m[r]);
            scale = -scale;
        }
        const Rational pivot = m[r][c];
        scale *= pivot;
        for (std::size_t j = c; j < cols; ++j) {
            m[r][j] /= pivot;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) {
                continue;
            }
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    if (det != nullptr) {
        *det = pivots.size() == rows && rows == cols ? scale : Rational(0);
    }
    return pivots;
}

}  // namespace

Rational determinant(RationalMatrix m) {
    if (!m.empty() && m.size() != m[0].size()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (m.empty()) {
        return 1;
    }
    Rational det;
    reduce(m, &det);
    return det;
}

std::size_t rank(RationalMatrix m) { return reduce(m, nullptr).size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
    if (m.empty()) {
        return {};
    }
    RationalMatrix work = m;
    const auto pivots = reduce(work, nullptr);
    const std::size_t cols = m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -work[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalVector solve(RationalMatrix m, RationalVector rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) {
        throw std::invalid_argument("solve: dimension mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        m[i].push_back(rhs[i]);
    }
    const auto pivots = reduce(m, nullptr);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) {
        throw std::domain_error("solve: singular system");
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = m[i][n];
    }
    return x;
}

bool rational_sqrt(const Rational& q, Rational* root) {
    if (sgn(q) < 0) {
        return false;
    }
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return false;
    }
    if (root != nullptr) {
        mpz_class a;
        mpz_class b;
        mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
        *root = Rational(a, b);
        root->canonicalize();
    }
    return true;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

}  // namespace wlpw
