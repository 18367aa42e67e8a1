#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace gridhfk {

// Integer Laurent polynomial in t, stored sparsely by exponent.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(std::map<int, std::int64_t> coeffs);
    static Laurent monomial(std::int64_t c, int e);

    std::int64_t coeff(int e) const;
    const std::map<int, std::int64_t>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int min_degree() const;
    int max_degree() const;
    std::int64_t at_one() const;

    void add(int e, std::int64_t c);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    // Exact division; throws InexactDivision when a remainder is left.
    Laurent divide_exact(const Laurent& d) const;

    // t -> t^-1
    Laurent reflect() const;
    Laurent shifted(int k) const;
    bool is_symmetric() const;

    // Shift and sign so that p(t) = p(1/t) and p(1) = 1; InexactDivision if
    // impossible.
    Laurent normalized_alexander() const;

    // "3t - 5 + 3t^-1"
    std::string to_string() const;

private:
    std::map<int, std::int64_t> c_;
};

}  // namespace gridhfk
