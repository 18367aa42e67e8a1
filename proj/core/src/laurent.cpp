#include "gridhfk/laurent.hpp"

#include <cstdlib>
#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

Laurent::Laurent(std::map<int, std::int64_t> coeffs) {
    for (const auto& [e, c] : coeffs)
        if (c != 0) c_[e] = c;
}

Laurent Laurent::monomial(std::int64_t c, int e) {
    Laurent p;
    p.add(e, c);
    return p;
}

std::int64_t Laurent::coeff(int e) const {
    const auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
}

int Laurent::min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
int Laurent::max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

std::int64_t Laurent::at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

void Laurent::add(int e, std::int64_t c) {
    if (c == 0) return;
    auto& v = c_[e];
    v += c;
    if (v == 0) c_.erase(e);
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [e, c] : o.c_) r.add(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [e, c] : o.c_) r.add(e, -c);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.add(e1 + e2, c1 * c2);
    return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero polynomial");
    const int dspan = d.max_degree() - d.min_degree();
    const std::int64_t lead = d.c_.rbegin()->second;
    Laurent q, rem = *this;
    while (!rem.is_zero() && rem.max_degree() - rem.min_degree() >= dspan) {
        const std::int64_t c = rem.c_.rbegin()->second;
        if (c % lead != 0) break;
        const Laurent t = monomial(c / lead, rem.max_degree() - d.max_degree());
        q = q + t;
        rem = rem - t * d;
    }
    if (!rem.is_zero())
        throw Error(ErrorCode::InexactDivision, to_string() + " is not divisible by " + d.to_string());
    return q;
}

Laurent Laurent::reflect() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

bool Laurent::is_symmetric() const { return *this == reflect(); }

Laurent Laurent::normalized_alexander() const {
    if (is_zero()) throw Error(ErrorCode::InexactDivision, "zero polynomial");
    const int s = min_degree() + max_degree();
    if (s % 2 != 0) throw Error(ErrorCode::InexactDivision, to_string() + " cannot be centred");
    Laurent p = shifted(-s / 2);
    if (p.at_one() < 0) p = Laurent() - p;
    if (!p.is_symmetric() || p.at_one() != 1)
        throw Error(ErrorCode::InexactDivision, to_string() + " is not an Alexander polynomial");
    return p;
}

std::string Laurent::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const int e = it->first;
        const std::int64_t c = it->second;
        const std::int64_t a = std::llabs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a;
        os << 't';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

}  // namespace gridhfk
