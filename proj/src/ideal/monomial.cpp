#include "cwl/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace cwl {

namespace {

void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::AmbientMismatch, "monomials live in rings with different variable counts");
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

} // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars)
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    Monomial m(nvars);
    m.e_[i] = 1;
    return m;
}

Monomial Monomial::from_support(std::size_t nvars, VertexMask support) {
    Monomial m(nvars);
    for (Vertex v : VertexSet(support)) {
        if (v >= nvars)
            throw Error(ErrorCode::InvalidArgument, "support outside the ambient ring");
        m.e_[v] = 1;
    }
    return m;
}

std::size_t Monomial::degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::size_t{0});
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x <= 1; });
}

Exponent Monomial::max_exponent() const {
    return e_.empty() ? 0 : *std::max_element(e_.begin(), e_.end());
}

VertexMask Monomial::support_mask() const {
    if (e_.size() > 64)
        throw Error(ErrorCode::TooLarge, "support masks need at most 64 variables");
    VertexMask m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i])
            m |= bit(i);
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    check_same_ring(*this, other);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    check_same_ring(*this, other);
    Monomial out(nvars());
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = std::max(e_[i], other.e_[i]);
    return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
    check_same_ring(*this, other);
    Monomial out(nvars());
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = std::min(e_[i], other.e_[i]);
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
    check_same_ring(*this, other);
    Monomial out(nvars());
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = e_[i] + other.e_[i];
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this))
        throw Error(ErrorCode::InvalidArgument, "monomial quotient is not exact");
    Monomial out(nvars());
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = e_[i] - other.e_[i];
    return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    if (names.size() != e_.size())
        throw Error(ErrorCode::AmbientMismatch, "name list does not match the monomial");
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += names[i];
        if (e_[i] > 1)
            out += '^' + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

bool generator_less(const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db)
        return da < db;
    return a > b;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Exponent x : m.exponents())
        h = (h ^ x) * 0x100000001b3ULL;
    return h;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), generator_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    std::vector<std::size_t> degrees;
    for (auto& m : gens) {
        const std::size_t d = m.degree();
        bool redundant = false;
        for (std::size_t j = 0; j < kept.size() && degrees[j] < d; ++j) {
            if (kept[j].divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept.push_back(std::move(m));
            degrees.push_back(d);
        }
    }
    return kept;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names) {
    Monomial m(names.size());
    const std::string body = trim(text);
    if (body.empty())
        throw Error(ErrorCode::Parse, "empty monomial");
    if (body == "1")
        return m;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t end = body.find('*', start);
        if (end == std::string::npos)
            end = body.size();
        std::string factor = trim(body.substr(start, end - start));
        Exponent power = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            std::string digits = trim(factor.substr(caret + 1));
            factor = trim(factor.substr(0, caret));
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
            if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
                throw Error(ErrorCode::Parse, "bad exponent in '" + body + "'");
        }
        auto it = std::find(names.begin(), names.end(), factor);
        if (it == names.end())
            throw Error(ErrorCode::Parse, "unknown variable '" + factor + "'");
        m[static_cast<std::size_t>(it - names.begin())] += power;
        start = end + 1;
    }
    return m;
}

} // namespace cwl
