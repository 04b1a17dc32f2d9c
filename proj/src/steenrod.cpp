#include "grqn/steenrod.hpp"

#include "grqn/errors.hpp"
#include "grqn/formulas.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace grqn {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

Monomial Monomial::generator(int d, int j)
{
    if (j < 1 || j > d)
        throw IndexOutOfRange("w_" + std::to_string(j) + " outside ambient " + std::to_string(d));
    Monomial m(d);
    m.exps_[static_cast<std::size_t>(j - 1)] = 1;
    return m;
}

int Monomial::degree() const
{
    int deg = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        deg += static_cast<int>(i + 1) * exps_[i];
    return deg;
}

int Monomial::length() const
{
    int len = 0;
    for (Exponent e : exps_)
        len += e;
    return len;
}

bool Monomial::is_unit() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (other.ambient() != ambient())
        throw AmbientMismatch("monomial ambient mismatch");
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = static_cast<Exponent>(out.exps_[i] + other.exps_[i]);
    return out;
}

Monomial Monomial::frobenius(int k) const
{
    Monomial out = *this;
    for (Exponent& e : out.exps_)
        e = static_cast<Exponent>(e << k);
    return out;
}

std::string Monomial::to_string() const
{
    if (is_unit())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!first)
            out << '*';
        first = false;
        out << 'w' << i + 1;
        if (exps_[i] > 1)
            out << '^' << exps_[i];
    }
    return out.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) {
        h ^= e;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

// Sort and cancel pairs of equal terms.
void normalize(std::vector<Monomial>& terms)
{
    std::sort(terms.begin(), terms.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1) {
            if (out != i)
                terms[out] = std::move(terms[i]);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

void require_same_ambient(const Polynomial& a, const Polynomial& b)
{
    if (a.ambient() != b.ambient())
        throw AmbientMismatch("polynomials live in different ambient rings: d=" + std::to_string(a.ambient())
                              + " vs d=" + std::to_string(b.ambient()));
}

Polynomial truncate(const Polynomial& p, int max_degree)
{
    std::vector<Monomial> kept;
    for (const Monomial& m : p.terms())
        if (m.degree() <= max_degree)
            kept.push_back(m);
    return Polynomial(p.ambient(), std::move(kept));
}

Polynomial frobenius(const Polynomial& p, int k)
{
    std::vector<Monomial> terms;
    terms.reserve(p.size());
    for (const Monomial& m : p.terms())
        terms.push_back(m.frobenius(k));
    return Polynomial(p.ambient(), std::move(terms));
}

}  // namespace

Polynomial::Polynomial(int d, std::vector<Monomial> terms) : d_(d), terms_(std::move(terms))
{
    for (const Monomial& m : terms_)
        if (m.ambient() != d_)
            throw AmbientMismatch("monomial ambient does not match polynomial ambient");
    normalize(terms_);
}

Polynomial Polynomial::one(int d)
{
    return Polynomial(d, {Monomial(d)});
}

Polynomial Polynomial::generator(int d, int j)
{
    return Polynomial(d, {Monomial::generator(d, j)});
}

Polynomial Polynomial::from_monomial(const Monomial& m)
{
    return Polynomial(m.ambient(), {m});
}

Polynomial Polynomial::parse(int d, std::string_view text)
{
    std::vector<Monomial> terms;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_int = [&]() -> int {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw Error("polynomial parse error at offset " + std::to_string(pos));
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return v;
    };
    bool any_term = false;
    while (true) {
        skip_space();
        if (pos >= text.size())
            break;
        Monomial term(d);
        bool is_zero = false;
        bool any_factor = false;
        while (true) {
            skip_space();
            if (pos < text.size() && text[pos] == 'w') {
                ++pos;
                const int j = read_int();
                int e = 1;
                skip_space();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = read_int();
                }
                if (j > d) {
                    is_zero = true;
                } else {
                    Monomial g = Monomial::generator(d, j);
                    for (int k = 0; k < e; ++k)
                        term = term * g;
                }
                any_factor = true;
            } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                const int c = read_int();
                if (c % 2 == 0)
                    is_zero = true;
                any_factor = true;
            } else {
                break;
            }
            skip_space();
            if (pos < text.size() && text[pos] == '*')
                ++pos;
        }
        if (!any_factor)
            throw Error("polynomial parse error at offset " + std::to_string(pos));
        if (!is_zero)
            terms.push_back(std::move(term));
        any_term = true;
        skip_space();
        if (pos < text.size()) {
            if (text[pos] != '+')
                throw Error("polynomial parse error at offset " + std::to_string(pos));
            ++pos;
            skip_space();
            if (pos >= text.size())
                throw Error("polynomial ends with '+'");
        }
    }
    if (!any_term)
        throw Error("empty polynomial text");
    return Polynomial(d, std::move(terms));
}

bool Polynomial::contains(const Monomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

Polynomial Polynomial::homogeneous_part(int degree) const
{
    std::vector<Monomial> kept;
    for (const Monomial& m : terms_)
        if (m.degree() == degree)
            kept.push_back(m);
    return Polynomial(d_, std::move(kept));
}

bool Polynomial::is_homogeneous() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Monomial& m) { return m.degree() == terms_.front().degree(); });
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_ambient(*this, other);
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_ambient(a, b);
    std::vector<Monomial> products;
    products.reserve(a.size() * b.size());
    for (const Monomial& x : a.terms())
        for (const Monomial& y : b.terms())
            products.push_back(x * y);
    return Polynomial(a.ambient(), std::move(products));
}

Polynomial Polynomial::pow(int e) const
{
    Polynomial result = one(d_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<Monomial> ordered = terms_;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Monomial& x, const Monomial& y) { return x.degree() < y.degree(); });
    std::string out;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (i)
            out += " + ";
        out += ordered[i].to_string();
    }
    return out;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q)
{
    return p * q;
}

Polynomial sq_generator(int i, int j, int d)
{
    Polynomial out(d);
    if (i < 0 || j < 1 || j > d || i > j)
        return out;
    if (i == 0)
        return Polynomial::generator(d, j);
    std::vector<Monomial> terms;
    for (int t = 0; t <= i; ++t) {
        // binom(j - i + t - 1, t); the top is -1 only when t = 0 and i = j.
        const int top = j - i + t - 1;
        const bool odd = top < 0 ? t == 0 : binom_parity(top, t);
        if (!odd || j + t > d)
            continue;
        Monomial m = Monomial::generator(d, j + t);
        if (i - t > 0)
            m = m * Monomial::generator(d, i - t);
        terms.push_back(std::move(m));
    }
    return Polynomial(d, std::move(terms));
}

Polynomial sq_total(const Polynomial& p, int max_degree)
{
    const int d = p.ambient();
    // Total squares of the generators, Sq(w_j) = sum_a Sq^a(w_j).
    std::vector<Polynomial> total_gen;
    for (int j = 1; j <= d; ++j) {
        Polynomial s(d);
        for (int a = 0; a <= j; ++a)
            s += sq_generator(a, j, d);
        total_gen.push_back(std::move(s));
    }
    Polynomial result(d);
    for (const Monomial& m : p.terms()) {
        if (m.degree() > max_degree)
            continue;
        Polynomial acc = Polynomial::one(d);
        for (int j = 1; j <= d && !acc.is_zero(); ++j) {
            const int r = m.exponent(j);
            // Sq(x^{2^b}) is the 2^b-th Frobenius power of Sq(x).
            for (int b = 0; (r >> b) != 0; ++b) {
                if (((r >> b) & 1) == 0)
                    continue;
                acc = truncate(acc * truncate(frobenius(total_gen[static_cast<std::size_t>(j - 1)], b), max_degree),
                               max_degree);
            }
        }
        result += acc;
    }
    return result;
}

Polynomial sq(int i, const Polynomial& p)
{
    if (i == 0)
        return p;
    Polynomial result(p.ambient());
    if (i < 0)
        return result;
    for (const Monomial& m : p.terms()) {
        const int target = m.degree() + i;
        result += sq_total(Polynomial::from_monomial(m), target).homogeneous_part(target);
    }
    return result;
}

namespace {

struct QnMemo {
    std::shared_mutex mutex;
    std::map<std::tuple<int, int, int>, Polynomial> table;
};

QnMemo& qn_memo()
{
    static QnMemo memo;
    return memo;
}

}  // namespace

const Polynomial& milnor_q_generator(int n, int j, int d)
{
    if (n < 0)
        throw Error("Q_n needs n >= 0");
    if (j < 1 || j > d)
        throw IndexOutOfRange("w_" + std::to_string(j) + " outside ambient " + std::to_string(d));
    QnMemo& memo = qn_memo();
    const auto key = std::make_tuple(n, j, d);
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.table.find(key);
        if (it != memo.table.end())
            return it->second;
    }
    Polynomial value(d);
    if (n == 0) {
        value = sq_generator(1, j, d);
    } else {
        // Q_n = Sq^{2^n} Q_{n-1} + Q_{n-1} Sq^{2^n}
        const int s = 1 << n;
        value = sq(s, milnor_q_generator(n - 1, j, d)) + milnor_q(n - 1, sq_generator(s, j, d));
    }
    std::unique_lock lock(memo.mutex);
    return memo.table.emplace(key, std::move(value)).first->second;
}

Polynomial milnor_q(int n, const Polynomial& p)
{
    const int d = p.ambient();
    std::vector<Monomial> terms;
    for (const Monomial& m : p.terms()) {
        for (int j = 1; j <= d; ++j) {
            const int r = m.exponent(j);
            if (r % 2 == 0)
                continue;
            auto exps = m.exponents();
            exps[static_cast<std::size_t>(j - 1)] -= 1;
            const Monomial rest(std::move(exps));
            for (const Monomial& q : milnor_q_generator(n, j, d).terms())
                terms.push_back(rest * q);
        }
    }
    return Polynomial(d, std::move(terms));
}

Polynomial dual_class(int k, int d)
{
    if (k < 0)
        return Polynomial(d);
    std::vector<Polynomial> bar;
    bar.push_back(Polynomial::one(d));
    for (int t = 1; t <= k; ++t) {
        Polynomial next(d);
        for (int i = 1; i <= std::min(d, t); ++i)
            next += Polynomial::generator(d, i) * bar[static_cast<std::size_t>(t - i)];
        bar.push_back(std::move(next));
    }
    return bar.back();
}

Polynomial s_class(int k, int d)
{
    if (k <= 0)
        return Polynomial(d);
    // p_0 is taken as zero so that p_k = sum_i w_i p_{k-i} + k w_k.
    std::vector<Polynomial> power;
    power.emplace_back(d);
    for (int t = 1; t <= k; ++t) {
        Polynomial next(d);
        for (int i = 1; i <= std::min(d, t); ++i)
            next += Polynomial::generator(d, i) * power[static_cast<std::size_t>(t - i)];
        if (t % 2 == 1 && t <= d)
            next += Polynomial::generator(d, t);
        power.push_back(std::move(next));
    }
    return power.back();
}

}  // namespace grqn
