#include "gl2skein/annulus.hpp"

#include <mutex>
#include <vector>

namespace gl2skein {

AnnulusElement AnnulusElement::single(const AnnulusWord& word, const Scalar& coefficient) {
    AnnulusElement e;
    e.add(word, coefficient);
    return e;
}

Scalar AnnulusElement::coefficient(const AnnulusWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Scalar() : it->second;
}

void AnnulusElement::add(const AnnulusWord& word, const Scalar& coefficient) {
    if (coefficient.is_zero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_.emplace(word, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

AnnulusElement& AnnulusElement::operator+=(const AnnulusElement& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

AnnulusElement& AnnulusElement::operator-=(const AnnulusElement& other) {
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

AnnulusElement operator*(const Scalar& c, const AnnulusElement& e) {
    AnnulusElement out;
    for (const auto& [w, coeff] : e.terms_) out.add(w, c * coeff);
    return out;
}

AnnulusElement operator-(const AnnulusElement& e) {
    return Scalar(-1) * e;
}

AnnulusElement core(long n) {
    AnnulusWord w;
    if (n >= 0) {
        w.n = n;
    } else {
        w.n = -n;
        w.r = n;
    }
    return AnnulusElement::single(w, Scalar(1));
}

AnnulusElement wedge1(long r) {
    AnnulusWord w;
    w.r = r;
    return AnnulusElement::single(w, Scalar(1));
}

AnnulusElement mul(const AnnulusElement& u, const AnnulusElement& v) {
    AnnulusElement out;
    for (const auto& [wu, cu] : u.terms()) {
        for (const auto& [wv, cv] : v.terms()) {
            out.add(AnnulusWord{wu.n + wv.n, wu.r + wv.r}, cu * cv);
        }
    }
    return out;
}

namespace {

std::mutex memo_mutex;

}  // namespace

AnnulusElement t_core(long k) {
    if (k < 0) return mul(t_core(-k), wedge1(k));
    static std::vector<AnnulusElement> memo{Scalar(2) * AnnulusElement::identity(), core(1)};
    std::lock_guard<std::mutex> lock(memo_mutex);
    while (static_cast<long>(memo.size()) <= k) {
        std::size_t j = memo.size();
        memo.push_back(mul(core(1), memo[j - 1]) - mul(wedge1(1), memo[j - 2]));
    }
    return memo[static_cast<std::size_t>(k)];
}

AnnulusElement x(long m, long n) {
    static std::map<std::pair<long, long>, AnnulusElement> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({m, n});
        if (it != memo.end()) return it->second;
    }
    AnnulusElement value;
    if (m == 0) {
        value = (Scalar::t_pow(n) + Scalar::t_pow(-n)) * AnnulusElement::identity();
    } else if (m == 1) {
        value = Scalar::t_pow(n) * core(1);
    } else if (m == -1) {
        value = Scalar::t_pow(-n) * core(-1);
    } else if (m >= 2) {
        value = mul(core(1), x(m - 1, n)) - mul(wedge1(1), x(m - 2, n));
    } else {
        value = mul(core(-1), x(m + 1, n)) - mul(wedge1(-1), x(m + 2, n));
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(m, n), value);
    return value;
}

AnnulusElement y(long r, long s) {
    return Scalar::t_pow(-2 * r * s) * wedge1(r);
}

long winding(const AnnulusWord& word) {
    return word.n + 2 * word.r;
}

Scalar evaluate_unknots(const AnnulusElement& u) {
    Scalar unknot = Scalar::t_pow(1) + Scalar::t_pow(-1);
    Scalar out;
    for (const auto& [w, c] : u.terms()) {
        Scalar value(1);
        for (long i = 0; i < w.n; ++i) value *= unknot;
        out += c * value;
    }
    return out;
}

AnnulusElement from_tform(const TForm& tf) {
    AnnulusElement out;
    for (const auto& [kl, c] : tf) {
        out += c * mul(t_core(kl.first), wedge1(kl.second));
    }
    return out;
}

TForm to_tform(const AnnulusElement& u) {
    TForm out;
    AnnulusElement rest = u;
    while (!rest.is_zero()) {
        // Highest core index first; subtracting its T-form representative
        // only touches strictly smaller cores.
        AnnulusWord w = rest.terms().rbegin()->first;
        Scalar c = rest.terms().rbegin()->second;
        if (w.n == 0) c = Scalar(Rational(1, 2)) * c;
        out[{w.n, w.r}] += c;
        rest -= c * mul(t_core(w.n), wedge1(w.r));
    }
    // Prune exact cancellations.
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace gl2skein
