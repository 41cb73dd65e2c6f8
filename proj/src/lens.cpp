#include "gl2skein/lens.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

namespace gl2skein {

namespace {

long positive_mod(long x, long p) {
    long r = x % p;
    return r < 0 ? r + p : r;
}

// Modular inverse of a mod p, for gcd(a,p) == 1, p >= 2.
long mod_inverse(long a, long p) {
    long t = 0, new_t = 1;
    long r = p, new_r = positive_mod(a, p);
    while (new_r != 0) {
        long quotient = r / new_r;
        std::tie(t, new_t) = std::make_tuple(new_t, t - quotient * new_t);
        std::tie(r, new_r) = std::make_tuple(new_r, r - quotient * new_r);
    }
    if (r != 1) throw DomainError("no modular inverse");
    return positive_mod(t, p);
}

// Extracts the scalar c with lhs == c * rhs; the two arguments must be exact
// scalar multiples of one another.
Scalar ratio(const AnnulusElement& lhs, const AnnulusElement& rhs) {
    if (rhs.is_zero()) throw IdentityCheckError("ratio against zero");
    const auto& [word, coeff] = *rhs.terms().begin();
    Scalar c = div_exact(lhs.coefficient(word), coeff);
    if (lhs != c * rhs) throw IdentityCheckError("elements are not proportional");
    return c;
}

Scalar monomial_inverse(const Scalar& m) {
    if (!m.is_monomial()) throw IdentityCheckError("expected a monomial");
    long e = m.min_exponent();
    return Scalar(Rational(1) / m.coefficient(e)) * Scalar::t_pow(-e);
}

}  // namespace

GluingMatrix gluing_for(long p, long q) {
    if (p < 1) throw DomainError("gluing_for requires p >= 1");
    if (std::gcd(p, q < 0 ? -q : q) != 1) throw DomainError("gluing_for requires gcd(p,q) == 1");
    GluingMatrix G;
    G.p = p;
    G.q = q;
    if (p == 1) {
        G.a = 0;
        G.b = 1;
        return G;
    }
    // a*q == -1 (mod p); take the absolute-minimal representative, positive
    // on ties.
    long a0 = positive_mod(-mod_inverse(q, p), p);
    long a = (2 * a0 <= p) ? a0 : a0 - p;
    G.a = a;
    G.b = (a * q + 1) / p;
    return G;
}

std::pair<long, long> abs_min_remainder(long x, long p) {
    if (p < 1) throw DomainError("abs_min_remainder requires p >= 1");
    long r = positive_mod(x, p);
    // Candidates r and r - p; on a tie the lower s0 wins, i.e. r - p.
    long w = (2 * r < p) ? r : r - p;
    return {(w - x) / p, w};
}

std::pair<long, long> solve_ma_kp(long n, const GluingMatrix& G) {
    if (G.p == 1) return {0, n};
    long ainv = mod_inverse(G.a, G.p);
    long r = positive_mod(positive_mod(n, G.p) * ainv, G.p);
    // Absolute-minimal representative, positive on ties.
    long m = (2 * r <= G.p) ? r : r - G.p;
    return {m, (n - m * G.a) / G.p};
}

TorusElement f_push(const TorusElement& element, const GluingMatrix& G) {
    TorusElement out;
    for (const auto& [w, c] : element.terms()) {
        TorusElement part = wedge(G.a * w.wr + G.p * w.ws, G.b * w.wr + G.q * w.ws);
        if (w.has_t) {
            part = mul(part, t_curve(G.a * w.tm + G.p * w.tn, G.b * w.tm + G.q * w.tn));
        }
        out += c * part;
    }
    return out;
}

LensElement LensElement::tensor(const AnnulusElement& left, const AnnulusElement& right,
                                const Scalar& coeff) {
    LensElement e;
    e.add_term(left, right, coeff);
    return e;
}

void LensElement::add_term(const AnnulusElement& left, const AnnulusElement& right,
                           const Scalar& coeff) {
    if (coeff.is_zero() || left.is_zero() || right.is_zero()) return;
    terms_.push_back(LensTerm{left, right, coeff});
}

bool LensElement::is_zero() const {
    for (const auto& t : terms_) {
        if (!t.coeff.is_zero() && !t.left.is_zero() && !t.right.is_zero()) return false;
    }
    return true;
}

LensElement& LensElement::operator+=(const LensElement& other) {
    for (const auto& t : other.terms_) terms_.push_back(t);
    return *this;
}

LensElement operator*(const Scalar& c, const LensElement& e) {
    LensElement out;
    for (const auto& t : e.terms_) out.add_term(t.left, t.right, c * t.coeff);
    return out;
}

void SpanningCoordinates::add(long n, long m, const ScalarFraction& value) {
    if (value.is_zero()) return;
    long f = half();
    if (n < 0 || n > f || m < -f || m > f) {
        throw DomainError("coordinate (" + std::to_string(n) + "," + std::to_string(m) +
                          ") outside the spanning grid for p=" + std::to_string(p_));
    }
    auto it = grid_.find({n, m});
    if (it == grid_.end()) {
        grid_.emplace(std::make_pair(n, m), value);
        return;
    }
    it->second = it->second + value;
    if (it->second.is_zero()) grid_.erase(it);
}

namespace {

// Zero-meridian lift of the T-form word (k)_T W(l); its projection back to
// the annulus is exactly t_core(k) * W(l).
TorusElement tform_lift(long k, long l) {
    return mul(t_curve(k, 0), wedge(l, 0));
}

// Left-factor replacement for u (x) w: the right factor w crosses the gluing
// as the sum of pushed-through lifts of its T-form words acting on u.
AnnulusElement cross_left(const AnnulusElement& u, const AnnulusElement& w,
                          const GluingMatrix& G) {
    AnnulusElement out;
    for (const auto& [kl, c] : to_tform(w)) {
        out += c * act(f_push(tform_lift(kl.first, kl.second), G), u);
    }
    return out;
}

}  // namespace

LensElement balance(const LensElement& e, const GluingMatrix& G) {
    LensElement out;
    AnnulusElement one = AnnulusElement::identity();
    for (const auto& term : e.terms()) {
        out.add_term(cross_left(term.left, term.right, G), one, term.coeff);
    }
    return out;
}

std::pair<std::pair<long, long>, Scalar> wedge_period(std::pair<long, long> kl,
                                                      const GluingMatrix& G,
                                                      PeriodDirection direction) {
    auto [k, l] = kl;
    if (direction == PeriodDirection::down) {
        return {{k, l - G.p}, Scalar::t_pow(2 * G.q * (G.p + k + 2 * (l - G.p)))};
    }
    return {{k, l + G.p}, Scalar::t_pow(-2 * G.q * (G.p + k + 2 * l))};
}

namespace {

// Scalar-valued grid coordinates used along the recursive path; wrapped into
// fractions only at the public boundary.
using Coords = std::map<std::pair<long, long>, Scalar>;

void add_scaled(Coords& target, const Coords& source, const Scalar& factor) {
    for (const auto& [key, value] : source) {
        Scalar& slot = target[key];
        slot += factor * value;
        if (slot.is_zero()) target.erase(key);
    }
}

struct ReduceContext {
    GluingMatrix G;
    long budget;
    std::map<std::pair<long, long>, Coords> word_memo;
    std::map<std::pair<long, long>, Coords> timage_memo;

    void charge() {
        if (--budget < 0) throw StepLimitExceeded();
    }
};

Coords reduce_word(ReduceContext& ctx, long n, long w);
Coords reduce_timage(ReduceContext& ctx, long mu, long w);

Coords reduce_annulus_elem(ReduceContext& ctx, const AnnulusElement& u) {
    Coords out;
    for (const auto& [word, c] : u.terms()) {
        add_scaled(out, reduce_word(ctx, word.n, word.r), c);
    }
    return out;
}

// Balanced act of the pushed-through lift of (k2)_T W(l2) on the pure wedge
// W(w): the wedge part of the pushed word folds into the wedge index, the
// curve part recurses through reduce_timage.
Coords reduce_lifted_act(ReduceContext& ctx, long k2, long l2, long w) {
    TorusElement fp = f_push(tform_lift(k2, l2), ctx.G);
    Coords out;
    for (const auto& [word, c] : fp.terms()) {
        TorusElement wedge_part = wedge(word.wr, word.ws);
        AnnulusElement folded = act(wedge_part, wedge1(w));
        if (folded.terms().size() != 1) throw IdentityCheckError("wedge action not a monomial");
        const auto& [fword, fcoeff] = *folded.terms().begin();
        if (fword.n != 0) throw IdentityCheckError("wedge action produced a core");
        Scalar factor = c * fcoeff;
        if (!word.has_t) {
            add_scaled(out, reduce_word(ctx, 0, fword.r), factor);
            continue;
        }
        // The curve part of a pushed lift is (a*k2, b*k2) up to the cone
        // flip, i.e. the image of +-k2.
        long mu;
        if (word.tm == ctx.G.a * k2 && word.tn == ctx.G.b * k2) {
            mu = k2;
        } else if (word.tm == -ctx.G.a * k2 && word.tn == -ctx.G.b * k2) {
            mu = -k2;
        } else {
            throw IdentityCheckError("pushed lift has an unexpected curve part");
        }
        add_scaled(out, reduce_timage(ctx, mu, fword.r), factor);
    }
    return out;
}

// Grid coordinates of [T(a*mu, b*mu) . W(w)] (x) 1.
//
// For |mu| >= 2 the curve index a*mu is replaced through the balance
// relation for x(mu, s*), where s* twists a*mu into its absolute-minimal
// residue: the relation's leading T-form word reproduces the target with a
// monomial coefficient, every other word carries a strictly smaller curve
// index, and the twisted side has a small enough core to expand eagerly.
Coords reduce_timage(ReduceContext& ctx, long mu, long w) {
    auto memo_it = ctx.timage_memo.find({mu, w});
    if (memo_it != ctx.timage_memo.end()) return memo_it->second;
    ctx.charge();
    const GluingMatrix& G = ctx.G;
    Coords result;
    if (mu >= -1 && mu <= 1) {
        result = reduce_annulus_elem(ctx, act(t_curve(G.a * mu, G.b * mu), wedge1(w)));
        ctx.timage_memo.emplace(std::make_pair(mu, w), result);
        return result;
    }
    if (G.p == 1 && G.a == 0) {
        // Meridian images are scalar actions; no descent needed.
        result = reduce_annulus_elem(ctx, act(t_curve(0, G.b * mu), wedge1(w)));
        ctx.timage_memo.emplace(std::make_pair(mu, w), result);
        return result;
    }

    // Cone-normalize the actor and fold its wedge part into the target.
    TorusElement tc = t_curve(G.a * mu, G.b * mu);
    const auto& [word0, c0] = *tc.terms().begin();
    AnnulusElement folded = act(wedge(word0.wr, word0.ws), wedge1(w));
    const auto& [fword, fcoeff] = *folded.terms().begin();
    long w1 = fword.r;
    long mu_hat = (word0.wr == 0 && word0.ws == 0) ? mu : -mu;
    Scalar outer = c0 * fcoeff;

    auto [s_star, m_star] = abs_min_remainder(G.a * mu_hat, G.p);
    long n_star = G.b * mu_hat + G.q * s_star;
    TForm tf = to_tform(x(mu_hat, s_star));

    long abs_mu = mu_hat < 0 ? -mu_hat : mu_hat;
    std::pair<long, long> lead_key{abs_mu, (mu_hat - abs_mu) / 2};
    auto lead_it = tf.find(lead_key);
    if (lead_it == tf.end()) throw IdentityCheckError("missing leading T-form word");
    Scalar lead = lead_it->second;
    tf.erase(lead_it);

    // The pushed lift of the leading word must reproduce the target actor.
    TorusElement fp_lead = f_push(tform_lift(lead_key.first, lead_key.second), G);
    const auto& [lword, lcoeff] = *fp_lead.terms().begin();
    if (!lword.has_t || lword.tm != G.a * mu_hat || lword.tn != G.b * mu_hat || lword.wr != 0) {
        throw IdentityCheckError("leading lift does not match the target actor");
    }
    AnnulusElement lfold = act(wedge(lword.wr, lword.ws), wedge1(w1));
    Scalar lead_total = lead * lcoeff * ratio(lfold, wedge1(w1));

    Coords lhs = reduce_annulus_elem(ctx, act(t_curve(m_star, n_star), wedge1(w1)));
    Coords rest;
    for (const auto& [kl, c] : tf) {
        add_scaled(rest, reduce_lifted_act(ctx, kl.first, kl.second, w1), c);
    }

    Coords target;
    Scalar inv = monomial_inverse(lead_total);
    add_scaled(target, lhs, inv);
    add_scaled(target, rest, -inv);
    add_scaled(result, target, outer);
    ctx.timage_memo.emplace(std::make_pair(mu, w), result);
    return result;
}

// Grid coordinates of x(am+kp, bm+kq) * y(ar+ps, br+qs) (x) 1.
Coords reduce_xy_inner(ReduceContext& ctx, long m, long k, long r, long s) {
    ctx.charge();
    const GluingMatrix& G = ctx.G;
    long big_m = G.a * m + G.p * k;
    long big_n = G.b * m + G.q * k;
    long big_r = G.a * r + G.p * s;
    long big_s = G.b * r + G.q * s;
    AnnulusElement vy = y(big_r, big_s);
    // x(M,N) * y(R,S) is a monomial multiple of the curve action on y(R,S).
    Scalar c1 = ratio(mul(x(big_m, big_n), vy), act(t_curve(big_m, big_n), vy));
    Scalar vy_coeff = vy.terms().begin()->second;
    long vy_wedge = vy.terms().begin()->first.r;

    Coords out;
    for (const auto& [kl, c] : to_tform(x(m, k))) {
        add_scaled(out, reduce_lifted_act(ctx, kl.first, kl.second, vy_wedge), c * vy_coeff);
    }
    Coords scaled;
    add_scaled(scaled, out, c1);
    return scaled;
}

// Canonical word (n) W(w) (x) 1.  Cores above the grid radius are lowered by
// isolating (n) inside x(n, mb+kq); windings outside the grid are folded by
// the period identity in the T-form basis.
Coords reduce_word(ReduceContext& ctx, long n, long w) {
    auto memo_it = ctx.word_memo.find({n, w});
    if (memo_it != ctx.word_memo.end()) return memo_it->second;
    ctx.charge();
    const GluingMatrix& G = ctx.G;
    long f = G.half();
    Coords result;

    if (n <= f && w >= -f && w <= f) {
        result[{n, w}] = Scalar(1);
        ctx.word_memo.emplace(std::make_pair(n, w), result);
        return result;
    }

    if (n <= f) {
        // Winding normalization.
        TForm tf = to_tform(AnnulusElement::single(AnnulusWord{n, w}, Scalar(1)));
        for (const auto& [kl, c] : tf) {
            auto [k, l] = kl;
            auto [s0, l0] = abs_min_remainder(l, G.p);
            (void)s0;
            Scalar mono(1);
            std::pair<long, long> cur{k, l};
            while (cur.second > l0) {
                ctx.charge();
                auto [next, coeff] = wedge_period(cur, G, PeriodDirection::down);
                mono *= coeff;
                cur = next;
            }
            while (cur.second < l0) {
                ctx.charge();
                auto [next, coeff] = wedge_period(cur, G, PeriodDirection::up);
                mono *= coeff;
                cur = next;
            }
            AnnulusElement back = from_tform(TForm{{cur, Scalar(1)}});
            add_scaled(result, reduce_annulus_elem(ctx, back), c * mono);
        }
        ctx.word_memo.emplace(std::make_pair(n, w), result);
        return result;
    }

    // Core reduction: write n = m*a + k*p, isolate (n) as the leading word
    // of x(n, mb+kq), and trade the wedge for a y with matched indices.
    auto [m, k] = solve_ma_kp(n, G);
    long nu = G.b * m + G.q * k;
    AnnulusElement big_x = x(n, nu);
    Scalar lead = big_x.coefficient(AnnulusWord{n, 0});
    Scalar lead_inv = monomial_inverse(lead);

    auto [r, s] = solve_ma_kp(w, G);
    long sigma = G.b * r + G.q * s;
    Scalar cy = ratio(wedge1(w), y(w, sigma));

    add_scaled(result, reduce_xy_inner(ctx, m, k, r, s), lead_inv * cy);
    for (const auto& [word, c] : big_x.terms()) {
        if (word.n == n) continue;
        add_scaled(result, reduce_word(ctx, word.n, word.r + w), -(lead_inv * c));
    }
    ctx.word_memo.emplace(std::make_pair(n, w), result);
    return result;
}

SpanningCoordinates wrap_coords(const Coords& coords, long p) {
    SpanningCoordinates out(p);
    for (const auto& [key, value] : coords) {
        out.add(key.first, key.second, ScalarFraction(value));
    }
    return out;
}

}  // namespace

SpanningCoordinates reduce_xy(long m, long k, long r, long s, const GluingMatrix& G,
                              const ReduceOptions& options) {
    ReduceContext ctx{G, options.step_budget, {}, {}};
    return wrap_coords(reduce_xy_inner(ctx, m, k, r, s), G.p);
}

SpanningCoordinates reduce(const LensElement& e, const GluingMatrix& G,
                           const ReduceOptions& options) {
    ReduceContext ctx{G, options.step_budget, {}, {}};
    LensElement balanced = balance(e, G);
    Coords out;
    for (const auto& term : balanced.terms()) {
        for (const auto& [word, c] : term.left.terms()) {
            add_scaled(out, reduce_word(ctx, word.n, word.r), term.coeff * c);
        }
    }
    return wrap_coords(out, G.p);
}

namespace {

bool element_in_window(const AnnulusElement& u, const Window& window) {
    for (const auto& [word, c] : u.terms()) {
        (void)c;
        if (word.n > window.core_max || word.r > window.winding_max ||
            word.r < -window.winding_max) {
            return false;
        }
    }
    return true;
}

Relation to_relation(const AnnulusElement& u) {
    Relation rel;
    for (const auto& [word, c] : u.terms()) rel.emplace(word, ScalarFraction(c));
    return rel;
}

}  // namespace

std::vector<Relation> relation_set(const GluingMatrix& G, const Window& window) {
    if (window.core_max < 0 || window.winding_max < 0) {
        throw DomainError("relation_set requires nonnegative window bounds");
    }
    std::vector<Relation> out;
    for (long k = 0; k <= window.core_max; ++k) {
        for (long l = -window.winding_max; l <= window.winding_max; ++l) {
            AnnulusElement u = from_tform(TForm{{{k, l}, Scalar(1)}});
            if (!element_in_window(u, window)) continue;
            for (long mu = -2; mu <= 2; ++mu) {
                for (long nv = -2; nv <= 2; ++nv) {
                    if (mu == 0 && nv == 0) continue;
                    long im = G.a * mu + G.p * nv;
                    long in = G.b * mu + G.q * nv;
                    AnnulusElement rel_t =
                        act(t_curve(im, in), u) - cross_left(u, x(mu, nv), G);
                    if (!rel_t.is_zero() && element_in_window(rel_t, window)) {
                        out.push_back(to_relation(rel_t));
                    }
                    AnnulusElement rel_w = act(wedge(im, in), u) - cross_left(u, y(mu, nv), G);
                    if (!rel_w.is_zero() && element_in_window(rel_w, window)) {
                        out.push_back(to_relation(rel_w));
                    }
                }
            }
        }
    }
    return out;
}

namespace {

// Elimination order: non-grid words first, most complex first, so every pivot
// rewrites a non-grid word in terms of simpler ones.  Grid words are never
// pivots.
struct WordOrder {
    long half;
    bool in_grid(const AnnulusWord& w) const {
        return w.n <= half && w.r >= -half && w.r <= half;
    }
    // Returns true when a should be eliminated before b.
    bool operator()(const AnnulusWord& a, const AnnulusWord& b) const {
        bool ga = in_grid(a), gb = in_grid(b);
        if (ga != gb) return !ga;
        long aw = a.r < 0 ? -a.r : a.r;
        long bw = b.r < 0 ? -b.r : b.r;
        return std::tuple(a.n, aw, a.r, ga ? 0 : 1) > std::tuple(b.n, bw, b.r, ga ? 0 : 1);
    }
};

}  // namespace

SpanningCoordinates reduce_solver(const LensElement& e, const GluingMatrix& G,
                                  const Window& window) {
    if (window.core_max <= 0 || window.winding_max <= 0) {
        throw DomainError("reduce_solver requires positive window bounds");
    }
    LensElement balanced = balance(e, G);
    std::map<AnnulusWord, ScalarFraction> vec;
    for (const auto& term : balanced.terms()) {
        for (const auto& [word, c] : term.left.terms()) {
            ScalarFraction& slot = vec[word];
            slot = slot + ScalarFraction(term.coeff * c);
            if (slot.is_zero()) vec.erase(word);
        }
    }
    for (const auto& [word, value] : vec) {
        (void)value;
        if (word.n > window.core_max || word.r > window.winding_max ||
            word.r < -window.winding_max) {
            throw WindowTooSmall("input word outside the solver window");
        }
    }

    WordOrder order{G.half()};
    std::vector<Relation> rows = relation_set(G, window);

    // Collect candidate pivot columns: all non-grid words seen anywhere.
    std::vector<AnnulusWord> columns;
    {
        std::map<AnnulusWord, bool, WordOrder> seen(order);
        for (const auto& row : rows) {
            for (const auto& [word, c] : row) {
                (void)c;
                if (!order.in_grid(word)) seen.emplace(word, true);
            }
        }
        for (const auto& [word, flag] : seen) {
            (void)flag;
            columns.push_back(word);
        }
    }

    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<AnnulusWord, Relation>> pivots;
    for (const AnnulusWord& column : columns) {
        // Pick the sparsest unused row with a nonzero entry in this column
        // whose every other word is simpler than the column.
        std::size_t best = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto it = rows[i].find(column);
            if (it == rows[i].end() || it->second.is_zero()) continue;
            bool leading = true;
            for (const auto& [word, c] : rows[i]) {
                (void)c;
                if (!(word == column) && order(word, column)) {
                    leading = false;
                    break;
                }
            }
            if (!leading) continue;
            if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
        }
        if (best == rows.size()) continue;
        used[best] = true;
        Relation pivot = rows[best];
        ScalarFraction inv = pivot.at(column).inverse();
        for (auto& [word, c] : pivot) c = c * inv;
        // Eliminate this column from the remaining rows.
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto it = rows[i].find(column);
            if (it == rows[i].end()) continue;
            ScalarFraction factor = it->second;
            for (const auto& [word, c] : pivot) {
                ScalarFraction& slot = rows[i][word];
                slot = slot - factor * c;
                if (slot.is_zero()) rows[i].erase(word);
            }
        }
        pivots.emplace_back(column, std::move(pivot));
    }

    // Substitute pivots into the input until only grid words remain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [column, pivot] : pivots) {
            auto it = vec.find(column);
            if (it == vec.end()) continue;
            ScalarFraction factor = it->second;
            for (const auto& [word, c] : pivot) {
                ScalarFraction& slot = vec[word];
                slot = slot - factor * c;
                if (slot.is_zero()) vec.erase(word);
            }
            changed = true;
        }
    }

    SpanningCoordinates out(G.p);
    for (const auto& [word, value] : vec) {
        if (!order.in_grid(word)) {
            throw WindowTooSmall("relations in the window do not reach word (" +
                                 std::to_string(word.n) + "," + std::to_string(word.r) + ")");
        }
        out.add(word.n, word.r, value);
    }
    return out;
}

namespace {

// Triangular pivot set for the relations supported entirely on grid words,
// keyed by the gluing matrix.
const std::vector<std::pair<AnnulusWord, Relation>>& grid_pivots(const GluingMatrix& G) {
    static std::map<std::tuple<long, long, long, long>,
                    std::vector<std::pair<AnnulusWord, Relation>>>
        cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(G.a, G.b, G.p, G.q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    long f = G.half();
    std::vector<Relation> rows = relation_set(G, Window{f, f});
    WordOrder order{f};
    std::vector<std::pair<AnnulusWord, Relation>> pivots;
    // Enumerate grid words from most to least complex.
    std::vector<AnnulusWord> columns;
    for (long n = f; n >= 0; --n) {
        for (long w = f; w >= -f; --w) columns.push_back(AnnulusWord{n, w});
    }
    std::sort(columns.begin(), columns.end(),
              [&order](const AnnulusWord& a, const AnnulusWord& b) { return order(a, b); });
    std::vector<bool> used(rows.size(), false);
    for (const AnnulusWord& column : columns) {
        std::size_t best = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto found = rows[i].find(column);
            if (found == rows[i].end() || found->second.is_zero()) continue;
            bool leading = true;
            for (const auto& [word, c] : rows[i]) {
                (void)c;
                if (!(word == column) && order(word, column)) {
                    leading = false;
                    break;
                }
            }
            if (!leading) continue;
            if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
        }
        if (best == rows.size()) continue;
        used[best] = true;
        Relation pivot = rows[best];
        ScalarFraction inv = pivot.at(column).inverse();
        for (auto& [word, c] : pivot) c = c * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto found = rows[i].find(column);
            if (found == rows[i].end()) continue;
            ScalarFraction factor = found->second;
            for (const auto& [word, c] : pivot) {
                ScalarFraction& slot = rows[i][word];
                slot = slot - factor * c;
                if (slot.is_zero()) rows[i].erase(word);
            }
        }
        pivots.emplace_back(column, std::move(pivot));
    }
    return cache.emplace(key, std::move(pivots)).first->second;
}

}  // namespace

SpanningCoordinates fold_grid_relations(const SpanningCoordinates& coords,
                                        const GluingMatrix& G) {
    std::map<AnnulusWord, ScalarFraction> vec;
    for (const auto& [key, value] : coords.grid()) {
        vec.emplace(AnnulusWord{key.first, key.second}, value);
    }
    const auto& pivots = grid_pivots(G);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [column, pivot] : pivots) {
            auto it = vec.find(column);
            if (it == vec.end()) continue;
            ScalarFraction factor = it->second;
            for (const auto& [word, c] : pivot) {
                ScalarFraction& slot = vec[word];
                slot = slot - factor * c;
                if (slot.is_zero()) vec.erase(word);
            }
            changed = true;
        }
    }
    SpanningCoordinates out(G.p);
    for (const auto& [word, value] : vec) out.add(word.n, word.r, value);
    return out;
}

}  // namespace gl2skein
