#include "gl2skein/action.hpp"

namespace gl2skein {

AnnulusElement project(const TorusElement& element) {
    AnnulusElement out;
    for (const auto& [w, c] : element.terms()) {
        long n = w.has_t ? w.tn : 0;
        Scalar factor = c * Scalar::t_pow(-2 * w.wr * n - 2 * w.wr * w.ws);
        AnnulusElement part = wedge1(w.wr);
        if (w.has_t) part = mul(x(w.tm, w.tn), part);
        out += factor * part;
    }
    return out;
}

AnnulusElement act(const TorusElement& element, const AnnulusElement& u) {
    AnnulusElement out;
    TForm base = to_tform(u);
    for (const auto& [w, c] : element.terms()) {
        // 2-labeled part acts first: shifts the winding index.
        TForm shifted;
        if (w.wr == 0 && w.ws == 0) {
            shifted = base;
        } else {
            for (const auto& [kl, coeff] : base) {
                auto [k, l] = kl;
                shifted[{k, l + w.wr}] +=
                    coeff * Scalar::t_pow(-2 * w.ws * (w.wr + k + 2 * l));
            }
        }
        if (!w.has_t) {
            out += c * from_tform(shifted);
            continue;
        }
        long m = w.tm;
        long n = w.tn;
        for (const auto& [kl, coeff] : shifted) {
            auto [k, l] = kl;
            AnnulusElement part =
                Scalar::t_pow(-2 * n * l) * mul(wedge1(l), x(m + k, n)) +
                Scalar::t_pow(-2 * n * (k + l)) * mul(wedge1(k + l), x(m - k, n));
            out += (c * coeff) * part;
        }
    }
    return out;
}

AnnulusElement act_oracle(const TorusElement& a, const TorusElement& b) {
    return project(mul(a, b));
}

}  // namespace gl2skein
