#include "efb/bilinear.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "efb/errors.hpp"

namespace efb {

BForm build_B(const RepContext& ctx) {
    const int m = ctx.m();
    const std::size_t n = ctx.dim();
    std::vector<SparseRow> rows;
    rows.reserve(static_cast<std::size_t>(2 * m) * n * n);
    for (int i = 1; i <= 2 * m; ++i) {
        const MonomialMatrix& g = ctx.generator(i);
        // (γ^t B)(r,c) = sign[r] B(row[r], c), (B γ)(r,c) = sign[c] B(r, row[c])
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                SparseRow eq;
                eq.emplace_back(g.row[r] * n + c, Scalar(g.sign[r]));
                eq.emplace_back(r * n + g.row[c], Scalar(-g.sign[c]));
                rows.push_back(std::move(eq));
            }
    }
    auto sol = sparse_kernel_basis(n * n, rows);
    if (sol.size() != 1) throw InconsistencyError("intertwiner space is not one-dimensional");
    Vector v = sol.front();
    for (const auto& x : v)
        if (!x.is_zero()) {
            const Scalar inv = x.inverse();
            for (auto& y : v) y *= inv;
            break;
        }
    BForm b{m, ExactMatrix(n, n, v), {}};

    for (int i = 1; i <= 2 * m; ++i) {
        const ExactMatrix g = ctx.generator_matrix(i);
        if (g.transpose() * b.matrix != b.matrix * g) throw InconsistencyError("B does not intertwine");
    }
    const int sym = (m * (m - 1) / 2) % 2 ? -1 : 1;
    if (b.matrix.transpose() != b.matrix.scaled(Scalar(sym))) throw InconsistencyError("B has the wrong symmetry");
    b.monomial = MonomialMatrix::from_dense(b.matrix);
    return b;
}

const BForm& b_form(int m) {
    check_m(m);
    static std::array<std::unique_ptr<BForm>, kMaxM + 1> cache;
    static std::array<std::once_flag, kMaxM + 1> once;
    std::call_once(once[static_cast<std::size_t>(m)],
                   [m] { cache[static_cast<std::size_t>(m)] = std::make_unique<BForm>(build_B(rep_context(m))); });
    return *cache[static_cast<std::size_t>(m)];
}

Vector rep_vector(const Spinor& w) {
    const RepContext& rep = rep_context(w.m());
    const Mask col = full_mask(w.m());
    Vector v(w.dim());
    for (Mask a = 0; a < w.dim(); ++a) v[a] = rep.sigma(a, col) > 0 ? w[a] : -w[a];
    return v;
}

Spinor spinor_from_rep_vector(const Vector& v, int m, Field field) {
    const RepContext& rep = rep_context(m);
    const Mask col = full_mask(m);
    if (v.size() != rep.dim()) throw DimensionError("vector length is not 2^m");
    Spinor s(m, field);
    for (Mask a = 0; a < s.dim(); ++a) s[a] = rep.sigma(a, col) > 0 ? v[a] : -v[a];
    return s;
}

namespace {

Vector apply_monomial(const MonomialMatrix& g, const Vector& v) {
    Vector out(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero()) continue;
        out[g.row[c]] = g.sign[c] > 0 ? v[c] : -v[c];
    }
    return out;
}

void check_pair(const Spinor& w, const Spinor& phi) {
    if (w.m() != phi.m()) throw DimensionError("spinors of different m");
    if (w.field() != phi.field()) throw FieldError("spinors over different fields");
}

}  // namespace

Scalar inner(const Spinor& w, const Spinor& phi) {
    check_pair(w, phi);
    const BForm& b = b_form(w.m());
    const Vector bw = apply_monomial(b.monomial, rep_vector(w));
    const Vector vp = rep_vector(phi);
    Scalar s;
    for (std::size_t i = 0; i < bw.size(); ++i)
        if (!bw[i].is_zero() && !vp[i].is_zero()) s.add_product(bw[i], vp[i]);
    return s;
}

AlgebraElement endo_from_pair(const Spinor& w, const Spinor& phi) {
    check_pair(w, phi);
    const int m = w.m();
    const Vector vw = rep_vector(w);
    const Vector bphi = apply_monomial(b_form(m).monomial, rep_vector(phi));
    const std::size_t n = vw.size();
    ExactMatrix mat(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (vw[r].is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c)
            if (!bphi[c].is_zero()) mat(r, c) = vw[r] * bphi[c];
    }
    return rep_context(m).from_matrix(mat, w.field());
}

Spinor apply_dual_gammas(std::uint32_t subset, const Spinor& w) {
    const int m = w.m();
    const RepContext& rep = rep_context(m);
    if (subset >> (2 * m)) throw RangeError("gamma index beyond 2m");
    Vector v = rep_vector(w);
    for (int i = 1; i <= 2 * m; ++i) {
        if (!((subset >> (i - 1)) & 1U)) continue;
        v = apply_monomial(rep.generator(i), v);
        if (i % 2 == 0)
            for (auto& x : v) x.negate();
    }
    return spinor_from_rep_vector(v, m, w.field());
}

std::string gamma_word(std::uint32_t subset) {
    if (subset == 0) return "1";
    std::string s;
    for (int i = 1; subset >> (i - 1); ++i) {
        if (!((subset >> (i - 1)) & 1U)) continue;
        if (!s.empty()) s += "^";
        s += "g" + std::to_string(i);
    }
    return s;
}

int subset_grade(std::uint32_t subset) { return __builtin_popcount(subset); }

namespace {

// probe = γ^{ik}···γ^{i1} for each subset, built by left multiplication
template <class Visit>
void visit_dual_products(const RepContext& rep, std::uint32_t subset, int next, const MonomialMatrix& probe,
                         Visit& visit) {
    visit(subset, probe);
    const int m = rep.m();
    for (int j = next; j <= 2 * m; ++j) {
        MonomialMatrix g = rep.generator(j);
        if (j % 2 == 0) g = -g;
        visit_dual_products(rep, subset | (std::uint32_t{1} << (j - 1)), j + 1, g * probe, visit);
    }
}

}  // namespace

GammaExpansion expand_gamma(const AlgebraElement& mu) {
    const int m = mu.m();
    const RepContext& rep = rep_context(m);
    const ExactMatrix mat = rep.to_matrix(mu);
    const Scalar scale(1, 1L << m);
    GammaExpansion e{m, {}};
    auto visit = [&](std::uint32_t subset, const MonomialMatrix& x) {
        Scalar t;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const Scalar& v = mat(k, x.row[k]);
            if (v.is_zero()) continue;
            if (x.sign[k] > 0)
                t += v;
            else
                t -= v;
        }
        if (!t.is_zero()) e.coeffs.emplace(subset, t * scale);
    };
    visit_dual_products(rep, 0, 1, MonomialMatrix::identity(rep.dim()), visit);
    return e;
}

AlgebraElement reconstruct_gamma(const GammaExpansion& e, Field field) {
    const RepContext& rep = rep_context(e.m);
    ExactMatrix acc(rep.dim(), rep.dim());
    for (const auto& [subset, c] : e.coeffs) {
        MonomialMatrix g = MonomialMatrix::identity(rep.dim());
        for (int i = 1; i <= 2 * e.m; ++i)
            if ((subset >> (i - 1)) & 1U) g = g * rep.generator(i);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (g.sign[k] > 0)
                acc(g.row[k], k) += c;
            else
                acc(g.row[k], k) -= c;
        }
    }
    return rep.from_matrix(acc, field);
}

std::string witt_word(EFBIndex x, int m) {
    const EFBWord w = word_of_index(x, m);
    std::string s;
    for (int i = 1; i <= m; ++i) {
        if (i > 1) s += ".";
        s += letter_text(w[static_cast<std::size_t>(i - 1)], i);
    }
    return s;
}

int witt_singles(EFBIndex x, int) { return __builtin_popcount(x.a ^ x.b); }

int witt_grade(EFBIndex x, int m) {
    const int l = witt_singles(x, m);
    return l + 2 * (m - l);
}

namespace {

struct ProbeTable {
    // indexed by the word's EFB key
    std::vector<std::uint32_t> probe_key;
    std::vector<Scalar> factor;        // tr(probe μ) = factor * μ_{transposed probe}
    std::vector<std::uint32_t> word_of_probe_target;  // μ key -> word key
};

// Sign of the probe x̄_{il}···x̄_{i1} y_{jr}···y_{j1} relative to the
// site-ordered word: only odd factors at distinct sites pick up a sign when
// sorted.
int probe_order_sign(const std::vector<std::pair<int, bool>>& factors) {
    int inversions = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].second && factors[j].second && factors[i].first > factors[j].first) ++inversions;
    return inversions % 2 ? -1 : 1;
}

ProbeTable build_probes(int m) {
    const std::uint32_t count = std::uint32_t{1} << (2 * m);
    ProbeTable t;
    t.probe_key.resize(count);
    t.factor.resize(count);
    t.word_of_probe_target.assign(count, 0);
    for (std::uint32_t key = 0; key < count; ++key) {
        const EFBIndex x = key_index(key, m);
        const EFBWord w = word_of_index(x, m);
        EFBWord probe(w);
        std::vector<std::pair<int, bool>> singles, couples;
        for (int i = 1; i <= m; ++i) {
            Letter& l = probe[static_cast<std::size_t>(i - 1)];
            if (l == Letter::P || l == Letter::Q) {
                l = l == Letter::P ? Letter::Q : Letter::P;
                singles.emplace_back(i, true);
            } else {
                couples.emplace_back(i, false);
            }
        }
        std::vector<std::pair<int, bool>> order(singles.rbegin(), singles.rend());
        order.insert(order.end(), couples.rbegin(), couples.rend());
        const int sign = probe_order_sign(order);
        const EFBIndex p = index_of_word(probe);
        // tr(Ψ_uv μ) = s(u,v,u) μ_vu and tr(probe w) normalizes
        const int s_uvu = sign_s(p.a, p.b, p.a, m);
        const Scalar norm = Scalar(sign * s_uvu) * Scalar(p.b == x.a && p.a == x.b ? 1 : 0);
        if (norm.is_zero()) throw InconsistencyError("probe does not pair with its word");
        t.probe_key[key] = index_key(p, m);
        t.factor[key] = Scalar(sign * s_uvu) / norm;
        t.word_of_probe_target[index_key({p.b, p.a}, m)] = key;
    }
    return t;
}

const ProbeTable& probes(int m) {
    check_m(m);
    static std::array<std::unique_ptr<ProbeTable>, kMaxM + 1> cache;
    static std::array<std::once_flag, kMaxM + 1> once;
    std::call_once(once[static_cast<std::size_t>(m)],
                   [m] { cache[static_cast<std::size_t>(m)] = std::make_unique<ProbeTable>(build_probes(m)); });
    return *cache[static_cast<std::size_t>(m)];
}

}  // namespace

WittExpansion expand_witt(const AlgebraElement& mu) {
    const int m = mu.m();
    const ProbeTable& t = probes(m);
    WittExpansion e{m, {}};
    for (const auto& [key, c] : mu.terms()) {
        const std::uint32_t w = t.word_of_probe_target[key];
        e.coeffs.emplace(w, t.factor[w] * c);
    }
    return e;
}

AlgebraElement reconstruct_witt(const WittExpansion& e, Field field) {
    std::vector<AlgebraElement::Term> terms(e.coeffs.begin(), e.coeffs.end());
    return AlgebraElement::from_terms(e.m, field, std::move(terms));
}

WittExpansion witt_from_gamma(const GammaExpansion& e) {
    const int m = e.m;
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& [subset, c] : e.coeffs) {
        // expand site by site: (a bit, b bit, sign) choices
        std::vector<std::pair<EFBIndex, int>> partial{{{0, 0}, 1}};
        for (int j = 1; j <= m; ++j) {
            const bool odd_gen = (subset >> (2 * j - 2)) & 1U;
            const bool even_gen = (subset >> (2 * j - 1)) & 1U;
            // letter -> (a_j, b_j): QP=(0,0) PQ=(1,1) Q=(0,1) P=(1,0)
            std::array<std::tuple<int, int, int>, 2> opts;
            if (!odd_gen && !even_gen)
                opts = {{{0, 0, 1}, {1, 1, 1}}};
            else if (odd_gen && !even_gen)
                opts = {{{1, 0, 1}, {0, 1, 1}}};
            else if (!odd_gen && even_gen)
                opts = {{{1, 0, 1}, {0, 1, -1}}};
            else
                opts = {{{0, 0, 1}, {1, 1, -1}}};
            std::vector<std::pair<EFBIndex, int>> next;
            next.reserve(partial.size() * 2);
            for (const auto& [ix, s] : partial)
                for (const auto& [ab, bb, sg] : opts) {
                    EFBIndex y = ix;
                    if (ab) y.a |= Mask{1} << (j - 1);
                    if (bb) y.b |= Mask{1} << (j - 1);
                    next.emplace_back(y, s * sg);
                }
            partial = std::move(next);
        }
        for (const auto& [ix, s] : partial) {
            Scalar& slot = acc[index_key(ix, m)];
            if (s > 0)
                slot += c;
            else
                slot -= c;
        }
    }
    WittExpansion out{m, {}};
    for (auto& [k, v] : acc)
        if (!v.is_zero()) out.coeffs.emplace(k, std::move(v));
    return out;
}

}  // namespace efb
