#include "efb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "efb/bilinear.hpp"
#include "efb/errors.hpp"
#include "efb/matrix_rep.hpp"
#include "efb/random.hpp"
#include "efb/simplicity.hpp"
#include "efb/spinors.hpp"
#include "efb/vectors.hpp"

namespace efb {

namespace {

using json = nlohmann::ordered_json;

struct Ctx {
    int m;
    std::size_t trials;
    Rng rng;
    CheckResult res;

    void fail(std::size_t trial, json detail) {
        if (res.failures++ == 0) res.witness = json{{"trial", trial}, {"detail", std::move(detail)}};
    }
    void expect(bool ok, std::size_t trial, const char* what) {
        if (!ok) fail(trial, what);
    }
};

struct Check {
    const char* name;
    const char* covers;
    std::function<void(Ctx&)> run;
};

json spinor_json(const Spinor& w) {
    json xi = json::object();
    for (Mask a = 0; a < w.dim(); ++a)
        if (!w[a].is_zero()) xi[std::to_string(a)] = w[a].str();
    return json{{"m", w.m()}, {"xi", xi}};
}

json vector_json(const WittVector& v) {
    json a = json::array(), b = json::array();
    for (const auto& x : v.alpha) a.push_back(x.str());
    for (const auto& x : v.beta) b.push_back(x.str());
    return json{{"alpha", a}, {"beta", b}};
}

AlgebraElement random_element(Rng& rng, int m, std::size_t terms) {
    std::vector<AlgebraElement::Term> t;
    const std::uint64_t n = std::uint64_t{1} << (2 * m);
    for (std::size_t i = 0; i < terms; ++i) t.emplace_back(static_cast<std::uint32_t>(rng.below(n)), rng.rational(20));
    return AlgebraElement::from_terms(m, Field::Q, std::move(t));
}

Spinor simple_sample(Rng& rng, int m) { return generic_spinor_sample(random_tnp(rng, m, m), rng, m); }

Spinor weyl_sample(Rng& rng, int m, int chirality) {
    Spinor w(m);
    for (Mask a = 0; a <= full_mask(m); ++a)
        if (parity_sign(a) == chirality) w[a] = rng.nonzero_rational();
    return w;
}

Spinor near_simple_sample(Rng& rng, int m) {
    Spinor w = simple_sample(rng, m);
    Mask a = 0;
    while (w[a].is_zero()) ++a;
    w[a ^ 1U] += Scalar(1, 1000);
    return w;
}

Spinor mixed_sample(Rng& rng, int m, std::size_t t) {
    switch (t % 4) {
        case 0: return simple_sample(rng, m);
        case 1: return random_spinor(rng, m, Field::Q, true);
        case 2: return weyl_sample(rng, m, rng.coin() ? 1 : -1);
        default: return near_simple_sample(rng, m);
    }
}

std::vector<Vector> coords_of(const TNPBasis& t) {
    std::vector<Vector> c;
    for (const auto& v : t.vectors) c.push_back(v.coords());
    return c;
}

std::size_t plane_intersection(int m, const TNPBasis& a, const TNPBasis& b) {
    return intersection_dimension(static_cast<std::size_t>(2 * m), coords_of(a), coords_of(b));
}

int sign_of(const Scalar& x) { return sgn(x.re()); }

std::vector<Mask> all_masks(int m) {
    std::vector<Mask> out;
    for (Mask a = 0; a <= full_mask(m); ++a) out.push_back(a);
    return out;
}

// every nonzero spinor with coordinates in {-1, 0, 1}
template <typename F>
void for_grid(int m, F&& f) {
    const std::size_t n = std::size_t{1} << m;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        Spinor w(m);
        std::size_t x = code;
        for (Mask a = 0; a < n; ++a, x /= 3) w[a] = static_cast<long>(x % 3) - 1;
        if (!w.is_zero()) f(w);
    }
}

// monomial pairs against σ, random element pairs against dense matrices
void product_oracle(Ctx& c) {
    const int m = c.m;
    const RepContext& rep = rep_context(m);
    if (4 * m <= 16) {
        c.res.exhaustive = true;
        const std::uint32_t n = std::uint32_t{1} << (2 * m);
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y) {
                const EFBIndex u = key_index(x, m), v = key_index(y, m);
                const AlgebraElement p = AlgebraElement::monomial(m, u) * AlgebraElement::monomial(m, v);
                AlgebraElement want(m);
                if (u.b == v.a) {
                    const int s = rep.sigma(u.a, u.b) * rep.sigma(v.a, v.b) * rep.sigma(u.a, v.b);
                    want = AlgebraElement::monomial(m, {u.a, v.b}).scaled(Scalar(s));
                }
                ++c.res.trials;
                if (p != want) c.fail(c.res.trials, json{{"x", x}, {"y", y}});
            }
    }
    for (std::size_t t = 0; t < c.trials; ++t) {
        const AlgebraElement x = random_element(c.rng, m, 12), y = random_element(c.rng, m, 12);
        ++c.res.trials;
        if (rep.to_matrix(x * y) != rep.to_matrix(x) * rep.to_matrix(y)) c.fail(t, "random pair differs from matrix product");
        if (rep.from_matrix(rep.to_matrix(x)) != x) c.fail(t, "from_matrix does not invert to_matrix");
        Scalar tr;
        const ExactMatrix mx = rep.to_matrix(x);
        for (std::size_t i = 0; i < rep.dim(); ++i) tr += mx(i, i);
        if (tr != trace(x)) c.fail(t, "trace differs from matrix trace");
    }
    if (rep.to_matrix(AlgebraElement::identity(m)) != ExactMatrix::identity(rep.dim())) c.fail(0, "unit not preserved");
}

void associativity(Ctx& c) {
    for (std::size_t t = 0; t < c.trials; ++t) {
        const AlgebraElement x = random_element(c.rng, c.m, 8), y = random_element(c.rng, c.m, 8),
                             z = random_element(c.rng, c.m, 8);
        c.expect((x * y) * z == x * (y * z), t, "(xy)z != x(yz)");
        ++c.res.trials;
    }
}

void delta_structure(Ctx& c) {
    const int m = c.m;
    const auto masks = all_masks(m);
    if (4 * m <= 16) {
        c.res.exhaustive = true;
        for (Mask a : masks)
            for (Mask b : masks)
                for (Mask cc : masks)
                    for (Mask d : masks) {
                        const AlgebraElement p = AlgebraElement::monomial(m, {a, b}) * AlgebraElement::monomial(m, {cc, d});
                        ++c.res.trials;
                        bool ok = b == cc ? p.size() == 1 && p.terms()[0].first == index_key({a, d}, m) : p.is_zero();
                        if (!ok) c.fail(c.res.trials, json{{"a", a}, {"b", b}, {"c", cc}, {"d", d}});
                    }
        return;
    }
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Mask a = static_cast<Mask>(c.rng.below(masks.size())), b = static_cast<Mask>(c.rng.below(masks.size()));
        const Mask cc = c.rng.coin() ? b : static_cast<Mask>(c.rng.below(masks.size()));
        const Mask d = static_cast<Mask>(c.rng.below(masks.size()));
        const AlgebraElement p = AlgebraElement::monomial(m, {a, b}) * AlgebraElement::monomial(m, {cc, d});
        bool ok = b == cc ? p.size() == 1 && p.terms()[0].first == index_key({a, d}, m) : p.is_zero();
        c.expect(ok, t, "delta structure violated");
        ++c.res.trials;
    }
}

void volume_element(Ctx& c) {
    const int m = c.m;
    const AlgebraElement g = AlgebraElement::volume_gamma(m);
    AlgebraElement prod = AlgebraElement::identity(m);
    for (int i = 1; i <= 2 * m; ++i) prod = prod * gamma_element(m, i);
    c.expect(prod == g, 0, "volume element differs from the generator product");
    const int n = 2 * m;
    int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
    for (int i = 2; i <= n; i += 2) sign = -sign;
    c.expect(g * g == AlgebraElement::scalar(m, Scalar(sign)), 0, "square of the volume element");
    c.res.exhaustive = true;
    for (Mask a : all_masks(m))
        for (Mask b : all_masks(m)) {
            const AlgebraElement psi = AlgebraElement::monomial(m, {a, b});
            const EFBIndex x{a, b};
            ++c.res.trials;
            if (g * psi != psi.scaled(Scalar(chirality(x))) || psi * g != psi.scaled(Scalar(chirality(x) * global_parity(x))))
                c.fail(c.res.trials, json{{"a", a}, {"b", b}});
        }
    const ExactMatrix gm = rep_context(m).to_matrix(g);
    for (std::size_t r = 0; r < gm.rows(); ++r)
        for (std::size_t k = 0; k < gm.cols(); ++k)
            if (r == k ? !(gm(r, k) == Scalar(1) || gm(r, k) == Scalar(-1)) : !gm(r, k).is_zero())
                c.fail(0, "volume matrix is not diagonal +-1");
}

void null_vector_characterization(Ctx& c) {
    const int m = c.m;
    const std::size_t half = std::size_t{1} << (m - 1);
    auto check_null = [&](const WittVector& v, std::size_t t) {
        const std::size_t d = annihilated_subspace({v}).dim();
        if (d == 0) c.fail(t, json{{"null_vector", vector_json(v)}});
        if (d != half) c.fail(t, json{{"null_vector", vector_json(v)}, {"dim", d}});
        ++c.res.trials;
    };
    for (int i = 1; i <= m; ++i) {
        check_null(WittVector::p(m, i), 0);
        check_null(WittVector::q(m, i), 0);
        // γ_i are not null; they act invertibly
        for (int j : {2 * i - 1, 2 * i}) {
            const WittVector g = WittVector::gamma(m, j);
            if (classify(g) != VectorClass::V1 || rank(vector_operator(g)) != std::size_t{1} << m)
                c.fail(0, json{{"gamma", j}});
            ++c.res.trials;
        }
    }
    for (std::size_t t = 0; t < c.trials; ++t) {
        check_null(random_null_vector(c.rng, m), t);
        const WittVector u = random_nonnull_vector(c.rng, m);
        if (classify(u) != VectorClass::V1 || !kernel_basis(vector_operator(u)).empty())
            c.fail(t, json{{"nonnull_vector", vector_json(u)}});
        ++c.res.trials;
    }
}

void conjugate_nonannihilation(Ctx& c) {
    const int m = c.m;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const WittVector v = random_null_vector(c.rng, m), vb = conj_vector(v);
        const Spinor w = generic_spinor_sample({v}, c.rng, m), wb = generic_spinor_sample({vb}, c.rng, m);
        if (!act_vector(v, w).is_zero() || act_vector(vb, w).is_zero()) c.fail(t, json{{"v", vector_json(v)}, {"omega", spinor_json(w)}});
        if (!act_vector(vb, wb).is_zero() || act_vector(v, wb).is_zero()) c.fail(t, json{{"v", vector_json(vb)}, {"omega", spinor_json(wb)}});
        ++c.res.trials;
    }
    // both v ω and v̄ ω nonzero: v = p1, ω = q1···qm + p1q1q2···qm
    const Spinor w = Spinor::basis(m, 0) + Spinor::basis(m, 1);
    c.expect(!act_vector(WittVector::p(m, 1), w).is_zero() && !act_vector(WittVector::q(m, 1), w).is_zero(), 0,
             "non-exclusivity witness");
    c.res.observation = json{{"non_exclusive_witness", spinor_json(w)}};
}

void hermitian_signs(Ctx& c) {
    for (std::size_t t = 0; t < c.trials; ++t) {
        const WittVector v = random_null_vector(c.rng, c.m), vb = conj_vector(v);
        if (sign_of(square(v + vb)) <= 0 || sign_of(square(v - vb)) >= 0) c.fail(t, json{{"v", vector_json(v)}});
        const WittVector u = random_vector(c.rng, c.m);
        if (square(conj_vector(u)) != square(u).star()) c.fail(t, "square of the conjugate");
        ++c.res.trials;
    }
}

void conjugate_spinor_nonannihilation(Ctx& c) {
    const int m = c.m;
    for (std::size_t t = 0; t < c.trials; ++t) {
        for (bool flip : {false, true}) {
            WittVector v = random_null_vector(c.rng, m);
            if (flip) v = conj_vector(v);
            const Spinor w = generic_spinor_sample({v}, c.rng, m);
            if ((embed(v) * conj_element(w.element())).is_zero()) c.fail(t, json{{"v", vector_json(v)}, {"omega", spinor_json(w)}});
        }
        ++c.res.trials;
    }
}

void charge_conjugate_nonannihilation(Ctx& c) {
    const int m = c.m;
    for (std::size_t t = 0; t < c.trials; ++t) {
        for (bool flip : {false, true}) {
            WittVector v = random_null_vector(c.rng, m);
            if (flip) v = conj_vector(v);
            const Spinor w = generic_spinor_sample({v}, c.rng, m);
            if ((embed(v) * C_element(m) * w.star().element()).is_zero())
                c.fail(t, json{{"v", vector_json(v)}, {"omega", spinor_json(w)}});
        }
        ++c.res.trials;
    }
}

void conjugation_identities(Ctx& c) {
    const int m = c.m;
    const AlgebraElement& cc = C_element(m);
    const AlgebraElement& ci = C_inverse(m);
    c.expect(cc * ci == AlgebraElement::identity(m), 0, "C C^-1 != 1");
    for (int i = 1; i <= m; ++i) {
        c.expect(cc * embed(WittVector::p(m, i)) * ci == embed(WittVector::q(m, i)), 0, "C p C^-1 != q");
        c.expect(cc * embed(WittVector::q(m, i)) * ci == embed(WittVector::p(m, i)), 0, "C q C^-1 != p");
        c.res.trials += 2;
    }
    for (int s : {1, -1}) {
        const AlgebraElement d = delta_element(m, s);
        const int e = s > 0 ? m * (m - 1) / 2 : m * (m + 1) / 2;
        c.expect(d * d == AlgebraElement::scalar(m, Scalar(e % 2 ? -1 : 1)), 0, "square of delta");
        ++c.res.trials;
    }
    for (std::size_t t = 0; t < c.trials; ++t) {
        const AlgebraElement x = random_element(c.rng, m, 8);
        c.expect(conj_element(conj_element(x)) == x, t, "conjugation is not an involution");
        ++c.res.trials;
    }
}

void spinor_space_bisection(Ctx& c) {
    const int m = c.m;
    const std::size_t n = std::size_t{1} << m, half = n / 2;
    bool non_subspace = false;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const WittVector v = random_null_vector(c.rng, m), vb = conj_vector(v);
        const SpinorSubspace a = annihilated_subspace({v}), b = annihilated_subspace({vb});
        std::vector<Vector> both = a.basis;
        both.insert(both.end(), b.basis.begin(), b.basis.end());
        if (a.dim() != half || b.dim() != half || intersection_dimension(n, a.basis, b.basis) != 0 ||
            span_dimension(n, both) != n)
            c.fail(t, json{{"v", vector_json(v)}, {"dim_v", a.dim()}, {"dim_vbar", b.dim()}});
        const Spinor w = generic_spinor_sample({v}, c.rng, m);
        const Spinor twin = act_vector(vb, w);
        if (twin.is_zero() || !b.contains(twin) || span_dimension(n, {w.xi(), twin.xi()}) != 2)
            c.fail(t, json{{"twin_of", spinor_json(w)}});
        // ω1, ω2 outside S_v whose difference lies in S_v
        const Spinor w2 = random_spinor(c.rng, m, Field::Q, true);
        const Spinor w1 = w2 + w;
        if (!a.contains(w2) && !a.contains(w1) && a.contains(w1 - w2)) non_subspace = true;
        ++c.res.trials;
    }
    if (m >= 2) {
        const WittVector v = WittVector::p(m, 1) + WittVector::q(m, 2);
        const SpinorSubspace sv = annihilated_subspace({v});
        const Spinor d = Spinor::basis(m, 0) - Spinor::basis(m, 3);
        c.expect(sv.contains(d) && !sv.contains(Spinor::basis(m, 0)) && !sv.contains(Spinor::basis(m, 3)), 0,
                 "Psi0 - Psi3 witness");
        non_subspace = true;
    }
    c.expect(non_subspace || c.trials == 0, 0, "no complement witness found");
}

void annihilated_subspace_form(Ctx& c) {
    const int m = c.m;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const int k = 1 + static_cast<int>(c.rng.below(static_cast<std::uint64_t>(m)));
        const auto vs = random_tnp(c.rng, m, k);
        // annihilated_subspace asserts kernel = image
        const SpinorSubspace s = annihilated_subspace(vs);
        if (s.dim() != std::size_t{1} << (m - k)) c.fail(t, json{{"k", k}, {"dim", s.dim()}});
        const Spinor w = generic_spinor_sample(vs, c.rng, m);
        if (!s.contains(w)) c.fail(t, "generic sample outside the annihilated subspace");
        ++c.res.trials;
    }
}

void generic_trivial_annihilator(Ctx& c) {
    if (c.m == 2) {
        c.res.skipped = true;
        return;
    }
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Spinor w = random_spinor(c.rng, c.m, Field::Q, true);
        if (nullity(w) != 0) c.fail(t, json{{"omega", spinor_json(w)}});
        ++c.res.trials;
    }
}

void determinant_scaling(Ctx& c) {
    const int m = c.m;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const int k = 1 + static_cast<int>(c.rng.below(static_cast<std::uint64_t>(m)));
        const auto vs = random_tnp(c.rng, m, k);
        const ExactMatrix a = random_invertible(c.rng, static_cast<std::size_t>(k));
        if (tnp_change_of_basis_scale(vs, a, Field::Q) != det(a)) c.fail(t, json{{"k", k}});
        if (t == 0) {
            c.expect(tnp_change_of_basis_scale(vs, ExactMatrix::identity(static_cast<std::size_t>(k)), Field::Q) == Scalar(1), t,
                     "identity scale");
            if (k >= 2) {
                ExactMatrix swap = ExactMatrix::identity(static_cast<std::size_t>(k));
                swap(0, 0) = 0;
                swap(1, 1) = 0;
                swap(0, 1) = 1;
                swap(1, 0) = 1;
                c.expect(tnp_change_of_basis_scale(vs, swap, Field::Q) == Scalar(-1), t, "swap scale");
            }
        }
        ++c.res.trials;
    }
}

void space_switch(Ctx& c) {
    const int m = c.m;
    const AlgebraElement g = AlgebraElement::volume_gamma(m);
    for (std::size_t t = 0; t < c.trials; ++t) {
        std::vector<int> sites;
        for (int i = 1; i <= m; ++i)
            if (c.rng.coin()) sites.push_back(i);
        const int ch = c.rng.coin() ? 1 : -1;
        const AlgebraElement s = spinor_space_switch(weyl_sample(c.rng, m, ch).element(), sites);
        if (g * s != s.scaled(Scalar(ch))) c.fail(t, "chirality changed");
        Mask flipped = 0;
        for (int i : sites) flipped |= Mask{1} << (i - 1);
        for (const auto& [key, v] : s.terms())
            if (key_index(key, m).b != (full_mask(m) ^ flipped)) c.fail(t, "image outside the switched column");
        ++c.res.trials;
    }
}

// simple φ whose plane shares the first j frame vectors of M(ω)
Spinor simple_sharing(Rng& rng, const TNPFrame& fr, int m, int j) {
    std::vector<WittVector> t(fr.qs.begin(), fr.qs.begin() + j);
    if (j < m) {
        for (const auto& x : random_lagrangian(rng, m - j)) {
            WittVector y(m);
            for (int i = 0; i < m - j; ++i) {
                y += fr.ps[static_cast<std::size_t>(j + i)].scaled(x.alpha[static_cast<std::size_t>(i)]);
                y += fr.qs[static_cast<std::size_t>(j + i)].scaled(x.beta[static_cast<std::size_t>(i)]);
            }
            t.push_back(y);
        }
    }
    return generic_spinor_sample(t, rng, m);
}

// random φ in S_T orthogonal to ω, or the zero spinor when none was found
Spinor orthogonal_in(Rng& rng, const Spinor& w, int m, int d) {
    std::vector<Vector> basis;
    if (d == 0)
        for (Mask a = 0; a <= full_mask(m); ++a) basis.push_back(Spinor::basis(m, a).xi());
    else
        basis = annihilated_subspace(random_tnp(rng, m, d)).basis;
    std::vector<Scalar> f, coef;
    for (const auto& b : basis) {
        f.push_back(inner(w, Spinor(m, Field::Q, b)));
        coef.push_back(rng.nonzero_rational());
    }
    const auto pivot = std::find_if(f.begin(), f.end(), [](const Scalar& x) { return !x.is_zero(); });
    if (pivot != f.end()) {
        const std::size_t p = static_cast<std::size_t>(pivot - f.begin());
        Scalar s;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (i != p) s.add_product(coef[i], f[i]);
        coef[p] = -s / f[p];
    }
    Spinor phi(m);
    for (std::size_t i = 0; i < basis.size(); ++i) phi += Spinor(m, Field::Q, basis[i]).scaled(coef[i]);
    return phi;
}

void orthogonality_intersection(Ctx& c) {
    const int m = c.m;
    std::size_t converse_cases = 0, strict_found = 0, strict_searched = 0;
    json strict_witness;
    auto check_converse = [&](const Spinor& w, const Spinor& phi, const TNPBasis& mw, std::size_t t) {
        if (phi.is_zero() || !inner(w, phi).is_zero()) return;
        const TNPBasis mp = annihilator(phi);
        if (static_cast<int>(mp.dim()) > m - 3) {
            ++converse_cases;
            if (plane_intersection(m, mw, mp) == 0) c.fail(t, json{{"omega", spinor_json(w)}, {"phi", spinor_json(phi)}});
        }
    };
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Spinor w = simple_sample(c.rng, m);
        const TNPBasis mw = annihilator(w);
        const TNPFrame fr = normalize_tnp(mw.vectors);
        const int j = 1 + static_cast<int>(c.rng.below(static_cast<std::uint64_t>(m)));
        const Spinor phi = simple_sharing(c.rng, fr, m, j);
        const TNPBasis mp = annihilator(phi);
        if (plane_intersection(m, mw, mp) < static_cast<std::size_t>(j)) c.fail(t, "shared plane construction");
        if (!inner(w, phi).is_zero() || !inner(phi, w).is_zero())
            c.fail(t, json{{"omega", spinor_json(w)}, {"phi", spinor_json(phi)}, {"shared", j}});
        check_converse(w, phi, mw, t);
        const int lo = std::max(0, m - 2);
        const int d = lo + static_cast<int>(c.rng.below(static_cast<std::uint64_t>(m - lo)));
        check_converse(w, orthogonal_in(c.rng, w, m, std::min(d, m - 1)), mw, t);
        if (m >= 3) {
            const Spinor psi = orthogonal_in(c.rng, w, m, m - 3);
            if (!psi.is_zero() && inner(w, psi).is_zero()) {
                ++strict_searched;
                const TNPBasis mp3 = annihilator(psi);
                if (static_cast<int>(mp3.dim()) == m - 3 && plane_intersection(m, mw, mp3) == 0) {
                    if (strict_found++ == 0) strict_witness = json{{"omega", spinor_json(w)}, {"phi", spinor_json(psi)}};
                }
            }
        }
        ++c.res.trials;
    }
    c.res.observation = json{{"converse_cases", converse_cases},
                             {"strictness_searched", strict_searched},
                             {"strictness_counterexamples", strict_found},
                             {"strictness_witness", strict_witness}};
}

void b_form_identities(Ctx& c) {
    const int m = c.m;
    const BForm& b = b_form(m);
    const RepContext& rep = rep_context(m);
    for (int i = 1; i <= 2 * m; ++i) {
        const ExactMatrix g = rep.generator_matrix(i);
        c.expect(g.transpose() * b.matrix == b.matrix * g, 0, "intertwining");
        ++c.res.trials;
    }
    const int e = m * (m - 1) / 2;
    c.expect(b.matrix.transpose() == b.matrix.scaled(Scalar(e % 2 ? -1 : 1)), 0, "symmetry of B");
    c.expect(rank(b.matrix) == rep.dim(), 0, "B is singular");
    for (Mask a = 1; a <= full_mask(m); ++a)
        if (!inner(Spinor::basis(m, 0), Spinor::basis(m, a)).is_zero() && a != full_mask(m)) c.fail(0, "vacuum pairing");
    c.expect(!inner(Spinor::basis(m, 0), Spinor::basis(m, full_mask(m))).is_zero(), 0, "vacuum pairs with its opposite");
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Spinor w = random_spinor(c.rng, m), phi = random_spinor(c.rng, m);
        const WittVector u = random_unit_vector(c.rng, m);
        if (inner(act_vector(u, w), act_vector(u, phi)) != inner(w, phi)) c.fail(t, json{{"unit", vector_json(u)}});
        if (inner(w, phi) != inner(phi, w) * Scalar(e % 2 ? -1 : 1)) c.fail(t, "transpose relation");
        const AlgebraElement mu = endo_from_pair(w, phi);
        if (trace(mu) != inner(phi, w)) c.fail(t, "trace of w (x) phi*");
        const Spinor probe = random_spinor(c.rng, m);
        if (act(mu, probe) != w.scaled(inner(phi, probe))) c.fail(t, "action of w (x) phi*");
        ++c.res.trials;
    }
}

void gamma_expansion(Ctx& c) {
    const int m = c.m;
    const Scalar scale(1, 1L << m);
    for (std::size_t t = 0; t < c.trials; ++t) {
        const AlgebraElement mu = random_element(c.rng, m, 16), nu = random_element(c.rng, m, 16);
        const GammaExpansion e = expand_gamma(mu);
        if (reconstruct_gamma(e) != mu) c.fail(t, "gamma round trip");
        if (reconstruct_gamma(expand_gamma(mu + nu)) != mu + nu) c.fail(t, "gamma linearity");
        if (t % 4 == 0) {
            const Spinor w = random_spinor(c.rng, m), phi = random_spinor(c.rng, m);
            const GammaExpansion r = expand_gamma(endo_from_pair(w, phi));
            for (std::uint32_t s = 0; s < (std::uint32_t{1} << (2 * m)); ++s) {
                const auto it = r.coeffs.find(s);
                const Scalar got = it == r.coeffs.end() ? Scalar(0) : it->second;
                if (got != inner(phi, apply_dual_gammas(s, w)) * scale) {
                    c.fail(t, json{{"subset", s}});
                    break;
                }
            }
        }
        ++c.res.trials;
    }
    const GammaExpansion id = expand_gamma(AlgebraElement::identity(m));
    c.expect(id.coeffs.size() == 1 && id.coeffs.begin()->first == 0 && id.coeffs.begin()->second == Scalar(1), 0, "identity");
    const GammaExpansion g1 = expand_gamma(gamma_element(m, 1));
    c.expect(g1.coeffs.size() == 1 && g1.coeffs.begin()->first == 1 && g1.coeffs.begin()->second == Scalar(1), 0, "gamma_1");
}

void witt_expansion(Ctx& c) {
    const int m = c.m;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const AlgebraElement mu = random_element(c.rng, m, 16);
        const WittExpansion w = expand_witt(mu);
        if (reconstruct_witt(w) != mu) c.fail(t, "Witt round trip");
        if (witt_from_gamma(expand_gamma(mu)).coeffs != w.coeffs) c.fail(t, "Witt and gamma expansions disagree");
        for (const auto& [k, v] : w.coeffs) {
            const EFBIndex x = key_index(k, m);
            const int l = witt_singles(x, m), r = m - l, grade = witt_grade(x, m);
            if (l + 2 * r != grade || grade % 2 > l || l > std::min(grade, 2 * m - grade)) c.fail(t, json{{"word", witt_word(x, m)}});
        }
        ++c.res.trials;
    }
    const WittExpansion id = expand_witt(AlgebraElement::identity(m));
    bool ok = id.coeffs.size() == (std::size_t{1} << m);
    for (const auto& [k, v] : id.coeffs) ok = ok && v == Scalar(1) && witt_singles(key_index(k, m), m) == 0;
    c.expect(ok, 0, "identity expands into couples");
}

AlgebraElement q_product(int m) {
    AlgebraElement qs = AlgebraElement::identity(m);
    for (int i = 1; i <= m; ++i) qs = qs * embed(WittVector::q(m, i));
    return qs;
}

void cartan_chevalley(Ctx& c) {
    const int m = c.m;
    const WittExpansion e = expand_witt(q_product(m));
    c.expect(e.coeffs.size() == 1 && e.coeffs.begin()->first == index_key({0, full_mask(m)}, m), 0, "q1...qm single word");
    c.res.exhaustive = true;
    for (Mask a : all_masks(m)) {
        const Spinor w = Spinor::basis(m, a);
        if (!cartan_chevalley_test(w, annihilator(w))) c.fail(a, json{{"fock", a}});
        ++c.res.trials;
    }
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Spinor w = simple_sample(c.rng, m);
        if (!cartan_chevalley_test(w, annihilator(w))) c.fail(t, json{{"simple", spinor_json(w)}});
        const Spinor x = random_spinor(c.rng, m, Field::Q, true);
        const TNPBasis mx = annihilator(x);
        if (cartan_chevalley_test(x, complete_tnp(mx))) c.fail(t, json{{"non_simple", spinor_json(x)}});
        ++c.res.trials;
    }
    if (m == 3) {
        const Spinor w = Spinor::basis(3, 0) + Spinor::basis(3, full_mask(3));
        const TNPBasis mw = annihilator(w);
        c.expect(mw.dim() < 3 && !cartan_chevalley_test(w, complete_tnp(mw)), 0, "Psi_e + Psi_-e");
    }
}

void generalized_simplicity(Ctx& c) {
    const int m = c.m;
    for (Mask a : all_masks(m)) {
        const Spinor w = Spinor::basis(m, a);
        const TNPBasis mw = annihilator(w);
        const auto r = generalized_test(w, mw);
        if (!r.verdict) c.fail(a, json{{"fock", a}});
        ++c.res.trials;
    }
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Spinor w = mixed_sample(c.rng, m, t);
        const TNPBasis mw = annihilator(w);
        const bool simple = mw.dim() == static_cast<std::size_t>(m);
        const TNPBasis cand = simple ? mw : complete_tnp(mw);
        const GeneralizedResult fast = generalized_test(w, cand);
        if (fast.verdict != simple) c.fail(t, json{{"omega", spinor_json(w)}, {"route", "fast"}});
        if (generalized_shortcut(w, cand) != simple) c.fail(t, json{{"omega", spinor_json(w)}, {"route", "shortcut"}});
        if (generalized_test_single(w, w, cand) != cartan_chevalley_test(w, cand))
            c.fail(t, json{{"omega", spinor_json(w)}, {"route", "phi = omega"}});
        if (simple)
            for (std::size_t k = 0; k < fast.k_m.size(); ++k)
                if (fast.min_grade[k] >= 0 && fast.min_grade[k] < fast.k_m[k]) c.fail(t, json{{"fock_phi", k}});
        if (m <= 3) {
            const GeneralizedResult full = generalized_test_full(w, cand);
            if (full.verdict != fast.verdict || full.min_grade != fast.min_grade)
                c.fail(t, json{{"omega", spinor_json(w)}, {"route", "full"}});
        }
        ++c.res.trials;
    }
}

void three_test_agreement(Ctx& c) {
    const int m = c.m;
    auto one = [&](const Spinor& w, std::size_t t) {
        try {
            report(w);
        } catch (const InconsistencyError&) {
            c.fail(t, json{{"omega", spinor_json(w)}});
        }
        ++c.res.trials;
    };
    for (Mask a : all_masks(m)) {
        const SimplicityReport r = report(Spinor::basis(m, a));
        if (!r.direct) c.fail(a, json{{"fock", a}});
        ++c.res.trials;
    }
    if (m <= 2) {
        c.res.exhaustive = true;
        std::size_t t = 0;
        for_grid(m, [&](const Spinor& w) { one(w, t++); });
    }
    for (std::size_t t = 0; t < c.trials; ++t) one(mixed_sample(c.rng, m, t), t);
}

void simple_implies_weyl(Ctx& c) {
    const int m = c.m;
    std::size_t weyl_nonsimple = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Spinor w = simple_sample(c.rng, m);
        if (!is_weyl(w)) c.fail(t, json{{"omega", spinor_json(w)}});
        const Spinor x = weyl_sample(c.rng, m, c.rng.coin() ? 1 : -1);
        if (!is_simple_direct(x)) {
            ++weyl_nonsimple;
            if (m <= 3) c.fail(t, json{{"weyl_not_simple", spinor_json(x)}});
        }
        ++c.res.trials;
    }
    c.res.observation = json{{"weyl_samples_not_simple", weyl_nonsimple}};
}

void constraints(Ctx& c) {
    const int m = c.m;
    c.expect(constraint_count(10) == 10 && constraint_count(12) == 66 && constraint_count(16) == 1821, 0, "constraint counts");
    c.expect(constraint_subsets(m).size() == constraint_count(2 * m), 0, "enumeration size");
    std::size_t weyl_checked = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Spinor w = simple_sample(c.rng, m);
        for (const auto& v : evaluate_constraints(w))
            if (!v.value.is_zero()) {
                c.fail(t, json{{"omega", spinor_json(w)}, {"subset", v.subset}});
                break;
            }
        if (m >= 4) {
            const Spinor x = weyl_sample(c.rng, m, c.rng.coin() ? 1 : -1);
            if (!is_simple_direct(x)) {
                ++weyl_checked;
                const auto vals = evaluate_constraints(x);
                if (std::all_of(vals.begin(), vals.end(), [](const ConstraintValue& v) { return v.value.is_zero(); }))
                    c.fail(t, json{{"nonsimple_weyl", spinor_json(x)}});
            }
        }
        ++c.res.trials;
    }
    c.res.observation = json{{"constraints", constraint_count(2 * m)}, {"nonsimple_weyl_checked", weyl_checked}};
}

// ξ_I = 0 when m - |I| ≡ 1, 2, 3 (mod 4) for ω ⊗ ω*; recorded, not asserted
void diagonal_vanishing(Ctx& c) {
    const int m = c.m;
    json rows = json::array();
    for (const char* kind : {"weyl", "mixed"}) {
        std::size_t held = 0, broken = 0;
        for (std::size_t t = 0; t < c.trials; ++t) {
            const Spinor w = std::string(kind) == "weyl" ? weyl_sample(c.rng, m, c.rng.coin() ? 1 : -1)
                                                         : random_spinor(c.rng, m, Field::Q, true);
            bool ok = true;
            for (std::uint32_t s = 0; s < (std::uint32_t{1} << (2 * m)) && ok; ++s) {
                const int k = subset_grade(s);
                if ((m - k) % 4 != 0 && !inner(w, apply_dual_gammas(s, w)).is_zero()) ok = false;
            }
            ++(ok ? held : broken);
            ++c.res.trials;
        }
        rows.push_back(json{{"sample", kind}, {"rule_held", held}, {"rule_broken", broken}});
    }
    c.res.observation = std::move(rows);
}

// simple spinors with more than m nonzero Fock coordinates; recorded
void support_bound(Ctx& c) {
    const int m = c.m;
    std::size_t simple = 0, exceeding = 0;
    json witness;
    auto look = [&](const Spinor& w) {
        if (!is_simple_direct(w)) return;
        ++simple;
        if (w.support_size() > static_cast<std::size_t>(m) && exceeding++ == 0) witness = spinor_json(w);
    };
    if (m <= 3) {
        c.res.exhaustive = true;
        for_grid(m, [&](const Spinor& w) {
            look(w);
            ++c.res.trials;
        });
    } else {
        for (std::size_t t = 0; t < c.trials; ++t) {
            look(simple_sample(c.rng, m));
            ++c.res.trials;
        }
    }
    c.res.observation = json{{"simple", simple}, {"support_above_m", exceeding}, {"witness", witness}};
}

// a one-dimensional subspace of S spanned by a non-simple spinor; recorded
void one_dimensional_nonsimple(Ctx& c) {
    const int m = c.m;
    json witness;
    std::size_t found = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const Spinor w = mixed_sample(c.rng, m, t);
        if (!is_simple_direct(w) && found++ == 0) witness = json{{"omega", spinor_json(w)}, {"nullity", nullity(w)}};
        ++c.res.trials;
    }
    c.res.observation = json{{"non_simple_found", found}, {"witness", witness}};
}

const std::vector<Check>& checks() {
    static const std::vector<Check> list = {
        {"product_matrix_oracle", "efb_product", product_oracle},
        {"associativity", "", associativity},
        {"delta_structure", "", delta_structure},
        {"volume_element", "", volume_element},
        {"null_vector_characterization", "null_vector_characterization", null_vector_characterization},
        {"conjugate_nonannihilation", "conjugate_nonannihilation", conjugate_nonannihilation},
        {"hermitian_signs", "", hermitian_signs},
        {"conjugate_spinor_nonannihilation", "conjugate_spinor_nonannihilation", conjugate_spinor_nonannihilation},
        {"charge_conjugate_nonannihilation", "charge_conjugate_nonannihilation", charge_conjugate_nonannihilation},
        {"conjugation_identities", "", conjugation_identities},
        {"spinor_space_bisection", "spinor_space_bisection", spinor_space_bisection},
        {"annihilated_subspace_form", "annihilated_subspace_form", annihilated_subspace_form},
        {"generic_trivial_annihilator", "", generic_trivial_annihilator},
        {"determinant_scaling", "determinant_scaling", determinant_scaling},
        {"space_switch", "space_switch", space_switch},
        {"b_form", "", b_form_identities},
        {"orthogonality_intersection", "orthogonality_intersection", orthogonality_intersection},
        {"gamma_expansion", "", gamma_expansion},
        {"witt_expansion", "witt_expansion", witt_expansion},
        {"cartan_chevalley", "cartan_chevalley", cartan_chevalley},
        {"generalized_simplicity", "generalized_simplicity", generalized_simplicity},
        {"three_test_agreement", "", three_test_agreement},
        {"simple_implies_weyl", "", simple_implies_weyl},
        {"constraints", "constraint_counting", constraints},
        {"diagonal_vanishing", "", diagonal_vanishing},
        {"support_bound", "", support_bound},
        {"one_dimensional_nonsimple", "", one_dimensional_nonsimple},
    };
    return list;
}

CheckResult run_check(const Check& ch, int m, std::uint64_t seed, std::size_t trials) {
    Ctx c{m, trials, Rng(derive_seed(seed, ch.name)), {}};
    c.res.name = ch.name;
    c.res.covers = ch.covers;
    c.res.m = m;
    try {
        ch.run(c);
    } catch (const Error& e) {
        c.fail(c.res.trials, json{{"error", e.code()}, {"what", e.what()}});
    } catch (const std::exception& e) {
        c.fail(c.res.trials, json{{"error", "exception"}, {"what", e.what()}});
    }
    return c.res;
}

}  // namespace

const std::vector<std::string>& required_claims() {
    static const std::vector<std::string> claims = {
        "efb_product",
        "null_vector_characterization",
        "conjugate_nonannihilation",
        "conjugate_spinor_nonannihilation",
        "charge_conjugate_nonannihilation",
        "spinor_space_bisection",
        "annihilated_subspace_form",
        "determinant_scaling",
        "orthogonality_intersection",
        "witt_expansion",
        "cartan_chevalley",
        "generalized_simplicity",
        "constraint_counting",
        "space_switch",
    };
    return claims;
}

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& c : checks()) out.emplace_back(c.name);
    out.emplace_back("coverage");
    return out;
}

CheckResult run_check(const std::string& name, int m, std::uint64_t seed, std::size_t trials) {
    if (m < 1 || m > kMaxVerifyM) throw RangeError("verification runs for 1 <= m <= 6");
    for (const auto& c : checks())
        if (name == c.name) return run_check(c, m, seed, trials);
    throw RangeError("unknown check '" + name + "'");
}

std::vector<CheckResult> run_suite(int m, std::uint64_t seed, std::size_t trials, bool parallel) {
    if (m < 1 || m > kMaxVerifyM) throw RangeError("verification runs for 1 <= m <= 6");
    const auto& list = checks();
    std::vector<CheckResult> out(list.size());
    if (parallel) {
        std::atomic<std::size_t> next{0};
        const unsigned n = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(list.size())));
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next++) < list.size();) out[k] = run_check(list[k], m, seed, trials);
            });
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t k = 0; k < list.size(); ++k) out[k] = run_check(list[k], m, seed, trials);
    }

    CheckResult cov;
    cov.name = "coverage";
    cov.m = m;
    std::set<std::string> seen;
    for (const auto& r : out)
        if (!r.covers.empty()) seen.insert(r.covers);
    json missing = json::array();
    for (const auto& claim : required_claims()) {
        ++cov.trials;
        if (!seen.count(claim)) missing.push_back(claim);
    }
    cov.failures = missing.size();
    if (cov.failures) cov.witness = json{{"missing", missing}};
    out.push_back(std::move(cov));
    return out;
}

std::string ledger_line(const CheckResult& r) {
    json j{{"check", r.name}, {"m", r.m}, {"trials", r.trials}, {"failures", r.failures}, {"exhaustive", r.exhaustive},
           {"skipped", r.skipped}};
    if (!r.covers.empty()) j["covers"] = r.covers;
    if (r.failures) j["witness"] = r.witness;
    if (!r.observation.is_null()) j["observation"] = r.observation;
    return j.dump();
}

std::string ledger(const std::vector<CheckResult>& results) {
    std::string s;
    for (const auto& r : results) s += ledger_line(r) + "\n";
    return s;
}

}  // namespace efb
