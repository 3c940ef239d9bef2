#include "efb/simplicity.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "efb/errors.hpp"

namespace efb {

namespace {

void check_candidate(const Spinor& w, const TNPBasis& candidate) {
    if (w.is_zero()) throw ZeroSpinorError("simplicity of the zero spinor is undefined");
    if (candidate.m != w.m()) throw DimensionError("candidate plane and spinor differ in m");
    if (candidate.dim() != static_cast<std::size_t>(w.m()))
        throw DimensionError("candidate plane is not of maximal dimension");
    require_tnp(candidate.vectors);
}

// Ψ_a = tau(a) (∏_{i∈A} p_i) Ψ_e
const std::vector<int>& fock_tau(int m) {
    static std::array<std::vector<int>, kMaxM + 1> cache;
    static std::array<std::once_flag, kMaxM + 1> once;
    std::call_once(once[static_cast<std::size_t>(m)], [m] {
        std::vector<int> tau(std::size_t{1} << m);
        for (Mask a = 0; a <= full_mask(m); ++a) {
            Spinor s = Spinor::basis(m, 0);
            for (int i = m; i >= 1; --i)
                if ((a >> (i - 1)) & 1U) s = act_vector(WittVector::p(m, i), s);
            if (s[a] == Scalar(1))
                tau[a] = 1;
            else if (s[a] == Scalar(-1))
                tau[a] = -1;
            else
                throw InconsistencyError("creation operators do not reach the Fock basis");
        }
        cache[static_cast<std::size_t>(m)] = std::move(tau);
    });
    return cache[static_cast<std::size_t>(m)];
}

std::vector<Vector> coords_of(const TNPBasis& t) {
    std::vector<Vector> c;
    for (const auto& v : t.vectors) c.push_back(v.coords());
    return c;
}

// ℓ_φ[a] = B(φ, Ψ_a)
Vector functional(const Spinor& phi) {
    const int m = phi.m();
    Vector l(phi.dim());
    const BForm& b = b_form(m);
    const RepContext& rep = rep_context(m);
    const Vector v = rep_vector(phi);
    const Mask col = full_mask(m);
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero()) continue;
        const std::uint32_t r = b.monomial.row[c];
        Scalar x = b.monomial.sign[c] > 0 ? v[c] : -v[c];
        if (rep.sigma(r, col) < 0) x.negate();
        l[r] += x;
    }
    return l;
}

Vector row_times(const Vector& l, const ExactMatrix& u) {
    Vector out(u.cols());
    for (std::size_t r = 0; r < u.rows(); ++r) {
        if (l[r].is_zero()) continue;
        for (std::size_t c = 0; c < u.cols(); ++c)
            if (!u(r, c).is_zero()) out[c].add_product(l[r], u(r, c));
    }
    return out;
}

// rank-one rotated element ω̃ ℓ̃ in Fock coordinates
AlgebraElement rank_one_element(const Vector& wt, const Vector& lt, int m, Field field) {
    const Mask col = full_mask(m);
    std::vector<AlgebraElement::Term> terms;
    for (Mask r = 0; r < wt.size(); ++r) {
        if (wt[r].is_zero()) continue;
        for (Mask c = 0; c < lt.size(); ++c) {
            if (lt[c].is_zero()) continue;
            Scalar x = wt[r] * lt[c];
            if (sign_s(r, c, col, m) < 0) x.negate();
            terms.emplace_back(index_key({r, c}, m), std::move(x));
        }
    }
    return AlgebraElement::from_terms(m, field, std::move(terms));
}

// z-letters only (a = e) and at least k_m singles; returns min singles or -1
bool words_allowed(const WittExpansion& e, int k_m, int& min_grade) {
    bool ok = true;
    min_grade = -1;
    for (const auto& [key, c] : e.coeffs) {
        const EFBIndex x = key_index(key, e.m);
        const int l = witt_singles(x, e.m);
        if (min_grade < 0 || l < min_grade) min_grade = l;
        if (x.a != 0 || l < k_m) ok = false;
    }
    return ok;
}

}  // namespace

WittFrame::WittFrame(const TNPBasis& candidate, Field field)
    : m_(candidate.m), field_(field), frame_(normalize_tnp(candidate.vectors)), vacuum_(candidate.m, field) {
    if (candidate.dim() != static_cast<std::size_t>(m_)) throw DimensionError("frame needs a maximal plane");
    const std::size_t n = std::size_t{1} << m_;
    ExactMatrix stacked(n * frame_.qs.size(), n);
    for (std::size_t k = 0; k < frame_.qs.size(); ++k) {
        ExactMatrix op = vector_operator(frame_.qs[k], field);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!op(r, c).is_zero()) stacked(k * n + r, c) = op(r, c);
    }
    auto vac = kernel_basis(stacked);
    if (vac.size() != 1) throw InconsistencyError("vacuum of a maximal plane is not one-dimensional");
    vacuum_ = Spinor(m_, field, vac.front());

    const std::vector<int>& tau = fock_tau(m_);
    u_ = ExactMatrix(n, n);
    for (Mask a = 0; a < n; ++a) {
        Spinor f = vacuum_;
        for (int i = m_; i >= 1; --i)
            if ((a >> (i - 1)) & 1U) f = act_vector(frame_.ps[static_cast<std::size_t>(i - 1)], f);
        for (Mask r = 0; r < n; ++r) u_(r, a) = tau[a] > 0 ? f[r] : -f[r];
    }
    u_inv_ = inverse(u_);
}

Vector WittFrame::rotate(const Spinor& w) const { return u_inv_ * w.xi(); }

AlgebraElement WittFrame::to_standard(const AlgebraElement& mu) const {
    return element_from_operator(u_inv_ * fock_operator(mu) * u_, m_, mu.field());
}

bool is_simple_direct(const Spinor& w) { return nullity(w) == static_cast<std::size_t>(w.m()); }

bool is_weyl(const Spinor& w) {
    int seen = 0;
    for (Mask a = 0; a < w.dim(); ++a) {
        if (w[a].is_zero()) continue;
        const int c = parity_sign(a);
        if (seen != 0 && seen != c) return false;
        seen = c;
    }
    return true;
}

bool cartan_chevalley_test(const Spinor& w, const TNPBasis& candidate) {
    check_candidate(w, candidate);
    if (!is_weyl(w)) return false;
    const WittFrame f(candidate, w.field());
    const AlgebraElement mu = rank_one_element(f.rotate(w), row_times(functional(w), f.U()), w.m(), w.field());
    const WittExpansion e = expand_witt(mu);
    return e.coeffs.size() == 1 && e.coeffs.begin()->first == index_key({0, full_mask(w.m())}, w.m());
}

const std::vector<TNPBasis>& fock_annihilators(int m) {
    check_m(m);
    static std::array<std::vector<TNPBasis>, kMaxM + 1> cache;
    static std::array<std::once_flag, kMaxM + 1> once;
    std::call_once(once[static_cast<std::size_t>(m)], [m] {
        std::vector<TNPBasis> out;
        for (Mask c = 0; c <= full_mask(m); ++c) out.push_back(annihilator(Spinor::basis(m, c)));
        cache[static_cast<std::size_t>(m)] = std::move(out);
    });
    return cache[static_cast<std::size_t>(m)];
}

namespace {

std::vector<int> fock_k_m(const Spinor& w) {
    const int m = w.m();
    const auto mw = coords_of(annihilator(w));
    std::vector<int> k;
    for (const auto& t : fock_annihilators(m))
        k.push_back(static_cast<int>(intersection_dimension(2 * m, mw, coords_of(t))));
    return k;
}

}  // namespace

GeneralizedResult generalized_test(const Spinor& w, const TNPBasis& candidate) {
    check_candidate(w, candidate);
    const int m = w.m();
    const WittFrame f(candidate, w.field());
    const Vector wt = f.rotate(w);
    GeneralizedResult res;
    res.k_m = fock_k_m(w);
    res.verdict = true;
    for (Mask c = 0; c <= full_mask(m); ++c) {
        const Vector lt = row_times(functional(Spinor::basis(m, c, w.field())), f.U());
        int min_grade = -1;
        for (Mask r = 0; r < wt.size(); ++r) {
            if (wt[r].is_zero()) continue;
            for (Mask d = 0; d < lt.size(); ++d) {
                if (lt[d].is_zero()) continue;
                // word (r, d): singles where r and d differ
                const int l = __builtin_popcount(r ^ d);
                if (min_grade < 0 || l < min_grade) min_grade = l;
                if (r != 0 || l < res.k_m[c]) res.verdict = false;
            }
        }
        res.min_grade.push_back(min_grade);
    }
    return res;
}

GeneralizedResult generalized_test_full(const Spinor& w, const TNPBasis& candidate) {
    check_candidate(w, candidate);
    const int m = w.m();
    const WittFrame f(candidate, w.field());
    GeneralizedResult res;
    res.k_m = fock_k_m(w);
    res.verdict = true;
    for (Mask c = 0; c <= full_mask(m); ++c) {
        const AlgebraElement mu = f.to_standard(endo_from_pair(w, Spinor::basis(m, c, w.field())));
        int g = -1;
        if (!words_allowed(expand_witt(mu), res.k_m[c], g)) res.verdict = false;
        res.min_grade.push_back(g);
    }
    return res;
}

bool generalized_test_single(const Spinor& w, const Spinor& phi, const TNPBasis& candidate) {
    check_candidate(w, candidate);
    const int m = w.m();
    const WittFrame f(candidate, w.field());
    const int k_m = static_cast<int>(intersection_dimension(2 * m, coords_of(annihilator(w)), coords_of(annihilator(phi))));
    const AlgebraElement mu = rank_one_element(f.rotate(w), row_times(functional(phi), f.U()), m, w.field());
    int g = -1;
    return words_allowed(expand_witt(mu), k_m, g);
}

bool generalized_shortcut(const Spinor& w, const TNPBasis& candidate) {
    check_candidate(w, candidate);
    const int m = w.m();
    const TNPFrame fr = normalize_tnp(candidate.vectors);
    for (const auto& q : fr.qs) {
        const Spinor qw = act_vector(q, w);
        for (Mask c = 0; c <= full_mask(m); ++c)
            if (!inner(Spinor::basis(m, c, w.field()), qw).is_zero()) return false;
    }
    return true;
}

std::uint64_t constraint_count(int total_dimension) {
    if (total_dimension < 2 || total_dimension % 2 != 0)
        throw DimensionError("total dimension must be even and positive");
    if (total_dimension > 60) throw RangeError("total dimension above 60 overflows the count");
    const int n = total_dimension, m = n / 2;
    std::uint64_t total = 0;
    for (int k = 0; k < m; ++k) {
        if ((m - k) % 4 != 0) continue;
        std::uint64_t c = 1;
        for (int j = 1; j <= k; ++j) c = c * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
        total += c;
    }
    return total;
}

std::vector<std::uint32_t> constraint_subsets(int m) {
    check_m(m);
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << (2 * m)); ++s) {
        const int k = __builtin_popcount(s);
        if (k < m && (m - k) % 4 == 0) out.push_back(s);
    }
    return out;
}

std::vector<ConstraintValue> evaluate_constraints(const Spinor& w) {
    std::vector<ConstraintValue> out;
    for (std::uint32_t s : constraint_subsets(w.m())) out.push_back({s, inner(w, apply_dual_gammas(s, w))});
    return out;
}

SimplicityReport report(const Spinor& w) {
    if (w.is_zero()) throw ZeroSpinorError("simplicity of the zero spinor is undefined");
    SimplicityReport r;
    TNPBasis mw = annihilator(w);
    r.nullity = mw.dim();
    r.direct = r.nullity == static_cast<std::size_t>(w.m());
    r.weyl = is_weyl(w);
    r.candidate = r.direct ? mw : complete_tnp(mw);
    r.cartan_chevalley = cartan_chevalley_test(w, r.candidate);
    r.generalized_detail = generalized_test(w, r.candidate);
    r.generalized = r.generalized_detail.verdict;
    r.shortcut = generalized_shortcut(w, r.candidate);
    auto cons = evaluate_constraints(w);
    r.constraints_generated = cons.size();
    for (const auto& c : cons)
        if (!c.value.is_zero()) ++r.constraints_violated;
    if (r.direct != r.cartan_chevalley || r.direct != r.generalized || r.direct != r.shortcut)
        throw InconsistencyError("simplicity tests disagree");
    return r;
}

}  // namespace efb
