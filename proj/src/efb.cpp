#include "efb/efb.hpp"

#include <array>
#include <atomic>
#include <memory>
#include <mutex>

#include "efb/errors.hpp"

namespace efb {

void check_m(int m) {
    if (m < 1 || m > kMaxM) throw RangeError("m must lie in 1.." + std::to_string(kMaxM));
}

Mask signature_from_values(const std::vector<int>& values) {
    if (values.empty() || values.size() > static_cast<std::size_t>(kMaxM))
        throw DimensionError("signature length out of range");
    Mask s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == -1)
            s |= Mask{1} << i;
        else if (values[i] != 1)
            throw ParseError("signature entries must be +1 or -1");
    }
    return s;
}

std::vector<int> signature_values(Mask s, int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) v[static_cast<std::size_t>(i - 1)] = site_value(s, i);
    return v;
}

std::string letter_text(Letter l, int site) {
    const std::string n = std::to_string(site);
    switch (l) {
        case Letter::QP: return "q" + n + "p" + n;
        case Letter::PQ: return "p" + n + "q" + n;
        case Letter::Q: return "q" + n;
        case Letter::P: return "p" + n;
    }
    return {};
}

EFBWord word_of_index(EFBIndex x, int m) {
    EFBWord w(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const bool h_minus = (x.a >> i) & 1U;
        const bool odd = ((x.a ^ x.b) >> i) & 1U;
        if (!h_minus)
            w[static_cast<std::size_t>(i)] = odd ? Letter::Q : Letter::QP;
        else
            w[static_cast<std::size_t>(i)] = odd ? Letter::P : Letter::PQ;
    }
    return w;
}

Mask h_signature(const EFBWord& w) {
    Mask s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == Letter::PQ || w[i] == Letter::P) s |= Mask{1} << i;
    return s;
}

Mask g_signature(const EFBWord& w) {
    Mask s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == Letter::Q || w[i] == Letter::P) s |= Mask{1} << i;
    return s;
}

EFBIndex index_of_word(const EFBWord& w) {
    const Mask a = h_signature(w);
    return {a, a ^ g_signature(w)};
}

std::string word_text(const EFBWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += letter_text(w[i], static_cast<int>(i) + 1);
    return s;
}

namespace {

// generators of a site factor, left to right; 'q' or 'p'
int spell(Letter l, std::array<char, 2>& out) {
    switch (l) {
        case Letter::QP: out = {'q', 'p'}; return 2;
        case Letter::PQ: out = {'p', 'q'}; return 2;
        case Letter::Q: out = {'q', 0}; return 1;
        case Letter::P: out = {'p', 0}; return 1;
    }
    return 0;
}

// Reduce an alternating-or-not string of same-site generators. In Cl(1,1)
// q² = p² = 0 and qpq = q, pqp = p, so an alternating string collapses to
// its first one or two letters.
std::optional<Letter> reduce_site(const char* g, int n) {
    for (int k = 1; k < n; ++k)
        if (g[k] == g[k - 1]) return std::nullopt;
    if (n % 2 == 1) return g[0] == 'q' ? Letter::Q : Letter::P;
    return g[0] == 'q' ? Letter::QP : Letter::PQ;
}

}  // namespace

std::optional<SignedWord> normalize_product(const EFBWord& u, const EFBWord& v) {
    if (u.size() != v.size()) throw DimensionError("words of different m");
    const std::size_t m = u.size();
    std::array<int, kMaxM> len_u{}, len_v{};
    std::array<std::array<char, 2>, kMaxM> sp_u{}, sp_v{};
    for (std::size_t i = 0; i < m; ++i) {
        len_u[i] = spell(u[i], sp_u[i]);
        len_v[i] = spell(v[i], sp_v[i]);
    }
    // Moving every generator of v leftwards past the generators of u that sit
    // at a larger site: each swap of distinct-site generators flips the sign.
    long swaps = 0;
    long u_above = 0;
    for (std::size_t i = m; i-- > 0;) {
        swaps += u_above * len_v[i];
        u_above += len_u[i];
    }
    SignedWord out{(swaps % 2) ? -1 : 1, EFBWord(m)};
    for (std::size_t i = 0; i < m; ++i) {
        char g[4];
        int n = 0;
        for (int k = 0; k < len_u[i]; ++k) g[n++] = sp_u[i][static_cast<std::size_t>(k)];
        for (int k = 0; k < len_v[i]; ++k) g[n++] = sp_v[i][static_cast<std::size_t>(k)];
        auto r = reduce_site(g, n);
        if (!r) return std::nullopt;
        out.word[i] = *r;
    }
    return out;
}

namespace {

struct SignTable {
    std::unique_ptr<std::atomic<std::int8_t>[]> entries;
};

std::array<SignTable, kMaxM + 1> g_tables;
std::array<std::once_flag, kMaxM + 1> g_table_once;

std::atomic<std::int8_t>* table_for(int m) {
    std::call_once(g_table_once[static_cast<std::size_t>(m)], [m] {
        const std::size_t n = std::size_t{1} << (3 * m);
        auto p = std::make_unique<std::atomic<std::int8_t>[]>(n);
        for (std::size_t i = 0; i < n; ++i) p[i].store(0, std::memory_order_relaxed);
        g_tables[static_cast<std::size_t>(m)].entries = std::move(p);
    });
    return g_tables[static_cast<std::size_t>(m)].entries.get();
}

int compute_sign(Mask a, Mask b, Mask d, int m) {
    auto r = normalize_product(word_of_index({a, b}, m), word_of_index({b, d}, m));
    if (!r || index_of_word(r->word) != EFBIndex{a, d})
        throw InconsistencyError("word reduction did not yield the expected index");
    return r->sign;
}

}  // namespace

int sign_s(Mask a, Mask b, Mask d, int m) {
    check_m(m);
    auto* t = table_for(m);
    const std::size_t idx = (std::size_t{a} << (2 * m)) | (std::size_t{b} << m) | d;
    std::int8_t v = t[idx].load(std::memory_order_acquire);
    if (v == 0) {
        v = static_cast<std::int8_t>(compute_sign(a, b, d, m));
        t[idx].store(v, std::memory_order_release);
    }
    return v;
}

void precompute_signs(int m) {
    check_m(m);
    const Mask n = Mask{1} << m;
    for (Mask a = 0; a < n; ++a)
        for (Mask b = 0; b < n; ++b)
            for (Mask d = 0; d < n; ++d) sign_s(a, b, d, m);
}

}  // namespace efb
