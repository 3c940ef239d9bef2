#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace efb {

// A ±1 vector of length m, one bit per site: site i (1-based) lives at bit
// i-1, bit 0 means +1 and bit 1 means -1. e is 0, -e is all ones.
using Mask = std::uint32_t;

inline constexpr int kMaxM = 8;

inline Mask full_mask(int m) { return (Mask{1} << m) - 1; }
inline int site_value(Mask s, int site) { return ((s >> (site - 1)) & 1U) ? -1 : 1; }
inline int parity_sign(Mask s) { return (__builtin_popcount(s) & 1) ? -1 : 1; }

Mask signature_from_values(const std::vector<int>& values);
std::vector<int> signature_values(Mask s, int m);

void check_m(int m);

struct EFBIndex {
    Mask a = 0;  // h-signature
    Mask b = 0;  // h∘g-signature
    friend bool operator==(const EFBIndex&, const EFBIndex&) = default;
};

inline std::uint32_t index_key(EFBIndex x, int m) { return (x.a << m) | x.b; }
inline EFBIndex key_index(std::uint32_t key, int m) { return {key >> m, key & full_mask(m)}; }

// One site of an EFB word.
enum class Letter : std::uint8_t { QP, PQ, Q, P };

std::string letter_text(Letter l, int site);

using EFBWord = std::vector<Letter>;  // entry i-1 is the factor at site i

EFBWord word_of_index(EFBIndex x, int m);
EFBIndex index_of_word(const EFBWord& w);

Mask h_signature(const EFBWord& w);
// bit set where the site factor is a single vector (odd)
Mask g_signature(const EFBWord& w);

std::string word_text(const EFBWord& w);

struct SignedWord {
    int sign;
    EFBWord word;
};

// Product of two EFB words by letter reordering and per-site reduction in
// Cl(1,1). Returns nothing when the product vanishes.
std::optional<SignedWord> normalize_product(const EFBWord& u, const EFBWord& v);

// Sign of Ψ_ab Ψ_bd = s(a,b,d) Ψ_ad, memoized per m.
int sign_s(Mask a, Mask b, Mask d, int m);

// Fill the whole sign table for m up front.
void precompute_signs(int m);

}  // namespace efb
