#pragma once

// Weyl group machinery on top of a root system.
//
// Elements are identified with their permutations of the root set. The
// enumerated store keeps, per element, only integer tables: the BFS tree
// (parent, letter, length), the right- and left-multiplication tables by
// simple generators, and the inverse map. Full permutations live only on
// the BFS frontier; an element is keyed by the images of the simple roots,
// which determine it.
//
// Element indices are BFS discovery order, which coincides with ordering
// by (word length, lexicographic word); the canonical word of an element
// (its tree path) is therefore its lex-least reduced word.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfd/polynomial.hpp"
#include "sfd/rootsystem.hpp"

namespace sfd {

inline constexpr long kDefaultBudget = 3'000'000;

// Exact |W| from a stabilizer chain on the root permutation action; works
// for every supported type (including E8) without enumeration.
Integer group_order(const RootSystem& rs);

class ElementStore {
public:
    ElementStore(const RootSystem& rs, long budget);

    const RootSystem& root_system() const { return *rs_; }
    long size() const { return static_cast<long>(parent_.size()); }
    int num_generators() const { return n_; }

    uint32_t mul_gen(uint32_t w, int i) const { return cayley_[size_t(w) * n_ + i]; }
    uint32_t gen_mul(int i, uint32_t w) const { return left_[size_t(w) * n_ + i]; }
    uint32_t inverse(uint32_t w) const { return inv_[w]; }
    uint32_t parent(uint32_t w) const { return parent_[w]; }
    int letter(uint32_t w) const { return letter_[w]; }
    int length(uint32_t w) const { return length_[w]; }
    int parity(uint32_t w) const { return length_[w] % 2 ? -1 : 1; }

    // Canonical (lex-least reduced) word, 0-based generator letters.
    std::vector<int> word(uint32_t w) const;
    // Product by an arbitrary word, letters 0-based.
    uint32_t mul_word(uint32_t w, const std::vector<int>& letters) const;
    // Element of a given word (from the identity).
    uint32_t element_of_word(const std::vector<int>& letters) const;
    uint32_t conjugate_by_gen(int i, uint32_t w) const {
        return mul_gen(gen_mul(i, w), i);
    }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_word(a, word(b)); }
    long element_order(uint32_t w) const;

    // Ambient matrix of the element (product of simple reflection matrices).
    RatMatrix matrix(uint32_t w) const;
    // Full root permutation (recomputed from the word on demand).
    std::vector<uint16_t> permutation(uint32_t w) const;

private:
    const RootSystem* rs_;
    int n_;
    std::vector<uint32_t> cayley_, left_, parent_, inv_;
    std::vector<uint8_t> letter_;
    std::vector<uint16_t> length_;
};

// Matrix of an arbitrary word (no enumeration required).
RatMatrix word_matrix(const RootSystem& rs, const std::vector<int>& letters);

// det(1 - t w) on the reflection representation V: ambient reciprocal
// charpoly divided by (1-t)^{ambient - rank}.
IntPolynomial reflection_charpoly(const RootSystem& rs, const RatMatrix& ambient_matrix);

struct ConjugacyClass {
    uint32_t rep = 0;            // lex-least element of the class
    long size = 0;
    int parity = 1;              // +1 even, -1 odd
    IntPolynomial charpoly;      // det(1 - t rep) on V
    std::optional<bool> split;   // filled by the cover layer
    std::optional<std::string> carter_label;
};

struct Classes {
    std::vector<ConjugacyClass> list;
    std::vector<int32_t> class_of;  // element index -> class index

    long centralizer_order(long group_order, int cls) const {
        return group_order / list[cls].size;
    }
};

// Partition of the enumerated group into conjugacy classes (orbit closure
// under conjugation by generators), in canonical order (by representative).
Classes conjugacy_classes(const ElementStore& store);

// Budget-checked enumeration; refusal names the extended mode.
ElementStore enumerate_group(const RootSystem& rs, long budget = kDefaultBudget);

}  // namespace sfd
