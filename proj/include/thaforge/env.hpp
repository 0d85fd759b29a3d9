// U(B_0) over the PBW basis: monomials are non-decreasing sequences of
// degree-0 basis indices, normalised by the adjacent rewriting
//   b_j b_i -> b_i b_j + [b_j, b_i]   (j > i; B_0 is purely even).

#pragma once

#include <map>
#include <vector>

#include "thaforge/linalg.hpp"
#include "thaforge/superlocal.hpp"

namespace thaforge {

using Monomial = std::vector<int>; // sorted non-decreasing; empty = 1
using EnvElement = SparseVec<Monomial>;

inline int filtration(const Monomial &m) { return static_cast<int>(m.size()); }

inline EnvElement env_unit()
{
    EnvElement e;
    e.add(Monomial{}, Rational(1));
    return e;
}

inline EnvElement env_scalar(const Rational &c)
{
    EnvElement e;
    e.add(Monomial{}, c);
    return e;
}

inline EnvElement env_of(const SparseVec<int> &lie)
{
    EnvElement e;
    for (const auto &[b, c] : lie.terms())
        e.add(Monomial{b}, c);
    return e;
}

inline EnvElement env_basis(int b)
{
    EnvElement e;
    e.add(Monomial{b}, Rational(1));
    return e;
}

class PBW {
  public:
    explicit PBW(const ContragredientEngine &eng) : eng_(&eng) {}

    const ContragredientEngine &engine() const { return *eng_; }

    // normal form of an arbitrary word of basis indices
    const EnvElement &normal_form(const Monomial &word) const
    {
        auto it = nf_cache_.find(word);
        if (it != nf_cache_.end())
            return it->second;
        EnvElement r;
        size_t inv = word.size();
        for (size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] > word[i + 1]) {
                inv = i;
                break;
            }
        if (inv == word.size()) {
            r.add(word, Rational(1));
        } else {
            Monomial swapped = word;
            std::swap(swapped[inv], swapped[inv + 1]);
            r = normal_form(swapped);
            const SparseVec<int> &br = eng_->bracket00(word[inv], word[inv + 1]);
            for (const auto &[b, c] : br.terms()) {
                Monomial shorter;
                shorter.reserve(word.size() - 1);
                shorter.insert(shorter.end(), word.begin(), word.begin() + inv);
                shorter.push_back(b);
                shorter.insert(shorter.end(), word.begin() + inv + 2, word.end());
                r.add_scaled(normal_form(shorter), c);
            }
        }
        return nf_cache_.emplace(word, std::move(r)).first->second;
    }

    EnvElement mul(const Monomial &u, const Monomial &v) const
    {
        Monomial w;
        w.reserve(u.size() + v.size());
        w.insert(w.end(), u.begin(), u.end());
        w.insert(w.end(), v.begin(), v.end());
        return normal_form(w);
    }

    EnvElement mul(const EnvElement &u, const EnvElement &v) const
    {
        EnvElement r;
        for (const auto &[mu, cu] : u.terms())
            for (const auto &[mv, cv] : v.terms())
                r.add_scaled(mul(mu, mv), cu * cv);
        return r;
    }

    // z * v for a single Lie element in front of a monomial
    EnvElement lmul(int z, const Monomial &v) const
    {
        Monomial w;
        w.reserve(v.size() + 1);
        w.push_back(z);
        w.insert(w.end(), v.begin(), v.end());
        return normal_form(w);
    }

  private:
    const ContragredientEngine *eng_;
    mutable std::map<Monomial, EnvElement> nf_cache_;
};

} // namespace thaforge
