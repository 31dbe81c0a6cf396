#ifndef OPERADIC_CATALOG_HPP
#define OPERADIC_CATALOG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "operadic/presentation.hpp"

namespace operadic {

namespace detail {

inline Mat basis_mat(std::size_t n, std::initializer_list<std::pair<std::pair<int, int>, Scalar>> entries) {
    Mat m(n, n);
    for (const auto& [pos, c] : entries) m.at(pos.first, pos.second) = c;
    return m;
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
    return {"assoc", "dend", "tri", "ns", "twoassoc", "assocdialg"};
}

// Built-in presentations. Generator order and relation lists follow the
// standard sources; stars default to the sum of generators except for the
// 2-associative algebra (∗) and the associative dialgebra (⊣).
inline OperadPresentation catalog(const std::string& name) {
    using detail::basis_mat;
    Scalar one(1);
    OperadPresentation p;
    p.name = name;
    if (name == "assoc") {
        p.gens = {"·"};
        p.star = Vec{one};
        p.relations = {{basis_mat(1, {{{0, 0}, one}}), basis_mat(1, {{{0, 0}, one}})}};
        return p;
    }
    if (name == "dend") {
        p.gens = {"≺", "≻"};
        p.star = Vec{one, one};
        p.relations = {
            // (≺⊗≺, ≺⊗(≺+≻))
            {basis_mat(2, {{{0, 0}, one}}), basis_mat(2, {{{0, 0}, one}, {{0, 1}, one}})},
            // (≻⊗≺, ≻⊗≺)
            {basis_mat(2, {{{1, 0}, one}}), basis_mat(2, {{{1, 0}, one}})},
            // ((≺+≻)⊗≻, ≻⊗≻)
            {basis_mat(2, {{{0, 1}, one}, {{1, 1}, one}}), basis_mat(2, {{{1, 1}, one}})},
        };
        return p;
    }
    if (name == "tri") {
        p.gens = {"≺", "≻", "∘"};
        p.star = Vec{one, one, one};
        p.relations = {
            // (≺⊗≺, ≺⊗★)
            {basis_mat(3, {{{0, 0}, one}}),
             basis_mat(3, {{{0, 0}, one}, {{0, 1}, one}, {{0, 2}, one}})},
            // (≻⊗≺, ≻⊗≺)
            {basis_mat(3, {{{1, 0}, one}}), basis_mat(3, {{{1, 0}, one}})},
            // (★⊗≻, ≻⊗≻)
            {basis_mat(3, {{{0, 1}, one}, {{1, 1}, one}, {{2, 1}, one}}),
             basis_mat(3, {{{1, 1}, one}})},
            // (≻⊗∘, ≻⊗∘)
            {basis_mat(3, {{{1, 2}, one}}), basis_mat(3, {{{1, 2}, one}})},
            // (≺⊗∘, ∘⊗≻)
            {basis_mat(3, {{{0, 2}, one}}), basis_mat(3, {{{2, 1}, one}})},
            // (∘⊗≺, ∘⊗≺)
            {basis_mat(3, {{{2, 0}, one}}), basis_mat(3, {{{2, 0}, one}})},
            // (∘⊗∘, ∘⊗∘)
            {basis_mat(3, {{{2, 2}, one}}), basis_mat(3, {{{2, 2}, one}})},
        };
        return p;
    }
    if (name == "ns") {
        p.gens = {"≺", "≻", "•"};
        p.star = Vec{one, one, one};
        p.relations = {
            // (≺⊗≺, ≺⊗★)
            {basis_mat(3, {{{0, 0}, one}}),
             basis_mat(3, {{{0, 0}, one}, {{0, 1}, one}, {{0, 2}, one}})},
            // (≻⊗≺, ≻⊗≺)
            {basis_mat(3, {{{1, 0}, one}}), basis_mat(3, {{{1, 0}, one}})},
            // (★⊗≻, ≻⊗≻)
            {basis_mat(3, {{{0, 1}, one}, {{1, 1}, one}, {{2, 1}, one}}),
             basis_mat(3, {{{1, 1}, one}})},
            // (★⊗• + •⊗≺, ≻⊗• + •⊗★)
            {basis_mat(3, {{{0, 2}, one}, {{1, 2}, one}, {{2, 2}, one}, {{2, 0}, one}}),
             basis_mat(3, {{{1, 2}, one}, {{2, 0}, one}, {{2, 1}, one}, {{2, 2}, one}})},
        };
        return p;
    }
    if (name == "twoassoc") {
        p.gens = {"∗", "·"};
        p.star = Vec{one, Scalar(0)};
        p.relations = {
            {basis_mat(2, {{{0, 0}, one}}), basis_mat(2, {{{0, 0}, one}})},
            {basis_mat(2, {{{1, 1}, one}}), basis_mat(2, {{{1, 1}, one}})},
        };
        return p;
    }
    if (name == "assocdialg") {
        p.gens = {"⊣", "⊢"};
        p.star = Vec{one, Scalar(0)};
        p.relations = {
            // (⊣⊗⊣, ⊣⊗⊣)
            {basis_mat(2, {{{0, 0}, one}}), basis_mat(2, {{{0, 0}, one}})},
            // (⊢⊗⊢, ⊢⊗⊢)
            {basis_mat(2, {{{1, 1}, one}}), basis_mat(2, {{{1, 1}, one}})},
            // (⊣⊗⊣, ⊣⊗⊢)
            {basis_mat(2, {{{0, 0}, one}}), basis_mat(2, {{{0, 1}, one}})},
            // (⊢⊗⊣, ⊢⊗⊣)
            {basis_mat(2, {{{1, 0}, one}}), basis_mat(2, {{{1, 0}, one}})},
            // (⊣⊗⊢, ⊢⊗⊢)
            {basis_mat(2, {{{0, 1}, one}}), basis_mat(2, {{{1, 1}, one}})},
        };
        return p;
    }
    throw std::invalid_argument("catalog: unknown operad \"" + name + "\"");
}

}  // namespace operadic

#endif
