#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orbicy/algebra/cyclotomic.hpp"
#include "orbicy/algebra/puiseux.hpp"

namespace orbicy::test {

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    Rational rational(int span = 5) {
        int n = uniform(-span, span), d = uniform(1, 4);
        return make_rational(n, d);
    }

    ParamPoly param_poly(int max_terms = 4, int max_deg = 2) {
        static const std::vector<std::string> names = {"r", "m", "N", "Nprime", "gD", "ell"};
        ParamPoly p;
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            ParamPoly mono(rational());
            int deg = uniform(0, max_deg);
            for (int i = 0; i < deg; ++i) mono *= sym(names[uniform(0, int(names.size()) - 1)]);
            p += mono;
        }
        return p;
    }

    PuiseuxPoly puiseux(int max_terms = 4, std::uint32_t denom = 0) {
        std::uint32_t D = denom ? denom : std::uint32_t(std::vector<int>{1, 2, 3, 6}[uniform(0, 3)]);
        PuiseuxPoly p = PuiseuxPoly::term(ParamPoly(), 0, 0, D);
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t)
            p += PuiseuxPoly::term(param_poly(2, 1), uniform(0, 2 * D), uniform(0, 2 * D), D);
        return p;
    }

    CyclotomicNumber cyclotomic(int d) { return CyclotomicNumber(d, rational(), rational()); }

    std::mt19937_64& engine() { return gen_; }

   private:
    std::mt19937_64 gen_;
};

}  // namespace orbicy::test
