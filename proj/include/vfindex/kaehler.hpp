#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "germ.hpp"

namespace vfindex {

namespace detail {

/// All j-element subsets of {0..N-1}, lexicographic.
inline std::vector<std::vector<int>> index_subsets(int N, int j) {
    std::vector<std::vector<int>> out;
    if (j < 0 || j > N) return out;
    std::vector<int> cur(j);
    for (int i = 0; i < j; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = j - 1;
        while (i >= 0 && cur[i] == N - j + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int l = i + 1; l < j; ++l) cur[l] = cur[l - 1] + 1;
    }
    return out;
}

} // namespace detail

/// The module of j-forms on the germ: free on the exterior monomials
/// dx_{i1}^...^dx_{ij}, modulo f_i * (each generator) and df_i ^ (each
/// (j-1)-generator) for every defining equation f_i.
struct KaehlerModule {
    int degree = 0;
    std::vector<std::vector<int>> generators; // index subsets, lexicographic
    PresentedModule presentation;
};

inline KaehlerModule build_kaehler_module(const GermVariety& V, int j) {
    const int N = static_cast<int>(V.ambient_dim());
    const int n = static_cast<int>(V.dim());
    if (j < 0 || j > n) throw ContextMismatchError("form degree out of range 0..n");

    const PolyRing& ring = V.ring();
    KaehlerModule mod;
    mod.degree = j;
    mod.generators = detail::index_subsets(N, j);
    const std::size_t rank = mod.generators.size();

    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t s = 0; s < rank; ++s) position[mod.generators[s]] = s;

    std::vector<FreeModuleElement> rels;
    for (const auto& f : V.defining()) {
        // f * e_S
        for (std::size_t s = 0; s < rank; ++s) {
            FreeModuleElement r(ring, rank);
            std::vector<Polynomial> comps(rank, Polynomial::zero(ring));
            comps[s] = f;
            rels.emplace_back(ring, std::move(comps));
        }
        // df ^ e_T for each (j-1)-subset T, expanded over the generators
        // with the sign of moving dx_l into its sorted slot.
        for (const auto& T : detail::index_subsets(N, j - 1)) {
            std::vector<Polynomial> comps(rank, Polynomial::zero(ring));
            bool nonzero = false;
            for (int l = 0; l < N; ++l) {
                if (std::find(T.begin(), T.end(), l) != T.end()) continue;
                std::vector<int> S = T;
                S.insert(std::upper_bound(S.begin(), S.end(), l), l);
                const std::size_t below =
                    static_cast<std::size_t>(std::lower_bound(T.begin(), T.end(), l) - T.begin());
                const Rat sign = (below % 2 == 0) ? Rat(1) : Rat(-1);
                Polynomial entry = f.derivative(static_cast<std::size_t>(l)).scaled(sign);
                if (!entry.is_zero()) nonzero = true;
                comps[position[S]] = comps[position[S]] + entry;
            }
            if (nonzero) rels.emplace_back(ring, std::move(comps));
        }
    }
    mod.presentation = PresentedModule(ring, rank, std::move(rels));
    return mod;
}

/// Matrix of the interior product i_v : forms of degree j -> degree j-1,
/// with i_v(dx_{i1}^...^dx_{ij}) = sum_l (-1)^{l+1} v_{i_l} * (omit i_l).
struct ContractionMap {
    int source_degree = 0;                       // j
    std::size_t source_rank = 0, target_rank = 0;
    std::vector<std::vector<Polynomial>> matrix; // [target][source]

    /// Column `s` as an element of the target free module.
    FreeModuleElement column(const PolyRing& ring, std::size_t s) const {
        std::vector<Polynomial> comps;
        comps.reserve(target_rank);
        for (std::size_t t = 0; t < target_rank; ++t) comps.push_back(matrix[t][s]);
        return FreeModuleElement(ring, std::move(comps));
    }

    std::vector<FreeModuleElement> columns(const PolyRing& ring) const {
        std::vector<FreeModuleElement> out;
        out.reserve(source_rank);
        for (std::size_t s = 0; s < source_rank; ++s) out.push_back(column(ring, s));
        return out;
    }

    /// Applies the matrix to an element of the source free module.
    FreeModuleElement apply(const FreeModuleElement& x) const {
        const PolyRing& ring = x.ring();
        std::vector<Polynomial> comps(target_rank, Polynomial::zero(ring));
        for (std::size_t t = 0; t < target_rank; ++t)
            for (std::size_t s = 0; s < source_rank; ++s)
                if (!matrix[t][s].is_zero() && !x[s].is_zero())
                    comps[t] = comps[t] + matrix[t][s] * x[s];
        return FreeModuleElement(ring, std::move(comps));
    }
};

inline ContractionMap contraction(const VectorFieldGerm& v, int j) {
    const int N = static_cast<int>(v.ambient_dim());
    if (j < 1 || j > N) throw ContextMismatchError("contraction degree out of range 1..n");
    const PolyRing& ring = v.ring();

    const auto sources = detail::index_subsets(N, j);
    const auto targets = detail::index_subsets(N, j - 1);
    std::map<std::vector<int>, std::size_t> target_pos;
    for (std::size_t t = 0; t < targets.size(); ++t) target_pos[targets[t]] = t;

    ContractionMap m;
    m.source_degree = j;
    m.source_rank = sources.size();
    m.target_rank = targets.size();
    m.matrix.assign(m.target_rank, std::vector<Polynomial>(m.source_rank, Polynomial::zero(ring)));

    for (std::size_t s = 0; s < sources.size(); ++s) {
        const auto& S = sources[s];
        for (std::size_t l = 0; l < S.size(); ++l) {
            std::vector<int> T = S;
            T.erase(T.begin() + static_cast<long>(l));
            const Rat sign = (l % 2 == 0) ? Rat(1) : Rat(-1);
            const std::size_t t = target_pos[T];
            m.matrix[t][s] =
                m.matrix[t][s] + v[static_cast<std::size_t>(S[l])].scaled(sign);
        }
    }
    return m;
}

/// Matrix product b∘a of two contraction-shaped maps (entries compose as
/// target-of-a = source-of-b).
inline std::vector<std::vector<Polynomial>> compose(const ContractionMap& outer,
                                                    const ContractionMap& inner,
                                                    const PolyRing& ring) {
    std::vector<std::vector<Polynomial>> out(
        outer.target_rank, std::vector<Polynomial>(inner.source_rank, Polynomial::zero(ring)));
    for (std::size_t t = 0; t < outer.target_rank; ++t)
        for (std::size_t s = 0; s < inner.source_rank; ++s)
            for (std::size_t k = 0; k < outer.source_rank; ++k)
                if (!outer.matrix[t][k].is_zero() && !inner.matrix[k][s].is_zero())
                    out[t][s] = out[t][s] + outer.matrix[t][k] * inner.matrix[k][s];
    return out;
}

/// The truncated contraction complex 0 -> Omega^n -> ... -> Omega^0 -> 0.
struct KaehlerComplex {
    std::vector<KaehlerModule> modules; // degrees 0..n
    std::vector<ContractionMap> maps;   // maps[j-1] : Omega^j -> Omega^{j-1}, j = 1..n
};

inline KaehlerComplex build_kaehler_complex(const GermVariety& V, const VectorFieldGerm& v) {
    if (v.ring() != V.ring()) throw ContextMismatchError("field and germ over different rings");
    const int n = static_cast<int>(V.dim());
    KaehlerComplex c;
    for (int j = 0; j <= n; ++j) c.modules.push_back(build_kaehler_module(V, j));
    for (int j = 1; j <= n; ++j) c.maps.push_back(contraction(v, j));
    return c;
}

/// Homology dimensions h_0..h_n of the contraction complex, with the
/// standard bases used for each kernel and subquotient as witnesses.
struct HomologyResult {
    std::vector<unsigned long long> dims;
    std::vector<StandardBasis> kernel_witnesses;
    std::vector<StandardBasis> subquotient_witnesses;

    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[i]);
        return chi;
    }
};

inline HomologyResult module_homology(const KaehlerComplex& complex, const PolyRing& ring,
                                      ComputeControl* ctl = nullptr) {
    const int n = static_cast<int>(complex.modules.size()) - 1;

    // The maps must compose to zero as polynomial matrices...
    for (int j = 2; j <= n; ++j) {
        const auto prod = compose(complex.maps[j - 2], complex.maps[j - 1], ring);
        for (const auto& row : prod)
            for (const auto& e : row)
                if (!e.is_zero())
                    throw InternalConsistencyError("contraction maps do not compose to zero");
    }
    // ...and descend to the presentations: each relation maps into the
    // target relation submodule.
    for (int j = 1; j <= n; ++j) {
        const auto& target = complex.modules[j - 1].presentation;
        StandardBasis tb = standard_basis(target.relations, target.rank, ring, ctl);
        for (const auto& rel : complex.modules[j].presentation.relations) {
            if (!membership(complex.maps[j - 1].apply(rel), tb))
                throw InternalConsistencyError(
                    "contraction does not preserve the relation submodule (is the field tangent?)");
        }
    }

    HomologyResult res;
    for (int j = 0; j <= n; ++j) {
        const auto& mod = complex.modules[j].presentation;

        std::vector<FreeModuleElement> numerator;
        if (j == 0) {
            for (std::size_t i = 0; i < mod.rank; ++i)
                numerator.push_back(FreeModuleElement::unit_vector(ring, mod.rank, i));
        } else {
            numerator = kernel_modulo(complex.maps[j - 1].columns(ring),
                                      complex.modules[j - 1].presentation.relations, ring, ctl);
        }

        std::vector<FreeModuleElement> denominator;
        if (j < n)
            for (auto& col : complex.maps[j].columns(ring)) denominator.push_back(std::move(col));
        for (const auto& rel : mod.relations) denominator.push_back(rel);

        SubquotientResult sq = subquotient_dimension(numerator, denominator, ring, ctl);
        if (!sq.dim.finite)
            throw InfiniteDimensionError(
                "homology dimension is infinite: non-isolated singularity of the field or the germ",
                j);
        res.dims.push_back(sq.dim.value);
        res.kernel_witnesses.push_back(std::move(sq.numerator_basis));
        res.subquotient_witnesses.push_back(std::move(sq.presentation_basis));
    }
    return res;
}

/// Euler characteristic of the contraction complex (Omega^._{V,0}, i_v).
/// Requires v tangent to V with v(0) = 0 and finite homology; negative
/// values are legitimate on singular germs.
inline long long homological_index(const VectorFieldGerm& v, const GermVariety& V,
                                   ComputeControl* ctl = nullptr,
                                   HomologyResult* homology_out = nullptr) {
    if (!is_tangent(v, V, ctl))
        throw NotTangentError("vector field is not tangent to the germ: v(f) not in (f)");
    const PolyRing lr = detail::local_ring(V.ring());

    // Rebuild over the local order so every quotient is a germ quotient.
    std::vector<Polynomial> fs;
    for (const auto& f : V.defining()) fs.push_back(f.ring() == lr ? f : f.reordered(lr));
    std::vector<Polynomial> vs;
    for (const auto& c : v.components()) vs.push_back(c.ring() == lr ? c : c.reordered(lr));
    const GermVariety Vl(lr, std::move(fs));
    const VectorFieldGerm vl(lr, std::move(vs));

    KaehlerComplex complex = build_kaehler_complex(Vl, vl);
    HomologyResult res = module_homology(complex, lr, ctl);
    const long long chi = res.euler_characteristic();
    if (homology_out) *homology_out = std::move(res);
    return chi;
}

} // namespace vfindex
