#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laukit/corpus.hpp"
#include "laukit/morphisms.hpp"

namespace laukit {

// String addresses let every object the lab or the CLI mentions be rebuilt
// from a single argument, which is what makes failure witnesses replayable:
//
//   algebra  := catalog | file path
//             | dsum(algebra,algebra) | unitize(algebra)
//             | lau(catalog,catalog,char) | genlau(catalog,catalog,hom)
//             | sub(instance)
//   char     := id | coord:k | eval0 | aug | file path
//   hom      := zero | scalar:<char> | incl | proj | file path
//   instance := upper2 | diag2 | xpoly2 | psi(catalog,catalog,char)
//
// Named characters and the incl/proj strategies need catalog endpoints; maps
// between file-defined algebras travel as map files.

struct ResolvedAlgebra {
    AlgebraPtr algebra;
    std::optional<CatalogSpec> spec;  // set when the argument was a catalog spec
};

ResolvedAlgebra resolve_algebra(const std::string& arg);

/// Character on B addressed by name (catalog B required) or by map file.
LinearMap resolve_character(const ResolvedAlgebra& b, const std::string& arg);

/// Homomorphism B -> A addressed by strategy name or by map file.
LinearMap resolve_hom(const ResolvedAlgebra& b, const ResolvedAlgebra& a, const std::string& arg);

/// A shipped finite-codimension subalgebra instance for the lab's H3
/// hypothesis. The fixed list: the psi-images of the shipped character
/// triples, the upper-triangular and diagonal subalgebras of matrix:2, and
/// the span of x inside poly:2.
struct H3Instance {
    std::string name;
    AlgebraPtr ambient;
    Subspace subspace;
    std::string summary;
};

H3Instance h3_instance(const std::string& name);
std::vector<H3Instance> shipped_h3_instances();

/// The shipped (A, B, character) triples used by the lab's conclusion
/// section and for psi-image H3 instances.
struct LauTriple {
    CatalogSpec a;
    CatalogSpec b;
    std::string character;
};

std::vector<LauTriple> shipped_lau_triples();

}  // namespace laukit
