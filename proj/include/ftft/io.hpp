#pragma once
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ftft/bimodule.hpp"
#include "ftft/fgroup.hpp"
#include "ftft/frob.hpp"
#include "ftft/stellar.hpp"
#include "ftft/superalgebra.hpp"
#include "ftft/twogroup.hpp"

namespace ftft {

// Insertion-ordered, so dumps are canonical.
using Json = nlohmann::ordered_json;

// Scalars are strings such as "3/5", "-i" or "1/2+2i".
Json to_json(const Scalar& x);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);

Json to_json(const FermionicGroup& g);
Json to_json(const SkeletalTwoGroup& g);
Json to_json(const Superalgebra& a);
Json to_json(const Bimodule& m);
Json to_json(const StarAlgebra& s);
Json to_json(const StellarAlgebra& s);
Json to_json(const HilbertPairing& p);
Json to_json(const TftBundle1D& t);

// (Gamma, Xi) over a base 2-group.
struct TwoGroupMapFile {
    SkeletalTwoGroup base;
    ExtensionData ext;
};
Json to_json(const TwoGroupMapFile& m);

// tft2d files carry the real *-structure and lambda; the star structure and
// pairings are derived from them.
struct Tft2dFile {
    GradedAlgebraBundle bundle;
    Matrix dagger;
    Vec lambda;
};
Json to_json(const Tft2dFile& t);

struct UnitaryRepFile {
    FermionicGroup group;
    HermitianSpace space;
    std::vector<Matrix> rho;
};
Json to_json(const UnitaryRepFile& r);

using Document = std::variant<FermionicGroup, SkeletalTwoGroup, TwoGroupMapFile, Superalgebra, Bimodule, StarAlgebra,
                              StellarAlgebra, HilbertPairing, Tft2dFile, TftBundle1D, UnitaryRepFile>;

std::string kind_of(const Document& d);
Json to_json(const Document& d);
// Throws StructuralError naming the offending location.
Document from_json(const Json& j);
Document parse_document(const std::string& text);
Document load_document(const std::string& path);
// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

// Validator for each kind.
Report check_document(const Document& d);

// Named algebras usable as references inside files: "R", "C", "H", "C-real",
// "dual", "clifford-P-Q", "complex-clifford-N", "matrix-M-N", "matrix-real-M-N".
Superalgebra algebra_fixture(const std::string& name);

}  // namespace ftft
