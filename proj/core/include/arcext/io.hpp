#pragma once

// Deterministic serializers shared by the CLI and the acceptance suite:
// identical inputs must produce byte-identical strings.

#include <string>

#include "arcext/ainfty.hpp"
#include "arcext/extdg.hpp"
#include "arcext/modules.hpp"
#include "arcext/quiver.hpp"
#include "arcext/shelton.hpp"

namespace arcext {

std::string cartan_csv(const ArcAlgebra& A);
std::string cartan_json(const ArcAlgebra& A);
std::string basis_table_json(const ArcAlgebra& A, bool with_products);
std::string module_json(const ArcAlgebra& A, const GradedModule& M,
                        const std::string& kind, int la);
std::string kl_matrix_json(int m, int n);
std::string kl_matrix_csv(int m, int n);
std::string kl_pair_json(const Weight& la, const Weight& mu);
std::string resolve_json(const ArcAlgebra& A, const ProjComplex& C, bool betti);
std::string ext_table_json(DgExt& E, bool graded, bool structure);
std::string ext_table_csv(DgExt& E);
std::string shelton_json(SheltonOracle& S);
std::string shelton_csv(SheltonOracle& S);
std::string ainfty_json(const AinftyModel& M, bool dump_m3);
std::string quiver_json(const ArcAlgebra& A, const Quiver& q,
                        const QuiverReport& rep);

}  // namespace arcext
