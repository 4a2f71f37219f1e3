#include "qdomain/adjoint.hpp"
#include "qdomain/deficiency.hpp"

namespace qd {

ClassificationReport classify(const OperatorSpec& spec) {
    ClassificationReport rep = classify_boundary_only(spec);
    if (!rep.hermitian) return rep;

    try {
        const DeficiencyResult def = deficiency_indices(spec);
        rep.deficiency = def.indices();
        rep.spectrum_region = spectrum_region_for(def.n_plus, def.n_minus);
        if (!def.conclusive)
            rep.notes.push_back("deficiency computation reported inconclusive evidence");
        // The indices are authoritative for self-adjointness; boundary-form
        // comparison cannot see decay obstructions at infinite endpoints.
        const bool sa = (def.n_plus == 0 && def.n_minus == 0);
        if (sa != rep.self_adjoint) {
            rep.notes.push_back(sa ? "deficiency indices (0,0) override the boundary comparison"
                                   : "nonzero deficiency indices override the boundary comparison");
            rep.self_adjoint = sa;
        }
    } catch (const std::exception& e) {
        rep.notes.push_back(std::string("deficiency indices unavailable: ") + e.what());
    }
    return rep;
}

}  // namespace qd
