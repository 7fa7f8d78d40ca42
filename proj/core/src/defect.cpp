#include "conlab/defect.hpp"

#include "conlab/dualizing.hpp"
#include "conlab/error.hpp"

namespace conlab {

LocalDefectReport local_defect(const CurveGerm& g) {
    LocalDefectReport r;
    r.germ_name = g.name();
    r.delta = g.delta();
    r.conductor_colength = g.conductor_colength();
    r.gorenstein = g.gorenstein();
    r.cm_type = cm_type(g);
    r.type_defect = r.cm_type - 1;
    // Polar monomials allowed by the conductor minus those that are actually
    // regular; the regular polar space always has dimension delta.
    r.conductor_gap_defect =
        r.conductor_colength - static_cast<long>(omega_polar_basis(g).size());
    return r;
}

GlobalDefectReport global_defect(std::vector<LocalDefectReport> locals) {
    GlobalDefectReport g;
    g.locals = std::move(locals);
    for (const auto& l : g.locals)
        g.total_defect += l.type_defect;
    g.codim_delta = g.total_defect;
    return g;
}

Classification classify(const CurveGerm& g) {
    Classification c{};
    const long type = cm_type(g);
    c.colength_is_two_delta = g.conductor_colength() == 2 * g.delta();
    c.cm_type_is_one = type == 1;
    c.type_defect_is_zero = type - 1 == 0;
    if (c.colength_is_two_delta != c.cm_type_is_one ||
        c.cm_type_is_one != c.type_defect_is_zero)
        throw Error(ErrorKind::InternalInconsistency,
                    "Gorenstein witnesses disagree on germ '" + g.name() + "'");
    c.label = c.cm_type_is_one ? GorensteinClass::gorenstein : GorensteinClass::non_gorenstein;
    return c;
}

const char* to_string(GorensteinClass c) {
    return c == GorensteinClass::gorenstein ? "gorenstein" : "non_gorenstein";
}

} // namespace conlab
