#include "coframe/forms.hpp"

namespace coframe {

std::string_view to_string(Chart chart)
{
    switch (chart) {
    case Chart::su2_hemisphere: return "su2-hemisphere";
    case Chart::e2: return "e2";
    case Chart::sl2: return "sl2";
    case Chart::surface: return "surface";
    case Chart::lens: return "lens";
    }
    return "unknown";
}

bool admissible(const Point3& p)
{
    if (!p.x.allFinite())
        return false;
    switch (p.chart) {
    case Chart::su2_hemisphere:
    case Chart::lens:
        return p.x.squaredNorm() < 1.0;
    case Chart::sl2:
        return p.x(1) > 0.0;
    case Chart::e2:
    case Chart::surface:
        return true;
    }
    return false;
}

} // namespace coframe
