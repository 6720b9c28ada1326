#include "linkhel/quat.hpp"

#include "linkhel/errors.hpp"

namespace linkhel {

Vec3 stereo_from_pole(const Quat& pole, const Quat& v) {
    if (distance(v, pole) < kPoleEpsilon) {
        throw PoleTooClose("point lies within the pole tolerance of the projection pole");
    }
    const Quat q = v * quat_conj(pole);
    return q.vec() / (1.0 - q.w);
}

Quat inverse_stereo(const Vec3& u) {
    const double r2 = dot(u, u);
    const double scale = 2.0 / (r2 + 1.0);
    return {(r2 - 1.0) / (r2 + 1.0), scale * u.x, scale * u.y, scale * u.z};
}

}  // namespace linkhel
