#include "effalg/analysis.hpp"

namespace effalg {

Analysis::Analysis(EffectAlgebra algebra)
    : algebra_(std::move(algebra)),
      order_(derive_order(algebra_)),
      profile_(profile_structure(algebra_, order_)) {
    try {
        sharp_part_ = extract_subalgebra(algebra_, profile_.sharp);
    } catch (const AxiomViolation& e) {
        sharp_part_error_ = e.what();
    }
}

const SubAlgebra& Analysis::sharp_part() const {
    if (!sharp_part_) {
        throw PreconditionFailed("sharp elements do not form a sub-effect algebra: " + sharp_part_error_);
    }
    return *sharp_part_;
}

}  // namespace effalg
