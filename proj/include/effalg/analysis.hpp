#pragma once

#include <optional>

#include "effalg/algebra.hpp"
#include "effalg/order.hpp"
#include "effalg/structure.hpp"

namespace effalg {

/// An algebra together with its derived order and structure profile.
///
/// Everything is computed once in the constructor; the object is immutable
/// afterwards and may be shared between threads.
class Analysis {
  public:
    explicit Analysis(EffectAlgebra algebra);

    const EffectAlgebra& algebra() const noexcept { return algebra_; }
    const OrderStructure& order() const noexcept { return order_; }
    const StructureProfile& profile() const noexcept { return profile_; }

    bool is_lattice() const noexcept { return order_.is_lattice(); }

    /// S(E) extracted as an effect algebra. Throws PreconditionFailed when the
    /// sharp elements do not form a sub-effect algebra.
    const SubAlgebra& sharp_part() const;

    std::size_t ord(ElementId x) const { return profile_.ord.at(x.index); }
    const std::string& name(ElementId x) const { return algebra_.name(x); }

  private:
    EffectAlgebra algebra_;
    OrderStructure order_;
    StructureProfile profile_;
    std::optional<SubAlgebra> sharp_part_;
    std::string sharp_part_error_;
};

}  // namespace effalg
