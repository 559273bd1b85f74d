//! Kleisli and Eilenberg-Moore resolutions of a monad, with their adjunction
//! data and the product comparison for Kleisli categories.

mod comparison;
mod em;
mod kleisli;

use crate::error::{Error, Result};
use crate::fincat::{compose_functors, same_category, Functor, NatTrans};
use crate::report::Report;

pub use comparison::{kleisli_product_comparison, ProductComparison};
pub(crate) use em::{algebra_name, is_algebra};
pub use em::{em, Algebra, EMResolution};
pub use kleisli::{kleisli, KleisliResolution};

/// Both triangle identities of `free ⊣ forget` with the given unit and counit:
/// `ε_{FA} ∘ F(η_A) = 1_{FA}` and `U(ε_X) ∘ η_{UX} = 1_{UX}`.
pub fn verify_adjunction(
    free: &Functor,
    forget: &Functor,
    unit: &NatTrans,
    counit: &NatTrans,
) -> Result<Report> {
    let (c, d) = (free.source(), free.target());
    if !same_category(forget.source(), d) || !same_category(forget.target(), c) {
        return Err(Error::boundary("adjunction: functors are not opposed"));
    }
    if *unit.source() != Functor::identity(c.clone())
        || *unit.target() != compose_functors(forget, free)?
    {
        return Err(Error::boundary("adjunction: unit is not Id ⇒ U∘F"));
    }
    if *counit.source() != compose_functors(free, forget)?
        || *counit.target() != Functor::identity(d.clone())
    {
        return Err(Error::boundary("adjunction: counit is not F∘U ⇒ Id"));
    }
    let mut report = Report::new();
    for a in c.objects() {
        let fa = free.ob(a);
        d.expect_equal(
            &mut report,
            "left-triangle",
            || c.ob_name(a).to_string(),
            &[counit.at(fa), free.mor(unit.at(a))],
            &[d.id(fa)],
        );
    }
    for x in d.objects() {
        let ux = forget.ob(x);
        c.expect_equal(
            &mut report,
            "right-triangle",
            || d.ob_name(x).to_string(),
            &[forget.mor(counit.at(x)), unit.at(ux)],
            &[c.id(ux)],
        );
    }
    Ok(report)
}
