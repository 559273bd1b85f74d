use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Monad, ProductMonad};
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, product_functor, same_category, Functor, MorId, NatTrans};
use crate::report::Report;

/// Which way the comparison cells of a structured 1-cell point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Laxity {
    Lax,
    Oplax,
}

impl Laxity {
    pub fn dual(self) -> Laxity {
        match self {
            Laxity::Lax => Laxity::Oplax,
            Laxity::Oplax => Laxity::Lax,
        }
    }
}

impl fmt::Display for Laxity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Laxity::Lax => "lax",
            Laxity::Oplax => "oplax",
        })
    }
}

/// Shared shape of oplax and lax monad morphisms.
pub trait MonadMorphism: Clone {
    const LAXITY: Laxity;
    fn source(&self) -> &Monad;
    fn target(&self) -> &Monad;
    fn carrier(&self) -> &Functor;
    fn interchange(&self) -> &NatTrans;
}

fn check_carrier(source: &Monad, target: &Monad, carrier: &Functor) -> Result<()> {
    if !same_category(carrier.source(), source.base())
        || !same_category(carrier.target(), target.base())
    {
        return Err(Error::boundary(
            "carrier functor does not run between the monads' base categories",
        ));
    }
    Ok(())
}

/// `(F, τ)` with `τ : F∘S ⇒ S′∘F`.
#[derive(Clone, Debug, PartialEq)]
pub struct OplaxMonadMorphism {
    source: Monad,
    target: Monad,
    carrier: Functor,
    interchange: NatTrans,
}

impl OplaxMonadMorphism {
    pub fn from_components(
        source: Monad,
        target: Monad,
        carrier: Functor,
        components: Vec<MorId>,
    ) -> Result<Self> {
        check_carrier(&source, &target, &carrier)?;
        let from = compose_functors(&carrier, source.endo())?;
        let to = compose_functors(target.endo(), &carrier)?;
        let interchange = NatTrans::new(from, to, components)?;
        Ok(OplaxMonadMorphism {
            source,
            target,
            carrier,
            interchange,
        })
    }

    /// A carrier with identity interchange. Whether `F∘S = S′∘F` actually
    /// holds is left to [`OplaxMonadMorphism::check`].
    pub fn strict(source: Monad, target: Monad, carrier: Functor) -> Result<Self> {
        let d = carrier.target().clone();
        let comps = source
            .base()
            .objects()
            .map(|a| d.id(target.endo().ob(carrier.ob(a))))
            .collect();
        Self::from_components(source, target, carrier, comps)
    }

    pub fn identity(m: &Monad) -> Self {
        Self::strict(m.clone(), m.clone(), Functor::identity(m.base().clone()))
            .expect("identity is well-typed")
    }

    pub fn with_component(&self, a: crate::fincat::ObjId, m: MorId) -> Self {
        OplaxMonadMorphism {
            interchange: self.interchange.with_component(a, m),
            ..self.clone()
        }
    }

    /// Carrier functoriality, interchange naturality, and per object `A`:
    /// `τ_A ∘ F(η_A) = η′_{FA}` and
    /// `τ_A ∘ F(μ_A) = μ′_{FA} ∘ S′(τ_A) ∘ τ_{SA}`.
    pub fn check(&self) -> Report {
        let (s, t) = (&self.source, &self.target);
        let c = s.base();
        let d = t.base();
        let (f, tau) = (&self.carrier, &self.interchange);
        let mut report = Report::new();
        report.absorb("carrier", f.check());
        report.absorb("interchange", tau.check());
        for a in c.objects() {
            let at = || c.ob_name(a).to_string();
            let fa = f.ob(a);
            d.expect_equal(
                &mut report,
                "oplax-unit",
                at,
                &[tau.at(a), f.mor(s.unit().at(a))],
                &[t.unit().at(fa)],
            );
            d.expect_equal(
                &mut report,
                "oplax-multiplication",
                at,
                &[tau.at(a), f.mor(s.mult().at(a))],
                &[
                    t.mult().at(fa),
                    t.endo().mor(tau.at(a)),
                    tau.at(s.endo().ob(a)),
                ],
            );
        }
        report
    }
}

impl MonadMorphism for OplaxMonadMorphism {
    const LAXITY: Laxity = Laxity::Oplax;
    fn source(&self) -> &Monad {
        &self.source
    }
    fn target(&self) -> &Monad {
        &self.target
    }
    fn carrier(&self) -> &Functor {
        &self.carrier
    }
    fn interchange(&self) -> &NatTrans {
        &self.interchange
    }
}

/// `(F, τ)` with `τ : S′∘F ⇒ F∘S`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaxMonadMorphism {
    source: Monad,
    target: Monad,
    carrier: Functor,
    interchange: NatTrans,
}

impl LaxMonadMorphism {
    pub fn from_components(
        source: Monad,
        target: Monad,
        carrier: Functor,
        components: Vec<MorId>,
    ) -> Result<Self> {
        check_carrier(&source, &target, &carrier)?;
        let from = compose_functors(target.endo(), &carrier)?;
        let to = compose_functors(&carrier, source.endo())?;
        let interchange = NatTrans::new(from, to, components)?;
        Ok(LaxMonadMorphism {
            source,
            target,
            carrier,
            interchange,
        })
    }

    pub fn strict(source: Monad, target: Monad, carrier: Functor) -> Result<Self> {
        let d = carrier.target().clone();
        let comps = source
            .base()
            .objects()
            .map(|a| d.id(carrier.ob(source.endo().ob(a))))
            .collect();
        Self::from_components(source, target, carrier, comps)
    }

    pub fn identity(m: &Monad) -> Self {
        Self::strict(m.clone(), m.clone(), Functor::identity(m.base().clone()))
            .expect("identity is well-typed")
    }

    pub fn with_component(&self, a: crate::fincat::ObjId, m: MorId) -> Self {
        LaxMonadMorphism {
            interchange: self.interchange.with_component(a, m),
            ..self.clone()
        }
    }

    /// Carrier functoriality, interchange naturality, and per object `A`:
    /// `F(η_A) = τ_A ∘ η′_{FA}` and
    /// `F(μ_A) ∘ τ_{SA} ∘ S′(τ_A) = τ_A ∘ μ′_{FA}`.
    pub fn check(&self) -> Report {
        let (s, t) = (&self.source, &self.target);
        let c = s.base();
        let d = t.base();
        let (f, tau) = (&self.carrier, &self.interchange);
        let mut report = Report::new();
        report.absorb("carrier", f.check());
        report.absorb("interchange", tau.check());
        for a in c.objects() {
            let at = || c.ob_name(a).to_string();
            let fa = f.ob(a);
            d.expect_equal(
                &mut report,
                "lax-unit",
                at,
                &[f.mor(s.unit().at(a))],
                &[tau.at(a), t.unit().at(fa)],
            );
            d.expect_equal(
                &mut report,
                "lax-multiplication",
                at,
                &[
                    f.mor(s.mult().at(a)),
                    tau.at(s.endo().ob(a)),
                    t.endo().mor(tau.at(a)),
                ],
                &[tau.at(a), t.mult().at(fa)],
            );
        }
        report
    }
}

impl MonadMorphism for LaxMonadMorphism {
    const LAXITY: Laxity = Laxity::Lax;
    fn source(&self) -> &Monad {
        &self.source
    }
    fn target(&self) -> &Monad {
        &self.target
    }
    fn carrier(&self) -> &Functor {
        &self.carrier
    }
    fn interchange(&self) -> &NatTrans {
        &self.interchange
    }
}

fn composite_components(
    g: &impl MonadMorphism,
    f: &impl MonadMorphism,
    component: impl Fn(crate::fincat::ObjId) -> (MorId, MorId),
) -> Result<Vec<MorId>> {
    if g.source() != f.target() {
        return Err(Error::boundary(
            "monad morphism composite: target of the first is not the source of the second",
        ));
    }
    let c = f.source().base();
    let e = g.target().base();
    c.objects()
        .map(|a| {
            let (outer, inner) = component(a);
            e.compose(outer, inner).ok_or_else(|| {
                Error::Undefined(format!(
                    "{} ∘ {} at {}",
                    e.mor_name(outer),
                    e.mor_name(inner),
                    c.ob_name(a)
                ))
            })
        })
        .collect()
}

/// `(F′, τ′) ∘ (F, τ) = (F′∘F, τ′_F ∘ F′(τ))`.
pub fn compose_oplax(g: &OplaxMonadMorphism, f: &OplaxMonadMorphism) -> Result<OplaxMonadMorphism> {
    let comps = composite_components(g, f, |a| {
        (
            g.interchange.at(f.carrier.ob(a)),
            g.carrier.mor(f.interchange.at(a)),
        )
    })?;
    let carrier = compose_functors(&g.carrier, &f.carrier)?;
    OplaxMonadMorphism::from_components(f.source.clone(), g.target.clone(), carrier, comps)
}

/// `(F′, τ′) ∘ (F, τ) = (F′∘F, F′(τ) ∘ τ′_F)`.
pub fn compose_lax(g: &LaxMonadMorphism, f: &LaxMonadMorphism) -> Result<LaxMonadMorphism> {
    let comps = composite_components(g, f, |a| {
        (
            g.carrier.mor(f.interchange.at(a)),
            g.interchange.at(f.carrier.ob(a)),
        )
    })?;
    let carrier = compose_functors(&g.carrier, &f.carrier)?;
    LaxMonadMorphism::from_components(f.source.clone(), g.target.clone(), carrier, comps)
}

fn product_parts(
    f: &impl MonadMorphism,
    g: &impl MonadMorphism,
    src: &ProductMonad,
    tgt: &ProductMonad,
) -> Result<(Functor, Vec<MorId>)> {
    if *f.source() != src.left
        || *g.source() != src.right
        || *f.target() != tgt.left
        || *g.target() != tgt.right
    {
        return Err(Error::boundary(
            "product monad morphism: factors do not match the product monads",
        ));
    }
    let carrier = product_functor(f.carrier(), g.carrier(), &src.product, &tgt.product)?;
    let comps = src
        .product
        .category
        .objects()
        .map(|p| {
            let (a, b) = src.product.split_ob(p);
            tgt.product
                .pair_mor(f.interchange().at(a), g.interchange().at(b))
        })
        .collect();
    Ok((carrier, comps))
}

impl OplaxMonadMorphism {
    /// `(F × G, τ × σ)` between product monads.
    pub fn product(f: &Self, g: &Self, src: &ProductMonad, tgt: &ProductMonad) -> Result<Self> {
        let (carrier, comps) = product_parts(f, g, src, tgt)?;
        Self::from_components(src.monad.clone(), tgt.monad.clone(), carrier, comps)
    }
}

impl LaxMonadMorphism {
    pub fn product(f: &Self, g: &Self, src: &ProductMonad, tgt: &ProductMonad) -> Result<Self> {
        let (carrier, comps) = product_parts(f, g, src, tgt)?;
        Self::from_components(src.monad.clone(), tgt.monad.clone(), carrier, comps)
    }
}

/// A transformation `σ : (F, τ) → (F′, τ′)` of parallel monad morphisms.
#[derive(Clone, Debug)]
pub struct MonadTransformation<M> {
    source: M,
    target: M,
    cell: NatTrans,
}

impl<M: MonadMorphism> MonadTransformation<M> {
    pub fn new(source: M, target: M, components: Vec<MorId>) -> Result<Self> {
        if source.source() != target.source() || source.target() != target.target() {
            return Err(Error::boundary(
                "monad transformation between non-parallel morphisms",
            ));
        }
        let cell = NatTrans::new(
            source.carrier().clone(),
            target.carrier().clone(),
            components,
        )?;
        Ok(MonadTransformation {
            source,
            target,
            cell,
        })
    }

    pub fn source(&self) -> &M {
        &self.source
    }

    pub fn target(&self) -> &M {
        &self.target
    }

    pub fn cell(&self) -> &NatTrans {
        &self.cell
    }

    /// Naturality of `σ` and the compatibility square per object:
    /// oplax `τ′_A ∘ σ_{SA} = S′(σ_A) ∘ τ_A`, lax
    /// `σ_{SA} ∘ τ_A = τ′_A ∘ S′(σ_A)`.
    pub fn check(&self) -> Report {
        let s = self.source.source();
        let t = self.source.target();
        let c = s.base();
        let d = t.base();
        let (tau, tau2, sigma) = (
            self.source.interchange(),
            self.target.interchange(),
            &self.cell,
        );
        let mut report = Report::new();
        report.absorb("cell", sigma.check());
        for a in c.objects() {
            let at = || c.ob_name(a).to_string();
            let sa = s.endo().ob(a);
            let s2_sigma = t.endo().mor(sigma.at(a));
            match M::LAXITY {
                Laxity::Oplax => d.expect_equal(
                    &mut report,
                    "transformation-square",
                    at,
                    &[tau2.at(a), sigma.at(sa)],
                    &[s2_sigma, tau.at(a)],
                ),
                Laxity::Lax => d.expect_equal(
                    &mut report,
                    "transformation-square",
                    at,
                    &[sigma.at(sa), tau.at(a)],
                    &[tau2.at(a), s2_sigma],
                ),
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::{FinCat, ObjId};
    use crate::monad::product_monad;

    fn closure(c: &Arc<FinCat>, map: &[usize]) -> Monad {
        let endo = Functor::from_fn(
            c.clone(),
            c.clone(),
            |a| ObjId(map[a.0]),
            |f| c.hom(ObjId(map[c.dom(f).0]), ObjId(map[c.cod(f).0]))[0],
        )
        .unwrap();
        Monad::induced_on_thin(endo).unwrap()
    }

    /// `(S, μ) : S → Id` as an oplax morphism.
    fn endo_as_oplax(m: &Monad) -> OplaxMonadMorphism {
        let id = Monad::identity(m.base().clone());
        OplaxMonadMorphism::from_components(
            m.clone(),
            id,
            m.endo().clone(),
            m.mult().components().to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn identities_are_valid() {
        let c = Arc::new(FinCat::chain(3));
        let m = closure(&c, &[1, 1, 2]);
        assert!(OplaxMonadMorphism::identity(&m).check().is_ok());
        assert!(LaxMonadMorphism::identity(&m).check().is_ok());
    }

    #[test]
    fn endofunctor_with_multiplication_is_oplax() {
        let c = Arc::new(FinCat::chain(3));
        let m = closure(&c, &[1, 1, 2]);
        assert!(endo_as_oplax(&m).check().is_ok());
        let z = Arc::new(FinCat::cyclic(2));
        let s = z.morphism("s").unwrap();
        let flip = Monad::new(Functor::identity(z.clone()), vec![s], vec![s]).unwrap();
        assert!(endo_as_oplax(&flip).check().is_ok());
    }

    #[test]
    fn corrupted_interchange_is_named() {
        let z = Arc::new(FinCat::cyclic(2));
        let (e, s) = (z.morphism("e").unwrap(), z.morphism("s").unwrap());
        let flip = Monad::new(Functor::identity(z.clone()), vec![s], vec![s]).unwrap();
        let bad = endo_as_oplax(&flip).with_component(ObjId(0), e);
        let r = bad.check();
        assert!(r.has_law("oplax-unit"), "{r}");
        assert_eq!(r.violations()[0].at, "*");
        let lax = LaxMonadMorphism::identity(&flip).with_component(ObjId(0), s);
        assert!(lax.check().has_law("lax-unit"));
    }

    #[test]
    fn composition_with_identity_is_neutral() {
        let c = Arc::new(FinCat::chain(3));
        let m = closure(&c, &[1, 1, 2]);
        let f = endo_as_oplax(&m);
        let id_src = OplaxMonadMorphism::identity(&m);
        let id_tgt = OplaxMonadMorphism::identity(f.target());
        assert_eq!(compose_oplax(&f, &id_src).unwrap(), f);
        assert_eq!(compose_oplax(&id_tgt, &f).unwrap(), f);
        assert!(compose_oplax(&f, &f).is_err());
    }

    #[test]
    fn transformation_squares() {
        let c = Arc::new(FinCat::chain(3));
        let m = closure(&c, &[1, 1, 2]);
        let f = endo_as_oplax(&m);
        let ids = f
            .carrier()
            .source()
            .objects()
            .map(|a| c.id(f.carrier().ob(a)))
            .collect();
        let t = MonadTransformation::new(f.clone(), f.clone(), ids).unwrap();
        assert!(t.check().is_ok());
        let g = OplaxMonadMorphism::identity(&m);
        assert!(MonadTransformation::new(f, g, vec![c.id(ObjId(0)); 3]).is_err());
    }

    #[test]
    fn product_of_identities() {
        let c = Arc::new(FinCat::chain(3));
        let d = Arc::new(FinCat::chain(2));
        let m = closure(&c, &[1, 1, 2]);
        let n = Monad::identity(d.clone());
        let pm = product_monad(&m, &n);
        let p = OplaxMonadMorphism::product(
            &OplaxMonadMorphism::identity(&m),
            &OplaxMonadMorphism::identity(&n),
            &pm,
            &pm,
        )
        .unwrap();
        assert_eq!(p, OplaxMonadMorphism::identity(&pm.monad));
    }
}
