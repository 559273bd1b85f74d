//! Monads on finite categories, presented by their full component data
//! `(C, S, η, μ)`, together with oplax and lax morphisms of monads and
//! transformations between them.

mod morphism;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, opposite_category, opposite_functor, opposite_nattrans, product_category,
    product_functor, product_nattrans, same_category, FinCat, Functor, MorId, NatTrans, ObjId,
    Product,
};
use crate::report::Report;

pub use morphism::{
    compose_lax, compose_oplax, LaxMonadMorphism, Laxity, MonadMorphism, MonadTransformation,
    OplaxMonadMorphism,
};

#[derive(Clone, Debug, PartialEq)]
pub struct Monad {
    base: Arc<FinCat>,
    endo: Functor,
    unit: NatTrans,
    mult: NatTrans,
}

impl Monad {
    /// Assembles a monad from its endofunctor and the component families of
    /// `η : Id ⇒ S` and `μ : S∘S ⇒ S`. Only boundaries are checked here; the
    /// laws are checked by [`Monad::check`].
    pub fn new(endo: Functor, unit: Vec<MorId>, mult: Vec<MorId>) -> Result<Monad> {
        if !same_category(endo.source(), endo.target()) {
            return Err(Error::boundary(
                "monad endofunctor has different source and target",
            ));
        }
        let base = endo.source().clone();
        let id = Functor::identity(base.clone());
        let unit = NatTrans::new(id, endo.clone(), unit)?;
        let mult = NatTrans::new(compose_functors(&endo, &endo)?, endo.clone(), mult)?;
        Ok(Monad {
            base,
            endo,
            unit,
            mult,
        })
    }

    pub fn from_parts(endo: Functor, unit: NatTrans, mult: NatTrans) -> Result<Monad> {
        let base = endo.source().clone();
        if *unit.source() != Functor::identity(base.clone()) || *unit.target() != endo {
            return Err(Error::boundary("monad unit is not a transformation Id ⇒ S"));
        }
        if *mult.source() != compose_functors(&endo, &endo)? || *mult.target() != endo {
            return Err(Error::boundary(
                "monad multiplication is not a transformation S∘S ⇒ S",
            ));
        }
        Ok(Monad {
            base,
            endo,
            unit,
            mult,
        })
    }

    pub fn identity(base: Arc<FinCat>) -> Monad {
        let endo = Functor::identity(base.clone());
        let ids: Vec<MorId> = base.objects().map(|a| base.id(a)).collect();
        Monad::new(endo, ids.clone(), ids).expect("identity monad is well-formed")
    }

    /// On a thin category a monad is determined by its endofunctor: the unit
    /// and multiplication components are the unique morphisms `A → S A` and
    /// `S S A → S A` when they exist. Missing components are reported per
    /// object.
    pub fn induced_on_thin(endo: Functor) -> std::result::Result<Monad, Report> {
        let c = endo.source().clone();
        let mut report = Report::new();
        if !c.is_thin() {
            report.violation("thin", "base", "non-thin category", "a preorder");
            return Err(report);
        }
        let mut unit = Vec::new();
        let mut mult = Vec::new();
        for a in c.objects() {
            let (s, ss) = (endo.ob(a), endo.ob(endo.ob(a)));
            match c.hom(a, s).first() {
                Some(&m) => unit.push(m),
                None => report.violation(
                    "unit-component",
                    c.ob_name(a),
                    format!("no morphism {} -> {}", c.ob_name(a), c.ob_name(s)),
                    "η_A : A -> S A",
                ),
            }
            match c.hom(ss, s).first() {
                Some(&m) => mult.push(m),
                None => report.violation(
                    "multiplication-component",
                    c.ob_name(a),
                    format!("no morphism {} -> {}", c.ob_name(ss), c.ob_name(s)),
                    "μ_A : S S A -> S A",
                ),
            }
        }
        if !report.is_ok() {
            return Err(report);
        }
        Monad::new(endo, unit, mult).map_err(|e| {
            let mut r = Report::new();
            r.violation("structure", "monad", e.to_string(), "");
            r
        })
    }

    pub fn base(&self) -> &Arc<FinCat> {
        &self.base
    }

    pub fn endo(&self) -> &Functor {
        &self.endo
    }

    pub fn unit(&self) -> &NatTrans {
        &self.unit
    }

    pub fn mult(&self) -> &NatTrans {
        &self.mult
    }

    /// `S ∘ S`.
    pub fn squared(&self) -> Functor {
        compose_functors(&self.endo, &self.endo).expect("endofunctor composes with itself")
    }

    pub fn with_unit(&self, a: ObjId, m: MorId) -> Monad {
        Monad {
            unit: self.unit.with_component(a, m),
            ..self.clone()
        }
    }

    pub fn with_mult(&self, a: ObjId, m: MorId) -> Monad {
        Monad {
            mult: self.mult.with_component(a, m),
            ..self.clone()
        }
    }

    /// Replaces one morphism image of `S`, keeping η and μ components.
    pub fn with_endo_mor(&self, f: MorId, image: MorId) -> Monad {
        let endo = self.endo.with_mor(f, image);
        Monad::new(
            endo,
            self.unit.components().to_vec(),
            self.mult.components().to_vec(),
        )
        .expect("same boundaries")
    }

    /// Functoriality of `S`, naturality of `η` and `μ`, both unit laws and
    /// associativity, at every object.
    pub fn check(&self) -> Report {
        let c = &*self.base;
        let s = &self.endo;
        let mut report = Report::new();
        report.absorb("endofunctor", s.check());
        report.absorb("unit", self.unit.check());
        report.absorb("multiplication", self.mult.check());
        for a in c.objects() {
            let at = || c.ob_name(a).to_string();
            let sa = s.ob(a);
            let (eta, mu) = (&self.unit, &self.mult);
            c.expect_equal(
                &mut report,
                "left-unit",
                at,
                &[mu.at(a), eta.at(sa)],
                &[c.id(sa)],
            );
            c.expect_equal(
                &mut report,
                "right-unit",
                at,
                &[mu.at(a), s.mor(eta.at(a))],
                &[c.id(sa)],
            );
            c.expect_equal(
                &mut report,
                "associativity",
                at,
                &[mu.at(a), mu.at(sa)],
                &[mu.at(a), s.mor(mu.at(a))],
            );
        }
        report
    }

    /// The comonad `(C^op, S^op, η^op, μ^op)`.
    pub fn opposite(&self) -> Result<Comonad> {
        let op = Arc::new(opposite_category(&self.base));
        let endo = opposite_functor(&self.endo, op.clone(), op.clone())?;
        let id_op = opposite_functor(self.unit.source(), op.clone(), op.clone())?;
        let counit = opposite_nattrans(&self.unit, &id_op, &endo)?;
        let ss_op = opposite_functor(self.mult.source(), op.clone(), op.clone())?;
        let comult = opposite_nattrans(&self.mult, &ss_op, &endo)?;
        Comonad::from_parts(endo, counit, comult)
    }
}

/// A comonad `(C, S, ε : S ⇒ Id, δ : S ⇒ S∘S)`. Present so that monad
/// checks can be cross-validated against their duals on opposite categories.
#[derive(Clone, Debug, PartialEq)]
pub struct Comonad {
    base: Arc<FinCat>,
    endo: Functor,
    counit: NatTrans,
    comult: NatTrans,
}

impl Comonad {
    pub fn from_parts(endo: Functor, counit: NatTrans, comult: NatTrans) -> Result<Comonad> {
        let base = endo.source().clone();
        if *counit.source() != endo || *counit.target() != Functor::identity(base.clone()) {
            return Err(Error::boundary(
                "comonad counit is not a transformation S ⇒ Id",
            ));
        }
        if *comult.source() != endo || *comult.target() != compose_functors(&endo, &endo)? {
            return Err(Error::boundary(
                "comonad comultiplication is not a transformation S ⇒ S∘S",
            ));
        }
        Ok(Comonad {
            base,
            endo,
            counit,
            comult,
        })
    }

    pub fn base(&self) -> &Arc<FinCat> {
        &self.base
    }

    pub fn check(&self) -> Report {
        let c = &*self.base;
        let s = &self.endo;
        let (eps, delta) = (&self.counit, &self.comult);
        let mut report = Report::new();
        report.absorb("endofunctor", s.check());
        report.absorb("counit", eps.check());
        report.absorb("comultiplication", delta.check());
        for a in c.objects() {
            let at = || c.ob_name(a).to_string();
            let sa = s.ob(a);
            c.expect_equal(
                &mut report,
                "left-counit",
                at,
                &[eps.at(sa), delta.at(a)],
                &[c.id(sa)],
            );
            c.expect_equal(
                &mut report,
                "right-counit",
                at,
                &[s.mor(eps.at(a)), delta.at(a)],
                &[c.id(sa)],
            );
            c.expect_equal(
                &mut report,
                "coassociativity",
                at,
                &[delta.at(sa), delta.at(a)],
                &[s.mor(delta.at(a)), delta.at(a)],
            );
        }
        report
    }
}

/// `(C × C', S × S', (η, η'), (μ, μ'))` together with the product it lives on.
#[derive(Clone, Debug)]
pub struct ProductMonad {
    pub monad: Monad,
    pub product: Product,
    pub left: Monad,
    pub right: Monad,
}

pub fn product_monad(left: &Monad, right: &Monad) -> ProductMonad {
    let product = product_category(left.base(), right.base());
    product_monad_on(left, right, product).expect("factors match the product")
}

/// As [`product_monad`], reusing an already built product category.
pub fn product_monad_on(left: &Monad, right: &Monad, product: Product) -> Result<ProductMonad> {
    let endo = product_functor(left.endo(), right.endo(), &product, &product)?;
    let unit = product_nattrans(left.unit(), right.unit(), &product, &product)?;
    let mult = product_nattrans(left.mult(), right.mult(), &product, &product)?;
    let monad = Monad::new(endo, unit.components().to_vec(), mult.components().to_vec())?;
    Ok(ProductMonad {
        monad,
        product,
        left: left.clone(),
        right: right.clone(),
    })
}

impl ProductMonad {
    /// The projection onto the left factor, with identity interchange.
    pub fn proj_left_oplax(&self) -> OplaxMonadMorphism {
        let pi = self.product.proj_left.clone();
        let c = self.left.base().clone();
        OplaxMonadMorphism::from_components(
            self.monad.clone(),
            self.left.clone(),
            pi.clone(),
            self.product
                .category
                .objects()
                .map(|p| c.id(self.left.endo().ob(pi.ob(p))))
                .collect(),
        )
        .expect("projection boundaries match")
    }

    pub fn proj_right_oplax(&self) -> OplaxMonadMorphism {
        let pi = self.product.proj_right.clone();
        let c = self.right.base().clone();
        OplaxMonadMorphism::from_components(
            self.monad.clone(),
            self.right.clone(),
            pi.clone(),
            self.product
                .category
                .objects()
                .map(|p| c.id(self.right.endo().ob(pi.ob(p))))
                .collect(),
        )
        .expect("projection boundaries match")
    }

    pub fn proj_left_lax(&self) -> LaxMonadMorphism {
        let pi = self.product.proj_left.clone();
        let c = self.left.base().clone();
        LaxMonadMorphism::from_components(
            self.monad.clone(),
            self.left.clone(),
            pi.clone(),
            self.product
                .category
                .objects()
                .map(|p| c.id(self.left.endo().ob(pi.ob(p))))
                .collect(),
        )
        .expect("projection boundaries match")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Arc<FinCat> {
        Arc::new(FinCat::chain(3))
    }

    fn thin_endo(c: &Arc<FinCat>, map: &[usize]) -> Functor {
        Functor::from_fn(
            c.clone(),
            c.clone(),
            |a| ObjId(map[a.0]),
            |f| c.hom(ObjId(map[c.dom(f).0]), ObjId(map[c.cod(f).0]))[0],
        )
        .unwrap()
    }

    #[test]
    fn identity_monad_is_valid() {
        for c in [chain3(), Arc::new(FinCat::cyclic(2))] {
            let m = Monad::identity(c);
            assert!(m.check().is_ok(), "{}", m.check());
        }
    }

    #[test]
    fn closure_on_chain3_is_a_monad() {
        let c = chain3();
        let m = Monad::induced_on_thin(thin_endo(&c, &[1, 1, 2])).unwrap();
        assert!(m.check().is_ok());
    }

    #[test]
    fn non_idempotent_map_is_flagged_at_zero() {
        let c = chain3();
        let report = Monad::induced_on_thin(thin_endo(&c, &[1, 2, 2])).unwrap_err();
        assert_eq!(report.len(), 1, "{report}");
        assert_eq!(report.violations()[0].at, "0");
        assert_eq!(report.violations()[0].law, "multiplication-component");
    }

    #[test]
    fn z2_flip_monad() {
        // η = μ = s on the one-object category of Z/2
        let c = Arc::new(FinCat::cyclic(2));
        let s = c.morphism("s").unwrap();
        let e = c.morphism("e").unwrap();
        let m = Monad::new(Functor::identity(c.clone()), vec![s], vec![s]).unwrap();
        assert!(m.check().is_ok());
        let bad = Monad::new(Functor::identity(c.clone()), vec![s], vec![e]).unwrap();
        let r = bad.check();
        assert!(r.has_law("left-unit") && r.has_law("right-unit"), "{r}");
    }

    #[test]
    fn corrupted_mult_names_object_and_sides() {
        let c = chain3();
        let m = Monad::induced_on_thin(thin_endo(&c, &[1, 1, 2])).unwrap();
        let bad = m.with_mult(ObjId(2), c.morphism("1<=2").unwrap());
        let r = bad.check();
        assert!(!r.is_ok());
        assert!(r.violations().iter().any(|v| v.at == "2"));
    }

    #[test]
    fn opposite_is_a_comonad_iff_monad() {
        let c = chain3();
        let m = Monad::induced_on_thin(thin_endo(&c, &[1, 1, 2])).unwrap();
        assert!(m.opposite().unwrap().check().is_ok());
        let bad = m.with_unit(ObjId(0), c.morphism("0<=0").unwrap());
        assert!(!bad.check().is_ok());
        assert!(!bad.opposite().unwrap().check().is_ok());
    }

    #[test]
    fn product_monad_acts_componentwise() {
        let c = chain3();
        let d = Arc::new(FinCat::chain(2));
        let cl = Monad::induced_on_thin(thin_endo(&c, &[1, 1, 2])).unwrap();
        let pm = product_monad(&cl, &Monad::identity(d.clone()));
        assert!(pm.monad.check().is_ok());
        for a in c.objects() {
            for b in d.objects() {
                let p = pm.product.pair_ob(a, b);
                assert_eq!(
                    pm.product.split_ob(pm.monad.endo().ob(p)),
                    (cl.endo().ob(a), b)
                );
            }
        }
        assert!(pm.proj_left_oplax().check().is_ok());
        assert!(pm.proj_right_oplax().check().is_ok());
        assert!(pm.proj_left_lax().check().is_ok());
    }
}
