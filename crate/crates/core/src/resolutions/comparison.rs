use super::kleisli::{kleisli, KleisliResolution};
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, product_category, product_functor, Functor, ObjId, Product};
use crate::monad::{product_monad, Monad, ProductMonad};
use crate::report::Report;

/// The comparison `H : (C×C′)_{S×S′} → C_S × C′_{S′}` and its inverse.
#[derive(Clone, Debug)]
pub struct ProductComparison {
    pub product: ProductMonad,
    pub kleisli_product: KleisliResolution,
    pub left: KleisliResolution,
    pub right: KleisliResolution,
    pub target: Product,
    pub h: Functor,
    pub inverse: Functor,
}

/// Builds `H` from its defining equations `H∘F_{S×S′} = F_S × F_{S′}` and
/// `H(κ^{S×S′}) = (κ^S, κ^{S′})`: every Kleisli arrow with representative
/// `f` factors as `κ ∘ F(f)`, so `H(f) = (κ, κ′) ∘ (F × F′)(f)`. The inverse
/// sends a pair of Kleisli arrows to the arrow represented by the pair of
/// representatives. Both equations and invertibility are verified.
pub fn kleisli_product_comparison(m: &Monad, m2: &Monad) -> Result<ProductComparison> {
    let product = product_monad(m, m2);
    let kp = kleisli(&product.monad)?;
    let (k1, k2) = (kleisli(m)?, kleisli(m2)?);
    let target = product_category(&k1.kleisli_cat, &k2.kleisli_cat);
    let p = &product.product;
    let kc = kp.kleisli_cat.clone();
    let q = target.category.clone();
    let free_pair = product_functor(&k1.free, &k2.free, p, &target)?;

    let h = Functor::from_fn(
        kc.clone(),
        q.clone(),
        |x| free_pair.ob(kp.forget_base_ob(x)),
        |k| {
            let rep = kp.rep(k);
            let cod = p.split_ob(kp.forget_base_ob(kc.cod(k)));
            let kappa = target.pair_mor(k1.kappa.at(cod.0), k2.kappa.at(cod.1));
            q.compose(kappa, free_pair.mor(rep))
                .expect("κ ∘ F(f) is composable")
        },
    )?;
    let inverse = Functor::from_fn(
        q.clone(),
        kc.clone(),
        |y| {
            let (a, b) = target.split_ob(y);
            kp.free
                .ob(p.pair_ob(k1.forget_base_ob(a), k2.forget_base_ob(b)))
        },
        |k| {
            let (f, g) = target.split_mor(k);
            let (b1, b2) = (k1.kleisli_cat.cod(f), k2.kleisli_cat.cod(g));
            let rep = p.pair_mor(k1.rep(f), k2.rep(g));
            let cod = p.pair_ob(k1.forget_base_ob(b1), k2.forget_base_ob(b2));
            kp.from_rep(rep, cod)
                .expect("pair of representatives represents a Kleisli arrow")
        },
    )?;
    let out = ProductComparison {
        product,
        kleisli_product: kp,
        left: k1,
        right: k2,
        target,
        h,
        inverse,
    };
    let audit = out.check()?;
    if !audit.is_ok() {
        return Err(Error::Internal(audit));
    }
    Ok(out)
}

impl KleisliResolution {
    /// The object of the base category with the same id as a Kleisli object.
    pub fn forget_base_ob(&self, x: ObjId) -> ObjId {
        self.monad
            .base()
            .object(self.kleisli_cat.ob_name(x))
            .expect("Kleisli objects are base objects")
    }
}

impl ProductComparison {
    /// Functoriality of `H` and its inverse, both defining equations, and
    /// that the two composites are identity functors.
    pub fn check(&self) -> Result<Report> {
        let mut report = Report::new();
        report.absorb("H", self.h.check());
        report.absorb("inverse", self.inverse.check());
        let p = &self.product.product;
        let q = &self.target.category;
        let kp = &self.kleisli_product;
        let free_pair = product_functor(&self.left.free, &self.right.free, p, &self.target)?;
        let hf = compose_functors(&self.h, &kp.free)?;
        for f in p.category.morphisms() {
            if hf.mor(f) != free_pair.mor(f) {
                report.violation(
                    "H-free",
                    p.category.mor_name(f),
                    q.mor_name(hf.mor(f)),
                    q.mor_name(free_pair.mor(f)),
                );
            }
        }
        for x in p.category.objects() {
            let (a, b) = p.split_ob(x);
            let want = self
                .target
                .pair_mor(self.left.kappa.at(a), self.right.kappa.at(b));
            let got = self.h.mor(kp.kappa.at(x));
            if got != want {
                report.violation(
                    "H-kappa",
                    p.category.ob_name(x),
                    q.mor_name(got),
                    q.mor_name(want),
                );
            }
        }
        let there_back = compose_functors(&self.inverse, &self.h)?;
        if there_back != Functor::identity(kp.kleisli_cat.clone()) {
            report.violation("inverse", "H⁻¹∘H", "functor", "identity");
        }
        let back_there = compose_functors(&self.h, &self.inverse)?;
        if back_there != Functor::identity(q.clone()) {
            report.violation("inverse", "H∘H⁻¹", "functor", "identity");
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::FinCat;

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

    #[test]
    fn identity_monads() {
        let c = Arc::new(FinCat::chain(2));
        let z = Arc::new(FinCat::cyclic(2));
        let pc = kleisli_product_comparison(&Monad::identity(c), &Monad::identity(z)).unwrap();
        assert!(pc.check().unwrap().is_ok());
    }

    #[test]
    fn closure_times_identity_and_two_closures() {
        let c = Arc::new(FinCat::chain(3));
        let d = Arc::new(FinCat::chain(2));
        let cl = closure(&c, &[1, 1, 2]);
        kleisli_product_comparison(&cl, &Monad::identity(d.clone())).unwrap();
        let cl2 = closure(&d, &[1, 1]);
        let pc = kleisli_product_comparison(&cl, &cl2).unwrap();
        assert_eq!(
            pc.kleisli_product.kleisli_cat.morphism_count(),
            pc.target.category.morphism_count()
        );
    }

    #[test]
    fn non_thin_factor() {
        let z = Arc::new(FinCat::cyclic(2));
        let s = z.morphism("s").unwrap();
        let flip = Monad::new(Functor::identity(z.clone()), vec![s], vec![s]).unwrap();
        let c = Arc::new(FinCat::chain(3));
        kleisli_product_comparison(&flip, &closure(&c, &[2, 2, 2])).unwrap();
    }
}
