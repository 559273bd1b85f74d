//! Monoidal and braided structure lifted to the Kleisli category of a lax
//! monoidal monad and to the Eilenberg-Moore category of an oplax one.
//!
//! Kleisli: `A ⊗ B` as in the base, `f ⊗ g := φ_{B,B′} ∘ (f ⊗ g)` on
//! representatives `f : A → S B`, `g : A′ → S B′`, unit `I`, coherence cells
//! the `F_S`-images of the base cells. This is the unique choice making
//! `F_S` strict monoidal.
//!
//! Eilenberg-Moore: `(A, a) ⊗ (B, b) := (A⊗B, (a⊗b) ∘ φ_{A,B})`, unit
//! `(I, φ̄)`, coherence cells the base cells. This is the unique choice
//! making the forgetful functor strict monoidal.

use crate::error::{Error, Result};
use crate::fincat::{MorId, ObjId};
use crate::monad::Laxity;
use crate::monmonad::{check_interchange_equivalence, MonoidalMonadTuple};
use crate::monoidal::{check_braided_functor, Braiding, MonoidalFunctor, MonoidalStructure};
use crate::report::Report;
use crate::resolutions::{em, kleisli, Algebra, EMResolution, KleisliResolution};

/// A lax monoidal monad with the lifted structure on its Kleisli category.
#[derive(Clone, Debug)]
pub struct LiftedKleisli {
    pub input: MonoidalMonadTuple,
    pub resolution: KleisliResolution,
    pub lifted: MonoidalStructure,
    /// `F_S`, strict: identity tensorator and unitor.
    pub free_as_monoidal: MonoidalFunctor,
    /// `U_S`, lax with the cells `φ` and `φ̄` of the monad.
    pub forget_as_monoidal: MonoidalFunctor,
}

/// An oplax monoidal monad with the lifted structure on its algebras.
#[derive(Clone, Debug)]
pub struct LiftedEM {
    pub input: MonoidalMonadTuple,
    pub resolution: EMResolution,
    pub lifted: MonoidalStructure,
    /// `U`, strict: identity tensorator and unitor.
    pub forget_as_monoidal: MonoidalFunctor,
    /// The free-algebra functor, oplax with the cells `φ` and `φ̄`.
    pub free_as_monoidal: MonoidalFunctor,
}

fn require(t: &MonoidalMonadTuple, laxity: Laxity) -> Result<()> {
    if t.laxity() != laxity {
        return Err(Error::boundary(format!(
            "expected a {laxity} tuple, got a {} one",
            t.laxity()
        )));
    }
    let out = check_interchange_equivalence(t);
    if !out.both_valid() {
        let mut r = Report::new();
        r.absorb("in-monads", out.in_monads);
        r.absorb("on-monoidal", out.on_monoidal);
        return Err(Error::Precondition(r));
    }
    Ok(())
}

fn audit(report: Report) -> Result<()> {
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::Internal(report))
    }
}

fn pairs<T>(n: usize, mut f: impl FnMut(ObjId, ObjId) -> T) -> Vec<T> {
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| f(ObjId(a), ObjId(b)))
        .collect()
}

/// Builds and audits the lifted structure on `C_S` for a valid lax tuple.
pub fn lift_kleisli(t: &MonoidalMonadTuple) -> Result<LiftedKleisli> {
    require(t, Laxity::Lax)?;
    let res = kleisli(t.monad())?;
    let ms = t.monoidal();
    let c = t.base();
    let kc = res.kleisli_cat.clone();
    let free = &res.free;
    let base = |x: ObjId| res.forget_base_ob(x);

    // a missing lifted arrow would be a defect of the construction
    let mut missing = Report::new();
    let mut table = vec![MorId(0); kc.morphism_count().pow(2)];
    for k in kc.morphisms() {
        for l in kc.morphisms() {
            let (b, b2) = (base(kc.cod(k)), base(kc.cod(l)));
            let cod = ms.tensor_ob(b, b2);
            let rep = c.compose(t.phi(b, b2), ms.tensor_mor(res.rep(k), res.rep(l)));
            match rep.and_then(|r| res.from_rep(r, cod)) {
                Some(m) => table[k.0 * kc.morphism_count() + l.0] = m,
                None => missing.violation(
                    "lifted-tensor",
                    format!("({}, {})", kc.mor_name(k), kc.mor_name(l)),
                    "undefined",
                    "φ ∘ (f ⊗ g)",
                ),
            }
        }
    }
    audit(missing)?;

    let n_k = kc.morphism_count();
    let lifted = MonoidalStructure::from_fns(
        kc.clone(),
        |x, y| free.ob(ms.tensor_ob(base(x), base(y))),
        |k, l| table[k.0 * n_k + l.0],
        free.ob(ms.unit()),
        |x, y, z| free.mor(ms.assoc(base(x), base(y), base(z))),
        |x| free.mor(ms.left_unitor(base(x))),
        |x| free.mor(ms.right_unitor(base(x))),
    )?;
    let n = c.object_count();
    let free_as_monoidal = MonoidalFunctor::assemble(
        ms.clone(),
        lifted.clone(),
        free.clone(),
        Laxity::Lax,
        pairs(n, |a, b| kc.id(free.ob(ms.tensor_ob(a, b)))),
        kc.id(lifted.unit()),
    )?;
    let forget_as_monoidal = MonoidalFunctor::assemble(
        lifted.clone(),
        ms.clone(),
        res.forget.clone(),
        Laxity::Lax,
        pairs(kc.object_count(), |x, y| t.phi(base(x), base(y))),
        t.phi_bar(),
    )?;

    let out = LiftedKleisli {
        input: t.clone(),
        resolution: res,
        lifted,
        free_as_monoidal,
        forget_as_monoidal,
    };
    audit(out.check())?;
    Ok(out)
}

impl LiftedKleisli {
    /// Coherence of the lifted structure, standardness, strictness of `F_S`,
    /// and that `U_S` with `(φ, φ̄)` is lax monoidal.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        report.absorb("lifted", self.lifted.check());
        if **self.lifted.base() != *self.resolution.kleisli_cat {
            report.violation(
                "standard",
                "underlying category",
                "differs",
                "the Kleisli category",
            );
        }
        report.absorb("free", self.free_as_monoidal.check());
        let kc = self.lifted.base();
        let f = &self.free_as_monoidal;
        for (i, &m) in f
            .tensorator_components()
            .iter()
            .chain(std::iter::once(&f.unitor()))
            .enumerate()
        {
            if kc.dom(m) != kc.cod(m) || kc.id(kc.dom(m)) != m {
                report.violation("free-strict", i.to_string(), kc.mor_name(m), "an identity");
            }
        }
        report.absorb("forget", self.forget_as_monoidal.check());
        report
    }
}

/// Builds and audits the lifted structure on the algebras of a valid oplax
/// tuple.
pub fn lift_em(t: &MonoidalMonadTuple) -> Result<LiftedEM> {
    require(t, Laxity::Oplax)?;
    let res = em(t.monad())?;
    let ms = t.monoidal();
    let c = t.base();
    let ec = res.em_cat.clone();
    let mut missing = Report::new();

    let mut ob_table = vec![ObjId(0); ec.object_count().pow(2)];
    for x in ec.objects() {
        for y in ec.objects() {
            let alg = tensor_algebra(t, res.algebra(x), res.algebra(y), true);
            match alg.and_then(|a| res.find_algebra(a)) {
                Some(z) => ob_table[x.0 * ec.object_count() + y.0] = z,
                None => missing.violation(
                    "algebra-tensor",
                    format!("({}, {})", ec.ob_name(x), ec.ob_name(y)),
                    "not an algebra",
                    "(A⊗B, (a⊗b) ∘ φ)",
                ),
            }
        }
    }
    let unit_alg = Algebra {
        carrier: ms.unit(),
        action: t.phi_bar(),
    };
    let unit = res.find_algebra(unit_alg);
    if unit.is_none() {
        missing.violation(
            "unit-algebra",
            c.ob_name(ms.unit()),
            c.mor_name(t.phi_bar()),
            "an algebra action",
        );
    }
    audit(missing)?;
    let unit = unit.expect("checked above");
    let n_e = ec.object_count();
    let t_ob = |x: ObjId, y: ObjId| ob_table[x.0 * n_e + y.0];

    let mut missing = Report::new();
    let mut hom = |h: MorId, x: ObjId, y: ObjId, law: &str| {
        res.find_homomorphism(h, x, y).unwrap_or_else(|| {
            missing.violation(
                law,
                format!("{} → {}", ec.ob_name(x), ec.ob_name(y)),
                c.mor_name(h),
                "a homomorphism",
            );
            ec.id(x)
        })
    };
    let under = |k: MorId| res.underlying(k);
    let carrier = |x: ObjId| res.algebra(x).carrier;
    let mor_table = pairs_mor(&ec, |k, l| {
        hom(
            ms.tensor_mor(under(k), under(l)),
            t_ob(ec.dom(k), ec.dom(l)),
            t_ob(ec.cod(k), ec.cod(l)),
            "homomorphism-tensor",
        )
    });
    let mut assoc = Vec::with_capacity(n_e.pow(3));
    for x in ec.objects() {
        for y in ec.objects() {
            for z in ec.objects() {
                let a = ms.assoc(carrier(x), carrier(y), carrier(z));
                assoc.push(hom(
                    a,
                    t_ob(x, t_ob(y, z)),
                    t_ob(t_ob(x, y), z),
                    "associator-homomorphism",
                ));
            }
        }
    }
    let lam: Vec<_> = ec
        .objects()
        .map(|x| {
            hom(
                ms.left_unitor(carrier(x)),
                t_ob(unit, x),
                x,
                "left-unitor-homomorphism",
            )
        })
        .collect();
    let rho: Vec<_> = ec
        .objects()
        .map(|x| {
            hom(
                ms.right_unitor(carrier(x)),
                t_ob(x, unit),
                x,
                "right-unitor-homomorphism",
            )
        })
        .collect();
    let free = &res.free;
    let n = c.object_count();
    let phi_homs = pairs(n, |a, b| {
        hom(
            t.phi(a, b),
            free.ob(ms.tensor_ob(a, b)),
            t_ob(free.ob(a), free.ob(b)),
            "free-tensorator-homomorphism",
        )
    });
    let phi_bar_hom = hom(
        t.phi_bar(),
        free.ob(ms.unit()),
        unit,
        "free-unitor-homomorphism",
    );
    audit(missing)?;

    let n_m = ec.morphism_count();
    let lifted = MonoidalStructure::from_fns(
        ec.clone(),
        t_ob,
        |k, l| mor_table[k.0 * n_m + l.0],
        unit,
        |x, y, z| assoc[(x.0 * n_e + y.0) * n_e + z.0],
        |x| lam[x.0],
        |x| rho[x.0],
    )?;
    let forget_as_monoidal = MonoidalFunctor::assemble(
        lifted.clone(),
        ms.clone(),
        res.forget.clone(),
        Laxity::Lax,
        pairs(n_e, |x, y| c.id(carrier(t_ob(x, y)))),
        c.id(ms.unit()),
    )?;
    let free_as_monoidal = MonoidalFunctor::assemble(
        ms.clone(),
        lifted.clone(),
        free.clone(),
        Laxity::Oplax,
        phi_homs,
        phi_bar_hom,
    )?;

    let out = LiftedEM {
        input: t.clone(),
        resolution: res,
        lifted,
        forget_as_monoidal,
        free_as_monoidal,
    };
    audit(out.check())?;
    Ok(out)
}

fn pairs_mor(c: &crate::fincat::FinCat, mut f: impl FnMut(MorId, MorId) -> MorId) -> Vec<MorId> {
    let mut out = Vec::with_capacity(c.morphism_count().pow(2));
    for k in c.morphisms() {
        for l in c.morphisms() {
            out.push(f(k, l));
        }
    }
    out
}

/// `(A⊗B, (a⊗b) ∘ φ_{A,B})`, or `(A⊗B, a⊗b)` when `corrected` is false.
/// `None` when the composite is undefined.
fn tensor_algebra(
    t: &MonoidalMonadTuple,
    x: Algebra,
    y: Algebra,
    corrected: bool,
) -> Option<Algebra> {
    let ms = t.monoidal();
    let ab = ms.tensor_mor(x.action, y.action);
    let action = if corrected {
        t.base().compose(ab, t.phi(x.carrier, y.carrier))?
    } else {
        ab
    };
    Some(Algebra {
        carrier: ms.tensor_ob(x.carrier, y.carrier),
        action,
    })
}

impl LiftedEM {
    /// Coherence of the lifted structure, standardness, that every tensor of
    /// algebras is an algebra, strictness of the forgetful functor and that
    /// the free functor with `(φ, φ̄)` is oplax monoidal.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        report.absorb("lifted", self.lifted.check());
        if **self.lifted.base() != *self.resolution.em_cat {
            report.violation(
                "standard",
                "underlying category",
                "differs",
                "the algebra category",
            );
        }
        let ec = self.lifted.base();
        let m = &self.resolution.monad;
        for x in ec.objects() {
            for y in ec.objects() {
                let alg = self.resolution.algebra(self.lifted.tensor_ob(x, y));
                let want = tensor_algebra(
                    &self.input,
                    self.resolution.algebra(x),
                    self.resolution.algebra(y),
                    true,
                );
                if Some(alg) != want || !crate::resolutions::is_algebra(m, alg) {
                    let at = format!("({}, {})", ec.ob_name(x), ec.ob_name(y));
                    report.violation(
                        "algebra-tensor",
                        at,
                        ec.ob_name(self.lifted.tensor_ob(x, y)),
                        "(A⊗B, (a⊗b) ∘ φ)",
                    );
                }
            }
        }
        report.absorb("forget", self.forget_as_monoidal.check());
        let c = m.base();
        let f = &self.forget_as_monoidal;
        for (i, &h) in f
            .tensorator_components()
            .iter()
            .chain(std::iter::once(&f.unitor()))
            .enumerate()
        {
            if c.dom(h) != c.cod(h) || c.id(c.dom(h)) != h {
                report.violation("forget-strict", i.to_string(), c.mor_name(h), "an identity");
            }
        }
        report.absorb("free", self.free_as_monoidal.check());
        report
    }
}

/// Checks the candidate tensor of algebras `(A⊗B, a⊗b)` that omits the
/// interchange cell. Each pair of algebras whose candidate action is not an
/// algebra action is a violation.
pub fn check_uncorrected_em_tensor(t: &MonoidalMonadTuple) -> Result<Report> {
    let res = em(t.monad())?;
    let c = t.base();
    let s = t.monad().endo();
    let mut report = Report::new();
    for &x in res.algebras() {
        for &y in res.algebras() {
            let alg =
                tensor_algebra(t, x, y, false).expect("uncorrected tensor needs no composite");
            let at = || {
                format!(
                    "({}, {})",
                    crate::resolutions::algebra_name(c, x),
                    crate::resolutions::algebra_name(c, y)
                )
            };
            let typed = c.dom(alg.action) == s.ob(alg.carrier) && c.cod(alg.action) == alg.carrier;
            if !typed || !crate::resolutions::is_algebra(t.monad(), alg) {
                report.violation(
                    "algebra-tensor",
                    at(),
                    c.mor_name(alg.action),
                    "an algebra action",
                );
            }
        }
    }
    Ok(report)
}

fn require_braiding(t: &MonoidalMonadTuple, braiding: &Braiding) -> Result<()> {
    if braiding.monoidal() != t.monoidal() {
        return Err(Error::boundary(
            "braiding lives on a different monoidal structure",
        ));
    }
    let mut pre = Report::new();
    pre.absorb("braiding", braiding.check());
    let s = t.monoidal_functor();
    pre.absorb("monad", check_braided_functor(&s, braiding, braiding)?);
    if !pre.is_ok() {
        return Err(Error::Precondition(pre));
    }
    Ok(())
}

/// [`lift_kleisli`] together with the braiding whose components are the
/// `F_S`-images of the base braiding.
pub fn lift_kleisli_braided(
    t: &MonoidalMonadTuple,
    braiding: &Braiding,
) -> Result<(LiftedKleisli, Braiding)> {
    require_braiding(t, braiding)?;
    let lk = lift_kleisli(t)?;
    let res = &lk.resolution;
    let comps = pairs(lk.lifted.base().object_count(), |x, y| {
        res.free
            .mor(braiding.at(res.forget_base_ob(x), res.forget_base_ob(y)))
    });
    let lifted = Braiding::new(lk.lifted.clone(), comps, braiding.is_symmetric())?;
    audit(lifted.check())?;
    Ok((lk, lifted))
}

/// [`lift_em`] together with the braiding whose components are the base
/// braiding on algebra carriers.
pub fn lift_em_braided(
    t: &MonoidalMonadTuple,
    braiding: &Braiding,
) -> Result<(LiftedEM, Braiding)> {
    require_braiding(t, braiding)?;
    let le = lift_em(t)?;
    let res = &le.resolution;
    let ms = &le.lifted;
    let ec = ms.base();
    let mut missing = Report::new();
    let comps = pairs(ec.object_count(), |x, y| {
        let b = braiding.at(res.algebra(x).carrier, res.algebra(y).carrier);
        let (from, to) = (ms.tensor_ob(x, y), ms.tensor_ob(y, x));
        res.find_homomorphism(b, from, to)
            .unwrap_or_else(|| ec.id(from))
    });
    for x in ec.objects() {
        for y in ec.objects() {
            let b = braiding.at(res.algebra(x).carrier, res.algebra(y).carrier);
            if res
                .find_homomorphism(b, ms.tensor_ob(x, y), ms.tensor_ob(y, x))
                .is_none()
            {
                let at = format!("({}, {})", ec.ob_name(x), ec.ob_name(y));
                missing.violation(
                    "braiding-homomorphism",
                    at,
                    res.monad.base().mor_name(b),
                    "a homomorphism",
                );
            }
        }
    }
    audit(missing)?;
    let lifted = Braiding::new(ms.clone(), comps, braiding.is_symmetric())?;
    audit(lifted.check())?;
    Ok((le, lifted))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::{FinCat, Functor};
    use crate::monad::Monad;

    fn chain_max(n: usize) -> MonoidalStructure {
        MonoidalStructure::from_thin_op(Arc::new(FinCat::chain(n)), |a, b| a.max(b), ObjId(0))
            .unwrap()
    }

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

    fn z2_flip() -> MonoidalMonadTuple {
        let z = Arc::new(FinCat::cyclic(2));
        let s = z.morphism("s").unwrap();
        let ms = MonoidalStructure::from_monoid(z.clone()).unwrap();
        let flip = Monad::new(Functor::identity(z), vec![s], vec![s]).unwrap();
        MonoidalMonadTuple::new(ms, flip, Laxity::Oplax, vec![s], s).unwrap()
    }

    #[test]
    fn identity_monad_lifts_to_the_input() {
        let ms = chain_max(3);
        let lk =
            lift_kleisli(&MonoidalMonadTuple::identity_monad(ms.clone(), Laxity::Lax)).unwrap();
        let kc = lk.lifted.base();
        for x in kc.objects() {
            for y in kc.objects() {
                assert_eq!(
                    kc.ob_name(lk.lifted.tensor_ob(x, y)),
                    ms.base().ob_name(ms.tensor_ob(x, y))
                );
            }
        }
        let le = lift_em(&MonoidalMonadTuple::identity_monad(ms, Laxity::Oplax)).unwrap();
        assert_eq!(le.lifted.base().object_count(), 3);
    }

    #[test]
    fn closure_kleisli_tensor_matches_brute_force() {
        let ms = chain_max(3);
        let c = ms.base().clone();
        let t = MonoidalMonadTuple::thin(ms, closure(&c, &[1, 1, 2]), Laxity::Lax).unwrap();
        let lk = lift_kleisli(&t).unwrap();
        let kc = lk.lifted.base();
        // Kleisli arrows A → B of a closure on a chain are pairs A ≤ cl(B);
        // the lifted tensor of two of them is max(A, A′) → max(B, B′)
        let cl = [1, 1, 2];
        for k in kc.morphisms() {
            for l in kc.morphisms() {
                let ob = |x: ObjId| kc.ob_name(x).parse::<usize>().unwrap();
                let m = lk.lifted.tensor_mor(k, l);
                assert_eq!(ob(kc.dom(m)), ob(kc.dom(k)).max(ob(kc.dom(l))));
                assert_eq!(ob(kc.cod(m)), ob(kc.cod(k)).max(ob(kc.cod(l))));
                assert!(ob(kc.dom(m)) <= cl[ob(kc.cod(m))]);
            }
        }
    }

    #[test]
    fn strict_closure_lifts_to_fixed_points_with_max() {
        // cl = [0, 2, 2] fixes the unit 0, so φ̄ exists in the oplax direction
        let c = Arc::new(FinCat::chain(3));
        let ms = MonoidalStructure::from_thin_op(c.clone(), |a, b| a.max(b), ObjId(0)).unwrap();
        let t = MonoidalMonadTuple::thin(ms, closure(&c, &[0, 2, 2]), Laxity::Oplax).unwrap();
        let le = lift_em(&t).unwrap();
        let carriers: Vec<usize> = le
            .resolution
            .algebras()
            .iter()
            .map(|a| a.carrier.0)
            .collect();
        assert_eq!(carriers, [0, 2]);
        let ec = le.lifted.base();
        for x in ec.objects() {
            for y in ec.objects() {
                let (a, b) = (
                    le.resolution.algebra(x).carrier.0,
                    le.resolution.algebra(y).carrier.0,
                );
                assert_eq!(
                    le.resolution.algebra(le.lifted.tensor_ob(x, y)).carrier.0,
                    a.max(b)
                );
            }
        }
    }

    #[test]
    fn z2_flip_needs_the_correction() {
        let t = z2_flip();
        lift_em(&t).unwrap();
        let r = check_uncorrected_em_tensor(&t).unwrap();
        assert_eq!(r.len(), 1, "{r}");
    }

    #[test]
    fn lax_input_is_rejected_by_lift_em() {
        let t = MonoidalMonadTuple::identity_monad(chain_max(2), Laxity::Lax);
        assert!(matches!(lift_em(&t), Err(Error::Boundary(_))));
    }

    #[test]
    fn invalid_tuple_is_a_precondition_failure() {
        let ms = chain_max(3);
        let c = ms.base().clone();
        let t = MonoidalMonadTuple::thin(ms, closure(&c, &[1, 1, 2]), Laxity::Oplax).unwrap();
        assert!(matches!(lift_em(&t), Err(Error::Precondition(_))));
    }

    #[test]
    fn braided_lifts() {
        let ms = chain_max(3);
        let c = ms.base().clone();
        let b = Braiding::thin(ms.clone(), true).unwrap();
        let t = MonoidalMonadTuple::thin(ms.clone(), closure(&c, &[1, 1, 2]), Laxity::Lax).unwrap();
        let (_, lb) = lift_kleisli_braided(&t, &b).unwrap();
        assert!(lb.is_symmetric() && lb.check().is_ok());

        let id = MonoidalMonadTuple::identity_monad(ms, Laxity::Oplax);
        let (le, lb) = lift_em_braided(&id, &b).unwrap();
        let names = |br: &Braiding, cat: &FinCat| {
            br.components()
                .iter()
                .map(|&m| cat.mor_name(m).split('|').next().unwrap().to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(&lb, le.lifted.base()), names(&b, &c));
    }

    #[test]
    fn z2_identity_monad_braided() {
        let z = Arc::new(FinCat::cyclic(2));
        let ms = MonoidalStructure::from_monoid(z.clone()).unwrap();
        let e = z.morphism("e").unwrap();
        let b = Braiding::from_fn(ms.clone(), |_, _| e, true).unwrap();
        let (lk, lb) =
            lift_kleisli_braided(&MonoidalMonadTuple::identity_monad(ms, Laxity::Lax), &b).unwrap();
        assert_eq!(lk.lifted.base().morphism_count(), 2);
        assert!(lb
            .components()
            .iter()
            .all(|&m| m == lk.lifted.base().id(ObjId(0))));
    }

    #[test]
    fn lift_commutes_with_the_product_comparison() {
        use crate::resolutions::kleisli_product_comparison;
        let (m1, m2) = (chain_max(3), chain_max(2));
        let t1 = MonoidalMonadTuple::thin(m1.clone(), closure(m1.base(), &[1, 1, 2]), Laxity::Lax)
            .unwrap();
        let t2 =
            MonoidalMonadTuple::thin(m2.clone(), closure(m2.base(), &[1, 1]), Laxity::Lax).unwrap();
        let pc = kleisli_product_comparison(t1.monad(), t2.monad()).unwrap();
        let tp = MonoidalMonadTuple::product_on(&t1, &t2, &pc.product.product).unwrap();
        let lp = lift_kleisli(&tp).unwrap();
        assert!(**lp.lifted.base() == *pc.kleisli_product.kleisli_cat);
        let (l1, l2) = (lift_kleisli(&t1).unwrap(), lift_kleisli(&t2).unwrap());
        let target = MonoidalStructure::product_on(&l1.lifted, &l2.lifted, &pc.target).unwrap();
        let kc = lp.lifted.base();
        for k in kc.morphisms() {
            for l in kc.morphisms() {
                assert_eq!(
                    pc.h.mor(lp.lifted.tensor_mor(k, l)),
                    target.tensor_mor(pc.h.mor(k), pc.h.mor(l))
                );
            }
        }
        for x in kc.objects() {
            assert_eq!(
                pc.h.mor(lp.lifted.left_unitor(x)),
                target.left_unitor(pc.h.ob(x))
            );
            for y in kc.objects() {
                for z in kc.objects() {
                    let (hx, hy, hz) = (pc.h.ob(x), pc.h.ob(y), pc.h.ob(z));
                    assert_eq!(pc.h.mor(lp.lifted.assoc(x, y, z)), target.assoc(hx, hy, hz));
                }
            }
        }
        assert_eq!(pc.h.ob(lp.lifted.unit()), target.unit());
    }
}
