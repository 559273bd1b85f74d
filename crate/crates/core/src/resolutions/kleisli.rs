use std::collections::HashMap;
use std::sync::Arc;

use super::verify_adjunction;
use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, whisker_left, whisker_right, FinCat, Functor, MorId, NatTrans, ObjId,
};
use crate::monad::{Monad, MonadTransformation, OplaxMonadMorphism};
use crate::report::Report;

/// The Kleisli category `C_S` with `F_S ⊣ U_S`, the cell `κ : F_S∘S ⇒ F_S`
/// and the counit `ε`.
///
/// A morphism `A → B` of `C_S` is a morphism `f : A → S B` of `C`, named
/// `k:f@B`. The codomain is part of the name because `S B = S B′` may hold
/// for `B ≠ B′`, in which case `f` represents two distinct Kleisli arrows.
#[derive(Clone, Debug)]
pub struct KleisliResolution {
    pub monad: Monad,
    pub kleisli_cat: Arc<FinCat>,
    pub free: Functor,
    pub forget: Functor,
    pub kappa: NatTrans,
    pub unit: NatTrans,
    pub counit: NatTrans,
    reps: Vec<MorId>,
    by_rep: HashMap<(MorId, ObjId), MorId>,
}

pub(crate) fn kleisli_name(c: &FinCat, f: MorId, b: ObjId) -> String {
    format!("k:{}@{}", c.mor_name(f), c.ob_name(b))
}

/// Builds the Kleisli resolution of a valid monad. Invalid monads are
/// rejected with their violation report; a resolution failing its own audit
/// is reported as an internal error.
pub fn kleisli(m: &Monad) -> Result<KleisliResolution> {
    let pre = m.check();
    if !pre.is_ok() {
        return Err(Error::Precondition(pre));
    }
    let c = m.base().clone();
    let s = m.endo();
    let (eta, mu) = (m.unit(), m.mult());

    let mut b = FinCat::builder();
    for a in c.objects() {
        b.object(c.ob_name(a));
        b.identity(c.ob_name(a), kleisli_name(&c, eta.at(a), a));
    }
    // every Kleisli arrow A → B, as (A, B, representative)
    let mut arrows = Vec::new();
    for a in c.objects() {
        for bb in c.objects() {
            for &f in c.hom(a, s.ob(bb)) {
                b.morphism(kleisli_name(&c, f, bb), c.ob_name(a), c.ob_name(bb));
                arrows.push((a, bb, f));
            }
        }
    }
    for &(_, bb, f) in &arrows {
        for &(b2, cc, g) in &arrows {
            if b2 != bb {
                continue;
            }
            let rep = c.compose_path(&[mu.at(cc), s.mor(g), f]).ok_or_else(|| {
                Error::Undefined(format!(
                    "Kleisli composite of {} and {}",
                    kleisli_name(&c, g, cc),
                    kleisli_name(&c, f, bb)
                ))
            })?;
            b.compose(
                kleisli_name(&c, g, cc),
                kleisli_name(&c, f, bb),
                kleisli_name(&c, rep, cc),
            );
        }
    }
    let kc = Arc::new(b.build()?);

    let mut reps = vec![MorId(0); kc.morphism_count()];
    let mut by_rep = HashMap::new();
    for &(_, bb, f) in &arrows {
        let k = kc.morphism(&kleisli_name(&c, f, bb)).expect("built above");
        reps[k.0] = f;
        by_rep.insert((f, bb), k);
    }
    let ob_k = |a: ObjId| kc.object(c.ob_name(a)).expect("same objects");
    let ob_c = |x: ObjId| c.object(kc.ob_name(x)).expect("same objects");
    let lookup = |f: MorId, bb: ObjId| by_rep[&(f, bb)];

    let free = Functor::from_fn(c.clone(), kc.clone(), ob_k, |h| {
        let bb = c.cod(h);
        let rep = c.compose(eta.at(bb), h).expect("η_B ∘ h is composable");
        lookup(rep, bb)
    })?;
    let forget = Functor::from_fn(
        kc.clone(),
        c.clone(),
        |x| s.ob(ob_c(x)),
        |k| {
            let bb = ob_c(kc.cod(k));
            c.compose(mu.at(bb), s.mor(reps[k.0]))
                .expect("μ_B ∘ S(f) is composable")
        },
    )?;
    let fs = compose_functors(&free, s)?;
    let kappa = NatTrans::from_fn(fs, free.clone(), |a| lookup(c.id(s.ob(a)), a))?;
    let uf = compose_functors(&forget, &free)?;
    let unit = NatTrans::new(Functor::identity(c.clone()), uf, eta.components().to_vec())?;
    let fu = compose_functors(&free, &forget)?;
    let counit = NatTrans::from_fn(fu, Functor::identity(kc.clone()), |x| {
        let a = ob_c(x);
        lookup(c.id(s.ob(a)), a)
    })?;

    let res = KleisliResolution {
        monad: m.clone(),
        kleisli_cat: kc,
        free,
        forget,
        kappa,
        unit,
        counit,
        reps,
        by_rep,
    };
    let audit = res.check()?;
    if !audit.is_ok() {
        return Err(Error::Internal(audit));
    }
    Ok(res)
}

impl KleisliResolution {
    /// The underlying `f : A → S B` of a Kleisli arrow.
    pub fn rep(&self, k: MorId) -> MorId {
        self.reps[k.0]
    }

    /// The Kleisli arrow `A → B` represented by `f : A → S B`.
    pub fn from_rep(&self, f: MorId, b: ObjId) -> Option<MorId> {
        self.by_rep.get(&(f, b)).copied()
    }

    /// `κ : (F_S∘S, F_S(μ)) → (F_S, κ)` as a transformation of oplax monad
    /// morphisms into the identity monad on `C_S`.
    pub fn kappa_transformation(&self) -> Result<MonadTransformation<OplaxMonadMorphism>> {
        let m = &self.monad;
        let id = Monad::identity(self.kleisli_cat.clone());
        let fs = compose_functors(&self.free, m.endo())?;
        let f_mu = whisker_left(&self.free, m.mult())?;
        let source = OplaxMonadMorphism::from_components(
            m.clone(),
            id.clone(),
            fs,
            f_mu.components().to_vec(),
        )?;
        let target = OplaxMonadMorphism::from_components(
            m.clone(),
            id,
            self.free.clone(),
            self.kappa.components().to_vec(),
        )?;
        MonadTransformation::new(source, target, self.kappa.components().to_vec())
    }

    /// Every invariant of the resolution: category and functor laws, hom-set
    /// sizes, `U_S∘F_S = S`, `U_S(κ) = μ`, `ε_{F_S} = κ`, `κ_X = 1_{SX}`,
    /// the subcoequalizing equations and both triangle identities.
    pub fn check(&self) -> Result<Report> {
        let m = &self.monad;
        let c = m.base();
        let kc = &*self.kleisli_cat;
        let s = m.endo();
        let mut report = Report::new();
        report.absorb("kleisli", kc.check());
        report.absorb("free", self.free.check());
        report.absorb("forget", self.forget.check());
        report.absorb("kappa", self.kappa.check());
        report.absorb("counit", self.counit.check());

        if kc.object_count() != c.object_count() {
            report.violation(
                "objects",
                "C_S",
                kc.object_count().to_string(),
                c.object_count().to_string(),
            );
        }
        for a in c.objects() {
            for b in c.objects() {
                let (x, y) = (self.free.ob(a), self.free.ob(b));
                let (got, want) = (kc.hom(x, y).len(), c.hom(a, s.ob(b)).len());
                if got != want {
                    let at = format!("({}, {})", c.ob_name(a), c.ob_name(b));
                    report.violation("hom-bijection", at, got.to_string(), want.to_string());
                }
            }
        }
        let uf = compose_functors(&self.forget, &self.free)?;
        if uf != *s {
            report.violation("forget-free", "U_S∘F_S", "functor", "S");
        }
        let u_kappa = whisker_left(&self.forget, &self.kappa)?;
        for a in c.objects() {
            if u_kappa.at(a) != m.mult().at(a) {
                report.violation(
                    "forget-kappa",
                    c.ob_name(a),
                    c.mor_name(u_kappa.at(a)),
                    c.mor_name(m.mult().at(a)),
                );
            }
        }
        let eps_f = whisker_right(&self.counit, &self.free)?;
        for a in c.objects() {
            if eps_f.at(a) != self.kappa.at(a) {
                report.violation(
                    "counit-free",
                    c.ob_name(a),
                    kc.mor_name(eps_f.at(a)),
                    kc.mor_name(self.kappa.at(a)),
                );
            }
            let rep = self.rep(self.kappa.at(a));
            if rep != c.id(s.ob(a)) {
                report.violation(
                    "kappa-identity",
                    c.ob_name(a),
                    c.mor_name(rep),
                    c.mor_name(c.id(s.ob(a))),
                );
            }
        }
        let f = &self.free;
        let k = &self.kappa;
        for a in c.objects() {
            let at = || c.ob_name(a).to_string();
            kc.expect_equal(
                &mut report,
                "subcoequalizer-unit",
                at,
                &[k.at(a), f.mor(m.unit().at(a))],
                &[kc.id(f.ob(a))],
            );
            kc.expect_equal(
                &mut report,
                "subcoequalizer-multiplication",
                at,
                &[k.at(a), f.mor(m.mult().at(a))],
                &[k.at(a), k.at(s.ob(a))],
            );
        }
        report.absorb(
            "adjunction",
            verify_adjunction(&self.free, &self.forget, &self.unit, &self.counit)?,
        );
        Ok(report)
    }
}
