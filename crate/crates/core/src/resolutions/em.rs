use std::collections::HashMap;
use std::sync::Arc;

use super::verify_adjunction;
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, FinCat, Functor, MorId, NatTrans, ObjId};
use crate::monad::Monad;
use crate::report::Report;

/// An algebra `(A, a : S A → A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Algebra {
    pub carrier: ObjId,
    pub action: MorId,
}

/// The Eilenberg-Moore category of all algebras of a monad, with the free
/// and forgetful functors and the adjunction data.
///
/// The algebra `(A, a)` is named `A|a`; a homomorphism `h` between `(A, a)`
/// and `(B, b)` is named `h|a|b`.
#[derive(Clone, Debug)]
pub struct EMResolution {
    pub monad: Monad,
    pub em_cat: Arc<FinCat>,
    pub free: Functor,
    pub forget: Functor,
    pub unit: NatTrans,
    pub counit: NatTrans,
    algebras: Vec<Algebra>,
    underlying: Vec<MorId>,
    by_algebra: HashMap<Algebra, ObjId>,
    by_parts: HashMap<(MorId, ObjId, ObjId), MorId>,
}

pub(crate) fn algebra_name(c: &FinCat, alg: Algebra) -> String {
    format!("{}|{}", c.ob_name(alg.carrier), c.mor_name(alg.action))
}

fn homomorphism_name(c: &FinCat, h: MorId, x: Algebra, y: Algebra) -> String {
    format!(
        "{}|{}|{}",
        c.mor_name(h),
        c.mor_name(x.action),
        c.mor_name(y.action)
    )
}

/// Does `a` satisfy `a ∘ η_A = 1_A` and `a ∘ μ_A = a ∘ S(a)`?
pub(crate) fn is_algebra(m: &Monad, alg: Algebra) -> bool {
    let c = m.base();
    let (a, act) = (alg.carrier, alg.action);
    c.compose(act, m.unit().at(a)) == Some(c.id(a))
        && c.compose(act, m.mult().at(a)).is_some()
        && c.compose(act, m.mult().at(a)) == c.compose(act, m.endo().mor(act))
}

/// Is `h : A → B` a homomorphism `(A, a) → (B, b)`, i.e. `h ∘ a = b ∘ S(h)`?
pub(crate) fn is_homomorphism(m: &Monad, h: MorId, x: Algebra, y: Algebra) -> bool {
    let c = m.base();
    let lhs = c.compose(h, x.action);
    lhs.is_some() && lhs == c.compose(y.action, m.endo().mor(h))
}

/// Builds the Eilenberg-Moore resolution of a valid monad, enumerating every
/// algebra structure on every object.
pub fn em(m: &Monad) -> Result<EMResolution> {
    let pre = m.check();
    if !pre.is_ok() {
        return Err(Error::Precondition(pre));
    }
    let c = m.base().clone();
    let s = m.endo();

    let mut algebras = Vec::new();
    for a in c.objects() {
        for &act in c.hom(s.ob(a), a) {
            let alg = Algebra {
                carrier: a,
                action: act,
            };
            if is_algebra(m, alg) {
                algebras.push(alg);
            }
        }
    }

    let mut b = FinCat::builder();
    let mut homs = Vec::new();
    for &x in &algebras {
        b.object(algebra_name(&c, x));
        b.identity(
            algebra_name(&c, x),
            homomorphism_name(&c, c.id(x.carrier), x, x),
        );
        for &y in &algebras {
            for &h in c.hom(x.carrier, y.carrier) {
                if is_homomorphism(m, h, x, y) {
                    b.morphism(
                        homomorphism_name(&c, h, x, y),
                        algebra_name(&c, x),
                        algebra_name(&c, y),
                    );
                    homs.push((x, y, h));
                }
            }
        }
    }
    for &(x, y, f) in &homs {
        for &(y2, z, g) in &homs {
            if y2 != y {
                continue;
            }
            let gf = c.compose(g, f).ok_or_else(|| {
                Error::Undefined(format!("{} ∘ {}", c.mor_name(g), c.mor_name(f)))
            })?;
            b.compose(
                homomorphism_name(&c, g, y, z),
                homomorphism_name(&c, f, x, y),
                homomorphism_name(&c, gf, x, z),
            );
        }
    }
    let ec = Arc::new(b.build()?);

    let placeholder = Algebra {
        carrier: ObjId(0),
        action: MorId(0),
    };
    let mut ob_alg = vec![placeholder; ec.object_count()];
    let mut by_algebra = HashMap::new();
    for &x in &algebras {
        let o = ec.object(&algebra_name(&c, x)).expect("built above");
        ob_alg[o.0] = x;
        by_algebra.insert(x, o);
    }
    let mut underlying = vec![MorId(0); ec.morphism_count()];
    let mut by_parts = HashMap::new();
    for &(x, y, h) in &homs {
        let k = ec
            .morphism(&homomorphism_name(&c, h, x, y))
            .expect("built above");
        underlying[k.0] = h;
        by_parts.insert((h, by_algebra[&x], by_algebra[&y]), k);
    }

    let free_alg = |a: ObjId| Algebra {
        carrier: s.ob(a),
        action: m.mult().at(a),
    };
    let free_ob = |a: ObjId| {
        by_algebra
            .get(&free_alg(a))
            .copied()
            .ok_or_else(|| Error::Internal(missing_free(&c, a)))
    };
    let free_obs = c.objects().map(free_ob).collect::<Result<Vec<_>>>()?;
    let free = Functor::from_fn(
        c.clone(),
        ec.clone(),
        |a| free_obs[a.0],
        |h| by_parts[&(s.mor(h), free_obs[c.dom(h).0], free_obs[c.cod(h).0])],
    )?;
    let forget = Functor::from_fn(
        ec.clone(),
        c.clone(),
        |x| ob_alg[x.0].carrier,
        |k| underlying[k.0],
    )?;
    let unit = NatTrans::new(
        Functor::identity(c.clone()),
        compose_functors(&forget, &free)?,
        m.unit().components().to_vec(),
    )?;
    let counit = NatTrans::from_fn(
        compose_functors(&free, &forget)?,
        Functor::identity(ec.clone()),
        |x| {
            let alg = ob_alg[x.0];
            by_parts[&(alg.action, free_obs[alg.carrier.0], x)]
        },
    )?;

    let res = EMResolution {
        monad: m.clone(),
        em_cat: ec,
        free,
        forget,
        unit,
        counit,
        algebras: ob_alg,
        underlying,
        by_algebra,
        by_parts,
    };
    let audit = res.check()?;
    if !audit.is_ok() {
        return Err(Error::Internal(audit));
    }
    Ok(res)
}

fn missing_free(c: &FinCat, a: ObjId) -> Report {
    let mut r = Report::new();
    r.violation("free-algebra", c.ob_name(a), "not an algebra", "(S A, μ_A)");
    r
}

impl EMResolution {
    pub fn algebra(&self, x: ObjId) -> Algebra {
        self.algebras[x.0]
    }

    pub fn algebras(&self) -> &[Algebra] {
        &self.algebras
    }

    pub fn find_algebra(&self, alg: Algebra) -> Option<ObjId> {
        self.by_algebra.get(&alg).copied()
    }

    /// The underlying morphism of a homomorphism.
    pub fn underlying(&self, k: MorId) -> MorId {
        self.underlying[k.0]
    }

    /// The homomorphism `x → y` with underlying morphism `h`, if `h` is one.
    pub fn find_homomorphism(&self, h: MorId, x: ObjId, y: ObjId) -> Option<MorId> {
        self.by_parts.get(&(h, x, y)).copied()
    }

    /// Algebra laws for every object, completeness of every hom-set, functor
    /// laws, `U∘F = S` and both triangle identities.
    pub fn check(&self) -> Result<Report> {
        let m = &self.monad;
        let c = m.base();
        let ec = &*self.em_cat;
        let mut report = Report::new();
        report.absorb("em", ec.check());
        report.absorb("free", self.free.check());
        report.absorb("forget", self.forget.check());
        report.absorb("counit", self.counit.check());
        for x in ec.objects() {
            let alg = self.algebra(x);
            if !is_algebra(m, alg) {
                report.violation(
                    "algebra",
                    ec.ob_name(x),
                    c.mor_name(alg.action),
                    "an algebra action",
                );
            }
            for y in ec.objects() {
                let want = c
                    .hom(alg.carrier, self.algebra(y).carrier)
                    .iter()
                    .filter(|&&h| is_homomorphism(m, h, alg, self.algebra(y)))
                    .count();
                let got = ec.hom(x, y).len();
                if got != want {
                    let at = format!("({}, {})", ec.ob_name(x), ec.ob_name(y));
                    report.violation("homomorphisms", at, got.to_string(), want.to_string());
                }
            }
        }
        if compose_functors(&self.forget, &self.free)? != *m.endo() {
            report.violation("forget-free", "U∘F", "functor", "S");
        }
        report.absorb(
            "adjunction",
            verify_adjunction(&self.free, &self.forget, &self.unit, &self.counit)?,
        );
        Ok(report)
    }
}
