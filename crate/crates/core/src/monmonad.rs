//! Monoidal monads as 11-tuples `(C, ⊗, I, α, λ, ρ, S, φ, φ̄, η, μ)` and the
//! two ways of validating them: as a monoidal object among monads and their
//! (op)lax morphisms, or as a monad whose endofunctor is (op)lax monoidal.
//! The two validators must agree on every input.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    product_category, same_category, terminal_category, FinCat, Functor, MorId, ObjId, Product,
};
use crate::monad::{
    compose_lax, compose_oplax, product_monad_on, LaxMonadMorphism, Laxity, Monad, MonadMorphism,
    MonadTransformation, OplaxMonadMorphism, ProductMonad,
};
use crate::monoidal::{
    compose_monoidal_functors, MonoidalFunctor, MonoidalStructure, MonoidalTransformation,
};
use crate::report::Report;

/// A monoidal structure and a monad on the same category together with the
/// interchange cells. Lax: `φ_{A,B} : SA ⊗ SB → S(A⊗B)`, `φ̄ : I → S I`;
/// oplax reverses both. `φ` is stored at index `a·n + b`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonoidalMonadTuple {
    monoidal: MonoidalStructure,
    monad: Monad,
    laxity: Laxity,
    phi: Vec<MorId>,
    phi_bar: MorId,
}

impl MonoidalMonadTuple {
    /// Structural well-formedness only: shared base category and correctly
    /// sized, in-range cell families.
    pub fn new(
        monoidal: MonoidalStructure,
        monad: Monad,
        laxity: Laxity,
        phi: Vec<MorId>,
        phi_bar: MorId,
    ) -> Result<Self> {
        if !same_category(monoidal.base(), monad.base()) {
            return Err(Error::boundary(
                "monoidal structure and monad live on different categories",
            ));
        }
        let c = monad.base();
        if phi.len() != c.object_count().pow(2) {
            return Err(Error::structural("φ has the wrong number of components"));
        }
        if phi
            .iter()
            .chain(std::iter::once(&phi_bar))
            .any(|f| f.0 >= c.morphism_count())
        {
            return Err(Error::structural("φ component out of range"));
        }
        Ok(MonoidalMonadTuple {
            monoidal,
            monad,
            laxity,
            phi,
            phi_bar,
        })
    }

    /// On a thin category the interchange cells are the unique morphisms of
    /// the right type. Where none exists the identity of the source stands
    /// in, and the validators report the typing failure.
    pub fn thin(monoidal: MonoidalStructure, monad: Monad, laxity: Laxity) -> Result<Self> {
        let c = monad.base().clone();
        let s = monad.endo();
        let cell = |x: ObjId, y: ObjId| c.hom(x, y).first().copied().unwrap_or_else(|| c.id(x));
        let oriented = |split: ObjId, joined: ObjId| match laxity {
            Laxity::Lax => cell(split, joined),
            Laxity::Oplax => cell(joined, split),
        };
        let mut phi = Vec::new();
        for a in c.objects() {
            for b in c.objects() {
                phi.push(oriented(
                    monoidal.tensor_ob(s.ob(a), s.ob(b)),
                    s.ob(monoidal.tensor_ob(a, b)),
                ));
            }
        }
        let i = monoidal.unit();
        let phi_bar = oriented(i, s.ob(i));
        Self::new(monoidal, monad, laxity, phi, phi_bar)
    }

    /// The identity monad with identity interchange cells.
    pub fn identity_monad(monoidal: MonoidalStructure, laxity: Laxity) -> Self {
        let c = monoidal.base().clone();
        let phi = c
            .objects()
            .flat_map(|a| c.objects().map(move |b| (a, b)))
            .map(|(a, b)| c.id(monoidal.tensor_ob(a, b)))
            .collect();
        let phi_bar = c.id(monoidal.unit());
        Self::new(monoidal, Monad::identity(c), laxity, phi, phi_bar)
            .expect("identity cells are well-formed")
    }

    pub fn monoidal(&self) -> &MonoidalStructure {
        &self.monoidal
    }

    pub fn monad(&self) -> &Monad {
        &self.monad
    }

    pub fn base(&self) -> &Arc<FinCat> {
        self.monad.base()
    }

    pub fn laxity(&self) -> Laxity {
        self.laxity
    }

    pub fn phi(&self, a: ObjId, b: ObjId) -> MorId {
        self.phi[a.0 * self.base().object_count() + b.0]
    }

    pub fn phi_components(&self) -> &[MorId] {
        &self.phi
    }

    pub fn phi_bar(&self) -> MorId {
        self.phi_bar
    }

    pub fn with_phi(&self, a: ObjId, b: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        let n = self.base().object_count();
        out.phi[a.0 * n + b.0] = m;
        out
    }

    pub fn with_phi_bar(&self, m: MorId) -> Self {
        MonoidalMonadTuple {
            phi_bar: m,
            ..self.clone()
        }
    }

    pub fn with_monad(&self, monad: Monad) -> Self {
        MonoidalMonadTuple {
            monad,
            ..self.clone()
        }
    }

    pub fn with_monoidal(&self, monoidal: MonoidalStructure) -> Self {
        MonoidalMonadTuple {
            monoidal,
            ..self.clone()
        }
    }

    /// `(S, φ, φ̄)` as an (op)lax monoidal endofunctor.
    pub fn monoidal_functor(&self) -> MonoidalFunctor {
        MonoidalFunctor::assemble(
            self.monoidal.clone(),
            self.monoidal.clone(),
            self.monad.endo().clone(),
            self.laxity,
            self.phi.clone(),
            self.phi_bar,
        )
        .expect("tuple cells are sized and in range")
    }

    /// The componentwise tuple on `C × C′`.
    pub fn product(left: &Self, right: &Self) -> Result<(Self, Product)> {
        let p = product_category(left.base(), right.base());
        Ok((Self::product_on(left, right, &p)?, p))
    }

    /// As [`MonoidalMonadTuple::product`] on an already built product.
    pub fn product_on(left: &Self, right: &Self, p: &Product) -> Result<Self> {
        if left.laxity != right.laxity {
            return Err(Error::boundary("product of a lax and an oplax tuple"));
        }
        let ms = MonoidalStructure::product_on(&left.monoidal, &right.monoidal, p)?;
        let pm = product_monad_on(&left.monad, &right.monad, p.clone())?;
        let c = p.category.clone();
        let phi = c
            .objects()
            .flat_map(|x| c.objects().map(move |y| (x, y)))
            .map(|(x, y)| {
                let ((a, b), (a2, b2)) = (p.split_ob(x), p.split_ob(y));
                p.pair_mor(left.phi(a, a2), right.phi(b, b2))
            })
            .collect();
        let phi_bar = p.pair_mor(left.phi_bar, right.phi_bar);
        Self::new(ms, pm.monad, left.laxity, phi, phi_bar)
    }
}

/// Product categories and structural functors needed by the first validator.
/// They depend only on the base category, so a corruption sweep can share
/// them.
#[derive(Clone, Debug)]
pub struct InterchangeContext {
    base: Arc<FinCat>,
    square: Product,
    terminal: Arc<FinCat>,
    /// `C × (C × C)`
    triple_left: Product,
    /// `(C × C) × C`
    triple_right: Product,
    /// `1 × C`
    pad_left: Product,
    /// `C × 1`
    pad_right: Product,
    reassoc: Functor,
    into_pad_left: Functor,
    into_pad_right: Functor,
}

impl InterchangeContext {
    pub fn new(monoidal: &MonoidalStructure) -> Result<Self> {
        let base = monoidal.base().clone();
        let square = monoidal.square().clone();
        let terminal = Arc::new(terminal_category());
        let triple_left = product_category(&base, &square.category);
        let triple_right = product_category(&square.category, &base);
        let pad_left = product_category(&terminal, &base);
        let pad_right = product_category(&base, &terminal);
        let (tl, tr, sq) = (&triple_left, &triple_right, &square);
        let reassoc = Functor::from_fn(
            tl.category.clone(),
            tr.category.clone(),
            |x| {
                let (a, bc) = tl.split_ob(x);
                let (b, c) = sq.split_ob(bc);
                tr.pair_ob(sq.pair_ob(a, b), c)
            },
            |x| {
                let (f, gh) = tl.split_mor(x);
                let (g, h) = sq.split_mor(gh);
                tr.pair_mor(sq.pair_mor(f, g), h)
            },
        )?;
        let star = ObjId(0);
        let into_pad_left = Functor::from_fn(
            base.clone(),
            pad_left.category.clone(),
            |a| pad_left.pair_ob(star, a),
            |f| pad_left.pair_mor(terminal.id(star), f),
        )?;
        let into_pad_right = Functor::from_fn(
            base.clone(),
            pad_right.category.clone(),
            |a| pad_right.pair_ob(a, star),
            |f| pad_right.pair_mor(f, terminal.id(star)),
        )?;
        Ok(InterchangeContext {
            base,
            square,
            terminal,
            triple_left,
            triple_right,
            pad_left,
            pad_right,
            reassoc,
            into_pad_left,
            into_pad_right,
        })
    }

    fn fits(&self, t: &MonoidalMonadTuple) -> bool {
        Arc::ptr_eq(&self.base, t.base())
            && Arc::ptr_eq(&self.square.category, &t.monoidal.square().category)
    }
}

/// Operations shared by oplax and lax monad morphisms, so that the first
/// validator can be written once for both variants.
trait Cell: MonadMorphism + Sized {
    fn from_components(
        source: Monad,
        target: Monad,
        carrier: Functor,
        components: Vec<MorId>,
    ) -> Result<Self>;
    fn strict(source: Monad, target: Monad, carrier: Functor) -> Result<Self>;
    fn identity(m: &Monad) -> Self;
    fn compose(g: &Self, f: &Self) -> Result<Self>;
    fn product(f: &Self, g: &Self, src: &ProductMonad, tgt: &ProductMonad) -> Result<Self>;
    fn check(&self) -> Report;
}

macro_rules! impl_cell {
    ($ty:ty, $compose:path) => {
        impl Cell for $ty {
            fn from_components(
                s: Monad,
                t: Monad,
                carrier: Functor,
                comps: Vec<MorId>,
            ) -> Result<Self> {
                <$ty>::from_components(s, t, carrier, comps)
            }
            fn strict(s: Monad, t: Monad, carrier: Functor) -> Result<Self> {
                <$ty>::strict(s, t, carrier)
            }
            fn identity(m: &Monad) -> Self {
                <$ty>::identity(m)
            }
            fn compose(g: &Self, f: &Self) -> Result<Self> {
                $compose(g, f)
            }
            fn product(f: &Self, g: &Self, src: &ProductMonad, tgt: &ProductMonad) -> Result<Self> {
                <$ty>::product(f, g, src, tgt)
            }
            fn check(&self) -> Report {
                <$ty>::check(self)
            }
        }
    };
}

impl_cell!(OplaxMonadMorphism, compose_oplax);
impl_cell!(LaxMonadMorphism, compose_lax);

fn note_error(report: &mut Report, law: &str, at: &str, e: Error) {
    report.violation(law, at, e.to_string(), "a defined composite");
}

/// Validates the tuple as a monoidal object in the 2-category of monads with
/// oplax morphisms (lax tuples) or lax morphisms (oplax tuples): the monad
/// and monoidal laws, `(⊗, φ) : S × S → S` and `(I, φ̄) : ι(1) → S` as monad
/// morphisms, and `α`, `λ`, `ρ` as transformations between the composite
/// morphisms built from them.
pub fn validate_as_monoidal_in_monads(t: &MonoidalMonadTuple) -> Report {
    match InterchangeContext::new(&t.monoidal) {
        Ok(ctx) => validate_as_monoidal_in_monads_with(&ctx, t),
        Err(e) => {
            let mut r = Report::new();
            note_error(&mut r, "structure", "tuple", e);
            r
        }
    }
}

/// As [`validate_as_monoidal_in_monads`], reusing a prebuilt context.
pub fn validate_as_monoidal_in_monads_with(
    ctx: &InterchangeContext,
    t: &MonoidalMonadTuple,
) -> Report {
    in_monads_after(ctx, t, shared_checks(t))
}

/// The monoidal and monad laws, which both validators start from.
fn shared_checks(t: &MonoidalMonadTuple) -> Report {
    let mut report = Report::new();
    report.absorb("monoidal", t.monoidal.check());
    report.absorb("monad", t.monad.check());
    report
}

fn in_monads_after(ctx: &InterchangeContext, t: &MonoidalMonadTuple, mut report: Report) -> Report {
    let owned;
    let ctx = if ctx.fits(t) {
        ctx
    } else {
        match InterchangeContext::new(&t.monoidal) {
            Ok(c) => {
                owned = c;
                &owned
            }
            Err(e) => {
                note_error(&mut report, "structure", "tuple", e);
                return report;
            }
        }
    };
    let rest = match t.laxity {
        Laxity::Lax => in_monads::<OplaxMonadMorphism>(ctx, t),
        Laxity::Oplax => in_monads::<LaxMonadMorphism>(ctx, t),
    };
    match rest {
        Ok(r) => report.extend(r),
        Err(e) => note_error(&mut report, "structure", "tuple", e),
    }
    report
}

fn in_monads<M: Cell>(ctx: &InterchangeContext, t: &MonoidalMonadTuple) -> Result<Report> {
    let ms = &t.monoidal;
    let s = &t.monad;
    let c = ctx.base.clone();
    let mut report = Report::new();

    let ss = product_monad_on(s, s, ctx.square.clone())?;
    let tens_comps = ctx
        .square
        .category
        .objects()
        .map(|x| {
            let (a, b) = ctx.square.split_ob(x);
            t.phi(a, b)
        })
        .collect();
    let tens = M::from_components(ss.monad.clone(), s.clone(), ms.tensor().clone(), tens_comps)?;
    report.absorb("tensor", tens.check());

    let point = Monad::identity(ctx.terminal.clone());
    let unit_carrier = Functor::constant_object(ctx.terminal.clone(), c.clone(), ms.unit())?;
    let unit = M::from_components(point.clone(), s.clone(), unit_carrier, vec![t.phi_bar])?;
    report.absorb("unit", unit.check());

    let id = M::identity(s);

    // α : ⊗∘(1×⊗) ⇒ ⊗∘(⊗×1)∘reassoc
    let s_ss = product_monad_on(s, &ss.monad, ctx.triple_left.clone())?;
    let ss_s = product_monad_on(&ss.monad, s, ctx.triple_right.clone())?;
    let id_x_tens = M::product(&id, &tens, &s_ss, &ss)?;
    let tens_x_id = M::product(&tens, &id, &ss_s, &ss)?;
    let reassoc = M::strict(s_ss.monad.clone(), ss_s.monad.clone(), ctx.reassoc.clone())?;
    let assoc_comps = ctx
        .triple_left
        .category
        .objects()
        .map(|x| {
            let (a, bc) = ctx.triple_left.split_ob(x);
            let (b, cc) = ctx.square.split_ob(bc);
            ms.assoc(a, b, cc)
        })
        .collect();
    match (
        M::compose(&tens, &id_x_tens),
        M::compose(&tens, &tens_x_id).and_then(|r| M::compose(&r, &reassoc)),
    ) {
        (Ok(l), Ok(r)) => report.absorb(
            "associator",
            MonadTransformation::new(l, r, assoc_comps)?.check(),
        ),
        (Err(e), _) | (_, Err(e)) => note_error(&mut report, "associator/composite", "tuple", e),
    }

    // λ : ⊗∘(I×1)∘pad ⇒ 1 and ρ : ⊗∘(1×I)∘pad ⇒ 1
    let p_s = product_monad_on(&point, s, ctx.pad_left.clone())?;
    let s_p = product_monad_on(s, &point, ctx.pad_right.clone())?;
    let unit_x_id = M::product(&unit, &id, &p_s, &ss)?;
    let id_x_unit = M::product(&id, &unit, &s_p, &ss)?;
    let pad_l = M::strict(s.clone(), p_s.monad.clone(), ctx.into_pad_left.clone())?;
    let pad_r = M::strict(s.clone(), s_p.monad.clone(), ctx.into_pad_right.clone())?;
    let left = M::compose(&tens, &unit_x_id).and_then(|x| M::compose(&x, &pad_l));
    match left {
        Ok(l) => {
            let comps = c.objects().map(|a| ms.left_unitor(a)).collect();
            report.absorb(
                "left-unitor",
                MonadTransformation::new(l, id.clone(), comps)?.check(),
            );
        }
        Err(e) => note_error(&mut report, "left-unitor/composite", "tuple", e),
    }
    let right = M::compose(&tens, &id_x_unit).and_then(|x| M::compose(&x, &pad_r));
    match right {
        Ok(r) => {
            let comps = c.objects().map(|a| ms.right_unitor(a)).collect();
            report.absorb(
                "right-unitor",
                MonadTransformation::new(r, id, comps)?.check(),
            );
        }
        Err(e) => note_error(&mut report, "right-unitor/composite", "tuple", e),
    }
    Ok(report)
}

/// Validates the tuple as a monad on a monoidal category: the monoidal and
/// monad laws, `(S, φ, φ̄)` as an (op)lax monoidal functor, and `η`, `μ` as
/// monoidal transformations out of `(1, 1, 1)` and `(S², S(φ)∘φ_{S,S}, S(φ̄)∘φ̄)`
/// (composites reversed in the oplax case).
pub fn validate_as_monad_on_monoidal(t: &MonoidalMonadTuple) -> Report {
    on_monoidal_after(t, shared_checks(t))
}

fn on_monoidal_after(t: &MonoidalMonadTuple, mut report: Report) -> Report {
    let s = t.monoidal_functor();
    report.absorb("functor", s.check());
    let c = t.base();
    let id = MonoidalFunctor::identity(&t.monoidal, t.laxity);
    match MonoidalTransformation::new(id, s.clone(), t.monad.unit().components().to_vec()) {
        Ok(eta) => report.absorb("unit", eta.check()),
        Err(e) => note_error(&mut report, "unit/structure", c.ob_name(ObjId(0)), e),
    }
    match compose_monoidal_functors(&s, &s).and_then(|s2| {
        MonoidalTransformation::new(s2, s.clone(), t.monad.mult().components().to_vec())
    }) {
        Ok(mu) => report.absorb("multiplication", mu.check()),
        Err(e) => note_error(&mut report, "multiplication/composite", "tuple", e),
    }
    report
}

/// Outcome of running both validators on one tuple.
#[derive(Clone, Debug)]
pub struct InterchangeOutcome {
    pub in_monads: Report,
    pub on_monoidal: Report,
}

impl InterchangeOutcome {
    /// Both empty or both non-empty.
    pub fn agree(&self) -> bool {
        self.in_monads.is_ok() == self.on_monoidal.is_ok()
    }

    pub fn both_valid(&self) -> bool {
        self.in_monads.is_ok() && self.on_monoidal.is_ok()
    }
}

pub fn check_interchange_equivalence(t: &MonoidalMonadTuple) -> InterchangeOutcome {
    match InterchangeContext::new(&t.monoidal) {
        Ok(ctx) => check_interchange_equivalence_with(&ctx, t),
        Err(_) => InterchangeOutcome {
            in_monads: validate_as_monoidal_in_monads(t),
            on_monoidal: validate_as_monad_on_monoidal(t),
        },
    }
}

/// As [`check_interchange_equivalence`], reusing a prebuilt context.
pub fn check_interchange_equivalence_with(
    ctx: &InterchangeContext,
    t: &MonoidalMonadTuple,
) -> InterchangeOutcome {
    let shared = shared_checks(t);
    InterchangeOutcome {
        in_monads: in_monads_after(ctx, t, shared.clone()),
        on_monoidal: on_monoidal_after(t, shared),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn identity_monad_tuples_pass_both() {
        for laxity in [Laxity::Lax, Laxity::Oplax] {
            let t = MonoidalMonadTuple::identity_monad(chain_max(3), laxity);
            let out = check_interchange_equivalence(&t);
            assert!(out.both_valid(), "{}\n{}", out.in_monads, out.on_monoidal);
        }
        let z = MonoidalStructure::from_monoid(Arc::new(FinCat::cyclic(2))).unwrap();
        assert!(
            check_interchange_equivalence(&MonoidalMonadTuple::identity_monad(z, Laxity::Lax))
                .both_valid()
        );
    }

    #[test]
    fn closure_on_max_chain() {
        let ms = chain_max(3);
        let cl = closure(ms.base(), &[1, 1, 2]);
        let t = MonoidalMonadTuple::thin(ms, cl, Laxity::Lax).unwrap();
        let out = check_interchange_equivalence(&t);
        assert!(out.both_valid(), "{}\n{}", out.in_monads, out.on_monoidal);
        // oplax needs φ̄ : cl(0) = 1 → 0, which does not exist
        let t = MonoidalMonadTuple::thin(t.monoidal().clone(), t.monad().clone(), Laxity::Oplax)
            .unwrap();
        let out = check_interchange_equivalence(&t);
        assert!(out.agree() && !out.in_monads.is_ok() && !out.on_monoidal.is_ok());
        assert!(out.in_monads.has_law("unit/"), "{}", out.in_monads);
    }

    #[test]
    fn z2_flip_oplax_tuple() {
        let z = Arc::new(FinCat::cyclic(2));
        let s = z.morphism("s").unwrap();
        let ms = MonoidalStructure::from_monoid(z.clone()).unwrap();
        let flip = Monad::new(Functor::identity(z.clone()), vec![s], vec![s]).unwrap();
        let t =
            MonoidalMonadTuple::new(ms.clone(), flip.clone(), Laxity::Oplax, vec![s], s).unwrap();
        let out = check_interchange_equivalence(&t);
        assert!(out.both_valid(), "{}\n{}", out.in_monads, out.on_monoidal);
        let e = z.morphism("e").unwrap();
        let bad = t.with_phi_bar(e);
        let out = check_interchange_equivalence(&bad);
        assert!(out.agree() && !out.in_monads.is_ok());
    }

    #[test]
    fn mistyped_phi_is_caught_by_both() {
        let ms = chain_max(3);
        let cl = closure(ms.base(), &[1, 1, 2]);
        let t = MonoidalMonadTuple::thin(ms, cl, Laxity::Lax).unwrap();
        let c = t.base().clone();
        let bad = t.with_phi(ObjId(0), ObjId(0), c.id(ObjId(0)));
        let out = check_interchange_equivalence(&bad);
        assert!(out.agree() && !out.on_monoidal.is_ok());
        assert!(out.in_monads.has_law("tensor/"), "{}", out.in_monads);
    }

    #[test]
    fn product_tuple_is_valid() {
        let ms = chain_max(2);
        let cl = closure(ms.base(), &[1, 1]);
        let t = MonoidalMonadTuple::thin(ms.clone(), cl, Laxity::Lax).unwrap();
        let u = MonoidalMonadTuple::identity_monad(ms, Laxity::Lax);
        let (p, _) = MonoidalMonadTuple::product(&t, &u).unwrap();
        assert!(check_interchange_equivalence(&p).both_valid());
    }
}
