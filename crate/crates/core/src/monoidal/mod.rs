//! Monoidal structure on finite categories, (op)lax monoidal functors,
//! monoidal transformations and braidings.

mod braiding;
mod functor;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    opposite_category, product_category, same_category, FinCat, Functor, MorId, ObjId, Product,
};
use crate::report::Report;

pub use braiding::{check_braided_functor, Braiding};
pub use functor::{compose_monoidal_functors, MonoidalFunctor, MonoidalTransformation};

/// `(C, ⊗, I, α, λ, ρ)` with `α_{A,B,C} : A⊗(B⊗C) → (A⊗B)⊗C`,
/// `λ_A : I⊗A → A` and `ρ_A : A⊗I → A`.
///
/// The tensor is a functor out of `C × C`, which the structure owns.
/// Components are stored densely: `α` at index `(a·n + b)·n + c`.
#[derive(Clone, Debug)]
pub struct MonoidalStructure {
    base: Arc<FinCat>,
    square: Product,
    tensor: Functor,
    unit: ObjId,
    assoc: Vec<MorId>,
    left_unitor: Vec<MorId>,
    right_unitor: Vec<MorId>,
}

impl PartialEq for MonoidalStructure {
    fn eq(&self, other: &Self) -> bool {
        same_category(&self.base, &other.base)
            && self.tensor.ob_map() == other.tensor.ob_map()
            && self.tensor.mor_map() == other.tensor.mor_map()
            && self.unit == other.unit
            && self.assoc == other.assoc
            && self.left_unitor == other.left_unitor
            && self.right_unitor == other.right_unitor
    }
}

impl MonoidalStructure {
    /// Assembles a structure from component functions. Component typing and
    /// every law are left to [`MonoidalStructure::check`].
    pub fn from_fns(
        base: Arc<FinCat>,
        tensor_ob: impl Fn(ObjId, ObjId) -> ObjId,
        tensor_mor: impl Fn(MorId, MorId) -> MorId,
        unit: ObjId,
        assoc: impl Fn(ObjId, ObjId, ObjId) -> MorId,
        left_unitor: impl Fn(ObjId) -> MorId,
        right_unitor: impl Fn(ObjId) -> MorId,
    ) -> Result<Self> {
        let square = product_category(&base, &base);
        let tensor = Functor::from_fn(
            square.category.clone(),
            base.clone(),
            |p| {
                let (a, b) = square.split_ob(p);
                tensor_ob(a, b)
            },
            |p| {
                let (f, g) = square.split_mor(p);
                tensor_mor(f, g)
            },
        )?;
        let mut assoc_v = Vec::with_capacity(base.object_count().pow(3));
        for a in base.objects() {
            for b in base.objects() {
                for c in base.objects() {
                    assoc_v.push(assoc(a, b, c));
                }
            }
        }
        let lam = base.objects().map(&left_unitor).collect();
        let rho = base.objects().map(&right_unitor).collect();
        Self::from_parts(square, tensor, unit, assoc_v, lam, rho)
    }

    pub fn from_parts(
        square: Product,
        tensor: Functor,
        unit: ObjId,
        assoc: Vec<MorId>,
        left_unitor: Vec<MorId>,
        right_unitor: Vec<MorId>,
    ) -> Result<Self> {
        let base = square.left.clone();
        if !same_category(&square.right, &base)
            || !same_category(tensor.source(), &square.category)
            || !same_category(tensor.target(), &base)
        {
            return Err(Error::boundary("tensor is not a functor C × C → C"));
        }
        let n = base.object_count();
        if unit.0 >= n {
            return Err(Error::structural("unit object out of range"));
        }
        if assoc.len() != n * n * n || left_unitor.len() != n || right_unitor.len() != n {
            return Err(Error::structural(
                "coherence cell families have the wrong size",
            ));
        }
        let m = base.morphism_count();
        if assoc
            .iter()
            .chain(&left_unitor)
            .chain(&right_unitor)
            .any(|f| f.0 >= m)
        {
            return Err(Error::structural("coherence component out of range"));
        }
        Ok(MonoidalStructure {
            base,
            square,
            tensor,
            unit,
            assoc,
            left_unitor,
            right_unitor,
        })
    }

    /// The structure on a thin category given by a binary operation on
    /// objects. Coherence cells are the unique morphisms of the right type;
    /// where none exists the identity of the source is used, so the typing
    /// failure surfaces in [`MonoidalStructure::check`]. Fails if `op` is not
    /// monotone, since then no tensor functor exists.
    pub fn from_thin_op(
        base: Arc<FinCat>,
        op: impl Fn(ObjId, ObjId) -> ObjId,
        unit: ObjId,
    ) -> Result<Self> {
        if !base.is_thin() {
            return Err(Error::structural("from_thin_op needs a thin category"));
        }
        let c = &*base;
        for f in c.morphisms() {
            for g in c.morphisms() {
                if c.hom(op(c.dom(f), c.dom(g)), op(c.cod(f), c.cod(g)))
                    .is_empty()
                {
                    return Err(Error::structural(format!(
                        "operation is not monotone at ({}, {})",
                        c.mor_name(f),
                        c.mor_name(g)
                    )));
                }
            }
        }
        let cell = |x: ObjId, y: ObjId| c.hom(x, y).first().copied().unwrap_or_else(|| c.id(x));
        Self::from_fns(
            base.clone(),
            &op,
            |f, g| c.hom(op(c.dom(f), c.dom(g)), op(c.cod(f), c.cod(g)))[0],
            unit,
            |a, b, cc| cell(op(a, op(b, cc)), op(op(a, b), cc)),
            |a| cell(op(unit, a), a),
            |a| cell(op(a, unit), a),
        )
    }

    /// A one-object category as a monoidal category with tensor given by
    /// composition and identity coherence cells. Functoriality of the tensor
    /// (i.e. commutativity) is left to [`MonoidalStructure::check`].
    pub fn from_monoid(base: Arc<FinCat>) -> Result<Self> {
        if base.object_count() != 1 {
            return Err(Error::structural("from_monoid needs a one-object category"));
        }
        let star = ObjId(0);
        let id = base.id(star);
        let c = base.clone();
        Self::from_fns(
            base,
            |_, _| star,
            |f, g| c.compose(f, g).expect("one object: everything composes"),
            star,
            |_, _, _| id,
            |_| id,
            |_| id,
        )
    }

    pub fn base(&self) -> &Arc<FinCat> {
        &self.base
    }

    pub fn square(&self) -> &Product {
        &self.square
    }

    pub fn tensor(&self) -> &Functor {
        &self.tensor
    }

    pub fn unit(&self) -> ObjId {
        self.unit
    }

    pub fn tensor_ob(&self, a: ObjId, b: ObjId) -> ObjId {
        self.tensor.ob(self.square.pair_ob(a, b))
    }

    pub fn tensor_mor(&self, f: MorId, g: MorId) -> MorId {
        self.tensor.mor(self.square.pair_mor(f, g))
    }

    fn index3(&self, a: ObjId, b: ObjId, c: ObjId) -> usize {
        let n = self.base.object_count();
        (a.0 * n + b.0) * n + c.0
    }

    pub fn assoc(&self, a: ObjId, b: ObjId, c: ObjId) -> MorId {
        self.assoc[self.index3(a, b, c)]
    }

    pub fn left_unitor(&self, a: ObjId) -> MorId {
        self.left_unitor[a.0]
    }

    pub fn right_unitor(&self, a: ObjId) -> MorId {
        self.right_unitor[a.0]
    }

    pub fn assoc_components(&self) -> &[MorId] {
        &self.assoc
    }

    pub fn left_unitor_components(&self) -> &[MorId] {
        &self.left_unitor
    }

    pub fn right_unitor_components(&self) -> &[MorId] {
        &self.right_unitor
    }

    pub fn with_assoc(&self, a: ObjId, b: ObjId, c: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        let i = self.index3(a, b, c);
        out.assoc[i] = m;
        out
    }

    pub fn with_left_unitor(&self, a: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        out.left_unitor[a.0] = m;
        out
    }

    pub fn with_right_unitor(&self, a: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        out.right_unitor[a.0] = m;
        out
    }

    pub fn with_unit(&self, unit: ObjId) -> Self {
        MonoidalStructure {
            unit,
            ..self.clone()
        }
    }

    /// Replaces `f ⊗ g`.
    pub fn with_tensor_mor(&self, f: MorId, g: MorId, image: MorId) -> Self {
        let tensor = self.tensor.with_mor(self.square.pair_mor(f, g), image);
        MonoidalStructure {
            tensor,
            ..self.clone()
        }
    }

    /// Replaces `a ⊗ b` on objects.
    pub fn with_tensor_ob(&self, a: ObjId, b: ObjId, image: ObjId) -> Self {
        let tensor = self.tensor.with_ob(self.square.pair_ob(a, b), image);
        MonoidalStructure {
            tensor,
            ..self.clone()
        }
    }

    /// Tensor functoriality; typing, invertibility and naturality of `α`,
    /// `λ`, `ρ`; the pentagon over all quadruples and the triangle over all
    /// pairs of objects.
    pub fn check(&self) -> Report {
        let c = &*self.base;
        let t = |a, b| self.tensor_ob(a, b);
        let tm = |f, g| self.tensor_mor(f, g);
        let i = self.unit;
        let mut report = Report::new();
        report.absorb("tensor", self.tensor.check());

        let name3 = |a: ObjId, b: ObjId, cc: ObjId| {
            format!("({}, {}, {})", c.ob_name(a), c.ob_name(b), c.ob_name(cc))
        };
        for a in c.objects() {
            for b in c.objects() {
                for cc in c.objects() {
                    let m = self.assoc(a, b, cc);
                    let at = || name3(a, b, cc);
                    if c.expect_type(
                        &mut report,
                        "associator-type",
                        at,
                        m,
                        t(a, t(b, cc)),
                        t(t(a, b), cc),
                    ) && !c.is_iso(m)
                    {
                        report.violation("associator-iso", at(), c.mor_name(m), "an isomorphism");
                    }
                }
            }
        }
        for a in c.objects() {
            let at = || c.ob_name(a).to_string();
            let l = self.left_unitor(a);
            if c.expect_type(&mut report, "left-unitor-type", at, l, t(i, a), a) && !c.is_iso(l) {
                report.violation("left-unitor-iso", at(), c.mor_name(l), "an isomorphism");
            }
            let r = self.right_unitor(a);
            if c.expect_type(&mut report, "right-unitor-type", at, r, t(a, i), a) && !c.is_iso(r) {
                report.violation("right-unitor-iso", at(), c.mor_name(r), "an isomorphism");
            }
        }

        for f in c.morphisms() {
            for g in c.morphisms() {
                for h in c.morphisms() {
                    let (a, b, cc) = (c.dom(f), c.dom(g), c.dom(h));
                    let (a2, b2, c2) = (c.cod(f), c.cod(g), c.cod(h));
                    c.expect_equal(
                        &mut report,
                        "associator-naturality",
                        || format!("({}, {}, {})", c.mor_name(f), c.mor_name(g), c.mor_name(h)),
                        &[self.assoc(a2, b2, c2), tm(f, tm(g, h))],
                        &[tm(tm(f, g), h), self.assoc(a, b, cc)],
                    );
                }
            }
            let (a, a2) = (c.dom(f), c.cod(f));
            let at = || c.mor_name(f).to_string();
            c.expect_equal(
                &mut report,
                "left-unitor-naturality",
                at,
                &[self.left_unitor(a2), tm(c.id(i), f)],
                &[f, self.left_unitor(a)],
            );
            c.expect_equal(
                &mut report,
                "right-unitor-naturality",
                at,
                &[self.right_unitor(a2), tm(f, c.id(i))],
                &[f, self.right_unitor(a)],
            );
        }

        for a in c.objects() {
            for b in c.objects() {
                for cc in c.objects() {
                    for d in c.objects() {
                        c.expect_equal(
                            &mut report,
                            "pentagon",
                            || {
                                format!(
                                    "({}, {}, {}, {})",
                                    c.ob_name(a),
                                    c.ob_name(b),
                                    c.ob_name(cc),
                                    c.ob_name(d)
                                )
                            },
                            &[
                                tm(self.assoc(a, b, cc), c.id(d)),
                                self.assoc(a, t(b, cc), d),
                                tm(c.id(a), self.assoc(b, cc, d)),
                            ],
                            &[self.assoc(t(a, b), cc, d), self.assoc(a, b, t(cc, d))],
                        );
                    }
                }
            }
        }
        for a in c.objects() {
            for b in c.objects() {
                c.expect_equal(
                    &mut report,
                    "triangle",
                    || format!("({}, {})", c.ob_name(a), c.ob_name(b)),
                    &[tm(self.right_unitor(a), c.id(b)), self.assoc(a, i, b)],
                    &[tm(c.id(a), self.left_unitor(b))],
                );
            }
        }
        report
    }

    /// The componentwise structure on `C × C′`.
    pub fn product(left: &Self, right: &Self) -> Result<(Self, Product)> {
        let p = product_category(&left.base, &right.base);
        let ms = Self::product_on(left, right, &p)?;
        Ok((ms, p))
    }

    /// As [`MonoidalStructure::product`] on an already built product.
    pub fn product_on(left: &Self, right: &Self, p: &Product) -> Result<Self> {
        if !p.factors_are(&left.base, &right.base) {
            return Err(Error::boundary(
                "product monoidal structure: factors do not match",
            ));
        }
        let pc = p.category.clone();
        Self::from_fns(
            pc,
            |x, y| {
                let ((a, b), (a2, b2)) = (p.split_ob(x), p.split_ob(y));
                p.pair_ob(left.tensor_ob(a, a2), right.tensor_ob(b, b2))
            },
            |f, g| {
                let ((f1, f2), (g1, g2)) = (p.split_mor(f), p.split_mor(g));
                p.pair_mor(left.tensor_mor(f1, g1), right.tensor_mor(f2, g2))
            },
            p.pair_ob(left.unit, right.unit),
            |x, y, z| {
                let ((a, b), (a2, b2), (a3, b3)) = (p.split_ob(x), p.split_ob(y), p.split_ob(z));
                p.pair_mor(left.assoc(a, a2, a3), right.assoc(b, b2, b3))
            },
            |x| {
                let (a, b) = p.split_ob(x);
                p.pair_mor(left.left_unitor(a), right.left_unitor(b))
            },
            |x| {
                let (a, b) = p.split_ob(x);
                p.pair_mor(left.right_unitor(a), right.right_unitor(b))
            },
        )
    }

    /// The structure on `C^op` with the same tensor, inverted coherence cells
    /// (so that they keep their orientation) and the same unit. Fails if a
    /// coherence component is not invertible.
    pub fn opposite(&self) -> Result<(Self, Arc<FinCat>)> {
        let c = &*self.base;
        let op = Arc::new(opposite_category(c));
        let to_op_ob = |a: ObjId| op.object(c.ob_name(a)).expect("same objects");
        let to_op = |f: MorId| op.morphism(c.mor_name(f)).expect("same morphisms");
        let from_op_ob = |a: ObjId| c.object(op.ob_name(a)).expect("same objects");
        let from_op = |f: MorId| c.morphism(op.mor_name(f)).expect("same morphisms");
        let inv = |f: MorId| {
            c.inverse(f).map(to_op).ok_or_else(|| {
                Error::Structural(format!(
                    "coherence component {} is not invertible",
                    c.mor_name(f)
                ))
            })
        };
        let n = c.object_count();
        let mut assoc = vec![MorId(0); n * n * n];
        let mut lam = vec![MorId(0); n];
        let mut rho = vec![MorId(0); n];
        for a in op.objects() {
            let a0 = from_op_ob(a);
            lam[a.0] = inv(self.left_unitor(a0))?;
            rho[a.0] = inv(self.right_unitor(a0))?;
            for b in op.objects() {
                for cc in op.objects() {
                    assoc[(a.0 * n + b.0) * n + cc.0] =
                        inv(self.assoc(a0, from_op_ob(b), from_op_ob(cc)))?;
                }
            }
        }
        let ms = Self::from_fns(
            op.clone(),
            |a, b| to_op_ob(self.tensor_ob(from_op_ob(a), from_op_ob(b))),
            |f, g| to_op(self.tensor_mor(from_op(f), from_op(g))),
            to_op_ob(self.unit),
            |a, b, cc| assoc[(a.0 * n + b.0) * n + cc.0],
            |a| lam[a.0],
            |a| rho[a.0],
        )?;
        Ok((ms, op))
    }
}
