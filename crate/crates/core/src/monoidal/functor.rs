use super::MonoidalStructure;
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, same_category, Functor, MorId, NatTrans, ObjId};
use crate::monad::Laxity;
use crate::report::Report;

/// A functor between monoidal categories with comparison cells.
///
/// Lax: `φ_{A,B} : FA ⊗′ FB → F(A⊗B)` and `φ̄ : I′ → F I`.
/// Oplax: `φ_{A,B} : F(A⊗B) → FA ⊗′ FB` and `φ̄ : F I → I′`.
/// `φ` is stored at index `a·n + b`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonoidalFunctor {
    source: MonoidalStructure,
    target: MonoidalStructure,
    carrier: Functor,
    laxity: Laxity,
    tensorator: Vec<MorId>,
    unitor: MorId,
}

impl MonoidalFunctor {
    /// Assembles the data without checking the typing of `φ` and `φ̄`;
    /// [`MonoidalFunctor::check`] reports mistyped cells as violations.
    pub fn assemble(
        source: MonoidalStructure,
        target: MonoidalStructure,
        carrier: Functor,
        laxity: Laxity,
        tensorator: Vec<MorId>,
        unitor: MorId,
    ) -> Result<Self> {
        if !same_category(carrier.source(), source.base())
            || !same_category(carrier.target(), target.base())
        {
            return Err(Error::boundary(
                "carrier does not run between the monoidal categories",
            ));
        }
        let n = source.base().object_count();
        if tensorator.len() != n * n {
            return Err(Error::structural(
                "tensorator has the wrong number of components",
            ));
        }
        let m = target.base().morphism_count();
        if tensorator
            .iter()
            .chain(std::iter::once(&unitor))
            .any(|f| f.0 >= m)
        {
            return Err(Error::structural("tensorator component out of range"));
        }
        Ok(MonoidalFunctor {
            source,
            target,
            carrier,
            laxity,
            tensorator,
            unitor,
        })
    }

    /// As [`MonoidalFunctor::assemble`], rejecting cells whose boundary does
    /// not match the declared laxity.
    pub fn new(
        source: MonoidalStructure,
        target: MonoidalStructure,
        carrier: Functor,
        laxity: Laxity,
        tensorator: Vec<MorId>,
        unitor: MorId,
    ) -> Result<Self> {
        let f = Self::assemble(source, target, carrier, laxity, tensorator, unitor)?;
        let mut typing = Report::new();
        f.check_typing(&mut typing);
        if let Some(v) = typing.violations().first() {
            return Err(Error::Boundary(format!("{laxity} monoidal functor: {v}")));
        }
        Ok(f)
    }

    pub fn identity(ms: &MonoidalStructure, laxity: Laxity) -> Self {
        let c = ms.base();
        let tensorator = c
            .objects()
            .flat_map(|a| c.objects().map(move |b| (a, b)))
            .map(|(a, b)| c.id(ms.tensor_ob(a, b)))
            .collect();
        Self::assemble(
            ms.clone(),
            ms.clone(),
            Functor::identity(c.clone()),
            laxity,
            tensorator,
            c.id(ms.unit()),
        )
        .expect("identity is well-typed")
    }

    pub fn source(&self) -> &MonoidalStructure {
        &self.source
    }

    pub fn target(&self) -> &MonoidalStructure {
        &self.target
    }

    pub fn carrier(&self) -> &Functor {
        &self.carrier
    }

    pub fn laxity(&self) -> Laxity {
        self.laxity
    }

    pub fn tensorator(&self, a: ObjId, b: ObjId) -> MorId {
        self.tensorator[a.0 * self.source.base().object_count() + b.0]
    }

    pub fn tensorator_components(&self) -> &[MorId] {
        &self.tensorator
    }

    pub fn unitor(&self) -> MorId {
        self.unitor
    }

    pub fn with_tensorator(&self, a: ObjId, b: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        let n = self.source.base().object_count();
        out.tensorator[a.0 * n + b.0] = m;
        out
    }

    pub fn with_unitor(&self, m: MorId) -> Self {
        MonoidalFunctor {
            unitor: m,
            ..self.clone()
        }
    }

    /// The endpoints `(FA ⊗′ FB, F(A⊗B))`, ordered by laxity.
    fn tensorator_type(&self, a: ObjId, b: ObjId) -> (ObjId, ObjId) {
        let f = &self.carrier;
        let split = self.target.tensor_ob(f.ob(a), f.ob(b));
        let joined = f.ob(self.source.tensor_ob(a, b));
        match self.laxity {
            Laxity::Lax => (split, joined),
            Laxity::Oplax => (joined, split),
        }
    }

    fn unitor_type(&self) -> (ObjId, ObjId) {
        let (i2, fi) = (self.target.unit(), self.carrier.ob(self.source.unit()));
        match self.laxity {
            Laxity::Lax => (i2, fi),
            Laxity::Oplax => (fi, i2),
        }
    }

    fn check_typing(&self, report: &mut Report) {
        let (c, d) = (self.source.base(), self.target.base());
        for a in c.objects() {
            for b in c.objects() {
                let (x, y) = self.tensorator_type(a, b);
                d.expect_type(
                    report,
                    "tensorator-type",
                    || format!("({}, {})", c.ob_name(a), c.ob_name(b)),
                    self.tensorator(a, b),
                    x,
                    y,
                );
            }
        }
        let (x, y) = self.unitor_type();
        d.expect_type(report, "unitor-type", || "I".to_string(), self.unitor, x, y);
    }

    /// Carrier functoriality, typing and naturality of `φ`, `φ̄`, and the
    /// associativity, left-unit and right-unit diagrams for every object
    /// tuple.
    pub fn check(&self) -> Report {
        let (src, tgt) = (&self.source, &self.target);
        let (c, d) = (src.base(), tgt.base());
        let f = &self.carrier;
        let phi = |a, b| self.tensorator(a, b);
        let t2 = |x, y| tgt.tensor_mor(x, y);
        let fo = |a| f.ob(a);
        let mut report = Report::new();
        report.absorb("carrier", f.check());
        self.check_typing(&mut report);

        for g in c.morphisms() {
            for h in c.morphisms() {
                let (a, b, a2, b2) = (c.dom(g), c.dom(h), c.cod(g), c.cod(h));
                let at = || format!("({}, {})", c.mor_name(g), c.mor_name(h));
                let f_gh = f.mor(src.tensor_mor(g, h));
                let fg_fh = t2(f.mor(g), f.mor(h));
                let (lhs, rhs) = match self.laxity {
                    Laxity::Lax => ([f_gh, phi(a, b)], [phi(a2, b2), fg_fh]),
                    Laxity::Oplax => ([fg_fh, phi(a, b)], [phi(a2, b2), f_gh]),
                };
                d.expect_equal(&mut report, "tensorator-naturality", at, &lhs, &rhs);
            }
        }

        let i = src.unit();
        for a in c.objects() {
            for b in c.objects() {
                for cc in c.objects() {
                    let at = || format!("({}, {}, {})", c.ob_name(a), c.ob_name(b), c.ob_name(cc));
                    let (ab, bc) = (src.tensor_ob(a, b), src.tensor_ob(b, cc));
                    let (fa, fb, fc) = (fo(a), fo(b), fo(cc));
                    match self.laxity {
                        Laxity::Lax => d.expect_equal(
                            &mut report,
                            "monoidal-associativity",
                            at,
                            &[
                                f.mor(src.assoc(a, b, cc)),
                                phi(a, bc),
                                t2(d.id(fa), phi(b, cc)),
                            ],
                            &[phi(ab, cc), t2(phi(a, b), d.id(fc)), tgt.assoc(fa, fb, fc)],
                        ),
                        Laxity::Oplax => d.expect_equal(
                            &mut report,
                            "monoidal-associativity",
                            at,
                            &[
                                t2(phi(a, b), d.id(fc)),
                                phi(ab, cc),
                                f.mor(src.assoc(a, b, cc)),
                            ],
                            &[tgt.assoc(fa, fb, fc), t2(d.id(fa), phi(b, cc)), phi(a, bc)],
                        ),
                    }
                }
            }
            let at = || c.ob_name(a).to_string();
            let fa = fo(a);
            match self.laxity {
                Laxity::Lax => {
                    d.expect_equal(
                        &mut report,
                        "monoidal-left-unit",
                        at,
                        &[
                            f.mor(src.left_unitor(a)),
                            phi(i, a),
                            t2(self.unitor, d.id(fa)),
                        ],
                        &[tgt.left_unitor(fa)],
                    );
                    d.expect_equal(
                        &mut report,
                        "monoidal-right-unit",
                        at,
                        &[
                            f.mor(src.right_unitor(a)),
                            phi(a, i),
                            t2(d.id(fa), self.unitor),
                        ],
                        &[tgt.right_unitor(fa)],
                    );
                }
                Laxity::Oplax => {
                    d.expect_equal(
                        &mut report,
                        "monoidal-left-unit",
                        at,
                        &[tgt.left_unitor(fa), t2(self.unitor, d.id(fa)), phi(i, a)],
                        &[f.mor(src.left_unitor(a))],
                    );
                    d.expect_equal(
                        &mut report,
                        "monoidal-right-unit",
                        at,
                        &[tgt.right_unitor(fa), t2(d.id(fa), self.unitor), phi(a, i)],
                        &[f.mor(src.right_unitor(a))],
                    );
                }
            }
        }
        report
    }
}

/// `G ∘ F`. Lax: `φ″ = G(φ^F) ∘ φ^G_{F,F}` and `φ̄″ = G(φ̄^F) ∘ φ̄^G`;
/// oplax: `φ″ = φ^G_{F,F} ∘ G(φ^F)` and `φ̄″ = φ̄^G ∘ G(φ̄^F)`.
pub fn compose_monoidal_functors(
    g: &MonoidalFunctor,
    f: &MonoidalFunctor,
) -> Result<MonoidalFunctor> {
    if g.laxity != f.laxity {
        return Err(Error::boundary(
            "composite of a lax and an oplax monoidal functor",
        ));
    }
    if g.source != f.target {
        return Err(Error::boundary(
            "monoidal functor composite: target of the first is not the source of the second",
        ));
    }
    let c = f.source.base();
    let e = g.target.base().clone();
    let fc = &f.carrier;
    let pair = |outer: MorId, inner: MorId, at: &dyn Fn() -> String| {
        e.compose(outer, inner).ok_or_else(|| {
            Error::Undefined(format!(
                "{} ∘ {} at {}",
                e.mor_name(outer),
                e.mor_name(inner),
                at()
            ))
        })
    };
    let mut tensorator = Vec::with_capacity(f.tensorator.len());
    for a in c.objects() {
        for b in c.objects() {
            let g_phi = g.carrier.mor(f.tensorator(a, b));
            let phi_g = g.tensorator(fc.ob(a), fc.ob(b));
            let at = || format!("({}, {})", c.ob_name(a), c.ob_name(b));
            tensorator.push(match f.laxity {
                Laxity::Lax => pair(g_phi, phi_g, &at)?,
                Laxity::Oplax => pair(phi_g, g_phi, &at)?,
            });
        }
    }
    let g_bar = g.carrier.mor(f.unitor);
    let unitor = match f.laxity {
        Laxity::Lax => pair(g_bar, g.unitor, &|| "I".to_string())?,
        Laxity::Oplax => pair(g.unitor, g_bar, &|| "I".to_string())?,
    };
    MonoidalFunctor::assemble(
        f.source.clone(),
        g.target.clone(),
        compose_functors(&g.carrier, fc)?,
        f.laxity,
        tensorator,
        unitor,
    )
}

/// A natural transformation between parallel (op)lax monoidal functors.
#[derive(Clone, Debug)]
pub struct MonoidalTransformation {
    source: MonoidalFunctor,
    target: MonoidalFunctor,
    cell: NatTrans,
}

impl MonoidalTransformation {
    pub fn new(
        source: MonoidalFunctor,
        target: MonoidalFunctor,
        components: Vec<MorId>,
    ) -> Result<Self> {
        if source.laxity != target.laxity
            || source.source != target.source
            || source.target != target.target
        {
            return Err(Error::boundary(
                "monoidal transformation between non-parallel functors",
            ));
        }
        let cell = NatTrans::new(source.carrier.clone(), target.carrier.clone(), components)?;
        Ok(MonoidalTransformation {
            source,
            target,
            cell,
        })
    }

    pub fn cell(&self) -> &NatTrans {
        &self.cell
    }

    pub fn source(&self) -> &MonoidalFunctor {
        &self.source
    }

    pub fn target(&self) -> &MonoidalFunctor {
        &self.target
    }

    /// Naturality of the cell, the tensorator square per object pair and the
    /// unitor triangle.
    pub fn check(&self) -> Report {
        let (f, g) = (&self.source, &self.target);
        let (src, tgt) = (&f.source, &f.target);
        let (c, d) = (src.base(), tgt.base());
        let s = &self.cell;
        let mut report = Report::new();
        report.absorb("cell", s.check());
        for a in c.objects() {
            for b in c.objects() {
                let at = || format!("({}, {})", c.ob_name(a), c.ob_name(b));
                let s_ab = s.at(src.tensor_ob(a, b));
                let s_s = tgt.tensor_mor(s.at(a), s.at(b));
                let (lhs, rhs) = match f.laxity {
                    Laxity::Lax => ([s_ab, f.tensorator(a, b)], [g.tensorator(a, b), s_s]),
                    Laxity::Oplax => ([g.tensorator(a, b), s_ab], [s_s, f.tensorator(a, b)]),
                };
                d.expect_equal(
                    &mut report,
                    "monoidal-transformation-tensor",
                    at,
                    &lhs,
                    &rhs,
                );
            }
        }
        let s_i = s.at(src.unit());
        let at = || "I".to_string();
        match f.laxity {
            Laxity::Lax => d.expect_equal(
                &mut report,
                "monoidal-transformation-unit",
                at,
                &[s_i, f.unitor],
                &[g.unitor],
            ),
            Laxity::Oplax => d.expect_equal(
                &mut report,
                "monoidal-transformation-unit",
                at,
                &[g.unitor, s_i],
                &[f.unitor],
            ),
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::FinCat;

    fn chain_max(n: usize) -> MonoidalStructure {
        MonoidalStructure::from_thin_op(Arc::new(FinCat::chain(n)), |a, b| a.max(b), ObjId(0))
            .unwrap()
    }

    /// The endofunctor of a thin closure, with the unique poset cells.
    fn thin_closure(
        ms: &MonoidalStructure,
        map: &[usize],
        laxity: Laxity,
    ) -> Result<MonoidalFunctor> {
        let c = ms.base().clone();
        let carrier = Functor::from_fn(
            c.clone(),
            c.clone(),
            |a| ObjId(map[a.0]),
            |f| c.hom(ObjId(map[c.dom(f).0]), ObjId(map[c.cod(f).0]))[0],
        )?;
        let mut tensorator = Vec::new();
        for a in c.objects() {
            for b in c.objects() {
                let split = ms.tensor_ob(carrier.ob(a), carrier.ob(b));
                let joined = carrier.ob(ms.tensor_ob(a, b));
                let (x, y) = match laxity {
                    Laxity::Lax => (split, joined),
                    Laxity::Oplax => (joined, split),
                };
                tensorator.push(c.hom(x, y).first().copied().unwrap_or(c.id(x)));
            }
        }
        let (i, fi) = (ms.unit(), carrier.ob(ms.unit()));
        let unitor = match laxity {
            Laxity::Lax => c.hom(i, fi).first().copied().unwrap_or(c.id(i)),
            Laxity::Oplax => c.hom(fi, i).first().copied().unwrap_or(c.id(fi)),
        };
        MonoidalFunctor::new(ms.clone(), ms.clone(), carrier, laxity, tensorator, unitor)
    }

    #[test]
    fn identity_is_lax_and_oplax() {
        let ms = chain_max(3);
        assert!(MonoidalFunctor::identity(&ms, Laxity::Lax).check().is_ok());
        assert!(MonoidalFunctor::identity(&ms, Laxity::Oplax)
            .check()
            .is_ok());
    }

    #[test]
    fn closure_is_lax_monoidal() {
        let ms = chain_max(3);
        let cl = thin_closure(&ms, &[1, 1, 2], Laxity::Lax).unwrap();
        assert!(cl.check().is_ok(), "{}", cl.check());
    }

    #[test]
    fn reversed_unitor_is_a_boundary_error() {
        let ms = chain_max(3);
        let cl = thin_closure(&ms, &[1, 1, 2], Laxity::Lax).unwrap();
        let c = ms.base();
        // the lax unitor runs I = 0 → S I = 1; anything out of S I is mistyped
        let reversed = c.hom(ObjId(1), ObjId(1))[0];
        let err = MonoidalFunctor::new(
            ms.clone(),
            ms.clone(),
            cl.carrier().clone(),
            Laxity::Lax,
            cl.tensorator_components().to_vec(),
            reversed,
        );
        assert!(matches!(err, Err(Error::Boundary(_))));
    }

    #[test]
    fn composites_of_lax_functors_are_lax() {
        let ms = chain_max(3);
        let f = thin_closure(&ms, &[1, 1, 2], Laxity::Lax).unwrap();
        let g = thin_closure(&ms, &[2, 2, 2], Laxity::Lax).unwrap();
        let gf = compose_monoidal_functors(&g, &f).unwrap();
        assert!(gf.check().is_ok());
        let id = MonoidalFunctor::identity(&ms, Laxity::Lax);
        assert_eq!(compose_monoidal_functors(&id, &f).unwrap(), f);
    }

    #[test]
    fn unit_as_monoidal_transformation() {
        let ms = chain_max(3);
        let cl = thin_closure(&ms, &[1, 1, 2], Laxity::Lax).unwrap();
        let id = MonoidalFunctor::identity(&ms, Laxity::Lax);
        let c = ms.base();
        let eta = c
            .objects()
            .map(|a| c.hom(a, cl.carrier().ob(a))[0])
            .collect();
        let t = MonoidalTransformation::new(id.clone(), cl.clone(), eta).unwrap();
        assert!(t.check().is_ok());
        let ids = c.objects().map(|a| c.id(a)).collect();
        let t = MonoidalTransformation::new(id.clone(), id, ids).unwrap();
        assert!(t.check().is_ok());
    }
}
