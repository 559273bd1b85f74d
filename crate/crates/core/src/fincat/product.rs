use std::sync::Arc;

use super::{same_category, FinCat, Functor, MorId, NatTrans, ObjId};
use crate::error::{Error, Result};

/// A binary product `C × D` with its projections. Object ids are `(a,b)`,
/// morphism ids `(f,g)`.
#[derive(Clone, Debug)]
pub struct Product {
    pub category: Arc<FinCat>,
    pub left: Arc<FinCat>,
    pub right: Arc<FinCat>,
    pub proj_left: Functor,
    pub proj_right: Functor,
    ob_pairs: Vec<ObjId>,
    mor_pairs: Vec<MorId>,
    ob_split: Vec<(ObjId, ObjId)>,
    mor_split: Vec<(MorId, MorId)>,
}

pub(crate) fn pair_name(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

pub fn product_category(c: &Arc<FinCat>, d: &Arc<FinCat>) -> Product {
    let mut b = FinCat::builder();
    for x in c.objects() {
        for y in d.objects() {
            let p = pair_name(c.ob_name(x), d.ob_name(y));
            b.object(p.clone());
            b.identity(p, pair_name(c.mor_name(c.id(x)), d.mor_name(d.id(y))));
        }
    }
    for f in c.morphisms() {
        for g in d.morphisms() {
            b.morphism(
                pair_name(c.mor_name(f), d.mor_name(g)),
                pair_name(c.ob_name(c.dom(f)), d.ob_name(d.dom(g))),
                pair_name(c.ob_name(c.cod(f)), d.ob_name(d.cod(g))),
            );
        }
    }
    let dt: Vec<_> = d.composition_table().collect();
    for (g1, f1, h1) in c.composition_table() {
        for &(g2, f2, h2) in &dt {
            b.compose(
                pair_name(c.mor_name(g1), d.mor_name(g2)),
                pair_name(c.mor_name(f1), d.mor_name(f2)),
                pair_name(c.mor_name(h1), d.mor_name(h2)),
            );
        }
    }
    let category = Arc::new(
        b.build()
            .expect("product of well-formed categories is well-formed"),
    );

    let (n, m) = (d.object_count(), d.morphism_count());
    let mut ob_pairs = vec![ObjId(0); c.object_count() * n];
    let mut ob_split = vec![(ObjId(0), ObjId(0)); category.object_count()];
    for x in c.objects() {
        for y in d.objects() {
            let p = category
                .object(&pair_name(c.ob_name(x), d.ob_name(y)))
                .expect("pair object exists");
            ob_pairs[x.0 * n + y.0] = p;
            ob_split[p.0] = (x, y);
        }
    }
    let mut mor_pairs = vec![MorId(0); c.morphism_count() * m];
    let mut mor_split = vec![(MorId(0), MorId(0)); category.morphism_count()];
    for f in c.morphisms() {
        for g in d.morphisms() {
            let p = category
                .morphism(&pair_name(c.mor_name(f), d.mor_name(g)))
                .expect("pair morphism exists");
            mor_pairs[f.0 * m + g.0] = p;
            mor_split[p.0] = (f, g);
        }
    }
    let proj_left = Functor::new(
        category.clone(),
        c.clone(),
        ob_split.iter().map(|p| p.0).collect(),
        mor_split.iter().map(|p| p.0).collect(),
    )
    .expect("projection is well-formed");
    let proj_right = Functor::new(
        category.clone(),
        d.clone(),
        ob_split.iter().map(|p| p.1).collect(),
        mor_split.iter().map(|p| p.1).collect(),
    )
    .expect("projection is well-formed");
    Product {
        category,
        left: c.clone(),
        right: d.clone(),
        proj_left,
        proj_right,
        ob_pairs,
        mor_pairs,
        ob_split,
        mor_split,
    }
}

impl Product {
    pub fn pair_ob(&self, a: ObjId, b: ObjId) -> ObjId {
        self.ob_pairs[a.0 * self.right.object_count() + b.0]
    }

    pub fn pair_mor(&self, f: MorId, g: MorId) -> MorId {
        self.mor_pairs[f.0 * self.right.morphism_count() + g.0]
    }

    pub fn split_ob(&self, p: ObjId) -> (ObjId, ObjId) {
        self.ob_split[p.0]
    }

    pub fn split_mor(&self, p: MorId) -> (MorId, MorId) {
        self.mor_split[p.0]
    }

    pub fn factors_are(&self, left: &Arc<FinCat>, right: &Arc<FinCat>) -> bool {
        same_category(&self.left, left) && same_category(&self.right, right)
    }
}

/// `F × G : C × C' → D × D'`.
pub fn product_functor(f: &Functor, g: &Functor, src: &Product, tgt: &Product) -> Result<Functor> {
    if !src.factors_are(f.source(), g.source()) || !tgt.factors_are(f.target(), g.target()) {
        return Err(Error::boundary(
            "product functor: factors do not match the given products",
        ));
    }
    Functor::from_fn(
        src.category.clone(),
        tgt.category.clone(),
        |p| {
            let (a, b) = src.split_ob(p);
            tgt.pair_ob(f.ob(a), g.ob(b))
        },
        |p| {
            let (x, y) = src.split_mor(p);
            tgt.pair_mor(f.mor(x), g.mor(y))
        },
    )
}

/// `σ × τ : F × G ⇒ F' × G'`.
pub fn product_nattrans(
    sigma: &NatTrans,
    tau: &NatTrans,
    src: &Product,
    tgt: &Product,
) -> Result<NatTrans> {
    let source = product_functor(sigma.source(), tau.source(), src, tgt)?;
    let target = product_functor(sigma.target(), tau.target(), src, tgt)?;
    NatTrans::from_fn(source, target, |p| {
        let (a, b) = src.split_ob(p);
        tgt.pair_mor(sigma.at(a), tau.at(b))
    })
}

/// `⟨F, G⟩ : X → C × D`.
pub fn pairing(f: &Functor, g: &Functor, tgt: &Product) -> Result<Functor> {
    if !same_category(f.source(), g.source()) || !tgt.factors_are(f.target(), g.target()) {
        return Err(Error::boundary(
            "pairing: functors do not match the given product",
        ));
    }
    Functor::from_fn(
        f.source().clone(),
        tgt.category.clone(),
        |a| tgt.pair_ob(f.ob(a), g.ob(a)),
        |m| tgt.pair_mor(f.mor(m), g.mor(m)),
    )
}

/// The opposite category. Ids are kept, so `op(op(C)) == C`.
pub fn opposite_category(c: &FinCat) -> FinCat {
    let mut b = FinCat::builder();
    for a in c.objects() {
        b.object(c.ob_name(a));
        b.identity(c.ob_name(a), c.mor_name(c.id(a)));
    }
    for f in c.morphisms() {
        b.morphism(c.mor_name(f), c.ob_name(c.cod(f)), c.ob_name(c.dom(f)));
    }
    for (g, f, h) in c.composition_table() {
        b.compose(c.mor_name(f), c.mor_name(g), c.mor_name(h));
    }
    b.build()
        .expect("opposite of a well-formed category is well-formed")
}

/// `F^op : C^op → D^op`, given the two opposite categories.
pub fn opposite_functor(
    f: &Functor,
    source_op: Arc<FinCat>,
    target_op: Arc<FinCat>,
) -> Result<Functor> {
    let (c, d) = (f.source(), f.target());
    Functor::from_fn(
        source_op.clone(),
        target_op.clone(),
        |a| {
            target_op
                .object(d.ob_name(f.ob(c.object(source_op.ob_name(a)).unwrap())))
                .unwrap()
        },
        |m| {
            target_op
                .morphism(d.mor_name(f.mor(c.morphism(source_op.mor_name(m)).unwrap())))
                .unwrap()
        },
    )
}

/// `τ^op : G^op ⇒ F^op` for `τ : F ⇒ G`, given `F^op` and `G^op`.
pub fn opposite_nattrans(
    tau: &NatTrans,
    source_op: &Functor,
    target_op: &Functor,
) -> Result<NatTrans> {
    let (c, d) = (tau.domain(), tau.codomain());
    let (cop, dop) = (target_op.source().clone(), target_op.target().clone());
    NatTrans::from_fn(target_op.clone(), source_op.clone(), |a| {
        let orig = c.object(cop.ob_name(a)).expect("same object ids");
        dop.morphism(d.mor_name(tau.at(orig)))
            .expect("same morphism ids")
    })
}

pub const TERMINAL_OBJECT: &str = "*";

pub fn terminal_category() -> FinCat {
    FinCat::builder()
        .object(TERMINAL_OBJECT)
        .morphism("id_*", TERMINAL_OBJECT, TERMINAL_OBJECT)
        .identity(TERMINAL_OBJECT, "id_*")
        .compose("id_*", "id_*", "id_*")
        .build()
        .expect("terminal category is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain2_squared_counts() {
        let c = Arc::new(FinCat::chain(2));
        let p = product_category(&c, &c);
        assert_eq!(p.category.object_count(), 4);
        // oracle: hom-sets of the product poset, counted by enumeration
        let mut count = 0;
        for a in 0..2 {
            for b in 0..2 {
                for x in 0..2 {
                    for y in 0..2 {
                        if a <= x && b <= y {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 9);
        assert_eq!(p.category.morphism_count(), count);
        assert!(p.category.check().is_ok());
        assert!(p.proj_left.check().is_ok());
        assert!(p.proj_right.check().is_ok());
    }

    #[test]
    fn chain3_times_z2() {
        let c = Arc::new(FinCat::chain(3));
        let z = Arc::new(FinCat::cyclic(2));
        let p = product_category(&c, &z);
        assert_eq!(p.category.object_count(), 3);
        assert_eq!(p.category.morphism_count(), 6 * 2);
        assert!(p.category.check().is_ok());
    }

    #[test]
    fn pair_tables_round_trip() {
        let c = Arc::new(FinCat::chain(3));
        let d = Arc::new(FinCat::chain(2));
        let p = product_category(&c, &d);
        for f in c.morphisms() {
            for g in d.morphisms() {
                assert_eq!(p.split_mor(p.pair_mor(f, g)), (f, g));
            }
        }
    }

    #[test]
    fn opposite_reverses_and_is_involutive() {
        let c = FinCat::chain(3);
        let op = opposite_category(&c);
        assert!(op.check().is_ok());
        let f = op.morphism("0<=1").unwrap();
        assert_eq!(op.ob_name(op.dom(f)), "1");
        assert_eq!(op.ob_name(op.cod(f)), "0");
        assert_eq!(opposite_category(&op), c);
        let z = FinCat::cyclic(2);
        assert_eq!(opposite_category(&opposite_category(&z)), z);
    }

    #[test]
    fn terminal_is_a_category() {
        let t = terminal_category();
        assert_eq!((t.object_count(), t.morphism_count()), (1, 1));
        assert!(t.check().is_ok());
    }
}
