//! Finite categories given by explicit object and morphism sets and a
//! composition table.
//!
//! A [`FinCat`] is built from string identifiers. Construction only checks
//! that the data is well-formed (every identifier resolves, every object has
//! an identity); the category laws are checked separately by
//! [`FinCat::check`], so deliberately broken categories can be represented
//! and reported on.

mod functor;
mod iso;
mod product;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::{Report, UNDEFINED};

pub use functor::{
    compose_functors, vertical_compose, whisker_left, whisker_right, Functor, NatTrans,
};
pub use iso::{find_isomorphism, Isomorphism, DEFAULT_MAX_OBJECTS};
pub use product::{
    opposite_category, opposite_functor, opposite_nattrans, pairing, product_category,
    product_functor, product_nattrans, terminal_category, Product,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

#[derive(Clone)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    /// `compose[g]` lists `(f, g ∘ f)` sorted by `f`.
    compose: Vec<Vec<(MorId, MorId)>>,
    object_index: HashMap<String, ObjId>,
    morphism_index: HashMap<String, MorId>,
    hom: Vec<Vec<MorId>>,
    by_dom: Vec<Vec<MorId>>,
    by_cod: Vec<Vec<MorId>>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.compose == other.compose
    }
}

impl Eq for FinCat {}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCat")
            .field("objects", &self.objects)
            .field("morphisms", &self.morphisms.len())
            .field(
                "composites",
                &self.compose.iter().map(Vec::len).sum::<usize>(),
            )
            .finish()
    }
}

/// Collects string-identified data for a [`FinCat`].
///
/// Objects and morphisms are stored in id order regardless of insertion
/// order, so two builders fed the same data in different orders produce equal
/// categories.
#[derive(Debug, Clone, Default)]
pub struct FinCatBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    identities: Vec<(String, String)>,
    compose: Vec<(String, String, String)>,
}

impl FinCatBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, id: impl Into<String>) -> &mut Self {
        self.objects.push(id.into());
        self
    }

    pub fn morphism(
        &mut self,
        id: impl Into<String>,
        dom: impl Into<String>,
        cod: impl Into<String>,
    ) -> &mut Self {
        self.morphisms.push((id.into(), dom.into(), cod.into()));
        self
    }

    pub fn identity(
        &mut self,
        object: impl Into<String>,
        morphism: impl Into<String>,
    ) -> &mut Self {
        self.identities.push((object.into(), morphism.into()));
        self
    }

    /// Records `g ∘ f = gf`.
    pub fn compose(
        &mut self,
        g: impl Into<String>,
        f: impl Into<String>,
        gf: impl Into<String>,
    ) -> &mut Self {
        self.compose.push((g.into(), f.into(), gf.into()));
        self
    }

    pub fn build(&self) -> Result<FinCat> {
        let mut objects = self.objects.clone();
        objects.sort();
        if let Some(w) = objects.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::structural(format!("duplicate object id `{}`", w[0])));
        }
        let object_index: HashMap<String, ObjId> = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), ObjId(i)))
            .collect();
        let resolve_obj = |name: &str, ctx: &str| {
            object_index.get(name).copied().ok_or_else(|| {
                Error::structural(format!("{ctx} refers to unknown object `{name}`"))
            })
        };

        let mut raw = self.morphisms.clone();
        raw.sort();
        if let Some(w) = raw.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::structural(format!(
                "duplicate morphism id `{}`",
                w[0].0
            )));
        }
        let mut morphisms = Vec::with_capacity(raw.len());
        for (id, dom, cod) in &raw {
            let ctx = format!("morphism `{id}`");
            morphisms.push(Morphism {
                id: id.clone(),
                dom: resolve_obj(dom, &ctx)?,
                cod: resolve_obj(cod, &ctx)?,
            });
        }
        let morphism_index: HashMap<String, MorId> = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.id.clone(), MorId(i)))
            .collect();
        let resolve_mor = |name: &str, ctx: &str| {
            morphism_index.get(name).copied().ok_or_else(|| {
                Error::structural(format!("{ctx} refers to unknown morphism `{name}`"))
            })
        };

        let mut identities: Vec<Option<MorId>> = vec![None; objects.len()];
        for (obj, mor) in &self.identities {
            let ctx = format!("identity of `{obj}`");
            let a = resolve_obj(obj, &ctx)?;
            let m = resolve_mor(mor, &ctx)?;
            match identities[a.0] {
                Some(prev) if prev != m => {
                    return Err(Error::structural(format!(
                        "object `{obj}` has two identities `{}` and `{mor}`",
                        morphisms[prev.0].id
                    )))
                }
                _ => identities[a.0] = Some(m),
            }
        }
        let identities = identities
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                m.ok_or_else(|| {
                    Error::structural(format!("object `{}` has no identity", objects[i]))
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let mut compose = HashMap::with_capacity(self.compose.len());
        for (g, f, gf) in &self.compose {
            let ctx = format!("composite `{g} ∘ {f}`");
            let key = (resolve_mor(g, &ctx)?, resolve_mor(f, &ctx)?);
            let val = resolve_mor(gf, &ctx)?;
            if let Some(prev) = compose.insert(key, val) {
                if prev != val {
                    return Err(Error::structural(format!(
                        "{ctx} given twice with different results `{}` and `{gf}`",
                        morphisms[prev.0].id
                    )));
                }
            }
        }

        Ok(FinCat::assemble(
            objects,
            morphisms,
            identities,
            compose,
            object_index,
            morphism_index,
        ))
    }
}

impl FinCat {
    pub fn builder() -> FinCatBuilder {
        FinCatBuilder::new()
    }

    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        compose: HashMap<(MorId, MorId), MorId>,
        object_index: HashMap<String, ObjId>,
        morphism_index: HashMap<String, MorId>,
    ) -> FinCat {
        let mut table = vec![Vec::new(); morphisms.len()];
        for ((g, f), gf) in compose {
            table[g.0].push((f, gf));
        }
        for row in &mut table {
            row.sort_unstable();
        }
        let compose = table;
        let n = objects.len();
        let mut hom = vec![Vec::new(); n * n];
        let mut by_dom = vec![Vec::new(); n];
        let mut by_cod = vec![Vec::new(); n];
        for (i, m) in morphisms.iter().enumerate() {
            hom[m.dom.0 * n + m.cod.0].push(MorId(i));
            by_dom[m.dom.0].push(MorId(i));
            by_cod[m.cod.0].push(MorId(i));
        }
        FinCat {
            objects,
            morphisms,
            identities,
            compose,
            object_index,
            morphism_index,
            hom,
            by_dom,
            by_cod,
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjId> + Clone {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = MorId> + Clone {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object(&self, name: &str) -> Option<ObjId> {
        self.object_index.get(name).copied()
    }

    pub fn morphism(&self, name: &str) -> Option<MorId> {
        self.morphism_index.get(name).copied()
    }

    pub fn ob_name(&self, a: ObjId) -> &str {
        &self.objects[a.0]
    }

    pub fn mor_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].id
    }

    pub fn mor(&self, f: MorId) -> &Morphism {
        &self.morphisms[f.0]
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].cod
    }

    pub fn id(&self, a: ObjId) -> MorId {
        self.identities[a.0]
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.hom[a.0 * self.objects.len() + b.0]
    }

    /// Morphisms with domain `a`.
    pub fn outgoing(&self, a: ObjId) -> &[MorId] {
        &self.by_dom[a.0]
    }

    /// Morphisms with codomain `a`.
    pub fn incoming(&self, a: ObjId) -> &[MorId] {
        &self.by_cod[a.0]
    }

    /// `g ∘ f` as recorded in the table.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        let row = self.compose.get(g.0)?;
        row.binary_search_by_key(&f, |&(f2, _)| f2)
            .ok()
            .map(|i| row[i].1)
    }

    /// Composes a path written outermost first: `[h, g, f]` is `h ∘ g ∘ f`.
    pub fn compose_path(&self, path: &[MorId]) -> Option<MorId> {
        let (&last, rest) = path.split_last()?;
        rest.iter()
            .rev()
            .try_fold(last, |acc, &g| self.compose(g, acc))
    }

    /// All recorded composites as `(g, f, g ∘ f)`, sorted.
    pub fn composition_table(&self) -> impl Iterator<Item = (MorId, MorId, MorId)> + '_ {
        self.compose
            .iter()
            .enumerate()
            .flat_map(|(g, row)| row.iter().map(move |&(f, h)| (MorId(g), f, h)))
    }

    pub fn is_thin(&self) -> bool {
        self.hom.iter().all(|h| h.len() <= 1)
    }

    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (a, b) = (self.dom(f), self.cod(f));
        self.hom(b, a).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.id(a)) && self.compose(f, g) == Some(self.id(b))
        })
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    pub(crate) fn render(&self, f: Option<MorId>) -> String {
        match f {
            Some(f) => self.mor_name(f).to_string(),
            None => UNDEFINED.to_string(),
        }
    }

    /// Records a violation unless both paths compose to the same morphism.
    pub(crate) fn expect_equal(
        &self,
        report: &mut Report,
        law: &str,
        at: impl FnOnce() -> String,
        lhs: &[MorId],
        rhs: &[MorId],
    ) {
        let l = self.compose_path(lhs);
        let r = self.compose_path(rhs);
        if l.is_none() || l != r {
            report.violation(law, at(), self.render(l), self.render(r));
        }
    }

    /// Records a violation unless `f : a → b`.
    pub(crate) fn expect_type(
        &self,
        report: &mut Report,
        law: &str,
        at: impl FnOnce() -> String,
        f: MorId,
        a: ObjId,
        b: ObjId,
    ) -> bool {
        let m = self.mor(f);
        if m.dom == a && m.cod == b {
            return true;
        }
        report.violation(
            law,
            at(),
            format!(
                "{} : {} -> {}",
                m.id,
                self.ob_name(m.dom),
                self.ob_name(m.cod)
            ),
            format!("expected {} -> {}", self.ob_name(a), self.ob_name(b)),
        );
        false
    }

    /// Checks the category laws: identity typing, totality of composition on
    /// composable pairs (and only there), composite boundaries, both unit laws
    /// and associativity on every composable triple.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        for a in self.objects() {
            let i = self.id(a);
            self.expect_type(
                &mut report,
                "identity-type",
                || self.ob_name(a).to_string(),
                i,
                a,
                a,
            );
        }

        for (g, f, h) in self.composition_table() {
            let pair = || format!("({}, {})", self.mor_name(g), self.mor_name(f));
            if self.cod(f) != self.dom(g) {
                report.violation(
                    "composition-domain",
                    pair(),
                    self.mor_name(h),
                    "no composite expected",
                );
                continue;
            }
            if self.dom(h) != self.dom(f) || self.cod(h) != self.cod(g) {
                let want = format!(
                    "{} -> {}",
                    self.ob_name(self.dom(f)),
                    self.ob_name(self.cod(g))
                );
                let got = format!(
                    "{} : {} -> {}",
                    self.mor_name(h),
                    self.ob_name(self.dom(h)),
                    self.ob_name(self.cod(h))
                );
                report.violation("composite-boundary", pair(), got, want);
            }
        }

        for f in self.morphisms() {
            for &g in self.outgoing(self.cod(f)) {
                if self.compose(g, f).is_none() {
                    report.violation(
                        "composition-total",
                        format!("({}, {})", self.mor_name(g), self.mor_name(f)),
                        UNDEFINED,
                        "a composite",
                    );
                }
            }
        }

        for f in self.morphisms() {
            let (a, b) = (self.dom(f), self.cod(f));
            let at = || format!("({}, {})", self.mor_name(self.id(b)), self.mor_name(f));
            self.expect_equal(&mut report, "left-unit", at, &[self.id(b), f], &[f]);
            let at = || format!("({}, {})", self.mor_name(f), self.mor_name(self.id(a)));
            self.expect_equal(&mut report, "right-unit", at, &[f, self.id(a)], &[f]);
        }

        for f in self.morphisms() {
            for &g in self.outgoing(self.cod(f)) {
                let gf = self.compose(g, f);
                for &h in self.outgoing(self.cod(g)) {
                    let lhs = gf.and_then(|gf| self.compose(h, gf));
                    let rhs = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                    if lhs.is_none() || lhs != rhs {
                        report.violation(
                            "associativity",
                            format!(
                                "({}, {}, {})",
                                self.mor_name(h),
                                self.mor_name(g),
                                self.mor_name(f)
                            ),
                            self.render(lhs),
                            self.render(rhs),
                        );
                    }
                }
            }
        }
        report
    }

    /// A thin category on `objects` with a morphism `a<=b` whenever
    /// `leq(a, b)`. `leq` must be a preorder for the result to pass
    /// [`FinCat::check`].
    pub fn preorder<S: AsRef<str>>(
        objects: &[S],
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<FinCat> {
        let name = |i: usize, j: usize| format!("{}<={}", objects[i].as_ref(), objects[j].as_ref());
        let mut b = FinCat::builder();
        let n = objects.len();
        for (i, o) in objects.iter().enumerate() {
            b.object(o.as_ref());
            b.identity(o.as_ref(), name(i, i));
        }
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    b.morphism(name(i, j), objects[i].as_ref(), objects[j].as_ref());
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if leq(i, j) && leq(j, k) && leq(i, k) {
                        b.compose(name(j, k), name(i, j), name(i, k));
                    }
                }
            }
        }
        b.build()
    }

    /// The chain `0 ≤ 1 ≤ … ≤ n-1`.
    pub fn chain(n: usize) -> FinCat {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        FinCat::preorder(&objects, |i, j| i <= j).expect("a chain is well-formed")
    }

    /// The one-object category of a monoid. `mul[i][j]` is the index of
    /// `elements[i] · elements[j]`, read as the composite `elements[i] ∘
    /// elements[j]`; `unit` indexes the neutral element.
    pub fn monoid<S: AsRef<str>>(
        object: &str,
        elements: &[S],
        mul: &[Vec<usize>],
        unit: usize,
    ) -> Result<FinCat> {
        let mut b = FinCat::builder();
        b.object(object);
        b.identity(object, elements[unit].as_ref());
        for e in elements {
            b.morphism(e.as_ref(), object, object);
        }
        for (i, row) in mul.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                let (g, f, gf) = (
                    &elements[i],
                    &elements[j],
                    elements.get(k).ok_or_else(|| {
                        Error::structural(format!("product index {k} out of range"))
                    })?,
                );
                b.compose(g.as_ref(), f.as_ref(), gf.as_ref());
            }
        }
        b.build()
    }

    /// The cyclic group of order `n` as a one-object category; elements are
    /// named `e`, `g`, `g2`, … (`s` for the generator when `n = 2`).
    pub fn cyclic(n: usize) -> FinCat {
        let elements: Vec<String> = (0..n)
            .map(|k| match (n, k) {
                (_, 0) => "e".to_string(),
                (2, 1) => "s".to_string(),
                (_, 1) => "g".to_string(),
                (_, k) => format!("g{k}"),
            })
            .collect();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FinCat::monoid("*", &elements, &mul, 0).expect("a cyclic group is well-formed")
    }
}

/// Same category, by pointer or by content.
pub fn same_category(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3_corrupted() -> FinCat {
        let objects = ["0", "1", "2"];
        let name = |i: usize, j: usize| format!("{}<={}", objects[i], objects[j]);
        let mut b = FinCat::builder();
        for (i, o) in objects.iter().enumerate() {
            b.object(*o).identity(*o, name(i, i));
        }
        for i in 0..3 {
            for j in i..3 {
                b.morphism(name(i, j), objects[i], objects[j]);
            }
        }
        for i in 0..3 {
            for j in i..3 {
                for k in j..3 {
                    let gf = if (i, j, k) == (0, 0, 1) {
                        name(0, 2)
                    } else {
                        name(i, k)
                    };
                    b.compose(name(j, k), name(i, j), gf);
                }
            }
        }
        b.build().unwrap()
    }

    #[test]
    fn chain3_is_a_category() {
        let c = FinCat::chain(3);
        assert_eq!(c.object_count(), 3);
        assert_eq!(c.morphism_count(), 6);
        assert!(c.check().is_ok(), "{}", c.check());
        assert!(c.is_thin());
    }

    #[test]
    fn corrupted_unit_is_named() {
        let c = chain3_corrupted();
        let report = c.check();
        let units: Vec<_> = report
            .violations()
            .iter()
            .filter(|v| v.law.ends_with("-unit"))
            .collect();
        assert_eq!(units.len(), 1, "{report}");
        assert_eq!(units[0].law, "right-unit");
        assert_eq!(units[0].at, "(0<=1, 0<=0)");
    }

    #[test]
    fn z2_is_a_category() {
        let c = FinCat::cyclic(2);
        assert_eq!(c.morphism_count(), 2);
        assert!(c.check().is_ok());
        let s = c.morphism("s").unwrap();
        assert_eq!(c.compose(s, s), c.morphism("e"));
        assert_eq!(c.inverse(s), Some(s));
    }

    #[test]
    fn structural_errors_are_not_law_violations() {
        let err = FinCat::builder()
            .object("a")
            .morphism("f", "a", "b")
            .identity("a", "f")
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::Structural(_)), "{err}");

        let err = FinCat::builder().object("a").build().unwrap_err();
        assert!(err.to_string().contains("no identity"));

        let err = FinCat::builder()
            .object("a")
            .object("a")
            .build()
            .unwrap_err();
        assert!(err.to_string().contains("duplicate object"));
    }

    #[test]
    fn missing_composite_is_reported() {
        let c = FinCat::builder()
            .object("a")
            .morphism("1", "a", "a")
            .morphism("x", "a", "a")
            .identity("a", "1")
            .compose("1", "1", "1")
            .compose("1", "x", "x")
            .compose("x", "1", "x")
            .build()
            .unwrap();
        let r = c.check();
        assert!(r.has_law("composition-total"));
        assert!(r.violations().iter().any(|v| v.at == "(x, x)"));
    }

    #[test]
    fn builder_order_does_not_matter() {
        let a = FinCat::preorder(&["x", "y"], |i, j| i <= j).unwrap();
        let b = FinCat::builder()
            .object("y")
            .object("x")
            .morphism("x<=y", "x", "y")
            .morphism("y<=y", "y", "y")
            .morphism("x<=x", "x", "x")
            .identity("y", "y<=y")
            .identity("x", "x<=x")
            .compose("y<=y", "x<=y", "x<=y")
            .compose("x<=y", "x<=x", "x<=y")
            .compose("x<=x", "x<=x", "x<=x")
            .compose("y<=y", "y<=y", "y<=y")
            .build()
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn compose_path_reads_outermost_first() {
        let c = FinCat::chain(3);
        let f = c.morphism("0<=1").unwrap();
        let g = c.morphism("1<=2").unwrap();
        assert_eq!(c.compose_path(&[g, f]), c.morphism("0<=2"));
        assert_eq!(c.compose_path(&[f, g]), None);
        assert_eq!(c.compose_path(&[]), None);
    }
}
