use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{same_category, FinCat, MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::Report;

/// A functor between finite categories, stored as total object and morphism
/// maps. Functoriality is checked by [`Functor::check`], not enforced.
#[derive(Clone)]
pub struct Functor {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    ob_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.ob_map == other.ob_map
            && self.mor_map == other.mor_map
            && same_category(&self.source, &other.source)
            && same_category(&self.target, &other.target)
    }
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let obs: Vec<String> = self
            .source
            .objects()
            .map(|a| {
                format!(
                    "{}->{}",
                    self.source.ob_name(a),
                    self.target.ob_name(self.ob(a))
                )
            })
            .collect();
        f.debug_struct("Functor")
            .field("ob_map", &obs)
            .finish_non_exhaustive()
    }
}

impl Functor {
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        ob_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Result<Functor> {
        if ob_map.len() != source.object_count() || mor_map.len() != source.morphism_count() {
            return Err(Error::structural(format!(
                "functor maps cover {} objects / {} morphisms, source has {} / {}",
                ob_map.len(),
                mor_map.len(),
                source.object_count(),
                source.morphism_count()
            )));
        }
        if let Some(a) = ob_map.iter().find(|a| a.0 >= target.object_count()) {
            return Err(Error::structural(format!(
                "object index {} out of range",
                a.0
            )));
        }
        if let Some(f) = mor_map.iter().find(|f| f.0 >= target.morphism_count()) {
            return Err(Error::structural(format!(
                "morphism index {} out of range",
                f.0
            )));
        }
        Ok(Functor {
            source,
            target,
            ob_map,
            mor_map,
        })
    }

    pub fn from_fn(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        ob: impl Fn(ObjId) -> ObjId,
        mor: impl Fn(MorId) -> MorId,
    ) -> Result<Functor> {
        let ob_map = source.objects().map(&ob).collect();
        let mor_map = source.morphisms().map(&mor).collect();
        Functor::new(source, target, ob_map, mor_map)
    }

    /// Builds a functor from name-keyed maps; every source object and
    /// morphism must be covered.
    pub fn from_names(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        ob: &BTreeMap<String, String>,
        mor: &BTreeMap<String, String>,
    ) -> Result<Functor> {
        let mut ob_map = Vec::with_capacity(source.object_count());
        for a in source.objects() {
            let name = source.ob_name(a);
            let image = ob
                .get(name)
                .ok_or_else(|| Error::structural(format!("object `{name}` is not mapped")))?;
            ob_map.push(target.object(image).ok_or_else(|| {
                Error::structural(format!("`{name}` maps to unknown object `{image}`"))
            })?);
        }
        let mut mor_map = Vec::with_capacity(source.morphism_count());
        for f in source.morphisms() {
            let name = source.mor_name(f);
            let image = mor
                .get(name)
                .ok_or_else(|| Error::structural(format!("morphism `{name}` is not mapped")))?;
            mor_map.push(target.morphism(image).ok_or_else(|| {
                Error::structural(format!("`{name}` maps to unknown morphism `{image}`"))
            })?);
        }
        for key in ob.keys() {
            if source.object(key).is_none() {
                return Err(Error::structural(format!(
                    "map names unknown source object `{key}`"
                )));
            }
        }
        for key in mor.keys() {
            if source.morphism(key).is_none() {
                return Err(Error::structural(format!(
                    "map names unknown source morphism `{key}`"
                )));
            }
        }
        Functor::new(source, target, ob_map, mor_map)
    }

    pub fn identity(c: Arc<FinCat>) -> Functor {
        let ob_map = c.objects().collect();
        let mor_map = c.morphisms().collect();
        Functor {
            source: c.clone(),
            target: c,
            ob_map,
            mor_map,
        }
    }

    /// The functor from the terminal category picking out `a`.
    pub fn constant_object(
        terminal: Arc<FinCat>,
        target: Arc<FinCat>,
        a: ObjId,
    ) -> Result<Functor> {
        let id = target.id(a);
        Functor::from_fn(terminal, target, |_| a, |_| id)
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn ob(&self, a: ObjId) -> ObjId {
        self.ob_map[a.0]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    pub fn ob_map(&self) -> &[ObjId] {
        &self.ob_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    /// Name-keyed view of the maps, for serialization.
    pub fn named_maps(&self) -> (BTreeMap<String, String>, BTreeMap<String, String>) {
        let ob = self
            .source
            .objects()
            .map(|a| {
                (
                    self.source.ob_name(a).to_string(),
                    self.target.ob_name(self.ob(a)).to_string(),
                )
            })
            .collect();
        let mor = self
            .source
            .morphisms()
            .map(|f| {
                (
                    self.source.mor_name(f).to_string(),
                    self.target.mor_name(self.mor(f)).to_string(),
                )
            })
            .collect();
        (ob, mor)
    }

    /// A copy with one morphism image replaced.
    pub fn with_mor(&self, f: MorId, image: MorId) -> Functor {
        let mut out = self.clone();
        out.mor_map[f.0] = image;
        out
    }

    pub fn with_ob(&self, a: ObjId, image: ObjId) -> Functor {
        let mut out = self.clone();
        out.ob_map[a.0] = image;
        out
    }

    /// Boundary preservation, identities and composites.
    pub fn check(&self) -> Report {
        let (c, d) = (&*self.source, &*self.target);
        let mut report = Report::new();
        for f in c.morphisms() {
            let image = self.mor(f);
            d.expect_type(
                &mut report,
                "functor-boundary",
                || c.mor_name(f).to_string(),
                image,
                self.ob(c.dom(f)),
                self.ob(c.cod(f)),
            );
        }
        for a in c.objects() {
            let (l, r) = (self.mor(c.id(a)), d.id(self.ob(a)));
            if l != r {
                report.violation(
                    "functor-identity",
                    c.ob_name(a),
                    d.mor_name(l),
                    d.mor_name(r),
                );
            }
        }
        let mut table: Vec<_> = c.composition_table().collect();
        table.sort();
        for (g, f, gf) in table {
            let lhs = Some(self.mor(gf));
            let rhs = d.compose(self.mor(g), self.mor(f));
            if lhs != rhs {
                report.violation(
                    "functor-composition",
                    format!("({}, {})", c.mor_name(g), c.mor_name(f)),
                    d.render(lhs),
                    d.render(rhs),
                );
            }
        }
        report
    }
}

/// `g ∘ f`.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if !same_category(&f.target, &g.source) {
        return Err(Error::boundary(
            "functor composite: target of the first is not the source of the second",
        ));
    }
    Ok(Functor {
        source: f.source.clone(),
        target: g.target.clone(),
        ob_map: f.ob_map.iter().map(|&a| g.ob(a)).collect(),
        mor_map: f.mor_map.iter().map(|&m| g.mor(m)).collect(),
    })
}

/// A natural transformation between parallel functors, stored as its
/// component family. Typing and naturality are checked by
/// [`NatTrans::check`].
#[derive(Clone, Debug, PartialEq)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    components: Vec<MorId>,
}

impl NatTrans {
    pub fn new(source: Functor, target: Functor, components: Vec<MorId>) -> Result<NatTrans> {
        if !same_category(&source.source, &target.source)
            || !same_category(&source.target, &target.target)
        {
            return Err(Error::boundary(
                "natural transformation between non-parallel functors",
            ));
        }
        if components.len() != source.source.object_count() {
            return Err(Error::structural(format!(
                "{} components for {} objects",
                components.len(),
                source.source.object_count()
            )));
        }
        if let Some(m) = components
            .iter()
            .find(|m| m.0 >= source.target.morphism_count())
        {
            return Err(Error::structural(format!(
                "component index {} out of range",
                m.0
            )));
        }
        Ok(NatTrans {
            source,
            target,
            components,
        })
    }

    pub fn from_fn(
        source: Functor,
        target: Functor,
        component: impl Fn(ObjId) -> MorId,
    ) -> Result<NatTrans> {
        let components = source.source.objects().map(component).collect();
        NatTrans::new(source, target, components)
    }

    pub fn from_names(
        source: Functor,
        target: Functor,
        components: &BTreeMap<String, String>,
    ) -> Result<NatTrans> {
        let (c, d) = (source.source.clone(), source.target.clone());
        for key in components.keys() {
            if c.object(key).is_none() {
                return Err(Error::structural(format!(
                    "component at unknown object `{key}`"
                )));
            }
        }
        let comps = c
            .objects()
            .map(|a| {
                let name = c.ob_name(a);
                let m = components
                    .get(name)
                    .ok_or_else(|| Error::structural(format!("no component at `{name}`")))?;
                d.morphism(m).ok_or_else(|| {
                    Error::structural(format!("component at `{name}` is unknown morphism `{m}`"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        NatTrans::new(source, target, comps)
    }

    pub fn identity(f: &Functor) -> NatTrans {
        let components = f.source.objects().map(|a| f.target.id(f.ob(a))).collect();
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components,
        }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    /// The category the transformation is indexed by.
    pub fn domain(&self) -> &Arc<FinCat> {
        &self.source.source
    }

    /// The category the components live in.
    pub fn codomain(&self) -> &Arc<FinCat> {
        &self.source.target
    }

    pub fn at(&self, a: ObjId) -> MorId {
        self.components[a.0]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn named_components(&self) -> BTreeMap<String, String> {
        let (c, d) = (self.domain(), self.codomain());
        c.objects()
            .map(|a| (c.ob_name(a).to_string(), d.mor_name(self.at(a)).to_string()))
            .collect()
    }

    pub fn with_component(&self, a: ObjId, m: MorId) -> NatTrans {
        let mut out = self.clone();
        out.components[a.0] = m;
        out
    }

    /// Component typing `τ_A : F A → G A` and naturality
    /// `G(f) ∘ τ_A = τ_B ∘ F(f)` for every `f : A → B`.
    pub fn check(&self) -> Report {
        let (c, d) = (&**self.domain(), &**self.codomain());
        let (f_, g_) = (&self.source, &self.target);
        let mut report = Report::new();
        for a in c.objects() {
            d.expect_type(
                &mut report,
                "component-type",
                || c.ob_name(a).to_string(),
                self.at(a),
                f_.ob(a),
                g_.ob(a),
            );
        }
        for f in c.morphisms() {
            let (a, b) = (c.dom(f), c.cod(f));
            d.expect_equal(
                &mut report,
                "naturality",
                || c.mor_name(f).to_string(),
                &[g_.mor(f), self.at(a)],
                &[self.at(b), f_.mor(f)],
            );
        }
        report
    }
}

/// `F(τ) : F∘G ⇒ F∘H` for `τ : G ⇒ H`.
pub fn whisker_left(f: &Functor, tau: &NatTrans) -> Result<NatTrans> {
    let source = compose_functors(f, &tau.source)?;
    let target = compose_functors(f, &tau.target)?;
    let components = tau.components.iter().map(|&m| f.mor(m)).collect();
    NatTrans::new(source, target, components)
}

/// `τ_F : G∘F ⇒ H∘F` for `τ : G ⇒ H`.
pub fn whisker_right(tau: &NatTrans, f: &Functor) -> Result<NatTrans> {
    let source = compose_functors(&tau.source, f)?;
    let target = compose_functors(&tau.target, f)?;
    let components = f.ob_map.iter().map(|&a| tau.at(a)).collect();
    NatTrans::new(source, target, components)
}

/// `σ ∘ τ`, componentwise.
pub fn vertical_compose(sigma: &NatTrans, tau: &NatTrans) -> Result<NatTrans> {
    if tau.target != sigma.source {
        return Err(Error::boundary(
            "vertical composite: target of the inner transformation is not the source of the outer",
        ));
    }
    let d = tau.codomain().clone();
    let components = tau
        .domain()
        .objects()
        .map(|a| {
            d.compose(sigma.at(a), tau.at(a)).ok_or_else(|| {
                Error::Undefined(format!(
                    "{} ∘ {} at {}",
                    d.mor_name(sigma.at(a)),
                    d.mor_name(tau.at(a)),
                    tau.domain().ob_name(a)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    NatTrans::new(tau.source.clone(), sigma.target.clone(), components)
}
