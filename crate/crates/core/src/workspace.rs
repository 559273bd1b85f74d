//! The `catkit-ff/1` file format and the named registry it loads into.
//!
//! A file is a JSON object with the keys `categories`, `functors`,
//! `nattrans`, `monads`, `monoidal` and `tuples`, each an array of entities
//! carrying a unique `name`. Entities refer to each other by name and to
//! objects and morphisms by their ids. Saving sorts every key and every
//! array, so a saved file is canonical and loading then saving it again
//! reproduces it byte for byte.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{FinCat, Functor, MorId, NatTrans, ObjId};
use crate::monad::{Laxity, Monad};
use crate::monmonad::MonoidalMonadTuple;
use crate::monoidal::{Braiding, MonoidalStructure};

pub const FORMAT_VERSION: &str = "catkit-ff/1";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileModel {
    #[serde(default)]
    pub categories: Vec<CategoryModel>,
    #[serde(default)]
    pub functors: Vec<FunctorModel>,
    #[serde(default)]
    pub nattrans: Vec<NatTransModel>,
    #[serde(default)]
    pub monads: Vec<MonadModel>,
    #[serde(default)]
    pub monoidal: Vec<MonoidalModel>,
    #[serde(default)]
    pub tuples: Vec<TupleModel>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismModel {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryModel {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismModel>,
    /// Object id to identity morphism id.
    pub identities: BTreeMap<String, String>,
    /// `[g, f, g∘f]`.
    pub composition: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorModel {
    pub name: String,
    pub source: String,
    pub target: String,
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransModel {
    pub name: String,
    pub source: String,
    pub target: String,
    pub components: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadModel {
    pub name: String,
    pub endofunctor: String,
    pub unit: BTreeMap<String, String>,
    pub multiplication: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingModel {
    /// `[A, B, β_{A,B}]`.
    pub components: Vec<[String; 3]>,
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalModel {
    pub name: String,
    pub category: String,
    /// `[A, B, A⊗B]`.
    pub tensor_objects: Vec<[String; 3]>,
    /// `[f, g, f⊗g]`.
    pub tensor_morphisms: Vec<[String; 3]>,
    pub unit: String,
    /// `[A, B, C, α_{A,B,C}]`.
    pub associator: Vec<[String; 4]>,
    pub left_unitor: BTreeMap<String, String>,
    pub right_unitor: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<BraidingModel>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleModel {
    pub name: String,
    pub monoidal: String,
    pub monad: String,
    pub laxity: Laxity,
    /// `[A, B, φ_{A,B}]`.
    pub phi: Vec<[String; 3]>,
    pub phi_bar: String,
}

impl FileModel {
    /// Sorts every array so that serialization is canonical.
    pub fn canonicalize(&mut self) {
        self.categories.sort_by(|a, b| a.name.cmp(&b.name));
        for c in &mut self.categories {
            c.objects.sort();
            c.morphisms.sort();
            c.composition.sort();
        }
        self.functors.sort_by(|a, b| a.name.cmp(&b.name));
        self.nattrans.sort_by(|a, b| a.name.cmp(&b.name));
        self.monads.sort_by(|a, b| a.name.cmp(&b.name));
        self.monoidal.sort_by(|a, b| a.name.cmp(&b.name));
        for m in &mut self.monoidal {
            m.tensor_objects.sort();
            m.tensor_morphisms.sort();
            m.associator.sort();
            if let Some(b) = &mut m.braiding {
                b.components.sort();
            }
        }
        self.tuples.sort_by(|a, b| a.name.cmp(&b.name));
        for t in &mut self.tuples {
            t.phi.sort();
        }
    }

    /// Canonical text: sorted keys and arrays, two-space indentation and a
    /// trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut m = self.clone();
        m.canonicalize();
        to_canonical_json(&m)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

/// Pretty JSON with keys sorted, arrays of scalars kept on one line and a
/// trailing newline.
pub fn to_canonical_json(data: &impl Serialize) -> String {
    // a Value map is ordered by key
    let value = serde_json::to_value(data).expect("plain data serializes");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, v: &serde_json::Value, depth: usize) {
    use serde_json::Value;
    let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

#[derive(Clone, Debug)]
pub struct NamedFunctor {
    pub source: String,
    pub target: String,
    pub functor: Functor,
}

#[derive(Clone, Debug)]
pub struct NamedNatTrans {
    pub source: String,
    pub target: String,
    pub cell: NatTrans,
}

#[derive(Clone, Debug)]
pub struct NamedMonad {
    pub endofunctor: String,
    pub monad: Monad,
}

#[derive(Clone, Debug)]
pub struct NamedMonoidal {
    pub category: String,
    pub structure: MonoidalStructure,
    pub braiding: Option<Braiding>,
}

#[derive(Clone, Debug)]
pub struct NamedTuple {
    pub monoidal: String,
    pub monad: String,
    pub tuple: MonoidalMonadTuple,
}

/// Named entities of every kind, with all references resolved.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub categories: BTreeMap<String, Arc<FinCat>>,
    pub functors: BTreeMap<String, NamedFunctor>,
    pub nattrans: BTreeMap<String, NamedNatTrans>,
    pub monads: BTreeMap<String, NamedMonad>,
    pub monoidal: BTreeMap<String, NamedMonoidal>,
    pub tuples: BTreeMap<String, NamedTuple>,
}

fn unresolved(kind: &'static str, name: &str) -> Error {
    Error::Unresolved {
        kind,
        name: name.to_string(),
    }
}

fn ob(c: &FinCat, name: &str) -> Result<ObjId> {
    c.object(name).ok_or_else(|| unresolved("object", name))
}

fn mor(c: &FinCat, name: &str) -> Result<MorId> {
    c.morphism(name).ok_or_else(|| unresolved("morphism", name))
}

fn insert<V>(map: &mut BTreeMap<String, V>, kind: &'static str, name: &str, v: V) -> Result<()> {
    if map.contains_key(name) {
        return Err(Error::Duplicate {
            kind,
            name: name.to_string(),
        });
    }
    map.insert(name.to_string(), v);
    Ok(())
}

fn get<'a, V>(map: &'a BTreeMap<String, V>, kind: &'static str, name: &str) -> Result<&'a V> {
    map.get(name).ok_or_else(|| unresolved(kind, name))
}

/// Every key of `map` must name an object of `c`, and every object must be
/// covered.
fn per_object(c: &FinCat, map: &BTreeMap<String, String>, what: &str) -> Result<Vec<String>> {
    for k in map.keys() {
        ob(c, k)?;
    }
    c.objects()
        .map(|a| {
            map.get(c.ob_name(a)).cloned().ok_or_else(|| {
                Error::structural(format!("{what} has no entry for object `{}`", c.ob_name(a)))
            })
        })
        .collect()
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let mut ws = Self::new();
        ws.load_into(path)?;
        Ok(ws)
    }

    /// Loads several files into one workspace; names must be unique across
    /// all of them.
    pub fn load_all<P: AsRef<Path>>(paths: &[P]) -> Result<Self> {
        let mut ws = Self::new();
        for p in paths {
            ws.load_into(p)?;
        }
        Ok(ws)
    }

    fn load_into(&mut self, path: impl AsRef<Path>) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        self.add_model(&FileModel::parse(&text)?)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut ws = Self::new();
        ws.add_model(&FileModel::parse(text)?)?;
        Ok(ws)
    }

    /// Adds every entity of `m`, resolving references against everything
    /// already present and everything earlier in the dependency order.
    pub fn add_model(&mut self, m: &FileModel) -> Result<()> {
        check_unique(m)?;
        for c in &m.categories {
            let mut b = FinCat::builder();
            for o in &c.objects {
                b.object(o.as_str());
            }
            for f in &c.morphisms {
                b.morphism(f.id.as_str(), f.dom.as_str(), f.cod.as_str());
            }
            for (o, i) in &c.identities {
                b.identity(o.as_str(), i.as_str());
            }
            for [g, f, gf] in &c.composition {
                b.compose(g.as_str(), f.as_str(), gf.as_str());
            }
            let cat = b
                .build()
                .map_err(|e| Error::Structural(format!("category `{}`: {e}", c.name)))?;
            self.add_category(&c.name, Arc::new(cat))?;
        }
        for f in &m.functors {
            let src = get(&self.categories, "category", &f.source)?.clone();
            let tgt = get(&self.categories, "category", &f.target)?.clone();
            let obs = per_object(&src, &f.objects, &format!("functor `{}`", f.name))?
                .iter()
                .map(|o| ob(&tgt, o))
                .collect::<Result<Vec<_>>>()?;
            for k in f.morphisms.keys() {
                mor(&src, k)?;
            }
            let mors = src
                .morphisms()
                .map(|g| {
                    let image = f.morphisms.get(src.mor_name(g)).ok_or_else(|| {
                        Error::structural(format!(
                            "functor `{}` does not map `{}`",
                            f.name,
                            src.mor_name(g)
                        ))
                    })?;
                    mor(&tgt, image)
                })
                .collect::<Result<Vec<_>>>()?;
            let functor = Functor::new(src, tgt, obs, mors)?;
            self.add_functor(&f.name, functor)?;
        }
        for n in &m.nattrans {
            let source = get(&self.functors, "functor", &n.source)?.functor.clone();
            let target = get(&self.functors, "functor", &n.target)?.functor.clone();
            let comps =
                self.components(source.source(), target.target(), &n.components, &n.name)?;
            let cell = NatTrans::new(source, target, comps)?;
            self.add_nattrans(&n.name, cell)?;
        }
        for mm in &m.monads {
            let endo = get(&self.functors, "functor", &mm.endofunctor)?
                .functor
                .clone();
            let c = endo.source().clone();
            let unit = self.components(&c, &c, &mm.unit, &mm.name)?;
            let mult = self.components(&c, &c, &mm.multiplication, &mm.name)?;
            let monad = Monad::new(endo, unit, mult)?;
            self.add_monad(&mm.name, monad)?;
        }
        for ms in &m.monoidal {
            let (structure, braiding) = self.monoidal_from_model(ms)?;
            self.add_monoidal(&ms.name, structure, braiding)?;
        }
        for t in &m.tuples {
            let ms = get(&self.monoidal, "monoidal", &t.monoidal)?
                .structure
                .clone();
            let monad = get(&self.monads, "monad", &t.monad)?.monad.clone();
            let c = monad.base().clone();
            let n = c.object_count();
            let mut phi = vec![None; n * n];
            for [a, b, f] in &t.phi {
                phi[ob(&c, a)?.0 * n + ob(&c, b)?.0] = Some(mor(&c, f)?);
            }
            let phi = phi
                .into_iter()
                .enumerate()
                .map(|(i, f)| {
                    f.ok_or_else(|| {
                        Error::structural(format!(
                            "tuple `{}` has no φ at ({}, {})",
                            t.name,
                            c.ob_name(ObjId(i / n)),
                            c.ob_name(ObjId(i % n))
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let phi_bar = mor(&c, &t.phi_bar)?;
            let tuple = MonoidalMonadTuple::new(ms, monad, t.laxity, phi, phi_bar)?;
            self.add_tuple(&t.name, tuple)?;
        }
        Ok(())
    }

    fn components(
        &self,
        c: &FinCat,
        d: &FinCat,
        map: &BTreeMap<String, String>,
        owner: &str,
    ) -> Result<Vec<MorId>> {
        per_object(c, map, &format!("`{owner}`"))?
            .iter()
            .map(|f| mor(d, f))
            .collect()
    }

    fn monoidal_from_model(
        &self,
        ms: &MonoidalModel,
    ) -> Result<(MonoidalStructure, Option<Braiding>)> {
        let c = get(&self.categories, "category", &ms.category)?.clone();
        let (n, m) = (c.object_count(), c.morphism_count());
        let mut t_ob = vec![None; n * n];
        for [a, b, ab] in &ms.tensor_objects {
            t_ob[ob(&c, a)?.0 * n + ob(&c, b)?.0] = Some(ob(&c, ab)?);
        }
        let mut t_mor = vec![None; m * m];
        for [f, g, fg] in &ms.tensor_morphisms {
            t_mor[mor(&c, f)?.0 * m + mor(&c, g)?.0] = Some(mor(&c, fg)?);
        }
        let mut assoc = vec![None; n * n * n];
        for [a, b, cc, f] in &ms.associator {
            assoc[(ob(&c, a)?.0 * n + ob(&c, b)?.0) * n + ob(&c, cc)?.0] = Some(mor(&c, f)?);
        }
        let missing = |what: &str| {
            Error::structural(format!("monoidal `{}` has an incomplete {what}", ms.name))
        };
        if t_ob.iter().any(Option::is_none) || assoc.iter().any(Option::is_none) {
            return Err(missing("object table"));
        }
        if t_mor.iter().any(Option::is_none) {
            return Err(missing("morphism tensor"));
        }
        let lam = self.components(&c, &c, &ms.left_unitor, &ms.name)?;
        let rho = self.components(&c, &c, &ms.right_unitor, &ms.name)?;
        let unit = ob(&c, &ms.unit)?;
        let structure = MonoidalStructure::from_fns(
            c.clone(),
            |a, b| t_ob[a.0 * n + b.0].expect("checked"),
            |f, g| t_mor[f.0 * m + g.0].expect("checked"),
            unit,
            |a, b, cc| assoc[(a.0 * n + b.0) * n + cc.0].expect("checked"),
            |a| lam[a.0],
            |a| rho[a.0],
        )?;
        let braiding = match &ms.braiding {
            None => None,
            Some(bm) => {
                let mut comps = vec![None; n * n];
                for [a, b, f] in &bm.components {
                    comps[ob(&c, a)?.0 * n + ob(&c, b)?.0] = Some(mor(&c, f)?);
                }
                let comps = comps
                    .into_iter()
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| missing("braiding"))?;
                Some(Braiding::new(structure.clone(), comps, bm.symmetric)?)
            }
        };
        Ok((structure, braiding))
    }

    /// The registered name of `c`, matched by identity first and content
    /// second.
    pub fn category_name(&self, c: &Arc<FinCat>) -> Option<&str> {
        self.categories
            .iter()
            .find(|(_, v)| Arc::ptr_eq(v, c))
            .or_else(|| self.categories.iter().find(|(_, v)| ***v == **c))
            .map(|(k, _)| k.as_str())
    }

    fn functor_name(&self, f: &Functor) -> Option<&str> {
        self.functors
            .iter()
            .find(|(_, v)| v.functor == *f)
            .map(|(k, _)| k.as_str())
    }

    fn monoidal_name(&self, ms: &MonoidalStructure) -> Option<&str> {
        self.monoidal
            .iter()
            .find(|(_, v)| v.structure == *ms)
            .map(|(k, _)| k.as_str())
    }

    fn monad_name(&self, m: &Monad) -> Option<&str> {
        self.monads
            .iter()
            .find(|(_, v)| v.monad == *m)
            .map(|(k, _)| k.as_str())
    }

    pub fn add_category(&mut self, name: &str, c: Arc<FinCat>) -> Result<()> {
        insert(&mut self.categories, "category", name, c)
    }

    /// Registers a functor; both of its categories must already be present.
    pub fn add_functor(&mut self, name: &str, functor: Functor) -> Result<()> {
        let source = self.require_category(functor.source())?;
        let target = self.require_category(functor.target())?;
        insert(
            &mut self.functors,
            "functor",
            name,
            NamedFunctor {
                source,
                target,
                functor,
            },
        )
    }

    pub fn add_nattrans(&mut self, name: &str, cell: NatTrans) -> Result<()> {
        let source = self
            .functor_name(cell.source())
            .ok_or_else(|| unresolved("functor", "<source of nattrans>"))?;
        let target = self
            .functor_name(cell.target())
            .ok_or_else(|| unresolved("functor", "<target of nattrans>"))?;
        let v = NamedNatTrans {
            source: source.to_string(),
            target: target.to_string(),
            cell,
        };
        insert(&mut self.nattrans, "nattrans", name, v)
    }

    /// Registers a monad; its endofunctor must already be present.
    pub fn add_monad(&mut self, name: &str, monad: Monad) -> Result<()> {
        let endofunctor = self
            .functor_name(monad.endo())
            .ok_or_else(|| unresolved("functor", "<endofunctor of monad>"))?
            .to_string();
        insert(
            &mut self.monads,
            "monad",
            name,
            NamedMonad { endofunctor, monad },
        )
    }

    pub fn add_monoidal(
        &mut self,
        name: &str,
        structure: MonoidalStructure,
        braiding: Option<Braiding>,
    ) -> Result<()> {
        let category = self.require_category(structure.base())?;
        let v = NamedMonoidal {
            category,
            structure,
            braiding,
        };
        insert(&mut self.monoidal, "monoidal", name, v)
    }

    /// Registers a tuple; its monoidal structure and monad must already be
    /// present.
    pub fn add_tuple(&mut self, name: &str, tuple: MonoidalMonadTuple) -> Result<()> {
        let monoidal = self
            .monoidal_name(tuple.monoidal())
            .ok_or_else(|| unresolved("monoidal", "<monoidal of tuple>"))?
            .to_string();
        let monad = self
            .monad_name(tuple.monad())
            .ok_or_else(|| unresolved("monad", "<monad of tuple>"))?
            .to_string();
        insert(
            &mut self.tuples,
            "tuple",
            name,
            NamedTuple {
                monoidal,
                monad,
                tuple,
            },
        )
    }

    fn require_category(&self, c: &Arc<FinCat>) -> Result<String> {
        self.category_name(c)
            .map(str::to_string)
            .ok_or_else(|| unresolved("category", "<unregistered category>"))
    }

    pub fn to_model(&self) -> FileModel {
        let mut m = FileModel::default();
        for (name, c) in &self.categories {
            m.categories.push(category_model(name, c));
        }
        for (name, f) in &self.functors {
            let (objects, morphisms) = f.functor.named_maps();
            m.functors.push(FunctorModel {
                name: name.clone(),
                source: f.source.clone(),
                target: f.target.clone(),
                objects,
                morphisms,
            });
        }
        for (name, n) in &self.nattrans {
            m.nattrans.push(NatTransModel {
                name: name.clone(),
                source: n.source.clone(),
                target: n.target.clone(),
                components: n.cell.named_components(),
            });
        }
        for (name, mm) in &self.monads {
            m.monads.push(MonadModel {
                name: name.clone(),
                endofunctor: mm.endofunctor.clone(),
                unit: mm.monad.unit().named_components(),
                multiplication: mm.monad.mult().named_components(),
            });
        }
        for (name, ms) in &self.monoidal {
            m.monoidal.push(monoidal_model(
                name,
                &ms.category,
                &ms.structure,
                ms.braiding.as_ref(),
            ));
        }
        for (name, t) in &self.tuples {
            let c = t.tuple.base();
            let mut phi = Vec::new();
            for a in c.objects() {
                for b in c.objects() {
                    phi.push([
                        c.ob_name(a).to_string(),
                        c.ob_name(b).to_string(),
                        c.mor_name(t.tuple.phi(a, b)).to_string(),
                    ]);
                }
            }
            m.tuples.push(TupleModel {
                name: name.clone(),
                monoidal: t.monoidal.clone(),
                monad: t.monad.clone(),
                laxity: t.tuple.laxity(),
                phi,
                phi_bar: c.mor_name(t.tuple.phi_bar()).to_string(),
            });
        }
        m.canonicalize();
        m
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_model().to_canonical_string()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_canonical_string())?;
        Ok(())
    }

    /// Number of entities per kind, in file-key order.
    pub fn counts(&self) -> [(&'static str, usize); 6] {
        [
            ("categories", self.categories.len()),
            ("functors", self.functors.len()),
            ("nattrans", self.nattrans.len()),
            ("monads", self.monads.len()),
            ("monoidal", self.monoidal.len()),
            ("tuples", self.tuples.len()),
        ]
    }
}

fn check_unique(m: &FileModel) -> Result<()> {
    fn dup<'a>(kind: &'static str, names: impl Iterator<Item = &'a String>) -> Result<()> {
        let mut seen = BTreeSet::new();
        for n in names {
            if !seen.insert(n) {
                return Err(Error::Duplicate {
                    kind,
                    name: n.clone(),
                });
            }
        }
        Ok(())
    }
    dup("category", m.categories.iter().map(|x| &x.name))?;
    dup("functor", m.functors.iter().map(|x| &x.name))?;
    dup("nattrans", m.nattrans.iter().map(|x| &x.name))?;
    dup("monad", m.monads.iter().map(|x| &x.name))?;
    dup("monoidal", m.monoidal.iter().map(|x| &x.name))?;
    dup("tuple", m.tuples.iter().map(|x| &x.name))
}

pub fn category_model(name: &str, c: &FinCat) -> CategoryModel {
    CategoryModel {
        name: name.to_string(),
        objects: c.objects().map(|a| c.ob_name(a).to_string()).collect(),
        morphisms: c
            .morphisms()
            .map(|f| MorphismModel {
                id: c.mor_name(f).to_string(),
                dom: c.ob_name(c.dom(f)).to_string(),
                cod: c.ob_name(c.cod(f)).to_string(),
            })
            .collect(),
        identities: c
            .objects()
            .map(|a| (c.ob_name(a).to_string(), c.mor_name(c.id(a)).to_string()))
            .collect(),
        composition: c
            .composition_table()
            .map(|(g, f, h)| {
                [
                    c.mor_name(g).to_string(),
                    c.mor_name(f).to_string(),
                    c.mor_name(h).to_string(),
                ]
            })
            .collect(),
    }
}

pub fn monoidal_model(
    name: &str,
    category: &str,
    ms: &MonoidalStructure,
    braiding: Option<&Braiding>,
) -> MonoidalModel {
    let c = ms.base();
    let o = |a: ObjId| c.ob_name(a).to_string();
    let f = |m: MorId| c.mor_name(m).to_string();
    let mut tensor_objects = Vec::new();
    let mut associator = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            tensor_objects.push([o(a), o(b), o(ms.tensor_ob(a, b))]);
            for cc in c.objects() {
                associator.push([o(a), o(b), o(cc), f(ms.assoc(a, b, cc))]);
            }
        }
    }
    let mut tensor_morphisms = Vec::new();
    for g in c.morphisms() {
        for h in c.morphisms() {
            tensor_morphisms.push([f(g), f(h), f(ms.tensor_mor(g, h))]);
        }
    }
    MonoidalModel {
        name: name.to_string(),
        category: category.to_string(),
        tensor_objects,
        tensor_morphisms,
        unit: o(ms.unit()),
        associator,
        left_unitor: c.objects().map(|a| (o(a), f(ms.left_unitor(a)))).collect(),
        right_unitor: c.objects().map(|a| (o(a), f(ms.right_unitor(a)))).collect(),
        braiding: braiding.map(|b| BraidingModel {
            components: c
                .objects()
                .flat_map(|a| c.objects().map(move |bb| (a, bb)))
                .map(|(a, bb)| [o(a), o(bb), f(b.at(a, bb))])
                .collect(),
            symmetric: b.is_symmetric(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn sample() -> Workspace {
        let ms = corpus::chain_max(3);
        let c = ms.base().clone();
        let m = corpus::thin_monad(&c, &[1, 1, 2]).unwrap();
        let t = MonoidalMonadTuple::thin(ms.clone(), m.clone(), Laxity::Lax).unwrap();
        let mut ws = Workspace::new();
        ws.add_category("chain3", c).unwrap();
        ws.add_functor("cl", m.endo().clone()).unwrap();
        ws.add_monad("cl", m).unwrap();
        ws.add_monoidal("max", ms.clone(), Some(Braiding::thin(ms, true).unwrap()))
            .unwrap();
        ws.add_tuple("cl3", t).unwrap();
        ws
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let text = sample().to_canonical_string();
        let again = Workspace::from_text(&text).unwrap().to_canonical_string();
        assert_eq!(text, again);
    }

    #[test]
    fn loaded_entities_equal_the_originals() {
        let ws = sample();
        let back = Workspace::from_text(&ws.to_canonical_string()).unwrap();
        assert!(*back.categories["chain3"] == *ws.categories["chain3"]);
        assert!(back.monads["cl"].monad == ws.monads["cl"].monad);
        assert!(back.tuples["cl3"].tuple == ws.tuples["cl3"].tuple);
    }

    #[test]
    fn parse_errors_carry_a_position() {
        match Workspace::from_text("{\n  \"categories\": [\n    oops\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 5)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn duplicates_and_dangling_names_are_reported() {
        let text = sample().to_canonical_string();
        let mut m = FileModel::parse(&text).unwrap();
        m.monads.push(m.monads[0].clone());
        match Workspace::new().add_model(&m) {
            Err(Error::Duplicate { kind, name }) => {
                assert_eq!((kind, name.as_str()), ("monad", "cl"))
            }
            other => panic!("{other:?}"),
        }
        let mut m = FileModel::parse(&text).unwrap();
        m.tuples[0].monad = "nope".into();
        match Workspace::new().add_model(&m) {
            Err(Error::Unresolved { kind, name }) => {
                assert_eq!((kind, name.as_str()), ("monad", "nope"))
            }
            other => panic!("{other:?}"),
        }
    }
}
