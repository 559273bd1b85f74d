use std::sync::Arc;

use super::{compose_functors, FinCat, Functor, MorId, ObjId};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_OBJECTS: usize = 8;

/// A pair of mutually inverse functors.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    pub forward: Functor,
    pub backward: Functor,
}

impl Isomorphism {
    /// Both composites are identity functors.
    pub fn is_inverse_pair(&self) -> bool {
        let there_back = compose_functors(&self.backward, &self.forward);
        let back_there = compose_functors(&self.forward, &self.backward);
        matches!(there_back, Ok(f) if f == Functor::identity(self.forward.source().clone()))
            && matches!(back_there, Ok(f) if f == Functor::identity(self.forward.target().clone()))
    }
}

/// Hom-set cardinality profile of an object, invariant under isomorphism.
fn profile(c: &FinCat, a: ObjId) -> (usize, Vec<usize>, Vec<usize>) {
    let mut outs: Vec<usize> = c.objects().map(|b| c.hom(a, b).len()).collect();
    let mut ins: Vec<usize> = c.objects().map(|b| c.hom(b, a).len()).collect();
    outs.sort_unstable();
    ins.sort_unstable();
    (c.hom(a, a).len(), outs, ins)
}

/// Exhaustive search for an isomorphism `c ≅ d`.
///
/// Categories with different object or morphism counts are answered
/// immediately. Otherwise the search backtracks over object bijections that
/// respect hom-set cardinalities, then over hom-set bijections that respect
/// composition. More than `max_objects` objects aborts with
/// [`Error::SearchAborted`].
pub fn find_isomorphism(
    c: &Arc<FinCat>,
    d: &Arc<FinCat>,
    max_objects: usize,
) -> Result<Option<Isomorphism>> {
    if c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count() {
        return Ok(None);
    }
    if c.object_count() > max_objects {
        return Err(Error::SearchAborted {
            objects: c.object_count(),
            cap: max_objects,
        });
    }
    let mut search = Search::new(c, d);
    if !search.objects(0) {
        return Ok(None);
    }
    let ob_map = search
        .ob
        .iter()
        .map(|o| o.expect("complete"))
        .collect::<Vec<_>>();
    let mor_map = search
        .mor
        .iter()
        .map(|m| m.expect("complete"))
        .collect::<Vec<_>>();
    let mut inv_ob = vec![ObjId(0); ob_map.len()];
    for (i, b) in ob_map.iter().enumerate() {
        inv_ob[b.0] = ObjId(i);
    }
    let mut inv_mor = vec![MorId(0); mor_map.len()];
    for (i, g) in mor_map.iter().enumerate() {
        inv_mor[g.0] = MorId(i);
    }
    let forward = Functor::new(c.clone(), d.clone(), ob_map, mor_map)?;
    let backward = Functor::new(d.clone(), c.clone(), inv_ob, inv_mor)?;
    Ok(Some(Isomorphism { forward, backward }))
}

struct Search<'a> {
    c: &'a FinCat,
    d: &'a FinCat,
    order: Vec<ObjId>,
    candidates: Vec<Vec<ObjId>>,
    ob: Vec<Option<ObjId>>,
    ob_used: Vec<bool>,
    mor_order: Vec<MorId>,
    mor: Vec<Option<MorId>>,
    mor_used: Vec<bool>,
    factorizations: Vec<Vec<(MorId, MorId)>>,
}

impl<'a> Search<'a> {
    fn new(c: &'a FinCat, d: &'a FinCat) -> Self {
        let dp: Vec<_> = d.objects().map(|b| profile(d, b)).collect();
        let candidates: Vec<Vec<ObjId>> = c
            .objects()
            .map(|a| {
                let pa = profile(c, a);
                d.objects().filter(|b| dp[b.0] == pa).collect()
            })
            .collect();
        let mut order: Vec<ObjId> = c.objects().collect();
        order.sort_by_key(|a| candidates[a.0].len());
        let mut factorizations = vec![Vec::new(); c.morphism_count()];
        for (g, f, h) in c.composition_table() {
            factorizations[h.0].push((g, f));
        }
        let ids: Vec<MorId> = c.objects().map(|a| c.id(a)).collect();
        let mut mor_order: Vec<MorId> = c.morphisms().filter(|m| !ids.contains(m)).collect();
        mor_order.sort_by_key(|&m| (c.hom(c.dom(m), c.cod(m)).len(), m));
        Search {
            c,
            d,
            order,
            candidates,
            ob: vec![None; c.object_count()],
            ob_used: vec![false; d.object_count()],
            mor_order,
            mor: vec![None; c.morphism_count()],
            mor_used: vec![false; d.morphism_count()],
            factorizations,
        }
    }

    fn objects(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return self.start_morphisms();
        }
        let a = self.order[k];
        for i in 0..self.candidates[a.0].len() {
            let b = self.candidates[a.0][i];
            if self.ob_used[b.0] || !self.consistent_object(a, b) {
                continue;
            }
            self.ob[a.0] = Some(b);
            self.ob_used[b.0] = true;
            if self.objects(k + 1) {
                return true;
            }
            self.ob[a.0] = None;
            self.ob_used[b.0] = false;
        }
        false
    }

    fn consistent_object(&self, a: ObjId, b: ObjId) -> bool {
        self.c.objects().all(|x| match self.ob[x.0] {
            Some(y) => {
                self.c.hom(a, x).len() == self.d.hom(b, y).len()
                    && self.c.hom(x, a).len() == self.d.hom(y, b).len()
            }
            None => true,
        }) && self.c.hom(a, a).len() == self.d.hom(b, b).len()
    }

    fn start_morphisms(&mut self) -> bool {
        self.mor.iter_mut().for_each(|m| *m = None);
        self.mor_used.iter_mut().for_each(|u| *u = false);
        for a in self.c.objects() {
            let b = self.ob[a.0].expect("objects assigned");
            let (ia, ib) = (self.c.id(a), self.d.id(b));
            self.mor[ia.0] = Some(ib);
            self.mor_used[ib.0] = true;
        }
        let ids: Vec<MorId> = self.c.objects().map(|a| self.c.id(a)).collect();
        if !ids.iter().all(|&m| self.respects_composition(m)) {
            return false;
        }
        self.morphisms(0)
    }

    fn morphisms(&mut self, k: usize) -> bool {
        if k == self.mor_order.len() {
            return true;
        }
        let f = self.mor_order[k];
        let (a, b) = (self.c.dom(f), self.c.cod(f));
        let (x, y) = (self.ob[a.0].unwrap(), self.ob[b.0].unwrap());
        let targets: Vec<MorId> = self.d.hom(x, y).to_vec();
        for g in targets {
            if self.mor_used[g.0] {
                continue;
            }
            self.mor[f.0] = Some(g);
            self.mor_used[g.0] = true;
            if self.respects_composition(f) && self.morphisms(k + 1) {
                return true;
            }
            self.mor[f.0] = None;
            self.mor_used[g.0] = false;
        }
        false
    }

    /// Every fully assigned composite involving `m` is preserved.
    fn respects_composition(&self, m: MorId) -> bool {
        let c = self.c;
        let image = |x: MorId| self.mor[x.0];
        let holds = |g: MorId, f: MorId| match (image(g), image(f), c.compose(g, f).and_then(image))
        {
            (Some(g2), Some(f2), Some(h2)) => self.d.compose(g2, f2) == Some(h2),
            _ => true,
        };
        c.outgoing(c.cod(m)).iter().all(|&g| holds(g, m))
            && c.incoming(c.dom(m)).iter().all(|&f| holds(m, f))
            && self.factorizations[m.0].iter().all(|&(g, f)| holds(g, f))
    }
}
