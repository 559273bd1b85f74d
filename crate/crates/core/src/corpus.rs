//! The built-in example corpus: closure monads on chains and on the Boolean
//! square, monoidal monads built from them, a non-thin one-object example,
//! braided variants, and systematic single-field corruptions of tuples.

use std::sync::Arc;

use crate::fincat::{FinCat, Functor, MorId, ObjId};
use crate::monad::{Laxity, Monad};
use crate::monmonad::MonoidalMonadTuple;
use crate::monoidal::{Braiding, MonoidalStructure};
use crate::report::Report;
use crate::workspace::Workspace;

/// The induced monad of a monotone self-map of a thin category, given as the
/// image of each object index. Rejected with the failing component laws when
/// the map is not inflationary or not idempotent.
pub fn thin_monad(c: &Arc<FinCat>, map: &[usize]) -> Result<Monad, Report> {
    let mut report = Report::new();
    for f in c.morphisms() {
        if c.hom(ObjId(map[c.dom(f).0]), ObjId(map[c.cod(f).0]))
            .is_empty()
        {
            report.violation("monotone", c.mor_name(f), "no image", "a morphism");
        }
    }
    if !report.is_ok() {
        return Err(report);
    }
    let endo = Functor::from_fn(
        c.clone(),
        c.clone(),
        |a| ObjId(map[a.0]),
        |f| c.hom(ObjId(map[c.dom(f).0]), ObjId(map[c.cod(f).0]))[0],
    )
    .expect("images are in range");
    Monad::induced_on_thin(endo)
}

/// Every monotone self-map of the `n`-chain.
pub fn monotone_maps(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..n {
            cur.push(v);
            go(n, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

/// The closure on the `n`-chain sending each element to the least member
/// of `fixed` above it. `fixed` must contain the top element.
pub fn chain_closure_map(n: usize, fixed: &[usize]) -> Vec<usize> {
    (0..n)
        .map(|a| {
            *fixed
                .iter()
                .filter(|&&f| f >= a)
                .min()
                .expect("top is fixed")
        })
        .collect()
}

fn digits(map: &[usize]) -> String {
    map.iter().map(|d| d.to_string()).collect()
}

/// All `2^(n-1)` closure monads on the `n`-chain, named `cl<n>-<images>`.
pub fn closures_on_chain(c: &Arc<FinCat>) -> Vec<(String, Monad)> {
    let n = c.object_count();
    (0..1usize << (n - 1))
        .map(|bits| {
            let fixed: Vec<usize> = (0..n)
                .filter(|&i| i == n - 1 || bits & (1 << i) != 0)
                .collect();
            let map = chain_closure_map(n, &fixed);
            let m = thin_monad(c, &map).expect("a closure is a monad");
            (format!("cl{n}-{}", digits(&map)), m)
        })
        .collect()
}

/// The Boolean square `{00, 01, 10, 11}` ordered componentwise; object `i`
/// is the bit pair of `i`.
pub fn boolean_square() -> FinCat {
    FinCat::preorder(&["00", "01", "10", "11"], |i, j| i & j == i).expect("a lattice is a preorder")
}

/// Closure monads on the Boolean square: one per meet-closed family of
/// fixed points containing the top.
pub fn closures_on_boolean_square(c: &Arc<FinCat>) -> Vec<(String, Monad)> {
    let mut out = Vec::new();
    for bits in 0..8usize {
        let fixed: Vec<usize> = (0..4).filter(|&i| i == 3 || bits & (1 << i) != 0).collect();
        if fixed
            .iter()
            .any(|&a| fixed.iter().any(|&b| !fixed.contains(&(a & b))))
        {
            continue;
        }
        let map: Vec<usize> = (0..4)
            .map(|a| {
                *fixed
                    .iter()
                    .filter(|&&f| a & f == a)
                    .min_by_key(|&&f| f.count_ones())
                    .expect("top is fixed")
            })
            .collect();
        let m = thin_monad(c, &map).expect("a closure is a monad");
        out.push((format!("bool-cl-{}", digits(&map)), m));
    }
    out
}

/// The monad on `Z/2` with identity endofunctor and `η = μ = s`.
pub fn z2_flip_monad() -> Monad {
    let z = Arc::new(FinCat::cyclic(2));
    let s = z.morphism("s").expect("generator");
    Monad::new(Functor::identity(z), vec![s], vec![s]).expect("components are endomorphisms")
}

/// Every monad of the corpus.
pub fn monad_corpus() -> Vec<(String, Monad)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.extend(closures_on_chain(&Arc::new(FinCat::chain(n))));
    }
    out.extend(closures_on_boolean_square(&Arc::new(boolean_square())));
    out.push(("id-z2".into(), Monad::identity(Arc::new(FinCat::cyclic(2)))));
    out.push(("id-z3".into(), Monad::identity(Arc::new(FinCat::cyclic(3)))));
    out.push(("flip-z2".into(), z2_flip_monad()));
    out
}

/// `(n-chain, max, 0)`.
pub fn chain_max(n: usize) -> MonoidalStructure {
    MonoidalStructure::from_thin_op(Arc::new(FinCat::chain(n)), |a, b| a.max(b), ObjId(0))
        .expect("max is monotone")
}

/// `(n-chain, min, n-1)`.
pub fn chain_min(n: usize) -> MonoidalStructure {
    MonoidalStructure::from_thin_op(Arc::new(FinCat::chain(n)), |a, b| a.min(b), ObjId(n - 1))
        .expect("min is monotone")
}

/// The Boolean square with join and unit `00`.
pub fn boolean_join() -> MonoidalStructure {
    MonoidalStructure::from_thin_op(
        Arc::new(boolean_square()),
        |a, b| ObjId(a.0 | b.0),
        ObjId(0),
    )
    .expect("join is monotone")
}

/// The Boolean square with meet and unit `11`.
pub fn boolean_meet() -> MonoidalStructure {
    MonoidalStructure::from_thin_op(
        Arc::new(boolean_square()),
        |a, b| ObjId(a.0 & b.0),
        ObjId(3),
    )
    .expect("meet is monotone")
}

fn z_n(n: usize) -> MonoidalStructure {
    MonoidalStructure::from_monoid(Arc::new(FinCat::cyclic(n))).expect("one object")
}

fn thin_tuples(
    out: &mut Vec<(String, MonoidalMonadTuple)>,
    label: &str,
    ms: &MonoidalStructure,
    monads: Vec<(String, Monad)>,
    laxity: Laxity,
) {
    for (name, m) in monads {
        let t = MonoidalMonadTuple::thin(ms.clone(), m, laxity).expect("same category");
        if crate::monmonad::check_interchange_equivalence(&t).both_valid() {
            out.push((format!("{label}/{name}"), t));
        }
    }
}

/// Valid lax monoidal monads: every closure on the 2-, 3- and 4-chain with
/// `max` and with `min`, every closure on the Boolean square with join,
/// identity monads on cyclic groups and one product tuple.
pub fn lax_tuples() -> Vec<(String, MonoidalMonadTuple)> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let ms = chain_max(n);
        thin_tuples(
            &mut out,
            "max",
            &ms,
            closures_on_chain(ms.base()),
            Laxity::Lax,
        );
    }
    let ms = chain_min(3);
    thin_tuples(
        &mut out,
        "min",
        &ms,
        closures_on_chain(ms.base()),
        Laxity::Lax,
    );
    let ms = boolean_join();
    thin_tuples(
        &mut out,
        "join",
        &ms,
        closures_on_boolean_square(ms.base()),
        Laxity::Lax,
    );
    for n in [2, 3] {
        out.push((
            format!("z{n}/id"),
            MonoidalMonadTuple::identity_monad(z_n(n), Laxity::Lax),
        ));
    }
    let ms = chain_max(2);
    let cl = MonoidalMonadTuple::thin(
        ms.clone(),
        thin_monad(ms.base(), &[1, 1]).expect("closure"),
        Laxity::Lax,
    )
    .expect("same category");
    let id = MonoidalMonadTuple::identity_monad(ms, Laxity::Lax);
    let (p, _) = MonoidalMonadTuple::product(&cl, &id).expect("both lax");
    out.push(("max2xmax2/cl2-11xid".into(), p));
    out
}

/// Valid oplax monoidal monads: closures fixing the bottom on chains with
/// `max`, every closure on the Boolean square with meet, identity monads and
/// the `Z/2` flip monad with `φ = φ̄ = s`.
pub fn oplax_tuples() -> Vec<(String, MonoidalMonadTuple)> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let ms = chain_max(n);
        thin_tuples(
            &mut out,
            "max",
            &ms,
            closures_on_chain(ms.base()),
            Laxity::Oplax,
        );
    }
    let ms = boolean_meet();
    thin_tuples(
        &mut out,
        "meet",
        &ms,
        closures_on_boolean_square(ms.base()),
        Laxity::Oplax,
    );
    for n in [2, 3] {
        out.push((
            format!("z{n}/id"),
            MonoidalMonadTuple::identity_monad(z_n(n), Laxity::Oplax),
        ));
    }
    out.push(("z2/flip".into(), z2_flip_tuple()));
    out
}

/// The oplax tuple on `(Z/2, ·, *)` with the flip monad and `φ = φ̄ = s`.
/// Its interchange cells are not identities, and the tensor of algebras
/// needs them.
pub fn z2_flip_tuple() -> MonoidalMonadTuple {
    let m = z2_flip_monad();
    let s = m.base().morphism("s").expect("generator");
    let ms = MonoidalStructure::from_monoid(m.base().clone()).expect("one object");
    MonoidalMonadTuple::new(ms, m, Laxity::Oplax, vec![s], s).expect("well-formed")
}

/// Tuples with a braiding compatible with the monad, for the braided lifts.
/// Every braiding here is symmetric.
pub fn symmetric_tuples() -> Vec<(String, MonoidalMonadTuple, Braiding)> {
    let mut out = Vec::new();
    for (name, t) in lax_tuples().into_iter().chain(oplax_tuples()) {
        let b = if t.base().is_thin() {
            Braiding::thin(t.monoidal().clone(), true)
        } else {
            let e = t.base().id(ObjId(0));
            Braiding::from_fn(t.monoidal().clone(), |_, _| e, true)
        }
        .expect("components in range");
        out.push((format!("{}/{name}", t.laxity()), t, b));
    }
    out
}

/// The 3-chain with the closure `(1, 1, 2)`, `max` with its symmetric
/// braiding, and the lax tuple `cl3` built from them.
pub fn chain3_workspace() -> Workspace {
    let ms = chain_max(3);
    let c = ms.base().clone();
    let m = thin_monad(&c, &[1, 1, 2]).expect("a closure");
    let t = MonoidalMonadTuple::thin(ms.clone(), m.clone(), Laxity::Lax).expect("same category");
    let b = Braiding::thin(ms.clone(), true).expect("thin");
    let mut ws = Workspace::new();
    ws.add_category("chain3", c).expect("fresh");
    ws.add_functor("S", m.endo().clone()).expect("fresh");
    ws.add_monad("cl", m).expect("fresh");
    ws.add_monoidal("max", ms, Some(b)).expect("fresh");
    ws.add_tuple("cl3", t).expect("fresh");
    ws
}

/// `Z/3` as a one-object monoidal category whose associator is the
/// generator `g`; the unitors are chosen so that the triangle still holds and
/// only the pentagon fails.
pub fn broken_pentagon() -> MonoidalStructure {
    let ms = z_n(3);
    let c = ms.base().clone();
    let m = |n: &str| c.morphism(n).expect("element of Z/3");
    let o = ObjId(0);
    ms.with_assoc(o, o, o, m("g"))
        .with_left_unitor(o, m("e"))
        .with_right_unitor(o, m("g2"))
}

pub fn broken_pentagon_workspace() -> Workspace {
    let ms = broken_pentagon();
    let mut ws = Workspace::new();
    ws.add_category("z3", ms.base().clone()).expect("fresh");
    ws.add_monoidal("z3-twisted", ms, None).expect("fresh");
    ws
}

/// One replaced field of a tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    Phi(ObjId, ObjId, MorId),
    PhiBar(MorId),
    Unit(ObjId, MorId),
    Mult(ObjId, MorId),
    EndoMor(MorId, MorId),
    Assoc(ObjId, ObjId, ObjId, MorId),
    LeftUnitor(ObjId, MorId),
    RightUnitor(ObjId, MorId),
    TensorMor(MorId, MorId, MorId),
    TensorUnit(ObjId),
}

impl Corruption {
    pub fn apply(self, t: &MonoidalMonadTuple) -> MonoidalMonadTuple {
        let (ms, m) = (t.monoidal(), t.monad());
        match self {
            Corruption::Phi(a, b, f) => t.with_phi(a, b, f),
            Corruption::PhiBar(f) => t.with_phi_bar(f),
            Corruption::Unit(a, f) => t.with_monad(m.with_unit(a, f)),
            Corruption::Mult(a, f) => t.with_monad(m.with_mult(a, f)),
            Corruption::EndoMor(f, g) => t.with_monad(m.with_endo_mor(f, g)),
            Corruption::Assoc(a, b, c, f) => t.with_monoidal(ms.with_assoc(a, b, c, f)),
            Corruption::LeftUnitor(a, f) => t.with_monoidal(ms.with_left_unitor(a, f)),
            Corruption::RightUnitor(a, f) => t.with_monoidal(ms.with_right_unitor(a, f)),
            Corruption::TensorMor(f, g, h) => t.with_monoidal(ms.with_tensor_mor(f, g, h)),
            Corruption::TensorUnit(a) => t.with_monoidal(ms.with_unit(a)),
        }
    }
}

/// Every single-field corruption of `t`: each cell of `φ`, `φ̄`, `η`, `μ`,
/// `α`, `λ`, `ρ`, each morphism image of `S` and of `⊗`, and the unit
/// object, replaced by every other value of its kind.
pub fn single_corruptions(t: &MonoidalMonadTuple) -> Vec<Corruption> {
    let c = t.base().clone();
    let (ms, m) = (t.monoidal(), t.monad());
    let others = |cur: MorId| c.morphisms().filter(move |&f| f != cur);
    let mut out = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            out.extend(others(t.phi(a, b)).map(|f| Corruption::Phi(a, b, f)));
        }
    }
    out.extend(others(t.phi_bar()).map(Corruption::PhiBar));
    for a in c.objects() {
        out.extend(others(m.unit().at(a)).map(|f| Corruption::Unit(a, f)));
        out.extend(others(m.mult().at(a)).map(|f| Corruption::Mult(a, f)));
    }
    for f in c.morphisms() {
        out.extend(others(m.endo().mor(f)).map(|g| Corruption::EndoMor(f, g)));
    }
    for a in c.objects() {
        for b in c.objects() {
            for cc in c.objects() {
                out.extend(others(ms.assoc(a, b, cc)).map(|f| Corruption::Assoc(a, b, cc, f)));
            }
        }
        out.extend(others(ms.left_unitor(a)).map(|f| Corruption::LeftUnitor(a, f)));
        out.extend(others(ms.right_unitor(a)).map(|f| Corruption::RightUnitor(a, f)));
    }
    for f in c.morphisms() {
        for g in c.morphisms() {
            out.extend(others(ms.tensor_mor(f, g)).map(|h| Corruption::TensorMor(f, g, h)));
        }
    }
    out.extend(
        c.objects()
            .filter(|&a| a != ms.unit())
            .map(Corruption::TensorUnit),
    );
    out
}

/// Every single-field corruption of `t`, followed, when there are fewer than
/// `at_least`, by corruptions of two, then three, … distinct fields in
/// lexicographic order of the singles until `at_least` is reached or the
/// combinations run out.
pub fn corruption_sweep(t: &MonoidalMonadTuple, at_least: usize) -> Vec<MonoidalMonadTuple> {
    let singles = single_corruptions(t);
    let mut out: Vec<_> = singles.iter().map(|k| k.apply(t)).collect();
    let mut picked = Vec::new();
    for size in 2..=singles.len() {
        if out.len() >= at_least {
            break;
        }
        combinations(&singles, size, 0, &mut picked, &mut |ks| {
            if out.len() >= at_least {
                return false;
            }
            out.push(ks.iter().fold(t.clone(), |acc, k| k.apply(&acc)));
            true
        });
    }
    out
}

/// Calls `visit` on each `size`-subset of pairwise different fields, in
/// lexicographic order, until it returns false.
fn combinations(
    singles: &[Corruption],
    size: usize,
    from: usize,
    picked: &mut Vec<Corruption>,
    visit: &mut dyn FnMut(&[Corruption]) -> bool,
) -> bool {
    if picked.len() == size {
        return visit(picked);
    }
    for i in from..singles.len() {
        if picked.iter().any(|&p| same_field(p, singles[i])) {
            continue;
        }
        picked.push(singles[i]);
        let go_on = combinations(singles, size, i + 1, picked, visit);
        picked.pop();
        if !go_on {
            return false;
        }
    }
    true
}

fn same_field(k: Corruption, l: Corruption) -> bool {
    use Corruption::*;
    match (k, l) {
        (Phi(a, b, _), Phi(c, d, _)) => (a, b) == (c, d),
        (PhiBar(_), PhiBar(_)) | (TensorUnit(_), TensorUnit(_)) => true,
        (Unit(a, _), Unit(b, _))
        | (Mult(a, _), Mult(b, _))
        | (LeftUnitor(a, _), LeftUnitor(b, _))
        | (RightUnitor(a, _), RightUnitor(b, _)) => a == b,
        (EndoMor(f, _), EndoMor(g, _)) => f == g,
        (Assoc(a, b, c, _), Assoc(d, e, f, _)) => (a, b, c) == (d, e, f),
        (TensorMor(f, g, _), TensorMor(h, i, _)) => (f, g) == (h, i),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broken_pentagon_fails_only_the_pentagon() {
        let r = broken_pentagon().check();
        assert!(!r.is_ok());
        assert!(r.violations().iter().all(|v| v.law == "pentagon"), "{r}");
    }

    #[test]
    fn closure_counts() {
        for n in 2..=5 {
            assert_eq!(
                closures_on_chain(&Arc::new(FinCat::chain(n))).len(),
                1 << (n - 1)
            );
        }
        // Moore families on the square containing 11: all subsets of
        // {00, 01, 10} except those holding 01 and 10 without 00
        assert_eq!(
            closures_on_boolean_square(&Arc::new(boolean_square())).len(),
            7
        );
    }

    #[test]
    fn monotone_map_count_is_a_binomial() {
        // monotone self-maps of an n-chain: C(2n-1, n)
        assert_eq!(monotone_maps(3).len(), 10);
        assert_eq!(monotone_maps(4).len(), 35);
    }

    #[test]
    fn corpora_are_nonempty_and_valid() {
        let lax = lax_tuples();
        let oplax = oplax_tuples();
        // max: 2 + 4 + 8; min: 4; join: 7; two cyclic; one product
        assert_eq!(lax.len(), 14 + 4 + 7 + 2 + 1);
        // max fixing 0: 1 + 2 + 4; meet: 7; two cyclic; flip
        assert_eq!(oplax.len(), 7 + 7 + 2 + 1);
    }

    #[test]
    fn sweep_reaches_the_floor() {
        let t = z2_flip_tuple();
        assert!(single_corruptions(&t).len() < 100);
        assert_eq!(corruption_sweep(&t, 100).len(), 100);
    }
}
