//! Property tests for the structural invariants of each layer, each checked
//! against an independent oracle or a second construction.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use catkit::corpus::{lax_tuples, monad_corpus, thin_monad};
use catkit::fincat::{
    compose_functors, find_isomorphism, opposite_category, product_category, Functor,
};
use catkit::lift::lift_kleisli;
use catkit::monad::{compose_oplax, product_monad, Monad, MonadMorphism, OplaxMonadMorphism};
use catkit::monmonad::{check_interchange_equivalence, MonoidalMonadTuple};
use catkit::monoidal::MonoidalStructure;
use catkit::resolutions::kleisli;
use catkit::{FinCat, MorId, ObjId};

/// Reflexive-transitive closure of a relation on `n` points.
fn preorder_closure(n: usize, rel: &[bool]) -> Vec<bool> {
    let mut r = rel.to_vec();
    for i in 0..n {
        r[i * n + i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i * n + k] && r[k * n + j] {
                    r[i * n + j] = true;
                }
            }
        }
    }
    r
}

fn preorder(n: usize, rel: &[bool]) -> Arc<FinCat> {
    let r = preorder_closure(n, rel);
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    Arc::new(FinCat::preorder(&names, |i, j| r[i * n + j]).unwrap())
}

fn lax() -> &'static [(String, MonoidalMonadTuple)] {
    static TUPLES: OnceLock<Vec<(String, MonoidalMonadTuple)>> = OnceLock::new();
    TUPLES.get_or_init(lax_tuples)
}

fn small_preorder() -> impl Strategy<Value = Arc<FinCat>> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |rel| preorder(n, &rel))
    })
}

/// A monotone self-map of the `n`-chain from sorted random images.
fn monotone_map(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, n).prop_map(|mut v| {
        v.sort();
        v
    })
}

fn chain_functor(c: &Arc<FinCat>, map: &[usize]) -> Functor {
    Functor::from_fn(
        c.clone(),
        c.clone(),
        |a| ObjId(map[a.0]),
        |f| c.hom(ObjId(map[c.dom(f).0]), ObjId(map[c.cod(f).0]))[0],
    )
    .unwrap()
}

fn corpus_monad() -> impl Strategy<Value = Monad> {
    let corpus = monad_corpus();
    (0..corpus.len()).prop_map(move |i| corpus[i].1.clone())
}

/// A corpus monad with, when `corrupt` is set, one unit component replaced.
fn maybe_corrupted(m: &Monad, corrupt: bool, at: usize, with: usize) -> Monad {
    if !corrupt {
        return m.clone();
    }
    let c = m.base();
    let a = ObjId(at % c.object_count());
    let f = MorId(with % c.morphism_count());
    m.with_unit(a, f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn preorders_are_categories(c in small_preorder()) {
        prop_assert!(c.check().is_ok());
    }

    #[test]
    fn product_is_symmetric_up_to_iso(c in small_preorder(), d in small_preorder()) {
        let cd = product_category(&c, &d).category;
        let dc = product_category(&d, &c).category;
        let iso = find_isomorphism(&cd, &dc, 9).unwrap();
        prop_assert!(iso.is_some_and(|i| i.is_inverse_pair()));
    }

    #[test]
    fn product_commutes_with_opposite(c in small_preorder(), d in small_preorder()) {
        let op_of_product = Arc::new(opposite_category(&product_category(&c, &d).category));
        let (co, dop) = (Arc::new(opposite_category(&c)), Arc::new(opposite_category(&d)));
        let product_of_ops = product_category(&co, &dop).category;
        prop_assert!(find_isomorphism(&op_of_product, &product_of_ops, 9).unwrap().is_some());
    }

    #[test]
    fn functor_composition_is_associative(
        f in monotone_map(4), g in monotone_map(4), h in monotone_map(4),
    ) {
        let c = Arc::new(FinCat::chain(4));
        let (f, g, h) = (chain_functor(&c, &f), chain_functor(&c, &g), chain_functor(&c, &h));
        let left = compose_functors(&compose_functors(&h, &g).unwrap(), &f).unwrap();
        let right = compose_functors(&h, &compose_functors(&g, &f).unwrap()).unwrap();
        prop_assert!(left == right);
        prop_assert!(left.check().is_ok());
    }

    #[test]
    fn corrupted_components_are_detected(m in corpus_monad(), at in 0usize..16, with in 0usize..64) {
        let c = m.base();
        let a = ObjId(at % c.object_count());
        let f = MorId(with % c.morphism_count());
        prop_assume!(f != m.unit().at(a));
        // on a thin category every other component has the wrong type; on a
        // one-object group only non-natural replacements are required to fail
        let cell = m.unit().with_component(a, f);
        if c.is_thin() {
            prop_assert!(!cell.check().is_ok());
        }
        prop_assert!(!m.with_unit(a, f).check().is_ok() || !c.is_thin());
    }

    #[test]
    fn multiplication_is_an_oplax_morphism_to_the_identity(m in corpus_monad()) {
        let id = Monad::identity(m.base().clone());
        let f = OplaxMonadMorphism::from_components(
            m.clone(), id.clone(), m.endo().clone(), m.mult().components().to_vec(),
        ).unwrap();
        prop_assert!(f.check().is_ok());
        let g = compose_oplax(&OplaxMonadMorphism::identity(&id), &f).unwrap();
        prop_assert!(g.check().is_ok());
        prop_assert_eq!(g.carrier(), f.carrier());
    }

    #[test]
    fn product_monad_is_valid_iff_both_factors_are(
        m1 in corpus_monad(), m2 in corpus_monad(),
        c1 in any::<bool>(), c2 in any::<bool>(),
        at in 0usize..16, with in 0usize..64,
    ) {
        prop_assume!(m1.base().object_count() * m2.base().object_count() <= 16);
        let (m1, m2) = (maybe_corrupted(&m1, c1, at, with), maybe_corrupted(&m2, c2, at, with));
        let both = m1.check().is_ok() && m2.check().is_ok();
        prop_assert_eq!(product_monad(&m1, &m2).monad.check().is_ok(), both);
    }

    #[test]
    fn monads_dualize_to_comonads(m in corpus_monad(), corrupt in any::<bool>(), at in 0usize..16, with in 0usize..64) {
        let m = maybe_corrupted(&m, corrupt, at, with);
        prop_assert_eq!(m.check().is_ok(), m.opposite().unwrap().check().is_ok());
    }

    #[test]
    fn kleisli_unit_is_the_monad_unit(m in corpus_monad()) {
        let k = kleisli(&m).unwrap();
        prop_assert_eq!(k.unit.components(), m.unit().components());
        prop_assert_eq!(k.kleisli_cat.object_count(), m.base().object_count());
    }

    #[test]
    fn thin_monoidal_check_matches_the_algebra(
        n in 1usize..=3, table in prop::collection::vec(0usize..3, 9), unit in 0usize..3,
    ) {
        let c = Arc::new(FinCat::chain(n));
        let op = |a: usize, b: usize| table[a * 3 + b] % n;
        let unit = unit % n;
        let ms = MonoidalStructure::from_thin_op(c, |a, b| ObjId(op(a.0, b.0)), ObjId(unit));
        prop_assume!(ms.is_ok());
        let associative = (0..n).all(|a| (0..n).all(|b| (0..n).all(|d| op(a, op(b, d)) == op(op(a, b), d))));
        let unital = (0..n).all(|a| op(unit, a) == a && op(a, unit) == a);
        prop_assert_eq!(ms.unwrap().check().is_ok(), associative && unital);
    }

    #[test]
    fn valid_tuples_forget_to_valid_parts(i in 0usize..28) {
        let t = &lax()[i % lax().len()].1;
        prop_assert!(t.monad().check().is_ok());
        prop_assert!(t.monoidal().check().is_ok());
    }
}

fn small_lax_tuples() -> Vec<MonoidalMonadTuple> {
    lax()
        .iter()
        .map(|(_, t)| t.clone())
        .filter(|t| t.base().object_count() <= 3)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn products_of_lax_tuples_are_lax_tuples(i in 0usize..64, j in 0usize..64) {
        let ts = small_lax_tuples();
        let (t1, t2) = (&ts[i % ts.len()], &ts[j % ts.len()]);
        let (p, _) = MonoidalMonadTuple::product(t1, t2).unwrap();
        prop_assert!(check_interchange_equivalence(&p).both_valid());
    }

    #[test]
    fn lifted_tensor_is_phi_after_the_base_tensor(i in 0usize..64) {
        let t = &lax()[i % lax().len()].1;
        let l = lift_kleisli(t).unwrap();
        let (c, kc, res) = (t.base(), l.lifted.base(), &l.resolution);
        let cod = |k: MorId| c.object(kc.ob_name(kc.cod(k))).unwrap();
        for k1 in kc.morphisms() {
            for k2 in kc.morphisms() {
                let lifted = res.rep(l.lifted.tensor_mor(k1, k2));
                let base = t.monoidal().tensor_mor(res.rep(k1), res.rep(k2));
                prop_assert_eq!(Some(lifted), c.compose(t.phi(cod(k1), cod(k2)), base));
            }
        }
    }
}

#[test]
fn functors_from_the_terminal_category_pick_objects() {
    let chain = Arc::new(FinCat::chain(3));
    let one = Arc::new(catkit::fincat::terminal_category());
    // a functor 1 → C is a choice of object with its identity; enumerate all
    // assignments of the single object and morphism and keep the valid ones
    let mut count = 0;
    for a in chain.objects() {
        for f in chain.morphisms() {
            if let Ok(func) = Functor::new(one.clone(), chain.clone(), vec![a], vec![f]) {
                if func.check().is_ok() {
                    count += 1;
                }
            }
        }
    }
    assert_eq!(count, 3);
}

#[test]
fn thin_monad_rejects_non_closures() {
    let c = Arc::new(FinCat::chain(3));
    let r = thin_monad(&c, &[1, 2, 2]).unwrap_err();
    assert!(r.violations().iter().any(|v| v.at == "0"), "{r}");
}
