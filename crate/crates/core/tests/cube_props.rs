use cubepar_core::cube::{compose, criterion_morphisms, is_in_box_p, normal_form, BoxMorphism, Entry};
use proptest::prelude::*;

/// A morphism `l1 -> l2` of the strict-increase shape.
fn box_morphism(max: usize) -> impl Strategy<Value = BoxMorphism> {
    (0..=max, 0..=max).prop_flat_map(|(l1, l2)| {
        let all = criterion_morphisms(l1, l2);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn entry_strategy(target: usize) -> impl Strategy<Value = Entry> {
    prop_oneof![
        Just(Entry::Bot),
        Just(Entry::Top),
        (0..target.max(1)).prop_map(Entry::Index),
    ]
}

proptest! {
    #[test]
    fn normal_forms_compose_back(m in box_morphism(4)) {
        let w = normal_form(&m).unwrap();
        prop_assert!(w.is_canonical());
        prop_assert_eq!(w.compose().unwrap(), m);
    }

    #[test]
    fn composition_is_associative(
        (f, g, h) in (0..=3usize, 0..=3usize, 0..=3usize, 0..=3usize).prop_flat_map(|(a, b, c, d)| {
            let f = criterion_morphisms(a, b);
            let g = criterion_morphisms(b, c);
            let h = criterion_morphisms(c, d);
            (0..f.len(), 0..g.len(), 0..h.len())
                .prop_map(move |(i, j, k)| (f[i].clone(), g[j].clone(), h[k].clone()))
        })
    ) {
        let left = compose(&h, &compose(&g, &f).unwrap()).unwrap();
        let right = compose(&compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn membership_matches_strict_increase(
        target in 0..=3usize,
        entries in proptest::collection::vec(entry_strategy(3), 0..=3),
    ) {
        let entries: Vec<Entry> = entries
            .into_iter()
            .map(|e| match e {
                Entry::Index(i) if i >= target => Entry::Bot,
                e => e,
            })
            .collect();
        let m = BoxMorphism::new(target, entries).unwrap();
        let listed = criterion_morphisms(m.source(), target).contains(&m);
        prop_assert_eq!(is_in_box_p(&m, 3), listed);
    }
}

#[test]
fn identities_are_their_own_normal_form() {
    for l in 0..=4 {
        assert!(normal_form(&BoxMorphism::identity(l)).unwrap().is_empty());
    }
}
