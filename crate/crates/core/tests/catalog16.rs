//! The bundled order-16 catalog holds fourteen pairwise non-isomorphic groups.

use std::collections::BTreeSet;

use cdlat_core::constructors::order16_groups;
use cdlat_core::{enumerate_subgroups, Analysis};

#[test]
fn fourteen_distinct_groups() {
    let groups = order16_groups().unwrap();
    assert_eq!(groups.len(), 14);
    let mut seen = BTreeSet::new();
    for g in &groups {
        assert_eq!(g.order(), 16);
        let a = Analysis::new(g).unwrap();
        let mut orders = g.element_orders();
        orders.sort_unstable();
        let z = a.sub(a.center);
        let z_cyclic = z.elements().iter().any(|&x| g.element_order(x).unwrap() == z.size());
        let fingerprint = (
            orders,
            z.size(),
            a.sub(a.derived).size(),
            a.nilpotence_class,
            a.lattice.len(),
            a.normal_subgroups().len(),
            z_cyclic,
        );
        assert!(seen.insert(fingerprint.clone()), "{} repeats {:?}", g.label(), fingerprint);
    }
    let abelian = groups.iter().filter(|g| g.is_abelian()).count();
    assert_eq!(abelian, 5);
}

#[test]
fn subgroup_counts_of_named_groups() {
    let groups = order16_groups().unwrap();
    let count = |label: &str| {
        let g = groups.iter().find(|g| g.label() == label).unwrap_or_else(|| panic!("{label}"));
        enumerate_subgroups(g).unwrap().len()
    };
    assert_eq!(count("C16"), 5);
    assert_eq!(count("D16"), 19);
    assert_eq!(count("Q16"), 11);
    assert_eq!(count("C2^4"), 67);
}
