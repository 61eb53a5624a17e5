use cdlat_core::constructors::{MISC_PRESENTATIONS, ORDER16_PRESENTATIONS, SMALLGROUP_32_8};
use cdlat_core::presentation::{enumerate_with_images, parse_presentation_file, DEFAULT_MAX_COSETS};
use cdlat_core::{enumerate, parse_presentation, Error, Presentation};

fn bundled() -> Vec<(String, Presentation)> {
    let mut all = parse_presentation_file(ORDER16_PRESENTATIONS).unwrap();
    all.push(("SmallGroup(32,8)".into(), parse_presentation(SMALLGROUP_32_8).unwrap()));
    all
}

#[test]
fn bundled_presentations_satisfy_their_relators() {
    let all = bundled();
    assert_eq!(all.len(), 15);
    for (name, p) in &all {
        let (g, images) = enumerate_with_images(p, DEFAULT_MAX_COSETS).unwrap();
        assert!(p.is_satisfied_by(&g, &images), "{name}");
        let expected = if name.starts_with("SmallGroup") { 32 } else { 16 };
        assert_eq!(g.order(), expected, "{name}");
        // The images generate the whole group.
        assert_eq!(g.closure(images.iter().copied()).size(), g.order(), "{name}");
    }
}

#[test]
fn misc_presentations_satisfy_their_relators() {
    for (text, label) in MISC_PRESENTATIONS {
        let p = parse_presentation(text).unwrap();
        let (g, images) = enumerate_with_images(&p, DEFAULT_MAX_COSETS).unwrap();
        assert!(p.is_satisfied_by(&g, &images), "{label}");
        assert_eq!(g.closure(images.iter().copied()).size(), g.order(), "{label}");
    }
}

#[test]
fn cyclic_orders_up_to_64() {
    for n in 1..=64 {
        let p = parse_presentation(&format!("gens a; rels a^{n};")).unwrap();
        let g = enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(g.order(), n);
        assert!(g.is_cyclic());
    }
}

#[test]
fn relator_order_and_rotation_do_not_matter() {
    for (name, p) in bundled() {
        let base = enumerate(&p, DEFAULT_MAX_COSETS).unwrap().order();
        let mut rels: Vec<_> = p.relators().to_vec();
        rels.reverse();
        for r in rels.iter_mut() {
            let half = r.len() / 2;
            r.rotate_left(half);
        }
        let q = p.with_relators(rels).unwrap();
        assert_eq!(enumerate(&q, DEFAULT_MAX_COSETS).unwrap().order(), base, "{name}");
    }
}

#[test]
fn infinite_presentation_hits_coset_limit() {
    let p = parse_presentation("gens a, b; rels a^2;").unwrap();
    assert!(matches!(enumerate(&p, 500), Err(Error::CosetLimit { limit: 500 })));
}

#[test]
fn display_round_trips() {
    for (name, p) in bundled() {
        let again = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(again, p, "{name}");
    }
}
