use mcgkit::cell_surface::SurfaceSpec;
use mcgkit::curve_engine::is_boundary_parallel;
use mcgkit::fixtures::{curve_classes, pairs_with_intersection, subsurface_family, surface, FIXTURE_LENGTH};
use mcgkit::mcg_algebra::TwistWord;
use mcgkit::structure::*;
use proptest::prelude::*;

fn kernel_checks(s: (usize, usize, usize), limit: usize) -> usize {
    let mut checked = 0;
    for c in subsurface_family(&surface(s.0, s.1, s.2), 2, limit).unwrap() {
        let Ok(k) = kernel_structure(&c) else { continue };
        let GroupStructure::FreeAbelian { generators, .. } = k.canonical().clone() else {
            assert_eq!(k.canonical(), GroupStructure::Trivial);
            checked += 1;
            continue;
        };
        for g in &generators {
            assert!(c.boundary_word(g).unwrap().is_identity().unwrap(), "{g} on {:?}", c.sub);
        }
        checked += 1;
    }
    checked
}

#[test]
fn kernel_generators_act_trivially() {
    assert!(kernel_checks((0, 0, 5), 12) >= 6);
    assert!(kernel_checks((1, 0, 2), 12) >= 6);
}

#[test]
fn surviving_boundary_twists_act_nontrivially() {
    for c in subsurface_family(&surface(1, 0, 2), 2, 12).unwrap() {
        if !is_essential_subsurface(&c) || (c.sub.is_disk() && c.sub.puncture_count <= 1) {
            continue;
        }
        for b in non_kernel_boundary_twists(&c) {
            assert!(!c.boundary_word(&b).unwrap().is_identity().unwrap(), "{b} on {:?}", c.sub);
        }
    }
}

#[test]
fn half_twist_squares_to_the_boundary_twist() {
    // on the one-holed torus (A B A)^2 squares to the twist about the boundary
    let s = surface(1, 1, 0);
    let p = &pairs_with_intersection(&s, 1, 1).unwrap()[0];
    let c = curve_classes(&s, FIXTURE_LENGTH)
        .unwrap()
        .into_iter()
        .find(|c| is_boundary_parallel(c).unwrap())
        .expect("boundary-parallel curve");
    let letters =
        |v: &[(&str, i64)]| v.iter().map(|&(n, e)| (n.to_string(), if n == "A" { p.a.clone() } else { p.b.clone() }, e)).collect();
    let aba = TwistWord::with_all_letters(s.clone(), letters(&[("A", 1), ("B", 1), ("A", 1)])).unwrap();
    let rho = aba.pow(2);
    let twist = TwistWord::with_all_letters(s.clone(), vec![("C".into(), c, 1)]).unwrap();
    assert!(rho.pow(2).acts_like(&twist).unwrap());
    assert!(!rho.acts_like(&twist).unwrap());
    assert!(!rho.is_identity().unwrap());
}

fn group() -> impl Strategy<Value = GroupStructure> {
    let label = "[a-e][1-3]";
    let leaf = prop_oneof![
        Just(GroupStructure::Trivial),
        (1u64..5).prop_map(GroupStructure::FiniteCyclic),
        prop::collection::vec(label, 0..3).prop_map(GroupStructure::free_abelian),
        (0usize..3, 0usize..3, 0usize..3, any::<bool>())
            .prop_map(|(g, q, m, pure)| GroupStructure::Mcg { spec: SurfaceSpec::new(g, q, m), pure }),
        (0usize..4).prop_map(GroupStructure::Symmetric),
        (label, any::<bool>()).prop_map(|(l, two)| GroupStructure::cyclic_by(
            &l,
            if two { CyclicOrder::Two } else { CyclicOrder::Infinite }
        )),
        label.prop_map(|l| GroupStructure::named(&l)),
    ];
    leaf.prop_recursive(3, 16, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..4).prop_map(GroupStructure::Product),
            (inner.clone(), inner, "[xy]").prop_map(|(n, a, l)| GroupStructure::semidirect(n, a, &l)),
        ]
    })
}

/// A subsurface with `pieces` exterior components, each given as
/// `(genus, punctures, boundary curves, circles of M)`.
fn config() -> impl Strategy<Value = SubsurfaceConfig> {
    let piece = (0usize..2, 0usize..3, 1usize..3, 0usize..2);
    (0usize..2, 0usize..3, prop::collection::vec(piece, 1..4)).prop_map(|(gn, pn, pieces)| {
        let mut comps = Vec::new();
        let mut next = 0;
        for (g, p, k, m) in &pieces {
            let labels: Vec<String> = (0..*k).map(|i| boundary_label(next + i)).collect();
            next += k;
            let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            comps.push(ComplementComponent::new(*g, *p, &refs, *m));
        }
        let sub = SurfaceSpec::new(gn, next, pn);
        let chi = sub.euler_char() + comps.iter().map(|c| c.euler_char()).sum::<i64>();
        let q: usize = comps.iter().map(|c| c.boundary_to_m).sum();
        let m = pn + comps.iter().map(|c| c.punctures).sum::<usize>();
        let genus = ((2 - chi - q as i64) / 2) as usize;
        SubsurfaceConfig::symbolic(SurfaceSpec::new(genus, q, m), sub, comps).expect("consistent counts")
    })
}

proptest! {
    #[test]
    fn canonical_forms_are_stable(g in group()) {
        let c = g.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert!(g.equivalent(&c));
        prop_assert_eq!(GroupStructure::from_value(&g.to_value()).unwrap(), g.clone());
        let text = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<GroupStructure>(&text).unwrap(), g);
    }

    #[test]
    fn kernel_rank_is_bounded_and_vanishes_when_injective(c in config()) {
        if let Ok(k) = kernel_structure(&c) {
            let rank = k.canonical().free_rank().unwrap_or(0);
            prop_assert!(rank <= c.l());
            let exceptional = (c.sub.is_disk() && c.sub.puncture_count <= 1)
                || (c.sub.is_annulus() && c.sub.puncture_count == 0);
            if !exceptional {
                prop_assert_eq!(injectivity(&c).is_injective(), rank == 0);
                prop_assert_eq!(rank, c.pointed_disk_curves.len() + c.cylinder_pairs.len());
            }
        }
        if is_marked_injective(&c) {
            prop_assert!(injectivity(&c).is_injective());
        }
    }

    #[test]
    fn stabilizer_sequences_are_well_formed(c in config()) {
        prop_assume!(is_marked_injective(&c));
        let seq = stabilizer_sequence(&c).unwrap();
        prop_assert_eq!(seq.terms.len(), seq.maps.len() + 1);
        if !(c.sub.is_annulus() && c.sub.puncture_count == 0) {
            prop_assert_eq!(seq.kernel().free_rank(), Some(c.l()));
            prop_assert_eq!(seq.terms.last().unwrap(), &GroupStructure::Symmetric(c.l()));
            prop_assert!(!seq.right_exact);
        }
        let (com, nor) = commensurator_normalizer(&c).unwrap();
        if doubled_pantalon_type(&c).is_none() {
            prop_assert_eq!(&com, &GroupStructure::named(STAB));
            prop_assert_eq!(com, nor);
        }
    }

    #[test]
    fn centre_is_boundary_twists_in_general(g in 3usize..6, q in 0usize..4, m in 0usize..4) {
        let c = centre(SurfaceSpec::new(g, q, m));
        prop_assert_eq!(c.free_rank(), Some(q));
    }
}
