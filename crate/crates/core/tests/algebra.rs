use mcgkit::cell_surface::{make_surface, pants_curves_on, Surface, SurfaceSpec};
use mcgkit::curve_engine::{curves_of_length, intersection_number, is_generic, Crossing, Curve, MultiCurve};
use mcgkit::mcg_algebra::{
    braid_relation_check, commutation_check, free_group_check, multitwist_injectivity, CurveRegistry,
    InjectivityVerdict, TwistWord,
};
use std::sync::Arc;

fn torus() -> (Surface, Curve, Curve) {
    let t: Surface = Arc::new(make_surface(SurfaceSpec::new(1, 0, 0)));
    let m = Curve::new(t.clone(), vec![Crossing { edge: 0, pos: 0, dir: 1 }]).unwrap();
    let l = Curve::new(t.clone(), vec![Crossing { edge: 1, pos: 0, dir: 1 }]).unwrap();
    (t, m, l)
}

fn word(c: &Curve, n: i64) -> TwistWord {
    TwistWord::with_all_letters(c.host().clone(), vec![("A".into(), c.clone(), n)]).unwrap()
}

#[test]
fn torus_twists() {
    let (t, m, l) = torus();
    assert_eq!(intersection_number(&m, &l).unwrap(), 1);
    let mut reg = CurveRegistry::new(t.clone());
    reg.insert("A", m.clone()).unwrap();
    reg.insert("B", l.clone()).unwrap();
    let w = TwistWord::parse(&reg, "A^2").unwrap().word;
    assert_eq!(intersection_number(&w.act(&l).unwrap(), &l).unwrap(), 2);
    assert!(TwistWord::parse(&reg, "").unwrap().word.is_identity().unwrap());
    for n in 1..=5 {
        assert!(!word(&m, n).is_identity().unwrap());
    }
    assert_eq!(commutation_check(&m, &l, 1, 1).unwrap(), (1, false));
    assert!(braid_relation_check(&m, &l).unwrap());
    assert!(braid_relation_check(&m, &m).is_err());
    // A B A^-1 is the twist along A(b)
    let conj = TwistWord::parse(&reg, "A B A^-1").unwrap().word;
    let ab = TwistWord::parse(&reg, "A").unwrap().word.act(&l).unwrap();
    assert!(conj.acts_like(&word(&ab, 1)).unwrap());
}

#[test]
fn genus_two_multitwists() {
    let s: Surface = Arc::new(make_surface(SurfaceSpec::new(2, 0, 0)));
    let p = pants_curves_on(&s).unwrap();
    let sys = MultiCurve::new(p.clone()).unwrap();
    for e in [[0, 0, 0], [1, 0, 0], [0, -2, 0], [1, -2, 2]] {
        let v = multitwist_injectivity(&sys, &e).unwrap();
        match v {
            InjectivityVerdict::Identity => assert_eq!(e, [0, 0, 0]),
            InjectivityVerdict::Witness { crossings, expected, .. } => {
                assert!(crossings > 0);
                assert_eq!(crossings, expected);
            }
        }
    }
    let (c, ok) = commutation_check(&p[0], &p[1], 2, -1).unwrap();
    assert_eq!((c, ok), (0, true));
}

#[test]
fn four_punctured_sphere_is_free() {
    let s: Surface = Arc::new(make_surface(SurfaceSpec::new(0, 0, 4)));
    let cands: Vec<Curve> =
        (1..=4).flat_map(|l| curves_of_length(&s, l)).filter(|c| is_generic(c).unwrap()).collect();
    let mut pair = None;
    'o: for (i, a) in cands.iter().enumerate() {
        for b in &cands[..i] {
            if intersection_number(a, b).unwrap() == 2 {
                pair = Some((a.clone(), b.clone()));
                break 'o;
            }
        }
    }
    let (a, b) = pair.unwrap();
    assert_eq!(commutation_check(&a, &b, 1, 1).unwrap(), (2, false));
    assert_eq!(free_group_check(&a, &b, 6).unwrap(), None);
}
